import pytest
from hypothesis import strategies as st

from casimir_toy import CouplingSpec, ModelParams, validate


def make_model(g0=0.5, family="exponential", k=1.0, m=1.0, M=1000.0, hbar=1.0,
               lam=1.0, exponent=2, y_min=0.0, y_max=10.0):
    return validate(ModelParams(
        m=m, M=M, k=k, hbar=hbar,
        coupling=CouplingSpec(family=family, g0=g0, lam=lam, exponent=exponent,
                              y_min=y_min, y_max=y_max),
    ))


@pytest.fixture
def reference_model():
    """k = m = hbar = 1, exponential g0 = 0.5, lambda = 1, domain [0, 10]."""
    return make_model()


@pytest.fixture
def constant_model():
    return make_model(family="constant", g0=0.3)


def valid_model_strategy():
    """Random valid models: g0 strictly below k, all three families."""
    positive = st.floats(min_value=0.1, max_value=10.0, allow_nan=False)
    return st.builds(
        lambda m, k, hbar, frac, family, lam: make_model(
            g0=frac * k, family=family, k=k, m=m, hbar=hbar, lam=lam
        ),
        m=positive,
        k=positive,
        hbar=positive,
        frac=st.floats(min_value=0.0, max_value=0.95),
        family=st.sampled_from(["constant", "exponential", "inverse-power"]),
        lam=st.floats(min_value=0.5, max_value=2.0),
    )
