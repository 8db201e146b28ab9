import numpy as np
import pytest
from hypothesis import strategies as st

coord = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)


@st.composite
def complex_vectors(draw, n=None, min_n=2, max_n=6, nonzero=True):
    """Vectors of C^{n+1} with bounded coordinates (n drawn if not given)."""
    if n is None:
        n = draw(st.integers(min_n, max_n))
    re = draw(st.lists(coord, min_size=n + 1, max_size=n + 1))
    im = draw(st.lists(coord, min_size=n + 1, max_size=n + 1))
    z = np.array(re) + 1j * np.array(im)
    if nonzero and np.linalg.norm(z) < 1e-3:
        z[-1] += 1.0
    return z


@st.composite
def scalars(draw):
    """Nonzero complex scalars with modulus in [1e-3, 1e3]."""
    mod = 10.0 ** draw(st.floats(-3, 3))
    phase = draw(st.floats(0, 2 * np.pi))
    return complex(mod * np.exp(1j * phase))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def gauss(rng, n, size=None):
    shape = (n + 1,) if size is None else (size, n + 1)
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
