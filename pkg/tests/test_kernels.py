import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twoonemaps import _kernels
from twoonemaps._kernels import _pykernels
from twoonemaps.belyi import solve_canonical
from twoonemaps.maps import enumerate_21maps, enumerate_plane_trees
from twoonemaps.passport import Passport
from twoonemaps.render import _kernel_args, default_viewport

BACKENDS = _kernels.backends()
compiled = pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled backend unavailable")


def test_python_backend_always_present():
    assert BACKENDS[0] is _pykernels
    assert _kernels.BACKEND in {"python", "cython"}


@pytest.mark.parametrize("kern", BACKENDS, ids=lambda k: k.BACKEND)
def test_disconnected_rejected(kern):
    with pytest.raises(ValueError):
        kern.canonical_code([0, 1, 2, 3], [0, 1, 0, 1])


@compiled
def test_codes_agree():
    py, cy = BACKENDS
    maps = enumerate_21maps(6) + [t for t, _ in enumerate_plane_trees(6)]
    for m in maps:
        assert py.canonical_code(m.sigma, m.color) == cy.canonical_code(m.sigma, m.color)
        for root in range(m.dart_count):
            assert py.rooted_code(m.sigma, m.color, root) == cy.rooted_code(m.sigma, m.color, root)


@compiled
@settings(max_examples=20)
@given(st.integers(0, 3), st.floats(0.01, 0.2), st.integers(1, 300), st.booleans(), st.booleans())
def test_escape_steps_bit_identical(i, r0, max_iter, use0, use1):
    m = solve_canonical(Passport.parse("a1^2 a4 b1 b2 b3"), starts=500)[i]
    v = default_viewport(m, 60, 40)
    re, im = v.grid()
    args = _kernel_args(m)
    py, cy = BACKENDS
    a = py.escape_steps(*args, re, im, r0, 1e3, max_iter, use0, use1)
    b = cy.escape_steps(*args, re, im, r0, 1e3, max_iter, use0, use1)
    assert np.array_equal(a, b)
