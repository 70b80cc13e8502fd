import hypothesis.strategies as st
import pytest

from raagcov.catalog import get, standard_catalog
from raagcov.linalg import GF, QQ

FIELDS = [QQ, GF(2), GF(3)]


@pytest.fixture(scope="session")
def catalog_complexes():
    return standard_catalog()


@pytest.fixture(scope="session")
def fourcycle():
    return get("fourcycle")


@pytest.fixture(scope="session")
def path3():
    return get("path3")


@pytest.fixture(scope="session")
def two_points():
    return get("two-points")


@pytest.fixture(scope="session")
def rp2():
    return get("rp2-six-vertex")


@st.composite
def small_complexes(draw, max_n=5):
    """Random complexes via random facet lists."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    facets = draw(st.lists(
        st.sets(st.integers(min_value=1, max_value=n), min_size=1, max_size=n),
        min_size=0, max_size=5))
    from raagcov.complexes import build_complex

    return build_complex(n, facets)


@st.composite
def int_matrices(draw, max_dim=5, bound=5):
    rows = draw(st.integers(min_value=1, max_value=max_dim))
    cols = draw(st.integers(min_value=1, max_value=max_dim))
    data = draw(st.lists(
        st.lists(st.integers(min_value=-bound, max_value=bound),
                 min_size=cols, max_size=cols),
        min_size=rows, max_size=rows))
    return data
