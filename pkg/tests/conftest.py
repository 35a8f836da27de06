import pytest

from hwmt.census import fixture_path, load_polytopes
from hwmt.polytope import LatticePolytope


@pytest.fixture(scope="session")
def records3d():
    return {r.id: r for r in load_polytopes(fixture_path("tables3d.txt"))}


@pytest.fixture(scope="session")
def records2d():
    return {r.id: r for r in load_polytopes(fixture_path("polygons2d.txt"))}


@pytest.fixture
def p113_simplex():
    # weighted projective P(1,1,1,3) model simplex, printed vertex order
    return LatticePolytope(3, ((1, 0, 0), (0, 1, 0), (0, 0, 1), (-3, -1, -1)))


@pytest.fixture
def p3_simplex():
    return LatticePolytope(3, ((1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)))


@pytest.fixture
def cross_polytope():
    return LatticePolytope(2, ((1, 0), (0, 1), (-1, 0), (0, -1)))


@pytest.fixture
def unit_square():
    return LatticePolytope(2, ((1, 1), (1, -1), (-1, -1), (-1, 1)))
