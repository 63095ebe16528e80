import pytest

from monoidgeom.affine import AffineMonoid
from monoidgeom.lattice import AbelianGroup

Z1 = AbelianGroup(1, ())
Z2 = AbelianGroup(2, ())
Z3 = AbelianGroup(3, ())
ZT2 = AbelianGroup(1, (2,))


def monoid(amb, *gens):
    out = []
    for g in gens:
        out.append(amb.element(g[: amb.free_rank], g[amb.free_rank:]))
    return AffineMonoid.from_generators(amb, out)


@pytest.fixture
def nn():
    return monoid(Z1, (1,))


@pytest.fixture
def nn2():
    return monoid(Z2, (1, 0), (0, 1))


@pytest.fixture
def nn3():
    return monoid(Z3, (1, 0, 0), (0, 1, 0), (0, 0, 1))


@pytest.fixture
def n23():
    """The numerical semigroup <2,3> = {0} with every n >= 2."""
    return monoid(Z1, (2,), (3,))


@pytest.fixture
def a1():
    """The A_1 cone monoid <(1,0),(1,1),(1,2)>."""
    return monoid(Z2, (1, 0), (1, 1), (1, 2))


@pytest.fixture
def n12():
    """<(1,0),(1,2)>: its group is the index-two sublattice {b even}."""
    return monoid(Z2, (1, 0), (1, 2))


@pytest.fixture
def p2():
    """The Z + Z/2 submonoid generated by (1,0) and (1,1): sharp, fine,
    group has torsion; R[P2] has zero divisors."""
    return monoid(ZT2, (1, 0), (1, 1))


@pytest.fixture
def znn():
    """Z + N embedded in Z^2."""
    return monoid(Z2, (1, 0), (-1, 0), (0, 1))


@pytest.fixture
def zz():
    """Z as a dull monoid."""
    return monoid(Z1, (1,), (-1,))


@pytest.fixture
def toric_fixtures(nn, nn2, nn3, a1, n12):
    return [nn, nn2, nn3, a1, n12]


@pytest.fixture
def all_fixtures(nn, nn2, nn3, a1, n12, n23, p2, znn, zz):
    return [nn, nn2, nn3, a1, n12, n23, p2, znn, zz]
