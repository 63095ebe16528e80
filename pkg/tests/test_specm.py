import random

import pytest

from monoidgeom.affine import same_submonoid
from monoidgeom.errors import ImproperIdeal, NotAcceptable
from monoidgeom.specm import (
    IdealizedMonoid,
    MonoidIdeal,
    PrimeIdeal,
    dimension,
    face_lattice_dot,
    faces,
    full_face,
    height,
    ideal_intersection,
    ideal_intersection_contains,
    ideal_product,
    ideal_union,
    is_primary,
    is_radical_ideal,
    localize,
    minimal_ideal_generators,
    radical_contains,
    radical_generators,
    spec,
    spec_dot,
    spec_idealized,
    unit_face,
    zariski_closed_set,
)
from monoidgeom.tristate import TriState

from conftest import Z1, Z2


class TestFaces:
    def test_orthant(self, nn2):
        fs = faces(nn2)
        assert [sorted(f.gen_mask) for f in fs] == [[], [0], [1], [0, 1]]

    def test_n(self, nn):
        assert len(faces(nn)) == 2

    def test_a1_four_faces(self, a1):
        fs = faces(a1)
        assert [sorted(f.gen_mask) for f in fs] == [[], [0], [2], [0, 1, 2]]

    def test_group_single_face(self, zz):
        assert len(faces(zz)) == 1

    def test_n23_two_faces(self, n23):
        assert len(faces(n23)) == 2

    def test_units_in_every_face(self, znn):
        unit_idx = set(znn._unit_indices)
        assert unit_idx  # the fixture has units
        for f in faces(znn):
            assert unit_idx <= set(f.gen_mask)

    def test_face_witness_functional(self, a1):
        for f in faces(a1):
            for i, g in enumerate(a1.gens):
                val = a1.pair_dual(f.functional, g)
                assert (val == 0) == (i in f.gen_mask)
                assert val >= 0

    def test_face_submonoid_property(self, a1):
        # p + q in F forces p, q in F: check on generator sums
        for f in faces(a1):
            sub = f.submonoid()
            for i, g in enumerate(a1.gens):
                for j, h in enumerate(a1.gens):
                    if sub.contains(g + h):
                        assert sub.contains(g) and sub.contains(h)


class TestSpec:
    def test_orthant_poset(self, nn2):
        s = spec(nn2)
        assert len(s.primes) == 4
        assert sorted(s.heights()) == [0, 1, 1, 2]
        assert s.dimension() == 2
        assert s.primes[s.generic_index].is_empty()
        assert s.primes[s.closed_index].is_maximal_ideal()

    def test_spec_sizes(self, nn3, zz, n23, a1):
        assert len(spec(nn3).primes) == 8 and dimension(nn3) == 3
        assert len(spec(zz).primes) == 1 and dimension(zz) == 0
        assert len(spec(n23).primes) == 2 and dimension(n23) == 1
        assert dimension(a1) == 2

    def test_dimension_equals_rank(self, all_fixtures):
        for m in all_fixtures:
            assert dimension(m) == m.rank_sharp()

    def test_maximal_chains(self, nn3, a1):
        for m, d in ((nn3, 3), (a1, 2)):
            chains = spec(m).maximal_chains()
            assert chains
            assert all(len(c) == d + 1 for c in chains)

    def test_height_equals_localized_dimension(self, a1, nn2):
        for m in (a1, nn2):
            for p in spec(m).primes:
                loc, _ = localize(m, p.face)
                assert height(p) == dimension(loc)

    def test_localize_examples(self, nn2, znn):
        loc_full, _ = localize(nn2, full_face(nn2))
        assert loc_full.is_dull()
        loc_unit, _ = localize(nn2, unit_face(nn2))
        assert same_submonoid(loc_unit, nn2)
        # at the face of generator (1,0) (index 1 in sorted order): Z x N
        loc_x, lam = localize(nn2, faces(nn2)[2])
        assert same_submonoid(loc_x, znn)
        # lambda^{-1}(units) is the face
        units = loc_x.units
        for i, g in enumerate(nn2.gens):
            assert units.contains(g) == (i in faces(nn2)[2].gen_mask)

    def test_localize_spec_is_subposet(self, a1):
        # spec(M_F) matches the primes of M whose complement face contains F
        for f in faces(a1):
            loc, _ = localize(a1, f)
            want = sum(1 for q in spec(a1).primes if f.gen_mask <= q.face.gen_mask)
            assert len(spec(loc).primes) == want


class TestIdeals:
    def test_membership(self, nn, nn2):
        i = MonoidIdeal.generated(nn, [Z1.element((1,))])
        assert i.contains(Z1.element((5,)))
        assert not i.contains(Z1.element((0,)))
        empty = MonoidIdeal.generated(nn2, [])
        assert not empty.contains(Z2.element((1, 1)))

    def test_product_and_union(self, nn2):
        i = MonoidIdeal.generated(nn2, [Z2.element((1, 0))])
        j = MonoidIdeal.generated(nn2, [Z2.element((0, 1))])
        assert [tuple(g.free) for g in ideal_product(i, j).gens] == [(1, 1)]
        assert len(ideal_union(i, j).gens) == 2

    def test_minimal_generators(self, nn, nn2, n23):
        i = MonoidIdeal.generated(nn, [Z1.element((k,)) for k in (1, 2, 3)])
        assert [g.free[0] for g in minimal_ideal_generators(i)] == [1]
        i2 = MonoidIdeal.generated(nn2, [Z2.element(v) for v in ((2, 0), (1, 1), (3, 1))])
        assert [tuple(g.free) for g in minimal_ideal_generators(i2)] == [(1, 1), (2, 0)]
        i3 = MonoidIdeal.generated(n23, [Z1.element((2,)), Z1.element((3,))])
        assert [g.free[0] for g in minimal_ideal_generators(i3)] == [2, 3]
        assert minimal_ideal_generators(MonoidIdeal.generated(nn, [])) == []

    def test_intersection(self, nn2):
        i = MonoidIdeal.generated(nn2, [Z2.element((1, 0))])
        j = MonoidIdeal.generated(nn2, [Z2.element((0, 1))])
        inter = ideal_intersection(i, j)
        assert [tuple(g.free) for g in inter.gens] == [(1, 1)]
        assert ideal_intersection_contains(i, j, Z2.element((2, 3)))
        assert not ideal_intersection_contains(i, j, Z2.element((2, 0)))


class TestRadical:
    def test_examples(self, nn, nn2):
        k2 = MonoidIdeal.generated(nn, [Z1.element((2,))])
        assert radical_contains(k2, Z1.element((1,)))
        k10 = MonoidIdeal.generated(nn2, [Z2.element((1, 0))])
        assert not radical_contains(k10, Z2.element((0, 1)))
        empty = MonoidIdeal.generated(nn2, [])
        assert not radical_contains(empty, Z2.element((1, 0)))

    def test_radical_oracle_power_membership(self, nn2, a1):
        # q in sqrt(K) iff n q in K for some n (bounded oracle)
        rng = random.Random(6)
        for m in (nn2, a1):
            gens = list(m.gens)
            for _ in range(30):
                kg = [m.ambient.zero()]
                for g in gens:
                    kg[0] = kg[0] + g.scale(rng.randint(0, 2))
                if kg[0].is_zero():
                    continue
                k = MonoidIdeal.generated(m, kg)
                q = m.ambient.zero()
                for g in gens:
                    q = q + g.scale(rng.randint(0, 2))
                want = any(k.contains(q.scale(n)) for n in range(1, 12))
                assert radical_contains(k, q) == want

    def test_radical_generators(self, nn, nn2):
        k2 = MonoidIdeal.generated(nn, [Z1.element((2,))])
        assert [g.free[0] for g in radical_generators(k2)] == [1]
        kd = MonoidIdeal.generated(nn2, [Z2.element((1, 1))])
        assert [tuple(g.free) for g in radical_generators(kd)] == [(1, 1)]
        k22 = MonoidIdeal.generated(nn2, [Z2.element((2, 0)), Z2.element((0, 2))])
        assert [tuple(g.free) for g in radical_generators(k22)] == [(0, 1), (1, 0)]
        assert is_radical_ideal(MonoidIdeal.generated(nn2, [Z2.element((1, 0))]))
        assert not is_radical_ideal(k2)
        assert is_radical_ideal(MonoidIdeal.generated(nn2, []))


class TestPrimary:
    def test_maximal_ideal(self, nn2):
        mplus = MonoidIdeal.generated(nn2, list(nn2.gens))
        assert is_primary(mplus).status is TriState.TRUE

    def test_axis_ideal(self, nn2):
        k = MonoidIdeal.generated(nn2, [Z2.element((1, 0))])
        assert is_primary(k).status is TriState.TRUE

    def test_diagonal_not_primary(self, nn2):
        k = MonoidIdeal.generated(nn2, [Z2.element((1, 1))])
        v = is_primary(k)
        assert v.status is TriState.FALSE
        a, x = v.witness
        assert not radical_contains(k, a)
        assert not k.contains(x)
        assert k.contains(a + x)

    def test_primary_in_n(self, nn):
        k = MonoidIdeal.generated(nn, [Z1.element((2,))])
        assert is_primary(k).status is TriState.TRUE

    def test_improper(self, nn):
        k = MonoidIdeal.generated(nn, [Z1.element((0,))])
        with pytest.raises(ImproperIdeal):
            is_primary(k)

    def test_nonsaturated_monoid(self, n23):
        k = MonoidIdeal.generated(n23, [Z1.element((4,))])
        v = is_primary(k)
        assert v.status in (TriState.TRUE, TriState.FALSE)


class TestIdealized:
    def test_full_and_point(self, nn2):
        empty = MonoidIdeal.generated(nn2, [])
        assert len(spec_idealized(IdealizedMonoid(nn2, empty)).primes) == 4
        mplus = MonoidIdeal.generated(nn2, list(nn2.gens))
        assert len(spec_idealized(IdealizedMonoid(nn2, mplus)).primes) == 1

    def test_diagonal(self, nn2):
        k = MonoidIdeal.generated(nn2, [Z2.element((1, 1))])
        assert len(spec_idealized(IdealizedMonoid(nn2, k)).primes) == 3

    def test_not_acceptable(self, nn):
        k = MonoidIdeal.generated(nn, [Z1.element((0,))])
        with pytest.raises(NotAcceptable):
            IdealizedMonoid(nn, k)


class TestZariski:
    def test_closed_set_identities(self, nn2, a1):
        rng = random.Random(9)
        for m in (nn2, a1):
            for _ in range(15):
                gi, gj = [], []
                for g in m.gens:
                    if rng.random() < 0.6:
                        gi.append(g.scale(rng.randint(1, 2)))
                    if rng.random() < 0.6:
                        gj.append(g.scale(rng.randint(1, 2)))
                if not gi or not gj:
                    continue
                i = MonoidIdeal.generated(m, gi)
                j = MonoidIdeal.generated(m, gj)
                # the verified identities (the product/union duality)
                assert zariski_closed_set(ideal_product(i, j)) == zariski_closed_set(i) | zariski_closed_set(j)
                assert zariski_closed_set(ideal_union(i, j)) == zariski_closed_set(i) & zariski_closed_set(j)


class TestDot:
    def test_spec_dot(self, a1):
        dot = spec_dot(spec(a1))
        assert dot.startswith("digraph spec")
        assert dot.count("->") == 4
        assert "doublecircle" in dot

    def test_face_dot(self, nn2):
        dot = face_lattice_dot(nn2)
        assert dot.count("->") == 4

    def test_deterministic(self, a1):
        assert spec_dot(spec(a1)) == spec_dot(spec(a1))
