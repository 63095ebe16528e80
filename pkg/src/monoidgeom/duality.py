"""The dual monoid Hom(Q, N), the duality involution on sharp toric monoids,
the orthogonal face bijection, height-one valuations and ball counting.

Dual functionals are integer vectors in the sharp free coordinates of Q: the
dual monoid is realized inside Hom(Qbar^gp / torsion, Z), where it is the
lattice-point monoid of the dual cone.  Its minimal generators are the dual
Hilbert basis cached on the monoid itself (``AffineMonoid.dual_basis``).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .affine import AffineMonoid
from .errors import NonLocalFunctional, NotMember, WrongHeight
from .lattice import AbelianGroup, GroupElement
from .specm import Face, PrimeIdeal, height, height_one_primes


def dual(q: AffineMonoid) -> AffineMonoid:
    """H(Q) = Hom(Q, N) as an affine monoid in Hom(Qbar^gp/tors, Z) = Z^s.

    Fine, saturated and sharp; its generators are the Hilbert basis of the
    dual cone.
    """
    s = q.rank_sharp()
    amb = AbelianGroup(s, ())
    return AffineMonoid.from_generators(amb, [amb.element(h) for h in q.dual_basis])


def evaluate(q: AffineMonoid, h: Sequence[int], x: GroupElement) -> int:
    """Pairing between a dual functional and an element of Q^gp."""
    return q.pair_dual(tuple(h), x)


@dataclass(frozen=True)
class DoubleDuality:
    """Evaluation isomorphism sharpen(saturate(Q)) -> H(H(Q)).

    ``pairs`` matches each irreducible of the canonical core with its image;
    ``inverse_pairs`` is the reversed correspondence.
    """

    core: AffineMonoid
    double_dual: AffineMonoid
    pairs: tuple[tuple[GroupElement, GroupElement], ...]

    @property
    def inverse_pairs(self) -> tuple[tuple[GroupElement, GroupElement], ...]:
        return tuple((b, a) for a, b in self.pairs)


def double_dual_iso(q: AffineMonoid) -> DoubleDuality:
    """The evaluation map as an explicit generator-level bijection.

    ev(x) is the free part of x in sharp coordinates; H(H(Q)) is computed in
    that same lattice (the double dual of Z^s is Z^s itself, so no coordinate
    change is introduced), and sharpen(saturate(Q)) maps onto it.
    """
    from . import cones

    sat = q.saturate()
    core, _ = sat.sharpen()
    s = q.rank_sharp()
    amb = AbelianGroup(s, ())
    lin, rays = cones.dual_rays(list(q.dual_basis), s)
    assert not lin  # the dual cone spans, Q's sharp cone being pointed
    ddual = AffineMonoid.from_generators(
        amb, [amb.element(v) for v in cones.hilbert_basis(rays, s)]
    )

    proj_core = sat._sharp
    proj_q = q._sharp
    pairs = []
    seen = set()
    for t in sat.gens:
        c = proj_core.project_member(t)
        if c.is_zero() or c.key() in seen:
            continue
        seen.add(c.key())
        ev = ddual.ambient.element(proj_q.project_member(t).free)
        pairs.append((c, ev))

    core_irr = {g.key() for g in core.irreducibles()}
    ddual_irr = {g.key() for g in ddual.irreducibles()}
    matched = {ev.key() for c, ev in pairs if c.key() in core_irr}
    if matched != ddual_irr or len(core_irr) != len(ddual_irr):
        raise AssertionError("evaluation map failed to match irreducibles bijectively")
    irr_pairs = tuple((c, ev) for c, ev in pairs if c.key() in core_irr)
    return DoubleDuality(core, ddual, irr_pairs)


def face_perp(q: AffineMonoid, f: Face) -> Face:
    """F^perp = {h in H(Q) : h(F) = 0}, a face of H(Q)."""
    h_monoid = dual(q)
    hb = q.dual_basis
    mask = frozenset(
        j
        for j, h in enumerate(hb)
        if all(q.pair_dual(h, q.gens[i]) == 0 for i in f.gen_mask)
    )
    # witness: evaluation at the sum of the face's generators
    s = q.rank_sharp()
    acc = [0] * s
    for i in sorted(f.gen_mask):
        free = q._sharp.project_member(q.gens[i]).free
        acc = [a + b for a, b in zip(acc, free)]
    return Face(h_monoid, mask, tuple(acc))


def perp_of_dual_face(q: AffineMonoid, t: Face) -> Face:
    """T^perp = {x in Q : h(x) = 0 for all h in T}, a face of Q."""
    hb = q.dual_basis
    chosen = [hb[j] for j in sorted(t.gen_mask)]
    mask = frozenset(
        i
        for i, g in enumerate(q.gens)
        if all(q.pair_dual(h, g) == 0 for h in chosen)
    )
    s = q.rank_sharp()
    acc = tuple(sum(h[c] for h in chosen) for c in range(s))
    return Face(q, mask, acc)


@dataclass(frozen=True)
class Valuation:
    """Height-one valuation: the unique epimorphism Q^gp -> Z attached to a
    height-one prime, nonnegative on Q and vanishing exactly on the
    complement face."""

    prime: PrimeIdeal
    functional: tuple[int, ...]
    divisor: int

    def value(self, x: GroupElement) -> int:
        q = self.prime.monoid
        raw = q.pair_dual(self.functional, x)
        assert raw % self.divisor == 0, "element outside Q^gp"
        return raw // self.divisor


def height1_valuation(q: AffineMonoid, p: PrimeIdeal) -> Valuation:
    """The valuation v_p for a height-one prime of a fine monoid."""
    if height(p) != 1:
        raise WrongHeight(f"prime has height {height(p)}, expected 1")
    mask = p.face.gen_mask
    candidates = [
        h
        for h in q.dual_basis
        if frozenset(i for i, g in enumerate(q.gens) if q.pair_dual(h, g) == 0) == mask
    ]
    assert candidates, "a facet admits a dual basis element with that zero set"
    h = candidates[0]
    vals = [q.pair_dual(h, g) for g in q.gens]
    d = 0
    for v in vals:
        d = gcd(d, v)
    return Valuation(p, h, d if d else 1)


def valuations(q: AffineMonoid) -> list[Valuation]:
    """All height-one valuations, ordered by the complement-face mask."""
    out = [height1_valuation(q, p) for p in height_one_primes(q)]
    out.sort(key=lambda v: v.prime.sort_key())
    return out


def valuation_vector(q: AffineMonoid, x: GroupElement) -> list[tuple[PrimeIdeal, int]]:
    """The map v into the free monoid on height-one primes: x -> (v_p(x))_p."""
    if not q.contains(x):
        raise NotMember("valuation vector is defined on members of Q")
    return [(v.prime, v.value(x)) for v in valuations(q)]


def saturation_by_valuations_check(q: AffineMonoid, radius: int = 4) -> bool:
    """Check on a box in Q^gp that membership equals nonnegativity of every
    height-one valuation.

    True for saturated monoids; returns False on a witness (such as the
    numerical semigroup <2,3>, where x = 1 has value >= 0 but is not a
    member).
    """
    from itertools import product

    vs = valuations(q)
    sub = q.gp
    quot = sub._abstract
    free_rank = quot.target.free_rank
    tors = quot.target.torsion
    k = len(q.gens)
    free_amb = AbelianGroup(k, ())
    ranges = [range(-radius, radius + 1)] * free_rank + [range(d) for d in tors]
    for coords in product(*ranges):
        y = quot.target.from_flat(list(coords))
        c = quot.section(y)
        x = q.ambient.zero()
        for ci, g in zip(c.free, q.gens):
            x = x + g.scale(ci)
        member = q.contains(x)
        nonneg = all(v.value(x) >= 0 for v in vs)
        if member != nonneg:
            return False
    return True


def count_ball(q: AffineMonoid, h: Sequence[int], r: int) -> int:
    """Exact cardinality of {x in Q : h(x) < r} for a local functional h on a
    sharp monoid, by graded breadth-first search.

    h is given in ambient free coordinates (h(x) = h . free(x)); it is local
    exactly when it is strictly positive on every generator.
    """
    if not q.is_sharp():
        raise NonLocalFunctional("ball counting requires a sharp monoid")
    h = tuple(h)
    if len(h) != q.ambient.free_rank:
        raise NonLocalFunctional("functional length must match the ambient free rank")
    values = {g.key(): sum(a * b for a, b in zip(h, g.free)) for g in q.gens}
    if any(v <= 0 for v in values.values()):
        raise NonLocalFunctional("functional must be strictly positive on nonunits")
    if r <= 0:
        return 0
    zero = q.ambient.zero()
    seen = {zero.key()}
    frontier = [(zero, 0)]
    count = 1
    while frontier:
        nxt = []
        for x, d in frontier:
            for g in q.gens:
                y = x + g
                if y.key() in seen:
                    continue
                dy = d + values[g.key()]
                if dy < r:
                    seen.add(y.key())
                    nxt.append((y, dy))
        count += len(nxt)
        frontier = nxt
    return count
