"""Integral monoids embedded in finitely generated abelian groups.

An :class:`AffineMonoid` is a finite generator list inside an ambient
:class:`~monoidgeom.lattice.AbelianGroup`; it is integral and finitely
generated (fine) by construction.  Membership is a complete decision
procedure: units are split off as a subgroup, and the sharp quotient is graded
by a strictly positive functional built from the dual cone, which turns the
bounded nonnegative search into a decision.

Instances are immutable; lazily cached data is computed by pure functions, so
concurrent readers are safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Optional, Sequence

from . import cones
from .cones import ConeDescription, describe, dot
from .errors import (
    AmbientMismatch,
    NotMember,
    NotSaturated,
    NotSharp,
    WrongDimension,
)
from .lattice import (
    AbelianGroup,
    GroupElement,
    GroupQuotient,
    Subgroup,
    kernel_basis,
    quotient_by,
    row_space_basis,
    solve_integer,
    solve_nonneg,
    transpose,
)
from .tristate import TriState


@dataclass(frozen=True)
class AffineMonoid:
    """Submonoid of an abelian group, given by finitely many generators.

    Generators are stored in canonical form: deduplicated, zero dropped,
    sorted.  The zero monoid has an empty generator tuple.
    """

    ambient: AbelianGroup
    gens: tuple[GroupElement, ...]

    @classmethod
    def from_generators(cls, ambient: AbelianGroup, gens: Sequence[GroupElement]) -> "AffineMonoid":
        for g in gens:
            if g.group != ambient:
                raise AmbientMismatch("generator outside the ambient group")
        canon = sorted({g.key(): g for g in gens if not g.is_zero()}.values())
        return cls(ambient, tuple(canon))

    # -- basic views ------------------------------------------------------

    def element(self, free=(), tors=()) -> GroupElement:
        return self.ambient.element(free, tors)

    @cached_property
    def _free_rows(self) -> list[list[int]]:
        return [list(g.free) for g in self.gens]

    @cached_property
    def _cone(self) -> ConeDescription:
        return describe(self._free_rows, self.ambient.free_rank)

    @cached_property
    def _unit_indices(self) -> tuple[int, ...]:
        # g is a unit iff -free(g) stays in the cone (free(g) lies on a line
        # of the cone); pure-torsion generators are always units
        out = []
        for i, g in enumerate(self.gens):
            if self._cone.contains([-x for x in g.free]):
                out.append(i)
        return tuple(out)

    @cached_property
    def units(self) -> Subgroup:
        """The group of invertible elements M*, as a subgroup with generators.

        The monoid generated by the unit generators is itself a group, so the
        listed generators generate M* both as a monoid and as a group.
        """
        return Subgroup(self.ambient, tuple(self.gens[i] for i in self._unit_indices))

    def is_sharp(self) -> bool:
        return not self._unit_indices

    def is_dull(self) -> bool:
        """Whether M is a group."""
        return len(self._unit_indices) == len(self.gens)

    def is_fine(self) -> bool:
        """Always true: affine monoids are integral and finitely generated."""
        return True

    @cached_property
    def gp(self) -> Subgroup:
        """M^gp, the subgroup of the ambient group generated by the monoid."""
        return Subgroup(self.ambient, self.gens)

    @cached_property
    def _sharp(self) -> "_SharpContext":
        # coordinates of Mbar^gp = M^gp / M*: abstract structure of the
        # generated subgroup first (so finite-index sublattices of the
        # ambient get their own dual lattice), then the unit quotient
        k = len(self.gens)
        q_abs = self.gp._abstract
        coeff_amb = AbelianGroup(k, ())
        unit_imgs = []
        for i in self._unit_indices:
            e = coeff_amb.element([1 if j == i else 0 for j in range(k)])
            unit_imgs.append(q_abs.apply(e))
        quot = quotient_by(q_abs.target, unit_imgs)
        images = []
        for i in range(k):
            e = coeff_amb.element([1 if j == i else 0 for j in range(k)])
            images.append(quot.apply(q_abs.apply(e)))
        return _SharpContext(self, q_abs, quot, tuple(images))

    @cached_property
    def dual_basis(self) -> tuple[tuple[int, ...], ...]:
        """Hilbert basis of the dual cone, in sharp free coordinates.

        These coefficient vectors are the minimal generators of the monoid
        Hom(M, N); evaluate them with :meth:`pair_dual`.
        """
        ctx = self._sharp
        lin, rays = cones.dual_rays(ctx.sharp_free_rows, ctx.s)
        assert not lin  # generator images span the sharp quotient's lattice
        return tuple(cones.hilbert_basis(rays, ctx.s))

    def pair_dual(self, h: Sequence[int], x: GroupElement) -> int:
        """Evaluate a dual functional (sharp free coordinates) on x in M^gp."""
        return dot(h, self._sharp.project_member(x).free)

    @cached_property
    def grading(self) -> tuple[int, ...]:
        """Sum of the dual cone's generators: a local functional, strictly
        positive on every nonunit of M."""
        ctx = self._sharp
        lin, rays = cones.dual_rays(ctx.sharp_free_rows, ctx.s)
        return tuple(sum(r[t] for r in rays) for t in range(ctx.s))

    def degree(self, x: GroupElement) -> int:
        """Grading value of an element of M^gp (through the sharp quotient)."""
        return dot(self.grading, self._sharp.project_member(x).free)

    # -- membership -------------------------------------------------------

    def membership_coeffs(self, x: GroupElement) -> Optional[list[int]]:
        """Nonnegative coefficients over ``self.gens`` writing x, or None.

        Complete: works in the sharp quotient under the positive grading and
        lifts back through the unit group.
        """
        if x.group != self.ambient:
            raise AmbientMismatch("element outside the ambient group")
        ctx = self._sharp
        xbar = ctx.project(x)
        if xbar is None:
            return None
        budget = dot(self.grading, xbar.free)
        if budget < 0:
            return None
        reps = ctx.distinct_nonzero_images
        coeffs = solve_nonneg(
            [img for img, _ in reps],
            xbar,
            budget,
            degree=lambda e: dot(self.grading, e.free),
        )
        if coeffs is None:
            return None
        out = [0] * len(self.gens)
        for c, (_, idx) in zip(coeffs, reps):
            out[idx] += c
        # unit correction: x - sum out_i g_i lies in M*, which is a group
        # monoid-generated by the unit generators
        rest = x
        for c, g in zip(out, self.gens):
            if c:
                rest = rest - g.scale(c)
        unit_coeffs = self.units_monoid_coeffs(rest)
        assert unit_coeffs is not None
        for c, i in zip(unit_coeffs, self._unit_indices):
            out[i] += c
        return out

    def units_monoid_coeffs(self, u: GroupElement) -> Optional[list[int]]:
        """Nonnegative coefficients for u over the unit generators, or None."""
        ugens = [self.gens[i] for i in self._unit_indices]
        if not ugens:
            return [] if u.is_zero() else None
        # integer representation first (M* is a group)
        cols = transpose([g.lift() for g in ugens] + self.ambient.torsion_relation_rows())
        sol = solve_integer(cols, u.lift())
        if sol is None:
            return None
        coeffs = sol[: len(ugens)]
        # shift negative coefficients using inverses: for each generator g of
        # the unit group, -g is again in the monoid generated by unit gens,
        # with an explicit nonnegative representation
        out = [max(c, 0) for c in coeffs]
        for j, c in enumerate(coeffs):
            if c < 0:
                neg = self._unit_inverse_reps[j]
                for t, n in enumerate(neg):
                    out[t] += (-c) * n
        return out

    @cached_property
    def _unit_inverse_reps(self) -> list[list[int]]:
        """For each unit generator g, nonnegative coefficients writing -g
        over the unit generators.

        Constructive: pick n >= 1 and c in N^k with sum c_i free(u_i) equal to
        -n free(g); then t = n g + sum c_i u_i is torsion of some order m, and
        -g = (m n - 1) g + m sum c_i u_i.
        """
        ugens = [self.gens[i] for i in self._unit_indices]
        k = len(ugens)
        if k == 0:
            return []
        reps = []
        for j, g in enumerate(ugens):
            eq_rows = []
            for t in range(self.ambient.free_rank):
                eq_rows.append([u.free[t] for u in ugens] + [g.free[t]])
            sols = cones.nonneg_kernel_hilbert_basis(eq_rows, k + 1)
            sol = next((z for z in sols if z[k] >= 1), None)
            assert sol is not None  # -free(g) lies in the cone of unit gens
            c, n = list(sol[:k]), sol[k]
            y = self.ambient.zero()
            for ci, u in zip(c, ugens):
                y = y + u.scale(ci)
            t_el = g.scale(n) + y
            m = _torsion_order(t_el)
            rep = [m * ci for ci in c]
            rep[j] += m * n - 1
            reps.append(rep)
        return reps

    def contains(self, x: GroupElement) -> bool:
        """Exact membership test."""
        return self.membership_coeffs(x) is not None

    def divides(self, s: GroupElement, t: GroupElement) -> bool:
        """The divisibility preorder: s <= t iff t - s is in the monoid."""
        return self.contains(t - s)

    # -- structure --------------------------------------------------------

    def sharpen(self) -> tuple["AffineMonoid", "MonoidHom"]:
        """The sharp quotient M/M* with its projection."""
        ctx = self._sharp
        target = AffineMonoid.from_generators(ctx.quot.target, list(ctx.images))
        return target, MonoidHom(self, target, ctx.images)

    @cached_property
    def saturation(self) -> "AffineMonoid":
        """M^sat inside the same ambient group.

        An element of M^gp lies in the saturation exactly when its free part
        sits in the rational cone of the generators (torsion is killed by
        scaling), so the saturation is the preimage of the cone lattice
        inside M^gp.  Each cone-lattice generator is lifted to an actual
        element of M^gp (the torsion coordinate of a lift is forced by the
        free part), and the pure-torsion subgroup of M^gp is appended.
        """
        if not self.gens:
            return self
        basis = row_space_basis(self._free_rows)
        s = len(basis)
        coords = []
        for g in self.gens:
            c = solve_integer(transpose(basis), list(g.free)) if s else []
            assert c is not None
            coords.append(c)
        units, pointed = cones.cone_lattice_generators(coords, s)
        out = []
        free_cols = transpose(self._free_rows)
        for v in list(units) + list(pointed):
            free = [sum(v[j] * basis[j][t] for j in range(s)) for t in range(self.ambient.free_rank)]
            c = solve_integer(free_cols, free)
            assert c is not None  # the vector lies in the free-part lattice
            x = self.ambient.zero()
            for ci, g in zip(c, self.gens):
                x = x + g.scale(ci)
            out.append(x)
        # pure-torsion part of M^gp: combinations whose free parts cancel
        for c in kernel_basis(free_cols, ncols=len(self.gens)):
            t = self.ambient.zero()
            for ci, g in zip(c, self.gens):
                t = t + g.scale(ci)
            if not t.is_zero():
                out.append(t)
        return AffineMonoid.from_generators(self.ambient, out)

    def saturate(self) -> "AffineMonoid":
        return self.saturation

    def is_saturated(self) -> bool:
        return all(self.contains(g) for g in self.saturation.gens)

    def is_toric(self) -> bool:
        """Fine, saturated, and M^gp torsion-free."""
        return self.gp.invariants()[1] == () and self.is_saturated()

    def rank_sharp(self) -> int:
        """Rank of the sharp quotient's group; equals the Krull dimension."""
        return self._sharp.s

    def irreducibles(self) -> list[GroupElement]:
        """The unique minimal generating set of a sharp monoid."""
        if not self.is_sharp():
            raise NotSharp("irreducible elements require a sharp monoid")
        out = []
        for g in self.gens:
            reducible = False
            for h in self.gens:
                if h != g and self.contains(g - h):
                    reducible = True
                    break
            if not reducible:
                out.append(g)
        return out

    def is_valuative(self) -> bool:
        """Whether every x in M^gp has x or -x in M.

        For a fine monoid this holds exactly when M is saturated and its sharp
        quotient has rank at most one (the cone is a half-line modulo units).
        """
        return self.rank_sharp() <= 1 and self.is_saturated()

    def __repr__(self):
        gs = ", ".join(str(tuple(g.free) + tuple(g.tors)) for g in self.gens)
        return f"AffineMonoid({self.ambient.free_rank},{list(self.ambient.torsion)}; [{gs}])"


@dataclass(frozen=True)
class _SharpContext:
    """Sharp-quotient coordinates: M^gp -> abstract -> abstract/units."""

    monoid: AffineMonoid
    q_abs: GroupQuotient
    quot: GroupQuotient
    images: tuple[GroupElement, ...]

    @property
    def s(self) -> int:
        return self.quot.target.free_rank

    @cached_property
    def _memo(self) -> dict:
        return {}

    def project(self, x: GroupElement) -> Optional[GroupElement]:
        """Image of x in Mbar^gp coordinates; None when x is outside M^gp."""
        key = x.key()
        memo = self._memo
        if key in memo:
            return memo[key]
        c = integer_rep(self.monoid, x)
        if c is None:
            memo[key] = None
            return None
        k = len(self.monoid.gens)
        coeff_amb = AbelianGroup(k, ())
        out = self.quot.apply(self.q_abs.apply(coeff_amb.element(c)))
        memo[key] = out
        return out

    def project_member(self, x: GroupElement) -> GroupElement:
        out = self.project(x)
        if out is None:
            raise NotMember("element outside M^gp")
        return out

    @cached_property
    def sharp_free_rows(self) -> list[list[int]]:
        return [list(im.free) for im in self.images if not im.is_zero()]

    @cached_property
    def distinct_nonzero_images(self) -> list[tuple[GroupElement, int]]:
        """(image, index of a representative generator) for nonzero images."""
        seen = {}
        for i, im in enumerate(self.images):
            if not im.is_zero() and im.key() not in seen:
                seen[im.key()] = (im, i)
        return sorted(seen.values(), key=lambda p: p[0].key())


def _torsion_order(t: GroupElement) -> int:
    """Order of a pure-torsion element (free part must vanish)."""
    assert all(v == 0 for v in t.free)
    m = 1
    for c, d in zip(t.tors, t.group.torsion):
        if c:
            o = d // gcd(d, c)
            m = m * o // gcd(m, o)
    return m


def integer_rep(monoid: AffineMonoid, x: GroupElement) -> Optional[list[int]]:
    """Integer coefficients over the generators with sum c_i g_i = x, if x
    lies in M^gp."""
    if x.group != monoid.ambient:
        raise AmbientMismatch("element outside the ambient group")
    k = len(monoid.gens)
    cols = [g.lift() for g in monoid.gens] + monoid.ambient.torsion_relation_rows()
    if not cols:
        return [] if x.is_zero() else None
    sol = solve_integer(transpose(cols), x.lift())
    if sol is None:
        return None
    return sol[:k]


def same_submonoid(a: AffineMonoid, b: AffineMonoid) -> bool:
    """Set equality of two monoids in the same ambient group."""
    if a.ambient != b.ambient:
        raise AmbientMismatch("monoids in different ambient groups")
    return all(a.contains(g) for g in b.gens) and all(b.contains(g) for g in a.gens)


@dataclass(frozen=True)
class MonoidHom:
    """Homomorphism between affine monoids, given on generators.

    Construction verifies that every image lies in the target and that the
    generator relations of the source are killed, so the assignment extends to
    a well-defined monoid homomorphism (and to M^gp -> N^gp).
    """

    source: AffineMonoid
    target: AffineMonoid
    images: tuple[GroupElement, ...]

    def __post_init__(self):
        if len(self.images) != len(self.source.gens):
            raise AmbientMismatch("one image per source generator required")
        for im in self.images:
            if im.group != self.target.ambient:
                raise AmbientMismatch("image outside the target ambient group")
            if not self.target.contains(im):
                raise NotMember(f"image {im.free}+{im.tors} not in the target monoid")
        k = len(self.source.gens)
        cols = [g.lift() for g in self.source.gens] + self.source.ambient.torsion_relation_rows()
        for row in kernel_basis(transpose(cols), ncols=len(cols)):
            c = row[:k]
            acc = self.target.ambient.zero()
            for ci, im in zip(c, self.images):
                acc = acc + im.scale(ci)
            if not acc.is_zero():
                raise AmbientMismatch("images do not respect the source relations")

    def apply(self, x: GroupElement) -> GroupElement:
        """Value on any element of source^gp (in particular of the source)."""
        c = integer_rep(self.source, x)
        if c is None:
            raise NotMember("element not in the source group")
        acc = self.target.ambient.zero()
        for ci, im in zip(c, self.images):
            acc = acc + im.scale(ci)
        return acc

    def is_gp_injective(self) -> bool:
        """Whether the induced map source^gp -> target^gp is injective."""
        k = len(self.source.gens)
        cols = [im.lift() for im in self.images] + self.target.ambient.torsion_relation_rows()
        for row in kernel_basis(transpose(cols), ncols=len(cols)):
            probe = self.source.ambient.zero()
            for ci, g in zip(row[:k], self.source.gens):
                probe = probe + g.scale(ci)
            if not probe.is_zero():
                return False
        return True

    def compose(self, other: "MonoidHom") -> "MonoidHom":
        """self after other."""
        if other.target is not self.source and other.target != self.source:
            raise AmbientMismatch("composition mismatch")
        return MonoidHom(other.source, self.target, tuple(self.apply(im) for im in other.images))


def identity_hom(m: AffineMonoid) -> MonoidHom:
    return MonoidHom(m, m, m.gens)


def is_local_hom(theta: MonoidHom) -> bool:
    """Whether no nonunit maps to a unit (theta^{-1}(Q*) = P*)."""
    units = theta.target.units
    for i, g in enumerate(theta.source.gens):
        if i in theta.source._unit_indices:
            continue
        if units.contains(theta.images[i]):
            return False
    return True


@dataclass(frozen=True)
class ExactnessVerdict:
    status: TriState
    witness: Optional[tuple[GroupElement, GroupElement]] = None


def is_exact_hom(theta: MonoidHom, bound: int = 4) -> ExactnessVerdict:
    """Exactness of theta: P = (theta^gp)^{-1}(Q) inside P^gp.

    Decided exactly when P^gp is finite, when theta embeds P as a face of Q,
    or when both monoids are saturated (a cone inclusion test on extreme
    rays).  Otherwise a bounded divisibility search looks for a witness pair
    and the verdict may stay Unknown.
    """
    p, q = theta.source, theta.target

    # finite source group: exhaustive
    if p.gp.rank() == 0:
        elems = _finite_group_elements(p)
        for x in elems:
            if q.contains(theta.apply(x)) and not p.contains(x):
                return ExactnessVerdict(TriState.FALSE, (x, p.ambient.zero()))
        return ExactnessVerdict(TriState.TRUE)

    # face embeddings are always exact
    if theta.is_gp_injective() and _image_is_face(theta):
        return ExactnessVerdict(TriState.TRUE)

    if p.is_saturated() and q.is_saturated():
        return ExactnessVerdict(TriState.of(_exact_saturated(theta)))

    seen = _bounded_elements(p, bound)
    for x1 in seen:
        y1 = theta.apply(x1)
        for x2 in seen:
            if q.contains(theta.apply(x2) - y1) and not p.contains(x2 - x1):
                return ExactnessVerdict(TriState.FALSE, (x1, x2))
    return ExactnessVerdict(TriState.UNKNOWN)


def _finite_group_elements(p: AffineMonoid) -> list[GroupElement]:
    out = {p.ambient.zero().key(): p.ambient.zero()}
    frontier = [p.ambient.zero()]
    while frontier:
        nxt = []
        for x in frontier:
            for g in p.gens:
                for y in (x + g, x - g):
                    if y.key() not in out:
                        out[y.key()] = y
                        nxt.append(y)
        frontier = nxt
    return list(out.values())


def _bounded_elements(p: AffineMonoid, bound: int) -> list[GroupElement]:
    """All sums of at most ``bound`` generators."""
    out = {p.ambient.zero().key(): p.ambient.zero()}
    frontier = [p.ambient.zero()]
    for _ in range(bound):
        nxt = []
        for x in frontier:
            for g in p.gens:
                y = x + g
                if y.key() not in out:
                    out[y.key()] = y
                    nxt.append(y)
        frontier = nxt
    return list(out.values())


def _image_is_face(theta: MonoidHom) -> bool:
    from .specm import faces

    image = AffineMonoid.from_generators(theta.target.ambient, list(theta.images))
    for face in faces(theta.target):
        if same_submonoid(image, face.submonoid()):
            return True
    return False


def _exact_saturated(theta: MonoidHom) -> bool:
    p, q = theta.source, theta.target
    basis = row_space_basis(p._free_rows)
    sp = len(basis)
    if sp == 0:
        # free parts all zero: P^gp is torsion, handled earlier unless ambient
        # free rank is positive with torsion gens only
        elems = _finite_group_elements(p)
        return all(p.contains(x) or not q.contains(theta.apply(x)) for x in elems)
    # image of each basis vector under the induced free-part map
    a_cols = []
    for b in basis:
        c = solve_integer(transpose(p._free_rows), list(b))
        assert c is not None
        xb = p.ambient.zero()
        for ci, g in zip(c, p.gens):
            xb = xb + g.scale(ci)
        a_cols.append(list(theta.apply(xb).free))
    cone_q = q._cone
    constraints = []
    for h in cone_q.inequalities:
        constraints.append([dot(h, col) for col in a_cols])
    for e in cone_q.equalities:
        row = [dot(e, col) for col in a_cols]
        constraints.append(row)
        constraints.append([-x for x in row])
    lin1, rays1 = cones.dual_rays(constraints, sp)
    coords_p = []
    for g in p.gens:
        c = solve_integer(transpose(basis), list(g.free))
        assert c is not None
        coords_p.append(c)
    desc_p = describe(coords_p, sp)
    for v in rays1:
        if not desc_p.contains(v):
            return False
    for b in lin1:
        if not (desc_p.contains(b) and desc_p.contains([-x for x in b])):
            return False
    return True


def embed_sharp(m: AffineMonoid) -> MonoidHom:
    """Embedding of a fine sharp monoid into N^r + T, T = torsion of M^gp.

    Free coordinates are the dual Hilbert basis functionals; the torsion
    coordinate is the torsion part of the abstract structure of M^gp.  When M
    is saturated, T is trivial and the embedding is exact into N^r.
    """
    if not m.is_sharp():
        raise NotSharp("embedding defined for sharp monoids")
    hb = m.dual_basis
    r = len(hb)
    _, tors = m.gp.invariants()
    target_amb = AbelianGroup(r, tors)
    target_gens = []
    for i in range(r):
        target_gens.append(target_amb.element([1 if j == i else 0 for j in range(r)], (0,) * len(tors)))
    for i in range(len(tors)):
        target_gens.append(target_amb.element((0,) * r, [1 if j == i else 0 for j in range(len(tors))]))
    target = AffineMonoid.from_generators(target_amb, target_gens)
    images = []
    for g in m.gens:
        free = [m.pair_dual(h, g) for h in hb]
        abstract = m.gp.abstract_coords(g)
        images.append(target_amb.element(free, abstract.tors))
    return MonoidHom(m, target, tuple(images))


@dataclass(frozen=True)
class Dim1Split:
    """Fine saturated dimension-one monoid split as units + N."""

    units: Subgroup
    unit_invariants: tuple[int, tuple[int, ...]]
    generator: GroupElement


def classify_dim1(m: AffineMonoid) -> Dim1Split:
    """Split a fine saturated monoid of dimension one as units(M) + N q."""
    if not m.is_saturated():
        raise NotSaturated("classification requires a saturated monoid")
    if m.rank_sharp() != 1:
        raise WrongDimension(f"dimension is {m.rank_sharp()}, expected 1")
    sharp_m, _ = m.sharpen()
    irr = sharp_m.irreducibles()
    assert len(irr) == 1, "sharp saturated rank-1 monoid must be N"
    gbar = irr[0]
    gen = next(g for g in m.gens if m._sharp.project_member(g) == gbar)
    return Dim1Split(m.units, m.units.invariants(), gen)


@dataclass(frozen=True)
class Domination:
    """A finitely generated valuative monoid dominating P inside P^gp."""

    weights: tuple[int, ...]
    functional: tuple[int, ...]
    monoid: AffineMonoid
    inclusion: MonoidHom


def dominating_valuative(p: AffineMonoid) -> Domination:
    """Valuative Q = w^{-1}(N) in P^gp for an interior dual functional w.

    The inclusion P -> Q is local and Q^gp = P^gp.
    """
    w = p.grading
    weights = [p.degree(g) for g in p.gens]
    k = len(p.gens)
    qgens: list[GroupElement] = []
    if k:
        for c in kernel_basis([weights], ncols=k):
            x = p.ambient.zero()
            for ci, g in zip(c, p.gens):
                x = x + g.scale(ci)
            qgens.append(x)
            qgens.append(-x)
        g_val = 0
        for wi in weights:
            g_val = gcd(g_val, wi)
        if g_val:
            coeffs = _ext_gcd_coeffs(weights)
            x0 = p.ambient.zero()
            for ci, g in zip(coeffs, p.gens):
                x0 = x0 + g.scale(ci)
            if sum(c * wi for c, wi in zip(coeffs, weights)) < 0:
                x0 = -x0
            qgens.append(x0)
    q = AffineMonoid.from_generators(p.ambient, qgens)
    return Domination(tuple(weights), w, q, MonoidHom(p, q, p.gens))


def _ext_gcd_coeffs(vals: Sequence[int]) -> list[int]:
    """Integer coefficients c with sum c_i vals_i = +-gcd(vals)."""
    coeffs = [0] * len(vals)
    acc = 0
    acc_coeffs = [0] * len(vals)
    for i, v in enumerate(vals):
        if v == 0:
            continue
        if acc == 0:
            acc = v
            acc_coeffs = [0] * len(vals)
            acc_coeffs[i] = 1
            continue
        a, b = acc, v
        x0, x1, y0, y1 = 1, 0, 0, 1
        while b:
            qd, a, b = a // b, b, a % b
            x0, x1 = x1, x0 - qd * x1
            y0, y1 = y1, y0 - qd * y1
        acc_coeffs = [x0 * c for c in acc_coeffs]
        acc_coeffs[i] += y0
        acc = a
    return acc_coeffs
