"""Monoid algebras R[Q] over exact rationals, quotients R[Q,K], face
morphisms, the support calculus sigma/K(f) with height-one valuations,
truncated power series rings and Rees monoids.

Elements are finite maps from monoid members to Fractions with canonical key
order; all arithmetic is exact.  Coefficients are fixed to Q (the rationals),
which makes the torsion-order hypotheses of the reducedness and domain
statements automatic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .affine import AffineMonoid
from .errors import (
    MonoidMismatch,
    NotMember,
    NotSharp,
    NotToric,
    WitnessMismatch,
    ZeroElement,
)
from .lattice import AbelianGroup, GroupElement
from .specm import (
    Face,
    MonoidIdeal,
    PrimeIdeal,
    height_one_primes,
    ideal_power,
    is_radical_ideal,
    minimal_ideal_generators,
)
from .duality import valuations


# ---------------------------------------------------------------------------
# elements of R[Q]


@dataclass(frozen=True)
class AlgebraElement:
    """Finite R-linear combination of monoid members, R = Q (rationals)."""

    monoid: AffineMonoid
    terms: tuple[tuple[GroupElement, Fraction], ...]

    @classmethod
    def from_terms(
        cls,
        monoid: AffineMonoid,
        terms: Iterable[tuple[GroupElement, Fraction | int | str]],
        validate: bool = True,
    ) -> "AlgebraElement":
        acc: dict = {}
        elems: dict = {}
        for key, coeff in terms:
            coeff = Fraction(coeff)
            k = key.key()
            acc[k] = acc.get(k, Fraction(0)) + coeff
            elems[k] = key
        out = []
        for k in sorted(acc):
            if acc[k] != 0:
                e = elems[k]
                if validate and not monoid.contains(e):
                    raise NotMember(f"term key {e.free}+{e.tors} outside the monoid")
                out.append((elems[k], acc[k]))
        return cls(monoid, tuple(out))

    @classmethod
    def zero(cls, monoid: AffineMonoid) -> "AlgebraElement":
        return cls(monoid, ())

    @classmethod
    def monomial(cls, monoid: AffineMonoid, key: GroupElement, coeff=1) -> "AlgebraElement":
        return cls.from_terms(monoid, [(key, Fraction(coeff))])

    @classmethod
    def one(cls, monoid: AffineMonoid) -> "AlgebraElement":
        return cls.from_terms(monoid, [(monoid.ambient.zero(), Fraction(1))], validate=False)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[GroupElement]:
        return [k for k, _ in self.terms]

    def coeff(self, key: GroupElement) -> Fraction:
        for k, c in self.terms:
            if k == key:
                return c
        return Fraction(0)

    def _check(self, other: "AlgebraElement"):
        if self.monoid != other.monoid:
            raise MonoidMismatch("elements of different monoid algebras")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement.from_terms(
            self.monoid, list(self.terms) + list(other.terms), validate=False
        )

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.monoid, tuple((k, -c) for k, c in self.terms))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        prods = []
        for k1, c1 in self.terms:
            for k2, c2 in other.terms:
                prods.append((k1 + k2, c1 * c2))
        return AlgebraElement.from_terms(self.monoid, prods, validate=False)

    def scale(self, c) -> "AlgebraElement":
        c = Fraction(c)
        if c == 0:
            return AlgebraElement.zero(self.monoid)
        return AlgebraElement(self.monoid, tuple((k, c * a) for k, a in self.terms))

    def shift(self, p: GroupElement) -> "AlgebraElement":
        """Multiplication by the monomial e^p."""
        return AlgebraElement.from_terms(
            self.monoid, [(k + p, c) for k, c in self.terms], validate=False
        )


def counit(f: AlgebraElement) -> Fraction:
    """The augmentation: sum of all coefficients."""
    return sum((c for _, c in f.terms), Fraction(0))


def comul(f: AlgebraElement) -> tuple[tuple[tuple[GroupElement, GroupElement], Fraction], ...]:
    """Comultiplication data: e^p goes to the diagonal pair (p, p)."""
    return tuple(((k, k), c) for k, c in f.terms)


def vertex_eval(f: AlgebraElement) -> Fraction:
    """The vertex section: kill every nonunit key, evaluate units at 1."""
    units = f.monoid.units
    return sum((c for k, c in f.terms if units.contains(k)), Fraction(0))


# ---------------------------------------------------------------------------
# quotients and face morphisms


@dataclass(frozen=True)
class QuotientElement:
    """Reduced representative in R[Q,K]: support avoids the ideal."""

    base: AlgebraElement
    ideal: MonoidIdeal

    def __post_init__(self):
        if self.ideal.monoid != self.base.monoid:
            raise MonoidMismatch("ideal over a different monoid")


def quotient_project(f: AlgebraElement, k: MonoidIdeal) -> QuotientElement:
    """Projection R[Q] -> R[Q,K]: drop every term supported in K."""
    if k.monoid != f.monoid:
        raise MonoidMismatch("ideal over a different monoid")
    kept = [(key, c) for key, c in f.terms if not k.contains(key)]
    return QuotientElement(AlgebraElement(f.monoid, tuple(kept)), k)


def quotient_mul(a: QuotientElement, b: QuotientElement) -> QuotientElement:
    if a.ideal != b.ideal:
        raise MonoidMismatch("quotients by different ideals")
    return quotient_project(a.base * b.base, a.ideal)


def face_restrict(f: AlgebraElement, face: Face) -> AlgebraElement:
    """i_F: keep exactly the terms supported on the face."""
    if face.monoid != f.monoid:
        raise MonoidMismatch("face of a different monoid")
    sub = face.submonoid()
    kept = [(k, c) for k, c in f.terms if sub.contains(k)]
    return AlgebraElement(sub, tuple(kept))


def face_pull(g: AlgebraElement, q: AffineMonoid) -> AlgebraElement:
    """r_F: coefficient-preserving inclusion R[F] -> R[Q]."""
    if g.monoid.ambient != q.ambient:
        raise MonoidMismatch("face lives in a different ambient group")
    return AlgebraElement.from_terms(q, list(g.terms))


@dataclass(frozen=True)
class RetractHomotopy:
    """f(t) with e^q sent to t^{h(q)} e^q; t=1 gives f back, t=0 the
    face retraction i_F r_F."""

    element: AlgebraElement
    face: Face
    functional: tuple[int, ...]
    terms: tuple[tuple[GroupElement, int, Fraction], ...]

    def specialize(self, t) -> AlgebraElement:
        t = Fraction(t)
        out = []
        for key, deg, coeff in self.terms:
            factor = Fraction(1) if deg == 0 else t**deg
            out.append((key, coeff * factor))
        return AlgebraElement.from_terms(self.element.monoid, out, validate=False)


def retract_homotopy(f: AlgebraElement, face: Face, h: Sequence[int]) -> RetractHomotopy:
    """Deformation of f along a dual witness h with h^{-1}(0) = F.

    h is an ambient free-coordinate functional: h(x) = h . free(x).
    """
    q = f.monoid
    h = tuple(h)
    if len(h) != q.ambient.free_rank:
        raise WitnessMismatch("functional length must match the ambient free rank")

    def val(x):
        return sum(a * b for a, b in zip(h, x.free))

    for i, g in enumerate(q.gens):
        v = val(g)
        if (v == 0) != (i in face.gen_mask):
            raise WitnessMismatch("functional does not cut out the face")
        if v < 0:
            raise WitnessMismatch("functional must be nonnegative on the monoid")
    terms = tuple((key, val(key), c) for key, c in f.terms)
    return RetractHomotopy(f, face, h, terms)


# ---------------------------------------------------------------------------
# support calculus


def support(f: AlgebraElement) -> list[GroupElement]:
    return f.support()


def support_ideal(f: AlgebraElement) -> MonoidIdeal:
    """K(f): the ideal generated by the support, with minimal generators."""
    return ideal_of_set(f.monoid, f.support())


def ideal_of_set(m: AffineMonoid, s: Iterable[GroupElement]) -> MonoidIdeal:
    probe = MonoidIdeal.generated(m, list(s))
    return MonoidIdeal(m, tuple(minimal_ideal_generators(probe)))


def vp_element(q: AffineMonoid, p: PrimeIdeal, f: AlgebraElement) -> int:
    """v_p(f): minimum of the height-one valuation over the support."""
    if not q.is_toric():
        raise NotToric("support valuations require a toric monoid")
    if f.is_zero():
        raise ZeroElement("v_p of the zero element is undefined")
    from .duality import height1_valuation

    v = height1_valuation(q, p)
    return min(v.value(k) for k in f.support())


def is_principal_support(f: AlgebraElement) -> Optional[GroupElement]:
    """The generator p when K(f) = (p), else None.

    Valuation criterion on a toric monoid: p realizes the minimum of every
    height-one valuation over the support; the divisibility check below makes
    the verdict self-certifying.
    """
    q = f.monoid
    if not q.is_toric():
        raise NotToric("principal support test requires a toric monoid")
    if f.is_zero():
        return None
    vs = valuations(q)
    sup = f.support()
    mins = [min(v.value(k) for k in sup) for v in vs]
    for cand in sup:
        if all(v.value(cand) == m for v, m in zip(vs, mins)):
            if all(q.divides(cand, s) for s in sup):
                return cand
    return None


def is_reduced_quotient(q: AffineMonoid, k: MonoidIdeal) -> bool:
    """R[Q,K] is reduced exactly when K is a radical ideal (coefficients are
    rational, so the torsion-order hypothesis holds automatically)."""
    if k.monoid != q:
        raise MonoidMismatch("ideal over a different monoid")
    return is_radical_ideal(k)


def hypersurface_components(q: AffineMonoid, p: GroupElement) -> list[PrimeIdeal]:
    """Height-one primes containing p: the irreducible components of the
    hypersurface cut out by (p)."""
    if not q.is_toric():
        raise NotToric("hypersurface components require a toric monoid")
    if not q.contains(p):
        raise NotMember("element outside the monoid")
    return [pr for pr in height_one_primes(q) if pr.contains(p)]


# ---------------------------------------------------------------------------
# truncated power series


def maximal_ideal(q: AffineMonoid) -> MonoidIdeal:
    if not q.is_sharp():
        raise NotSharp("Q+ as an ideal needs a sharp monoid")
    return MonoidIdeal.generated(q, list(q.gens))


def series_basis(q: AffineMonoid, order: int) -> list[GroupElement]:
    """The finite set Q \\ (Q+)^order: a module basis of the truncation."""
    if not q.is_sharp():
        raise NotSharp("series truncation needs a sharp monoid")
    if order <= 0:
        return []
    ideal_n = ideal_power(maximal_ideal(q), order)
    seen = {q.ambient.zero().key(): q.ambient.zero()}
    frontier = [q.ambient.zero()]
    for _ in range(order - 1):
        nxt = []
        for x in frontier:
            for g in q.gens:
                y = x + g
                if y.key() not in seen:
                    seen[y.key()] = y
                    nxt.append(y)
        frontier = nxt
    return sorted(x for x in seen.values() if not ideal_n.contains(x))


@dataclass(frozen=True)
class TruncatedSeries:
    """Element of R[[Q]] / (Q+)^order, supported on the finite basis."""

    monoid: AffineMonoid
    order: int
    terms: tuple[tuple[GroupElement, Fraction], ...]

    @classmethod
    def from_terms(cls, monoid: AffineMonoid, order: int, terms) -> "TruncatedSeries":
        ideal_n = ideal_power(maximal_ideal(monoid), order)
        acc: dict = {}
        elems: dict = {}
        for key, coeff in terms:
            coeff = Fraction(coeff)
            if ideal_n.contains(key):
                continue
            k = key.key()
            acc[k] = acc.get(k, Fraction(0)) + coeff
            elems[k] = key
        out = tuple((elems[k], acc[k]) for k in sorted(acc) if acc[k] != 0)
        return cls(monoid, order, out)

    @classmethod
    def from_polynomial(cls, f: AlgebraElement, order: int) -> "TruncatedSeries":
        return cls.from_terms(f.monoid, order, f.terms)

    def coeff(self, key: GroupElement) -> Fraction:
        for k, c in self.terms:
            if k == key:
                return c
        return Fraction(0)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Exact product followed by truncation; matches the polynomial product
    modulo (Q+)^order."""
    if a.monoid != b.monoid:
        raise MonoidMismatch("series over different monoids")
    if a.order != b.order:
        raise MonoidMismatch("series of different truncation orders")
    prods = []
    for k1, c1 in a.terms:
        for k2, c2 in b.terms:
            prods.append((k1 + k2, c1 * c2))
    return TruncatedSeries.from_terms(a.monoid, a.order, prods)


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    if a.monoid != b.monoid or a.order != b.order:
        raise MonoidMismatch("series mismatch")
    return TruncatedSeries.from_terms(a.monoid, a.order, list(a.terms) + list(b.terms))


def series_truncate(s: TruncatedSeries, order: int) -> TruncatedSeries:
    """Reduce to a lower truncation order (tower compatibility)."""
    if order > s.order:
        raise MonoidMismatch("cannot refine a truncated series")
    return TruncatedSeries.from_terms(s.monoid, order, s.terms)


def cofinality_check(q: AffineMonoid, h: Sequence[int], n: int) -> tuple[int, int]:
    """Cofinality of {J_{h,n}} and {(Q+)^n}: returns (m1, m2) with
    (Q+)^{m1} inside J_{h,n} and J_{h,m2} inside (Q+)^n, both verified on the
    finite complements.  h is an ambient free-coordinate local functional."""
    from .errors import NonLocalFunctional

    h = tuple(h)

    def val(x):
        return sum(a * b for a, b in zip(h, x.free))

    for g in q.gens:
        if val(g) <= 0:
            raise NonLocalFunctional("cofinality needs a local functional")
    ball = _ball_elements(q, val, n)
    mplus = maximal_ideal(q)
    m1 = 1
    while True:
        power = ideal_power(mplus, m1)
        if all(not power.contains(x) for x in ball):
            break
        m1 += 1
    complement = series_basis(q, n) if n > 0 else []
    m2 = max((val(x) for x in complement), default=0)
    # verification: everything in the complement of (Q+)^n has h-value <= m2
    assert all(val(x) <= m2 for x in complement)
    return m1, m2


def _ball_elements(q: AffineMonoid, val, n: int) -> list[GroupElement]:
    zero = q.ambient.zero()
    seen = {zero.key(): zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for x in frontier:
            for g in q.gens:
                y = x + g
                if y.key() not in seen and val(y) <= n:
                    seen[y.key()] = y
                    nxt.append(y)
        frontier = nxt
    return list(seen.values())


# ---------------------------------------------------------------------------
# Rees monoids


@dataclass(frozen=True)
class ReesMonoid:
    """B_K(Q): pairs (m, p) with p in K^m, graded by the first coordinate."""

    base: AffineMonoid
    ideal: MonoidIdeal
    monoid: AffineMonoid

    def weight(self, x: GroupElement) -> int:
        return x.free[0]

    def pair(self, m: int, p: GroupElement) -> GroupElement:
        return self.monoid.ambient.element((m,) + tuple(p.free), p.tors)

    def contains_pair(self, m: int, p: GroupElement) -> bool:
        return self.monoid.contains(self.pair(m, p))


def rees(q: AffineMonoid, k: MonoidIdeal) -> ReesMonoid:
    """The Rees monoid of (Q, K), generated by (0, gens Q) and (1, gens K)."""
    if k.monoid != q:
        raise MonoidMismatch("ideal over a different monoid")
    amb = AbelianGroup(1 + q.ambient.free_rank, q.ambient.torsion)
    gens = []
    for g in q.gens:
        gens.append(amb.element((0,) + tuple(g.free), g.tors))
    for s in k.gens:
        gens.append(amb.element((1,) + tuple(s.free), s.tors))
    b = AffineMonoid.from_generators(amb, gens)
    return ReesMonoid(q, k, b)
