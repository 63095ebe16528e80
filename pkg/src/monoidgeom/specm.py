"""Faces, prime ideals and the finite Zariski spectrum of a fine monoid,
plus monoid ideals: membership, sums, products, intersections, radicals,
primary tests, localization and dimension.

Primes are never stored as element sets; a prime is the complement of a face,
and a face is the set of generator indices killed by some functional in the
dual monoid.  That keeps every object finite while membership stays exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Optional

from . import cones
from .affine import AffineMonoid, MonoidHom, _bounded_elements
from .errors import (
    AmbientMismatch,
    DimensionLimitExceeded,
    ImproperIdeal,
    MonoidMismatch,
    NotAcceptable,
    SearchBudgetExceeded,
)
from .lattice import GroupElement
from .tristate import TriState


# ---------------------------------------------------------------------------
# faces and primes


@dataclass(frozen=True)
class Face:
    """Face of an affine monoid: generator-index mask plus a dual witness.

    The mask is closed: it contains exactly the generators on which the
    witness functional vanishes, and the face as a set is the submonoid they
    generate.  The witness is zero for the full face.
    """

    monoid: AffineMonoid
    gen_mask: frozenset[int]
    functional: tuple[int, ...]

    @cached_property
    def _sub(self) -> AffineMonoid:
        return AffineMonoid.from_generators(
            self.monoid.ambient, [self.monoid.gens[i] for i in sorted(self.gen_mask)]
        )

    def submonoid(self) -> AffineMonoid:
        return self._sub

    def contains(self, x: GroupElement) -> bool:
        return self.submonoid().contains(x)

    def is_full(self) -> bool:
        return len(self.gen_mask) == len(self.monoid.gens)

    def sort_key(self):
        return (len(self.gen_mask), tuple(sorted(self.gen_mask)))

    def __le__(self, other: "Face") -> bool:
        return self.gen_mask <= other.gen_mask


@dataclass(frozen=True)
class PrimeIdeal:
    """Prime ideal of the monoid, stored as the complement of a face."""

    face: Face

    @property
    def monoid(self) -> AffineMonoid:
        return self.face.monoid

    def contains(self, x: GroupElement) -> bool:
        """Membership in the prime (a subset of the monoid)."""
        return self.monoid.contains(x) and not self.face.contains(x)

    def is_empty(self) -> bool:
        return self.face.is_full()

    def is_maximal_ideal(self) -> bool:
        """Whether this is M+, the complement of the unit face."""
        return self.face.gen_mask == frozenset(self.monoid._unit_indices)

    def sort_key(self):
        return self.face.sort_key()

    def __le__(self, other: "PrimeIdeal") -> bool:
        """Containment of primes (reverse containment of faces)."""
        return other.face.gen_mask <= self.face.gen_mask


def faces(m: AffineMonoid) -> list[Face]:
    """All faces, smallest (the unit face) to largest (the monoid itself).

    Every face is the zero set of a dual functional; zero sets of sums are
    intersections of zero sets, so the family is generated from the dual
    Hilbert basis masks by closing under intersection.
    """
    n = len(m.gens)
    basis_faces: dict[frozenset[int], tuple[int, ...]] = {}
    full_mask = frozenset(range(n))
    zero_fn = (0,) * m._sharp.s
    basis_faces[full_mask] = zero_fn
    for h in m.dual_basis:
        mask = frozenset(i for i, g in enumerate(m.gens) if m.pair_dual(h, g) == 0)
        if mask not in basis_faces:
            basis_faces[mask] = h
        # keep the first witness; any one with that zero set works

    closed = dict(basis_faces)
    frontier = list(basis_faces.items())
    while frontier:
        nxt = []
        for mask1, f1 in frontier:
            for mask2, f2 in list(closed.items()):
                mask = mask1 & mask2
                if mask not in closed:
                    f = tuple(a + b for a, b in zip(f1, f2))
                    closed[mask] = f
                    nxt.append((mask, f))
        frontier = nxt
    out = [Face(m, mask, fn) for mask, fn in closed.items()]
    out.sort(key=Face.sort_key)
    return out


def unit_face(m: AffineMonoid) -> Face:
    return faces(m)[0]


def full_face(m: AffineMonoid) -> Face:
    return faces(m)[-1]


# ---------------------------------------------------------------------------
# the spectrum


@dataclass(frozen=True)
class SpecPoset:
    """Finite poset of prime ideals under containment.

    ``order[i][j]`` is True when primes[i] is contained in primes[j]; the
    generic point is the empty prime (complement of the full face) and, when
    the monoid is not a group, the unique closed point is M+.
    """

    monoid: AffineMonoid
    primes: tuple[PrimeIdeal, ...]
    order: tuple[tuple[bool, ...], ...]

    @cached_property
    def generic_index(self) -> int:
        return next(i for i, p in enumerate(self.primes) if p.is_empty())

    @cached_property
    def closed_index(self) -> int:
        return next(i for i, p in enumerate(self.primes) if p.is_maximal_ideal())

    def heights(self) -> list[int]:
        """Longest chain below each prime."""
        n = len(self.primes)
        idx = sorted(range(n), key=lambda i: sum(self.order[j][i] for j in range(n)))
        h = [0] * n
        for i in idx:
            below = [h[j] + 1 for j in range(n) if j != i and self.order[j][i]]
            h[i] = max(below, default=0)
        return h

    def dimension(self) -> int:
        return max(self.heights(), default=0)

    def maximal_chains(self) -> list[tuple[int, ...]]:
        n = len(self.primes)
        covers = _cover_relation(self.order)
        minimal = [i for i in range(n) if not any(self.order[j][i] for j in range(n) if j != i)]
        chains = []

        def extend(chain):
            last = chain[-1]
            nxt = covers.get(last, [])
            if not nxt:
                chains.append(tuple(chain))
                return
            for j in nxt:
                extend(chain + [j])

        for i in minimal:
            extend([i])
        return chains

    def index_of(self, p: PrimeIdeal) -> int:
        for i, q in enumerate(self.primes):
            if q.face.gen_mask == p.face.gen_mask:
                return i
        raise KeyError("prime not in this spectrum")


def _cover_relation(order) -> dict[int, list[int]]:
    n = len(order)
    covers: dict[int, list[int]] = {i: [] for i in range(n)}
    for i in range(n):
        for j in range(n):
            if i == j or not order[i][j]:
                continue
            if any(k != i and k != j and order[i][k] and order[k][j] for k in range(n)):
                continue
            covers[i].append(j)
    return covers


def spec(m: AffineMonoid) -> SpecPoset:
    prs = [PrimeIdeal(f) for f in faces(m)]
    prs.sort(key=lambda p: (-len(p.face.gen_mask), tuple(sorted(p.face.gen_mask))))
    order = tuple(
        tuple(q.face.gen_mask <= p.face.gen_mask for q in prs) for p in prs
    )
    return SpecPoset(m, tuple(prs), order)


def dimension(m: AffineMonoid) -> int:
    """Krull dimension: the longest chain of primes."""
    return spec(m).dimension()


def height(p: PrimeIdeal) -> int:
    s = spec(p.monoid)
    return s.heights()[s.index_of(p)]


def height_one_primes(m: AffineMonoid) -> list[PrimeIdeal]:
    s = spec(m)
    hs = s.heights()
    return [p for p, h in zip(s.primes, hs) if h == 1]


def localize(m: AffineMonoid, f: Face) -> tuple[AffineMonoid, MonoidHom]:
    """Localization M_F: invert the face, i.e. adjoin -g for g in F."""
    gens = list(m.gens)
    for i in sorted(f.gen_mask):
        gens.append(-m.gens[i])
    loc = AffineMonoid.from_generators(m.ambient, gens)
    return loc, MonoidHom(m, loc, m.gens)


# ---------------------------------------------------------------------------
# monoid ideals


@dataclass(frozen=True)
class MonoidIdeal:
    """Ideal of an affine monoid, given by finitely many generators.

    Semantics: I = {q in M : s <= q for some generator s}.  Empty generator
    list means the empty ideal.
    """

    monoid: AffineMonoid
    gens: tuple[GroupElement, ...]

    @classmethod
    def generated(cls, monoid: AffineMonoid, gens: Iterable[GroupElement]) -> "MonoidIdeal":
        out = []
        for g in gens:
            if not monoid.contains(g):
                raise AmbientMismatch("ideal generator outside the monoid")
            out.append(g)
        canon = sorted({g.key(): g for g in out}.values())
        return cls(monoid, tuple(canon))

    def contains(self, q: GroupElement) -> bool:
        if not self.monoid.contains(q):
            return False
        return any(self.monoid.divides(s, q) for s in self.gens)

    def is_empty_ideal(self) -> bool:
        return not self.gens

    def is_proper(self) -> bool:
        """Proper iff it misses 0, i.e. no generator is a unit."""
        units = self.monoid.units
        return all(not units.contains(g) for g in self.gens)

    def _same(self, other: "MonoidIdeal"):
        if self.monoid != other.monoid:
            raise MonoidMismatch("ideals over different monoids")


def ideal_contains(i: MonoidIdeal, q: GroupElement) -> bool:
    return i.contains(q)


def ideal_union(i: MonoidIdeal, j: MonoidIdeal) -> MonoidIdeal:
    """Union (= sum) of ideals: generated by both generator lists."""
    i._same(j)
    return MonoidIdeal.generated(i.monoid, list(i.gens) + list(j.gens))


ideal_sum = ideal_union


def ideal_product(i: MonoidIdeal, j: MonoidIdeal) -> MonoidIdeal:
    """IJ = all i+j; generated by pairwise sums."""
    i._same(j)
    return MonoidIdeal.generated(
        i.monoid, [a + b for a in i.gens for b in j.gens]
    )


def ideal_power(i: MonoidIdeal, n: int) -> MonoidIdeal:
    """I^n, with I^0 the unit ideal (generated by 0)."""
    out = MonoidIdeal.generated(i.monoid, [i.monoid.ambient.zero()])
    for _ in range(n):
        out = ideal_product(out, i)
    return out


def ideal_intersection_contains(i: MonoidIdeal, j: MonoidIdeal, q: GroupElement) -> bool:
    """Exact membership predicate for the intersection."""
    i._same(j)
    return i.contains(q) and j.contains(q)


def ideal_intersection(i: MonoidIdeal, j: MonoidIdeal, word_bound: int = 6) -> MonoidIdeal:
    """Generators of I ∩ J found among sums of at most ``word_bound``
    generators of the monoid, minimalized.  The membership predicate
    (:func:`ideal_intersection_contains`) stays exact regardless of the
    bound."""
    i._same(j)
    hits = [
        x
        for x in _bounded_elements(i.monoid, word_bound)
        if ideal_intersection_contains(i, j, x)
    ]
    probe = MonoidIdeal.generated(i.monoid, hits)
    return MonoidIdeal(i.monoid, tuple(minimal_ideal_generators(probe)))


def minimal_ideal_generators(i: MonoidIdeal) -> list[GroupElement]:
    """An antichain of generators, unique up to unit translation."""
    kept: list[GroupElement] = []
    gens = sorted(i.gens)
    for idx, s in enumerate(gens):
        redundant = False
        for jdx, t in enumerate(gens):
            if idx == jdx:
                continue
            if i.monoid.divides(t, s):
                if i.monoid.divides(s, t):
                    # mutually divisible (unit translates): keep the first
                    if jdx < idx:
                        redundant = True
                        break
                else:
                    redundant = True
                    break
        if not redundant:
            kept.append(s)
    return kept


# ---------------------------------------------------------------------------
# radicals and primary ideals


def primes_containing(k: MonoidIdeal) -> list[PrimeIdeal]:
    out = []
    for p in spec(k.monoid).primes:
        if all(p.contains(g) for g in k.gens):
            out.append(p)
    return out


def radical_contains(k: MonoidIdeal, q: GroupElement) -> bool:
    """q is in sqrt(K): q lies in every prime containing K.

    Equivalent to nq in K for some n > 0.
    """
    if not k.monoid.contains(q):
        return False
    ps = primes_containing(k)
    return all(p.contains(q) for p in ps)


def radical_generators(k: MonoidIdeal) -> list[GroupElement]:
    """Exact generators of sqrt(K) = the intersection of its minimal primes.

    A minimal element of the complement of a union of faces is a sum of at
    most one generator per face, so candidates are the sums of one
    non-face generator for each minimal prime.
    """
    mins = _minimal_primes_over(k)
    if not mins:
        # K = M (contains a unit): radical is M, generated by 0
        return [k.monoid.ambient.zero()]
    choice_lists = []
    for p in mins:
        outside = [g for i, g in enumerate(k.monoid.gens) if i not in p.face.gen_mask]
        if not outside:
            return []
        choice_lists.append(outside)
    cands = set()
    for combo in product(*choice_lists):
        acc = k.monoid.ambient.zero()
        for g in set(combo):
            acc = acc + g
        cands.add(acc)
    probe = MonoidIdeal.generated(k.monoid, sorted(cands))
    return minimal_ideal_generators(probe)


def _minimal_primes_over(k: MonoidIdeal) -> list[PrimeIdeal]:
    ps = primes_containing(k)
    out = []
    for p in ps:
        if not any(q is not p and q.face.gen_mask > p.face.gen_mask for q in ps):
            out.append(p)
    return out


def radical_is_prime(k: MonoidIdeal) -> Optional[PrimeIdeal]:
    """The unique minimal prime over K when the radical is prime, else None."""
    mins = _minimal_primes_over(k)
    if len(mins) == 1:
        return mins[0]
    return None


@dataclass(frozen=True)
class PrimaryVerdict:
    status: TriState
    witness: Optional[tuple[GroupElement, GroupElement]] = None


def is_primary(k: MonoidIdeal, bound: int = 6) -> PrimaryVerdict:
    """Primary test: no a outside sqrt(K) and x outside K with a + x in K.

    Exact whenever the colon-module computation fits the cone dimension cap:
    violations close under face generators on the a side, and on the x side
    the minimal elements of (K : g) are computed as a Hilbert-basis slice.
    ``bound`` is the fallback word-length for the witness search when the
    exact computation exceeds its budget (verdict Unknown in that case).
    """
    if not k.is_proper():
        raise ImproperIdeal("primary test requires a proper ideal")
    m = k.monoid
    p = radical_is_prime(k)
    if p is None:
        return PrimaryVerdict(TriState.FALSE, _nonprime_radical_witness(k))
    face_gens = [m.gens[i] for i in sorted(p.face.gen_mask)]
    try:
        for g in face_gens:
            for x in _colon_module_generators(k, g):
                if not k.contains(x):
                    return PrimaryVerdict(TriState.FALSE, (g, x))
        return PrimaryVerdict(TriState.TRUE)
    except (SearchBudgetExceeded, DimensionLimitExceeded):
        pass

    box = _bounded_elements(m, bound)
    for g in face_gens:
        for x in box:
            if not k.contains(x) and k.contains(x + g):
                return PrimaryVerdict(TriState.FALSE, (g, x))
    return PrimaryVerdict(TriState.UNKNOWN)


def _nonprime_radical_witness(k: MonoidIdeal) -> Optional[tuple[GroupElement, GroupElement]]:
    """(a, x) with a outside sqrt(K), x outside K, a + x in K.

    Take a, b as the sums of all generators of two distinct minimal primes'
    faces: both lie outside sqrt(K), while a + b lands in it (a face
    containing a + b would contain both faces, contradicting minimality).
    Then walk j a + n b down from n(a + b) in K until membership flips.
    """
    m = k.monoid
    mins = _minimal_primes_over(k)
    if len(mins) < 2:
        return None
    avals = []
    for p in mins[:2]:
        acc = m.ambient.zero()
        for i in sorted(p.face.gen_mask):
            acc = acc + m.gens[i]
        avals.append(acc)
    a, b = avals
    n = 1
    while n <= 512 and not k.contains((a + b).scale(n)):
        n += 1
    assert k.contains((a + b).scale(n)), "a+b is in the radical, a power must land in K"
    prev = b.scale(n)
    for j in range(1, n + 1):
        cur = a.scale(j) + b.scale(n)
        if k.contains(cur):
            return (a, prev)
        prev = cur
    return None


def _colon_module_generators(k: MonoidIdeal, g: GroupElement) -> list[GroupElement]:
    """Generators of (K : g) = {x in M : x + g in K}, exactly.

    For each ideal generator k_i this solves x + g - k_i in M with x in M:
    nonnegative solutions (a, b) of  sum a_j g_j - sum b_j g_j = k_i - g
    over the ambient group, obtained as the t=1 slice of the Hilbert basis of
    the homogenized system.
    """
    m = k.monoid
    ggens = m.gens
    kk = len(ggens)
    t_len = len(m.ambient.torsion)
    out = []
    for ki in k.gens:
        v = ki - g
        rows = []
        lift_dim = m.ambient.lift_dim
        for r in range(lift_dim):
            row = []
            for gg in ggens:
                row.append(gg.lift()[r])
            for gg in ggens:
                row.append(-gg.lift()[r])
            for j in range(t_len):
                d = m.ambient.torsion[j]
                row.append(d if r == m.ambient.free_rank + j else 0)
                row.append(-d if r == m.ambient.free_rank + j else 0)
            row.append(-v.lift()[r])
            rows.append(row)
        nvars = 2 * kk + 2 * t_len + 1
        for z in cones.nonneg_kernel_hilbert_basis(rows, nvars):
            if z[-1] != 1:
                continue
            x = m.ambient.zero()
            for c, gg in zip(z[:kk], ggens):
                x = x + gg.scale(c)
            out.append(x)
    dedup = sorted({x.key(): x for x in out}.values())
    return dedup


def is_radical_ideal(k: MonoidIdeal) -> bool:
    """Exact test K = sqrt(K), via the computed radical generators."""
    return all(k.contains(x) for x in radical_generators(k))


# ---------------------------------------------------------------------------
# idealized monoids


@dataclass(frozen=True)
class IdealizedMonoid:
    """Pair (M, K) with K a proper ideal, or M the zero monoid."""

    monoid: AffineMonoid
    k: MonoidIdeal

    def __post_init__(self):
        if self.k.monoid != self.monoid:
            raise MonoidMismatch("ideal over a different monoid")
        if self.monoid.gens and not self.k.is_proper():
            raise NotAcceptable("K must be proper unless the monoid is zero")


def spec_idealized(im: IdealizedMonoid) -> SpecPoset:
    """Sub-poset of Spec(M): primes containing K."""
    s = spec(im.monoid)
    keep = [i for i, p in enumerate(s.primes) if all(p.contains(g) for g in im.k.gens)]
    primes = tuple(s.primes[i] for i in keep)
    order = tuple(tuple(s.order[i][j] for j in keep) for i in keep)
    return SpecPoset(im.monoid, primes, order)


def zariski_closed_set(i: MonoidIdeal) -> frozenset[frozenset[int]]:
    """Z(I): face masks of the primes containing I."""
    return frozenset(p.face.gen_mask for p in primes_containing(i))


# ---------------------------------------------------------------------------
# DOT emission


def _mask_label(m: AffineMonoid, mask: frozenset[int]) -> str:
    if not mask:
        return "{}"
    return "{" + ",".join(str(i) for i in sorted(mask)) + "}"


def spec_dot(s: SpecPoset) -> str:
    """DOT digraph of the spectrum; edges follow the covering relation,
    node labels are the complement-face generator masks."""
    lines = ["digraph spec {", '  rankdir="BT";']
    for i, p in enumerate(s.primes):
        label = _mask_label(s.monoid, p.face.gen_mask)
        shape = "doublecircle" if i == s.generic_index else "ellipse"
        lines.append(f'  n{i} [label="face {label}" shape={shape}];')
    covers = _cover_relation(s.order)
    for i in sorted(covers):
        for j in sorted(covers[i]):
            lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def face_lattice_dot(m: AffineMonoid) -> str:
    fs = faces(m)
    order = [[f1.gen_mask <= f2.gen_mask for f2 in fs] for f1 in fs]
    lines = ["digraph faces {", '  rankdir="BT";']
    for i, f in enumerate(fs):
        lines.append(f'  n{i} [label="{_mask_label(m, f.gen_mask)}"];')
    covers = _cover_relation(order)
    for i in sorted(covers):
        for j in sorted(covers[i]):
            lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
