"""Rational polyhedral cones over the integers: dual descriptions, lineality,
facet tests and Hilbert bases.

Cones are handled through primitive integer vectors.  The double description
iteration keeps an explicit lineality basis, so dual cones of arbitrary
(possibly non-spanning, possibly non-pointed) generator sets come out exact.
Hilbert bases are computed for pointed cones by enumerating the lattice points
of the generator zonotope and reducing to the irreducible ones; every element
of the basis lies in that zonotope, so the enumeration is complete.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Sequence

from .errors import DimensionLimitExceeded, NotPointed, SearchBudgetExceeded
from .lattice import identity, kernel_basis, rank

Vec = tuple[int, ...]

DIMENSION_CAP = 6
ENUMERATION_CAP = 2_000_000


def primitive(v: Sequence[int]) -> Vec:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return tuple(0 for _ in v)
    return tuple(x // g for x in v)


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class ConeDescription:
    """Cone described both ways: span(lin) + cone(rays) = {x : eq·x = 0, ineq·x >= 0}."""

    dim: int
    lin: tuple[Vec, ...]
    rays: tuple[Vec, ...]
    equalities: tuple[Vec, ...]
    inequalities: tuple[Vec, ...]

    def contains(self, x: Sequence[int]) -> bool:
        return all(dot(e, x) == 0 for e in self.equalities) and all(
            dot(h, x) >= 0 for h in self.inequalities
        )

    def contains_strictly(self, x: Sequence[int]) -> bool:
        """Relative interior membership."""
        return all(dot(e, x) == 0 for e in self.equalities) and all(
            dot(h, x) > 0 for h in self.inequalities
        )

    def is_pointed(self) -> bool:
        return not self.lin

    def lineality_basis(self) -> list[Vec]:
        return list(self.lin)


def dual_rays(rays: Sequence[Sequence[int]], dim: int) -> tuple[list[Vec], list[Vec]]:
    """Generators of the dual cone {h : h·r >= 0 for all r}.

    Returns (lineality basis, rays).  The lineality basis spans the annihilator
    of the input rays; the rays include every facet normal of cone(rays), so
    together they generate the dual cone exactly.  Works by enumerating the
    hyperplanes spanned by subsets of input rays inside their linear span,
    which is complete because every face of a finitely generated cone is the
    cone of the generators lying on it.
    """
    from itertools import combinations

    from .lattice import solve_integer, transpose

    prim = sorted({primitive(r) for r in rays if any(x != 0 for x in r)})
    if not prim:
        return [tuple(row) for row in identity(dim)], []
    a_rows = [list(r) for r in prim]
    lin = [primitive(v) for v in kernel_basis(a_rows, ncols=dim)]

    # saturated span W of the rays, with the rays rewritten in W-coordinates
    w_basis = kernel_basis([list(v) for v in lin], ncols=dim) if lin else identity(dim)
    k = len(w_basis)
    coords = []
    for r in prim:
        c = solve_integer(transpose(w_basis), list(r))
        assert c is not None
        coords.append(c)

    found: set[Vec] = set()
    if k == 1:
        if all(c[0] > 0 for c in coords):
            found.add((1,))
        elif all(c[0] < 0 for c in coords):
            found.add((-1,))
    else:
        for subset in combinations(range(len(coords)), k - 1):
            mat = [coords[i] for i in subset]
            if rank(mat) != k - 1:
                continue
            ker = kernel_basis(mat, ncols=k)
            if len(ker) != 1:
                continue
            v = primitive(ker[0])
            vals = [dot(v, c) for c in coords]
            if all(x >= 0 for x in vals):
                found.add(v)
            elif all(x <= 0 for x in vals):
                found.add(tuple(-x for x in v))

    lifted = []
    for h_w in found:
        h = solve_integer(w_basis, list(h_w))
        assert h is not None
        lifted.append(primitive(h))
    return sorted(lin), sorted(set(lifted))


def describe(rays: Sequence[Sequence[int]], dim: int) -> ConeDescription:
    """Full primal/dual description of cone(rays) in Z^dim."""
    prim = sorted({primitive(r) for r in rays if any(x != 0 for x in r)})
    dlin, drays = dual_rays(prim, dim)
    equalities = tuple(sorted({primitive(b) for b in dlin}))
    inequalities = tuple(drays)
    lin_rows = [list(h) for h in inequalities] + [list(e) for e in equalities]
    lin_lattice = kernel_basis(lin_rows, ncols=dim)
    lin = tuple(sorted(primitive(v) for v in lin_lattice if any(x != 0 for x in v)))
    return ConeDescription(dim, lin, tuple(prim), equalities, inequalities)


def hilbert_basis(
    rays: Sequence[Sequence[int]],
    dim: int,
    dimension_cap: int = DIMENSION_CAP,
    enumeration_cap: int = ENUMERATION_CAP,
) -> list[Vec]:
    """Minimal generating set of cone(rays) ∩ Z^dim, for pointed cones.

    The result is the unique minimal (irreducible) generator set, sorted
    lexicographically.  Raises NotPointed when the cone contains a line and
    DimensionLimitExceeded above the dimension cap.
    """
    if dim > dimension_cap:
        raise DimensionLimitExceeded(f"dimension {dim} exceeds cap {dimension_cap}")
    prim = sorted({primitive(r) for r in rays if any(x != 0 for x in r)})
    if not prim:
        return []
    desc = describe(prim, dim)
    if not desc.is_pointed():
        raise NotPointed("cone has nonzero lineality; no unique Hilbert basis")

    lo = [sum(min(0, r[t]) for r in prim) for t in range(dim)]
    hi = [sum(max(0, r[t]) for r in prim) for t in range(dim)]
    volume = 1
    for a, b in zip(lo, hi):
        volume *= (b - a + 1)
        if volume > enumeration_cap:
            raise SearchBudgetExceeded("zonotope box too large for exact enumeration")

    candidates = []
    for point in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if any(point) and desc.contains(point):
            candidates.append(point)

    cand_set = set(candidates)
    basis = []
    for x in candidates:
        reducible = False
        for y in candidates:
            if y == x:
                continue
            z = tuple(a - b for a, b in zip(x, y))
            if any(z) and desc.contains(z):
                reducible = True
                break
        if not reducible:
            basis.append(tuple(x))
    return sorted(basis)


def nonneg_kernel_hilbert_basis(
    eq_rows: Sequence[Sequence[int]],
    nvars: int,
    dimension_cap: int = DIMENSION_CAP,
    enumeration_cap: int = ENUMERATION_CAP,
) -> list[Vec]:
    """Hilbert basis of {z in N^nvars : eq_rows @ z = 0}.

    The solution set is the lattice-point monoid of the orthant sliced by the
    kernel; it is computed in kernel coordinates, where the slice is a pointed
    cone.
    """
    kb = kernel_basis([list(r) for r in eq_rows], ncols=nvars)
    kappa = len(kb)
    if kappa == 0:
        return []
    ineqs = [[kb[j][t] for j in range(kappa)] for t in range(nvars)]
    lin, rays = dual_rays(ineqs, kappa)
    assert not lin  # kernel basis rows are independent, the slice is pointed
    hb = hilbert_basis(rays, kappa, dimension_cap, enumeration_cap)
    out = []
    for y in hb:
        z = tuple(sum(y[j] * kb[j][t] for j in range(kappa)) for t in range(nvars))
        assert all(c >= 0 for c in z)
        out.append(z)
    return sorted(out)


def cone_lattice_generators(
    rays: Sequence[Sequence[int]], dim: int
) -> tuple[list[Vec], list[Vec]]:
    """Monoid generators of cone(rays) ∩ Z^dim for a possibly non-pointed cone.

    Returns (unit_generators, pointed_generators): the first list generates the
    lineality lattice as a group (both signs included), the second is the lift
    of the Hilbert basis of the pointed quotient.  Their union generates the
    full monoid of lattice points.
    """
    prim = sorted({primitive(r) for r in rays if any(x != 0 for x in r)})
    if not prim:
        return [], []
    desc = describe(prim, dim)
    lin = desc.lineality_basis()
    if not lin:
        return [], hilbert_basis(prim, dim)

    from .lattice import AbelianGroup, quotient_by

    amb = AbelianGroup(dim, ())
    q = quotient_by(amb, [amb.element(b) for b in lin])
    assert not q.target.torsion  # lineality lattice is saturated
    s = q.target.free_rank
    proj_rays = [tuple(q.apply(amb.element(r)).free) for r in prim]
    hb = hilbert_basis(proj_rays, s)
    lifted = []
    for h in hb:
        x = q.section(q.target.element(h))
        # shift the lift into the cone along the lineality lattice; any lift
        # differs from a cone point by a lineality vector, and C + lin = C
        lifted.append(tuple(x.free))
    units = []
    for b in lin:
        units.append(tuple(b))
        units.append(tuple(-x for x in b))
    return sorted(units), sorted(lifted)
