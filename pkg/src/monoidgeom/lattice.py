"""Exact integer linear algebra: Smith normal form, kernels, cokernels,
finitely generated abelian groups and bounded nonnegative solving.

Everything here works over arbitrary-precision Python integers; matrices are
plain lists of lists internally, with a thin :class:`IntMatrix` wrapper on the
public surface.  All functions are pure and all returned containers are fresh.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .errors import DimensionMismatch

Vec = tuple[int, ...]


# ---------------------------------------------------------------------------
# matrices


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, row-major."""

    rows: int
    cols: int
    entries: tuple[Vec, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatch(f"expected {self.rows}x{self.cols} entries")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(rows))

    def tolists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows(transpose(self.tolists()), self.rows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix.from_rows(mat_mul(self.tolists(), other.tolists()), other.cols)

    def diagonal(self) -> list[int]:
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]


def transpose(m: list[list[int]]) -> list[list[int]]:
    if not m:
        return []
    return [list(col) for col in zip(*m)]


def mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    if not a:
        return []
    inner = len(a[0])
    if inner != len(b):
        raise DimensionMismatch("matrix product shape mismatch")
    if inner == 0:
        return [[0] * (len(b[0]) if b else 0) for _ in a]
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a: list[list[int]], v: Sequence[int]) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _smith(a: list[list[int]]):
    """Smith normal form with transforms: returns (U, D, V) with U@a@V = D.

    U, V are unimodular; D is diagonal with d_i | d_{i+1} and d_i >= 0.
    """
    m = len(a)
    n = len(a[0]) if a else 0
    D = [list(r) for r in a]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in D:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(i, j, c):
        # row_i += c * row_j
        D[i] = [x + c * y for x, y in zip(D[i], D[j])]
        U[i] = [x + c * y for x, y in zip(U[i], U[j])]

    def add_col(i, j, c):
        # col_i += c * col_j
        for r in D:
            r[i] += c * r[j]
        for r in V:
            r[i] += c * r[j]

    def negate_row(i):
        D[i] = [-x for x in D[i]]
        U[i] = [-x for x in U[i]]

    t = 0
    while t < min(m, n):
        # find a pivot: smallest nonzero entry in the remaining block
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] != 0 and (piv is None or abs(D[i][j]) < abs(D[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        if D[t][t] < 0:
            negate_row(t)
        # clear row and column t by repeated remainder reduction
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, m):
                if D[i][t] != 0:
                    q = D[i][t] // D[t][t]
                    add_row(i, t, -q)
                    if D[i][t] != 0:
                        swap_rows(t, i)
                        if D[t][t] < 0:
                            negate_row(t)
                        dirty = True
            for j in range(t + 1, n):
                if D[t][j] != 0:
                    q = D[t][j] // D[t][t]
                    add_col(j, t, -q)
                    if D[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
        # divisibility fix-up: fold any entry not divisible by the pivot
        fixed = False
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if D[i][j] % D[t][t] != 0:
                    add_row(t, i, 1)
                    fixed = True
                    break
            if fixed:
                break
        if fixed:
            continue
        t += 1
    return U, D, V


def smith_normal_form(a: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """U @ a @ V = D with U, V unimodular and D diagonal, d_i | d_{i+1}."""
    U, D, V = _smith(a.tolists())
    return (
        IntMatrix.from_rows(U, a.rows),
        IntMatrix.from_rows(D, a.cols),
        IntMatrix.from_rows(V, a.cols),
    )


def rank(a: list[list[int]]) -> int:
    """Rank over the rationals, by fraction-free elimination."""
    m = [list(r) for r in a]
    if not m or not m[0]:
        return 0
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, rows):
            if m[i][c] != 0:
                p, q = m[r][c], m[i][c]
                m[i] = [p * x - q * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == rows:
            break
    return r


def kernel_basis(a: list[list[int]], ncols: Optional[int] = None) -> list[list[int]]:
    """Basis (as rows) of the saturated lattice {x : a @ x = 0} in Z^ncols."""
    n = ncols if ncols is not None else (len(a[0]) if a else 0)
    if n == 0:
        return []
    if not a:
        return identity(n)
    m = len(a)
    U, D, V = _smith(a)
    out = []
    for j in range(n):
        d = D[j][j] if j < m else 0
        if d == 0:
            out.append([V[r][j] for r in range(n)])
    return out


def solve_integer(a: list[list[int]], b: Sequence[int]) -> Optional[list[int]]:
    """One integer solution x of a @ x = b, or None if none exists."""
    m = len(a)
    if m == 0:
        return []
    n = len(a[0])
    if len(b) != m:
        raise DimensionMismatch("rhs length mismatch")
    if n == 0:
        return [] if all(x == 0 for x in b) else None
    U, D, V = _smith(a)
    c = mat_vec(U, b)
    y = [0] * n
    for i in range(m):
        d = D[i][i] if i < n else 0
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d != 0:
                return None
            if i < n:
                y[i] = c[i] // d
    return mat_vec(V, y)


def lattice_contains(basis_rows: list[list[int]], v: Sequence[int]) -> bool:
    """Whether v lies in the lattice spanned by the given rows."""
    if not basis_rows:
        return all(x == 0 for x in v)
    return solve_integer(transpose(basis_rows), v) is not None


def row_space_basis(a: list[list[int]]) -> list[list[int]]:
    """Basis rows of the lattice spanned by the rows of a."""
    if not a or not a[0]:
        return []
    U, D, V = _smith(a)
    vt_inv_rows = _invert_unimodular(V)  # rows of V^{-1}
    out = []
    for i in range(min(len(a), len(a[0]))):
        d = D[i][i]
        if d != 0:
            out.append([d * x for x in vt_inv_rows[i]])
    return out


def _invert_unimodular(v: list[list[int]]) -> list[list[int]]:
    """Inverse of a unimodular matrix, via SNF of v (exact)."""
    n = len(v)
    if n == 0:
        return []
    U, D, W = _smith(v)
    if any(D[i][i] != 1 for i in range(n)):
        raise ValueError("matrix is not unimodular")
    # U v W = I, hence v^{-1} = W U
    return mat_mul(W, U)


# ---------------------------------------------------------------------------
# abelian groups


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group Z^free_rank + sum Z/d_i, d_i | d_{i+1}."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if any(d < 2 for d in self.torsion):
            raise ValueError("torsion invariants must be >= 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError("torsion invariants must form a divisibility chain")

    @property
    def lift_dim(self) -> int:
        return self.free_rank + len(self.torsion)

    def element(self, free: Iterable[int] = (), tors: Iterable[int] = ()) -> "GroupElement":
        free = tuple(int(x) for x in free)
        tors = tuple(int(x) for x in tors)
        if len(free) != self.free_rank or len(tors) != len(self.torsion):
            raise DimensionMismatch(
                f"element shape ({len(free)},{len(tors)}) does not match group ({self.free_rank},{len(self.torsion)})"
            )
        tors = tuple(t % d for t, d in zip(tors, self.torsion))
        return GroupElement(self, free, tors)

    def from_flat(self, coords: Sequence[int]) -> "GroupElement":
        coords = list(coords)
        if len(coords) != self.lift_dim:
            raise DimensionMismatch("flat coordinate length mismatch")
        return self.element(coords[: self.free_rank], coords[self.free_rank:])

    def zero(self) -> "GroupElement":
        return self.element((0,) * self.free_rank, (0,) * len(self.torsion))

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def torsion_relation_rows(self) -> list[list[int]]:
        """Rows in lift coordinates spanning the torsion relations d_i * e_{r+i}."""
        n = self.lift_dim
        rows = []
        for i, d in enumerate(self.torsion):
            row = [0] * n
            row[self.free_rank + i] = d
            rows.append(row)
        return rows

    def elements(self) -> Iterable["GroupElement"]:
        """All elements; only for finite groups."""
        if self.free_rank:
            raise ValueError("infinite group")
        import itertools

        for tors in itertools.product(*(range(d) for d in self.torsion)):
            yield self.element((), tors)


@dataclass(frozen=True)
class GroupElement:
    """Element of an :class:`AbelianGroup` in reduced coordinates."""

    group: AbelianGroup
    free: Vec
    tors: Vec

    def lift(self) -> list[int]:
        return list(self.free) + list(self.tors)

    def _check(self, other: "GroupElement"):
        if self.group != other.group:
            raise DimensionMismatch("elements of different groups")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return self.group.element(
            tuple(a + b for a, b in zip(self.free, other.free)),
            tuple(a + b for a, b in zip(self.tors, other.tors)),
        )

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return self.group.element(
            tuple(a - b for a, b in zip(self.free, other.free)),
            tuple(a - b for a, b in zip(self.tors, other.tors)),
        )

    def __neg__(self) -> "GroupElement":
        return self.group.element(tuple(-a for a in self.free), tuple(-a for a in self.tors))

    def scale(self, n: int) -> "GroupElement":
        return self.group.element(tuple(n * a for a in self.free), tuple(n * a for a in self.tors))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.free) and all(a == 0 for a in self.tors)

    def key(self) -> tuple:
        return (self.free, self.tors)

    def __lt__(self, other: "GroupElement") -> bool:
        return self.key() < other.key()


# ---------------------------------------------------------------------------
# quotients and cokernels


@dataclass(frozen=True)
class GroupQuotient:
    """Quotient q: source -> target with an explicit integer section.

    ``proj_rows`` act on lift coordinates of the source; the first
    ``target.free_rank`` rows give free coordinates, the rest torsion
    representatives (reduced mod the target invariants afterwards).
    ``section_cols`` maps target lift coordinates back to source lift
    coordinates (a right inverse of the projection modulo relations).
    """

    source: AbelianGroup
    target: AbelianGroup
    proj_rows: tuple[Vec, ...]
    section_cols: tuple[Vec, ...]

    def apply(self, x: GroupElement) -> GroupElement:
        if x.group != self.source:
            raise DimensionMismatch("element not in quotient source")
        coords = mat_vec([list(r) for r in self.proj_rows], x.lift())
        return self.target.from_flat(coords)

    def section(self, y: GroupElement) -> GroupElement:
        if y.group != self.target:
            raise DimensionMismatch("element not in quotient target")
        coords = mat_vec([list(r) for r in self.section_cols], y.lift())
        return self.source.from_flat(coords)


def quotient_by(group: AbelianGroup, elements: Sequence[GroupElement]) -> GroupQuotient:
    """Quotient of ``group`` by the subgroup generated by ``elements``."""
    n = group.lift_dim
    rows = group.torsion_relation_rows()
    for e in elements:
        if e.group != group:
            raise DimensionMismatch("subgroup generator not in group")
        rows.append(e.lift())
    return _quotient_of_lift_lattice(group, rows)


def _quotient_of_lift_lattice(group: AbelianGroup, relation_rows: list[list[int]]) -> GroupQuotient:
    """Quotient of the lift lattice Z^n of ``group`` by given relation rows.

    relation_rows must include the torsion relations of ``group`` so the
    projection is well defined on the group itself.
    """
    n = group.lift_dim
    if not relation_rows:
        relation_rows = [[0] * n] if n else []
    cols = transpose(relation_rows) if relation_rows else [[] for _ in range(n)]
    if n == 0:
        target = AbelianGroup(0, ())
        return GroupQuotient(group, target, (), ())
    if not cols:
        cols = [[0] for _ in range(n)]
    U, D, V = _smith(cols)
    m = len(cols[0])
    diag = [D[i][i] if i < m else 0 for i in range(n)]
    u_inv = _invert_unimodular(U)  # columns of U^{-1} are preimages of unit vectors
    tors_idx = [i for i in range(n) if diag[i] not in (0, 1)]
    free_idx = [i for i in range(n) if diag[i] == 0]
    torsion = tuple(diag[i] for i in tors_idx)
    target = AbelianGroup(len(free_idx), torsion)

    proj = []
    for i in free_idx:
        row = list(U[i])
        # sign-normalize free rows so emitted coordinates are reproducible
        first = next((x for x in row if x != 0), 0)
        if first < 0:
            row = [-x for x in row]
        proj.append(tuple(row))
    for i in tors_idx:
        proj.append(tuple(U[i]))

    # section: unit target coordinate k lifts to column of U^{-1}
    sec_cols = []
    for i in free_idx + tors_idx:
        col = [u_inv[r][i] for r in range(n)]
        if i in free_idx:
            row = list(U[i])
            first = next((x for x in row if x != 0), 0)
            if first < 0:
                col = [-x for x in col]
        sec_cols.append(col)
    section_rows = transpose(sec_cols) if sec_cols else [[] for _ in range(n)]
    return GroupQuotient(group, target, tuple(proj), tuple(tuple(r) for r in section_rows))


def cokernel(a: IntMatrix) -> tuple[AbelianGroup, GroupQuotient]:
    """Cokernel of the relation rows of ``a`` acting on Z^cols.

    Returns the quotient group Z^cols / rowspan(a) together with the
    projection (and a section) realizing it.
    """
    ambient = AbelianGroup(a.cols, ())
    q = _quotient_of_lift_lattice(ambient, a.tolists())
    return q.target, q


# ---------------------------------------------------------------------------
# subgroups

@dataclass(frozen=True)
class Subgroup:
    """Subgroup of an ambient group given by a finite generator list."""

    ambient: AbelianGroup
    gens: tuple[GroupElement, ...]

    def contains(self, x: GroupElement) -> bool:
        if x.group != self.ambient:
            raise DimensionMismatch("element outside ambient group")
        rows = [g.lift() for g in self.gens] + self.ambient.torsion_relation_rows()
        if not rows:
            return x.is_zero()
        return solve_integer(transpose(rows), x.lift()) is not None

    def rank(self) -> int:
        return rank([list(g.free) for g in self.gens]) if self.gens else 0

    def is_trivial(self) -> bool:
        return all(g.is_zero() for g in self.gens)

    @property
    def _abstract(self) -> "GroupQuotient":
        """Quotient Z^k -> abstract subgroup structure (k = #gens)."""
        cached = self.__dict__.get("_abstract_cache")
        if cached is not None:
            return cached
        k = len(self.gens)
        t = len(self.ambient.torsion)
        free_amb = AbelianGroup(k, ())
        lift_rows = [g.lift() for g in self.gens] + self.ambient.torsion_relation_rows()
        rows = transpose(lift_rows)
        ker = kernel_basis(rows, ncols=k + t)
        ker_first = [r[:k] for r in ker]
        q = _quotient_of_lift_lattice(free_amb, ker_first)
        object.__setattr__(self, "_abstract_cache", q)
        return q

    def invariants(self) -> tuple[int, tuple[int, ...]]:
        """(free rank, torsion chain) of the abstract subgroup."""
        if not self.gens:
            return 0, ()
        q = self._abstract
        return q.target.free_rank, q.target.torsion

    def coeffs(self, x: GroupElement) -> Optional[list[int]]:
        """Integer coefficients over the generators, if x lies in the subgroup."""
        if x.group != self.ambient:
            raise DimensionMismatch("element outside ambient group")
        k = len(self.gens)
        rows = [g.lift() for g in self.gens] + self.ambient.torsion_relation_rows()
        if not rows:
            return [] if x.is_zero() else None
        sol = solve_integer(transpose(rows), x.lift())
        return None if sol is None else sol[:k]

    def abstract_coords(self, x: GroupElement) -> GroupElement:
        """Coordinates of x in the abstract structure Z^free + torsion."""
        c = self.coeffs(x)
        if c is None:
            raise DimensionMismatch("element not in the subgroup")
        free_amb = AbelianGroup(len(self.gens), ())
        return self._abstract.apply(free_amb.element(c))


# ---------------------------------------------------------------------------
# bounded nonnegative solving


def solve_nonneg(
    gens: Sequence[GroupElement],
    target: GroupElement,
    bound: int,
    degree: Optional[Callable[[GroupElement], int]] = None,
) -> Optional[list[int]]:
    """Lexicographically smallest n in N^k with sum n_i gens_i = target.

    The search is over coefficient vectors with total sum <= bound.  When the
    caller derives ``bound`` from a strictly positive grading (so that any
    solution must satisfy the budget), None is a proof of infeasibility;
    otherwise it only means no solution within the budget.  An optional
    ``degree`` functional prunes branches whose remaining degree cannot reach
    zero.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    group = target.group
    for g in gens:
        if g.group != group:
            raise DimensionMismatch("generators and target in different groups")
    k = len(gens)
    memo: dict[tuple[int, tuple, int], Optional[list[int]]] = {}

    def rec(i: int, rest: GroupElement, budget: int) -> Optional[list[int]]:
        if rest.is_zero():
            return [0] * (k - i)
        if i == k:
            return None
        key = (i, rest.key(), budget)
        if key in memo:
            return memo[key]
        result = None
        g = gens[i]
        top = budget
        if degree is not None:
            dg = degree(g)
            if dg > 0:
                top = min(top, degree(rest) // dg if degree(rest) >= 0 else -1)
        if top < 0:
            memo[key] = None
            return None
        cur = rest
        for c in range(0, top + 1):
            if degree is not None and degree(cur) < 0:
                break
            tail = rec(i + 1, cur, budget - c)
            if tail is not None:
                result = [c] + tail
                break
            cur = cur - g
        memo[key] = result
        return result

    return rec(0, target, bound)
