"""Order complex of a finite poset and its integral homology."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import SNFOverflowError
from .strata import StrataPoset

Matrix = list[list[int]]


@dataclass
class OrderComplex:
    """Simplicial complex of strict chains.

    ``vertices`` are poset node indices in increasing order; each simplex
    is a tuple of node indices listed in that same order, and
    ``simplices[k]`` holds the k-simplices sorted lexicographically.
    """

    vertices: list[int]
    simplices: list[list[tuple[int, ...]]] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.simplices) - 1

    def counts(self) -> list[int]:
        return [len(s) for s in self.simplices]


@dataclass
class ChainComplex:
    # boundaries[k] maps k-chains to (k-1)-chains, shape (#C_{k-1}, #C_k)
    boundaries: list[Matrix]
    ranks: list[int]  # number of k-simplices

    def shape(self, k: int) -> tuple[int, int]:
        return (self.ranks[k - 1] if k > 0 else 0, self.ranks[k])


@dataclass(frozen=True)
class SmithForm:
    factors: tuple[int, ...]  # nonzero invariant factors d_1 | d_2 | ...
    rank: int


@dataclass(frozen=True)
class HomologyGroup:
    degree: int
    betti: int
    torsion: tuple[int, ...]

    def __str__(self):
        parts = []
        if self.betti:
            parts.append("Z" if self.betti == 1 else f"Z^{self.betti}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) or "0"


def order_complex(P: StrataPoset, *, boundary_only: bool = False) -> OrderComplex:
    """Nerve of the strata poset, or of its proper part below the smooth stratum."""
    vertices = [i for i in range(len(P)) if not (boundary_only and i == P.maximum)]
    allowed = set(vertices)
    # below[i]: elements strictly below i, i.e. strictly more degenerate
    below = {i: [] for i in vertices}
    for j in vertices:
        for i in P.up[j]:
            if i != j and i in allowed:
                below[i].append(j)
    for i in below:
        below[i].sort()

    simplices: list[list[tuple[int, ...]]] = []
    layer = [(i,) for i in vertices]
    while layer:
        simplices.append(layer)
        # node indices grow with codim, so extending downward keeps chains sorted
        layer = [chain + (j,) for chain in layer for j in below[chain[-1]]]
    return OrderComplex(vertices, simplices)


def boundary_matrices(X: OrderComplex) -> ChainComplex:
    ranks = X.counts()
    boundaries: list[Matrix] = [[] for _ in ranks]  # boundary_0 has no rows
    for k in range(1, len(ranks)):
        row_of = {s: r for r, s in enumerate(X.simplices[k - 1])}
        M = [[0] * ranks[k] for _ in range(ranks[k - 1])]
        for c, s in enumerate(X.simplices[k]):
            for i in range(len(s)):
                face = s[:i] + s[i + 1 :]
                M[row_of[face]][c] += -1 if i % 2 else 1
        boundaries[k] = M
    return ChainComplex(boundaries, ranks)


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if not A or not B:
        return [[] for _ in A]
    cols = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in A]


def _sparse_columns(M: Matrix) -> list[dict[int, int]]:
    width = len(M[0]) if M else 0
    cols: list[dict[int, int]] = [{} for _ in range(width)]
    for i, row in enumerate(M):
        for j, x in enumerate(row):
            if x:
                cols[j][i] = x
    return cols


def boundary_squares_vanish(C: ChainComplex) -> bool:
    for k in range(2, len(C.ranks)):
        outer = _sparse_columns(C.boundaries[k - 1])
        for col in _sparse_columns(C.boundaries[k]):
            acc: dict[int, int] = {}
            for mid, a in col.items():
                for row, b in outer[mid].items():
                    acc[row] = acc.get(row, 0) + a * b
            if any(acc.values()):
                return False
    return True


def _checked(x: int, limit: int | None) -> int:
    if limit is not None and abs(x) >= limit:
        raise SNFOverflowError(f"entry {x} exceeds the {limit.bit_length()}-bit working range")
    return x


def _unit_eliminate(M, limit):
    """Sparse elimination on unit pivots.

    Returns the number of unit pivots removed and the leftover rows as
    sparse dicts (columns still indexed as in ``M``).
    """
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for i, row in enumerate(M):
        entries = {j: _checked(int(x), limit) for j, x in enumerate(row) if x}
        if entries:
            rows[i] = entries
            for j in entries:
                cols.setdefault(j, set()).add(i)
    units = 0
    for c in sorted(cols):
        candidates = [r for r in cols.get(c, ()) if abs(rows[r][c]) == 1]
        if not candidates:
            continue
        r = min(candidates, key=lambda x: (len(rows[x]), x))
        pivot_row = rows.pop(r)
        p = pivot_row[c]
        for j in pivot_row:
            cols[j].discard(r)
        for other in sorted(cols[c]):
            target = rows[other]
            q = target[c] * p  # p is its own inverse
            for j, v in pivot_row.items():
                x = _checked(target.get(j, 0) - q * v, limit)
                if x:
                    if j not in target:
                        cols[j].add(other)
                    target[j] = x
                else:
                    target.pop(j, None)
                    cols[j].discard(other)
            if not target:
                del rows[other]
        del cols[c]
        units += 1
    return units, rows


def smith_normal_form(M: Sequence[Sequence[int]], *, word_bits: int | None = None) -> SmithForm:
    """Invariant factors and rank of an integer matrix.

    Unit pivots are eliminated sparsely first; whatever remains goes
    through the dense kernel of :func:`smith_decomposition`.  Arithmetic
    uses Python integers and so cannot overflow.  Passing ``word_bits``
    emulates a signed fixed-width kernel: any intermediate entry outside
    that range raises :class:`SNFOverflowError` instead of wrapping.
    """
    limit = None if word_bits is None else 1 << (word_bits - 1)
    units, rest = _unit_eliminate(M, limit)
    factors = [1] * units
    if rest:
        used_cols = sorted({j for row in rest.values() for j in row})
        where = {j: k for k, j in enumerate(used_cols)}
        block = [[0] * len(used_cols) for _ in rest]
        for k, r in enumerate(sorted(rest)):
            for j, v in rest[r].items():
                block[k][where[j]] = v
        D, _, _ = smith_decomposition(block, word_bits=word_bits, track=False)
        factors += [D[i][i] for i in range(min(len(D), len(used_cols))) if D[i][i]]
    return SmithForm(tuple(factors), len(factors))


def smith_decomposition(M: Sequence[Sequence[int]], *, word_bits: int | None = None, track: bool = True):
    """Return ``(D, U, V)`` with ``U @ M @ V == D`` in Smith normal form.

    Pivot: smallest nonzero absolute value in the remaining block, ties
    broken by (row, column).  With ``track=False`` U and V are None.
    """
    limit = None if word_bits is None else 1 << (word_bits - 1)
    A = [[_checked(int(x), limit) for x in row] for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)] if track else None
    V = [[int(i == j) for j in range(n)] for i in range(n)] if track else None

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        if track:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        if track:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        A[dst] = [_checked(a + q * b, limit) for a, b in zip(A[dst], A[src])]
        if track:
            U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in A:
            row[dst] = _checked(row[dst] + q * row[src], limit)
        if track:
            for row in V:
                row[dst] = row[dst] + q * row[src]

    def negate_row(i):
        A[i] = [-a for a in A[i]]
        if track:
            U[i] = [-a for a in U[i]]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
            # a remainder smaller than the pivot becomes the next pivot
            smallest = None
            for i in range(t + 1, m):
                if A[i][t] and (smallest is None or abs(A[i][t]) < abs(smallest[2])):
                    smallest = ("row", i, A[i][t])
            for j in range(t + 1, n):
                if A[t][j] and (smallest is None or abs(A[t][j]) < abs(smallest[2])):
                    smallest = ("col", j, A[t][j])
            if smallest is not None:
                if smallest[0] == "row":
                    swap_rows(t, smallest[1])
                else:
                    swap_cols(t, smallest[1])
                continue
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            negate_row(t)
    return A, U, V


def homology(X: OrderComplex) -> list[HomologyGroup]:
    """Unreduced integral homology, one entry per degree 0 .. dim X."""
    C = boundary_matrices(X)
    forms = [smith_normal_form(C.boundaries[k]) if C.boundaries[k] else SmithForm((), 0) for k in range(len(C.ranks))]
    out = []
    for k, size in enumerate(C.ranks):
        rank_out = forms[k].rank
        incoming = forms[k + 1] if k + 1 < len(forms) else SmithForm((), 0)
        betti = size - rank_out - incoming.rank
        torsion = tuple(d for d in incoming.factors if d > 1)
        out.append(HomologyGroup(k, betti, torsion))
    return out


def euler_characteristic(X: OrderComplex) -> int:
    return sum((-1) ** k * c for k, c in enumerate(X.counts()))


def betti_euler_characteristic(groups: list[HomologyGroup]) -> int:
    return sum((-1) ** h.degree * h.betti for h in groups)
