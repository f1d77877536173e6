"""Exact linear algebra over Q(i) for basis-indexed operator matrices.

Ranks are computed by fraction-free (Bareiss) elimination over the Gaussian
integers after clearing row denominators — row scaling changes neither rank
nor kernel, and the fraction-free update keeps intermediate entries as
minors of the cleared matrix instead of letting numerators and denominators
grow through repeated gcd reduction.  Kernels use reduced row echelon form
over Q(i) directly, so kernel vectors come out normalized (first nonzero
coordinate 1).  ``benchmarks/bench_rank.py`` records the timing comparison
between the two elimination styles.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .scalars import GaussianRational

_GR_ZERO = GaussianRational(0)


class ContainmentError(Exception):
    """An "image" vector fell outside the kernel it must land in.

    This signals an inconsistent complex (an upstream validation bug), not
    bad user input.  ``witness`` is the offending domain vector and
    ``value`` its nonzero image under the kernel operator.
    """

    def __init__(self, message, witness, value):
        super().__init__(message)
        self.witness = witness
        self.value = value


class IndexedMatrix:
    """A dense matrix whose rows and columns are labelled by basis data.

    ``entries[i][j]`` is the coefficient of row label ``rows[i]`` in the
    image of column label ``cols[j]``.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        rows = tuple(rows)
        cols = tuple(cols)
        entries = tuple(tuple(row) for row in entries)
        if len(entries) != len(rows):
            raise ValueError("entry rows do not match row labels")
        if any(len(r) != len(cols) for r in entries):
            raise ValueError("entry columns do not match column labels")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("IndexedMatrix is immutable")

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.cols)

    @classmethod
    def from_columns(cls, rows, cols, columns):
        """Build from column vectors (each of length len(rows))."""
        rows = tuple(rows)
        entries = [
            [columns[j][i] for j in range(len(columns))] for i in range(len(rows))
        ]
        return cls(rows, cols, entries)

    def column(self, j):
        return tuple(self.entries[i][j] for i in range(self.nrows))

    def conjugate_transpose(self):
        entries = [
            [self.entries[i][j].conjugate() for i in range(self.nrows)]
            for j in range(self.ncols)
        ]
        return IndexedMatrix(self.cols, self.rows, entries)

    def __matmul__(self, other):
        if not isinstance(other, IndexedMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("matrix product: inner bases do not match")
        out = []
        for i in range(self.nrows):
            row = []
            srow = self.entries[i]
            for j in range(other.ncols):
                acc = _GR_ZERO
                for k in range(self.ncols):
                    a = srow[k]
                    if a:
                        b = other.entries[k][j]
                        if b:
                            acc = acc + a * b
                row.append(acc)
            out.append(row)
        return IndexedMatrix(self.rows, other.cols, out)

    def __eq__(self, other):
        return (
            isinstance(other, IndexedMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    __hash__ = None

    def __repr__(self):
        return "IndexedMatrix(%d rows x %d cols)" % (self.nrows, self.ncols)


def vstack(top: IndexedMatrix, bottom: IndexedMatrix) -> IndexedMatrix:
    """Stack two operators with the same domain (shared column labels)."""
    if top.cols != bottom.cols:
        raise ValueError("vstack: column bases differ")
    return IndexedMatrix(
        top.rows + bottom.rows, top.cols, top.entries + bottom.entries
    )


def hstack(left: IndexedMatrix, right: IndexedMatrix) -> IndexedMatrix:
    """Concatenate columns of two operators into the same codomain."""
    if left.rows != right.rows:
        raise ValueError("hstack: row bases differ")
    entries = [
        left.entries[i] + right.entries[i] for i in range(left.nrows)
    ]
    return IndexedMatrix(left.rows, left.cols + right.cols, entries)


# ---------------------------------------------------------------------------
# fraction-free rank


def _cleared_int_rows(m: IndexedMatrix):
    """Rows as (re, im) integer pairs after scaling each row by the lcm of
    its denominators (rank- and kernel-preserving)."""
    out = []
    for row in m.entries:
        denom = 1
        for z in row:
            denom = math.lcm(denom, z.re.denominator, z.im.denominator)
        out.append(
            [
                (
                    int(z.re.numerator * (denom // z.re.denominator)),
                    int(z.im.numerator * (denom // z.im.denominator)),
                )
                for z in row
            ]
        )
    return out


def _gi_mul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gi_div_exact(a, b):
    """Exact division in Z[i]; the Bareiss update guarantees divisibility,
    and we verify it rather than silently truncating."""
    d = b[0] * b[0] + b[1] * b[1]
    qr, rr = divmod(a[0] * b[0] + a[1] * b[1], d)
    qi, ri = divmod(a[1] * b[0] - a[0] * b[1], d)
    if rr or ri:
        raise ArithmeticError("fraction-free elimination lost exactness")
    return (qr, qi)


def rank(m: IndexedMatrix) -> int:
    """Exact rank by fraction-free elimination with first-nonzero pivoting."""
    rows = _cleared_int_rows(m)
    nr, nc = len(rows), m.ncols
    prev = (1, 0)
    r = 0
    for c in range(nc):
        pivot = None
        for i in range(r, nr):
            if rows[i][c] != (0, 0):
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        for i in range(r + 1, nr):
            fac = rows[i][c]
            if fac == (0, 0):
                # still rescale so the Bareiss divisibility invariant holds
                for j in range(c + 1, nc):
                    rows[i][j] = _gi_div_exact(_gi_mul(p, rows[i][j]), prev)
            else:
                for j in range(c + 1, nc):
                    num = (
                        p[0] * rows[i][j][0] - p[1] * rows[i][j][1]
                        - fac[0] * rows[r][j][0] + fac[1] * rows[r][j][1],
                        p[0] * rows[i][j][1] + p[1] * rows[i][j][0]
                        - fac[0] * rows[r][j][1] - fac[1] * rows[r][j][0],
                    )
                    rows[i][j] = _gi_div_exact(num, prev)
                rows[i][c] = (0, 0)
        prev = p
        r += 1
        if r == nr:
            break
    return r


# ---------------------------------------------------------------------------
# reduced row echelon over Q(i)


def _rref(rows):
    """In-place RREF; returns the pivot column indices."""
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    pivots = []
    r = 0
    for c in range(nc):
        pivot = None
        for i in range(r, nr):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c]:
                fac = rows[i][c]
                rows[i] = [
                    rows[i][j] - fac * rows[r][j] for j in range(nc)
                ]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return pivots


def rank_rref(m: IndexedMatrix) -> int:
    """Rank by plain Q(i) row reduction (cross-check / benchmark route)."""
    rows = [list(r) for r in m.entries]
    return len(_rref(rows))


def kernel_basis(m: IndexedMatrix):
    """Basis of the kernel: one normalized vector per free column.

    Vectors are tuples over the column labels, first nonzero coordinate 1,
    ordered by free column index (deterministic).
    """
    nc = m.ncols
    if nc == 0:
        return []
    rows = [list(r) for r in m.entries]
    pivots = _rref(rows)
    pivot_set = set(pivots)
    basis = []
    for f in range(nc):
        if f in pivot_set:
            continue
        vec = [_GR_ZERO] * nc
        vec[f] = GaussianRational(1)
        for k, p in enumerate(pivots):
            if rows[k][f]:
                vec[p] = -rows[k][f]
        lead = next(x for x in vec if x)
        if lead != GaussianRational(1):
            inv = 1 / lead
            vec = [x * inv for x in vec]
        basis.append(tuple(vec))
    return basis


def span_basis(vectors):
    """Reduced (RREF-row) basis of the span of the given vectors."""
    vecs = [list(v) for v in vectors if any(v)]
    if not vecs:
        return []
    _rref(vecs)
    return [tuple(v) for v in vecs if any(v)]


def greedy_complement(base_columns, candidates):
    """Indices of candidate vectors that enlarge span(base_columns),
    scanned in order — the classes of the chosen candidates form a basis
    of span(base + candidates) / span(base)."""
    working = []  # reduced rows so far
    pivots = []  # pivot position per working row

    def try_add(vec):
        vec = list(vec)
        for row, p in zip(working, pivots):
            if vec[p]:
                fac = vec[p]
                for j in range(len(vec)):
                    vec[j] = vec[j] - fac * row[j]
        lead = None
        for j, x in enumerate(vec):
            if x:
                lead = j
                break
        if lead is None:
            return False
        inv = 1 / vec[lead]
        working.append([x * inv for x in vec])
        pivots.append(lead)
        return True

    for col in base_columns:
        try_add(col)
    chosen = []
    for idx, cand in enumerate(candidates):
        if try_add(cand):
            chosen.append(idx)
    return chosen


def subquotient_dim(kernel_of: IndexedMatrix, images) -> int:
    """dim ker(kernel_of) minus the dimension of the joint span of the
    image operators' columns, with the containment im(...) in ker(...)
    checked (raising :class:`ContainmentError` on violation)."""
    images = [img for img in images if img.ncols]
    for img in images:
        if img.rows != kernel_of.cols:
            raise ValueError("subquotient: image codomain does not match")
        prod = kernel_of @ img
        for j in range(prod.ncols):
            col = prod.column(j)
            if any(col):
                raise ContainmentError(
                    "image vector escapes the kernel (inconsistent complex)",
                    witness=img.column(j),
                    value=col,
                )
    kdim = kernel_of.ncols - rank(kernel_of)
    if not images:
        return kdim
    joined = images[0]
    for img in images[1:]:
        joined = hstack(joined, img)
    out = kdim - rank(joined)
    assert out >= 0, "containment held but dimension went negative"
    return out
