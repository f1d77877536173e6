"""Hermitian metric forms and their closedness conditions.

A metric is a Hermitian n x n matrix H of Gaussian rationals; the
associated real (1,1)-form is ``omega = i * sum_jk H[j][k] a_j ^ ~a_k``.
Positivity (H positive definite) is decided exactly by Sylvester's
criterion on leading principal minors and is reported, not required: the
closedness checks below are well-defined for any Hermitian H.

Conditions on omega (e = exterior exponent, n the dimension):

* ``kahler``          d omega = 0
* ``pluriclosed:k``   del delbar (omega^(n-k)) = 0, trivially true if n-k <= 0
* ``gauduchon``       pluriclosed:1
* ``skt``             del delbar omega = 0
* ``astheno``         pluriclosed:2
* ``ft_pair``         del delbar omega = 0 and del delbar (omega^2) = 0

``check_condition`` returns the verdict together with the obstruction form
itself as a witness (zero exactly when the condition holds).  All outcomes
are invariant under rescaling H by a positive rational.

Two structure families come with closed-form left-hand sides whose
vanishing is equivalent to a metric condition for the diagonal identity
metric (the direct computation is the oracle for both):

* :func:`exnilp_lhs` for the almost-abelian-style family
  ``d a_n = sum_{i<j<n} A_ij a_i^a_j + sum_{i,j<n} B_ij a_i^~a_j``
  (all other generators closed): astheno holds iff
  ``sum |A_ij|^2 + sum_{i,j} |B_ij|^2 - |tr B|^2 = 0``.
* :func:`fps_lhs` for the six-dimensional SKT family
  ``d a_3 = A ~a1^a2 + B ~a2^a2 + C a1^~a1 + D a1^~a2 + E a1^a2``:
  SKT holds iff ``|A|^2 + |D|^2 + |E|^2 + 2 Re(conj(B) C) = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraSpec, d, deldelbar
from .forms import BasisForm, Form
from .scalars import GaussianRational

_CONDITIONS = ("kahler", "gauduchon", "skt", "astheno", "ft_pair")


def _as_scalar(x) -> GaussianRational:
    return x if isinstance(x, GaussianRational) else GaussianRational(x)


class MetricForm:
    """Hermitian coefficient matrix with cached omega and wedge powers."""

    __slots__ = ("n", "H", "_cache")

    def __init__(self, H):
        H = tuple(tuple(_as_scalar(x) for x in row) for row in H)
        n = len(H)
        if any(len(row) != n for row in H):
            raise ValueError("H must be a square matrix")
        for j in range(n):
            for k in range(n):
                if H[j][k] != H[k][j].conjugate():
                    raise ValueError(
                        "H is not Hermitian at entry (%d, %d)" % (j + 1, k + 1)
                    )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "H", H)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("MetricForm is immutable")

    @property
    def omega(self) -> Form:
        """i * sum H[j][k] a_j ^ ~a_k (a real (1,1)-form)."""
        cached = self._cache.get("omega")
        if cached is None:
            i = GaussianRational(0, 1)
            terms = {}
            for j in range(self.n):
                for k in range(self.n):
                    if self.H[j][k]:
                        terms[BasisForm((j + 1,), (k + 1,))] = i * self.H[j][k]
            cached = Form(terms)
            self._cache["omega"] = cached
        return cached

    def wedge_power(self, k: int) -> Form:
        """omega^k with omega^0 = 1; powers are memoized."""
        if k < 0:
            raise ValueError("wedge power wants a nonnegative exponent")
        powers = self._cache.setdefault("powers", {0: Form.scalar(1)})
        top = max(powers)
        while top < k:
            powers[top + 1] = powers[top] ^ self.omega
            top += 1
        return powers[k]

    def leading_minors(self):
        """Leading principal minor determinants (exact, real rationals)."""
        minors = []
        for k in range(1, self.n + 1):
            det = _determinant([row[:k] for row in self.H[:k]])
            if det.im:
                raise AssertionError("Hermitian minor with nonzero imaginary part")
            minors.append(det.re)
        return minors

    def is_positive(self) -> bool:
        return all(m > 0 for m in self.leading_minors())

    def __eq__(self, other):
        return isinstance(other, MetricForm) and self.H == other.H

    __hash__ = None

    def __repr__(self):
        return "MetricForm(n=%d)" % self.n


def _determinant(rows) -> GaussianRational:
    """Exact determinant by fraction elimination with row pivoting."""
    rows = [list(r) for r in rows]
    m = len(rows)
    det = GaussianRational(1)
    for c in range(m):
        pivot = None
        for i in range(c, m):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            return GaussianRational(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = -det
        det = det * rows[c][c]
        inv = 1 / rows[c][c]
        for i in range(c + 1, m):
            if rows[i][c]:
                fac = rows[i][c] * inv
                rows[i] = [rows[i][j] - fac * rows[c][j] for j in range(m)]
    return det


def build_metric(n: int, H) -> MetricForm:
    """Validate sizes and Hermitian symmetry; see :class:`MetricForm`."""
    m = MetricForm(H)
    if m.n != n:
        raise ValueError("H is %dx%d but the spec has dimension %d" % (m.n, m.n, n))
    return m


def diagonal_metric(n: int, diag=None) -> MetricForm:
    """Diagonal metric (identity by default); entries must be real."""
    if diag is None:
        diag = [1] * n
    if len(diag) != n:
        raise ValueError("need %d diagonal entries" % n)
    entries = []
    for t in diag:
        t = _as_scalar(t)
        if t.im:
            raise ValueError("diagonal metric entries must be real")
        entries.append(t)
    return MetricForm(
        [
            [entries[j] if j == k else GaussianRational(0) for k in range(n)]
            for j in range(n)
        ]
    )


@dataclass
class CheckResult:
    condition: str
    holds: bool
    witness: Form  # the obstruction form; zero iff the condition holds


def check_condition(spec: AlgebraSpec, m: MetricForm, cond: str) -> CheckResult:
    """Decide a closedness condition for omega on the given spec."""
    if m.n != spec.n:
        raise ValueError(
            "metric has dimension %d but the spec has %d" % (m.n, spec.n)
        )
    name = cond.strip()
    if name.startswith("pluriclosed"):
        sep = name[len("pluriclosed") :]
        if not sep.startswith(":"):
            raise ValueError("pluriclosed condition is written pluriclosed:K")
        k = int(sep[1:])
        return _pluriclosed(spec, m, name, spec.n - k)
    if name in ("ftpair", "ft_pair"):
        first = deldelbar(spec, m.wedge_power(1))
        if first:
            return CheckResult("ft_pair", False, first)
        second = deldelbar(spec, m.wedge_power(2))
        return CheckResult("ft_pair", not second, second)
    if name == "kahler":
        w = d(spec, m.omega)
        return CheckResult(name, not w, w)
    if name == "gauduchon":
        return _pluriclosed(spec, m, name, spec.n - 1)
    if name == "skt":
        w = deldelbar(spec, m.omega)
        return CheckResult(name, not w, w)
    if name == "astheno":
        return _pluriclosed(spec, m, name, spec.n - 2)
    raise ValueError(
        "unknown condition %r (choose from %s or pluriclosed:K)"
        % (cond, ", ".join(_CONDITIONS))
    )


def _pluriclosed(spec, m, label, exponent) -> CheckResult:
    if exponent <= 0:
        return CheckResult(label, True, Form())
    w = deldelbar(spec, m.wedge_power(exponent))
    return CheckResult(label, not w, w)


def scan_diagonal_metrics(spec: AlgebraSpec, values, cond: str):
    """Check ``cond`` over the grid of diagonal metrics with entries drawn
    from ``values`` (a positive-rational list); yields (diag, CheckResult)."""
    from itertools import product

    for diag in product(values, repeat=spec.n):
        yield diag, check_condition(spec, diagonal_metric(spec.n, list(diag)), cond)


# ---------------------------------------------------------------------------
# closed-form family left-hand sides


def _coefficient_grid(n: int, data, what: str):
    """Normalize A/B input to an (n-1) x (n-1) grid of scalars; accepts a
    full matrix, a {(i,j): value} mapping, or 0 for all-zero."""
    m = n - 1
    grid = [[GaussianRational(0)] * m for _ in range(m)]
    if data == 0 or data is None:
        return grid
    if isinstance(data, dict):
        for (i, j), v in data.items():
            if not (1 <= i <= m and 1 <= j <= m):
                raise ValueError("%s index (%d,%d) out of range" % (what, i, j))
            grid[i - 1][j - 1] = _as_scalar(v)
        return grid
    rows = list(data)
    if len(rows) != m or any(len(list(r)) != m for r in rows):
        raise ValueError("%s must be a %dx%d matrix" % (what, m, m))
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            grid[i][j] = _as_scalar(v)
    return grid


def exnilp_lhs(n: int, A, B) -> Fraction:
    """Left-hand side whose vanishing is the astheno condition (identity
    metric) for the family ``d a_n = sum A_ij a_i^a_j + sum B_ij a_i^~a_j``
    over closed generators a_1 .. a_{n-1}:

        sum_{i<j<n} |A_ij|^2 + sum_{i!=j} |B_ij|^2
            - 2 Re( sum_{i<j<n} B_ii conj(B_jj) )

    equivalently ``sum |A|^2 + sum_{i,j} |B_ij|^2 - |tr B|^2``.  ``A`` must
    be strictly upper triangular.
    """
    if n < 3:
        raise ValueError("the family needs n >= 3")
    a = _coefficient_grid(n, A, "A")
    b = _coefficient_grid(n, B, "B")
    m = n - 1
    for i in range(m):
        for j in range(m):
            if j <= i and a[i][j]:
                raise ValueError("A must be strictly upper triangular")
    total = Fraction(0)
    for i in range(m):
        for j in range(i + 1, m):
            total += a[i][j].norm()
    for i in range(m):
        for j in range(m):
            if i != j:
                total += b[i][j].norm()
    for i in range(m):
        for j in range(i + 1, m):
            total -= 2 * (b[i][i] * b[j][j].conjugate()).re
    return total


def fps_lhs(A, B, C, D, E) -> Fraction:
    """|A|^2 + |D|^2 + |E|^2 + 2 Re(conj(B) C): vanishes exactly when the
    six-dimensional family ``d a3 = A ~a1^a2 + B ~a2^a2 + C a1^~a1 +
    D a1^~a2 + E a1^a2`` is SKT for the diagonal identity metric."""
    A, B, C, D, E = (_as_scalar(x) for x in (A, B, C, D, E))
    return A.norm() + D.norm() + E.norm() + 2 * (B.conjugate() * C).re
