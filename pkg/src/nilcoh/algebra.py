"""Structure specifications and the Chevalley-Eilenberg differential.

An :class:`AlgebraSpec` fixes a dimension ``n`` and the differentials of the
holomorphic generators: ``d a_i`` is a 2-form with only (2,0) and (1,1)
components (the integrability constraint, enforced on construction).  The
anti-holomorphic generators differentiate by conjugation,
``d ~a_i = conj(d a_i)``, which makes ``d`` commute with conjugation by
construction.  ``d`` extends to all forms as the unique anti-derivation,
and splits as ``d = del + delbar`` into the components raising the first
and second bidegree.

The Jacobi identity of the dual Lie algebra is exactly ``d . d = 0``, and
on an anti-derivation that only needs checking on generators.

Nilpotency of the underlying algebra together with integrability of the
complex structure is detected through the ascending series of degree-one
subspaces ``S_l = { phi : d phi in Lambda^2(S_{l-1}) }``: the flag
stabilizes at the full 2n-dimensional space exactly in the nilpotent case.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .forms import BasisForm, Form
from .linalg import IndexedMatrix, hstack, kernel_basis, span_basis
from .scalars import GaussianRational

_ALLOWED_BIDEGREES = {(2, 0), (1, 1)}


class AlgebraSpec:
    """Dimension n plus the generator differentials d a_1 .. d a_n."""

    __slots__ = ("name", "n", "d_generators", "_caches")

    def __init__(self, name: str, n: int, d_generators):
        if n < 1:
            raise ValueError("dimension n must be a positive integer")
        d_generators = tuple(
            f if isinstance(f, Form) else Form(f) for f in d_generators
        )
        if len(d_generators) != n:
            raise ValueError("need exactly n generator differentials")
        for i, f in enumerate(d_generators, start=1):
            for bf, _ in f.terms():
                if bf.bidegree() not in _ALLOWED_BIDEGREES:
                    raise ValueError(
                        "d a%d has a term %s of bidegree %s; only (2,0) and "
                        "(1,1) terms are allowed" % (i, bf, bf.bidegree())
                    )
            if f.max_index() > n:
                raise ValueError(
                    "d a%d references generator a%d beyond dimension %d"
                    % (i, f.max_index(), n)
                )
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "d_generators", d_generators)
        object.__setattr__(self, "_caches", {})

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraSpec is immutable")

    def is_abelian(self) -> bool:
        return all(f.is_zero() for f in self.d_generators)

    def d_alpha(self, i: int) -> Form:
        return self.d_generators[i - 1]

    def d_alphabar(self, i: int) -> Form:
        key = ("dbar", i)
        cached = self._caches.get(key)
        if cached is None:
            cached = self.d_generators[i - 1].conjugate()
            self._caches[key] = cached
        return cached

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraSpec)
            and self.name == other.name
            and self.n == other.n
            and self.d_generators == other.d_generators
        )

    __hash__ = None

    def __repr__(self):
        return "AlgebraSpec(%r, n=%d)" % (self.name, self.n)


@dataclass
class ValidationReport:
    """Outcome of the Jacobi check plus the nilpotency flag data."""

    jacobi_ok: bool
    failing_generators: list = field(default_factory=list)  # (index, d2 Form)
    nilpotent_J: bool = False
    filtration: list = field(default_factory=list)


# ---------------------------------------------------------------------------
# the differential and its bidegree components


def _d_monomial(spec: AlgebraSpec, bf: BasisForm) -> Form:
    cache = spec._caches.setdefault("d_monomial", {})
    out = cache.get(bf)
    if out is not None:
        return out
    total = Form()
    factors = bf.factors()
    for k, (is_anti, j) in enumerate(factors):
        dj = spec.d_alphabar(j) if is_anti else spec.d_alpha(j)
        if dj.is_zero():
            continue
        if is_anti:
            rest = BasisForm(bf.holo, tuple(t for t in bf.anti if t != j))
        else:
            rest = BasisForm(tuple(s for s in bf.holo if s != j), bf.anti)
        # dj has even degree, so it slides to the front without a sign;
        # the Koszul sign (-1)^k records the factor position.
        term = dj ^ Form({rest: 1})
        total = total + (term if k % 2 == 0 else -term)
    cache[bf] = total
    return total


def d(spec: AlgebraSpec, x: Form) -> Form:
    """Total differential (anti-derivation extending the generator data)."""
    if x.max_index() > spec.n:
        raise ValueError(
            "form references generator a%d beyond dimension %d"
            % (x.max_index(), spec.n)
        )
    total = Form()
    for bf, c in x.terms():
        total = total + _d_monomial(spec, bf) * c
    return total


def del_(spec: AlgebraSpec, x: Form) -> Form:
    """The (p+1, q) component of d on each homogeneous piece."""
    total = Form()
    for bf, c in x.terms():
        p, q = bf.bidegree()
        total = total + _d_monomial(spec, bf).component(p + 1, q) * c
    return total


def delbar(spec: AlgebraSpec, x: Form) -> Form:
    """The (p, q+1) component of d on each homogeneous piece."""
    total = Form()
    for bf, c in x.terms():
        p, q = bf.bidegree()
        total = total + _d_monomial(spec, bf).component(p, q + 1) * c
    return total


def deldelbar(spec: AlgebraSpec, x: Form) -> Form:
    return del_(spec, delbar(spec, x))


# ---------------------------------------------------------------------------
# validation and the nilpotency flag


def degree_one_basis(n: int):
    return tuple(BasisForm((j,), ()) for j in range(1, n + 1)) + tuple(
        BasisForm((), (j,)) for j in range(1, n + 1)
    )


def degree_two_basis(n: int):
    out = []
    for p, q in ((2, 0), (1, 1), (0, 2)):
        for holo in combinations(range(1, n + 1), p):
            for anti in combinations(range(1, n + 1), q):
                out.append(BasisForm(holo, anti))
    return tuple(sorted(out, key=lambda bf: bf.sort_key()))


def _coordinates(form: Form, basis_index: dict):
    vec = [GaussianRational(0)] * len(basis_index)
    for bf, c in form.terms():
        vec[basis_index[bf]] = c
    return vec


def nilpotency_filtration(spec: AlgebraSpec):
    """(nilpotent_J, dims): the ascending flag S_1 <= S_2 <= ... of
    degree-one subspaces with d S_l inside Lambda^2(S_{l-1}).

    Dimensions are appended while strictly increasing; the loop stops when
    the flag reaches the full 2n-dimensional space (nilpotent, the final
    dimension 2n is the last entry) or repeats (not nilpotent, the repeated
    dimension is recorded)."""
    n = spec.n
    v_basis = degree_one_basis(n)
    two_basis = degree_two_basis(n)
    two_index = {bf: k for k, bf in enumerate(two_basis)}
    d_cols = [
        _coordinates(d(spec, Form({bf: 1})), two_index) for bf in v_basis
    ]
    d_matrix = IndexedMatrix.from_columns(two_basis, v_basis, d_cols)

    prev_vectors = []
    dims = []
    while True:
        prev_forms = [
            Form({bf: c for bf, c in zip(v_basis, vec) if c})
            for vec in prev_vectors
        ]
        wedge_cols = []
        for a in range(len(prev_forms)):
            for b in range(a + 1, len(prev_forms)):
                w = prev_forms[a] ^ prev_forms[b]
                if w:
                    wedge_cols.append(_coordinates(w, two_index))
        m = d_matrix
        if wedge_cols:
            w_matrix = IndexedMatrix.from_columns(
                two_basis,
                tuple(range(len(wedge_cols))),
                wedge_cols,
            )
            m = hstack(d_matrix, w_matrix)
        projected = [vec[: 2 * n] for vec in kernel_basis(m)]
        vectors = span_basis(projected)
        dim = len(vectors)
        dims.append(dim)
        if dim == 2 * n:
            return True, dims
        if dim == len(prev_vectors):
            return False, dims
        prev_vectors = vectors


def validate(spec: AlgebraSpec) -> ValidationReport:
    """Jacobi check (d.d = 0 on generators) plus the nilpotency flag."""
    cached = spec._caches.get("validation")
    if cached is not None:
        return cached
    failing = []
    for i in range(1, spec.n + 1):
        dd = d(spec, spec.d_alpha(i))
        if dd:
            failing.append((i, dd))
    if failing:
        report = ValidationReport(jacobi_ok=False, failing_generators=failing)
    else:
        nilpotent, dims = nilpotency_filtration(spec)
        report = ValidationReport(
            jacobi_ok=True, nilpotent_J=nilpotent, filtration=dims
        )
    spec._caches["validation"] = report
    return report


def direct_sum(a: AlgebraSpec, b: AlgebraSpec) -> AlgebraSpec:
    """Product structure: b's generators and differentials shift past a's."""
    d_gens = list(a.d_generators) + [f.shift(a.n) for f in b.d_generators]
    return AlgebraSpec("%s_x_%s" % (a.name, b.name), a.n + b.n, d_gens)
