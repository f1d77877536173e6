"""Random structure generators shared by the property-style tests.

``random_two_step`` draws a structure whose generators split into a closed
core and a layer whose differentials live in the exterior square of that
core.  Such structures always satisfy d^2 = 0 and are always nilpotent, so
every draw is usable without rejection; a draw whose random coefficients
all vanish is abelian, which keeps both sides of gap-style properties
populated.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from nilcoh.algebra import AlgebraSpec
from nilcoh.forms import Form, alpha, alphabar
from nilcoh.scalars import GaussianRational


def rand_gauss(rng, span=2):
    return GaussianRational(
        Fraction(rng.randint(-span, span)), Fraction(rng.randint(-span, span))
    )


def random_two_step(rng, n, density=0.4, name="draw"):
    core = rng.randint(1, n)
    diffs = [Form() for _ in range(core)]
    for _ in range(core, n):
        f = Form()
        for a, b in itertools.combinations(range(1, core + 1), 2):
            if rng.random() < density:
                f = f + rand_gauss(rng) * (alpha(a) ^ alpha(b))
        for a in range(1, core + 1):
            for b in range(1, core + 1):
                if rng.random() < density:
                    f = f + rand_gauss(rng) * (alpha(a) ^ alphabar(b))
        diffs.append(f)
    return AlgebraSpec(name, n, diffs)


def is_abelian(spec: AlgebraSpec) -> bool:
    return all(spec.d_alpha(j).is_zero() for j in range(1, spec.n + 1))
