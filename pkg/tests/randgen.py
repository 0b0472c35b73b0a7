"""Seeded generators for the fixed-count property runs."""
import random
from fractions import Fraction

from bfmoduli.exact import GaussRat, GradedClass
from bfmoduli.jets import DiffPoly, FieldSymbol


def rat(rng: random.Random, lo=-9, hi=9, den=6) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def gauss(rng: random.Random) -> GaussRat:
    return GaussRat(rat(rng), rat(rng))


def graded(rng: random.Random, terms=4, xi=True) -> GradedClass:
    out = {}
    for _ in range(rng.randint(0, terms)):
        a = rng.randint(0, 2)
        b = rng.randint(0, 2 - a)
        out[(a, b, rng.randint(-2, 2) if xi else 0)] = gauss(rng)
    return GradedClass(out)


def invertible(rng: random.Random) -> GradedClass:
    p = graded(rng, xi=False)
    c = GaussRat(rat(rng, 1, 9), rat(rng))
    return p - GradedClass.const(p.constant) + GradedClass.const(c)


def linear(rng: random.Random) -> GradedClass:
    return GradedClass({(1, 0, 0): gauss(rng), (0, 1, 0): gauss(rng)})


def symbol(rng: random.Random, kinds=("A", "Pi", "B0", "eps"), max_deriv=1, internal=3) -> FieldSymbol:
    kind = rng.choice(kinds)
    idx = () if kind == "eps" else (rng.randint(1, 3),)
    deriv = tuple(rng.randint(1, 3) for _ in range(rng.randint(0, max_deriv)))
    return FieldSymbol(kind, idx, rng.randint(1, internal), deriv)


def diffpoly(rng: random.Random, terms=3, factors=3, **kw) -> DiffPoly:
    out = DiffPoly()
    for _ in range(rng.randint(1, terms)):
        t = DiffPoly.const(gauss(rng), rng.randint(0, 1))
        for _ in range(rng.randint(1, factors)):
            t = t * DiffPoly.symbol(symbol(rng, **kw))
        out = out + t
    return out


def quadratic_density(rng: random.Random) -> DiffPoly:
    """Sum of terms (canonical field) x (canonical field) x optional smearing."""
    out = DiffPoly()
    for _ in range(rng.randint(1, 3)):
        t = DiffPoly.const(rat(rng))
        for _ in range(2):
            t = t * DiffPoly.symbol(symbol(rng, kinds=("A", "Pi"), internal=2))
        if rng.random() < 0.5:
            t = t * DiffPoly.symbol(FieldSymbol("eps", (), rng.randint(1, 2)))
        out = out + t
    return out
