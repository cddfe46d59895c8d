import random
from fractions import Fraction

from eiconal.scalar import Scalar


def rand_fraction(rng: random.Random, span: int = 9) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def rand_scalar(rng: random.Random, span: int = 9) -> Scalar:
    return Scalar(
        rand_fraction(rng, span),
        rand_fraction(rng, span),
        rand_fraction(rng, span),
        rand_fraction(rng, span),
    )
