import json
import math
import random
from fractions import Fraction

import pytest

from eiconal.scalar import ONE, SQRT2, SQRT3, SQRT6, ZERO, Scalar, field_sqrt

from conftest import rand_scalar


def test_defining_relations():
    assert SQRT2 * SQRT2 == Scalar(2)
    assert SQRT3 * SQRT3 == Scalar(3)
    assert SQRT2 * SQRT3 == SQRT6
    assert SQRT6 * SQRT6 == Scalar(6)


def test_product_of_conjugate_units():
    # (1 + sqrt2)(-1 + sqrt2) = 2 - 1 = 1, expanded by hand
    assert (ONE + SQRT2) * (-ONE + SQRT2) == ONE


def test_inverse():
    assert ONE.inverse() == ONE
    assert Scalar(2).inverse() == Scalar(Fraction(1, 2))
    # verified by multiplying back: (1 + sqrt2)(-1 + sqrt2) = 1
    assert (ONE + SQRT2).inverse() == -ONE + SQRT2
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_inverse_random():
    rng = random.Random(7)
    for _ in range(500):
        x = rand_scalar(rng)
        if x.is_zero():
            continue
        assert x * x.inverse() == ONE


def test_to_float():
    assert SQRT3.to_float() == pytest.approx(1.7320508075688772, abs=1e-15)
    assert ZERO.to_float() == 0.0
    # 3*sqrt3/2 = 1.5 * sqrt(3)
    x = Scalar(0, 0, Fraction(3, 2), 0)
    assert x.to_float() == pytest.approx(1.5 * math.sqrt(3), abs=1e-15)


def test_to_float_cancellation():
    # huge components that almost cancel: naive float evaluation would lose
    # every significant digit
    big = 10**40
    x = Scalar(-Fraction(big * 141421356237309504880168872420969807856967187537694, 10**50), Fraction(big, 1))
    # x = big*(sqrt2 - 1.41421356...) which is tiny but nonzero
    val = x.to_float()
    assert val != 0.0
    assert abs(val) < 1.0


def test_field_axioms_random_triples():
    rng = random.Random(123)
    for _ in range(10_000):
        x = rand_scalar(rng, 6)
        y = rand_scalar(rng, 6)
        z = rand_scalar(rng, 6)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert (x + y) * z == x * z + y * z
        assert x * y == y * x
        assert x + (-x) == ZERO


def test_integral_domain():
    rng = random.Random(99)
    checked = 0
    while checked < 2000:
        x = rand_scalar(rng, 5)
        y = rand_scalar(rng, 5)
        if x.is_zero() or y.is_zero():
            continue
        assert not (x * y).is_zero()
        checked += 1


def test_json_round_trip_byte_identical():
    rng = random.Random(5)
    for _ in range(200):
        x = rand_scalar(rng)
        blob = json.dumps(x.to_json())
        y = Scalar.from_json(json.loads(blob))
        assert y == x
        assert json.dumps(y.to_json()) == blob


def test_json_shape_and_canonical_form():
    x = Scalar(Fraction(2, 4))  # reduces to 1/2
    assert x.to_json() == [1, 2, 0, 1, 0, 1, 0, 1]
    with pytest.raises(ValueError):
        Scalar.from_json([1, 2, 3])
    with pytest.raises(ValueError):
        Scalar.from_json([1.5, 2, 0, 1, 0, 1, 0, 1])


def test_hash_structural():
    assert hash(Scalar(1, 2, 3, 4)) == hash(Scalar(1, 2, 3, 4))
    assert Scalar(Fraction(1, 2)) == Scalar(Fraction(2, 4))


def test_str_rendering():
    assert str(ZERO) == "0"
    assert str(ONE + SQRT2) == "1 + sqrt2"
    assert str(Scalar(0, 0, Fraction(3, 2), 0)) == "3/2*sqrt3"
    assert str(-ONE - SQRT6) == "-1 - sqrt6"


def test_field_sqrt_known_values():
    assert field_sqrt(Scalar(2)) == SQRT2
    assert field_sqrt(Scalar(3)) == SQRT3
    assert field_sqrt(Scalar(6)) == SQRT6
    assert field_sqrt(Scalar(Fraction(1, 2))) == SQRT2 * Scalar(Fraction(1, 2))
    assert field_sqrt(ZERO) == ZERO
    assert field_sqrt(Scalar(4)) == Scalar(2)
    # (1 + sqrt2)^2 = 3 + 2*sqrt2
    assert field_sqrt(Scalar(3, 2)) == ONE + SQRT2
    # (sqrt2 + sqrt3)^2 = 5 + 2*sqrt6
    assert field_sqrt(Scalar(5, 0, 0, 2)) == SQRT2 + SQRT3
    assert field_sqrt(Scalar(5)) is None
    assert field_sqrt(Scalar(-1)) is None


def test_field_sqrt_random_round_trip():
    rng = random.Random(2024)
    for _ in range(1000):
        y = rand_scalar(rng, 5)
        root = field_sqrt(y * y)
        assert root is not None
        assert root * root == y * y
        assert root == y or root == -y
