"""Field arithmetic, quantum numbers, and series utilities."""

import random
from fractions import Fraction

import pytest

from affschur.scalar import (
    FieldElem,
    NOT_POLYNOMIAL,
    PlusMinusSeries,
    QV,
    RationalScalars,
    UPoly,
    exp_truncated,
    poly_ratio_if_polynomial,
    quantum_binomial,
    quantum_integer,
    scalar_sort_key,
    scalar_text,
)


def random_elem(rng, allow_zero=True):
    num = {}
    for _ in range(rng.randint(1, 3)):
        num[rng.randint(-4, 4)] = Fraction(rng.randint(-3, 3))
    x = FieldElem.from_laurent(num)
    if not allow_zero and not x:
        return QV.one + x
    return x


def test_field_axioms_random_triples():
    rng = random.Random(20240817)
    for _ in range(120):
        a = random_elem(rng)
        b = random_elem(rng)
        c = random_elem(rng)
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + QV.zero == a
        assert a * QV.one == a
        assert a - a == QV.zero
        if b:
            assert b * b.inverse() == QV.one
            assert (a / b) * b == a


def test_powers_and_coercion():
    rng = random.Random(7)
    for _ in range(40):
        a = random_elem(rng, allow_zero=False)
        assert a**0 == QV.one
        assert a**3 == a * a * a
        assert a**-2 == (a * a).inverse()
    x = QV.v + 1
    assert 2 * x == x + x
    assert x - 1 == QV.v
    assert 1 / QV.v == QV.v_inv
    assert QV.from_fraction(Fraction(3, 2)) * 2 == QV.from_int(3)


def test_text_round_trip():
    rng = random.Random(99)
    for _ in range(60):
        a = random_elem(rng)
        b = random_elem(rng, allow_zero=False)
        x = a / b
        assert QV.parse(x.text()) == x
    assert quantum_integer(2).text() == "(v^2+1)/(v)"
    assert QV.parse("(v^2+1)/(v)") == QV.v + QV.v_inv
    assert QV.parse("-v^-1") == -QV.v_inv
    assert QV.parse("3/2") == QV.from_fraction(Fraction(3, 2))
    assert scalar_text(QV.zero) == "0"


def test_parse_rejects_garbage():
    for bad in ("", "v^", "2**v", "(v", "v+*2"):
        with pytest.raises(ValueError):
            QV.parse(bad)


def test_hash_consistency():
    rng = random.Random(5)
    for _ in range(30):
        a = random_elem(rng)
        b = a + QV.zero
        assert hash(a) == hash(b)
    seen = {QV.v: "v", QV.v_inv: "vi"}
    assert seen[QV.parse("v")] == "v"


def test_quantum_integer_addition_law():
    for s in range(-6, 7):
        for t in range(-6, 7):
            lhs = quantum_integer(s + t)
            rhs = QV.v_pow(t) * quantum_integer(s) + QV.v_pow(-s) * quantum_integer(t)
            assert lhs == rhs, (s, t)
    assert quantum_integer(0) == QV.zero
    assert quantum_integer(1) == QV.one
    assert quantum_integer(-3) == -quantum_integer(3)


def test_quantum_binomial_values():
    assert quantum_binomial(4, 0) == QV.one
    assert quantum_binomial(4, 1) == quantum_integer(4)
    for c in range(0, 9):
        for a in range(0, c + 1):
            assert quantum_binomial(c, a) == quantum_binomial(c, c - a), (c, a)
    for a in range(1, 5):
        assert quantum_binomial(a - 1, a) == QV.zero
    with pytest.raises(ValueError):
        quantum_binomial(3, -1)


def test_quantum_binomial_pascal():
    for c in range(1, 8):
        for a in range(1, c + 1):
            lhs = quantum_binomial(c, a)
            rhs = QV.v_pow(a) * quantum_binomial(c - 1, a) + QV.v_pow(
                -(c - a)
            ) * quantum_binomial(c - 1, a - 1)
            assert lhs == rhs, (c, a)


def test_specialization_matches_symbolic():
    rng = random.Random(11)
    K = RationalScalars(Fraction(3, 2))
    for _ in range(40):
        a = random_elem(rng)
        b = random_elem(rng)
        sym = (a * b + a).substitute(Fraction(3, 2))
        num = a.substitute(Fraction(3, 2)) * b.substitute(Fraction(3, 2))
        assert sym == num + a.substitute(Fraction(3, 2))
    assert quantum_integer(3, K) == K.v_pow(2) + 1 + K.v_pow(-2)
    with pytest.raises(ValueError):
        RationalScalars(Fraction(1))
    with pytest.raises(ValueError):
        RationalScalars(Fraction(0))


def test_upoly_basics():
    p = UPoly([QV.one, QV.v])
    q = UPoly([QV.one, -QV.v])
    assert (p * q).coeffs == (QV.one, QV.zero, -(QV.v * QV.v))
    assert p * UPoly(()) == UPoly(())
    assert UPoly([QV.zero]).degree == -1
    assert p.truncate(1) == UPoly([QV.one])
    r = p.scale_arg(QV.from_int(2))
    assert r.coeffs[1] == QV.v * 2


def test_from_roots_multiplicative():
    rng = random.Random(31)
    for _ in range(25):
        roots1 = [random_elem(rng, allow_zero=False) for _ in range(rng.randint(0, 3))]
        roots2 = [random_elem(rng, allow_zero=False) for _ in range(rng.randint(0, 3))]
        lhs = UPoly.from_roots(roots1 + roots2)
        rhs = UPoly.from_roots(roots1) * UPoly.from_roots(roots2)
        assert lhs == rhs


def test_poly_ratio():
    a = QV.from_int(2)
    b = QV.from_int(3)
    num = UPoly.from_roots([a, b])
    den = UPoly.from_roots([b])
    assert poly_ratio_if_polynomial(num, den) == UPoly.from_roots([a])
    assert poly_ratio_if_polynomial(den, num) is NOT_POLYNOMIAL
    assert not NOT_POLYNOMIAL
    with pytest.raises(ValueError):
        poly_ratio_if_polynomial(UPoly([QV.v]), den)


def test_exp_truncated_newton_identity():
    rng = random.Random(47)
    for _ in range(15):
        roots = [random_elem(rng, allow_zero=False) for _ in range(rng.randint(1, 3))]
        order = 4
        power_sums = []
        for t in range(1, order):
            power_sums.append(sum((a**t for a in roots), QV.zero))
        series = UPoly(
            [QV.zero] + [-p / QV.from_int(t + 1) for t, p in enumerate(power_sums)]
        )
        lhs = exp_truncated(series, order)
        rhs = UPoly.from_roots(roots).truncate(order)
        assert lhs == rhs
    with pytest.raises(ValueError):
        exp_truncated(UPoly([QV.one]), 3)


def test_plus_minus_series():
    a = QV.from_int(2) * QV.v
    b = QV.from_int(3)
    s = PlusMinusSeries([b, a])
    assert s == PlusMinusSeries([a, b])
    plus = s.expand_plus()
    assert plus.coeffs[0] == QV.one and plus.degree == 2
    minus = s.expand_minus()
    assert minus.coeffs[1] == -(QV.one / a + QV.one / b)
    with pytest.raises(ValueError):
        PlusMinusSeries([QV.zero])


def test_sort_key_is_total_on_texts():
    xs = [QV.v, QV.v_inv, QV.from_int(2), QV.from_int(10), -QV.v]
    ordered = sorted(xs, key=scalar_sort_key)
    assert len(set(map(scalar_text, ordered))) == 5
    assert sorted(ordered, key=scalar_sort_key) == ordered
