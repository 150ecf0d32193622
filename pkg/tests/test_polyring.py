"""Ring/field axioms and canonical forms for the exact arithmetic layer."""

import random
from fractions import Fraction

import pytest

from qkostant import NonRationalResult, QPoly, QuadExt, RatFunc, Root5, qpoly_gcd
from qkostant.polyring import S_SQUARED

rng = random.Random(20210)


def rand_poly(max_deg=6, lo=-5, hi=5):
    return QPoly([rng.randint(lo, hi) for _ in range(rng.randint(0, max_deg + 1))])


def rand_nonzero_poly(max_deg=6):
    while True:
        p = rand_poly(max_deg)
        if not p.is_zero:
            return p


def test_canonical_form():
    assert QPoly((1, 0, 0)) == QPoly((1,))
    assert QPoly(()).is_zero
    assert QPoly((0, 0)).is_zero
    assert QPoly((Fraction(4, 2),)).coeffs == (2,)
    assert QPoly((Fraction(1, 2),)).coeffs == (Fraction(1, 2),)
    assert QPoly((0, 1)).degree == 1
    assert QPoly.zero().degree == -1


def test_floats_rejected():
    with pytest.raises(TypeError):
        QPoly((1.5,))
    with pytest.raises(TypeError):
        QPoly((True,))


def test_ring_axioms_sampled():
    for _ in range(200):
        a, b, c = rand_poly(), rand_poly(), rand_poly()
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + QPoly.zero() == a
        assert a * QPoly.one() == a
        assert a - a == QPoly.zero()


def test_pow_and_shift():
    for _ in range(30):
        a = rand_poly(4)
        n = rng.randint(0, 5)
        expect = QPoly.one()
        for _ in range(n):
            expect = expect * a
        assert a ** n == expect
    p = rand_poly()
    assert p.shifted(3) == p * QPoly.term(1, 3)


def test_eval_exact():
    p = QPoly((1, 2, 3))
    assert p(1) == 6
    assert p(Fraction(1, 2)) == 1 + 1 + Fraction(3, 4)
    assert p(0) == 1
    assert QPoly.zero()(7) == 0


def test_derivative_product_rule():
    for _ in range(50):
        a, b = rand_poly(4), rand_poly(4)
        assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


def test_divmod_invariants():
    for _ in range(100):
        a = rand_poly(7)
        b = rand_nonzero_poly(4)
        quo, rem = divmod(a, b)
        assert quo * b + rem == a
        assert rem.degree < b.degree or rem.is_zero
    with pytest.raises(ZeroDivisionError):
        divmod(rand_poly(), QPoly.zero())


def test_gcd_divides_both():
    for _ in range(60):
        a, b = rand_poly(5), rand_poly(5)
        g = qpoly_gcd(a, b)
        if g.is_zero:
            assert a.is_zero and b.is_zero
            continue
        assert g.coeffs[-1] == 1  # monic
        assert (a % g).is_zero
        assert (b % g).is_zero


def test_gcd_of_known_factorization():
    p = QPoly((1, 1)) * QPoly((2, 3))
    r = QPoly((1, 1)) * QPoly((-1, 0, 4))
    assert qpoly_gcd(p, r) == QPoly((1, 1))


def test_str_rendering():
    assert str(QPoly((0, 1, 1, 1))) == "q + q^2 + q^3"
    assert str(QPoly((1, -2))) == "1 - 2*q"
    assert str(QPoly.zero()) == "0"


def test_ratfunc_reduction():
    num = QPoly((-1, 0, 1))  # q^2 - 1
    den = QPoly((-1, 1))  # q - 1
    f = RatFunc(num, den)
    assert f.is_polynomial
    assert f.as_qpoly() == QPoly((1, 1))
    g = RatFunc(QPoly((0, 2)), QPoly((0, 0, 4)))
    assert g.num == QPoly((Fraction(1, 2),)) and g.den == QPoly((0, 1))


def test_ratfunc_field_axioms_sampled():
    for _ in range(50):
        a = RatFunc(rand_poly(3), rand_nonzero_poly(2))
        b = RatFunc(rand_poly(3), rand_nonzero_poly(2))
        c = RatFunc(rand_poly(3), rand_nonzero_poly(2))
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        if not b.is_zero:
            assert (a / b) * b == a
    with pytest.raises(ZeroDivisionError):
        RatFunc(QPoly.one(), QPoly.zero())
    with pytest.raises(ZeroDivisionError):
        RatFunc(QPoly.one()) / RatFunc(QPoly.zero())


def test_ratfunc_not_polynomial():
    f = RatFunc(QPoly.one(), QPoly((0, 1)))
    assert not f.is_polynomial
    with pytest.raises(ValueError):
        f.as_qpoly()


def rand_quadext():
    return QuadExt(
        RatFunc(rand_poly(2), rand_nonzero_poly(1)),
        RatFunc(rand_poly(2), rand_nonzero_poly(1)),
    )


def test_quadext_defining_relation():
    s = QuadExt(0, 1)
    assert s * s == QuadExt(RatFunc(S_SQUARED))
    assert (s ** 4).a == RatFunc(S_SQUARED * S_SQUARED)


def test_quadext_conjugation_and_norm():
    for _ in range(25):
        x, y = rand_quadext(), rand_quadext()
        assert (x * y).conjugate() == x.conjugate() * y.conjugate()
        assert (x + y).conjugate() == x.conjugate() + y.conjugate()
        assert (x * y).norm() == x.norm() * y.norm()
        if not x.norm().is_zero:
            assert (y / x) * x == y
    assert QuadExt(3).is_rational
    assert not QuadExt(0, 1).is_rational


def test_quadext_pow_negative():
    x = QuadExt(RatFunc(QPoly((1, 1))), RatFunc(QPoly((0, 1))))
    assert x ** -2 == (QuadExt(1) / x) ** 2
    assert x ** 3 * x ** -3 == QuadExt(1)


def rand_root5():
    return Root5(Fraction(rng.randint(-9, 9), rng.randint(1, 5)),
                 Fraction(rng.randint(-9, 9), rng.randint(1, 5)))


def test_root5_field_axioms_sampled():
    for _ in range(100):
        x, y, z = rand_root5(), rand_root5(), rand_root5()
        assert x * (y + z) == x * y + x * z
        assert (x * y) * z == x * (y * z)
        assert (x * y).conjugate() == x.conjugate() * y.conjugate()
        if y != Root5(0):
            assert (x / y) * y == x
    root = Root5(0, 1)
    assert root * root == Root5(5)


def test_root5_rationality():
    assert Root5(Fraction(3, 2)).as_fraction() == Fraction(3, 2)
    with pytest.raises(NonRationalResult):
        Root5(1, 1).as_fraction()
    assert abs(float(Root5(0, 1)) - 5 ** 0.5) < 1e-15


def test_root5_pow():
    phi2 = Root5(Fraction(3, 2), Fraction(1, 2))  # (3 + sqrt5)/2
    assert phi2 ** 0 == Root5(1)
    assert phi2 ** 2 == phi2 * phi2
    assert phi2 ** -1 == Root5(1) / phi2
