from fractions import Fraction

import pytest

from mindex.exact import Poly, bernoulli, binomial_poly, indefinite_sum, multinomial

X = Poly.x()


def test_multinomial_values():
    assert multinomial((1, 1)) == 2
    assert multinomial((0, 0, 0, 0)) == 1
    assert multinomial(()) == 1
    # oracle: direct factorial evaluation
    import math

    assert multinomial((2, 1, 1)) == math.factorial(4) // (2 * 1 * 1) == 12


def test_multinomial_rejects_negative():
    with pytest.raises(ValueError):
        multinomial((1, -1))


def test_binomial_poly_small():
    assert binomial_poly(0) == Poly.const(1)
    assert binomial_poly(1) == X
    assert binomial_poly(2) == Poly({2: Fraction(1, 2), 1: Fraction(-1, 2)})


def test_binomial_poly_values_match_binomials():
    import math

    for m in range(13):
        for n in range(m + 1):
            assert binomial_poly(n)(m) == math.comb(m, n)


def test_summation_operator_fixtures():
    assert indefinite_sum(Poly.const(1)) == X
    # oracle for L(X): partial sums 0 + 1 + ... + (n-1)
    lx = indefinite_sum(X)
    for n in range(1, 9):
        assert lx(n) == sum(range(n))
    assert lx == binomial_poly(2)
    assert indefinite_sum(X * X) == Poly(
        {3: Fraction(1, 3), 2: Fraction(-1, 2), 1: Fraction(1, 6)}
    )


def test_summation_law_random():
    import random

    rng = random.Random(7)
    for _ in range(10):
        p = Poly({e: rng.randint(-5, 5) for e in range(rng.randint(0, 6) + 1)})
        s = indefinite_sum(p)
        for n in range(1, 11):
            assert s(n) == sum(p(j) for j in range(n))
        assert s(-1) == -p(-1)
        assert s(0) == 0


def test_rota_baxter_weight_one():
    import random

    rng = random.Random(11)
    for _ in range(10):
        p = Poly({e: rng.randint(-4, 4) for e in range(rng.randint(0, 6) + 1)})
        q = Poly({e: rng.randint(-4, 4) for e in range(rng.randint(0, 6) + 1)})
        L = indefinite_sum
        assert L(p) * L(q) == L(L(p) * q) + L(p * L(q)) + L(p * q)


def test_cocycle_at_integers():
    p = Poly({2: 1, 0: Fraction(1, 3)})
    s = indefinite_sum(p)
    for k in range(1, 7):
        for l in range(1, 7):
            assert s(k + l) == s(l) + sum(p(j + l) for j in range(k))


def test_bernoulli_table():
    table = [
        1,
        Fraction(1, 2),
        Fraction(1, 6),
        0,
        Fraction(-1, 30),
        0,
        Fraction(1, 42),
        0,
        Fraction(-1, 30),
        0,
        Fraction(5, 66),
        0,
        Fraction(-691, 2730),
    ]
    for k, want in enumerate(table):
        assert bernoulli(k) == want


def test_poly_printing_and_json():
    p = Poly({3: Fraction(1, 6), 2: Fraction(-1, 2), 1: Fraction(1, 3)})
    assert str(p) == "1/6*X^3 - 1/2*X^2 + 1/3*X"
    assert p.to_json() == {"3": "1/6", "2": "-1/2", "1": "1/3"}
    assert str(Poly.zero()) == "0"
    assert str(Poly.const(-3)) == "-3"


def test_poly_eval_is_exact_at_negative_arguments():
    p = Poly({5: Fraction(1, 7), 1: Fraction(-2, 3)})
    assert p(-2) == Fraction(-32, 7) + Fraction(4, 3)
