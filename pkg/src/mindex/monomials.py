"""Commutative monomials in x_0, x_1, ...: the abelianization of words.

An exponent vector ("alpha") is a trimmed tuple of naturals, alpha[i] being
the exponent of x_i; the empty tuple is the unit marker and never appears
inside nonzero polynomial terms.  The module carries the shift derivations,
the two pre-Lie products (substitution-style and Novikov-style) with their
multi-argument extensions, and the iterated reduced splitting coproduct.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .linear import LinComb, add_term
from .words import NCPoly

Alpha = tuple[int, ...]


def trim(exps: Iterable[int]) -> Alpha:
    out = list(exps)
    while out and out[-1] == 0:
        out.pop()
    if any(e < 0 for e in out):
        raise ValueError(f"negative exponent in {tuple(exps)!r}")
    return tuple(out)


def unit_exp(i: int) -> Alpha:
    """The exponent vector of the single variable x_i."""
    return trim([0] * i + [1])


def alpha_len(a: Alpha) -> int:
    return sum(a)


def alpha_weight(a: Alpha) -> int:
    return sum(i * e for i, e in enumerate(a))


def alpha_deg(a: Alpha) -> int:
    if not a:
        raise ValueError("degree of the unit monomial is undefined")
    return alpha_weight(a) - alpha_len(a) + 1


def alpha_factorial(a: Alpha) -> int:
    out = 1
    for e in a:
        out *= math.factorial(e)
    return out


def alpha_mul(a: Alpha, b: Alpha) -> Alpha:
    n = max(len(a), len(b))
    return tuple(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def alpha_sub(a: Alpha, b: Alpha) -> Alpha:
    if len(b) > len(a) or any(b[i] > a[i] for i in range(len(b))):
        raise ValueError(f"{b} does not divide {a}")
    return trim(a[i] - (b[i] if i < len(b) else 0) for i in range(len(a)))


def alpha_key(a: Alpha):
    """Fixed total order: length first, then exponents lexicographically."""
    return (alpha_len(a), a)


def format_alpha(a: Alpha) -> str:
    if not a:
        return "1"
    parts = []
    for i in range(len(a) - 1, -1, -1):
        if a[i] == 0:
            continue
        parts.append(f"x{i}" if a[i] == 1 else f"x{i}^{a[i]}")
    return "*".join(parts)


def submonomials(a: Alpha):
    """All divisors of x^a, the unit included."""
    ranges = [range(e + 1) for e in a]
    for exps in itertools.product(*ranges):
        yield trim(exps)


def ordered_splits(a: Alpha, parts: int):
    """Ordered decompositions of ``a`` into ``parts`` nonzero summands,
    paired with the multinomial coefficient a!/(a_1!...a_k!)."""
    base = alpha_factorial(a)

    def rec(rest: Alpha, k: int):
        if k == 1:
            if rest:
                yield (rest,)
            return
        for head in submonomials(rest):
            if not head:
                continue
            if alpha_len(head) > alpha_len(rest) - (k - 1):
                continue
            for tail in rec(alpha_sub(rest, head), k - 1):
                yield (head,) + tail

    for split in rec(a, parts):
        denom = 1
        for part in split:
            denom *= alpha_factorial(part)
        yield split, Fraction(base, denom)


class CPoly(LinComb):
    """Polynomial without constant term in the commuting variables x_i."""

    __slots__ = ()

    @staticmethod
    def key_mul(a: Alpha, b: Alpha) -> Alpha:
        return alpha_mul(a, b)

    @staticmethod
    def sort_key(key: Alpha):
        return alpha_key(key)

    format_key = staticmethod(format_alpha)

    @classmethod
    def variable(cls, i: int) -> "CPoly":
        return cls.basis(unit_exp(i))

    @classmethod
    def monomial(cls, a: Alpha, coeff=1) -> "CPoly":
        a = trim(a)
        if not a:
            raise ValueError("the unit monomial is not an element here")
        return cls.basis(a, coeff)


def abelianize(p: NCPoly) -> CPoly:
    """Letter-count image of a word polynomial; coefficients merge."""
    data: dict = {}
    for w, c in p.terms.items():
        exps = [0] * (max(w) + 1)
        for i in w:
            exps[i] += 1
        add_term(data, tuple(exps), c)
    out = CPoly.__new__(CPoly)
    out.terms = data
    return out



def shift_up(p: CPoly) -> CPoly:
    """The derivation sum over n of x_{n+1} d/dx_n."""
    data: dict = {}
    for a, c in p.terms.items():
        for i, e in enumerate(a):
            if e:
                key = alpha_mul(alpha_sub(a, unit_exp(i)), unit_exp(i + 1))
                add_term(data, key, c * e)
    out = CPoly.__new__(CPoly)
    out.terms = data
    return out


def shift_down(p: CPoly) -> CPoly:
    """The derivation sending x_0 to 0 and x_i to x_{i-1}."""
    data: dict = {}
    for a, c in p.terms.items():
        for i, e in enumerate(a):
            if e and i >= 1:
                key = alpha_mul(alpha_sub(a, unit_exp(i)), unit_exp(i - 1))
                add_term(data, key, c * e)
    out = CPoly.__new__(CPoly)
    out.terms = data
    return out


def shift_up_power(p: CPoly, n: int) -> CPoly:
    for _ in range(n):
        p = shift_up(p)
    return p


def shift_down_power(p: CPoly, n: int) -> CPoly:
    for _ in range(n):
        p = shift_down(p)
        if p.is_zero():
            break
    return p


@lru_cache(maxsize=None)
def _shift_down_power_mono(a: Alpha, n: int) -> CPoly:
    return shift_down_power(CPoly.basis(a), n)


def partial(p: CPoly, i: int) -> CPoly:
    """d/dx_i."""
    data: dict = {}
    for a, c in p.terms.items():
        e = a[i] if i < len(a) else 0
        if e:
            add_term(data, alpha_sub(a, unit_exp(i)), c * e)
    out = CPoly.__new__(CPoly)
    out.terms = data
    return out


def prelie(p: CPoly, q: CPoly) -> CPoly:
    """Substitution pre-Lie product: apply the derivation x_n -> shift^n(q) to p."""
    acc = CPoly.zero()
    support = sorted({i for a in p.terms for i, e in enumerate(a) if e})
    for i in support:
        dp = partial(p, i)
        if dp:
            acc = acc + dp * shift_up_power(q, i)
    return acc


def prelie_multi(p: CPoly, args: Sequence[CPoly]) -> CPoly:
    """Symmetric-algebra extension of ``prelie`` to several arguments."""
    k = len(args)
    if k == 0:
        return p
    support = sorted({i for a in p.terms for i, e in enumerate(a) if e})
    acc = CPoly.zero()
    for orders in itertools.product(support, repeat=k):
        deriv = p
        for i in orders:
            deriv = partial(deriv, i)
            if deriv.is_zero():
                break
        if deriv.is_zero():
            continue
        term = deriv
        for i, q in zip(orders, args):
            term = term * shift_up_power(q, i)
        acc = acc + term
    return acc


def novikov(p: CPoly, q: CPoly) -> CPoly:
    """Novikov-style pre-Lie product shift(p) * q."""
    return shift_up(p) * q


def novikov_multi(p: CPoly, args: Sequence[CPoly]) -> CPoly:
    """Its multi-argument extension shift^k(p) * q_1 ... q_k."""
    out = shift_up_power(p, len(args))
    for q in args:
        out = out * q
    return out


SplitTensor = dict[tuple[Alpha, ...], Fraction]


def shuffle_splits(p: CPoly, n: int) -> SplitTensor:
    """Iterated reduced splitting into n+1 nonzero parts, with multinomials."""
    rows: SplitTensor = {}
    for a, c in p.terms.items():
        if n == 0:
            add_term(rows, (a,), c)
            continue
        if alpha_len(a) < n + 1:
            continue
        for split, mult in ordered_splits(a, n + 1):
            add_term(rows, split, c * mult)
    return rows
