"""The double bialgebra of forest monomials.

A forest monomial is a multiset of nonzero exponent vectors ("blocks"),
stored as a tuple sorted in the fixed block order; the empty tuple is the
unit.  Two coproducts live here:

* ``sub_coproduct`` (substitution type, dual to operadic composition):
  splits a block into parts, down-shifts each part and records the shift
  orders on the left, with a 1/beta! normalization;
* ``graft_coproduct`` (Hopf type, dual to the grafting product): splits a
  block into k+1 parts, applies the k-fold down-shift to the first part,
  and bar-multiplies the rest, weighted 1/k!.

Both extend multiplicatively to forests and make the space a double
bialgebra; the compatibility test ``cointeraction_holds`` checks the
defining identity on explicit elements.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .linear import LinComb, add_term
from .monomials import (
    Alpha,
    alpha_deg,
    alpha_key,
    alpha_len,
    alpha_weight,
    format_alpha,
    ordered_splits,
    _shift_down_power_mono,
)

ForestMono = tuple[Alpha, ...]

X0: Alpha = (1,)


def forest_mono(blocks) -> ForestMono:
    blocks = tuple(blocks)
    if any(not b for b in blocks):
        raise ValueError("forest blocks must be nonzero monomials")
    return tuple(sorted(blocks, key=alpha_key))


def fm_mul(a: ForestMono, b: ForestMono) -> ForestMono:
    return tuple(sorted(a + b, key=alpha_key))


def fm_len(f: ForestMono) -> int:
    return sum(alpha_len(b) for b in f)


def fm_weight(f: ForestMono) -> int:
    return sum(alpha_weight(b) for b in f)


def fm_deg(f: ForestMono) -> int:
    return sum(alpha_deg(b) for b in f)


def format_fm(f: ForestMono) -> str:
    if not f:
        return "1"
    return " | ".join(format_alpha(b) for b in f)


def fm_key(f: ForestMono):
    return (len(f), tuple(alpha_key(b) for b in f))


class SElem(LinComb):
    """Linear combination of forest monomials; product is disjoint union."""

    __slots__ = ()

    key_mul = staticmethod(fm_mul)
    sort_key = staticmethod(fm_key)
    format_key = staticmethod(format_fm)

    @classmethod
    def block(cls, a: Alpha, coeff=1) -> "SElem":
        return cls.basis(forest_mono([a]), coeff)


def bar_product(a: SElem, b: SElem) -> SElem:
    """Commutative product of forest monomials, bilinear."""
    return a * b


class STensor(LinComb):
    """Two-slot tensors of forest monomials."""

    __slots__ = ()

    unit_key = ((), ())

    @staticmethod
    def key_mul(a, b):
        return (fm_mul(a[0], b[0]), fm_mul(a[1], b[1]))

    @staticmethod
    def sort_key(key):
        return (fm_key(key[0]), fm_key(key[1]))

    @staticmethod
    def format_key(key) -> str:
        return f"{format_fm(key[0])} (x) {format_fm(key[1])}"

    def to_json(self):
        return [
            [str(c), [format_alpha(b) for b in k[0]], [format_alpha(b) for b in k[1]]]
            for k, c in self.sorted_terms()
        ]


class STensor3(LinComb):
    """Three-slot tensors, used by the compatibility check."""

    __slots__ = ()

    unit_key = ((), (), ())

    @staticmethod
    def key_mul(a, b):
        return tuple(fm_mul(x, y) for x, y in zip(a, b))

    @staticmethod
    def sort_key(key):
        return tuple(fm_key(f) for f in key)

    @staticmethod
    def format_key(key) -> str:
        return " (x) ".join(format_fm(f) for f in key)


@lru_cache(maxsize=None)
def _sub_coproduct_block(a: Alpha) -> STensor:
    """Substitution coproduct of a single block.

    Sums over splittings of the block into k nonzero parts and shift orders
    n_1..n_k per part; the left factor is the single block recording the
    multiset of orders, normalized by 1/k! so that each order multiset is
    counted once per its stabilizer (equivalently, the 1/beta! form).
    """
    rows: dict = {}
    n_letters = alpha_len(a)
    for k in range(1, n_letters + 1):
        inv_kfact = Fraction(1, math.factorial(k))
        for split, mult in ordered_splits(a, k):
            per_slot = []
            for part in split:
                options = []
                for order in range(alpha_weight(part) + 1):
                    image = _shift_down_power_mono(part, order)
                    for mono, c in image.terms.items():
                        options.append((order, mono, c))
                per_slot.append(options)
            base = mult * inv_kfact
            _expand_rows(rows, per_slot, base)
    out = STensor.__new__(STensor)
    out.terms = rows
    return out


def _expand_rows(rows: dict, per_slot, base: Fraction) -> None:
    def rec(idx: int, orders, blocks, coeff):
        if idx == len(per_slot):
            left_counts = [0] * (max(orders) + 1 if orders else 1)
            for o in orders:
                left_counts[o] += 1
            while left_counts and left_counts[-1] == 0:
                left_counts.pop()
            left = forest_mono([tuple(left_counts)])
            add_term(rows, (left, forest_mono(blocks)), coeff)
            return
        for order, mono, c in per_slot[idx]:
            rec(idx + 1, orders + [order], blocks + [mono], coeff * c)

    rec(0, [], [], base)


@lru_cache(maxsize=None)
def _graft_coproduct_block(a: Alpha) -> STensor:
    """Hopf coproduct of a single block: primitive part plus splittings
    whose first piece is k-fold down-shifted, the k others bar-multiplied."""
    rows: dict = {
        ((forest_mono([a])), ()): Fraction(1),
        ((), forest_mono([a])): Fraction(1),
    }
    for k in range(1, alpha_len(a)):
        inv_kfact = Fraction(1, math.factorial(k))
        for split, mult in ordered_splits(a, k + 1):
            head, rest = split[0], split[1:]
            image = _shift_down_power_mono(head, k)
            if image.is_zero():
                continue
            right = forest_mono(rest)
            for mono, c in image.terms.items():
                add_term(rows, ((mono,), right), mult * inv_kfact * c)
    out = STensor.__new__(STensor)
    out.terms = rows
    return out


@lru_cache(maxsize=None)
def _block_coproduct_fm(f: ForestMono, which: str) -> STensor:
    block_fn = _sub_coproduct_block if which == "sub" else _graft_coproduct_block
    out = STensor.one()
    for b in f:
        out = out * block_fn(b)
    return out


def sub_coproduct(e: SElem) -> STensor:
    """Substitution coproduct, extended multiplicatively then linearly."""
    return e.map_keys(lambda f: _block_coproduct_fm(f, "sub"), target=STensor)


def graft_coproduct(e: SElem) -> STensor:
    """Hopf coproduct, extended multiplicatively then linearly."""
    return e.map_keys(lambda f: _block_coproduct_fm(f, "graft"), target=STensor)


def counit_sub(e: SElem) -> Fraction:
    """Character supported on powers of the single block x_0."""
    total = Fraction(0)
    for f, c in e.terms.items():
        if all(b == X0 for b in f):
            total += c
    return total


def counit_graft(e: SElem) -> Fraction:
    """Coefficient of the empty forest."""
    return e.coeff(())


_antipode_memo: dict[ForestMono, SElem] = {}


def antipode(e: SElem) -> SElem:
    """Antipode for the Hopf coproduct, by the connected recursion."""
    return e.map_keys(_antipode_fm)


def _antipode_fm(f: ForestMono) -> SElem:
    if not f:
        return SElem.one()
    cached = _antipode_memo.get(f)
    if cached is not None:
        return cached
    acc = SElem.basis(f, -1)
    for (left, right), c in _block_coproduct_fm(f, "graft").terms.items():
        if not left or not right:
            continue
        acc = acc - _antipode_fm(left).scale(c) * SElem.basis(right)
    _antipode_memo[f] = acc
    return acc


class Character:
    """Algebra map to the rationals, fixed by its values on single blocks.

    Values are computed lazily and cached; the generating family of blocks
    is infinite, so no table is materialized.
    """

    def __init__(self, on_block: Callable[[Alpha], Fraction], name: str = ""):
        self._on_block = on_block
        self._cache: dict[Alpha, Fraction] = {}
        self.name = name

    def block(self, a: Alpha) -> Fraction:
        v = self._cache.get(a)
        if v is None:
            v = Fraction(self._on_block(a))
            self._cache[a] = v
        return v

    def forest(self, f: ForestMono) -> Fraction:
        out = Fraction(1)
        for b in f:
            out *= self.block(b)
            if not out:
                break
        return out

    def __call__(self, e: SElem) -> Fraction:
        return sum((c * self.forest(f) for f, c in e.terms.items()), Fraction(0))


eps_sub_character = Character(lambda a: Fraction(1 if a == X0 else 0), "eps_sub")
eps_graft_character = Character(lambda a: Fraction(0), "eps_graft")


def convolve(f: Character, g: Character, which: str = "graft") -> Character:
    """Convolution product of characters for the chosen coproduct."""
    if which not in ("graft", "sub"):
        raise ValueError("which must be 'graft' or 'sub'")
    block_fn = _graft_coproduct_block if which == "graft" else _sub_coproduct_block

    def on_block(a: Alpha) -> Fraction:
        total = Fraction(0)
        for (left, right), c in block_fn(a).terms.items():
            fl = f.forest(left)
            if fl:
                total += c * fl * g.forest(right)
        return total

    return Character(on_block, f"({f.name} conv[{which}] {g.name})")


def cointeraction_holds(e: SElem) -> bool:
    """Defining compatibility of the pair of coproducts on e, checked exactly.

    Also verifies the counit half: feeding the graft counit into the left
    slot of the substitution coproduct returns the counit times the unit.
    """
    lhs: dict = {}
    for (a, b), c in sub_coproduct(e).terms.items():
        for (a1, a2), c2 in _block_coproduct_fm(a, "graft").terms.items():
            add_term(lhs, (a1, a2, b), c * c2)

    rhs: dict = {}
    for (u, v), c in graft_coproduct(e).terms.items():
        du = _block_coproduct_fm(u, "sub")
        dv = _block_coproduct_fm(v, "sub")
        for (u1, u2), cu in du.terms.items():
            for (v1, v2), cv in dv.terms.items():
                add_term(rhs, (u1, v1, fm_mul(u2, v2)), c * cu * cv)
    if lhs != rhs:
        return False

    counit_side = SElem.zero()
    for (a, b), c in sub_coproduct(e).terms.items():
        if not a:
            counit_side = counit_side + SElem.basis(b, c)
    return counit_side == SElem.one(counit_graft(e))
