"""Bridges between multi-indices, rooted trees and polynomials.

``tree_lift`` sends a degree-0 monomial to the weighted sum of all trees
with that fertility profile, by two independent weightings (inverse
symmetry factors against ``lift_coeff`` times plane counts) that must
agree.  ``poly_invariant`` computes the fundamental polynomial invariant
by three routes: through the tree lift, through a summation fixed point,
and directly from the iterated reduced coproduct.  Its values at -1 give
the character inverting the substitution counit, which in turn yields the
closed antipode formula.  ``ds_solve`` expands the grafting fixed-point
series driven by a coefficient sequence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .bialgebra import (
    Character,
    ForestMono,
    SElem,
    STensor,
    X0,
    _block_coproduct_fm,
    forest_mono,
    graft_coproduct,
    sub_coproduct,
)
from .exact import Poly, binomial_poly, indefinite_sum
from .linear import add_term
from .monomials import (
    Alpha,
    alpha_deg,
    alpha_factorial,
    alpha_key,
    alpha_len,
    alpha_sub,
    format_alpha,
    submonomials,
    trim,
    unit_exp,
)
from .trees import (
    HCKElem,
    HCKTensor,
    RootedTree,
    all_trees,
    cut_coproduct_elem,
    contract_coproduct_elem,
    fertility_monomial,
    format_forest,
    plane_count,
    strict_order_poly_elem,
    symmetry_factor,
    trees_with_monomial,
)

ROUTES = ("via-ck", "fixed-point", "direct")


def lift_coeff(a: Alpha) -> Fraction:
    """prod(a_i!) / prod(i!^{a_i}); not always an integer."""
    a = trim(a)
    if not a:
        raise ValueError("unit monomial has no lift coefficient")
    num = alpha_factorial(a)
    den = 1
    for i, e in enumerate(a):
        den *= math.factorial(i) ** e
    return Fraction(num, den)


@lru_cache(maxsize=None)
def tree_lift(a: Alpha) -> HCKElem:
    """Weighted sum of trees with fertility monomial x^a; zero off degree 0.

    Both closed weightings are evaluated and compared on every call.
    """
    a = trim(a)
    if not a:
        raise ValueError("unit monomial does not lift")
    if alpha_deg(a) != 0:
        return HCKElem.zero()
    fact = alpha_factorial(a)
    c = lift_coeff(a)
    by_symmetry = HCKElem(
        [((t,), Fraction(fact, symmetry_factor(t))) for t in trees_with_monomial(a)]
    )
    by_plane = HCKElem(
        [((t,), c * plane_count(t)) for t in trees_with_monomial(a)]
    )
    if by_symmetry != by_plane:
        raise AssertionError(f"tree lift weightings disagree on {format_alpha(a)}")
    return by_plane


def tree_lift_fm(f: ForestMono) -> HCKElem:
    out = HCKElem.one()
    for block in f:
        out = out * tree_lift(block)
        if out.is_zero():
            break
    return out


def tree_lift_elem(e: SElem) -> HCKElem:
    return e.map_keys(tree_lift_fm, target=HCKElem)


# -- the polynomial invariant, three ways ----------------------------------


class _SeriesCoeffs:
    """Coefficient extraction for powers of sum_beta v(beta)/beta! X^beta."""

    def __init__(self, value_fn, zero, one):
        self.value_fn = value_fn
        self.zero = zero
        self.one = one
        self._memo: dict[tuple[Alpha, int], object] = {}

    def power_coeff(self, gamma: Alpha, i: int):
        if i == 0:
            return self.one if not gamma else self.zero
        key = (gamma, i)
        v = self._memo.get(key)
        if v is not None:
            return v
        total = self.zero
        for first in submonomials(gamma):
            if not first:
                continue
            if alpha_len(first) > alpha_len(gamma) - (i - 1):
                continue
            rest = self.power_coeff(alpha_sub(gamma, first), i - 1)
            if not rest:
                continue
            total = total + self.value_fn(first) * Fraction(1, alpha_factorial(first)) * rest
        self._memo[key] = total
        return total


@lru_cache(maxsize=None)
def _invariant_fixed_point(a: Alpha) -> Poly:
    """Extract the x^a coefficient of the summation fixed-point series."""
    series = _SeriesCoeffs(_invariant_fixed_point, Poly.zero(), Poly.const(1))
    inner = Poly.zero()
    for i, e in enumerate(a):
        if not e:
            continue
        coeff = series.power_coeff(alpha_sub(a, unit_exp(i)), i)
        inner = inner + coeff.scale(Fraction(1, math.factorial(i)))
    return indefinite_sum(inner).scale(alpha_factorial(a))


@lru_cache(maxsize=None)
def _invariant_direct(a: Alpha) -> Poly:
    """Iterated-coproduct formula: counit words against binomial polynomials."""
    state: dict[ForestMono, Fraction] = {forest_mono([a]): Fraction(1)}
    result = Poly.zero()
    k = 1
    while state:
        hit = Fraction(0)
        for f, c in state.items():
            if all(b == X0 for b in f):
                hit += c
        if hit:
            result = result + binomial_poly(k).scale(hit)
        nxt: dict[ForestMono, Fraction] = {}
        for f, c in state.items():
            for (f1, f2), c2 in _block_coproduct_fm(f, "graft").terms.items():
                if not f1 or not f2:
                    continue
                if all(b == X0 for b in f2):
                    add_term(nxt, f1, c * c2)
        state = nxt
        k += 1
    return result


def poly_invariant(a: Alpha, route: str = "via-ck") -> Poly:
    """Fundamental polynomial invariant of the monomial x^a."""
    a = trim(a)
    if not a:
        raise ValueError("unit monomial has no invariant here")
    if route == "via-ck":
        return strict_order_poly_elem(tree_lift(a))
    if route == "fixed-point":
        return _invariant_fixed_point(a)
    if route == "direct":
        return _invariant_direct(a)
    raise ValueError(f"unknown route {route!r}; choose from {ROUTES}")


def poly_invariant_fm(f: ForestMono, route: str = "via-ck") -> Poly:
    out = Poly.const(1)
    for block in f:
        out = out * poly_invariant(block, route)
        if out.is_zero():
            break
    return out


# -- the inverse character and the closed antipode --------------------------


@lru_cache(maxsize=None)
def mu_value(a: Alpha) -> Fraction:
    """Value at x^a of the convolution inverse of the substitution counit.

    Computed from the sign-flipped fixed point and checked against the
    invariant evaluated at -1.
    """
    a = trim(a)
    if not a:
        raise ValueError("characters take value 1 on the unit; pass a monomial")
    series = _SeriesCoeffs(mu_value, Fraction(0), Fraction(1))
    inner = Fraction(0)
    for i, e in enumerate(a):
        if not e:
            continue
        inner += Fraction(1, math.factorial(i)) * series.power_coeff(
            alpha_sub(a, unit_exp(i)), i
        )
    value = -alpha_factorial(a) * inner
    if value != _invariant_fixed_point(a)(-1):
        raise AssertionError(f"mu routes disagree on {format_alpha(a)}")
    return value


mu_character = Character(mu_value, "mu")


def antipode_via_mu(e: SElem) -> SElem:
    """Closed antipode: feed mu into the left slot of the substitution
    coproduct."""
    out = SElem.zero()
    for (left, right), c in sub_coproduct(e).terms.items():
        v = mu_character.forest(left)
        if v:
            out = out + SElem.basis(right, c * v)
    return out


# -- Dyson-Schwinger expansion ----------------------------------------------


@dataclass
class DSSolution:
    """Tree coefficients of the grafting fixed-point series, grouped by the
    monomial recording each tree's fertility profile."""

    coeffs: tuple[Fraction, ...]
    max_vertices: int
    entries: dict[Alpha, HCKElem]

    def lines(self) -> list[str]:
        out = []
        for a in sorted(self.entries, key=alpha_key):
            elem = self.entries[a]
            body = " + ".join(
                (f"{c}*{format_forest(f)}" for f, c in elem.sorted_terms())
            )
            out.append(f"{format_alpha(a)}\t{body}")
        return out

    def to_json(self):
        return {
            format_alpha(a): [
                [str(c), format_forest(f)] for f, c in self.entries[a].sorted_terms()
            ]
            for a in sorted(self.entries, key=alpha_key)
        }


def ds_solve(coeffs: Sequence, max_vertices: int) -> DSSolution:
    """Expand the grafting fixed point through the given vertex count.

    ``coeffs`` is the driving coefficient sequence, zero beyond its end;
    the recursion assigns a tree with root fertility r the coefficient
    a_r * r!/(multiplicities!) times the child coefficients.
    """
    if max_vertices < 1:
        raise ValueError("max_vertices must be >= 1")
    a = tuple(Fraction(c) for c in coeffs)

    def drive(r: int) -> Fraction:
        return a[r] if r < len(a) else Fraction(0)

    memo: dict = {}

    def q(t: RootedTree) -> Fraction:
        v = memo.get(t.enc)
        if v is None:
            r = t.fertility()
            v = drive(r) * math.factorial(r)
            for child, mult in t.child_multiplicities():
                if not v:
                    break
                v *= q(child) ** mult * Fraction(1, math.factorial(mult))
            memo[t.enc] = v
        return v

    entries: dict[Alpha, HCKElem] = {}
    for n in range(1, max_vertices + 1):
        for t in all_trees(n):
            c = q(t)
            if not c:
                continue
            key = fertility_monomial(t)
            entries[key] = entries.get(key, HCKElem.zero()) + HCKElem.tree(t, c)
    return DSSolution(coeffs=a, max_vertices=max_vertices, entries=entries)


# -- morphism checks ---------------------------------------------------------


def _lift_tensor(t: STensor) -> HCKTensor:
    data: dict = {}
    for (left, right), c in t.terms.items():
        lifted_l = tree_lift_fm(left)
        if lifted_l.is_zero():
            continue
        lifted_r = tree_lift_fm(right)
        if lifted_r.is_zero():
            continue
        for fl, cl in lifted_l.terms.items():
            for fr, cr in lifted_r.terms.items():
                add_term(data, (fl, fr), c * cl * cr)
    out = HCKTensor.__new__(HCKTensor)
    out.terms = data
    return out


def tree_lift_is_morphism(a: Alpha) -> bool:
    """Check that the lift intertwines both coproduct pairs on x^a."""
    a = trim(a)
    e = SElem.block(a)
    lifted = tree_lift_elem(e)
    if _lift_tensor(graft_coproduct(e)) != cut_coproduct_elem(lifted):
        return False
    return _lift_tensor(sub_coproduct(e)) == contract_coproduct_elem(lifted)
