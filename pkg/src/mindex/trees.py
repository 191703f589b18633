"""Canonical unordered rooted trees, forests and the two tree coproducts.

A tree is a multiset of child subtrees; the canonical form stores children
sorted by their nested-tuple encodings, so structural equality is encoding
equality.  Forests are sorted tuples of trees, the empty forest being the
unit.  ``cut_coproduct`` is the admissible-cut coproduct defined through
the grafting cocycle (with a direct edge-cut oracle for cross-checking);
``contract_coproduct`` extracts vertex partitions into subtrees and
contracts them.  ``strict_order_poly`` maps a forest to the polynomial
counting strictly increasing labelings.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .exact import Poly, indefinite_sum
from .linear import LinComb, add_term
from .monomials import (
    Alpha,
    alpha_deg,
    alpha_len,
    alpha_sub,
    submonomials,
    trim,
    unit_exp,
)


class RootedTree:
    """Unordered rooted tree in canonical form."""

    __slots__ = ("children", "enc", "size")

    def __init__(self, children: Iterable["RootedTree"] = ()):
        kids = tuple(sorted(children, key=lambda t: t.enc))
        self.children = kids
        self.enc = tuple(t.enc for t in kids)
        self.size = 1 + sum(t.size for t in kids)

    def __eq__(self, other):
        return isinstance(other, RootedTree) and self.enc == other.enc

    def __hash__(self):
        return hash(self.enc)

    def __lt__(self, other):
        return self.enc < other.enc

    def __str__(self):
        return "B[" + ",".join(str(c) for c in self.children) + "]"

    def __repr__(self):
        return f"RootedTree({self})"

    def fertility(self) -> int:
        return len(self.children)

    def child_multiplicities(self) -> list[tuple["RootedTree", int]]:
        out: list[tuple[RootedTree, int]] = []
        for t in self.children:
            if out and out[-1][0] == t:
                out[-1] = (t, out[-1][1] + 1)
            else:
                out.append((t, 1))
        return out


LEAF = RootedTree()

Forest = tuple[RootedTree, ...]


def forest(trees: Iterable[RootedTree]) -> Forest:
    return tuple(sorted(trees, key=lambda t: t.enc))


def forest_mul(a: Forest, b: Forest) -> Forest:
    return tuple(sorted(a + b, key=lambda t: t.enc))


def forest_size(f: Forest) -> int:
    return sum(t.size for t in f)


def forest_key(f: Forest):
    return (len(f), tuple(t.enc for t in f))


def format_forest(f: Forest) -> str:
    if not f:
        return "1"
    return " | ".join(str(t) for t in f)


def bplus(f: Forest | Iterable[RootedTree]) -> RootedTree:
    """Graft all roots of a forest onto a fresh common root."""
    return RootedTree(tuple(f))


def ladder(n: int) -> RootedTree:
    if n < 1:
        raise ValueError("ladder needs n >= 1")
    t = LEAF
    for _ in range(n - 1):
        t = RootedTree((t,))
    return t


def corolla(n: int) -> RootedTree:
    if n < 1:
        raise ValueError("corolla needs n >= 1")
    return RootedTree((LEAF,) * (n - 1))


class HCKElem(LinComb):
    """Linear combination of forests; product is disjoint union."""

    __slots__ = ()

    key_mul = staticmethod(forest_mul)
    sort_key = staticmethod(forest_key)
    format_key = staticmethod(format_forest)

    @classmethod
    def tree(cls, t: RootedTree, coeff=1) -> "HCKElem":
        return cls.basis((t,), coeff)


class HCKTensor(LinComb):
    __slots__ = ()

    unit_key = ((), ())

    @staticmethod
    def key_mul(a, b):
        return (forest_mul(a[0], b[0]), forest_mul(a[1], b[1]))

    @staticmethod
    def sort_key(key):
        return (forest_key(key[0]), forest_key(key[1]))

    @staticmethod
    def format_key(key) -> str:
        return f"{format_forest(key[0])} (x) {format_forest(key[1])}"

    def to_json(self):
        return [
            [str(c), format_forest(k[0]), format_forest(k[1])]
            for k, c in self.sorted_terms()
        ]


class HCKTensor3(LinComb):
    __slots__ = ()

    unit_key = ((), (), ())

    @staticmethod
    def key_mul(a, b):
        return tuple(forest_mul(x, y) for x, y in zip(a, b))

    @staticmethod
    def sort_key(key):
        return tuple(forest_key(f) for f in key)

    @staticmethod
    def format_key(key) -> str:
        return " (x) ".join(format_forest(f) for f in key)


# -- statistics -----------------------------------------------------------

_sym_memo: dict = {}
_plane_memo: dict = {}


def symmetry_factor(t: RootedTree) -> int:
    """Order of the automorphism group."""
    v = _sym_memo.get(t.enc)
    if v is None:
        v = 1
        for child, mult in t.child_multiplicities():
            v *= symmetry_factor(child) ** mult * math.factorial(mult)
        _sym_memo[t.enc] = v
    return v


def plane_count(t: RootedTree) -> int:
    """Number of plane embeddings: orderings of children up to repeats."""
    v = _plane_memo.get(t.enc)
    if v is None:
        mults = [m for _, m in t.child_multiplicities()]
        v = math.factorial(sum(mults))
        for m in mults:
            v //= math.factorial(m)
        for child, mult in t.child_multiplicities():
            v *= plane_count(child) ** mult
        _plane_memo[t.enc] = v
    return v


def fertility_monomial(t: RootedTree) -> Alpha:
    """Exponent vector counting vertices by fertility."""
    counts: dict[int, int] = {}

    def walk(node: RootedTree):
        counts[node.fertility()] = counts.get(node.fertility(), 0) + 1
        for c in node.children:
            walk(c)

    walk(t)
    return trim(counts.get(i, 0) for i in range(max(counts) + 1))


def tree_stats(t: RootedTree) -> tuple[int, int, Alpha]:
    """(symmetry factor, plane embedding count, fertility monomial)."""
    return symmetry_factor(t), plane_count(t), fertility_monomial(t)


# -- enumeration ----------------------------------------------------------


@lru_cache(maxsize=None)
def all_trees(n: int) -> tuple[RootedTree, ...]:
    """All canonical rooted trees with exactly n vertices."""
    if n < 1:
        return ()
    if n == 1:
        return (LEAF,)
    out = []
    for f in _forests_of_size(n - 1):
        out.append(RootedTree(f))
    return tuple(sorted(set(out), key=lambda t: t.enc))


@lru_cache(maxsize=None)
def _forests_of_size(n: int) -> tuple[Forest, ...]:
    """All multisets of trees with total vertex count n."""
    if n == 0:
        return ((),)
    pool = []
    for m in range(1, n + 1):
        pool.extend(all_trees(m))
    pool.sort(key=lambda t: (t.size, t.enc))
    out: list[Forest] = []

    def rec(remaining: int, start: int, acc: list[RootedTree]):
        if remaining == 0:
            out.append(forest(acc))
            return
        for idx in range(start, len(pool)):
            t = pool[idx]
            if t.size > remaining:
                break
            acc.append(t)
            rec(remaining - t.size, idx, acc)
            acc.pop()

    rec(n, 0, [])
    return tuple(sorted(set(out), key=forest_key))


_twm_memo: dict[Alpha, tuple[RootedTree, ...]] = {}


def trees_with_monomial(a: Alpha) -> tuple[RootedTree, ...]:
    """All trees whose fertility monomial is x^a; empty unless deg(a) = 0."""
    a = trim(a)
    if not a:
        raise ValueError("the unit monomial indexes no tree")
    if alpha_deg(a) != 0:
        return ()
    return _twm(a)


def _twm(a: Alpha) -> tuple[RootedTree, ...]:
    cached = _twm_memo.get(a)
    if cached is not None:
        return cached
    if a == (1,):
        out: tuple[RootedTree, ...] = (LEAF,)
        _twm_memo[a] = out
        return out
    found = set()
    for r in range(1, len(a)):
        if a[r] == 0:
            continue
        rest = alpha_sub(a, unit_exp(r))
        for kids in _child_multisets(rest, r, None):
            found.add(RootedTree(kids))
    out = tuple(sorted(found, key=lambda t: t.enc))
    _twm_memo[a] = out
    return out


def _child_multisets(rest: Alpha, r: int, low: RootedTree | None):
    """Multisets of r trees, nondecreasing from ``low``, with fertility
    monomials multiplying to x^rest."""
    if r == 0:
        if not rest:
            yield ()
        return
    for beta in submonomials(rest):
        if not beta or alpha_deg(beta) != 0:
            continue
        if alpha_len(beta) > alpha_len(rest) - (r - 1):
            continue
        for t in _twm(beta):
            if low is not None and t.enc < low.enc:
                continue
            for tail in _child_multisets(alpha_sub(rest, beta), r - 1, t):
                yield (t,) + tail


def build_forest(fertilities: Sequence[int]) -> Forest:
    """Some forest realizing the given fertility multiset.

    Requires sum(fertilities) <= n - 1; equality forces a single tree.
    """
    ks = sorted(int(k) for k in fertilities)
    n = len(ks)
    if any(k < 0 for k in ks):
        raise ValueError("fertilities must be nonnegative")
    if sum(ks) > n - 1:
        raise ValueError(
            f"no forest: {sum(ks)} edges demanded by fertilities, at most {n - 1} available"
        )
    roots: list[RootedTree] = []
    for k in ks:
        if k == 0:
            roots.append(LEAF)
        else:
            # ascending order keeps enough roots around: if the first i
            # fertilities summed past i-1, the tail would push the total
            # beyond n-1, already rejected above
            roots.sort(key=lambda t: t.enc)
            adopted, roots = roots[:k], roots[k:]
            roots.append(RootedTree(adopted))
    return forest(roots)


# -- coproducts -----------------------------------------------------------


@lru_cache(maxsize=None)
def _cut_coproduct_tree(t: RootedTree) -> HCKTensor:
    """Admissible-cut coproduct of one tree, via the grafting cocycle."""
    inner = cut_coproduct(t.children)
    rows: dict = {((), (t,)): Fraction(1)}
    for (left, right), c in inner.terms.items():
        add_term(rows, ((bplus(left),), right), c)
    out = HCKTensor.__new__(HCKTensor)
    out.terms = rows
    return out


def cut_coproduct(f: Forest) -> HCKTensor:
    """Admissible-cut coproduct: rooted remainder on the left, pruned
    forest on the right; multiplicative over forests."""
    out = HCKTensor.one()
    for t in f:
        out = out * _cut_coproduct_tree(t)
    return out


def cut_coproduct_elem(e: HCKElem) -> HCKTensor:
    return e.map_keys(cut_coproduct, target=HCKTensor)


def _tree_edges(t: RootedTree) -> tuple[list[list[int]], list[int]]:
    """Explicit children lists and parent array, vertices in preorder."""
    children: list[list[int]] = []
    parent: list[int] = []

    def walk(node: RootedTree, par: int) -> int:
        idx = len(children)
        children.append([])
        parent.append(par)
        for c in node.children:
            cidx = walk(c, idx)
            children[idx].append(cidx)
        return idx

    walk(t, -1)
    return children, parent


def _subtree_from(children: list[list[int]], keep: set[int] | None, v: int) -> RootedTree:
    kids = [
        _subtree_from(children, keep, c)
        for c in children[v]
        if keep is None or c in keep
    ]
    return RootedTree(kids)


def cut_coproduct_oracle(t: RootedTree) -> HCKTensor:
    """Direct enumeration of admissible edge cuts; test oracle for the
    cocycle recursion."""
    children, parent = _tree_edges(t)
    n = len(parent)
    edges = [v for v in range(1, n)]  # edge v := (parent[v], v)

    def is_ancestor(a: int, b: int) -> bool:
        while b != -1:
            if b == a:
                return True
            b = parent[b]
        return False

    rows: dict = {((), (t,)): Fraction(1)}
    for k in range(0, len(edges) + 1):
        for cut in itertools.combinations(edges, k):
            ok = True
            for a, b in itertools.combinations(cut, 2):
                if is_ancestor(a, b) or is_ancestor(b, a):
                    ok = False
                    break
            if not ok:
                continue
            cutset = set(cut)
            root_side: set[int] = set()
            stack = [0]
            while stack:
                v = stack.pop()
                root_side.add(v)
                for c in children[v]:
                    if c not in cutset:
                        stack.append(c)
            left = _subtree_from(children, root_side, 0)
            pruned = forest(_subtree_from(children, None, v) for v in cut)
            add_term(rows, ((left,), pruned), Fraction(1))
    out = HCKTensor.__new__(HCKTensor)
    out.terms = rows
    return out


@lru_cache(maxsize=None)
def _contract_coproduct_tree(t: RootedTree) -> HCKTensor:
    """Contraction-extraction coproduct of one tree.

    A partition of the vertices into connected blocks is a choice of kept
    edges; the left factor contracts each block, the right factor is the
    forest of blocks.
    """
    children, parent = _tree_edges(t)
    n = len(parent)
    edges = list(range(1, n))
    rows: dict = {}
    for bits in itertools.product((False, True), repeat=len(edges)):
        kept = {edges[i] for i in range(len(edges)) if bits[i]}
        top = list(range(n))  # representative: highest kept ancestor
        for v in range(1, n):
            if v in kept:
                top[v] = top[parent[v]]
        blocks: dict[int, list[int]] = {}
        for v in range(n):
            blocks.setdefault(top[v], []).append(v)

        block_trees = forest(
            _subtree_from(children, set(blocks[r]), r) for r in blocks
        )
        quotient_children: dict[int, list[int]] = {r: [] for r in blocks}
        for v in range(1, n):
            if v not in kept:
                quotient_children[top[parent[v]]].append(v)

        def qtree(r: int) -> RootedTree:
            return RootedTree(qtree(c) for c in quotient_children[r])

        left = qtree(0)
        add_term(rows, ((left,), block_trees), Fraction(1))
    out = HCKTensor.__new__(HCKTensor)
    out.terms = rows
    return out


def contract_coproduct(f: Forest) -> HCKTensor:
    """Contraction-extraction coproduct: contracted forest on the left,
    extracted subtrees on the right; multiplicative over forests."""
    out = HCKTensor.one()
    for t in f:
        out = out * _contract_coproduct_tree(t)
    return out


def contract_coproduct_elem(e: HCKElem) -> HCKTensor:
    return e.map_keys(contract_coproduct, target=HCKTensor)


def counit_cut(e: HCKElem) -> Fraction:
    """Coefficient of the empty forest."""
    return e.coeff(())


def counit_contract(e: HCKElem) -> Fraction:
    """Character supported on forests of isolated vertices."""
    total = Fraction(0)
    for f, c in e.terms.items():
        if all(t is LEAF or t == LEAF for t in f):
            total += c
    return total


# -- the polynomial invariant ---------------------------------------------


@lru_cache(maxsize=None)
def _strict_order_poly_tree(t: RootedTree) -> Poly:
    acc = Poly.const(1)
    for c in t.children:
        acc = acc * _strict_order_poly_tree(c)
    return indefinite_sum(acc)


def strict_order_poly(f: Forest) -> Poly:
    """Polynomial whose value at n counts strictly increasing maps from the
    forest poset to {1..n}; algebra map intertwining grafting with the
    summation operator."""
    acc = Poly.const(1)
    for t in f:
        acc = acc * _strict_order_poly_tree(t)
    return acc


def strict_order_poly_elem(e: HCKElem) -> Poly:
    acc = Poly.zero()
    for f, c in e.terms.items():
        acc = acc + strict_order_poly(f).scale(c)
    return acc
