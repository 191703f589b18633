import random
from fractions import Fraction

import pytest

from mindex.exact import Poly, binomial_poly, indefinite_sum
from mindex.linear import add_term
from mindex.monomials import alpha_factorial, alpha_len, alpha_weight
from mindex.morphisms import lift_coeff
from mindex.trees import (
    LEAF,
    HCKElem,
    HCKTensor,
    RootedTree,
    all_trees,
    bplus,
    build_forest,
    contract_coproduct,
    corolla,
    counit_contract,
    counit_cut,
    cut_coproduct,
    cut_coproduct_oracle,
    fertility_monomial,
    forest,
    forest_mul,
    ladder,
    plane_count,
    strict_order_poly,
    symmetry_factor,
    tree_stats,
    trees_with_monomial,
)

T_A = bplus([ladder(2), LEAF])  # root of fertility 2 with a leaf and a chain
T_B = bplus([corolla(3)])  # stalk carrying a cherry


def trees_up_to(n):
    for m in range(1, n + 1):
        yield from all_trees(m)


def test_bplus_fixtures():
    assert bplus(()) == LEAF
    assert bplus((LEAF, LEAF)) == corolla(3)
    t = LEAF
    for _ in range(2):
        t = bplus((t,))
    assert t == ladder(3)


def test_canonical_form_insertion_order():
    rng = random.Random(2)
    kids = [ladder(3), corolla(3), LEAF, ladder(2)]
    reference = RootedTree(kids)
    for _ in range(10):
        rng.shuffle(kids)
        assert RootedTree(kids) == reference


def test_tree_stats_fixtures():
    assert tree_stats(ladder(4)) == (1, 1, (1, 3))
    assert tree_stats(T_A) == (1, 2, (2, 1, 1))
    assert tree_stats(corolla(3)) == (2, 1, (2, 0, 1))
    assert tree_stats(T_B) == (2, 1, (2, 1, 1))


def test_enumeration_counts():
    assert [len(all_trees(n)) for n in range(1, 8)] == [1, 1, 2, 4, 9, 20, 48]


def test_trees_with_monomial_fixtures():
    assert set(trees_with_monomial((2, 1, 1))) == {T_A, T_B}
    assert trees_with_monomial((1, 3)) == (ladder(4),)
    assert trees_with_monomial((2, 1)) == ()


def test_trees_with_monomial_vs_exhaustive():
    by_mono = {}
    for t in trees_up_to(6):
        by_mono.setdefault(fertility_monomial(t), set()).add(t)
    for a, want in by_mono.items():
        got = trees_with_monomial(a)
        assert set(got) == want and len(got) == len(want), a
        for t in got:
            assert t.size == alpha_len(a)
            assert t.size - 1 == alpha_weight(a)


def test_build_forest():
    assert build_forest((0, 0, 0)) == (LEAF,) * 3
    assert build_forest((2, 0, 0)) == (corolla(3),)
    with pytest.raises(ValueError):
        build_forest((3, 0, 0))
    with pytest.raises(ValueError):
        build_forest(())
    with pytest.raises(ValueError):
        build_forest((-1,))
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(1, 6)
        ks = [rng.randint(0, 2) for _ in range(n)]
        if sum(ks) > n - 1:
            with pytest.raises(ValueError):
                build_forest(ks)
            continue
        f = build_forest(ks)
        got = sorted(k for t in f for k in _fertilities(t))
        assert got == sorted(ks)
        if sum(ks) == n - 1:
            assert len(f) == 1


def _fertilities(t):
    yield t.fertility()
    for c in t.children:
        yield from _fertilities(c)


def test_cut_coproduct_fixtures():
    assert cut_coproduct((LEAF,)) == HCKTensor(
        {((LEAF,), ()): 1, ((), (LEAF,)): 1}
    )
    l2 = ladder(2)
    assert cut_coproduct((l2,)) == HCKTensor(
        {((l2,), ()): 1, ((), (l2,)): 1, ((LEAF,), (LEAF,)): 1}
    )
    c3 = corolla(3)
    assert cut_coproduct((c3,)) == HCKTensor(
        {
            ((c3,), ()): 1,
            ((), (c3,)): 1,
            ((l2,), (LEAF,)): 2,
            ((LEAF,), (LEAF, LEAF)): 1,
        }
    )


def test_contract_coproduct_fixtures():
    assert contract_coproduct((LEAF,)) == HCKTensor({((LEAF,), (LEAF,)): 1})
    l2 = ladder(2)
    assert contract_coproduct((l2,)) == HCKTensor(
        {((l2,), (LEAF, LEAF)): 1, ((LEAF,), (l2,)): 1}
    )
    c3 = corolla(3)
    assert contract_coproduct((c3,)) == HCKTensor(
        {
            ((c3,), (LEAF, LEAF, LEAF)): 1,
            ((LEAF,), (c3,)): 1,
            ((l2,), forest([l2, LEAF])): 2,
        }
    )


def test_cut_equals_edge_cut_oracle_through_five_vertices():
    for t in trees_up_to(5):
        assert cut_coproduct((t,)) == cut_coproduct_oracle(t), t


def test_cut_cocycle_identity():
    pool = list(trees_up_to(3))
    rng = random.Random(7)
    for _ in range(12):
        f = forest(rng.sample(pool, k=rng.randint(0, 2)))
        lifted = bplus(f)
        rhs = HCKTensor.basis(((), (lifted,)))
        for (a, b), c in cut_coproduct(f).terms.items():
            rhs = rhs + HCKTensor.basis(((bplus(a),), b), c)
        assert cut_coproduct((lifted,)) == rhs, f


def test_coassociativity_and_counits_through_five_vertices():
    for t in trees_up_to(5):
        f = (t,)
        for cp, eps in (
            (cut_coproduct, counit_cut),
            (contract_coproduct, counit_contract),
        ):
            rows = cp(f)
            lhs: dict = {}
            rhs: dict = {}
            for (a, b), c in rows.terms.items():
                for (a1, a2), c2 in cp(a).terms.items():
                    add_term(lhs, (a1, a2, b), c * c2)
                for (b1, b2), c2 in cp(b).terms.items():
                    add_term(rhs, (a, b1, b2), c * c2)
            assert lhs == rhs, (t, cp.__name__)
            left = HCKElem.zero()
            right = HCKElem.zero()
            for (a, b), c in rows.terms.items():
                left = left + HCKElem.basis(b, c * eps(HCKElem.basis(a)))
                right = right + HCKElem.basis(a, c * eps(HCKElem.basis(b)))
            assert left == HCKElem.basis(f) == right, (t, cp.__name__)


def test_tree_cointeraction_through_four_vertices():
    for t in trees_up_to(4):
        lhs: dict = {}
        for (a, b), c in contract_coproduct((t,)).terms.items():
            for (a1, a2), c2 in cut_coproduct(a).terms.items():
                add_term(lhs, (a1, a2, b), c * c2)
        rhs: dict = {}
        for (u, v), c in cut_coproduct((t,)).terms.items():
            for (u1, u2), cu in contract_coproduct(u).terms.items():
                for (v1, v2), cv in contract_coproduct(v).terms.items():
                    add_term(rhs, (u1, v1, forest_mul(u2, v2)), c * cu * cv)
        assert lhs == rhs, t


def test_counit_fixtures():
    assert counit_contract(HCKElem.one()) == 1
    assert counit_contract(HCKElem.basis((LEAF, LEAF, LEAF))) == 1
    assert counit_contract(HCKElem.tree(ladder(2))) == 0
    assert counit_cut(HCKElem.one()) == 1
    assert counit_cut(HCKElem.tree(LEAF)) == 0


def test_order_polynomial_table():
    X = Poly.x()
    half = Fraction(1, 2)
    table = {
        LEAF: X,
        ladder(2): (X * X - X).scale(half),
        corolla(3): indefinite_sum(X * X),
        ladder(3): binomial_poly(3),
        corolla(4): indefinite_sum(X**3),
        T_A: indefinite_sum(X * binomial_poly(2)),
        T_B: indefinite_sum(indefinite_sum(X * X)),
        ladder(4): binomial_poly(4),
    }
    for t, want in table.items():
        assert strict_order_poly((t,)) == want, t
    # frozen closed forms from the displayed table
    assert strict_order_poly((corolla(4),)) == Poly(
        {4: Fraction(1, 4), 3: Fraction(-1, 2), 2: Fraction(1, 4)}
    )  # X^2(X-1)^2/4
    assert strict_order_poly((T_A,)) == Poly(
        {4: Fraction(1, 8), 3: Fraction(-5, 12), 2: Fraction(3, 8), 1: Fraction(-1, 12)}
    )  # (3X-1)(X-1)(X-2)X/24
    assert strict_order_poly((T_B,)) == Poly(
        {4: Fraction(1, 12), 3: Fraction(-1, 3), 2: Fraction(5, 12), 1: Fraction(-1, 6)}
    )  # (X-1)^2(X-2)X/12


def test_order_polynomial_families():
    for n in range(1, 6):
        assert strict_order_poly((ladder(n),)) == binomial_poly(n)
        p = strict_order_poly((corolla(n),))
        for k in range(1, 7):
            assert p(k) == sum(j ** (n - 1) for j in range(k)), (n, k)


def test_stats_identities_through_seven_vertices():
    for t in trees_up_to(7):
        s, p, m = tree_stats(t)
        assert lift_coeff(m) * p * s == alpha_factorial(m), t
        assert alpha_factorial(m) % s == 0, t
