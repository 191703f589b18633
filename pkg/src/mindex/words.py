"""Words in indeterminates X_0, X_1, ... as a graded operad.

A word is a nonempty tuple of naturals, the letter i standing for X_i.
The shift derivation sends X_i to X_{i+1}; composing a word of length n
with n arguments applies the i_k-fold shift to the k-th argument and
concatenates.  Grading: length, weight (letter sum) and degree
weight - length + 1; composition adds degrees.

The coproduct dual to composition lives in the tensor algebra over words:
each output row is (left word, ordered tuple of right words), the right
tuple being tensor slots separated by ``|``.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Sequence

from .exact import multinomial
from .linear import LinComb, add_term

Word = tuple[int, ...]


class ArityError(ValueError):
    def __init__(self, expected: int, actual: int):
        super().__init__(f"arity mismatch: expected {expected} arguments, got {actual}")
        self.expected = expected
        self.actual = actual


def grading(w: Word) -> tuple[int, int, int]:
    """(length, weight, degree) of a word; degree may be negative."""
    n = len(w)
    omega = sum(w)
    return n, omega, omega - n + 1


class NCPoly(LinComb):
    """Linear combination of words; product is concatenation."""

    __slots__ = ()

    @staticmethod
    def key_mul(a: Word, b: Word) -> Word:
        return a + b

    @staticmethod
    def sort_key(key: Word):
        return (len(key), key)

    @staticmethod
    def format_key(key: Word) -> str:
        return "*".join(f"X{i}" for i in key)

    @classmethod
    def word(cls, letters) -> "NCPoly":
        w = tuple(int(i) for i in letters)
        if not w or any(i < 0 for i in w):
            raise ValueError(f"a word is a nonempty tuple of naturals, got {letters!r}")
        return cls.basis(w)


def shift_up(p: NCPoly) -> NCPoly:
    """Derivation sending X_i to X_{i+1} (Leibniz over letters)."""
    data: dict = {}
    for w, c in p.terms.items():
        for k in range(len(w)):
            add_term(data, w[:k] + (w[k] + 1,) + w[k + 1 :], c)
    out = NCPoly.__new__(NCPoly)
    out.terms = data
    return out


def shift_down(p: NCPoly) -> NCPoly:
    """Derivation sending X_0 to 0 and X_i to X_{i-1}; dual to shift_up."""
    data: dict = {}
    for w, c in p.terms.items():
        for k in range(len(w)):
            if w[k] >= 1:
                add_term(data, w[:k] + (w[k] - 1,) + w[k + 1 :], c)
    out = NCPoly.__new__(NCPoly)
    out.terms = data
    return out


def shift_up_power(p: NCPoly, n: int) -> NCPoly:
    for _ in range(n):
        p = shift_up(p)
    return p


def _as_ncpoly(arg) -> NCPoly:
    if isinstance(arg, NCPoly):
        return arg
    return NCPoly.word(arg)


def compose(w: Word, args: Sequence) -> NCPoly:
    """Operadic composition: i_k-fold shift of the k-th argument, concatenated."""
    args = [_as_ncpoly(a) for a in args]
    if len(args) != len(w):
        raise ArityError(len(w), len(args))
    if any(a.is_zero() for a in args):
        raise ValueError("composition arguments must be nonzero")
    out = NCPoly.basis(())
    for letter, arg in zip(w, args):
        out = out * shift_up_power(arg, letter)
    return out


def compose_multinomial(w: Word, arg_words: Sequence[Word]) -> NCPoly:
    """Closed multinomial form of ``compose`` on monomial arguments.

    Independent of the derivation path; kept as an internal oracle.
    """
    if len(arg_words) != len(w):
        raise ArityError(len(w), len(arg_words))
    slot_polys: list[NCPoly] = []
    for letter, u in zip(w, arg_words):
        u = tuple(u)
        data: dict = {}
        for split in _compositions(letter, len(u)):
            shifted = tuple(a + b for a, b in zip(u, split))
            add_term(data, shifted, Fraction(multinomial(split)))
        q = NCPoly.__new__(NCPoly)
        q.terms = data
        slot_polys.append(q)
    out = NCPoly.basis(())
    for q in slot_polys:
        out = out * q
    return out


def _compositions(total: int, slots: int):
    """All tuples of ``slots`` naturals summing to ``total``."""
    if slots == 0:
        if total == 0:
            yield ()
        return
    if slots == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, slots - 1):
            yield (head,) + rest


def partial_compose(p: NCPoly, i: int, q: NCPoly) -> NCPoly:
    """Substitute ``q`` in slot ``i`` (1-based), identity elsewhere."""
    arities = {len(w) for w in p.terms}
    if len(arities) != 1:
        raise ValueError("partial composition needs a length-homogeneous element")
    n = arities.pop()
    if not 1 <= i <= n:
        raise ValueError(f"slot {i} out of range 1..{n}")
    unit = NCPoly.word((0,))
    data: dict = {}
    for w, c in p.terms.items():
        args = [unit] * n
        args[i - 1] = q
        for w2, c2 in compose(w, args).terms.items():
            add_term(data, w2, c * c2)
    out = NCPoly.__new__(NCPoly)
    out.terms = data
    return out


def brace(w: Word, args: Sequence) -> NCPoly:
    """Brace operation: sum over increasing slot choices of partial substitution.

    With k arguments and k > len(w) the sum is empty, hence zero; with
    k = 0 the word itself is returned.
    """
    args = [_as_ncpoly(a) for a in args]
    k = len(args)
    n = len(w)
    data: dict = {}
    for positions in itertools.combinations(range(n), k):
        factors: list[NCPoly] = []
        m = 0
        for j in range(n):
            if m < k and positions[m] == j:
                factors.append(shift_up_power(args[m], w[j]))
                m += 1
            else:
                factors.append(NCPoly.word((w[j],)))
        prod = NCPoly.basis(())
        for f in factors:
            prod = prod * f
        for w2, c2 in prod.terms.items():
            add_term(data, w2, c2)
    out = NCPoly.__new__(NCPoly)
    out.terms = data
    return out


def graded_dim(n: int, k: int) -> int:
    """Number of words of length n and degree k."""
    if n < 1:
        raise ValueError("length must be >= 1")
    if k < 1 - n:
        return 0
    return math.comb(2 * n + k - 2, n - 1)


def permute(w: Word, sigma: Sequence[int]) -> Word:
    """Right action: position p of the result holds letter w[sigma[p]] (0-based)."""
    return tuple(w[sigma[p]] for p in range(len(w)))


def block_permutation(sigma: Sequence[int], lengths: Sequence[int]) -> tuple[int, ...]:
    """Letter-level permutation induced by relabelling composition slots.

    ``lengths[j]`` is the letter count contributed by slot j of the left-hand
    side; the result satisfies
    ``compose(permute(w, sigma), args) == permute_result`` bookkeeping used in
    the equivariance law.
    """
    n = len(sigma)
    inv = [0] * n
    for j in range(n):
        inv[sigma[j]] = j
    start_lhs = [0] * n
    for j in range(1, n):
        start_lhs[j] = start_lhs[j - 1] + lengths[j - 1]
    rhs_lengths = [lengths[inv[k]] for k in range(n)]
    start_rhs = [0] * n
    for k in range(1, n):
        start_rhs[k] = start_rhs[k - 1] + rhs_lengths[k - 1]
    pi = [0] * sum(lengths)
    for j in range(n):
        for t in range(lengths[j]):
            pi[start_lhs[j] + t] = start_rhs[sigma[j]] + t
    return tuple(pi)


WordTensor = dict[tuple[Word, tuple[Word, ...]], Fraction]


def word_coproduct(w: Word) -> WordTensor:
    """Coproduct dual to operadic composition, on one word.

    Rows are (left word, tuple of right tensor slots): split w into k
    contiguous blocks, apply the j_m-fold down-shift to block m, and record
    the word of shift orders on the left.  The down-shift is locally
    nilpotent, so the row set is finite.
    """
    n = len(w)
    rows: WordTensor = {}
    for k in range(1, n + 1):
        for cuts in itertools.combinations(range(1, n), k - 1):
            bounds = (0,) + cuts + (n,)
            blocks = [w[bounds[m] : bounds[m + 1]] for m in range(k)]
            per_block: list[list[tuple[int, Word, Fraction]]] = []
            for block in blocks:
                options = []
                p = NCPoly.basis(block)
                order = 0
                while not p.is_zero():
                    for u, c in p.terms.items():
                        options.append((order, u, c))
                    p = shift_down(p)
                    order += 1
                per_block.append(options)
            for choice in itertools.product(*per_block):
                left = tuple(j for j, _, _ in choice)
                right = tuple(u for _, u, _ in choice)
                coeff = Fraction(1)
                for _, _, c in choice:
                    coeff *= c
                add_term(rows, (left, right), coeff)
    return rows


def pairing(p: NCPoly, q: NCPoly) -> Fraction:
    """Kronecker pairing making words an orthonormal family."""
    small, large = (p, q) if len(p.terms) <= len(q.terms) else (q, p)
    return sum(
        (c * large.terms[w] for w, c in small.terms.items() if w in large.terms),
        Fraction(0),
    )
