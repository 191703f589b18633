"""Shared machinery for finite linear combinations over the rationals.

Every algebra in this package (words, commutative monomials, forest
monomials, rooted forests, tensors thereof) is a free module with a
hashable basis.  ``LinComb`` stores such an element as a dict
``basis key -> Fraction`` with no zero coefficients ever kept, so equality
of dicts is equality of elements.  Subclasses fix how two basis keys
multiply and how a key is rendered.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping


def add_term(acc: dict, key, coeff) -> None:
    """Accumulate ``coeff`` on ``key`` in ``acc``, dropping exact zeros."""
    c = acc.get(key)
    if c is None:
        if coeff:
            acc[key] = coeff
    else:
        c = c + coeff
        if c:
            acc[key] = c
        else:
            del acc[key]


class LinComb:
    """A finite Fraction-linear combination of hashable basis keys.

    Immutable by convention: no public method mutates ``self.terms`` and
    callers must not either.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, coeff in items:
                add_term(data, key, Fraction(coeff))
        self.terms = data

    # -- vector space structure ------------------------------------------

    unit_key = ()

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def basis(cls, key, coeff=1):
        return cls({key: Fraction(coeff)})

    @classmethod
    def one(cls, coeff=1):
        return cls.basis(cls.unit_key, coeff)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        data = dict(self.terms)
        for key, coeff in other.terms.items():
            add_term(data, key, coeff)
        out = type(self).__new__(type(self))
        out.terms = data
        return out

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        data = dict(self.terms)
        for key, coeff in other.terms.items():
            add_term(data, key, -coeff)
        out = type(self).__new__(type(self))
        out.terms = data
        return out

    def __neg__(self):
        out = type(self).__new__(type(self))
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def scale(self, factor):
        factor = Fraction(factor)
        out = type(self).__new__(type(self))
        out.terms = {} if not factor else {k: c * factor for k, c in self.terms.items()}
        return out

    def __rmul__(self, factor):
        if isinstance(factor, (int, Fraction)):
            return self.scale(factor)
        return NotImplemented

    # -- algebra structure -----------------------------------------------

    @staticmethod
    def key_mul(a, b):
        """Product of two basis keys; subclasses override."""
        raise NotImplementedError

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if type(other) is not type(self):
            return NotImplemented
        data: dict = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                add_term(data, self.key_mul(ka, kb), ca * cb)
        out = type(self).__new__(type(self))
        out.terms = data
        return out

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = type(self).one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def coeff(self, key) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def map_keys(self, fn, target=None):
        """Linear extension of a basis-key map ``key -> LinComb``."""
        cls = target if target is not None else type(self)
        data: dict = {}
        for key, coeff in self.terms.items():
            for k2, c2 in fn(key).terms.items():
                add_term(data, k2, coeff * c2)
        out = cls.__new__(cls)
        out.terms = data
        return out

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: self.sort_key(kv[0]))

    @staticmethod
    def sort_key(key):
        return key

    @staticmethod
    def format_key(key) -> str:
        return str(key)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key, coeff in self.sorted_terms():
            mono = self.format_key(key)
            if mono == "1":
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = f"{abs(coeff)}*{mono}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"{type(self).__name__}({self.terms!r})"

