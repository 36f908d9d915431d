#!/usr/bin/env python3
"""
SymPoly

Sparse multivariate polynomial with exact integer coefficients, keyed by
exponent vectors. Negative exponents are allowed, so the same type carries
Laurent torus characters.
"""

from typing import Callable, Dict, Iterator, Optional, Sequence, Tuple, Union

from hilbert_errors import InvalidInputError

Exponent = Tuple[int, ...]


class SymPoly:
    """
    Polynomial in n variables stored as {exponent vector: coefficient}.

    Values are treated as immutable: every operation returns a new SymPoly and
    zero coefficients are never stored.
    """

    __slots__ = ('n', '_terms')

    def __init__(self, n: int, terms: Optional[Dict[Exponent, int]] = None):
        if n < 0:
            raise InvalidInputError(f"Variable count must be nonnegative, got {n}")
        self.n = n
        self._terms: Dict[Exponent, int] = {}
        for exponent, coeff in (terms or {}).items():
            exponent = tuple(exponent)
            if len(exponent) != n:
                raise InvalidInputError(f"Exponent {exponent} does not have {n} entries")
            if coeff:
                self._terms[exponent] = int(coeff)

    @classmethod
    def _wrap(cls, n: int, terms: Dict[Exponent, int]) -> 'SymPoly':
        """Adopt an already clean dict without copying"""
        poly = cls.__new__(cls)
        poly.n = n
        poly._terms = terms
        return poly

    @classmethod
    def zero(cls, n: int) -> 'SymPoly':
        return cls._wrap(n, {})

    @classmethod
    def one(cls, n: int) -> 'SymPoly':
        return cls._wrap(n, {(0,) * n: 1})

    @classmethod
    def monomial(cls, exponent: Sequence[int], coeff: int = 1) -> 'SymPoly':
        exponent = tuple(exponent)
        return cls(len(exponent), {exponent: coeff})

    @classmethod
    def variables(cls, n: int) -> 'SymPoly':
        """x_1 + ... + x_n"""
        return cls._wrap(n, {tuple(1 if j == i else 0 for j in range(n)): 1 for i in range(n)})

    # -- access -----------------------------------------------------------

    def coeff(self, exponent: Sequence[int]) -> int:
        return self._terms.get(tuple(exponent), 0)

    def items(self) -> Iterator[Tuple[Exponent, int]]:
        return iter(self._terms.items())

    def exponents(self) -> Iterator[Exponent]:
        return iter(self._terms)

    def as_dict(self) -> Dict[Exponent, int]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == SymPoly.one(self.n) * other
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return f"SymPoly(n={self.n}, 0)"
        shown = " + ".join(f"{c}*x^{e}" for e, c in sorted(self._terms.items(), reverse=True)[:6])
        more = " + ..." if len(self._terms) > 6 else ""
        return f"SymPoly(n={self.n}, {shown}{more})"

    def constant_term(self) -> int:
        return self._terms.get((0,) * self.n, 0)

    def leading_exponent(self) -> Optional[Exponent]:
        """Lexicographically greatest exponent vector"""
        return max(self._terms) if self._terms else None

    def total_degrees(self) -> set:
        return {sum(e) for e in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.total_degrees()) <= 1

    def is_symmetric(self) -> bool:
        """Invariance under every adjacent transposition of variables"""
        for exponent, coeff in self._terms.items():
            for i in range(self.n - 1):
                if exponent[i] == exponent[i + 1]:
                    continue
                swapped = exponent[:i] + (exponent[i + 1], exponent[i]) + exponent[i + 2:]
                if self._terms.get(swapped, 0) != coeff:
                    return False
        return True

    # -- arithmetic -------------------------------------------------------

    def _check_compatible(self, other: 'SymPoly'):
        if self.n != other.n:
            raise InvalidInputError(f"Variable counts differ: {self.n} vs {other.n}")

    def __add__(self, other: Union['SymPoly', int]) -> 'SymPoly':
        if isinstance(other, int):
            other = SymPoly.one(self.n) * other
        self._check_compatible(other)
        terms = dict(self._terms)
        for exponent, coeff in other._terms.items():
            total = terms.get(exponent, 0) + coeff
            if total:
                terms[exponent] = total
            else:
                terms.pop(exponent, None)
        return SymPoly._wrap(self.n, terms)

    __radd__ = __add__

    def __neg__(self) -> 'SymPoly':
        return SymPoly._wrap(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Union['SymPoly', int]) -> 'SymPoly':
        return self + (-other)

    def __rsub__(self, other: int) -> 'SymPoly':
        return (-self) + other

    def __mul__(self, other: Union['SymPoly', int]) -> 'SymPoly':
        if isinstance(other, int):
            if other == 0:
                return SymPoly.zero(self.n)
            return SymPoly._wrap(self.n, {e: c * other for e, c in self._terms.items()})
        self._check_compatible(other)
        terms: Dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exponent = tuple(a + b for a, b in zip(e1, e2))
                terms[exponent] = terms.get(exponent, 0) + c1 * c2
        return SymPoly._wrap(self.n, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def shift(self, exponent: Sequence[int]) -> 'SymPoly':
        """Multiply by the monomial x^exponent"""
        exponent = tuple(exponent)
        if len(exponent) != self.n:
            raise InvalidInputError(f"Shift {exponent} does not have {self.n} entries")
        return SymPoly._wrap(self.n, {
            tuple(a + b for a, b in zip(e, exponent)): c for e, c in self._terms.items()
        })

    def homogeneous_part(self, degree: int) -> 'SymPoly':
        return SymPoly._wrap(self.n, {e: c for e, c in self._terms.items() if sum(e) == degree})

    def map_exponents(self, fn: Callable[[Exponent], Exponent], n: int) -> 'SymPoly':
        """Push every term through fn, merging collisions in an n-variable result"""
        terms: Dict[Exponent, int] = {}
        for exponent, coeff in self._terms.items():
            image = tuple(fn(exponent))
            terms[image] = terms.get(image, 0) + coeff
        return SymPoly(n, terms)

    def filter_terms(self, keep: Callable[[Exponent], bool]) -> 'SymPoly':
        return SymPoly._wrap(self.n, {e: c for e, c in self._terms.items() if keep(e)})
