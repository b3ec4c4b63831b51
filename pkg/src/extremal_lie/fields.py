"""Exact scalar arithmetic over Q and GF(p), p an odd prime.

Scalars are plain values: ``gmpy2.mpq`` for the rationals and ``int`` residues
in ``[0, p)`` for prime fields.  A :class:`Field` carries the operations, so
hot loops can bind ``field.mul`` etc. once and avoid wrapper objects.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import gmpy2
from gmpy2 import mpq

__all__ = [
    "CharTwoError",
    "NotPrimeError",
    "DivisionByZero",
    "FieldSpec",
    "Field",
    "make_field",
    "parse_field",
    "QQ",
]


class CharTwoError(ValueError):
    """Characteristic 2 is excluded: the Premet identities divide by 2."""


class NotPrimeError(ValueError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class FieldSpec:
    kind: str  # "Rationals" or "PrimeField"
    p: int | None = None

    def __post_init__(self):
        if self.kind not in ("Rationals", "PrimeField"):
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.kind == "PrimeField":
            if self.p is None:
                raise ValueError("PrimeField needs p")
            if self.p == 2:
                raise CharTwoError("characteristic 2 is not supported")
            if self.p < 2 or not gmpy2.is_prime(self.p):
                raise NotPrimeError(f"{self.p} is not prime")

    def __str__(self):
        return "q" if self.kind == "Rationals" else f"gf:{self.p}"


def _odd_primes(n) -> set[int]:
    from sympy import factorint

    n = abs(int(n))
    if n <= 1:
        return set()
    return {q for q in factorint(n) if q != 2}


@dataclass(eq=False)
class Field:
    """Context for scalars of one field.  Never mix scalars of two contexts."""

    spec: FieldSpec
    # odd primes seen in inverted rationals; feeds the multi-characteristic check
    harvested: set = dc_field(default_factory=set)
    harvesting: bool = True

    def __post_init__(self):
        self.p = self.spec.p or 0
        self.characteristic = self.p
        self.zero = mpq(0) if self.p == 0 else 0
        self.one = mpq(1) if self.p == 0 else 1
        self._half = self.inv(self(2))
        if self.p:
            p = self.p
            self.add = lambda a, b: (a + b) % p
            self.sub = lambda a, b: (a - b) % p
            self.mul = lambda a, b: (a * b) % p
            self.neg = lambda a: (-a) % p
            self.norm = lambda a: a % p
        else:
            self.add = lambda a, b: a + b
            self.sub = lambda a, b: a - b
            self.mul = lambda a, b: a * b
            self.neg = lambda a: -a
            self.norm = lambda a: a

    def __repr__(self):
        return f"Field({self.spec})"

    def __eq__(self, other):
        return isinstance(other, Field) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    def __call__(self, value):
        """Coerce an int, Fraction, mpq or 'a/b' string into this field."""
        if isinstance(value, str):
            value = Fraction(value)
        if self.p == 0:
            if isinstance(value, Fraction):
                return mpq(value.numerator, value.denominator)
            return mpq(value)
        if isinstance(value, (Fraction,)) or type(value).__name__ == "mpq":
            num, den = int(value.numerator), int(value.denominator)
            if den % self.p == 0:
                raise DivisionByZero(f"denominator {den} vanishes mod {self.p}")
            return num * pow(den, -1, self.p) % self.p
        return int(value) % self.p

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.p:
            return pow(int(a), -1, self.p)
        a = mpq(a)
        if self.harvesting and (a.numerator != 1 and a.numerator != -1):
            self.harvested |= _odd_primes(a.numerator)
        return 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def halve(self, a):
        return self.mul(a, self._half)

    def eq(self, a, b) -> bool:
        return self.norm(a - b) == 0

    def is_zero(self, a) -> bool:
        return a == 0

    def note_denominator(self, d) -> None:
        """Record the odd primes of a denominator that was cleared."""
        if self.p == 0 and self.harvesting:
            self.harvested |= _odd_primes(d)

    def to_str(self, a) -> str:
        if self.p:
            return str(int(a))
        a = mpq(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def random(self, rng, bound: int = 10):
        """Uniform element of GF(p); for Q a small random integer."""
        if self.p:
            return rng.randrange(self.p)
        return mpq(rng.randint(-bound, bound))

    def from_mpz_pair(self, num, den):
        return self(Fraction(int(num), int(den)))


QQ_SPEC = FieldSpec("Rationals")


def make_field(spec: FieldSpec) -> Field:
    return Field(spec)


def QQ() -> Field:
    return Field(QQ_SPEC)


def parse_field(text: str) -> Field:
    """Parse a CLI field flag: ``q`` or ``gf:<p>``."""
    text = text.strip().lower()
    if text in ("q", "qq", "rationals"):
        return Field(QQ_SPEC)
    if text.startswith("gf:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise ValueError(f"bad field {text!r}") from None
        return Field(FieldSpec("PrimeField", p))
    raise ValueError(f"bad field {text!r}; expected 'q' or 'gf:<p>'")

