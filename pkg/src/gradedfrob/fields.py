"""Exact base fields: the rationals and prime fields F_p.

Rational scalars are plain :class:`fractions.Fraction` values.  Elements of
F_p are :class:`Mod` instances so that generic code can use ordinary
arithmetic operators on either kind of scalar.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache


class FieldMismatch(ValueError):
    pass


class Mod:
    """Residue class modulo a prime, representative kept in [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise FieldMismatch(f"F_{self.p} vs F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return Mod(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.v == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return Mod(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return Mod(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if k < 0:
            if self.v == 0:
                raise ZeroDivisionError("division by zero in F_%d" % self.p)
            return Mod(pow(self.v, -1, self.p) ** (-k), self.p)
        return Mod(pow(self.v, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (self.v - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Mod({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class Field:
    """Base-field descriptor.  Calling the field converts a value into it."""

    char: int = 0
    zero = None
    one = None

    def __call__(self, value):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError

    def random(self, rng: random.Random, bound: int = 10):
        raise NotImplementedError

    @property
    def order(self):
        """Number of elements, or None for an infinite field."""
        return None

    def descriptor(self):
        raise NotImplementedError


class Rationals(Field):
    char = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __call__(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Mod):
            raise FieldMismatch("cannot coerce an F_p residue into Q")
        raise TypeError(f"cannot convert {value!r} to a rational (no floats)")

    def parse(self, text: str) -> Fraction:
        text = text.strip()
        if "." in text or "e" in text.lower():
            raise ValueError(f"non-exact coefficient {text!r}; use 'num/den'")
        return Fraction(text)

    def format(self, x) -> str:
        x = Fraction(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def random(self, rng, bound=10):
        return Fraction(rng.randint(-bound, bound))

    def descriptor(self):
        return "Q"

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.char = p
        self.p = p
        self.zero = Mod(0, p)
        self.one = Mod(1, p)

    def __call__(self, value):
        if isinstance(value, Mod):
            if value.p != self.p:
                raise FieldMismatch(f"F_{value.p} residue used in F_{self.p}")
            return value
        if isinstance(value, int):
            return Mod(value, self.p)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} has no image in F_{self.p}")
            return Mod(value.numerator * pow(value.denominator, -1, self.p), self.p)
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot convert {value!r} to F_{self.p}")

    def parse(self, text: str) -> Mod:
        return self(Fraction(text.strip()))

    def format(self, x) -> str:
        return str(self(x).v)

    def random(self, rng, bound=10):
        return Mod(rng.randrange(self.p), self.p)

    def elements(self):
        return [Mod(i, self.p) for i in range(self.p)]

    @property
    def order(self):
        return self.p

    def descriptor(self):
        return {"Fp": self.p}

    def __repr__(self):
        return f"F_{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


Q = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_descriptor(desc) -> Field:
    if desc == "Q":
        return Q
    if isinstance(desc, dict) and set(desc) == {"Fp"}:
        return GF(int(desc["Fp"]))
    raise ValueError(f"unknown field descriptor {desc!r}")
