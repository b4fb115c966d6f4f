"""Exact scalar fields: the rationals and prime fields GF(p).

Rationals are plain :class:`fractions.Fraction` values.  Prime field
elements are :class:`ModP` instances.  Both support ``+ - * /`` and ``==``
so the algebra code never needs to know which field it works over.
"""
from __future__ import annotations

from fractions import Fraction
from functools import total_ordering


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@total_ordering
class ModP:
    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValueError(f"cannot mix GF({self.p}) and GF({other.p})")
            return other.value
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p) % self.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else ModP(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else ModP(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else ModP(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else ModP(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return ModP(self.value * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ModP(o, self.p) / self

    def __neg__(self):
        return ModP(-self.value, self.p)

    def __pos__(self):
        return self

    def __eq__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self.value == o

    def __lt__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self.value < o

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"ModP({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class Field:
    """An exact field.  Calling the field coerces ints, strings and fractions."""

    name: str

    def __call__(self, value):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    @property
    def characteristic(self) -> int:
        raise NotImplementedError

    def format(self, value) -> str:
        return str(value)

    def __eq__(self, other):
        return type(self) is type(other) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


class Rationals(Field):
    name = "QQ"
    characteristic = 0

    def __call__(self, value):
        if isinstance(value, ModP):
            raise TypeError("cannot coerce a prime field element into QQ")
        return Fraction(value)


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"

    @property
    def characteristic(self) -> int:
        return self.p

    def __call__(self, value):
        if isinstance(value, ModP):
            if value.p != self.p:
                raise ValueError(f"cannot coerce GF({value.p}) element into {self.name}")
            return value
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} has no image in {self.name}")
            return ModP(value.numerator * pow(value.denominator, -1, self.p), self.p)
        return ModP(int(value), self.p)


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_spec(spec: str) -> Field:
    """Parse ``"q"`` or ``"gf:p"`` (the CLI ``--field`` syntax)."""
    spec = spec.strip().lower()
    if spec in ("q", "qq", "rationals"):
        return QQ
    if spec.startswith("gf:"):
        return GF(int(spec[3:]))
    raise ValueError(f"unknown field {spec!r}; expected 'q' or 'gf:p'")
