"""Exact coefficient rings: integers mod m, prime fields, and a small descriptor
used for (de)serialising arrays.

Python ``int`` and ``fractions.Fraction`` already behave as the rings Z and Q,
so only the residue rings need a value type here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def require_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")


class IntMod:
    """Residue class of Z/mZ."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int) -> None:
        if modulus < 1:
            raise ValueError("modulus must be positive")
        self.value = value % modulus
        self.modulus = modulus

    def _lift(self, other: Any) -> IntMod | None:
        if isinstance(other, IntMod):
            if other.modulus != self.modulus:
                raise ValueError(f"mixed moduli {self.modulus} and {other.modulus}")
            return other
        if isinstance(other, int):
            return IntMod(other, self.modulus)
        return None

    def __add__(self, other: Any) -> IntMod:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return IntMod(self.value + o.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other: Any) -> IntMod:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return IntMod(self.value - o.value, self.modulus)

    def __rsub__(self, other: Any) -> IntMod:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return IntMod(o.value - self.value, self.modulus)

    def __mul__(self, other: Any) -> IntMod:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return IntMod(self.value * o.value, self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> IntMod:
        return IntMod(-self.value, self.modulus)

    def __pow__(self, e: int) -> IntMod:
        return IntMod(pow(self.value, e, self.modulus), self.modulus)

    def inverse(self) -> IntMod:
        try:
            return IntMod(pow(self.value, -1, self.modulus), self.modulus)
        except ValueError:
            raise ZeroDivisionError(f"{self.value} is not a unit mod {self.modulus}") from None

    def __truediv__(self, other: Any) -> IntMod:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Any) -> IntMod:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntMod):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return (other - self.value) % self.modulus == 0
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.modulus))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"IntMod({self.value}, {self.modulus})"

    def __str__(self) -> str:
        return str(self.value)


def Fp(value: int, p: int) -> IntMod:
    """Element of the prime field F_p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return IntMod(value, p)


@dataclass(frozen=True)
class Ring:
    """Serialisable description of a coefficient ring.

    ``kind`` is one of ``"Z"``, ``"Q"``, ``"Zmod"`` (``modulus`` required) or
    ``"Cyc"`` (``modulus`` holds the conductor).
    """

    kind: str
    modulus: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("Z", "Q", "Zmod", "Cyc"):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind in ("Zmod", "Cyc") and (self.modulus is None or self.modulus < 1):
            raise ValueError(f"ring {self.kind} needs a positive modulus")

    def coerce(self, x: Any) -> Any:
        if self.kind == "Z":
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError(f"{x} is not an integer")
                return x.numerator
            return int(x)
        if self.kind == "Q":
            return Fraction(x)
        if self.kind == "Zmod":
            return IntMod(int(x), self.modulus)
        from .cyclotomic import CycElem

        if isinstance(x, CycElem):
            return x.embed(self.modulus)
        return CycElem.from_rational(x, self.modulus)

    def zero(self) -> Any:
        return self.coerce(0)

    def one(self) -> Any:
        return self.coerce(1)

    def encode(self, x: Any) -> Any:
        if self.kind == "Z":
            return int(x)
        if self.kind == "Q":
            x = Fraction(x)
            return str(x) if x.denominator != 1 else x.numerator
        if self.kind == "Zmod":
            return int(self.coerce(x))
        return self.coerce(x).to_json()

    def decode(self, raw: Any) -> Any:
        if self.kind == "Q" and isinstance(raw, str):
            return Fraction(raw)
        if self.kind == "Cyc" and isinstance(raw, dict):
            from .cyclotomic import CycElem

            return CycElem.from_json(raw)
        return self.coerce(raw)

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.modulus is not None:
            out["modulus"] = self.modulus
        return out

    @classmethod
    def from_json(cls, raw: dict) -> Ring:
        return cls(raw["kind"], raw.get("modulus"))

    @classmethod
    def infer(cls, x: Any) -> Ring:
        from .cyclotomic import CycElem

        if isinstance(x, bool):
            raise TypeError("bool is not a ring value")
        if isinstance(x, int):
            return cls("Z")
        if isinstance(x, Fraction):
            return cls("Q")
        if isinstance(x, IntMod):
            return cls("Zmod", x.modulus)
        if isinstance(x, CycElem):
            return cls("Cyc", x.conductor)
        raise TypeError(f"no exact ring for {type(x).__name__}")
