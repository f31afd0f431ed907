"""Coefficient fields: prime fields F_p and the rationals."""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import DomainError

DEFAULT_PRIME = 65537
ESCALATION_PRIME = 2**31 - 1
PRIME_ENV_VAR = "MULCON_PRIME"

# numpy elimination keeps products of two residues in int64
_WORD_LIMIT = 2**31


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for q in small:
        x = pow(q, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldDescriptor:
    """Either F_p (``p`` set) or the rationals (``p is None``)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not isinstance(self.p, int) or self.p <= 2 or not is_prime(self.p):
                raise DomainError(f"p must be an odd prime, got {self.p!r}")
            if self.p >= _WORD_LIMIT:
                raise DomainError(f"p must be below 2**31, got {self.p}")

    @classmethod
    def prime(cls, p: int = DEFAULT_PRIME) -> FieldDescriptor:
        return cls(p)

    @classmethod
    def rationals(cls) -> FieldDescriptor:
        return cls(None)

    @classmethod
    def default(cls) -> FieldDescriptor:
        """F_p with p taken from ``$MULCON_PRIME`` if set, else 65537."""
        env = os.environ.get(PRIME_ENV_VAR)
        return cls(int(env) if env else DEFAULT_PRIME)

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    @property
    def characteristic(self) -> int:
        return self.p if self.p is not None else 0

    def __call__(self, x) -> int | Fraction:
        """Coerce ``x`` into the field's canonical representation."""
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, x):
        x = self(x)
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return 1 / x
        return pow(x, -1, self.p)

    def __str__(self) -> str:
        return f"GF({self.p})" if self.p is not None else "QQ"

    def to_json(self) -> dict:
        return {"kind": "prime", "p": self.p} if self.p is not None else {"kind": "rationals"}

    @classmethod
    def from_json(cls, d: dict) -> FieldDescriptor:
        return cls(d["p"]) if d["kind"] == "prime" else cls(None)


QQ = FieldDescriptor.rationals()
