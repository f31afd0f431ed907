"""Monomial bases of S^r V (x) S^t W* with a fixed graded-lex order.

With ``dim V = m + 1`` and ``dim W = n + 1`` a basis element is a pair of
exponent vectors ``(I, T)`` with ``|I| = r`` and ``|T| = t``.  The order is
lexicographic on the concatenated exponent sequence ``I + T``, largest
first, so index 0 is ``x_0^r y_0^t``.  Since every monomial in one space has
the same bidegree this is the graded-lex order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .exceptions import DomainError


@lru_cache(maxsize=None)
def exponent_vectors(nvars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """All exponent vectors of ``degree`` in ``nvars`` variables, lex-descending."""
    if nvars < 1 or degree < 0:
        raise DomainError(f"need nvars >= 1 and degree >= 0, got {nvars}, {degree}")
    if nvars == 1:
        return ((degree,),)
    out = []
    for e in range(degree, -1, -1):
        out.extend((e,) + rest for rest in exponent_vectors(nvars - 1, degree - e))
    return tuple(out)


@lru_cache(maxsize=None)
def _positions(nvars: int, degree: int) -> dict[tuple[int, ...], int]:
    return {e: i for i, e in enumerate(exponent_vectors(nvars, degree))}


def dimension(m: int, n: int, r: int, t: int) -> int:
    """Dimension of S^r V (x) S^t W* for dim V = m+1, dim W = n+1."""
    if min(m, n, r, t) < 0:
        raise DomainError(f"negative argument in dimension({m}, {n}, {r}, {t})")
    return comb(m + r, r) * comb(n + t, t)


@dataclass(frozen=True)
class ExponentVector:
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        if any(e < 0 for e in self.entries):
            raise DomainError(f"negative exponent in {self.entries}")

    @property
    def degree(self) -> int:
        return sum(self.entries)


@dataclass(frozen=True, order=True)
class BiMonomial:
    """``x^x_part * y^y_part``; with ``dual`` set, the y-part means (y*)^J."""

    x: tuple[int, ...]
    y: tuple[int, ...]
    dual: bool = False

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(int(e) for e in self.x))
        object.__setattr__(self, "y", tuple(int(e) for e in self.y))
        if any(e < 0 for e in self.x + self.y):
            raise DomainError(f"negative exponent in {self}")

    @property
    def bidegree(self) -> tuple[int, int]:
        return sum(self.x), sum(self.y)

    def __str__(self) -> str:
        def part(name, exps, star=""):
            return "*".join(
                f"{name}{i}{star}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exps) if e
            )

        ys = part("y", self.y, "*" if self.dual else "")
        return "*".join(s for s in (part("x", self.x), ys) if s) or "1"


@dataclass(frozen=True)
class BasisIndexer:
    """Bijection between monomials of S^r V (x) S^t W* and ``range(dim)``."""

    m: int
    n: int
    r: int
    t: int
    dual: bool = False
    _xs: tuple = field(init=False, repr=False, compare=False)
    _ys: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if min(self.m, self.n, self.r, self.t) < 0:
            raise DomainError(f"invalid basis parameters {self}")
        object.__setattr__(self, "_xs", exponent_vectors(self.m + 1, self.r))
        object.__setattr__(self, "_ys", exponent_vectors(self.n + 1, self.t))

    @property
    def dim(self) -> int:
        return len(self._xs) * len(self._ys)

    def __len__(self) -> int:
        return self.dim

    def index_of(self, mono: BiMonomial) -> int:
        return self.index_of_exponents(mono.x, mono.y)

    def index_of_exponents(self, x: tuple[int, ...], y: tuple[int, ...]) -> int:
        try:
            ix = _positions(self.m + 1, self.r)[x]
            iy = _positions(self.n + 1, self.t)[y]
        except KeyError:
            raise DomainError(
                f"monomial {x}, {y} is not in the basis of bidegree ({self.r}, {self.t})"
            ) from None
        return ix * len(self._ys) + iy

    def monomial_at(self, i: int) -> BiMonomial:
        if not 0 <= i < self.dim:
            raise DomainError(f"index {i} out of range [0, {self.dim})")
        ix, iy = divmod(i, len(self._ys))
        return BiMonomial(self._xs[ix], self._ys[iy], self.dual)

    def __iter__(self):
        for x in self._xs:
            for y in self._ys:
                yield BiMonomial(x, y, self.dual)


def index_of(b: BasisIndexer, mono: BiMonomial) -> int:
    return b.index_of(mono)


def monomial_at(b: BasisIndexer, i: int) -> BiMonomial:
    return b.monomial_at(i)
