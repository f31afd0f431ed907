"""Numerical reduction of (a, b, h, k) to the two critical cases.

For a curve C of type (a, b) with g = (a-1)(b-1) and d = hb + ka:

* if d >= g, Serre duality and the ruling swap turn the question about
  h^1 into one about h^0 at (b, a, b-2-k, a-2-h), where d becomes 2g-2-d;
* a pair with h <= -2 and k >= b is brought to h >= a, k <= -2 by the
  ruling swap alone;
* while d <= g - 1, raising h or k only enlarges O_C(h, k), so h^0 = 0 at
  the larger pair implies it at the smaller one; the growth chain stops
  once d lies in the critical band ab-a-b-min(a,b) < d <= ab-a-b;
* in the band, h = alpha + m a and k = beta - n b with alpha, beta in
  [-1, a-2] x [-1, b-2] satisfy either m = n with (alpha, beta) not both
  -1 (case A), or alpha = beta = -1 with m = n + 1 (case B).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exceptions import DomainError

TRIVIAL = "trivial"
CASE_A = "caseA"
CASE_B = "caseB"
NON_CRITICAL = "nonCritical"


def genus(a: int, b: int) -> int:
    return (a - 1) * (b - 1)


def degree(a: int, b: int, h: int, k: int) -> int:
    return h * b + k * a


def critical_band(a: int, b: int) -> tuple[int, int]:
    """Exclusive lower and inclusive upper bound of the critical degrees."""
    if a < 2 or b < 2:
        raise DomainError(f"the critical band needs a, b >= 2, got ({a}, {b})")
    top = a * b - a - b
    return top - min(a, b), top


def in_band(a: int, b: int, d: int) -> bool:
    lo, hi = critical_band(a, b)
    return lo < d <= hi


def is_admissible(a: int, b: int, h: int, k: int) -> bool:
    return h >= a and k <= -2


@dataclass(frozen=True)
class Decomposition:
    alpha: int
    m: int
    beta: int
    n: int

    def recompose(self, a: int, b: int) -> tuple[int, int]:
        return self.alpha + self.m * a, self.beta - self.n * b


def decompose(a: int, b: int, h: int, k: int) -> Decomposition:
    if a < 1 or b < 1 or not is_admissible(a, b, h, k):
        raise DomainError(f"decompose needs h >= a and k <= -2, got ({a},{b},{h},{k})")
    alpha = (h + 1) % a - 1
    beta = (k + 1) % b - 1
    dec = Decomposition(alpha, (h - alpha) // a, beta, (beta - k) // b)
    assert dec.m > 0 and dec.n > 0
    return dec


@dataclass(frozen=True)
class Step:
    """One state of a reduction chain and the move that produced it."""

    move: str  # "start" | "dual" | "swap" | "grow_h" | "grow_k"
    a: int
    b: int
    h: int
    k: int


@dataclass(frozen=True)
class ReductionResult:
    kind: str
    a: int
    b: int
    h: int
    k: int
    chain: tuple[Step, ...] = ()
    decomposition: Decomposition | None = None
    direction: str | None = None

    @property
    def final(self) -> Step:
        return self.chain[-1]

    @property
    def dualized(self) -> bool:
        return any(s.move == "dual" for s in self.chain)

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "input": dict(a=self.a, b=self.b, h=self.h, k=self.k),
            "chain": [vars(s) for s in self.chain],
        }
        if self.decomposition is not None:
            out["decomposition"] = vars(self.decomposition)
        if self.direction is not None:
            out["direction"] = self.direction
        return out


def _grow(a: int, b: int, h: int, k: int) -> tuple[int, int, str] | None:
    limit = genus(a, b) - 1
    d = degree(a, b, h, k)
    can_h = d + b <= limit
    can_k = d + a <= limit and k + 1 <= -2
    if can_h and can_k:
        # larger remaining slack wins; ties go to h
        return (h + 1, k, "grow_h") if b <= a else (h, k + 1, "grow_k")
    if can_h:
        return h + 1, k, "grow_h"
    if can_k:
        return h, k + 1, "grow_k"
    return None


def classify(a: int, b: int, h: int, k: int) -> ReductionResult:
    if a < 1 or b < 1:
        raise DomainError(f"curve type must satisfy a, b >= 1, got ({a}, {b})")
    chain = [Step("start", a, b, h, k)]
    if a == 1 or b == 1:
        return ReductionResult(TRIVIAL, a, b, h, k, tuple(chain))
    g = genus(a, b)
    direction = "growth"
    ca, cb, ch, ck = a, b, h, k
    if degree(a, b, h, k) >= g:
        direction = "dual"
        ca, cb, ch, ck = b, a, b - 2 - k, a - 2 - h
        chain.append(Step("dual", ca, cb, ch, ck))
    if not is_admissible(ca, cb, ch, ck) and is_admissible(cb, ca, ck, ch):
        ca, cb, ch, ck = cb, ca, ck, ch
        chain.append(Step("swap", ca, cb, ch, ck))
    if not is_admissible(ca, cb, ch, ck):
        return ReductionResult(NON_CRITICAL, a, b, h, k, tuple(chain), direction=direction)
    while (nxt := _grow(ca, cb, ch, ck)) is not None:
        ch, ck, move = nxt
        chain.append(Step(move, ca, cb, ch, ck))
    assert in_band(ca, cb, degree(ca, cb, ch, ck))
    dec = decompose(ca, cb, ch, ck)
    if (dec.alpha, dec.beta) == (-1, -1):
        assert dec.m == dec.n + 1
        kind = CASE_B
    else:
        assert dec.m == dec.n
        kind = CASE_A
    return ReductionResult(kind, a, b, h, k, tuple(chain), dec, direction)


def recompose(result: ReductionResult) -> tuple[int, int]:
    """Walk the chain backwards from the decomposition to the input (h, k)."""
    last = result.final
    if result.decomposition is not None:
        h, k = result.decomposition.recompose(last.a, last.b)
        assert (h, k) == (last.h, last.k)
    a, b, h, k = last.a, last.b, last.h, last.k
    for step in reversed(result.chain[1:]):
        if step.move == "grow_h":
            h -= 1
        elif step.move == "grow_k":
            k -= 1
        elif step.move == "dual":
            # (b, a, b-2-k, a-2-h) is an involution
            a, b, h, k = b, a, b - 2 - k, a - 2 - h
        elif step.move == "swap":
            a, b, h, k = b, a, k, h
    return h, k
