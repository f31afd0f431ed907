"""h^0 and h^1 of O_C(h, k) for a curve C = {F = 0} of type (a, b) on P^1 x P^1.

Multiplication by F in 0 -> O_Q(r, -t-2) -> O_Q(r+a, -t+b-2) -> O_C(h, k) -> 0,
with r = h - a and t = b - 2 - k, induces on H^1 the contraction map
S^r V (x) S^t W* -> S^(r+a) V (x) S^(t-b) W*.  For r >= 0 and t >= b its
kernel is H^0 O_C(h, k) and its cokernel is H^1 O_C(h, k).  This holds for
any nonzero F, smooth or not.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .exceptions import DomainError
from .fields import FieldDescriptor
from .forms import BiForm, build_mulcon_matrix, grid_curve_form, random_biform
from .linalg import rank_nullity
from .matrix import MapMatrix
from .reduction import classify, degree, genus, is_admissible

__all__ = [
    "CohomologyResult",
    "genus",
    "degree",
    "cohomology_matrix",
    "h0_h1",
    "h0_h1_routed",
    "serre_dual",
    "swap_rulings",
    "check_theorem",
    "make_curve",
    "grid_curve",
    "random_h_coeffs",
    "line_degenerate_curve",
]


@dataclass(frozen=True)
class CohomologyResult:
    h0: int
    h1: int
    d: int
    g: int
    euler_check: bool

    def __post_init__(self):
        assert self.h0 >= 0 and self.h1 >= 0

    def to_json(self) -> dict:
        return asdict(self)


def _curve_type(F: BiForm) -> tuple[int, int]:
    if F.nvars != (1, 1):
        raise DomainError("curve cohomology is defined on P^1 x P^1 only")
    a, b = F.bidegree
    if a < 1 or b < 1:
        raise DomainError(f"curves need bidegree >= (1, 1), got {F.bidegree}")
    return a, b


def cohomology_matrix(F: BiForm, h: int, k: int) -> MapMatrix:
    """The contraction matrix whose kernel/cokernel give h^0/h^1 of O_C(h, k)."""
    a, b = _curve_type(F)
    if not is_admissible(a, b, h, k):
        raise DomainError(
            f"(h, k) = ({h}, {k}) is outside h >= {a}, k <= -2; apply serre_dual "
            "and swap_rulings first, or use h0_h1_routed"
        )
    return build_mulcon_matrix(F, h - a, b - 2 - k)


def h0_h1(F: BiForm, h: int, k: int) -> CohomologyResult:
    a, b = _curve_type(F)
    mat = cohomology_matrix(F, h, k)
    _, h0, h1 = rank_nullity(mat)
    d, g = degree(a, b, h, k), genus(a, b)
    ok = h0 - h1 == d + 1 - g
    assert ok, f"Euler characteristic mismatch for {F.bidegree} at ({h}, {k})"
    return CohomologyResult(h0, h1, d, g, ok)


def serre_dual(a: int, b: int, h: int, k: int) -> tuple[int, int]:
    """O_C(h, k) -> omega_C(-h, -k) = O_C(a-2-h, b-2-k)."""
    return a - 2 - h, b - 2 - k


def swap_rulings(a: int, b: int, h: int, k: int, F: BiForm | None = None):
    """Exchange the two rulings: returns ((b, a), (k, h), F with x and y swapped)."""
    return (b, a), (k, h), (F.swap() if F is not None else None)


def h0_h1_routed(F: BiForm, h: int, k: int) -> CohomologyResult:
    """h0_h1 extended to the dual window h <= -2, k >= b.

    There the ruling swap maps the problem to the curve of type (b, a) at
    (k, h), which is admissible; h^0 and h^1 are unchanged.
    """
    a, b = _curve_type(F)
    if is_admissible(a, b, h, k):
        return h0_h1(F, h, k)
    (sa, sb), (sh, sk), Fs = swap_rulings(a, b, h, k, F)
    if not is_admissible(sa, sb, sh, sk):
        raise DomainError(f"(h, k) = ({h}, {k}) is in neither window for type ({a}, {b})")
    return h0_h1(Fs, sh, sk)


def check_theorem(F: BiForm, h: int, k: int) -> bool:
    """Whether h^0 * h^1 = 0 for this particular F."""
    res = h0_h1(F, h, k)
    return res.h0 * res.h1 == 0


def grid_curve(
    a: int, b: int, field: FieldDescriptor, seed: int = 0, lam=None, mu=None
) -> BiForm:
    """A curve l(u) v^b - h(u) m(v) through the grid, h drawn from ``seed``.

    Grid values default to 1..a and 1..b.  h gets a nonzero leading
    coefficient so that it has degree exactly a.
    """
    lam = list(range(1, a + 1)) if lam is None else lam
    mu = list(range(1, b + 1)) if mu is None else mu
    return grid_curve_form(a, b, lam, mu, random_h_coeffs(a, field, seed), field)


def random_h_coeffs(a: int, field: FieldDescriptor, seed: int) -> list[int]:
    """a + 1 nonzero coefficients, constant term first."""
    hi = field.p if field.p is not None else 2**15
    return [int(c) for c in np.random.default_rng(seed).integers(1, hi, size=a + 1)]


def line_degenerate_curve(a: int, b: int, field: FieldDescriptor, seed: int = 0) -> BiForm:
    """y_0 * G with G random of bidegree (a, b-1): contains the line y_0 = 0."""
    if b < 1:
        raise DomainError("a line-degenerate curve needs b >= 1")
    return BiForm.variable("y", 0, field) * random_biform(a, b - 1, field, seed)


def make_curve(kind: str, a: int, b: int, field: FieldDescriptor, seed: int = 0) -> BiForm:
    if kind == "random":
        return random_biform(a, b, field, seed)
    if kind == "grid":
        return grid_curve(a, b, field, seed)
    if kind == "line-degenerate":
        return line_degenerate_curve(a, b, field, seed)
    raise DomainError(f"unknown curve kind {kind!r}")


def classify_and_compute(F: BiForm, h: int, k: int) -> tuple[CohomologyResult, object]:
    a, b = _curve_type(F)
    return h0_h1_routed(F, h, k), classify(a, b, h, k)
