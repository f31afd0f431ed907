"""Bihomogeneous forms on P^m x P^n and the linear maps they induce.

A form of bidegree (a, b) acts on S^r V (x) S^t W* by multiplying the
x-part and contracting the y-part: for a term c x^A y^B the basis vector
x^I (y*)^T goes to c x^(I+A) (y*)^(T-B) when B <= T, and to zero
otherwise.  ``build_diff_matrix`` is the same map written for the
differential operator x^A d^B acting on x^I y^T, which differs from the
contraction by the falling factorial T!/(T-B)!.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable, Mapping, Sequence

import numpy as np
import sympy

from .basis import BasisIndexer, BiMonomial
from .exceptions import DomainError, PreconditionError
from .fields import QQ, FieldDescriptor
from .linalg import is_invertible
from .matrix import MapMatrix


@dataclass(frozen=True)
class BiForm:
    """Sparse form of bidegree (a, b) in x_0..x_m and y_0..y_n."""

    bidegree: tuple[int, int]
    terms: Mapping[BiMonomial, int | Fraction]
    field: FieldDescriptor = QQ
    nvars: tuple[int, int] = (1, 1)

    def __post_init__(self):
        a, b = self.bidegree
        m, n = self.nvars
        if min(a, b) < 0 or min(m, n) < 0:
            raise DomainError(f"invalid bidegree {self.bidegree} or nvars {self.nvars}")
        clean = {}
        for mono, c in self.terms.items():
            if not isinstance(mono, BiMonomial):
                mono = BiMonomial(*mono)
            if mono.bidegree != (a, b) or len(mono.x) != m + 1 or len(mono.y) != n + 1:
                raise DomainError(f"term {mono} does not fit bidegree {self.bidegree}")
            c = self.field(c) + clean.get(mono, 0)
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def from_exponents(
        cls,
        terms: Mapping[tuple[Sequence[int], Sequence[int]], object],
        field: FieldDescriptor = QQ,
        bidegree: tuple[int, int] | None = None,
    ) -> BiForm:
        """Build from ``{(x_exps, y_exps): coeff}``; bidegree inferred if omitted."""
        monos = {BiMonomial(x, y): c for (x, y), c in terms.items()}
        if not monos:
            if bidegree is None:
                raise DomainError("bidegree is required for an empty form")
            return cls(bidegree, {}, field)
        first = next(iter(monos))
        nvars = (len(first.x) - 1, len(first.y) - 1)
        return cls(bidegree or first.bidegree, monos, field, nvars)

    @classmethod
    def zero(cls, a: int, b: int, field: FieldDescriptor = QQ, nvars=(1, 1)) -> BiForm:
        return cls((a, b), {}, field, tuple(nvars))

    @classmethod
    def one(cls, field: FieldDescriptor = QQ, nvars=(1, 1)) -> BiForm:
        m, n = nvars
        return cls((0, 0), {BiMonomial((0,) * (m + 1), (0,) * (n + 1)): 1}, field, tuple(nvars))

    @classmethod
    def variable(cls, which: str, i: int, field: FieldDescriptor = QQ, nvars=(1, 1)) -> BiForm:
        """The linear form ``x_i`` (``which='x'``) or ``y_i`` (``which='y'``)."""
        m, n = nvars
        x, y = [0] * (m + 1), [0] * (n + 1)
        (x if which == "x" else y)[i] = 1
        bideg = (1, 0) if which == "x" else (0, 1)
        return cls(bideg, {BiMonomial(x, y): 1}, field, tuple(nvars))

    def is_zero(self) -> bool:
        return not self.terms

    def _same_space(self, other: BiForm):
        if self.field != other.field:
            raise DomainError(f"field mismatch: {self.field} vs {other.field}")
        if self.nvars != other.nvars:
            raise DomainError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: BiForm) -> BiForm:
        self._same_space(other)
        if self.bidegree != other.bidegree:
            raise DomainError(f"cannot add bidegrees {self.bidegree} and {other.bidegree}")
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            terms[mono] = terms.get(mono, 0) + c
        return BiForm(self.bidegree, terms, self.field, self.nvars)

    def __neg__(self) -> BiForm:
        return self.scale(-1)

    def __sub__(self, other: BiForm) -> BiForm:
        return self + (-other)

    def __mul__(self, other: BiForm) -> BiForm:
        return multiply_biforms(self, other)

    def scale(self, c) -> BiForm:
        c = self.field(c)
        return BiForm(self.bidegree, {k: v * c for k, v in self.terms.items()}, self.field, self.nvars)

    def __pow__(self, e: int) -> BiForm:
        out = BiForm.one(self.field, self.nvars)
        for _ in range(e):
            out = out * self
        return out

    def evaluate(self, point: QPoint):
        """Value at the affine representative of ``point``."""
        x, y = point.normalized(self.field)
        if len(x) != self.nvars[0] + 1 or len(y) != self.nvars[1] + 1:
            raise DomainError("point dimension does not match the form")
        total = self.field(0)
        for mono, c in self.terms.items():
            total += c * _monomial_value(mono, x, y, self.field)
        return self.field(total)

    def swap(self) -> BiForm:
        """Exchange the roles of x and y (the ruling swap on P^1 x P^1)."""
        a, b = self.bidegree
        m, n = self.nvars
        return BiForm(
            (b, a), {BiMonomial(k.y, k.x): c for k, c in self.terms.items()}, self.field, (n, m)
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{mono}" for mono, c in sorted(self.terms.items(), reverse=True))


@dataclass(frozen=True)
class QPoint:
    """A point of P^m x P^n given by two projective coordinate tuples."""

    x: tuple
    y: tuple

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(self.x))
        object.__setattr__(self, "y", tuple(self.y))
        if not any(self.x) or not any(self.y):
            raise DomainError(f"all-zero coordinate tuple in {self}")

    @classmethod
    def affine(cls, u, v) -> QPoint:
        """The point (1 : u) x (1 : v) of the standard chart of P^1 x P^1."""
        return cls((1, u), (1, v))

    def normalized(self, field: FieldDescriptor) -> tuple[tuple, tuple]:
        """Both tuples scaled so that the first nonzero coordinate is 1."""

        def norm(coords):
            cs = [field(c) for c in coords]
            lead = next((c for c in cs if c != 0), None)
            if lead is None:
                raise DomainError(f"coordinates {coords} vanish in {field}")
            inv = field.inv(lead)
            return tuple(field(c * inv) for c in cs)

        return norm(self.x), norm(self.y)


def _monomial_value(mono: BiMonomial, x, y, field: FieldDescriptor):
    val = field(1)
    for c, e in zip(x, mono.x):
        if e:
            val = val * c**e
    for c, e in zip(y, mono.y):
        if e:
            val = val * c**e
    return field(val)


def _check_field(sigma: BiForm, field: FieldDescriptor | None):
    if field is not None and field != sigma.field:
        raise DomainError(f"form lives over {sigma.field}, requested {field}")


def _bases(sigma: BiForm, r: int, t: int) -> tuple[BasisIndexer, BasisIndexer]:
    a, b = sigma.bidegree
    if r < 0 or t < b:
        raise DomainError(f"need r >= 0 and t >= b = {b}, got r={r}, t={t}")
    m, n = sigma.nvars
    return BasisIndexer(m, n, r, t, dual=True), BasisIndexer(m, n, r + a, t - b, dual=True)


def _contraction_entries(sigma: BiForm, r: int, t: int, weight):
    dom, cod = _bases(sigma, r, t)
    entries: dict[tuple[int, int], object] = {}
    terms = list(sigma.terms.items())
    for col, mono in enumerate(dom):
        for term, c in terms:
            if all(bk <= tk for bk, tk in zip(term.y, mono.y)):
                lower = tuple(tk - bk for bk, tk in zip(term.y, mono.y))
                row = cod.index_of_exponents(tuple(i + j for i, j in zip(mono.x, term.x)), lower)
                entries[(row, col)] = entries.get((row, col), 0) + c * weight(mono.y, term.y)
    return MapMatrix((cod.dim, dom.dim), entries, sigma.field, cod, dom)


def build_mulcon_matrix(
    sigma: BiForm, r: int, t: int, field: FieldDescriptor | None = None
) -> MapMatrix:
    """Matrix of S^r V (x) S^t W* -> S^(r+a) V (x) S^(t-b) W* induced by ``sigma``.

    Rows index the codomain and columns the domain, both in graded-lex
    order.  Coefficients follow the contraction rule, with no factorials.
    """
    _check_field(sigma, field)
    return _contraction_entries(sigma, r, t, lambda top, sub: 1)


def _falling(top: tuple[int, ...], sub: tuple[int, ...]) -> int:
    return prod(prod(range(tk - bk + 1, tk + 1)) for tk, bk in zip(top, sub))


def build_diff_matrix(
    op: BiForm, r: int, t: int, field: FieldDescriptor | None = None
) -> MapMatrix:
    """Matrix of the operator sum c x^A d^B acting on x^I y^T.

    Same support as :func:`build_mulcon_matrix`; the entry for y^T -> y^(T-B)
    carries the falling factorial prod T_k!/(T_k - B_k)!.
    """
    _check_field(op, field)
    p = op.field.p
    if p is not None and p <= t:
        raise PreconditionError(f"characteristic {p} <= t = {t}: factorials may vanish")
    return _contraction_entries(op, r, t, _falling)


def multiply_biforms(f: BiForm, g: BiForm) -> BiForm:
    f._same_space(g)
    terms: dict[BiMonomial, object] = {}
    for mf, cf in f.terms.items():
        for mg, cg in g.terms.items():
            key = BiMonomial(
                tuple(i + j for i, j in zip(mf.x, mg.x)), tuple(i + j for i, j in zip(mf.y, mg.y))
            )
            terms[key] = terms.get(key, 0) + cf * cg
    a = f.bidegree[0] + g.bidegree[0]
    b = f.bidegree[1] + g.bidegree[1]
    return BiForm((a, b), terms, f.field, f.nvars)


def random_biform(
    a: int, b: int, field: FieldDescriptor, seed: int, nvars: tuple[int, int] = (1, 1)
) -> BiForm:
    """Dense form with independent uniform coefficients, deterministic in ``seed``.

    Over QQ the coefficients are integers in [-2**15, 2**15].
    """
    if a < 0 or b < 0:
        raise DomainError(f"negative bidegree ({a}, {b})")
    m, n = nvars
    basis = BasisIndexer(m, n, a, b)
    rng = np.random.default_rng(seed)
    if field.p is not None:
        coeffs = rng.integers(0, field.p, size=basis.dim)
    else:
        coeffs = rng.integers(-(2**15), 2**15 + 1, size=basis.dim)
    return BiForm((a, b), {mono: int(c) for mono, c in zip(basis, coeffs)}, field, (m, n))


def _distinct_nonzero(values, field: FieldDescriptor, what: str) -> list:
    vals = [field(v) for v in values]
    if any(v == 0 for v in vals):
        raise DomainError(f"{what} values must be nonzero: {list(values)}")
    if len(set(vals)) != len(vals):
        raise DomainError(f"{what} values must be pairwise distinct: {list(values)}")
    return vals


def _poly_degree(coeffs: Sequence, field: FieldDescriptor) -> list:
    cs = [field(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def grid_curve_form(
    a: int,
    b: int,
    lam: Sequence,
    mu: Sequence,
    h_coeffs: Sequence,
    field: FieldDescriptor = QQ,
) -> BiForm:
    """The (a, b) form ``l(u) v^b - h(u) m(v)`` in bihomogeneous coordinates.

    On the chart u = x1/x0, v = y1/y0, l(u) = prod(u - lam_i) and
    m(v) = prod(v - mu_j); ``h_coeffs[i]`` is the coefficient of u^i and h
    must have degree exactly ``a``.  The result vanishes at every grid point
    (lam_i, mu_j).
    """
    if a < 1 or b < 1:
        raise DomainError(f"grid curves need a, b >= 1, got ({a}, {b})")
    if len(lam) != a or len(mu) != b:
        raise DomainError(f"need {a} lambda values and {b} mu values")
    lam = _distinct_nonzero(lam, field, "lambda")
    mu = _distinct_nonzero(mu, field, "mu")
    hs = _poly_degree(h_coeffs, field)
    if len(hs) - 1 != a:
        raise DomainError(f"h must have degree exactly {a}, got {len(hs) - 1}")
    x0, x1 = BiForm.variable("x", 0, field), BiForm.variable("x", 1, field)
    y0, y1 = BiForm.variable("y", 0, field), BiForm.variable("y", 1, field)
    big_l = BiForm.one(field)
    for li in lam:
        big_l = big_l * (x1 - x0.scale(li))
    big_m = BiForm.one(field)
    for mj in mu:
        big_m = big_m * (y1 - y0.scale(mj))
    big_h = BiForm.from_exponents(
        {((a - i, i), (0, 0)): c for i, c in enumerate(hs)}, field, bidegree=(a, 0)
    )
    return big_l * y1**b - big_h * big_m


def _sympy_domain(field: FieldDescriptor):
    return sympy.QQ if field.p is None else sympy.GF(field.p)


def smoothness_certificate(
    a: int,
    b: int,
    lam: Sequence,
    mu: Sequence,
    h_coeffs: Sequence,
    field: FieldDescriptor = QQ,
) -> bool:
    """Sufficient conditions for the grid curve to be smooth on the u, v chart.

    Checks that h is squarefree, that l and h are coprime, and that
    l(u) c^b - m(c) h(u) is squarefree in u for every root c of
    v^b m'(v) - b v^(b-1) m(v).  The last condition is tested as
    gcd(Res_u(phi, phi_u), P) = 1, which may also fail when the leading
    coefficient in u drops at some c.  ``False`` only means "not certified".
    """
    # validates the inputs
    grid_curve_form(a, b, lam, mu, h_coeffs, field)
    dom = _sympy_domain(field)
    u, v = sympy.symbols("u v")

    def coerce(c):
        c = field(c)
        return sympy.Rational(c.numerator, c.denominator) if field.p is None else int(c)

    l_u = sympy.Poly(prod((u - coerce(li) for li in lam), start=sympy.Integer(1)), u, domain=dom)
    m_v = sympy.Poly(prod((v - coerce(mj) for mj in mu), start=sympy.Integer(1)), v, domain=dom)
    h_u = sympy.Poly(sum(coerce(c) * u**i for i, c in enumerate(h_coeffs)), u, domain=dom)

    if sympy.degree(sympy.gcd(h_u, h_u.diff(u)), u) > 0:
        return False
    if sympy.degree(sympy.gcd(l_u, h_u), u) > 0:
        return False
    finite_set = sympy.Poly(
        v**b * m_v.diff(v).as_expr() - b * v ** (b - 1) * m_v.as_expr(), v, domain=dom
    )
    if finite_set.is_zero:
        return False
    phi = sympy.Poly(l_u.as_expr() * v**b - m_v.as_expr() * h_u.as_expr(), u, v, domain=dom)
    res = sympy.Poly(sympy.resultant(phi, phi.diff(u), u), v, domain=dom)
    if res.is_zero:
        return False
    return sympy.degree(sympy.gcd(res, finite_set), v) == 0


def evaluation_matrix(
    points: Sequence[QPoint], alpha: int, beta: int, field: FieldDescriptor = QQ
) -> MapMatrix:
    """Rows are points, columns the monomials of bidegree (alpha, beta)."""
    if alpha < 0 or beta < 0:
        raise DomainError(f"negative bidegree ({alpha}, {beta})")
    points = list(points)
    if points:
        m, n = len(points[0].x) - 1, len(points[0].y) - 1
    else:
        m = n = 1
    cols = BasisIndexer(m, n, alpha, beta)
    entries = {}
    for i, pt in enumerate(points):
        x, y = pt.normalized(field)
        if len(x) != m + 1 or len(y) != n + 1:
            raise DomainError("points of mixed dimensions")
        for j, mono in enumerate(cols):
            entries[(i, j)] = _monomial_value(mono, x, y, field)
    return MapMatrix((len(points), cols.dim), entries, field, None, cols)


def substitute_linear(sigma: BiForm, g_v, g_w) -> BiForm:
    """Replace x by ``g_v @ x`` and y by ``g_w @ y``.

    ``x_i`` becomes ``sum_j g_v[i][j] x_j``; both matrices must be
    invertible over the form's field.
    """
    field = sigma.field
    m, n = sigma.nvars
    g_v = np.asarray(g_v, dtype=object)
    g_w = np.asarray(g_w, dtype=object)
    if g_v.shape != (m + 1, m + 1) or g_w.shape != (n + 1, n + 1):
        raise DomainError("substitution matrices have the wrong shape")
    if not (is_invertible(g_v, field) and is_invertible(g_w, field)):
        raise DomainError("substitution matrices must be invertible")

    def linear(which, row):
        out = BiForm.zero(*((1, 0) if which == "x" else (0, 1)), field, sigma.nvars)
        for j, c in enumerate(row):
            out = out + BiForm.variable(which, j, field, sigma.nvars).scale(c)
        return out

    xs = [linear("x", g_v[i]) for i in range(m + 1)]
    ys = [linear("y", g_w[i]) for i in range(n + 1)]
    powers: dict[tuple[str, int, int], BiForm] = {}

    def power(which, i, e):
        key = (which, i, e)
        if key not in powers:
            powers[key] = (xs if which == "x" else ys)[i] ** e
        return powers[key]

    out = BiForm.zero(*sigma.bidegree, field, sigma.nvars)
    for mono, c in sigma.terms.items():
        term = BiForm.one(field, sigma.nvars).scale(c)
        for i, e in enumerate(mono.x):
            if e:
                term = term * power("x", i, e)
        for i, e in enumerate(mono.y):
            if e:
                term = term * power("y", i, e)
        out = out + term
    return out
