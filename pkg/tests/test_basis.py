from itertools import product
from math import comb

import pytest

from mulcon.basis import BasisIndexer, BiMonomial, dimension, exponent_vectors
from mulcon.exceptions import DomainError


def brute_vectors(nvars, degree):
    return [e for e in product(range(degree + 1), repeat=nvars) if sum(e) == degree]


@pytest.mark.parametrize("args, expected", [((1, 1, 2, 3), 12), ((2, 1, 1, 1), 6), ((1, 1, 0, 0), 1)])
def test_dimension_examples(args, expected):
    assert dimension(*args) == expected


@pytest.mark.parametrize("bad", [(-1, 1, 0, 0), (1, 1, -1, 0), (1, 1, 0, -2)])
def test_dimension_rejects_negative(bad):
    with pytest.raises(DomainError):
        dimension(*bad)


def test_dimension_matches_enumeration():
    for m, n, r, t in product(range(4), range(4), range(7), range(7)):
        count = len(brute_vectors(m + 1, r)) * len(brute_vectors(n + 1, t))
        assert dimension(m, n, r, t) == count


def test_exponent_vectors_are_lex_descending():
    for nvars, degree in product(range(1, 7), range(7)):
        expected = sorted(brute_vectors(nvars, degree), reverse=True)
        assert list(exponent_vectors(nvars, degree)) == expected


def test_first_and_last_monomials():
    b = BasisIndexer(1, 1, 2, 3, dual=True)
    assert b.index_of(BiMonomial((2, 0), (3, 0), True)) == 0
    assert b.index_of(BiMonomial((0, 2), (0, 3), True)) == b.dim - 1
    assert b.monomial_at(0) == BiMonomial((2, 0), (3, 0), True)
    assert b.monomial_at(b.dim - 1) == BiMonomial((0, 2), (0, 3), True)


def test_round_trip_examples():
    b = BasisIndexer(1, 1, 2, 2)
    for mono in b:
        assert b.monomial_at(b.index_of(mono)) == mono
    b = BasisIndexer(1, 1, 3, 1)
    assert [b.index_of(b.monomial_at(i)) for i in range(b.dim)] == list(range(b.dim))


def test_round_trip_exhaustive_small():
    for m, n, r, t in product(range(3), range(3), range(5), range(5)):
        b = BasisIndexer(m, n, r, t)
        monos = list(b)
        assert len(monos) == b.dim == dimension(m, n, r, t)
        assert [b.index_of(x) for x in monos] == list(range(b.dim))
        # concatenated exponents strictly decrease along the order
        keys = [x.x + x.y for x in monos]
        assert keys == sorted(keys, reverse=True) and len(set(keys)) == len(keys)


def test_factor_bijection_up_to_six():
    # index = ix * dim_y + iy, so per-factor bijections give the full one
    for nvars, degree in product(range(1, 8), range(7)):
        vecs = exponent_vectors(nvars, degree)
        assert len(vecs) == comb(nvars - 1 + degree, degree) == len(set(vecs))


def test_independent_indexers_agree():
    assert list(BasisIndexer(2, 1, 3, 2)) == list(BasisIndexer(2, 1, 3, 2))


def test_bidegree_mismatch_and_range_errors():
    b = BasisIndexer(1, 1, 2, 2)
    with pytest.raises(DomainError):
        b.index_of(BiMonomial((1, 0), (2, 0)))
    with pytest.raises(DomainError):
        b.index_of(BiMonomial((1, 0, 1), (2, 0)))
    with pytest.raises(DomainError):
        b.monomial_at(b.dim)
    with pytest.raises(DomainError):
        b.monomial_at(-1)


def test_monomial_str():
    assert str(BiMonomial((1, 2), (0, 1), dual=True)) == "x0*x1^2*y1*"
    assert str(BiMonomial((0, 0), (0, 0))) == "1"
