import random

import pytest
import sympy
from sympy.matrices.normalforms import invariant_factors as sympy_invariant_factors
from hypothesis import given, settings
from hypothesis import strategies as st

from dmstrata import oracle
from dmstrata.errors import SNFOverflowError
from dmstrata.nerve import (
    OrderComplex,
    betti_euler_characteristic,
    boundary_matrices,
    boundary_squares_vanish,
    euler_characteristic,
    homology,
    matmul,
    order_complex,
    smith_decomposition,
    smith_normal_form,
)
from dmstrata.strata import build_poset

from .conftest import SMALL_TYPES


def _chain(factors):
    return all(b % a == 0 for a, b in zip(factors, factors[1:]))


def test_one_one_order_complex():
    X = order_complex(build_poset(1, 1))
    assert X.simplices == [[(0,), (1,)], [(0, 1)]]


def test_zero_four_star():
    X = order_complex(build_poset(0, 4))
    assert X.counts() == [4, 3]
    assert all(s[0] == 0 for s in X.simplices[1])


def test_two_zero_chain_counts_match_exhaustive_chains():
    P = build_poset(2, 0)
    X = order_complex(P)
    brute = oracle.strict_chains(range(len(P)), lambda a, b: P.leq(a, b))
    assert [len(layer) for layer in brute] == [7, 15, 13, 4]
    assert X.counts() == [7, 15, 13, 4]
    assert [sorted(layer) for layer in brute] == X.simplices


def test_single_edge_boundary():
    X = OrderComplex([0, 1], [[(0,), (1,)], [(0, 1)]])
    C = boundary_matrices(X)
    assert C.boundaries[1] == [[-1], [1]]


def test_empty_complex():
    X = OrderComplex([], [])
    C = boundary_matrices(X)
    assert C.boundaries == [] and homology(X) == [] and euler_characteristic(X) == 0


def test_star_boundary_columns():
    C = boundary_matrices(order_complex(build_poset(0, 4)))
    M = C.boundaries[1]
    assert (len(M), len(M[0])) == (4, 3)
    for col in zip(*M):
        assert sorted(col) == [-1, 0, 0, 1]


def test_snf_examples():
    assert smith_normal_form([[1, 0], [0, 1]]).factors == (1, 1)
    assert smith_normal_form([[2, 0], [0, 4]]).factors == (2, 4)
    assert smith_normal_form([[12, 6, 4], [3, 9, 6], [2, 16, 14]]).factors == (1, 10, 30)
    assert smith_normal_form([[0, 0], [0, 0]]).rank == 0
    assert smith_normal_form([]).factors == ()


def test_random_five_by_seven_against_determinantal_divisors():
    rng = random.Random(57)
    for _ in range(20):
        M = [[rng.randint(-9, 9) for _ in range(7)] for _ in range(5)]
        assert list(smith_normal_form(M).factors) == oracle.invariant_factors(M)


@given(st.integers(1, 6), st.integers(1, 6), st.data())
@settings(max_examples=150, deadline=None)
def test_decomposition_is_unimodular(m, n, data):
    M = [[data.draw(st.integers(-6, 6)) for _ in range(n)] for _ in range(m)]
    D, U, V = smith_decomposition(M)
    assert matmul(matmul(U, M), V) == D
    assert abs(oracle._det(U)) == 1 and abs(oracle._det(V)) == 1
    diag = [D[i][i] for i in range(min(m, n)) if D[i][i]]
    assert all(D[i][j] == 0 for i in range(m) for j in range(n) if i != j)
    assert _chain(diag)
    assert tuple(diag) == smith_normal_form(M).factors
    expected = [int(x) for x in sympy_invariant_factors(sympy.Matrix(M)) if x != 0]
    assert diag == expected


def test_entry_growth_uses_big_integers():
    big = 2**40
    M = [[1, big], [big, 1]]
    # fixed-width emulation refuses instead of wrapping
    with pytest.raises(SNFOverflowError):
        smith_normal_form(M, word_bits=64)
    assert list(smith_normal_form(M).factors) == oracle.invariant_factors(M) == [1, big**2 - 1]


@pytest.mark.parametrize("g, n", SMALL_TYPES)
def test_full_poset_is_acyclic(g, n):
    X = order_complex(build_poset(g, n))
    C = boundary_matrices(X)
    assert boundary_squares_vanish(C)
    H = homology(X)
    assert (H[0].betti, H[0].torsion) == (1, ())
    assert all(h.betti == 0 and h.torsion == () for h in H[1:])
    assert euler_characteristic(X) == betti_euler_characteristic(H) == 1


@pytest.mark.parametrize("g, n", SMALL_TYPES)
def test_boundary_only_euler(g, n):
    X = order_complex(build_poset(g, n), boundary_only=True)
    assert boundary_squares_vanish(boundary_matrices(X))
    assert euler_characteristic(X) == betti_euler_characteristic(homology(X))


def test_boundary_only_homology_of_zero_five():
    # cross-check the sparse engine against sympy on the same boundary matrices
    X = order_complex(build_poset(0, 5), boundary_only=True)
    C = boundary_matrices(X)
    for k in range(1, len(C.ranks)):
        M = C.boundaries[k]
        assert sympy.Matrix(M).rank() == smith_normal_form(M).rank


def test_homology_string():
    X = order_complex(build_poset(0, 4), boundary_only=True)
    assert [str(h) for h in homology(X)] == ["Z^3"]
