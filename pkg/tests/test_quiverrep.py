import json
from fractions import Fraction

import hypothesis.strategies as st
import pytest
from conftest import posets
from hypothesis import given, settings
from oracles import sympy_hom_dim

from cambrep.exact import Matrix
from cambrep.fixtures import STOKES
from cambrep.poset import chain, dual, from_covers, induced_subposet
from cambrep.quiverrep import (
    PosetRep,
    RepError,
    build_M_lambda,
    build_M_lambda_mu,
    constant_rep,
    default_alpha,
    find_square_pattern,
    hom_space,
    is_isomorphic_reps,
    is_natural,
    simple_rep,
    square_edges,
    validate_rep,
)

STOKES_WITNESS = [1, 2, 3, 5, 7, 8, 10, 11, 0]
X = induced_subposet(STOKES.poset(), STOKES_WITNESS)  # omega is element 8
CYCLE = induced_subposet(STOKES.poset(), STOKES_WITNESS[:-1])
DIAMOND = from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)])

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def crown_with_omega():
    covers = []
    for i in range(4):
        covers += [(i, 4 + i), ((i + 1) % 4, 4 + i)]
    return from_covers(9, covers + [(8, 0), (8, 1)])


def relabel(R, perm):
    """Transport a representation along ``x -> perm[x]``."""
    P = R.base
    Q = from_covers(P.n, [(perm[a], perm[b]) for a, b in P.covers])
    dims = [0] * P.n
    for x in range(P.n):
        dims[perm[x]] = R.dims[x]
    return PosetRep(Q, tuple(dims), {(perm[a], perm[b]): m for (a, b), m in R.maps.items()})


# --- validation -------------------------------------------------------------

def test_validate_examples():
    assert validate_rep(constant_rep(DIAMOND, 3)) == (True, None)
    maps = {e: Matrix.identity(1) for e in DIAMOND.covers}
    maps[(2, 3)] = Matrix([[2]])
    assert validate_rep(PosetRep(DIAMOND, (1,) * 4, maps)) == (False, (0, 3))


def test_shape_mismatch_rejected():
    with pytest.raises(RepError):
        PosetRep(chain(2), (1, 2), {(0, 1): Matrix([[1]])})
    with pytest.raises(RepError):
        PosetRep(chain(2), (1, 1), {})


def test_builders_give_valid_reps():
    assert validate_rep(build_M_lambda_mu(X, 2, 3))[0]
    assert validate_rep(build_M_lambda(CYCLE, CYCLE.covers[0], 5))[0]
    assert validate_rep(build_M_lambda_mu(crown_with_omega(), 1, -1))[0]


# --- Hom spaces -------------------------------------------------------------

def test_simple_and_constant():
    assert hom_space(simple_rep(DIAMOND, 2), simple_rep(DIAMOND, 2)).dim == 1
    assert hom_space(simple_rep(DIAMOND, 1), simple_rep(DIAMOND, 2)).dim == 0
    assert hom_space(constant_rep(DIAMOND), constant_rep(DIAMOND)).dim == 1


def test_basis_is_natural():
    M, N = build_M_lambda_mu(X, 2, 3), build_M_lambda_mu(X, 3, 2)
    H = hom_space(M, N)
    assert H.dim == 1
    assert all(is_natural(M, N, f) for f in H.basis)


def test_m_lambda_examples():
    alpha = CYCLE.covers[0]
    assert build_M_lambda(CYCLE, alpha, 1).maps == constant_rep(CYCLE).maps
    M0 = build_M_lambda(CYCLE, alpha, 0)
    assert hom_space(M0, M0).dim == 1
    assert hom_space(build_M_lambda(CYCLE, alpha, 2), build_M_lambda(CYCLE, alpha, 3)).dim == 0
    with pytest.raises(RepError):
        build_M_lambda(CYCLE, (0, 0), 2)
    with pytest.raises(RepError):
        build_M_lambda(X, X.covers[0], 2)


@given(rationals, rationals)
def test_m_lambda_hom(lam, mu):
    alpha = CYCLE.covers[3]
    A, B = build_M_lambda(CYCLE, alpha, lam), build_M_lambda(CYCLE, alpha, mu)
    assert hom_space(A, A).dim == 1
    assert hom_space(A, B).dim == int(lam == mu)


def test_m_lambda_mu_examples():
    M23 = build_M_lambda_mu(X, 2, 3, omega=8)
    assert hom_space(M23, M23).dim == 1
    assert hom_space(M23, build_M_lambda_mu(X, 4, 5, omega=8)).dim == 0
    assert is_isomorphic_reps(M23, build_M_lambda_mu(X, 3, 2, omega=8))
    assert not is_isomorphic_reps(M23, build_M_lambda_mu(X, 2, 5, omega=8))
    assert is_isomorphic_reps(M23, M23)
    with pytest.raises(RepError):
        build_M_lambda_mu(X, 2, 2)


@settings(max_examples=25)
@given(rationals, rationals, rationals, rationals)
def test_family_is_pairwise_non_isomorphic(a, b, c, d):
    if a == b or c == d:
        return
    M, N = build_M_lambda_mu(X, a, b), build_M_lambda_mu(X, c, d)
    assert hom_space(M, M).dim == 1
    same = {a, b} == {c, d}
    if not same:
        assert hom_space(M, N).dim == 0 and hom_space(N, M).dim == 0
    assert is_isomorphic_reps(M, N) == same


def test_square_pattern_and_alpha():
    pat = find_square_pattern(X, omega=8)
    assert pat.orientation == "min"
    assert [STOKES_WITNESS[i] for i in pat.square] == [0, 2, 10, 7]
    alpha = default_alpha(X, pat)
    assert alpha not in square_edges(pat) and pat.omega not in alpha
    with pytest.raises(RepError):
        build_M_lambda_mu(X, 2, 3, alpha=next(iter(square_edges(pat))))
    with pytest.raises(RepError):
        find_square_pattern(CYCLE)


@pytest.mark.parametrize("Y", [dual(crown_with_omega()), dual(X)])
def test_dual_orientation_family(Y):
    assert find_square_pattern(Y, omega=8).orientation == "max"
    reps = [build_M_lambda_mu(Y, a, b, omega=8) for a, b in ((2, 3), (3, 2), (4, 5))]
    assert all(validate_rep(R)[0] for R in reps)
    assert [hom_space(R, R).dim for R in reps] == [1, 1, 1]
    assert is_isomorphic_reps(reps[0], reps[1]) and not is_isomorphic_reps(reps[0], reps[2])


def test_square_top_can_serve_as_omega():
    # the top of the square, with the old omega put back in the cycle, is another reading
    pat = find_square_pattern(X, omega=8)
    top = pat.square[3]
    other = find_square_pattern(X, omega=top)
    assert other.orientation == "max"
    reps = [build_M_lambda_mu(X, a, b, omega=top) for a, b in ((2, 3), (3, 2), (4, 5))]
    assert [hom_space(R, R).dim for R in reps] == [1, 1, 1]
    assert is_isomorphic_reps(reps[0], reps[1]) and not is_isomorphic_reps(reps[0], reps[2])


def test_abstract_eight_cycle_plus_omega():
    Y = crown_with_omega()
    reps = [build_M_lambda_mu(Y, a, b) for a, b in ((2, 3), (4, 5), (3, 2))]
    assert [hom_space(R, R).dim for R in reps] == [1, 1, 1]
    assert hom_space(reps[0], reps[1]).dim == 0
    assert is_isomorphic_reps(reps[0], reps[2]) and not is_isomorphic_reps(reps[0], reps[1])


def test_isomorphism_needs_equal_dims():
    assert not is_isomorphic_reps(simple_rep(DIAMOND, 0), simple_rep(DIAMOND, 1))
    assert is_isomorphic_reps(constant_rep(DIAMOND, 2), constant_rep(DIAMOND, 2))


def test_json_roundtrip():
    M = build_M_lambda_mu(X, Fraction(1, 3), -2)
    again = PosetRep.from_json(json.dumps(M.to_json()))
    assert again == M


# --- oracles and invariance -------------------------------------------------

@st.composite
def small_reps(draw):
    P = draw(posets(max_size=5))
    entries = st.integers(-2, 2)

    def rep():
        dims = [draw(st.integers(0, 2)) for _ in range(P.n)]
        maps = {(x, y): [[draw(entries) for _ in range(dims[x])] for _ in range(dims[y])]
                for x, y in P.covers}
        return dims, maps

    return P, rep(), rep()


def _to_rep(P, dims, maps):
    return PosetRep(P, tuple(dims), {e: Matrix(rows, dims[e[0]]) if rows else Matrix.zeros(0, dims[e[0]])
                                     for e, rows in maps.items()})


@settings(max_examples=40)
@given(small_reps())
def test_hom_dim_matches_sympy(data):
    P, (dm, mm), (dn, mn) = data
    M, N = _to_rep(P, dm, mm), _to_rep(P, dn, mn)
    assert hom_space(M, N).dim == sympy_hom_dim(P.n, P.covers, dm, mm, dn, mn)


@settings(max_examples=30)
@given(small_reps(), st.permutations(range(5)))
def test_hom_dim_invariant_under_relabeling(data, perm5):
    P, (dm, mm), (dn, mn) = data
    perm = [p for p in perm5 if p < P.n]
    M, N = _to_rep(P, dm, mm), _to_rep(P, dn, mn)
    assert hom_space(relabel(M, perm), relabel(N, perm)).dim == hom_space(M, N).dim


def test_hom_dim_invariant_under_crown_rotation():
    Y = crown_with_omega()
    rot = [1, 2, 3, 0, 5, 6, 7, 4, 8]  # automorphism of the crown alone
    base = from_covers(8, [e for e in Y.covers if 8 not in e])
    A = build_M_lambda(base, base.covers[0], 2)
    B = build_M_lambda(base, base.covers[0], 3)
    A2 = relabel(A, rot[:8])
    assert A2.base == base
    assert hom_space(A2, relabel(B, rot[:8])).dim == hom_space(A, B).dim == 0
    # moving the scaled edge around the cycle gives an isomorphic representation
    assert is_isomorphic_reps(A2, A)
