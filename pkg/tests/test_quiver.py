import itertools

import pytest

from orbihilb.errors import ParityError
from orbihilb.quiver import (
    DeltaDecomposition,
    affine_pairing,
    decompose,
    finite_pairing,
    length_ellipsoid,
    norm_ball,
    quiver_dimension,
    reconstruct,
    verify_dim_is_2k,
    zero_dim_length,
    zero_dim_support,
)
from orbihilb.rigid_theta import lattice_exponent, rigid_series
from orbihilb.root_data import parse_root, standard_sweep


def test_decomposition_examples():
    a1 = parse_root("A1")
    assert decompose(a1, (1, 1)) == DeltaDecomposition(1, (0,))
    assert decompose(a1, (1, 0)) == DeltaDecomposition(0, (-1,))
    for token in ("A3", "D5", "E7"):
        rs = parse_root(token)
        assert decompose(rs, (0,) * (rs.n + 1)) == DeltaDecomposition(0, (0,) * rs.n)


def test_dimension_examples():
    a1 = parse_root("A1")
    assert quiver_dimension(a1, (1, 1)) == 2
    assert quiver_dimension(a1, (1, 0)) == 0
    assert decompose(a1, (2, 1)).level_k == 1
    assert quiver_dimension(a1, (2, 1)) == 2


@pytest.mark.parametrize("token,bound", [("A1", 6), ("A2", 4), ("A3", 3), ("D4", 3), ("E6", 2)])
def test_dim_is_twice_level(token, bound):
    assert verify_dim_is_2k(parse_root(token), bound)


def test_affine_form_restricts_to_finite_form():
    for token in ("A2", "D4", "E6"):
        rs = parse_root(token)
        for m in itertools.product(range(-2, 3), repeat=min(rs.n, 4)):
            m = tuple(m) + (0,) * (rs.n - len(m))
            assert affine_pairing(rs, (0,) + m, (0,) + m) == finite_pairing(rs, m, m)
        assert affine_pairing(rs, rs.delta, rs.delta) == 0


def test_reconstruction_round_trip():
    rs = parse_root("D5")
    for v in itertools.product(range(3), repeat=rs.n + 1):
        assert reconstruct(rs, decompose(rs, v)) == v


def test_odd_norm_is_rejected():
    # root lattices are even, so an odd (m|m) can only come from a bad matrix
    from dataclasses import replace

    rs = replace(parse_root("A1"), cartan=((1,),), dims=(1, 1))
    with pytest.raises(ParityError) as exc:
        decompose(rs, (0, 1))
    assert exc.value.code == "quiver_check.ParityError"


def test_lengths_match_lattice_exponents():
    a1 = parse_root("A1")
    for m in range(-6, 7):
        assert zero_dim_length(a1, (m,)) == 2 * m * m + m
    for token in ("A2", "D4", "E6"):
        rs = parse_root(token)
        assert zero_dim_length(rs, (0,) * rs.n) == 0
        for m in itertools.product(range(-1, 2), repeat=rs.n):
            assert zero_dim_length(rs, m) == lattice_exponent(rs, m)


def test_a2_support():
    assert zero_dim_support(parse_root("A2"), 5).integer_coeffs() == [1, 1, 2, 0, 2, 1]


@pytest.mark.parametrize("token", ["A1", "A2", "D4", "E6"])
def test_support_matches_theta_to_100(token):
    rs = parse_root(token)
    assert zero_dim_support(rs, 100) == rigid_series(rs, 100)


def test_support_box_route():
    rs = parse_root("A2")
    assert zero_dim_support(rs, 20, box=6) == zero_dim_support(rs, 20)


def test_norm_ball_is_exact():
    rs = parse_root("A3")
    ball = set(norm_ball(rs, 8))
    cube = {m for m in itertools.product(range(-4, 5), repeat=3) if finite_pairing(rs, m, m) <= 8}
    assert ball == cube


@pytest.mark.parametrize("rs", [r for r in standard_sweep() if r.n <= 6], ids=lambda r: r.name)
def test_length_ellipsoid_is_exact(rs):
    order = 6
    s, radius = length_ellipsoid(rs, order)
    inside = list(norm_ball(rs, radius, s))
    assert all(zero_dim_length(rs, m) <= order for m in inside)
    assert len(inside) == sum(rigid_series(rs, order).integer_coeffs())
