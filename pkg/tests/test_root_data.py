from fractions import Fraction

import pytest

from orbihilb.errors import InvalidRank, UnknownRootSystem
from orbihilb.root_data import (
    affine_cartan,
    is_positive_definite,
    leading_minors,
    make_root_system,
    parse_root,
    standard_sweep,
)


def test_a1_basic_data():
    rs = make_root_system("A", 1)
    assert rs.k == 2
    assert rs.cartan == ((2,),)
    assert rs.dims == (1, 1)


def test_d4_order_and_dims():
    rs = make_root_system("D", 4)
    assert rs.k == 8
    # the multiset of irreducible dimensions; node order follows the diagram labelling
    assert sorted(rs.dims) == [1, 1, 1, 1, 2]


def test_e8_order_and_dims():
    rs = make_root_system("E", 8)
    assert rs.k == 120
    assert sorted(rs.dims) == [1, 2, 2, 3, 3, 4, 4, 5, 6]


def test_affine_a1_double_bond():
    assert affine_cartan(parse_root("A1")) == ((2, -2), (-2, 2))


def test_affine_a2_triangle():
    assert affine_cartan(parse_root("A2")) == ((2, -1, -1), (-1, 2, -1), (-1, -1, 2))


def test_affine_d4_central_node():
    rs = parse_root("D4")
    c = affine_cartan(rs)
    centre = rs.dims.index(2)
    assert [j for j in range(5) if c[centre][j] == -1] == [j for j in range(5) if j != centre]
    assert all(sum(c[i][j] * rs.dims[j] for j in range(5)) == 0 for i in range(5))


@pytest.mark.parametrize("rs", standard_sweep(), ids=lambda r: r.name)
def test_structural_identities(rs):
    c = affine_cartan(rs)
    size = rs.n + 1
    assert sum(d * d for d in rs.dims) == rs.k
    assert rs.dims[0] == 1
    assert all(sum(c[i][j] * rs.dims[j] for j in range(size)) == 0 for i in range(size))
    assert is_positive_definite(rs.cartan)
    # deleting node 0 of the affine matrix leaves the finite Cartan matrix
    assert tuple(row[1:] for row in c[1:]) == rs.cartan


def test_group_orders():
    expected = {"A5": 6, "D5": 12, "D8": 24, "E6": 24, "E7": 48, "E8": 120}
    for token, k in expected.items():
        assert parse_root(token).k == k


def test_leading_minors_of_a2():
    assert leading_minors(((2, -1), (-1, 2))) == [Fraction(2), Fraction(3)]


def test_affine_matrix_is_not_definite():
    assert not is_positive_definite(affine_cartan(parse_root("E6")))


@pytest.mark.parametrize("token", ["Q9", "A0", "D3", "E9", "E5", "", "A-1", "B2"])
def test_bad_tokens(token):
    with pytest.raises((UnknownRootSystem, InvalidRank)) as exc:
        parse_root(token)
    assert exc.value.code.startswith("root_data.")


def test_invalid_rank_code():
    with pytest.raises(InvalidRank) as exc:
        make_root_system("D", 3)
    assert exc.value.code == "root_data.InvalidRank"


def test_parse_is_case_insensitive():
    assert parse_root("e7") == parse_root("E7")


def test_standard_sweep_members():
    names = [rs.name for rs in standard_sweep()]
    assert names == [f"A{i}" for i in range(1, 11)] + [f"D{i}" for i in range(4, 9)] + ["E6", "E7", "E8"]
