"""Chow-ring arithmetic and Chern-class computations on P^3."""

import pytest

from sheafcalc.chow import (
    ChowClass,
    DimensionMismatchError,
    MalformedComplexError,
    chern_from_complex,
    chern_of_atom,
    chern_of_sum,
    factor_line,
    hrr_chi,
    inv,
    mul,
    one,
    rank_of_complex,
    twist,
)
from sheafcalc.grammar import parse_complex
from sheafcalc.sheaves import cotangent, line, tangent


def test_chowclass_padding_and_str():
    c = ChowClass([1, 3])
    assert c.coeffs == (1, 3, 0, 0)
    assert str(c) == "1 + 3h"
    assert str(ChowClass([1, 3, 9, 27])) == "1 + 3h + 9h^2 + 27h^3"
    assert str(ChowClass([1, 0, -2, 0])) == "1 - 2h^2"


def test_mul_truncates_at_dim():
    # (1 + h)^4 in Z[h]/(h^4) drops the h^4 term
    c = ChowClass([1, 1])
    p4 = mul(mul(c, c), mul(c, c))
    assert p4 == ChowClass([1, 4, 6, 4])


def test_mul_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        mul(ChowClass([1, 1], dim=3), ChowClass([1, 1], dim=2))


def test_inv_of_line_class():
    # oracle: 1/(1+ah) = sum (-a)^k h^k, truncated
    for a in range(-4, 5):
        assert inv(ChowClass([1, a])) == ChowClass([1, -a, a * a, -(a**3)])


def test_inv_is_two_sided_inverse():
    c = ChowClass([1, 2, -3, 7])
    assert mul(c, inv(c)) == one()
    assert mul(inv(c), c) == one()


def test_inv_requires_unit():
    with pytest.raises(ValueError):
        inv(ChowClass([0, 1]))


def test_chern_of_line_atom():
    assert chern_of_atom(line(5)) == ChowClass([1, 5, 0, 0])
    assert chern_of_atom(line(0)) == one()


def test_chern_of_tangent_atom():
    # c(T) on P^3 from the Euler sequence: (1+h)^4
    assert chern_of_atom(tangent(0)) == ChowClass([1, 4, 6, 4])
    # and its dual
    assert chern_of_atom(cotangent(0)) == ChowClass([1, -4, 6, -4])


def test_tangent_twist_consistency():
    # c(T(a)) computed directly must match twisting c(T) by a (rank 3)
    for a in range(-4, 5):
        assert chern_of_atom(tangent(a)) == twist(ChowClass([1, 4, 6, 4]), 3, a)
        assert chern_of_atom(cotangent(a)) == twist(ChowClass([1, -4, 6, -4]), 3, a)


def test_whitney_on_explicit_sum():
    s = line(1) + line(-2) + tangent(-2)
    expected = mul(
        mul(ChowClass([1, 1]), ChowClass([1, -2])), chern_of_atom(tangent(-2))
    )
    assert chern_of_sum(s) == expected


def test_chern_from_complex_alternates():
    C = parse_complex("0 -> O(-3) -> 4O -> E -> 0")
    assert chern_from_complex(C) == ChowClass([1, 3, 9, 27])
    assert rank_of_complex(C) == 3


def test_rank_of_complex_rejects_negative():
    C = parse_complex("0 -> 5O -> 2O(1) -> E -> 0")
    with pytest.raises(MalformedComplexError):
        rank_of_complex(C)


def test_twist_identity_and_roundtrip():
    c = ChowClass([1, 3, 9, 27])
    assert twist(c, 3, 0) == c
    assert twist(twist(c, 3, 2), 3, -2) == c
    # composition of twists adds
    assert twist(twist(c, 3, 1), 3, 1) == twist(c, 3, 2)


def test_twist_known_value():
    # entry-style rank-3 class twisted by -1
    assert twist(ChowClass([1, 3, 9, 27]), 3, -1) == ChowClass([1, 0, 6, 20])
    assert twist(ChowClass([1, 3, 4, 2]), 3, -1) == ChowClass([1, 0, 1, 0])


def test_twist_matches_line_bundle_product():
    # for rank 1, twisting by t is multiplication shift c1 -> c1 + t
    for a in range(-3, 4):
        for t in range(-3, 4):
            assert twist(ChowClass([1, a]), 1, t) == ChowClass([1, a + t])


def test_hrr_chi_line_bundles():
    # oracle: chi(O(a)) = (a+1)(a+2)(a+3)/6
    for a in range(-8, 9):
        expected = (a + 1) * (a + 2) * (a + 3) // 6
        assert hrr_chi(1, ChowClass([1, a])) == expected


def test_hrr_chi_additive():
    ca = ChowClass([1, 2])
    cb = ChowClass([1, -3])
    assert hrr_chi(2, mul(ca, cb)) == hrr_chi(1, ca) + hrr_chi(1, cb)


def test_hrr_chi_tangent():
    # chi(T) = 4*chi(O(1)) - chi(O) = 16 - 1 = 15
    assert hrr_chi(3, chern_of_atom(tangent(0))) == 15


def test_factor_line_known_decompositions():
    assert factor_line(ChowClass([1, 3, 9, 27]), 3) == [(3, ChowClass([1, 0, 9, 0]))]
    assert factor_line(ChowClass([1, 3, 4, 4]), 3) == [(2, ChowClass([1, 1, 2, 0]))]
    assert factor_line(ChowClass([1, 3, 4, 2]), 3) == [(1, ChowClass([1, 2, 2, 0]))]


def test_factor_line_quotient_property():
    # every returned pair must reconstruct the class
    c = ChowClass([1, 3, 6, 12])
    for a, q in factor_line(c, 3):
        assert mul(ChowClass([1, a]), q) == c
        assert q.coeffs[3] == 0


def test_factor_line_validation():
    with pytest.raises(ValueError):
        factor_line(ChowClass([2, 0, 0, 0]), 3)
    with pytest.raises(ValueError):
        factor_line(one(), 1)


def test_trautmann_vetter_identity():
    assert inv(chern_of_atom(tangent(-2))) == ChowClass([1, 2, 2, 0])
