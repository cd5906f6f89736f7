from hypothesis import given, settings
from hypothesis import strategies as st

from knotfloer.laurent import LaurentPolynomial as L
from knotfloer.laurent import NormalizationError

import pytest

coeff_maps = st.dictionaries(
    st.integers(min_value=-5, max_value=5),
    st.integers(min_value=-9, max_value=9),
    max_size=6,
)


@given(coeff_maps)
@settings(max_examples=100, deadline=None)
def test_text_roundtrip(c):
    p = L(c)
    assert L.from_text(p.to_text()) == p


@given(coeff_maps)
@settings(max_examples=100, deadline=None)
def test_json_roundtrip(c):
    p = L(c)
    assert L.from_json(p.to_json()) == p


@given(coeff_maps, coeff_maps)
@settings(max_examples=100, deadline=None)
def test_ring_axioms(c1, c2):
    p, q = L(c1), L(c2)
    assert p + q == q + p
    assert p * q == q * p
    assert (p - q) + q == p
    assert p * L.one() == p


def test_canonical_text():
    assert L({-1: 1, 0: -1, 1: 1}).to_text() == "t^-1 - 1 + t"
    assert L({0: 2, 2: -3}).to_text() == "2 - 3*t^2"
    assert L().to_text() == "0"


def test_normalize_rejects_zero_at_one():
    with pytest.raises(NormalizationError):
        L({0: 1, 1: -2, 2: 1}).normalize_alexander()


def test_normalize_symmetric():
    q, shift, sign = L({0: 1, 1: -1, 2: 1}).normalize_alexander()
    assert q == L({-1: 1, 0: -1, 1: 1})
    assert (shift, sign) == (-1, 1)
    q2, _, s2 = L({0: -1, 1: 1, 2: -1}).normalize_alexander()
    assert q2 == L({-1: 1, 0: -1, 1: 1}) and s2 == -1


def test_normalize_errors():
    with pytest.raises(NormalizationError):
        L({0: 1, 1: 1}).normalize_alexander()  # odd span
    with pytest.raises(NormalizationError):
        L({0: 1, 1: 5, 2: 1}).normalize_alexander()  # value 7 at t=1
