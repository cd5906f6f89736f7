from hypothesis import given, settings
from hypothesis import strategies as st

from knotfloer import table
from knotfloer.fox import (
    FormalSum,
    abelianize,
    alexander,
    fox_derivative,
    free_reduce,
    generator_spectrum,
    wirtinger,
    word_mul,
)
from knotfloer.laurent import LaurentPolynomial as L


def test_fox_axioms():
    assert dict(fox_derivative(((0, 1),), 0)) == {(): 1}
    assert dict(fox_derivative(((0, -1),), 0)) == {((0, -1),): -1}


def test_fox_example_prefixes():
    w = ((0, 1), (1, 1), (0, -1), (2, -1))
    d = fox_derivative(w, 0)
    assert dict(d) == {(): 1, ((0, 1), (1, 1), (0, -1)): -1}


letters = st.tuples(st.integers(min_value=0, max_value=3), st.sampled_from([1, -1]))
words = st.lists(letters, max_size=8).map(tuple)


@given(words, words, st.integers(min_value=0, max_value=3))
@settings(max_examples=150, deadline=None)
def test_fox_product_rule(u, v, i):
    lhs = fox_derivative(free_reduce(u + v), i)
    rhs = fox_derivative(u, i) + fox_derivative(v, i).left_mul(u)
    assert abelianize(lhs) == abelianize(rhs)


def test_abelianize():
    assert abelianize(((0, 1), (1, 1), (0, -1))) == L.t(1)
    s = FormalSum({(): 1}).add(((0, 1), (1, 1), (0, -1)), -1)
    assert abelianize(s) == L.one() - L.t(1)
    assert abelianize(()) == L.one()


def test_wirtinger_shape(trefoil, figure8):
    p = wirtinger(trefoil)
    assert p.g == 3 and len(p.relators) == 2
    p.validate_wirtinger_shape()
    p8 = wirtinger(figure8)
    assert p8.g == 4 and len(p8.relators) == 3
    p8.validate_wirtinger_shape()


def test_alexander_values(trefoil, figure8):
    assert alexander(trefoil).to_text() == "t^-1 - 1 + t"
    assert sorted(alexander(figure8).coeffs().items()) == [(-1, -1), (0, 3), (1, -1)]


def test_alexander_normalized_everywhere():
    for name in table.names():
        delta = alexander(table.lookup(name))
        assert delta(1) == 1
        assert delta == delta.reverse()


def test_spectrum_signed_sum(trefoil, figure8):
    for d in (trefoil, figure8):
        spec, delta = generator_spectrum(wirtinger(d))
        total = L()
        for e, s in spec:
            total = total + L({e: s})
        assert total == delta
    spec8, _ = generator_spectrum(wirtinger(figure8))
    assert len(spec8) >= 5


def test_two_generator_trefoil_spectrum():
    # presentation <x1, x2 | x1 x2 x1 x2^-1 x1^-1 x2^-1> after eliminating
    # the third Wirtinger generator
    from knotfloer.fox import Presentation

    rel = ((0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1))
    p = Presentation(2, (rel,))
    spec, delta = generator_spectrum(p)
    assert sorted(spec) == [(-1, 1), (0, -1), (1, 1)]
    assert delta.to_text() == "t^-1 - 1 + t"


def test_alexander_multiplicative(trefoil, figure8):
    s = trefoil.connected_sum(figure8)
    assert alexander(s) == alexander(trefoil) * alexander(figure8)


def test_spectrum_term_cap():
    import pytest

    from knotfloer.fox import SpectrumResourceError

    d = table.lookup("8_12")
    with pytest.raises(SpectrumResourceError):
        generator_spectrum(wirtinger(d), term_cap=3)
