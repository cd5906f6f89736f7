from knotfloer import table
from knotfloer._constructions import braid_closure, torus_2n
from knotfloer.fox import alexander
from knotfloer.signature import determinant, signature


def test_calibration_torus_knots():
    assert signature(torus_2n(3)) == 2
    assert signature(torus_2n(5)) == 4
    assert signature(torus_2n(7)) == 6
    assert signature(braid_closure([1, 2] * 4, 3)) == 6  # s = genus = 3


def test_unknot_and_figure8():
    from knotfloer.diagrams import parse_pd

    assert signature(parse_pd("X(1,2,2,3) X(3,4,4,1)")) == 0
    assert signature(table.lookup("4_1")) == 0


def test_signature_even_and_mirror():
    for name in table.names()[:20]:
        d = table.lookup(name)
        s = signature(d)
        assert s % 2 == 0
        assert signature(d.mirror()) == -s


def test_signature_additive(trefoil, figure8):
    assert signature(trefoil.connected_sum(trefoil)) == 2 * signature(trefoil)
    assert signature(trefoil.connected_sum(trefoil.mirror())) == 0


def test_determinant_matches_alexander_at_minus_one():
    for name in table.names():
        d = table.lookup(name)
        assert determinant(d) == abs(alexander(d)(-1))
