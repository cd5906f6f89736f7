import json
import random

import pytest

from conftest import fixture_path

from knotfloer.maslov import (
    CellulationError,
    DomainChain,
    HeegaardCellulation,
    UnsupportedBoundaryError,
    boundary_arcs,
    braid_writhe,
    classify_differential,
    corner_term,
    diagonal_term,
    euler_chain,
    maslov_index,
)


def load(name):
    return HeegaardCellulation.load(fixture_path(name))


@pytest.fixture(scope="module")
def wedge1():
    return load("genus1_wedge.json")


@pytest.fixture(scope="module")
def bigon_cell():
    return load("genus1_bigon.json")


@pytest.fixture(scope="module")
def square_cell():
    return load("genus2_square.json")


def square_domain(cell):
    sq = next(
        rid
        for rid, r in cell.regions.items()
        if {e for c in r.circuits for e, _ in c} == {"a1m", "b2w", "a2m", "b1e"}
    )
    return DomainChain(cell, {sq: 1}, ("w", "p", "q", "r"))


def test_trivial_disk(wedge1):
    d = DomainChain(wedge1, {}, ("v1",))
    assert euler_chain(d) == 0
    assert corner_term(d) == 0
    assert maslov_index(d) == 0


def test_whole_surface_class(wedge1):
    e = DomainChain(wedge1, {"R": 1}, ())
    assert diagonal_term(e) == 2  # 4g - 2 at genus 1
    theta_e = DomainChain(wedge1, {"R": 1}, ("v1",))
    assert maslov_index(theta_e) == 2


@pytest.mark.parametrize("name,genus", [
    ("genus1_wedge.json", 1),
    ("genus2_wedge.json", 2),
    ("genus3_wedge.json", 3),
])
def test_e_class_diagonal(name, genus):
    cell = load(name)
    e = DomainChain(cell, {"R": 1}, ())
    assert diagonal_term(e) == 4 * genus - 2


def test_bigon(bigon_cell):
    big = DomainChain(bigon_cell, {"U": 1}, ("x1", "x2"))
    assert euler_chain(big) == 1
    assert diagonal_term(big) == 0
    assert corner_term(big) == -1
    assert maslov_index(big) == 1
    assert classify_differential(big).kind == "disk_diff"


def test_square(square_cell):
    dom = square_domain(square_cell)
    assert euler_chain(dom) == 1
    assert braid_writhe(dom) == 1
    assert diagonal_term(dom) == 1
    assert corner_term(dom) == -2
    assert maslov_index(dom) == 1
    assert classify_differential(dom).kind == "disk_diff"


def test_square_fixture_e_class(square_cell):
    e = DomainChain(square_cell, {r: 1 for r in square_cell.regions}, ())
    assert diagonal_term(e) == 6


def test_annular_pattern():
    cell = load("genus2_annular.json")
    d = DomainChain(cell, {"R2": 1}, ("yp", "ym"))
    assert euler_chain(d) == 0
    assert classify_differential(d).kind == "annular_diff"
    # the boundary has a closed component, so there is no planar braid
    arcs, closed = boundary_arcs(d)
    assert closed
    with pytest.raises(UnsupportedBoundaryError):
        diagonal_term(d)


def _primitives():
    prims = []
    cb = load("genus1_bigon.json")
    prims.append(DomainChain(cb, {"U": 1}, ("x1", "x2")))
    prims.append(DomainChain(cb, {"L": 1}, ("x1", "x2")))
    cs = load("genus2_square.json")
    prims.append(square_domain(cs))
    ct = load("genus1_two_bigons.json")
    prims.append(DomainChain(ct, {"U1": 1}, ("x1", "x2")))
    prims.append(DomainChain(ct, {"U2": 1}, ("x3", "x4")))
    prims.append(DomainChain(ct, {"U1": 1, "U2": 1}, ("x1", "x2", "x3", "x4")))
    prims.append(DomainChain(load("genus1_wedge.json"), {}, ("v1",)))
    return prims


def test_add_surface_shifts_by_two():
    rng = random.Random(9)
    prims = _primitives()
    for _ in range(50):
        d = rng.choice(prims)
        k = rng.randint(0, 3)
        assert maslov_index(d.add_surface(k)) == maslov_index(d) + 2 * k


def test_disjoint_union_additivity():
    ct = load("genus1_two_bigons.json")
    b1 = DomainChain(ct, {"U1": 1}, ("x1", "x2"))
    b2 = DomainChain(ct, {"U2": 1}, ("x3", "x4"))
    both = DomainChain(ct, {"U1": 1, "U2": 1}, ("x1", "x2", "x3", "x4"))
    rng = random.Random(4)
    for _ in range(50):
        k1 = rng.randint(0, 2)
        assert maslov_index(both.add_surface(k1)) == maslov_index(b1) + maslov_index(
            b2
        ) + 2 * k1
    assert diagonal_term(both) == diagonal_term(b1) + diagonal_term(b2)
    verdict = classify_differential(both)
    assert verdict.kind == "decomposable"
    assert [p.kind for p in verdict.parts] == ["disk_diff", "disk_diff"]


def test_negative_multiplicity_gate(bigon_cell):
    neg = DomainChain(bigon_cell, {"U": -1}, ("x1", "x2"))
    assert classify_differential(neg).kind == "unknown"
    assert maslov_index(neg) == -1  # via the +Sigma shift


def test_parity_rule(bigon_cell, square_cell):
    # mu is odd exactly when the two generators have opposite intersection
    # signs; a generator's sign is the product of its local crossing signs
    # times the parity of its alpha-to-beta matching
    import math

    def local_sign(cell, v):
        dirs = {}
        for e in cell.edges.values():
            if e.closed:
                continue
            pts = e.points
            if e.src == v:
                ang = math.atan2(pts[1][1] - pts[0][1], pts[1][0] - pts[0][0])
                dirs[("a" if e.is_alpha else "b", e.curve)] = ang
        kinds = {}
        for (k, curve), ang in dirs.items():
            kinds[k] = (curve, ang)
        if "a" not in kinds or "b" not in kinds:
            # use incoming directions for curves with no outgoing end here
            for e in cell.edges.values():
                if e.closed or e.dst != v:
                    continue
                pts = e.points
                ang = math.atan2(
                    pts[-1][1] - pts[-2][1], pts[-1][0] - pts[-2][0]
                )
                kinds.setdefault("a" if e.is_alpha else "b", (e.curve, ang))
        (ca, aa), (cb, ab) = kinds["a"], kinds["b"]
        return (1 if math.sin(ab - aa) > 0 else -1), ca, cb

    def generator_sign(cell, corners):
        total = 1
        matching = []
        for v in corners:
            s, ca, cb = local_sign(cell, v)
            total *= s
            matching.append((ca, cb))
        alphas = sorted(m[0] for m in matching)
        betas = [m[1] for m in sorted(matching)]
        perm = [sorted(m[1] for m in matching).index(b) for b in betas]
        inversions = sum(
            1
            for i in range(len(perm))
            for j in range(i + 1, len(perm))
            if perm[i] > perm[j]
        )
        return total * (-1) ** inversions

    big = DomainChain(bigon_cell, {"U": 1}, ("x1", "x2"))
    s = generator_sign(bigon_cell, ["x1"]) * generator_sign(bigon_cell, ["x2"])
    assert (-1) ** maslov_index(big) == s
    dom = square_domain(square_cell)
    s_y = generator_sign(square_cell, ["w", "q"])
    s_z = generator_sign(square_cell, ["p", "r"])
    assert (-1) ** maslov_index(dom) == s_y * s_z


def test_multiplicity_two_rejected_as_differential(bigon_cell):
    d = DomainChain(bigon_cell, {"U": 2}, ("x1", "x2"))
    assert classify_differential(d).kind == "unknown"


def test_cellulation_validation_catches_bad_euler():
    obj = json.load(open(fixture_path("genus1_wedge.json")))
    obj["genus"] = 2
    with pytest.raises(CellulationError):
        HeegaardCellulation(obj)
