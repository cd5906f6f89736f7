import os
import random

import pytest

from knotfloer import table
from knotfloer.filtered import FilteredComplex
from knotfloer.signature import signature
from knotfloer.surgery import input_from_alternating

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "src", "knotfloer", "fixtures")


def fixture_path(name):
    return os.path.join(FIXTURES, name)


def right_handed(name):
    """Table diagram with nonnegative signature (mirrored if needed)."""
    d = table.lookup(name)
    if signature(d) < 0:
        d = d.mirror()
    return d


@pytest.fixture
def trefoil():
    return table.lookup("3_1")


@pytest.fixture
def figure8():
    return table.lookup("4_1")


def random_filtered_complex(rng, field="F2", pairs=6, singles=2, churn=40):
    """Random filtered complex built from a paired model by filtered base
    changes, so its homology is known by construction."""
    gens = []
    d = {}
    expected = {}
    for i in range(pairs):
        A = rng.randint(-2, 2)
        gr = rng.randint(-2, 2)
        drop = rng.choice([0, 1, 2])
        gens.append(("a%d" % i, A, gr))
        gens.append(("b%d" % i, A - drop, gr - 1))
        if rng.random() < 0.75:
            d[("a%d" % i, "b%d" % i)] = rng.choice([1, 2, 3]) if field == "Q" else 1
        else:
            expected[gr] = expected.get(gr, 0) + 1
            expected[gr - 1] = expected.get(gr - 1, 0) + 1
    for i in range(singles):
        gr = rng.randint(-2, 2)
        gens.append(("s%d" % i, rng.randint(-2, 2), gr))
        expected[gr] = expected.get(gr, 0) + 1
    c = FilteredComplex(gens, d, field)
    ids = [g.id for g in c.generators]
    for _ in range(churn):
        g1, g2 = rng.sample(list(c.generators), 2)
        if g1.gr != g2.gr or g1.A < g2.A:
            continue
        coeff = rng.choice([1, 2, -1]) if field == "Q" else 1
        nd = dict(c.differential)
        add = {}
        for t in ids:
            v = c.d(g2.id, t)
            if v:
                add[(g1.id, t)] = add.get((g1.id, t), 0) + coeff * v
        for s in ids:
            v = c.d(s, g1.id)
            if v:
                add[(s, g2.id)] = add.get((s, g2.id), 0) - coeff * v
        for key, v in add.items():
            nd[key] = nd.get(key, 0) + v
        try:
            c = FilteredComplex([(g.id, g.A, g.gr) for g in c.generators], nd, field)
        except Exception:
            pass
    expected = {g: r for g, r in expected.items() if r}
    return c, expected
