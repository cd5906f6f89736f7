"""Marked partial resolutions of alternating diagrams.

Generators of the twisted-up splitting of an alternating diagram (crossing
c1 distinguished) correspond to marked partial resolutions: every other
crossing carries either a sign or a resolution, marked components cover the
resolved crossings, and the signed Alexander spectrum of the full set equals
the normalized Alexander polynomial.  The generator set is enumerated as the
uncombined expansion of the Fox determinant that drops c1's relator and the
column of the arc passing over c1; the letter dictionary below converts each
monomial choice into its diagram presentation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fox import alexander
from .laurent import LaurentPolynomial


class NotAlternatingError(ValueError):
    pass


class SmallnessError(ValueError):
    pass


class ConsistencyError(RuntimeError):
    """Signed spectrum fails to reproduce the Alexander polynomial."""


TAGS = ("+", "-", "in", "out")


@dataclass(frozen=True)
class MPR:
    """One marked partial resolution.

    assignment[i] is '+', '-', 'in' or 'out' per crossing (None at c1);
    'in'/'out' mean the crossing is resolved with the marked component
    through its incoming/outgoing under-edge.  alexander_exponent and sign
    give the generator's monomial in the normalized spectrum.
    """

    assignment: tuple
    alexander_exponent: int
    sign: int
    marked_components: tuple  # of frozensets of edges

    @property
    def resolved(self):
        return tuple(
            i for i, t in enumerate(self.assignment) if t in ("in", "out")
        )

    def base_assignment(self):
        return tuple(
            None if t is None else {"in": "-", "out": "+"}.get(t, t)
            for t in self.assignment
        )

    def is_base(self):
        return not self.resolved


def _letters(d, c1):
    """Per-crossing letter options: (tag, column arc, exponent delta, sign)."""
    arc_of = d.arc_of_edge()
    dropped = d.over_arc_at(c1)
    rows = []
    for i, x in enumerate(d.crossings):
        if i == c1:
            rows.append(None)
            continue
        oi, _ = d.over_in_out(i)
        o, a, b = arc_of[oi], arc_of[x.a], arc_of[x.c]
        if d.sign(i) > 0:
            opts = [("+", o, 0, 1), ("-", o, 1, -1), ("in", a, 1, 1), ("out", b, 0, -1)]
        else:
            opts = [("+", o, 0, 1), ("-", o, -1, -1), ("in", a, -1, 1), ("out", b, 0, -1)]
        rows.append([opt for opt in opts if opt[1] != dropped])
    return rows, dropped


def enumerate_mprs(d, c1):
    """All marked partial resolutions of (d, c1), with gradings.

    The signed sum of the spectrum is checked against the Alexander
    polynomial of the diagram; a mismatch means the letter dictionary went
    inconsistent and raises ConsistencyError.
    """
    if not d.is_alternating():
        raise NotAlternatingError("MPR enumeration needs an alternating diagram")
    if not 0 <= c1 < d.n:
        raise ValueError("invalid distinguished crossing %r" % (c1,))
    rows, dropped = _letters(d, c1)
    order = [i for i in range(d.n) if i != c1]
    used = {}
    raw = []  # (assignment tags, columns, exponent, sign)
    tags = {}
    cols = {}

    def rec(k, exp, sign):
        if k == len(order):
            seq = [cols[i] for i in order]
            parity = 1 if _inversions(seq) % 2 == 0 else -1
            raw.append((dict(tags), dict(cols), exp, sign * parity))
            return
        i = order[k]
        for tag, col, de, ds in rows[i]:
            if col in used:
                continue
            used[col] = i
            tags[i] = tag
            cols[i] = col
            rec(k + 1, exp + de, sign * ds)
            del used[col]

    rec(0, 0, 1)

    total = LaurentPolynomial()
    for _, _, e, s in raw:
        total = total + LaurentPolynomial({e: s})
    delta = alexander(d)
    try:
        _, shift, flip = total.normalize_alexander()
    except Exception as exc:
        raise ConsistencyError("spectrum does not normalize: %s" % exc)
    check = LaurentPolynomial()
    out = []
    for tags_i, cols_i, e, s in raw:
        ms = _marked_components(d, c1, tags_i, cols_i)
        assignment = tuple(tags_i.get(i) for i in range(d.n))
        out.append(
            MPR(
                assignment=assignment,
                alexander_exponent=e + shift,
                sign=s * flip,
                marked_components=ms,
            )
        )
        check = check + LaurentPolynomial({e + shift: s * flip})
    if check != delta:
        raise ConsistencyError(
            "signed MPR spectrum %s != Alexander polynomial %s"
            % (check.to_text(), delta.to_text())
        )
    return out


def _inversions(seq):
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return inv


def _marked_components(d, c1, tags, cols):
    """Cycles of resolved crossings, as frozensets of diagram edges."""
    resolved = [i for i, t in tags.items() if t in ("in", "out")]
    if not resolved:
        return ()
    row_of_col = {c: i for i, c in cols.items()}
    arc_of = d.arc_of_edge()
    comps = []
    seen = set()
    for start in resolved:
        if start in seen:
            continue
        cyc = []
        cur = start
        while cur not in seen:
            seen.add(cur)
            cyc.append(cur)
            over_arc = d.over_arc_at(cur)
            cur = row_of_col[over_arc]
        edges = []
        for i in cyc:
            x = d.crossings[i]
            edges.append(x.a if tags[i] == "in" else x.c)
        comps.append(frozenset(edges))
    return tuple(sorted(comps, key=sorted))


def mpr_alexander(m, d=None, c1=None):
    """Alexander monomial (exponent, sign) of one MPR."""
    return m.alexander_exponent, m.sign


def base_generators(d, c1):
    """The 2^(n-1) all-sign MPRs."""
    return [m for m in enumerate_mprs(d, c1) if m.is_base()]


def pools(d, c1, mprs=None):
    """Map base assignment -> (base MPR, set of marked components C(y)).

    Components pooled over all MPRs lying over the base generator; the
    pool is checked to be pairwise crossing-disjoint.
    """
    if mprs is None:
        mprs = enumerate_mprs(d, c1)
    groups = {}
    for m in mprs:
        key = m.base_assignment()
        groups.setdefault(key, [None, set(), 0])
        if m.is_base():
            groups[key][0] = m
        groups[key][1].update(m.marked_components)
        groups[key][2] += 1
    for key, (base, comps, count) in groups.items():
        if base is None:
            raise ConsistencyError("an MPR class lacks its base generator")
        crossings_used = set()
        for comp in comps:
            cs = _component_crossings(d, comp)
            if crossings_used & cs:
                raise ConsistencyError("pool components share a crossing")
            crossings_used |= cs
        if count != 2 ** len(comps):
            raise ConsistencyError(
                "class size %d != 2^%d over base %s" % (count, len(comps), key)
            )
    return groups


def marked_component_pool(y, d, c1):
    """The component pool C(y) of a base generator MPR y."""
    groups = pools(d, c1)
    base, comps, _ = groups[y.base_assignment()]
    return set(comps)


def _component_crossings(d, comp):
    out = set()
    for e in comp:
        i, _ = d.arrival(e)
        j, _ = d.departure(e)
        out.add(i)
        out.add(j)
    return out


# -- smallness --------------------------------------------------------------


def component_is_small(d, comp, _cache=None):
    """True when one side of the component contains no crossings.

    The component is a closed curve through its resolved crossings; faces
    are flooded across edges not on the curve, and a side is empty when no
    crossing lies strictly inside it.
    """
    if _cache is not None and comp in _cache:
        return _cache[comp]
    on_curve = _component_crossings(d, comp)
    corner_face = d.face_of_corner()
    nf = len(d.faces())
    parent = list(range(nf))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        parent[find(a)] = find(b)

    for i, x in enumerate(d.crossings):
        for s in range(4):
            e = x.ends()[s]
            if e in comp:
                continue
            # faces flanking the edge-end at slot s: corners s-1 and s
            f1 = corner_face[(i, (s - 1) % 4)]
            f2 = corner_face[(i, s)]
            union(f1, f2)
    sides = {}
    for f in range(nf):
        sides.setdefault(find(f), set()).add(f)
    if len(sides) != 2:
        raise ConsistencyError(
            "component does not split the sphere into two sides (%d)" % len(sides)
        )
    side_list = list(sides.values())
    for side in side_list:
        crossings_inside = 0
        for i in range(d.n):
            if i in on_curve:
                continue
            if corner_face[(i, 0)] in side:
                crossings_inside += 1
        if crossings_inside == 0:
            if _cache is not None:
                _cache[comp] = True
            return True
    if _cache is not None:
        _cache[comp] = False
    return False


@dataclass(frozen=True)
class SmallnessCertificate:
    c1: int
    verdict: bool
    witness: tuple = None  # (MPR, component) when not small


def certify_small(d):
    """Try each crossing as c1; certify with the first all-small choice."""
    if not d.is_alternating():
        raise NotAlternatingError("smallness is defined for alternating diagrams")
    witness = None
    last_c1 = 0
    cache = {}
    for c1 in range(d.n):
        last_c1 = c1
        ok = True
        for m in enumerate_mprs(d, c1):
            for comp in m.marked_components:
                if not component_is_small(d, comp, cache):
                    witness = (m, comp)
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return SmallnessCertificate(c1=c1, verdict=True)
    return SmallnessCertificate(c1=last_c1, verdict=False, witness=witness)


def reduced_ranks(d, certificate=None):
    """Alexander-graded ranks of the reduced complex of a small diagram.

    Survivors are base generators with empty pools; the ranks must agree
    with the unsigned coefficients of the Alexander polynomial.
    """
    if certificate is None:
        certificate = certify_small(d)
    if not certificate.verdict:
        raise SmallnessError("diagram is not certified small")
    c1 = certificate.c1
    mprs = enumerate_mprs(d, c1)
    groups = pools(d, c1, mprs)
    ranks = {}
    for base, comps, _ in groups.values():
        if not comps:
            j = base.alexander_exponent
            ranks[j] = ranks.get(j, 0) + 1
    delta = alexander(d)
    expected = {e: abs(a) for e, a in delta.coeffs().items()}
    if ranks != expected:
        raise ConsistencyError(
            "reduced ranks %s != |Alexander coefficients| %s" % (ranks, expected)
        )
    return ranks
