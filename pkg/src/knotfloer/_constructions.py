"""Diagram builders for the built-in knot table and tests.

Internal helpers only: braid closures, rational (2-bridge) tangles,
pretzel/Montesinos sums.  Everything is emitted as a validated KnotDiagram.
Conventions (which diagonal of a twist is the over-strand) are frozen by the
table build's structural checks: positive vectors must produce alternating
diagrams whose Goeritz determinant equals the continued-fraction numerator.
"""

from __future__ import annotations

from .diagrams import KnotDiagram


class _Builder:
    """Accumulates crossings whose ends are symbolic segment ids."""

    def __init__(self):
        self.crossings = []  # (ends_ccw[4], under_diag) with under_diag in {0, 1}
        self._next = 0
        self._parent = {}

    def seg(self):
        s = self._next
        self._next += 1
        self._parent[s] = s
        return s

    def find(self, s):
        while self._parent[s] != s:
            self._parent[s] = self._parent[self._parent[s]]
            s = self._parent[s]
        return s

    def join(self, s1, s2):
        r1, r2 = self.find(s1), self.find(s2)
        if r1 == r2:
            raise ValueError("joining a segment to itself closes a loose loop")
        self._parent[r1] = r2

    def add_crossing(self, ends_ccw, under_diag):
        self.crossings.append((tuple(ends_ccw), under_diag))

    # -- finishing ---------------------------------------------------------

    def finish(self, name=""):
        """Resolve segments, traverse the knot, and emit a PD code."""
        slots = {}
        resolved = []
        for ci, (ends, ud) in enumerate(self.crossings):
            ends = tuple(self.find(e) for e in ends)
            resolved.append((ends, ud))
            for s, e in enumerate(ends):
                slots.setdefault(e, []).append((ci, s))
        for e, occ in slots.items():
            if len(occ) != 2:
                raise ValueError("segment %d has %d ends" % (e, len(occ)))
        # traverse the knot
        n = len(resolved)
        start = resolved[0][0][0]
        order = []  # segments in traversal order
        arrival_slot = {}  # segment -> (crossing, slot) where it arrives
        cur = start
        cur_occ = slots[start][0]
        for _ in range(2 * n):
            order.append(cur)
            ci, s = cur_occ
            arrival_slot[cur] = (ci, s)
            nxt_slot = (s + 2) % 4
            nxt = resolved[ci][0][nxt_slot]
            a, b = slots[nxt]
            cur_occ = b if a == (ci, nxt_slot) else a
            cur = nxt
        if len(set(order)) != 2 * n:
            raise ValueError("closure is not a single knot component")
        label = {seg: k + 1 for k, seg in enumerate(order)}
        tuples = []
        for ci, (ends, ud) in enumerate(resolved):
            # the under-strand occupies ends (0,2) or (1,3); its incoming end
            # is the one that arrives at this crossing
            pair = (0, 2) if ud == 0 else (1, 3)
            a_slot = None
            for s in pair:
                if arrival_slot[ends[s]] == (ci, s):
                    a_slot = s
                    break
            if a_slot is None:
                raise ValueError("crossing %d has no incoming under-strand" % ci)
            t = tuple(label[ends[(a_slot + k) % 4]] for k in range(4))
            tuples.append(t)
        return KnotDiagram.from_tuples(tuples, name)


# -- braids -------------------------------------------------------------------


def braid_closure(word, strands, name=""):
    """Closure of a braid word (list of nonzero ints, +-i for sigma_i^+-)."""
    b = _Builder()
    top = [b.seg() for _ in range(strands)]
    cur = list(top)
    for letter in word:
        i = abs(letter) - 1
        if not 0 <= i < strands - 1:
            raise ValueError("letter %d out of range" % letter)
        u, v = cur[i], cur[i + 1]  # in-left (NW), in-right (NE)
        w, x = b.seg(), b.seg()  # out-left (SW), out-right (SE)
        # ends ccw starting at NE: (NE, NW, SW, SE)
        if letter > 0:
            # left-to-right strand (NW -> SE) passes over; under = NE -> SW
            b.add_crossing((v, u, w, x), 0)
        else:
            b.add_crossing((v, u, w, x), 1)
        cur[i], cur[i + 1] = w, x
    for p in range(strands):
        b.join(cur[p], top[p])
    return b.finish(name)


def torus_2n(n, name=""):
    """The (2, n) torus knot as the closure of sigma_1^n (n odd)."""
    if n % 2 == 0:
        raise ValueError("(2,n) torus closure is a knot only for odd n")
    return braid_closure([1] * n, 2, name)


# -- rational tangles ----------------------------------------------------------


class _Tangle:
    """Open tangle with boundary segments nw, ne, sw, se inside a builder."""

    def __init__(self, b, nw, ne, sw, se):
        self.b = b
        self.nw, self.ne, self.sw, self.se = nw, ne, sw, se


def _zero_tangle(b):
    top = b.seg()
    bot = b.seg()
    return _Tangle(b, top, top, bot, bot)


def _infinity_tangle(b):
    left = b.seg()
    right = b.seg()
    return _Tangle(b, left, right, left, right)


def _crossing_tangle(b, sign, orient="h"):
    """A single-crossing tangle; sign picks which diagonal goes over."""
    nw, ne, sw, se = b.seg(), b.seg(), b.seg(), b.seg()
    # ends ccw starting at SW: (SW, SE, NE, NW); diagonals: (SW-NE) = pair 0,
    # (SE-NW) = pair 1
    under = 0 if sign > 0 else 1
    b.add_crossing((sw, se, ne, nw), under)
    return _Tangle(b, nw, ne, sw, se)


def _twist_east(t, k):
    """Append |k| horizontal twists of handedness sign(k) on the east side."""
    b = t.b
    for _ in range(abs(k)):
        c = _crossing_tangle(b, 1 if k > 0 else -1)
        b.join(t.ne, c.nw)
        b.join(t.se, c.sw)
        t = _Tangle(b, t.nw, c.ne, t.sw, c.se)
    return t


def _twist_south(t, k):
    """Append |k| vertical twists of handedness sign(k) at the bottom."""
    b = t.b
    for _ in range(abs(k)):
        c = _crossing_tangle(b, 1 if k > 0 else -1)
        b.join(t.sw, c.nw)
        b.join(t.se, c.ne)
        t = _Tangle(b, t.nw, t.ne, c.sw, c.se)
    return t


def _numerator_closure(t, name=""):
    b = t.b
    b.join(t.nw, t.ne)
    b.join(t.sw, t.se)
    return b.finish(name)


def rational_tangle(b, vector, esign=1, ssign=1):
    """Standard alternating rational tangle of [a1; a2, ..., ak].

    a1 is the outermost (horizontal, east) twist block; blocks alternate
    east/south going inward.  The innermost block acts on the zero tangle
    when it is horizontal and on the infinity tangle when vertical, so the
    tangle fraction is the continued fraction a1 + 1/(a2 + 1/(...)).
    Vertical blocks carry the opposite handedness so that all-positive
    vectors come out alternating.
    """
    k = len(vector)
    t = _zero_tangle(b) if k % 2 == 1 else _infinity_tangle(b)
    for j in range(k, 0, -1):  # innermost block first
        a = vector[j - 1]
        if j % 2 == 1:
            t = _twist_east(t, esign * a)
        else:
            t = _twist_south(t, ssign * a)
    return t


def rational_knot(vector, name=""):
    b = _Builder()
    t = rational_tangle(b, list(vector))
    return _numerator_closure(t, name)


def continued_fraction(vector):
    """numerator/denominator of [a1; a2, ..., ak] = a1 + 1/(a2 + ...)."""
    from fractions import Fraction

    val = Fraction(vector[-1])
    for a in reversed(vector[:-1]):
        val = a + 1 / val
    return val.numerator, val.denominator


def _vertical_rational_tangle(b, vector, esign=1, ssign=1):
    """Rational tangle rotated 90 degrees, for Montesinos/pretzel columns.

    The outermost block twists south; blocks alternate south/east inward.
    """
    k = len(vector)
    t = _infinity_tangle(b) if k % 2 == 1 else _zero_tangle(b)
    for j in range(k, 0, -1):
        a = vector[j - 1]
        if j % 2 == 1:
            t = _twist_south(t, ssign * a)
        else:
            t = _twist_east(t, esign * a)
    return t


def montesinos_knot(vectors, name="", extra_twists=0):
    """Horizontal join of vertical rational tangles, numerator closed.

    montesinos_knot([[p], [q], [r]]) is the (p, q, r) pretzel;
    extra_twists appends that many horizontal twists before closing.
    """
    b = _Builder()
    total = None
    for vec in vectors:
        t = _vertical_rational_tangle(b, list(vec))
        if total is None:
            total = t
        else:
            b.join(total.ne, t.nw)
            b.join(total.se, t.sw)
            total = _Tangle(b, total.nw, t.ne, total.sw, t.se)
    if extra_twists:
        total = _twist_east(total, extra_twists)
    return _numerator_closure(total, name)


def pretzel_knot(ps, name=""):
    return montesinos_knot([[p] for p in ps], name)
