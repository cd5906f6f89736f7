"""Combinatorial Maslov indices of domains on cellulated surfaces.

A cellulation carries two transverse curve systems (alpha and beta edges)
on a genus-g surface drawn in the plane with g surgery-disk pairs.  The
index of a domain is

    mu(D) = 2 chi(T) + (D . diagonal) + sum of corner multiplicities

where T is the surface obtained by stacking multiplicity-many copies of
each region and gluing maximally along edges, the diagonal term of a
planar-boundary domain is (2g-2) n_inf + writhe(boundary braid) + sum of
surgery-point multiplicities, and the corner table is

    a (convex) -1/2,  b (reflex) +1/2,  degenerate / isolated  0.

The corner values are frozen by the calibration suite (trivial disk 0,
bigon 1, genus-two square 1, whole-surface class adds 2).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass


class CellulationError(ValueError):
    pass


class DomainError(ValueError):
    pass


class UnsupportedBoundaryError(ValueError):
    """Non-planar boundaries (through a tube, or with closed components)
    have no braid writhe in this scope."""


CORNER_VALUES = {
    "a": -0.5,
    "b": 0.5,
    "c": 0.0,
    "d": 0.0,
    "e": 0.0,
    "f": 0.0,
}


@dataclass(frozen=True)
class Edge:
    id: str
    curve: str  # like "a1" or "b2"
    src: str = None  # None for closed curve components
    dst: str = None
    points: tuple = ()  # polyline, including endpoints for open edges

    @property
    def is_alpha(self):
        return self.curve.startswith("a")

    @property
    def closed(self):
        return self.src is None


@dataclass(frozen=True)
class Region:
    id: str
    chi: int
    circuits: tuple  # of tuples of (edge id, +-1)


class HeegaardCellulation:
    def __init__(self, obj):
        self.genus = int(obj["genus"])
        self.vertices = {v["id"]: (float(v["x"]), float(v["y"])) for v in obj["vertices"]}
        self.edges = {}
        for e in obj["edges"]:
            self.edges[e["id"]] = Edge(
                id=e["id"],
                curve=e["curve"],
                src=e.get("from"),
                dst=e.get("to"),
                points=tuple(tuple(p) for p in e.get("points", ())),
            )
        self.regions = {}
        for r in obj["regions"]:
            self.regions[r["id"]] = Region(
                id=r["id"],
                chi=int(r["chi"]),
                circuits=tuple(
                    tuple((step[0], int(step[1])) for step in circuit)
                    for circuit in r["boundary"]
                ),
            )
        self.basepoint_region = obj["basepoint_region"]
        self.surgery_pairs = [
            {
                "plus_region": p["plus_region"],
                "minus_region": p["minus_region"],
                "through_edges": list(p.get("through_edges", ())),
            }
            for p in obj.get("surgery_pairs", ())
        ]
        self.validate()

    @classmethod
    def from_json(cls, text):
        return cls(json.loads(text))

    @classmethod
    def load(cls, path):
        with open(path) as f:
            return cls(json.load(f))

    # -- validation ---------------------------------------------------------

    def validate(self):
        if len(self.surgery_pairs) != self.genus:
            raise CellulationError(
                "genus %d needs %d surgery pairs" % (self.genus, self.genus)
            )
        if self.basepoint_region not in self.regions:
            raise CellulationError("unknown basepoint region")
        # every open edge endpoint exists
        for e in self.edges.values():
            if e.closed:
                if e.dst is not None:
                    raise CellulationError("edge %s is half-closed" % e.id)
                continue
            for v in (e.src, e.dst):
                if v not in self.vertices:
                    raise CellulationError("edge %s touches unknown vertex" % e.id)
        # edge sides: each edge appears exactly twice over all circuits,
        # once per orientation on an oriented surface
        sides = {}
        for r in self.regions.values():
            for circuit in r.circuits:
                for eid, ori in circuit:
                    if eid not in self.edges:
                        raise CellulationError("region references unknown edge %s" % eid)
                    sides.setdefault(eid, []).append((r.id, ori))
        for eid, occ in sides.items():
            if len(occ) != 2:
                raise CellulationError(
                    "edge %s borders %d region slots" % (eid, len(occ))
                )
            if occ[0][1] + occ[1][1] != 0:
                raise CellulationError("edge %s has inconsistent orientations" % eid)
        for eid in self.edges:
            if eid not in sides:
                raise CellulationError("edge %s borders no region" % eid)
        self._sides = sides
        # Euler characteristic (closed curve components count as tori cells:
        # one virtual vertex and one edge, net zero)
        v_count = len(self.vertices)
        e_count = sum(1 for e in self.edges.values() if not e.closed)
        chi = v_count - e_count + sum(r.chi for r in self.regions.values())
        if chi != 2 - 2 * self.genus:
            raise CellulationError(
                "V - E + sum chi = %d != %d" % (chi, 2 - 2 * self.genus)
            )
        # vertex stars: 4 ends alternating between the two curve systems
        self._rotation = {}
        for v in self.vertices:
            ends = self._vertex_ends(v)
            if len(ends) != 4:
                raise CellulationError("vertex %s has %d edge-ends" % (v, len(ends)))
            rot = self._build_rotation(v, ends)
            kinds = [self.edges[eid].is_alpha for eid, _ in rot]
            if kinds in ([True, False, True, False], [False, True, False, True]):
                self._rotation[v] = rot
            else:
                raise CellulationError("alpha/beta edges do not alternate at %s" % v)

    def _vertex_ends(self, v):
        ends = []
        for e in self.edges.values():
            if e.closed:
                continue
            if e.src == v:
                ends.append((e.id, "out"))
            if e.dst == v:
                ends.append((e.id, "in"))
        return ends

    def corners_at(self, v):
        """The four (region, end_in, end_out) corners around vertex v.

        A circuit step (e1, o1) followed by (e2, o2) passing through v
        contributes the corner between the arriving end of e1 and the
        departing end of e2.
        """
        out = []
        for r in self.regions.values():
            for circuit in r.circuits:
                n = len(circuit)
                for i in range(n):
                    e1, o1 = circuit[i]
                    e2, o2 = circuit[(i + 1) % n]
                    edge1, edge2 = self.edges[e1], self.edges[e2]
                    if edge1.closed or edge2.closed:
                        continue
                    head1 = edge1.dst if o1 == 1 else edge1.src
                    tail2 = edge2.src if o2 == 1 else edge2.dst
                    if head1 == v and tail2 == v:
                        end1 = (e1, "in" if o1 == 1 else "out")
                        end2 = (e2, "out" if o2 == 1 else "in")
                        out.append((r.id, end1, end2))
        return out

    def _build_rotation(self, v, ends):
        """Cyclic order of edge-ends from corner adjacency."""
        corners = self.corners_at(v)
        if len(corners) != 4:
            raise CellulationError(
                "vertex %s has %d corners, expected 4" % (v, len(corners))
            )
        nxt = {}
        for _, e1, e2 in corners:
            if e1 in nxt:
                raise CellulationError("corner fan inconsistent at %s" % v)
            nxt[e1] = e2
        rot = [ends[0]]
        while len(rot) < 4:
            cur = rot[-1]
            if cur not in nxt:
                raise CellulationError("corner fan does not close at %s" % v)
            rot.append(nxt[cur])
        if nxt[rot[-1]] != rot[0]:
            raise CellulationError("corner fan does not close at %s" % v)
        return rot

    def quadrants_at(self, v):
        """Regions of the four corners around v, in rotation order."""
        corners = {}
        for rid, e1, e2 in self.corners_at(v):
            corners[e1] = rid
        rot = self._rotation[v]
        return [corners[rot[i]] for i in range(4)]

    def edge_sides(self, eid):
        return self._sides[eid]


# -- domains -----------------------------------------------------------------


@dataclass(frozen=True)
class DomainChain:
    cellulation: HeegaardCellulation
    multiplicity: dict  # region id -> int
    corners: tuple  # vertex ids

    @classmethod
    def from_json_obj(cls, cell, obj):
        return cls(
            cellulation=cell,
            multiplicity={k: int(v) for k, v in obj["multiplicity"].items()},
            corners=tuple(obj.get("corners", ())),
        )

    def mult(self, rid):
        return self.multiplicity.get(rid, 0)

    def boundary_coefficients(self):
        """Net coefficient of the boundary 1-chain on each edge."""
        out = {}
        for r in self.cellulation.regions.values():
            n = self.mult(r.id)
            if not n:
                continue
            for circuit in r.circuits:
                for eid, ori in circuit:
                    out[eid] = out.get(eid, 0) + n * ori
        return {e: c for e, c in out.items() if c}

    def add_surface(self, k=1):
        m = dict(self.multiplicity)
        for rid in self.cellulation.regions:
            m[rid] = m.get(rid, 0) + k
        return DomainChain(self.cellulation, m, self.corners)

    def is_positive(self):
        return all(v >= 0 for v in self.multiplicity.values())


# -- Euler term -----------------------------------------------------------------


def euler_chain(d):
    """chi of the maximally glued cover with the domain's multiplicities.

    For nonnegative chains: stack n_r copies of each region, glue
    min(n_left, n_right) copies along every edge, and count vertex fans.
    Negative chains are shifted by whole copies of the surface, using
    chi(D + Sigma) = chi(D) + 2 - 2g.
    """
    cell = d.cellulation
    mults = {rid: d.mult(rid) for rid in cell.regions}
    low = min(mults.values()) if mults else 0
    if low < 0:
        shifted = d.add_surface(-low)
        return euler_chain(shifted) - (-low) * (2 - 2 * cell.genus)
    total = 0
    for rid, r in cell.regions.items():
        total += mults[rid] * r.chi
    for eid, e in cell.edges.items():
        if e.closed:
            continue  # a stacked circle has chi 0
        (r1, _), (r2, _) = cell.edge_sides(eid)
        total -= max(mults[r1], mults[r2])
    for v in cell.vertices:
        quads = [mults[r] for r in cell.quadrants_at(v)]
        nodes = sum(quads)
        glue = [min(quads[i], quads[(i + 1) % 4]) for i in range(4)]
        cycles = min(glue)
        total += nodes - sum(glue) + cycles
    return total


# -- corners -----------------------------------------------------------------


def classify_corner(d, v):
    """Corner type at a declared corner vertex: a/b/c/d/e/f."""
    cell = d.cellulation
    bc = d.boundary_coefficients()
    rot = cell._rotation[v]
    alpha_live = 0
    beta_live = 0
    for eid, _ in rot:
        c = bc.get(eid, 0)
        if c:
            if abs(c) > 1:
                raise DomainError("boundary coefficient %d on %s" % (c, eid))
            if cell.edges[eid].is_alpha:
                alpha_live += 1
            else:
                beta_live += 1
    quads = [d.mult(r) for r in cell.quadrants_at(v)]
    if alpha_live == 0 and beta_live == 0:
        return "d" if all(q == 0 for q in quads) else "f"
    if alpha_live == 1 and beta_live == 1:
        base = min(quads)
        pattern = sorted(q - base for q in quads)
        if pattern == [0, 0, 0, 1]:
            return "a"
        if pattern == [0, 1, 1, 1]:
            return "b"
        raise DomainError("unclassifiable corner at %s (quadrants %s)" % (v, quads))
    if alpha_live == 2 and beta_live == 2:
        return "c"
    if (alpha_live, beta_live) in ((2, 0), (0, 2)):
        return "e"
    raise DomainError(
        "unclassifiable corner at %s (%d alpha / %d beta boundary ends)"
        % (v, alpha_live, beta_live)
    )


def corner_term(d):
    """Sum of the corner local multiplicities over declared corners."""
    total = 0.0
    seen = set()
    for v in d.corners:
        if v in seen:
            continue
        seen.add(v)
        total += CORNER_VALUES[classify_corner(d, v)]
    # every turning vertex must be declared
    for v in d.cellulation.vertices:
        if v in seen:
            continue
        bc = d.boundary_coefficients()
        rot = d.cellulation._rotation[v]
        live = [eid for eid, _ in rot if bc.get(eid, 0)]
        alive_alpha = sum(1 for e in live if d.cellulation.edges[e].is_alpha)
        alive_beta = len(live) - alive_alpha
        if alive_alpha % 2 == 1 or alive_beta % 2 == 1:
            raise DomainError("boundary turns at undeclared corner %s" % v)
    return total


# -- boundary arcs and the braid ------------------------------------------------


def boundary_arcs(d):
    """Directed arcs of the boundary, one per curve involved.

    Returns (arcs, closed_curves): arcs are dicts with curve, edge list
    (directed), start and end vertices; closed_curves lists boundary
    components without corners.
    """
    cell = d.cellulation
    bc = d.boundary_coefficients()
    for eid, c in bc.items():
        if abs(c) > 1:
            raise DomainError("boundary multiplicity %d on edge %s" % (c, eid))
    corners = set(d.corners)
    by_curve = {}
    for eid, c in bc.items():
        by_curve.setdefault(cell.edges[eid].curve, []).append((eid, c))
    arcs = []
    closed = []
    for curve, steps in sorted(by_curve.items()):
        closed_steps = [s for s in steps if cell.edges[s[0]].closed]
        open_steps = [s for s in steps if not cell.edges[s[0]].closed]
        for eid, c in closed_steps:
            closed.append({"curve": curve, "edges": [(eid, c)]})
        if not open_steps:
            continue
        # chain directed edges head-to-tail
        by_tail = {}
        for eid, c in open_steps:
            e = cell.edges[eid]
            tail = e.src if c == 1 else e.dst
            by_tail.setdefault(tail, []).append((eid, c))
        heads = {}
        for eid, c in open_steps:
            e = cell.edges[eid]
            heads[eid] = e.dst if c == 1 else e.src
        starts = [
            (eid, c)
            for (eid, c) in open_steps
            if (cell.edges[eid].src if c == 1 else cell.edges[eid].dst) in corners
        ]
        used = set()
        chains = []
        for eid, c in starts:
            if eid in used:
                continue
            tail = cell.edges[eid].src if c == 1 else cell.edges[eid].dst
            chain = []
            cur = (eid, c)
            while True:
                chain.append(cur)
                used.add(cur[0])
                head = heads[cur[0]]
                if head in corners:
                    break
                nxts = [x for x in by_tail.get(head, []) if x[0] not in used]
                if len(nxts) != 1:
                    raise DomainError("boundary does not chain into arcs on %s" % curve)
                cur = nxts[0]
            chains.append(
                {
                    "curve": curve,
                    "edges": chain,
                    "start": tail,
                    "end": heads[chain[-1][0]],
                }
            )
        if len(used) != len(open_steps):
            # leftover edges form a cornerless cycle on this curve
            leftover = [s for s in open_steps if s[0] not in used]
            closed.append({"curve": curve, "edges": leftover})
        arcs.extend(chains)
    return arcs, closed


def _polyline_of(cell, eid, direction):
    pts = list(cell.edges[eid].points)
    if not pts:
        e = cell.edges[eid]
        pts = [cell.vertices[e.src], cell.vertices[e.dst]]
    return pts if direction == 1 else pts[::-1]


def _arc_polyline(cell, arc):
    pts = []
    for eid, c in arc["edges"]:
        seg = _polyline_of(cell, eid, c)
        if pts and pts[-1] == seg[0]:
            pts.extend(seg[1:])
        else:
            pts.extend(seg)
    return pts


def _resample(pts, n):
    """n+1 points uniformly by arclength along a polyline."""
    lengths = []
    for k in range(len(pts) - 1):
        dx = pts[k + 1][0] - pts[k][0]
        dy = pts[k + 1][1] - pts[k][1]
        lengths.append(math.hypot(dx, dy))
    total = sum(lengths)
    if total == 0:
        return [pts[0]] * (n + 1)
    out = []
    for i in range(n + 1):
        target = total * i / n
        acc = 0.0
        for k, L in enumerate(lengths):
            if acc + L >= target - 1e-12:
                tt = 0.0 if L == 0 else (target - acc) / L
                x = pts[k][0] + tt * (pts[k + 1][0] - pts[k][0])
                y = pts[k][1] + tt * (pts[k + 1][1] - pts[k][1])
                out.append((x, y))
                break
            acc += L
        else:
            out.append(pts[-1])
    return out


def _braid_strands(d, samples=240):
    """Strand paths (alpha arc then beta arc) sampled on a common grid."""
    cell = d.cellulation
    arcs, closed = boundary_arcs(d)
    if closed:
        raise UnsupportedBoundaryError(
            "boundary has closed components; no braid in the planar scope"
        )
    alphas = [a for a in arcs if cell.edges[a["edges"][0][0]].is_alpha]
    betas = {}
    for a in arcs:
        if not cell.edges[a["edges"][0][0]].is_alpha:
            if a["start"] in betas:
                raise DomainError("two beta arcs start at %s" % a["start"])
            betas[a["start"]] = a
    strands = []
    for a in alphas:
        z = a["end"]
        if z not in betas:
            raise DomainError("alpha arc ends at %s with no beta arc" % z)
        b = betas[z]
        half = samples // 2
        p1 = _resample(_arc_polyline(cell, a), half)
        p2 = _resample(_arc_polyline(cell, b), half)
        strands.append(p1 + p2[1:])
    moving_corners = {a["start"] for a in alphas} | {a["end"] for a in alphas}
    moving_corners |= {b["end"] for b in betas.values()}
    for v in d.corners:
        if v not in moving_corners:
            pt = cell.vertices[v]
            strands.append([pt] * (2 * (samples // 2) + 1))
    return strands


def braid_writhe(d):
    """Writhe of the boundary braid: total swept angle over strand pairs."""
    strands = _braid_strands(d)
    if len(strands) < 2:
        return 0
    total = 0.0
    n = len(strands[0])
    for i in range(len(strands)):
        for j in range(i + 1, len(strands)):
            sweep = 0.0
            prev = None
            for t in range(n):
                dx = strands[i][t][0] - strands[j][t][0]
                dy = strands[i][t][1] - strands[j][t][1]
                r = math.hypot(dx, dy)
                if r < 1e-12:
                    raise DomainError("strands collide; refine the fixture geometry")
                ang = math.atan2(dy, dx)
                if prev is not None:
                    delta = ang - prev
                    while delta > math.pi:
                        delta -= 2 * math.pi
                    while delta < -math.pi:
                        delta += 2 * math.pi
                    sweep += delta
                prev = ang
            total += sweep / math.pi
    rounded = round(total)
    if abs(total - rounded) > 1e-6:
        raise DomainError("braid writhe %.6f is not an integer" % total)
    return int(rounded)


def diagonal_term(d):
    """(2g-2) n_inf + writhe + surgery-point multiplicities, planar scope.

    The writhe is additive over disjoint supports, so it is evaluated per
    support component; a single component with several boundary arcs on one
    curve is outside the planar-arc scope and raises.
    """
    cell = d.cellulation
    bc = d.boundary_coefficients()
    for pair in cell.surgery_pairs:
        for eid in pair["through_edges"]:
            if bc.get(eid, 0):
                raise UnsupportedBoundaryError(
                    "boundary runs through a tube (edge %s); not planar" % eid
                )
    n_inf = d.mult(cell.basepoint_region)
    punctures = 0
    for pair in cell.surgery_pairs:
        punctures += d.mult(pair["plus_region"]) + d.mult(pair["minus_region"])
    writhe = braid_writhe(d) if any(bc.values()) else 0
    return (2 * cell.genus - 2) * n_inf + writhe + punctures


def maslov_index(d):
    """mu(D) = 2 chi(T) + diagonal term + corner term."""
    mu = 2 * euler_chain(d) + diagonal_term(d) + corner_term(d)
    rounded = round(mu)
    if abs(mu - rounded) > 1e-9:
        raise DomainError("Maslov index %.3f is not an integer" % mu)
    return int(rounded)


# -- differentials ------------------------------------------------------------


@dataclass(frozen=True)
class DifferentialVerdict:
    kind: str  # disk_diff | annular_diff | decomposable | unknown
    reason: str = ""
    parts: tuple = ()

    def __str__(self):
        if self.kind == "decomposable":
            return "decomposable(%s)" % ", ".join(p.kind for p in self.parts)
        return self.kind


def _support_components(d):
    """Connected components of the support (cells plus corner vertices)."""
    cell = d.cellulation
    active = {rid for rid in cell.regions if d.mult(rid)}
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        parent.setdefault(a, a)
        parent.setdefault(b, b)
        parent[find(a)] = find(b)

    for rid in active:
        parent.setdefault(rid, rid)
    for eid, e in cell.edges.items():
        (r1, _), (r2, _) = cell.edge_sides(eid)
        if r1 in active and r2 in active:
            union(r1, r2)
    for v in cell.vertices:
        quads = [r for r in cell.quadrants_at(v) if r in active]
        for r in quads[1:]:
            union(quads[0], r)
        if v in d.corners and quads:
            union(("corner", v), quads[0])
    for v in d.corners:
        parent.setdefault(("corner", v), ("corner", v))
    comps = {}
    for x in list(parent):
        comps.setdefault(find(x), set()).add(x)
    return list(comps.values())


def classify_differential(d):
    """disk_diff / annular_diff / decomposable / unknown.

    Positivity is a hard gate: domains with negative multiplicities carry
    no holomorphic representatives.
    """
    if not d.is_positive():
        return DifferentialVerdict(
            "unknown", "negative multiplicity: no holomorphic representatives"
        )
    comps = _support_components(d)
    comps = [c for c in comps if c]
    if len(comps) > 1:
        parts = []
        for comp in comps:
            regions = {x for x in comp if isinstance(x, str)}
            corner_vs = tuple(x[1] for x in comp if isinstance(x, tuple))
            sub = DomainChain(
                d.cellulation,
                {r: d.mult(r) for r in regions},
                corner_vs,
            )
            if regions:
                parts.append(classify_differential(sub))
            else:
                parts.append(DifferentialVerdict("unknown", "isolated points"))
        return DifferentialVerdict("decomposable", parts=tuple(parts))
    if not any(d.multiplicity.values()):
        return DifferentialVerdict("unknown", "empty domain")
    if any(v > 1 for v in d.multiplicity.values()):
        return DifferentialVerdict("unknown", "not an embedded domain")
    chi = euler_chain(d)
    types = {v: classify_corner(d, v) for v in d.corners}
    turning = [v for v, t in types.items() if t in ("a", "b")]
    if chi == 1 and turning and all(types[v] == "a" for v in turning):
        return DifferentialVerdict("disk_diff")
    if chi == 0 and len(turning) == 2 and all(types[v] == "a" for v in turning):
        return DifferentialVerdict("annular_diff")
    return DifferentialVerdict("unknown", "no recognized differential pattern")
