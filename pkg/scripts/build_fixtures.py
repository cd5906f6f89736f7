#!/usr/bin/env python3
"""Regenerate the cellulation fixtures shipped in src/knotfloer/fixtures/.

Each fixture is a planar drawing of a cellulated surface: vertices with
coordinates, curve edges with polylines (through-tube edges jump between
the surgery disks and are listed in through_edges), regions by explicit
boundary circuits, and the surgery-pair data for the planar reduction.
"""

import json
import math
import os
import sys

OUT = os.path.join(os.path.dirname(__file__), "..", "src", "knotfloer", "fixtures")

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))


def arc(cx, cy, r, a0, a1, steps=24):
    """Polyline along a circle from angle a0 to a1 (radians, ccw when a1>a0)."""
    pts = []
    for i in range(steps + 1):
        t = a0 + (a1 - a0) * i / steps
        pts.append([round(cx + r * math.cos(t), 6), round(cy + r * math.sin(t), 6)])
    return pts


def wedge_fixture(genus):
    """genus one-vertex handles side by side; one region."""
    vertices = []
    edges = []
    circuits = []
    pairs = []
    for i in range(genus):
        x0 = 8 * i
        v = "v%d" % (i + 1)
        vertices.append({"id": v, "x": x0 + 1.5, "y": 0})
        # alpha: from v into D+ (x0+3, 0), out of D- (x0-3, 0), back to v
        edges.append(
            {
                "id": "a%d" % (i + 1),
                "curve": "a%d" % (i + 1),
                "from": v,
                "to": v,
                "points": [[x0 + 1.5, 0], [x0 + 2.0, 0], [x0 - 2.0, 0], [x0 + 1.5, 0]],
            }
        )
        # beta: circle of radius 1.5 around D+ center (x0+3, 0), ccw from v
        edges.append(
            {
                "id": "b%d" % (i + 1),
                "curve": "b%d" % (i + 1),
                "from": v,
                "to": v,
                "points": arc(x0 + 3, 0, 1.5, math.pi, 3 * math.pi),
            }
        )
        circuits.append(
            [["a%d" % (i + 1), 1], ["b%d" % (i + 1), 1], ["a%d" % (i + 1), -1], ["b%d" % (i + 1), -1]]
        )
        pairs.append(
            {
                "plus_region": "R",
                "minus_region": "R",
                "through_edges": ["a%d" % (i + 1)],
            }
        )
    chi = (2 - 2 * genus) - genus + 2 * genus
    return {
        "genus": genus,
        "vertices": vertices,
        "edges": edges,
        "regions": [{"id": "R", "chi": chi, "boundary": circuits}],
        "basepoint_region": "R",
        "surgery_pairs": pairs,
    }


def bigon_fixture():
    """Genus 1: alpha axis through the tube, beta circle crossing it twice."""
    return {
        "genus": 1,
        "vertices": [
            {"id": "x1", "x": -1, "y": 0},
            {"id": "x2", "x": 1, "y": 0},
        ],
        "edges": [
            {"id": "a_mid", "curve": "a1", "from": "x1", "to": "x2",
             "points": [[-1, 0], [1, 0]]},
            {"id": "a_out", "curve": "a1", "from": "x2", "to": "x1",
             "points": [[1, 0], [3, 0], [-3, 0], [-1, 0]]},
            {"id": "b_up", "curve": "b1", "from": "x2", "to": "x1",
             "points": arc(0, 0, 1, 0, math.pi)},
            {"id": "b_low", "curve": "b1", "from": "x1", "to": "x2",
             "points": arc(0, 0, 1, math.pi, 2 * math.pi)},
        ],
        "regions": [
            {"id": "U", "chi": 1, "boundary": [[["a_mid", 1], ["b_up", 1]]]},
            {"id": "L", "chi": 1, "boundary": [[["b_low", 1], ["a_mid", -1]]]},
            {"id": "O", "chi": 0, "boundary": [
                [["b_up", -1], ["a_out", 1]],
                [["b_low", -1], ["a_out", -1]],
            ]},
        ],
        "basepoint_region": "O",
        "surgery_pairs": [
            {"plus_region": "O", "minus_region": "O", "through_edges": ["a_out"]}
        ],
    }


def two_bigons_fixture():
    """Genus 1 with two disjoint bigons (two small beta circles)."""
    return {
        "genus": 1,
        "vertices": [
            {"id": "x1", "x": -3, "y": 0},
            {"id": "x2", "x": -2, "y": 0},
            {"id": "x3", "x": 2, "y": 0},
            {"id": "x4", "x": 3, "y": 0},
        ],
        "edges": [
            {"id": "a1", "curve": "a1", "from": "x1", "to": "x2",
             "points": [[-3, 0], [-2, 0]]},
            {"id": "a2", "curve": "a1", "from": "x2", "to": "x3",
             "points": [[-2, 0], [2, 0]]},
            {"id": "a3", "curve": "a1", "from": "x3", "to": "x4",
             "points": [[2, 0], [3, 0]]},
            {"id": "a4", "curve": "a1", "from": "x4", "to": "x1",
             "points": [[3, 0], [5, 0], [-5, 0], [-3, 0]]},
            {"id": "b1u", "curve": "b1", "from": "x2", "to": "x1",
             "points": arc(-2.5, 0, 0.5, 0, math.pi)},
            {"id": "b1l", "curve": "b1", "from": "x1", "to": "x2",
             "points": arc(-2.5, 0, 0.5, math.pi, 2 * math.pi)},
            {"id": "b2u", "curve": "b2", "from": "x4", "to": "x3",
             "points": arc(2.5, 0, 0.5, 0, math.pi)},
            {"id": "b2l", "curve": "b2", "from": "x3", "to": "x4",
             "points": arc(2.5, 0, 0.5, math.pi, 2 * math.pi)},
        ],
        "regions": [
            {"id": "U1", "chi": 1, "boundary": [[["a1", 1], ["b1u", 1]]]},
            {"id": "L1", "chi": 1, "boundary": [[["b1l", 1], ["a1", -1]]]},
            {"id": "U2", "chi": 1, "boundary": [[["a3", 1], ["b2u", 1]]]},
            {"id": "L2", "chi": 1, "boundary": [[["b2l", 1], ["a3", -1]]]},
            {"id": "O", "chi": 0, "boundary": [
                [["b1u", -1], ["a2", 1], ["b2u", -1], ["a4", 1]],
                [["b1l", -1], ["a4", -1], ["b2l", -1], ["a2", -1]],
            ]},
        ],
        "basepoint_region": "O",
        "surgery_pairs": [
            {"plus_region": "O", "minus_region": "O", "through_edges": ["a4"]}
        ],
    }


def planar_faces(vertices, edges):
    """Face circuits of a planar arrangement from edge geometry.

    vertices: id -> (x, y); edges: list of dicts with id/from/to/points.
    Returns a list of circuits, each a list of (edge id, orientation).
    The walk keeps the face on the left of each directed edge.
    """
    darts = {}  # (edge, +-1) -> (tail vertex, head vertex, out angle, in angle)
    at_vertex = {}
    for e in edges:
        pts = e["points"]
        a0 = math.atan2(pts[1][1] - pts[0][1], pts[1][0] - pts[0][0])
        a1_ = math.atan2(pts[-2][1] - pts[-1][1], pts[-2][0] - pts[-1][0])
        darts[(e["id"], 1)] = (e["from"], e["to"], a0, a1_)
        darts[(e["id"], -1)] = (e["to"], e["from"], a1_, a0)
        at_vertex.setdefault(e["from"], []).append(((e["id"], 1), a0))
        at_vertex.setdefault(e["to"], []).append(((e["id"], -1), a1_))
    rotation = {}
    for v, outs in at_vertex.items():
        rotation[v] = [d for d, _ in sorted(outs, key=lambda t: t[1])]
    faces = []
    seen = set()
    for start in darts:
        if start in seen:
            continue
        circuit = []
        cur = start
        while cur not in seen:
            seen.add(cur)
            circuit.append(cur)
            eid, ori = cur
            head = darts[cur][1]
            in_ang = darts[cur][3]
            rot = rotation[head]
            # reversed dart sits at angle in_ang; take next clockwise
            idx = rot.index((eid, -ori))
            cur = rot[(idx - 1) % len(rot)]
        faces.append(circuit)
    return faces


def _face_area(face, edges_by_id):
    pts = []
    for eid, ori in face:
        seg = edges_by_id[eid]["points"]
        seg = seg if ori == 1 else seg[::-1]
        pts.extend(seg[:-1])
    area = 0.0
    for i in range(len(pts)):
        x1, y1 = pts[i]
        x2, y2 = pts[(i + 1) % len(pts)]
        area += x1 * y2 - x2 * y1
    return area / 2


def arrangement_fixture(vertices, edges, genus, handle_region_picker, name_prefix="F"):
    """Planar curve arrangement -> cellulation; handles are added to the
    region chosen by handle_region_picker (applied to face index data)."""
    faces = planar_faces(vertices, edges)
    edges_by_id = {e["id"]: e for e in edges}
    areas = [_face_area(f, edges_by_id) for f in faces]
    outer = min(range(len(faces)), key=lambda i: areas[i])
    regions = []
    for i, f in enumerate(faces):
        regions.append({
            "id": "%s%d" % (name_prefix, i),
            "chi": 1,
            "boundary": [[[eid, ori] for eid, ori in f]],
        })
    outer_id = regions[outer]["id"]
    target = handle_region_picker(faces, areas, outer, regions)
    for r in regions:
        if r["id"] == target:
            r["chi"] -= 2 * genus
    return {
        "genus": genus,
        "vertices": [{"id": k, "x": v[0], "y": v[1]} for k, v in vertices.items()],
        "edges": edges,
        "regions": regions,
        "basepoint_region": outer_id,
        "surgery_pairs": [
            {"plus_region": target, "minus_region": target, "through_edges": []}
            for _ in range(genus)
        ],
    }, outer_id


def square_fixture():
    """Genus 2: two circles crossing two lines; the square domain sits in
    the middle.  Handles live in the outer region away from all curves."""
    cx1, cy1, r1 = -0.6, 0.5, math.hypot(0.6, 0.5)
    cx2, cy2, r2 = 1.6, 0.5, math.hypot(0.6, 0.5)
    vertices = {
        "w": (0, 0), "p": (1, 0), "q": (1, 1), "r": (0, 1),
        "w2": (-1.2, 0), "r2": (-1.2, 1), "p2": (2.2, 0), "q2": (2.2, 1),
    }

    def circ_angle(cx, cy, x, y):
        return math.atan2(y - cy, x - cx)

    def circ_arc(cx, cy, r, p_from, p_to, ccw=True):
        a0 = circ_angle(cx, cy, *p_from)
        a1_ = circ_angle(cx, cy, *p_to)
        if ccw and a1_ <= a0:
            a1_ += 2 * math.pi
        if not ccw and a1_ >= a0:
            a1_ -= 2 * math.pi
        return arc(cx, cy, r, a0, a1_)

    V = vertices
    edges = [
        # alpha1 along y=0: w -> p -> p2 -> (detour south) -> w2 -> w
        {"id": "a1m", "curve": "a1", "from": "w", "to": "p", "points": [[0, 0], [1, 0]]},
        {"id": "a1e", "curve": "a1", "from": "p", "to": "p2", "points": [[1, 0], [2.2, 0]]},
        {"id": "a1d", "curve": "a1", "from": "p2", "to": "w2",
         "points": [[2.2, 0], [3.4, 0], [3.4, -1.6], [-2.4, -1.6], [-2.4, 0], [-1.2, 0]]},
        {"id": "a1w", "curve": "a1", "from": "w2", "to": "w", "points": [[-1.2, 0], [0, 0]]},
        # alpha2 along y=1: r2 -> r -> q -> q2 -> (detour north) -> r2
        {"id": "a2w", "curve": "a2", "from": "r2", "to": "r", "points": [[-1.2, 1], [0, 1]]},
        {"id": "a2m", "curve": "a2", "from": "r", "to": "q", "points": [[0, 1], [1, 1]]},
        {"id": "a2e", "curve": "a2", "from": "q", "to": "q2", "points": [[1, 1], [2.2, 1]]},
        {"id": "a2d", "curve": "a2", "from": "q2", "to": "r2",
         "points": [[2.2, 1], [3.4, 1], [3.4, 2.6], [-2.4, 2.6], [-2.4, 1], [-1.2, 1]]},
        # beta1 circle through w, r, r2, w2 (ccw)
        {"id": "b1e", "curve": "b1", "from": "w", "to": "r",
         "points": circ_arc(cx1, cy1, r1, V["w"], V["r"])},
        {"id": "b1n", "curve": "b1", "from": "r", "to": "r2",
         "points": circ_arc(cx1, cy1, r1, V["r"], V["r2"])},
        {"id": "b1w", "curve": "b1", "from": "r2", "to": "w2",
         "points": circ_arc(cx1, cy1, r1, V["r2"], V["w2"])},
        {"id": "b1s", "curve": "b1", "from": "w2", "to": "w",
         "points": circ_arc(cx1, cy1, r1, V["w2"], V["w"])},
        # beta2 circle, ccw order p2 -> q2 -> q -> p
        {"id": "b2e", "curve": "b2", "from": "p2", "to": "q2",
         "points": circ_arc(cx2, cy2, r2, V["p2"], V["q2"])},
        {"id": "b2n", "curve": "b2", "from": "q2", "to": "q",
         "points": circ_arc(cx2, cy2, r2, V["q2"], V["q"])},
        {"id": "b2w", "curve": "b2", "from": "q", "to": "p",
         "points": circ_arc(cx2, cy2, r2, V["q"], V["p"])},
        {"id": "b2s", "curve": "b2", "from": "p", "to": "p2",
         "points": circ_arc(cx2, cy2, r2, V["p"], V["p2"])},
    ]

    def pick(faces, areas, outer, regions):
        return regions[outer]["id"]

    obj, outer_id = arrangement_fixture(vertices, edges, 2, pick, "f")
    return obj


def annular_fixture():
    """Genus 2 with a thin annular domain between two middle intersections."""
    r = math.sqrt(0.6 * 0.6 + 1)  # circles through (0, +-1) centered (+-0.6, 0)
    # angles of (0, +-1) seen from (-0.6, 0)
    up = math.atan2(1, 0.6)
    dn = -up
    return {
        "genus": 2,
        "vertices": [
            {"id": "yp", "x": 0, "y": 1},
            {"id": "ym", "x": 0, "y": -1},
        ],
        "edges": [
            # right arc of the left circle: ym -> yp (ccw)
            {"id": "u_a", "curve": "a1", "from": "ym", "to": "yp",
             "points": arc(-0.6, 0, r, dn, up)},
            # left arc of the left circle: yp -> ym (ccw continues)
            {"id": "l_a", "curve": "a1", "from": "yp", "to": "ym",
             "points": arc(-0.6, 0, r, up, 2 * math.pi + dn)},
            # left arc of the right circle: yp -> ym (ccw around (0.6, 0))
            {"id": "u_b", "curve": "b1", "from": "yp", "to": "ym",
             "points": arc(0.6, 0, r, math.pi - up, math.pi + up)},
            # right arc of the right circle: ym -> yp
            {"id": "l_b", "curve": "b1", "from": "ym", "to": "yp",
             "points": arc(0.6, 0, r, math.pi + up, 3 * math.pi - up)},
            # closed inner alpha circle
            {"id": "c", "curve": "a2",
             "points": arc(0, 0, 0.3, 0, 2 * math.pi)},
        ],
        "regions": [
            {"id": "R2", "chi": 0, "boundary": [
                [["u_a", 1], ["u_b", 1]],
                [["c", -1]],
            ]},
            {"id": "Din", "chi": 1, "boundary": [[["c", 1]]]},
            {"id": "A", "chi": 1, "boundary": [[["l_a", 1], ["u_b", -1]]]},
            {"id": "B", "chi": 1, "boundary": [[["u_a", -1], ["l_b", 1]]]},
            {"id": "O", "chi": -3, "boundary": [[["l_a", -1], ["l_b", -1]]]},
        ],
        "basepoint_region": "O",
        "surgery_pairs": [
            {"plus_region": "O", "minus_region": "O", "through_edges": []},
            {"plus_region": "O", "minus_region": "O", "through_edges": []},
        ],
    }


def main():
    os.makedirs(OUT, exist_ok=True)
    fixtures = {
        "genus1_wedge.json": wedge_fixture(1),
        "genus2_wedge.json": wedge_fixture(2),
        "genus3_wedge.json": wedge_fixture(3),
        "genus1_bigon.json": bigon_fixture(),
        "genus1_two_bigons.json": two_bigons_fixture(),
        "genus2_square.json": square_fixture(),
        "genus2_annular.json": annular_fixture(),
    }
    from knotfloer.maslov import HeegaardCellulation

    for name, obj in fixtures.items():
        cell = HeegaardCellulation(obj)  # validates
        path = os.path.join(OUT, name)
        with open(path, "w") as f:
            json.dump(obj, f, indent=1)
        print("wrote", name, "genus", cell.genus, "regions", len(cell.regions))


if __name__ == "__main__":
    main()
