"""JSON (de)serialization for every artifact the pipeline produces.

All rationals travel as exact "p/q" strings; `dumps` is deterministic so
identical inputs yield byte-identical files.
"""
from __future__ import annotations

import hashlib
import json

from .errors import MalformedInput
from .geometry import frac, frac_str
from .planegraph import PlaneGraph, load_graph, serialize as graph_to_dict


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc}") from exc


# -- realizer / labeling -------------------------------------------------


def realizer_to_dict(r) -> dict:
    edges = []
    for (u, v), color in sorted(r.edge_color.items()):
        tail, _head = r.edge_dir[(u, v)]
        edges.append({"u": u, "v": v, "color": color,
                      "dir": "uv" if tail == u else "vu"})
    return {"outer": list(r.outer), "edges": edges,
            "graph": graph_to_dict(r.host)}


def realizer_from_dict(doc) -> "SchnyderRealizer":
    from .schnyder import SchnyderRealizer
    host = load_graph(doc["graph"])
    color, direction = {}, {}
    for e in doc["edges"]:
        u, v, col = e["u"], e["v"], e["color"]
        key = (u, v) if u < v else (v, u)
        color[key] = col
        direction[key] = (u, v) if e["dir"] == "uv" else (v, u)
    return SchnyderRealizer(host=host, outer=tuple(doc["outer"]),
                            edge_color=color, edge_dir=direction)


def labeling_to_dict(el) -> dict:
    edges = []
    for (u, v), color in sorted(el.edge_color.items()):
        tail, _ = el.edge_dir[(u, v)]
        edges.append({"u": u, "v": v, "color": color,
                      "dir": "uv" if tail == u else "vu"})
    return {"base_edge": list(el.base_edge), "edges": edges,
            "graph": graph_to_dict(el.host)}


def labeling_from_dict(doc) -> "EdgeLabeling":
    from .labeling import EdgeLabeling
    host = load_graph(doc["graph"])
    color, direction = {}, {}
    for e in doc["edges"]:
        u, v, col = e["u"], e["v"], e["color"]
        key = (u, v) if u < v else (v, u)
        color[key] = col
        direction[key] = (u, v) if e["dir"] == "uv" else (v, u)
    return EdgeLabeling(host=host, base_edge=tuple(doc["base_edge"]),
                        edge_color=color, edge_dir=direction)


# -- representations ------------------------------------------------------


def _point_to_list(p):
    return [frac_str(p[0]), frac_str(p[1])]


def _point_from_list(item):
    return (frac(item[0]), frac(item[1]))


def rep_to_dict(rep) -> dict:
    return {
        "graph": graph_to_dict(rep.host),
        "base_edge": list(rep.base_edge),
        "shapes": [{"v": v,
                    "top": _point_to_list(s.top),
                    "right": _point_to_list(s.right)}
                   for v, s in sorted(rep.shapes.items())],
    }


def rep_from_dict(doc) -> "LRepresentation":
    from .lrep import LRepresentation, LShape
    host = load_graph(doc["graph"])
    shapes = {}
    for item in doc["shapes"]:
        shapes[item["v"]] = LShape(top=_point_from_list(item["top"]),
                                   right=_point_from_list(item["right"]))
    return LRepresentation(host=host, base_edge=tuple(doc["base_edge"]),
                           shapes=shapes)


def cuboids_to_dict(cr) -> dict:
    return {
        "graph": graph_to_dict(cr.host),
        "proper": cr.proper,
        "boxes": [{"v": v,
                   "x": [frac_str(b[0][0]), frac_str(b[0][1])],
                   "y": [frac_str(b[1][0]), frac_str(b[1][1])],
                   "z": [frac_str(b[2][0]), frac_str(b[2][1])]}
                  for v, b in sorted(cr.boxes.items())],
    }


def cuboids_from_dict(doc) -> "CuboidRepresentation":
    from .lift3d import CuboidRepresentation
    host = load_graph(doc["graph"])
    boxes = {}
    for item in doc["boxes"]:
        boxes[item["v"]] = tuple(
            (frac(item[axis][0]), frac(item[axis][1])) for axis in "xyz")
    return CuboidRepresentation(host=host, boxes=boxes,
                                proper=doc.get("proper", False))


def triangles_to_dict(tr) -> dict:
    return {
        "graph": graph_to_dict(tr.host),
        "triangles": [{"v": v,
                       "bend": _point_to_list(t[0]),
                       "top": _point_to_list(t[1]),
                       "right": _point_to_list(t[2])}
                      for v, t in sorted(tr.triangles.items())],
    }


def trace_to_dict(outcome) -> dict:
    doc = {"status": outcome.status,
           "iterations": [{"realizer_hash": it.realizer_hash,
                           "sign_pattern": it.sign_pattern,
                           "min_entry": frac_str(it.min_entry)}
                          for it in outcome.trace]}
    return doc


def realizer_hash(r) -> str:
    payload = dumps({"outer": list(r.outer),
                     "edges": sorted((u, v, r.edge_color[(u, v)],
                                      r.edge_dir[(u, v)][0])
                                     for (u, v) in r.edge_color)})
    return hashlib.sha256(payload.encode()).hexdigest()[:16]
