"""JSON poset files.

Two shapes are accepted::

    {"faces": [{"vertices": [0, 1], "rank": 1}, ...]}
    {"ranks": [0, 1], "covers": [[0, 1]]}

Face posets (vertex labels, empty face at rank -1, distinct vertex sets) are
written in the first shape without the empty face; everything else in the
second.
"""

from __future__ import annotations

import json
from pathlib import Path

from .poset import GradedPoset, PosetError, build_from_covers, build_from_faces


def is_face_poset(P: GradedPoset) -> bool:
    if P.vertices is None or not P.polytopal:
        return False
    if P.vertices[P.bottom()] != ():
        return False
    return len(set(P.vertices)) == len(P)


def to_dict(P: GradedPoset) -> dict:
    if is_face_poset(P):
        faces = sorted((P.ranks[a], P.vertices[a]) for a in range(len(P)) if P.ranks[a] >= 0)
        return {"faces": [{"vertices": list(vs), "rank": r} for r, vs in faces]}
    if not P.graded:
        raise PosetError("posets with rank gaps between covers cannot be written as cover lists")
    return {"ranks": list(P.ranks), "covers": [list(c) for c in sorted(P.covers)]}


def from_dict(data: dict) -> GradedPoset:
    if not isinstance(data, dict):
        raise PosetError("poset JSON must be an object")
    if "faces" in data:
        try:
            faces = [(f["vertices"], f["rank"]) for f in data["faces"]]
        except (KeyError, TypeError):
            raise PosetError('each face needs "vertices" and "rank"') from None
        return build_from_faces(faces)
    if "ranks" in data:
        return build_from_covers(data["ranks"], [tuple(c) for c in data.get("covers", [])])
    raise PosetError('poset JSON needs a "faces" or a "ranks" key')


def dumps(P: GradedPoset) -> str:
    """One face or one cover per line, so files diff cleanly."""
    data = to_dict(P)
    if "faces" in data:
        rows = [json.dumps(f, separators=(",", ":")) for f in data["faces"]]
        return '{"faces":[\n' + ",\n".join(rows) + "\n]}\n"
    rows = [json.dumps(c) for c in data["covers"]]
    return '{"ranks":' + json.dumps(data["ranks"]) + ',"covers":[\n' + ",\n".join(rows) + "\n]}\n"


def loads(text: str) -> GradedPoset:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PosetError(f"invalid JSON: {exc}") from None
    return from_dict(data)


def read(path) -> GradedPoset:
    return loads(Path(path).read_text(encoding="utf-8"))


def write(P: GradedPoset, path) -> None:
    Path(path).write_text(dumps(P), encoding="utf-8")
