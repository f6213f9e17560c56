"""File formats: group JSON and graph edge lists, all 0-based.

Group JSON: ``{"name": str?, "degree": n, "generators": [[images...], ...]}``.
Serialisation is canonical (sorted keys, compact separators) so that a
load/dump round trip is byte-exact on canonical input.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import MalformedPermutation, ParameterError
from .graphs import Graph
from .groups import PermGroup
from .perms import Permutation


def group_to_obj(group: PermGroup) -> dict:
    obj: dict = {
        "degree": group.degree,
        "generators": [[int(v) for v in g.images] for g in group.generators],
    }
    if group.name:
        obj["name"] = group.name
    return obj


def group_to_json(group: PermGroup) -> str:
    return json.dumps(group_to_obj(group), sort_keys=True, separators=(",", ":")) + "\n"


def group_from_obj(obj: dict) -> PermGroup:
    if not isinstance(obj, dict):
        raise ParameterError("group JSON must be an object")
    try:
        degree = int(obj["degree"])
        gens_raw = obj["generators"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParameterError(f"group JSON missing degree/generators: {exc}") from exc
    if not isinstance(gens_raw, list):
        raise ParameterError("generators must be a list of image arrays")
    gens = []
    for images in gens_raw:
        if not isinstance(images, list) or len(images) != degree:
            raise MalformedPermutation(
                f"generator image list has length {len(images) if isinstance(images, list) else '?'}, expected {degree}"
            )
        gens.append(Permutation(images))
    name = obj.get("name")
    return PermGroup(degree, gens, name=name)


def group_from_json(text: str) -> PermGroup:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParameterError(f"invalid JSON: {exc}") from exc
    return group_from_obj(obj)


def load_group(path: str | Path) -> PermGroup:
    return group_from_json(Path(path).read_text())


def save_group(group: PermGroup, path: str | Path) -> None:
    Path(path).write_text(group_to_json(group))


def load_graph(path: str | Path) -> Graph:
    return Graph.from_edge_text(Path(path).read_text())


def save_graph(graph: Graph, path: str | Path) -> None:
    Path(path).write_text(graph.to_edge_text())
