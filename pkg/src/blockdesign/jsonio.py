"""JSON interchange formats.

Design files: {"n": int, "k": int, "blocks": [[int,...],...]}.
Graph files: {"n": int, "edges": [[i,j],...]} with i < j in each pair.
Decompositions: {"k": int, "cliques": [[int,...],...]}.
Colorings: {"classes": [[int,...],...]}.
Certificates: {"kind": "star_obstruction"|"forced_block", "z": int, "A0": [int,...]}
(A0 only for star obstructions).  These formats are shared by every module
and the CLI.
"""

from __future__ import annotations

import json
from pathlib import Path

from .constructions import STAR_OBSTRUCTION, ObstructionCertificate
from .core import CliqueDecomposition, PartialDesign
from .graphs import DenseGraph


class FormatError(ValueError):
    """Raised when a JSON document does not match its schema."""


def _load(path) -> dict:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise FormatError(f"{path}: expected a JSON object")
    return data


def detect_kind(path) -> str:
    """'design', 'graph', or 'certificate' based on the document keys."""
    data = _load(path)
    if "blocks" in data:
        return "design"
    if "edges" in data:
        return "graph"
    if "kind" in data:
        return "certificate"
    raise FormatError(f"{path}: unrecognized document (no 'blocks', 'edges', or 'kind' key)")


def _require_int(data: dict, key: str, path) -> int:
    value = data.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise FormatError(f"{path}: '{key}' must be an integer")
    return value


def load_design(path) -> PartialDesign:
    data = _load(path)
    n = _require_int(data, "n", path)
    k = _require_int(data, "k", path)
    blocks = data.get("blocks")
    if not isinstance(blocks, list) or not all(
        isinstance(b, list) and all(isinstance(p, int) for p in b) for b in blocks
    ):
        raise FormatError(f"{path}: 'blocks' must be a list of integer lists")
    return PartialDesign(n, k, blocks)


def load_graph(path) -> DenseGraph:
    data = _load(path)
    n = _require_int(data, "n", path)
    edges = data.get("edges")
    if not isinstance(edges, list):
        raise FormatError(f"{path}: 'edges' must be a list")
    pairs = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(v, int) for v in e)):
            raise FormatError(f"{path}: each edge must be a pair of integers, got {e!r}")
        i, j = e
        if not i < j:
            raise FormatError(f"{path}: edge [{i},{j}] must satisfy i < j")
        pairs.append((i, j))
    if len(set(pairs)) != len(pairs):
        raise FormatError(f"{path}: duplicate edges")
    try:
        return DenseGraph.from_edges(n, pairs)
    except ValueError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def load_certificate(path) -> ObstructionCertificate:
    data = _load(path)
    kind = data.get("kind")
    z = _require_int(data, "z", path)
    a0 = data.get("A0")
    if a0 is not None and not (isinstance(a0, list) and all(isinstance(v, int) for v in a0)):
        raise FormatError(f"{path}: 'A0' must be a list of integers")
    try:
        return ObstructionCertificate(kind, z=z, a0=tuple(a0) if a0 is not None else None)
    except ValueError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def design_to_obj(d: PartialDesign) -> dict:
    return {"n": d.n, "k": d.k, "blocks": [list(b) for b in d.blocks]}


def graph_to_obj(g: DenseGraph) -> dict:
    return {"n": g.n, "edges": [[i, j] for i, j in g.edges()]}


def decomposition_to_obj(dec: CliqueDecomposition) -> dict:
    return {"k": dec.k, "cliques": [list(c) for c in dec.cliques]}


def certificate_to_obj(cert: ObstructionCertificate) -> dict:
    obj = {"kind": cert.kind, "z": cert.z}
    if cert.kind == STAR_OBSTRUCTION:
        obj["A0"] = list(cert.a0)
    return obj


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def write(path, obj) -> None:
    Path(path).write_text(dumps(obj))
