"""Knot records: named Goeritz data with validation and (de)serialisation.

A record carries a knot name and a presentation of (the relevant invariants
of) its double branched cover: either a Goeritz matrix directly, or a
signed white graph from which the matrix is built.  Optional metadata:
the knot signature (needed only by the sign-refined test) and the knot
determinant, kept purely as a cross-check against |det| of the matrix.

The external format is a UTF-8 JSON array of objects with keys

    name        (string, required)
    goeritz     (array of arrays of integers)        } at least one
    white_graph ({"vertices": n, "edges": [[u, v, s], ...]})  } of the two
    signature   (even integer, optional)
    determinant (integer, optional cross-check)
    mirror_of   (string, optional)
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence, TextIO, Union

from .errors import ValidationError
from .lattice import QuadraticForm


@dataclass(frozen=True)
class WhiteGraph:
    """A multigraph on checkerboard regions with signed edges, no loops."""

    vertex_count: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise ValidationError("white graph needs at least one vertex")
        for u, v, sign in self.edges:
            if u == v:
                raise ValidationError(f"white graph has a loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValidationError(f"edge ({u}, {v}) leaves the vertex range")
            if sign not in (1, -1):
                raise ValidationError(f"edge sign must be +-1, got {sign}")


def goeritz_from_white_graph(graph: WhiteGraph) -> QuadraticForm:
    """The Goeritz form of a signed white graph.

    On the lattice spanned by the vertices modulo the sum relation: the
    pairing of distinct vertices is the signed count of connecting edges,
    and each vertex pairs with itself as minus its signed degree.  The
    quotient is realised by deleting the last vertex; any other deletion
    gives a congruent form.
    """
    n = graph.vertex_count
    full = [[0] * n for _ in range(n)]
    for u, v, sign in graph.edges:
        full[u][v] += sign
        full[v][u] += sign
        full[u][u] -= sign
        full[v][v] -= sign
    rows = [row[: n - 1] for row in full[: n - 1]]
    return QuadraticForm.from_rows(rows)


@dataclass(frozen=True)
class KnotRecord:
    name: str
    goeritz: Optional[QuadraticForm] = None
    white_graph: Optional[WhiteGraph] = None
    signature: Optional[int] = None
    determinant: Optional[int] = None
    mirror_of: Optional[str] = None

    def __post_init__(self) -> None:
        if self.goeritz is None and self.white_graph is None:
            raise ValidationError(f"record {self.name!r} has neither matrix nor white graph")
        if self.goeritz is not None and self.white_graph is not None:
            derived = goeritz_from_white_graph(self.white_graph)
            if derived.gram != self.goeritz.gram:
                raise ValidationError(
                    f"record {self.name!r}: white graph and stored matrix disagree"
                )
        if self.signature is not None and self.signature % 2 != 0:
            raise ValidationError(f"record {self.name!r}: signature must be even")
        if self.determinant is not None and abs(self.form.det) != self.determinant:
            raise ValidationError(
                f"record {self.name!r}: |det| = {abs(self.form.det)} does not match "
                f"declared determinant {self.determinant}"
            )

    @property
    def form(self) -> QuadraticForm:
        if self.goeritz is not None:
            return self.goeritz
        assert self.white_graph is not None
        return goeritz_from_white_graph(self.white_graph)


def record_from_dict(entry: dict, where: str = "") -> KnotRecord:
    if not isinstance(entry, dict):
        raise ValidationError(f"{where}: record entries must be objects")
    name = entry.get("name")
    if not isinstance(name, str) or not name:
        raise ValidationError(f"{where}: missing or invalid 'name'")
    context = f"{where} ({name})" if where else name
    goeritz = None
    if "goeritz" in entry and entry["goeritz"] is not None:
        try:
            goeritz = QuadraticForm.from_rows(entry["goeritz"])
        except (ValidationError, TypeError) as exc:
            raise ValidationError(f"{context}: bad Goeritz matrix: {exc}") from exc
    white_graph = None
    if "white_graph" in entry and entry["white_graph"] is not None:
        wg = entry["white_graph"]
        if not isinstance(wg, dict) or "vertices" not in wg or "edges" not in wg:
            raise ValidationError(f"{context}: white_graph needs 'vertices' and 'edges'")
        try:
            white_graph = WhiteGraph(
                vertex_count=int(wg["vertices"]),
                edges=tuple((int(u), int(v), int(s)) for u, v, s in wg["edges"]),
            )
        except (ValidationError, TypeError, ValueError) as exc:
            raise ValidationError(f"{context}: bad white graph: {exc}") from exc
    try:
        return KnotRecord(
            name=name,
            goeritz=goeritz,
            white_graph=white_graph,
            signature=entry.get("signature"),
            determinant=entry.get("determinant"),
            mirror_of=entry.get("mirror_of"),
        )
    except ValidationError as exc:
        raise ValidationError(f"{context}: {exc}") from exc


def record_to_dict(record: KnotRecord) -> dict:
    out: dict = {"name": record.name}
    if record.goeritz is not None:
        out["goeritz"] = [list(row) for row in record.goeritz.gram]
    if record.white_graph is not None:
        out["white_graph"] = {
            "vertices": record.white_graph.vertex_count,
            "edges": [list(edge) for edge in record.white_graph.edges],
        }
    if record.signature is not None:
        out["signature"] = record.signature
    if record.determinant is not None:
        out["determinant"] = record.determinant
    if record.mirror_of is not None:
        out["mirror_of"] = record.mirror_of
    return out


def parse_knot_records(source: Union[str, TextIO]) -> list[KnotRecord]:
    """Parse a JSON array of records (or a single record object)."""
    text = source if isinstance(source, str) else source.read()
    if not text.strip():
        return []
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed JSON at line {exc.lineno}: {exc.msg}") from exc
    if isinstance(payload, dict):
        payload = [payload]
    if not isinstance(payload, list):
        raise ValidationError("expected a JSON array of knot records")
    return [record_from_dict(entry, where=f"record {i}") for i, entry in enumerate(payload)]


def serialize_knot_records(records: Sequence[KnotRecord]) -> str:
    return json.dumps([record_to_dict(r) for r in records], indent=2)


def builtin_dataset() -> list[KnotRecord]:
    """All bundled records, validated through the same path as external files."""
    from ._tables import BUILTIN_RECORDS

    return [record_from_dict(entry, where="builtin") for entry in BUILTIN_RECORDS]


def builtin_record(name: str) -> KnotRecord:
    for record in builtin_dataset():
        if record.name == name:
            return record
    raise ValidationError(f"no builtin record named {name!r}")
