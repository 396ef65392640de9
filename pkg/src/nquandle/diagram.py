"""Link and spatial-graph diagrams: data model, JSON parser, validation.

A diagram is a set of named arcs organized into strands.  For a link,
each strand is a component and its arc list is cyclic; for a graph, each
strand is an edge and its arc list is linear, terminating at vertices.
Crossings join consecutive arcs of a strand (the under-strand is cut);
vertices record the cyclically ordered incident edge-ends of a graph.

The declaration order of strands is significant: an N-labeling assigns
n_i to the i-th declared strand, so reordering strands changes the
meaning of every downstream computation.

JSON input schema::

    {
      "kind": "link" | "graph",
      "strands":   [ {"name": "...", "arcs": ["a1", ...]}, ... ],
      "crossings": [ {"over": "a", "under_in": "b",
                      "under_out": "c", "sign": 1 | -1}, ... ],
      "vertices":  [ {"incident": [ {"arc": "a", "dir": "in"|"out"},
                                    ... ]}, ... ]
    }

A crossing's sign is +1 when the over-strand crosses the under-strand
left to right as seen along the under-strand's orientation; the crossing
relation is then under_out = under_in acted on by over (and by the
inverse of over when the sign is -1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .freeword import EMPTY, FreeWord, Generator


class DiagramError(ValueError):
    """Raised for malformed diagram documents."""


@dataclass(frozen=True)
class Crossing:
    over: str
    under_in: str
    under_out: str
    sign: int


@dataclass(frozen=True)
class Vertex:
    incident: tuple[tuple[str, str], ...]  # (arc, "in"|"out"), cyclic order


@dataclass(frozen=True)
class Strand:
    name: str
    arcs: tuple[str, ...]


@dataclass(frozen=True)
class Diagram:
    kind: str  # "link" | "graph"
    strands: tuple[Strand, ...]
    crossings: tuple[Crossing, ...]
    vertices: tuple[Vertex, ...] = ()

    # Derived lookups, filled in __post_init__.
    arcs: tuple[str, ...] = field(init=False)
    arc_index: dict = field(init=False)
    strand_of_arc: dict = field(init=False)

    def __post_init__(self):
        arcs = []
        arc_index = {}
        strand_of = {}
        for si, strand in enumerate(self.strands):
            for a in strand.arcs:
                if a not in arc_index:
                    arc_index[a] = len(arcs)
                    arcs.append(a)
                    strand_of[a] = si
        object.__setattr__(self, "arcs", tuple(arcs))
        object.__setattr__(self, "arc_index", arc_index)
        object.__setattr__(self, "strand_of_arc", strand_of)

    @property
    def n_strands(self) -> int:
        return len(self.strands)

    def generators(self) -> list[Generator]:
        """One generator per arc, in declaration order."""
        return [Generator(a, i) for i, a in enumerate(self.arcs)]

    def component_of(self) -> dict[int, int]:
        """Map generator index -> strand index."""
        return {self.arc_index[a]: self.strand_of_arc[a] for a in self.arcs}


@dataclass(frozen=True)
class NLabeling:
    """One integer n_i >= 1 per strand, in strand declaration order."""

    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if any(v < 1 for v in self.values):
            raise ValueError("all n_i must be >= 1")

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]


def parse_n_labeling(text: str) -> NLabeling:
    """Parse a comma-separated labeling like '3,3,2,2,2,2'."""
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad N labeling {text!r}: {exc}") from None
    return NLabeling(values)


def _require(cond, errors, msg):
    if not cond:
        errors.append(msg)


def validate(d: Diagram) -> list[str]:
    """Return a list of invariant violations; empty iff the diagram is valid."""
    errors: list[str] = []
    if d.kind not in ("link", "graph"):
        errors.append(f"kind must be 'link' or 'graph', got {d.kind!r}")
        return errors

    # Unique nonempty arc names, each in exactly one strand.
    seen = {}
    for si, strand in enumerate(d.strands):
        if not strand.arcs:
            errors.append(f"strand {strand.name!r} has no arcs")
        for a in strand.arcs:
            if not a:
                errors.append(f"strand {strand.name!r} contains an empty arc name")
            elif a in seen:
                errors.append(f"arc {a!r} appears in strands {seen[a]!r} and {strand.name!r}")
            else:
                seen[a] = strand.name

    def known(arc, where):
        if arc not in d.arc_index:
            errors.append(f"{where} references unknown arc {arc!r}")
            return False
        return True

    # Crossings: arcs exist, signs valid, under_in/under_out each used once.
    under_in_at = {}
    under_out_at = {}
    for ci, c in enumerate(d.crossings):
        for arc, role in ((c.over, "over"), (c.under_in, "under_in"), (c.under_out, "under_out")):
            known(arc, f"crossing {ci} ({role})")
        if c.sign not in (1, -1):
            errors.append(f"crossing {ci} has sign {c.sign!r}, expected 1 or -1")
        if c.under_in in under_in_at:
            errors.append(f"arc {c.under_in!r} is under_in of crossings {under_in_at[c.under_in]} and {ci}")
        else:
            under_in_at[c.under_in] = ci
        if c.under_out in under_out_at:
            errors.append(f"arc {c.under_out!r} is under_out of crossings {under_out_at[c.under_out]} and {ci}")
        else:
            under_out_at[c.under_out] = ci

    if errors:
        return errors  # structural references broken; joint checks would cascade

    def joined_by_crossing(a, b):
        ci = under_in_at.get(a)
        return ci is not None and d.crossings[ci].under_out == b

    # Vertex bookkeeping (graphs).
    if d.kind == "link":
        if d.vertices:
            errors.append("link diagrams must not declare vertices")
    else:
        if not d.vertices:
            errors.append("graph diagrams must declare at least one vertex")
        slot_multiset = {}
        for vi, v in enumerate(d.vertices):
            if len(v.incident) < 1:
                errors.append(f"vertex {vi} has degree 0")
            for arc, direction in v.incident:
                if direction not in ("in", "out"):
                    errors.append(f"vertex {vi}: bad direction {direction!r} for arc {arc!r}")
                    continue
                if known(arc, f"vertex {vi}"):
                    key = (arc, direction)
                    slot_multiset[key] = slot_multiset.get(key, 0) + 1

    # Strand continuity.
    for si, strand in enumerate(d.strands):
        arcs = strand.arcs
        label = f"strand {strand.name!r}"
        if d.kind == "link":
            if len(arcs) == 1:
                a = arcs[0]
                # Closes up smoothly (0 undercrossings) or under itself once.
                if a in under_in_at or a in under_out_at:
                    if not joined_by_crossing(a, a):
                        errors.append(f"{label}: single arc {a!r} does not close up at one crossing")
            else:
                for i, a in enumerate(arcs):
                    b = arcs[(i + 1) % len(arcs)]
                    if not joined_by_crossing(a, b):
                        errors.append(f"{label}: arcs {a!r} -> {b!r} not joined by a crossing")
        else:
            for a, b in zip(arcs, arcs[1:]):
                if not joined_by_crossing(a, b):
                    errors.append(f"{label}: arcs {a!r} -> {b!r} not joined by a crossing")
            first, last = arcs[0], arcs[-1]
            if first in under_out_at:
                errors.append(f"{label}: first arc {first!r} exits a crossing instead of a vertex")
            if last in under_in_at:
                errors.append(f"{label}: last arc {last!r} enters a crossing instead of a vertex")

    # Graph edges must terminate at vertices, each endpoint at exactly one slot.
    if d.kind == "graph" and not errors:
        needed = {}
        for strand in d.strands:
            for key in ((strand.arcs[0], "out"), (strand.arcs[-1], "in")):
                needed[key] = needed.get(key, 0) + 1
        for key, count in needed.items():
            have = slot_multiset.get(key, 0)
            if have != count:
                arc, direction = key
                errors.append(
                    f"edge end ({arc!r}, {direction}) appears at {have} vertex slots, expected {count}"
                )
        for key, count in slot_multiset.items():
            if key not in needed:
                arc, direction = key
                errors.append(f"vertex slot ({arc!r}, {direction}) matches no edge end")
    return errors


def parse_diagram(text: str) -> Diagram:
    """Parse and validate a JSON diagram document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError(f"JSON syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise DiagramError("diagram document must be a JSON object")

    kind = doc.get("kind")
    if kind not in ("link", "graph"):
        raise DiagramError(f"'kind' must be 'link' or 'graph', got {kind!r}")

    def str_field(obj, key, where):
        val = obj.get(key)
        if not isinstance(val, str):
            raise DiagramError(f"{where}: field {key!r} must be a string")
        return val

    strands = []
    raw_strands = doc.get("strands")
    if not isinstance(raw_strands, list) or not raw_strands:
        raise DiagramError("'strands' must be a nonempty list")
    for i, s in enumerate(raw_strands):
        if not isinstance(s, dict):
            raise DiagramError(f"strand {i} must be an object")
        arcs = s.get("arcs")
        if not isinstance(arcs, list) or not all(isinstance(a, str) for a in arcs):
            raise DiagramError(f"strand {i}: 'arcs' must be a list of strings")
        strands.append(Strand(str_field(s, "name", f"strand {i}"), tuple(arcs)))

    crossings = []
    for i, c in enumerate(doc.get("crossings", [])):
        if not isinstance(c, dict):
            raise DiagramError(f"crossing {i} must be an object")
        sign = c.get("sign")
        if sign not in (1, -1):
            raise DiagramError(f"crossing {i}: 'sign' must be 1 or -1")
        crossings.append(
            Crossing(
                over=str_field(c, "over", f"crossing {i}"),
                under_in=str_field(c, "under_in", f"crossing {i}"),
                under_out=str_field(c, "under_out", f"crossing {i}"),
                sign=sign,
            )
        )

    vertices = []
    for i, v in enumerate(doc.get("vertices", [])):
        if not isinstance(v, dict):
            raise DiagramError(f"vertex {i} must be an object")
        incident = v.get("incident")
        if not isinstance(incident, list):
            raise DiagramError(f"vertex {i}: 'incident' must be a list")
        ends = []
        for j, e in enumerate(incident):
            if not isinstance(e, dict):
                raise DiagramError(f"vertex {i} slot {j} must be an object")
            direction = e.get("dir")
            if direction not in ("in", "out"):
                raise DiagramError(f"vertex {i} slot {j}: 'dir' must be 'in' or 'out'")
            ends.append((str_field(e, "arc", f"vertex {i} slot {j}"), direction))
        vertices.append(Vertex(tuple(ends)))

    d = Diagram(kind, tuple(strands), tuple(crossings), tuple(vertices))
    problems = validate(d)
    if problems:
        raise DiagramError("invalid diagram:\n  " + "\n  ".join(problems))
    return d


def diagram_to_json(d: Diagram) -> str:
    """Render a diagram back to its JSON document form."""
    doc = {
        "kind": d.kind,
        "strands": [{"name": s.name, "arcs": list(s.arcs)} for s in d.strands],
        "crossings": [
            {"over": c.over, "under_in": c.under_in, "under_out": c.under_out, "sign": c.sign}
            for c in d.crossings
        ],
    }
    if d.kind == "graph":
        doc["vertices"] = [
            {"incident": [{"arc": a, "dir": direction} for a, direction in v.incident]}
            for v in d.vertices
        ]
    return json.dumps(doc, indent=2) + "\n"


def meridian(d: Diagram, i: int) -> FreeWord:
    """Meridian of strand i: the generator of its first declared arc."""
    if not 0 <= i < d.n_strands:
        raise IndexError(f"strand index {i} out of range (0..{d.n_strands - 1})")
    first = d.strands[i].arcs[0]
    return FreeWord((d.arc_index[first] + 1,))


def longitude(d: Diagram, i: int) -> FreeWord:
    """Blackboard longitude of link component i, based at its first arc.

    Traverses the component in strand order, appending the over arc
    (signed by the crossing sign) at each undercrossing passed.
    """
    if d.kind != "link":
        raise DiagramError("longitudes are defined for link components only")
    if not 0 <= i < d.n_strands:
        raise IndexError(f"strand index {i} out of range (0..{d.n_strands - 1})")
    under_in_at = {c.under_in: c for c in d.crossings}
    arcs = d.strands[i].arcs
    letters = []
    for k, a in enumerate(arcs):
        c = under_in_at.get(a)
        if c is None:
            continue  # unknotted component arc with no undercrossing
        if c.under_out != arcs[(k + 1) % len(arcs)]:
            raise DiagramError(f"inconsistent strand continuity at arc {a!r}")
        letters.append(c.sign * (d.arc_index[c.over] + 1))
    return FreeWord(tuple(letters))
