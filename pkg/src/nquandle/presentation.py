"""Quandle and group presentations read off a diagram.

From a diagram we generate, in order of strength:

* the Wirtinger quandle presentation (one generator per arc, one
  relation per crossing, plus vertex relations for graphs),
* its N-quandle quotient (power relations over pairs of generators),
* the conjugation group of either presentation,
* the fundamental group of the complement (crossing relators, plus the
  full vertex words for graphs), and
* its quotient by the n_i-th powers of one meridian per strand.

For links the conjugation group of the Wirtinger quandle and the
fundamental group coincide relator for relator; for graphs the vertex
word w gives the relation w = 1 in the group but only x^w = x in the
quandle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram, DiagramError, NLabeling, meridian, validate
from .freeword import EMPTY, FreeWord, Generator, QuandleTerm, word_to_text


@dataclass(frozen=True)
class QuandleRelation:
    lhs: QuandleTerm
    rhs: QuandleTerm


@dataclass(frozen=True)
class QuandlePresentation:
    generators: tuple[Generator, ...]
    component_of: dict  # generator index -> strand index
    relations: tuple[QuandleRelation, ...]
    n_labels: NLabeling | None = None

    @property
    def names(self) -> list[str]:
        return [g.name for g in self.generators]

    @property
    def n_strands(self) -> int:
        return max(self.component_of.values(), default=-1) + 1

    def strand_generators(self, i: int) -> list[int]:
        return [g for g, s in self.component_of.items() if s == i]

    def render(self) -> str:
        names = self.names
        parts = []
        for r in self.relations:
            lhs = _term_text(r.lhs, names)
            rhs = _term_text(r.rhs, names)
            parts.append(f"{lhs} = {rhs}")
        return "quandle <" + ", ".join(names) + " | " + ", ".join(parts) + ">"


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[Generator, ...]
    relators: tuple[FreeWord, ...]

    @property
    def names(self) -> list[str]:
        return [g.name for g in self.generators]

    def render(self) -> str:
        names = self.names
        rel = ", ".join(word_to_text(r, names) for r in self.relators)
        return "group <" + ", ".join(names) + " | " + rel + ">"


def _term_text(t: QuandleTerm, names) -> str:
    if not t.exponent:
        return names[t.base]
    return f"{names[t.base]}^({word_to_text(t.exponent, names)})"


def _checked(d: Diagram) -> Diagram:
    problems = validate(d)
    if problems:
        raise DiagramError("invalid diagram:\n  " + "\n  ".join(problems))
    return d


def vertex_word(d: Diagram, vertex_index: int) -> FreeWord:
    """The signed product of incident arc generators, in cyclic order.

    Incoming ends contribute the generator, outgoing ends its inverse.
    """
    v = d.vertices[vertex_index]
    letters = []
    for arc, direction in v.incident:
        g = d.arc_index[arc] + 1
        letters.append(g if direction == "in" else -g)
    return FreeWord(tuple(letters))


def wirtinger_quandle(d: Diagram) -> QuandlePresentation:
    """The fundamental quandle presentation read off a diagram."""
    _checked(d)
    gens = tuple(d.generators())
    relations = []
    for c in d.crossings:
        over = d.arc_index[c.over]
        u_in = d.arc_index[c.under_in]
        u_out = d.arc_index[c.under_out]
        exponent = FreeWord((c.sign * (over + 1),))
        relations.append(QuandleRelation(QuandleTerm(u_in, exponent), QuandleTerm(u_out)))
    if d.kind == "graph":
        for vi in range(len(d.vertices)):
            w = vertex_word(d, vi)
            for g in range(len(gens)):
                relations.append(QuandleRelation(QuandleTerm(g, w), QuandleTerm(g)))
    return QuandlePresentation(gens, d.component_of(), tuple(relations))


def n_quandle_presentation(q: QuandlePresentation, n: NLabeling) -> QuandlePresentation:
    """Add the power relations x^(y^n_i) = x over ordered pairs of generators."""
    if q.n_labels is not None:
        raise ValueError("presentation already carries an N labeling")
    if len(n) != q.n_strands:
        raise ValueError(f"N has {len(n)} entries but the presentation has {q.n_strands} strands")
    relations = list(q.relations)
    count = len(q.generators)
    for y in range(count):
        ni = n[q.component_of[y]]
        power = FreeWord(((y + 1),) * ni)
        for x in range(count):
            if x != y:
                relations.append(QuandleRelation(QuandleTerm(x, power), QuandleTerm(x)))
    return QuandlePresentation(q.generators, q.component_of, tuple(relations), n)


def _conj_relator(rel: QuandleRelation) -> FreeWord:
    # x^w = y becomes w^-1 x w y^-1 with the exponent letters read as
    # group conjugation.
    w = rel.lhs.exponent
    x = FreeWord(((rel.lhs.base + 1),))
    y_inv = FreeWord((-(rel.rhs.base + 1),))
    return ~w * x * w * y_inv


def conj_group(q: QuandlePresentation) -> GroupPresentation:
    """The conjugation group of a quandle presentation."""
    return GroupPresentation(q.generators, tuple(_conj_relator(r) for r in q.relations))


def conj_n_group(q: QuandlePresentation) -> GroupPresentation:
    """Conjugation group plus g^{n_i} for every generator g of strand i."""
    if q.n_labels is None:
        raise ValueError("presentation has no N labeling")
    relators = [_conj_relator(r) for r in q.relations]
    for g in range(len(q.generators)):
        ni = q.n_labels[q.component_of[g]]
        relators.append(FreeWord(((g + 1),) * ni))
    return GroupPresentation(q.generators, tuple(relators))


def fundamental_group(d: Diagram) -> GroupPresentation:
    """Wirtinger presentation of the complement's fundamental group.

    For links this equals conj_group(wirtinger_quandle(d)) relator for
    relator; for graphs each vertex contributes its full word as a
    relator rather than a commutator.
    """
    _checked(d)
    gens = tuple(d.generators())
    relators = []
    for c in d.crossings:
        over = d.arc_index[c.over]
        u_in = d.arc_index[c.under_in]
        u_out = d.arc_index[c.under_out]
        w = FreeWord((c.sign * (over + 1),))
        relators.append(~w * FreeWord((u_in + 1,)) * w * FreeWord((-(u_out + 1),)))
    if d.kind == "graph":
        for vi in range(len(d.vertices)):
            relators.append(vertex_word(d, vi))
    return GroupPresentation(gens, tuple(relators))


def quotient_group_n(d: Diagram, n: NLabeling) -> GroupPresentation:
    """Fundamental group modulo the n_i-th power of each strand's meridian.

    One power relator per strand suffices: all arc generators of a
    strand are conjugate, so their powers share a normal closure.
    """
    if len(n) != d.n_strands:
        raise ValueError(f"N has {len(n)} entries but the diagram has {d.n_strands} strands")
    g = fundamental_group(d)
    relators = list(g.relators)
    for i in range(d.n_strands):
        relators.append(meridian(d, i) ** n[i])
    return GroupPresentation(g.generators, tuple(relators))


def presentation_to_doc(q: QuandlePresentation) -> dict:
    """JSON-ready form of a quandle presentation."""
    names = q.names
    return {
        "generators": names,
        "component_of": {names[g]: s for g, s in sorted(q.component_of.items())},
        "relations": [
            {"lhs": _term_text(r.lhs, names), "rhs": _term_text(r.rhs, names)}
            for r in q.relations
        ],
        "n_labels": list(q.n_labels) if q.n_labels is not None else None,
    }


def group_to_doc(g: GroupPresentation) -> dict:
    names = g.names
    return {
        "generators": names,
        "relators": [word_to_text(r, names) for r in g.relators],
    }
