"""Constructors for the diagrams shipped with the package.

Each function returns a validated Diagram.  Crossing signs and vertex
cyclic orders are transcribed from planar drawings of each object;
strand declaration order fixes the meaning of N labelings, so it is
part of the contract of every constructor (documented per function).
"""

from __future__ import annotations

from .diagram import Crossing, Diagram, DiagramError, Strand, Vertex, validate


def _build(kind, strands, crossings, vertices=()) -> Diagram:
    d = Diagram(kind, tuple(strands), tuple(crossings), tuple(vertices))
    problems = validate(d)
    if problems:
        raise DiagramError("example constructor produced an invalid diagram:\n  " + "\n  ".join(problems))
    return d


def unknot() -> Diagram:
    """One round component, no crossings."""
    return _build("link", [Strand("K", ("a",))], [])


def trefoil() -> Diagram:
    """Standard 3-crossing positive trefoil; arcs a, b, c in traversal order."""
    strands = [Strand("K", ("a", "b", "c"))]
    crossings = [
        Crossing(over="c", under_in="a", under_out="b", sign=1),
        Crossing(over="a", under_in="b", under_out="c", sign=1),
        Crossing(over="b", under_in="c", under_out="a", sign=1),
    ]
    return _build("link", strands, crossings)


def hopf_link() -> Diagram:
    """Positive Hopf link, one arc per component (each goes under once)."""
    strands = [Strand("K1", ("a",)), Strand("K2", ("b",))]
    crossings = [
        Crossing(over="b", under_in="a", under_out="a", sign=1),
        Crossing(over="a", under_in="b", under_out="b", sign=1),
    ]
    return _build("link", strands, crossings)


def theta_graph() -> Diagram:
    """Planar theta graph: vertices left (v1) and right (v2), edges e1 (top),
    e2 (middle), e3 (bottom), all oriented v1 -> v2.

    Counterclockwise incident order: (e2, e1, e3) at v1, (e1, e2, e3) at v2.
    """
    strands = [Strand("e1", ("x1",)), Strand("e2", ("x2",)), Strand("e3", ("x3",))]
    vertices = [
        Vertex((("x2", "out"), ("x1", "out"), ("x3", "out"))),
        Vertex((("x1", "in"), ("x2", "in"), ("x3", "in"))),
    ]
    return _build("graph", strands, [], vertices)


def _overhand_arcs(prefix: str):
    """Arcs and crossings of a positive overhand (trefoil) knot tied in an
    open strand, traversed start to end: passes under / over / under /
    over / under / over at crossings c1, c2, c3, c1, c2, c3."""
    a1, a2, a3, a4 = (f"{prefix}{i}" for i in range(1, 5))
    crossings = [
        Crossing(over=a3, under_in=a1, under_out=a2, sign=1),
        Crossing(over=a2, under_in=a3, under_out=a4, sign=1),
        Crossing(over=a4, under_in=a2, under_out=a3, sign=1),
    ]
    return (a1, a2, a3, a4), crossings


def knotted_k4(three_labeled: str = "opposite") -> Diagram:
    """Tetrahedron skeleton with a positive trefoil tied in one edge.

    Vertices of the underlying K4: v1 (top), v2 (bottom left), v3
    (bottom right), v4 (center) in a planar drawing; the trefoil is tied
    in the bottom edge v2-v3.  Strand order is chosen so that the first
    two declared edges are the pair intended to carry the label 3 in the
    headline labeling (3, 3, 2, 2, 2, 2):

    * ``"opposite"``: the knotted edge v2v3 and its opposite edge v1v4.
    * ``"adjacent"``: the knotted edge v2v3 and the side edge v1v2.

    The remaining edges follow in a fixed order.  Edge orientations:
    v1->v2, v1->v3, v2->v3 (the knotted one), v1->v4, v2->v4, v3->v4.
    """
    (t1, t2, t3, t4), crossings = _overhand_arcs("t")
    edges = {
        "e12": Strand("e12", ("a12",)),
        "e13": Strand("e13", ("a13",)),
        "e23": Strand("e23", (t1, t2, t3, t4)),
        "e14": Strand("e14", ("a14",)),
        "e24": Strand("e24", ("a24",)),
        "e34": Strand("e34", ("a34",)),
    }
    orders = {
        "opposite": ("e23", "e14", "e12", "e13", "e24", "e34"),
        "adjacent": ("e23", "e12", "e13", "e14", "e24", "e34"),
    }
    if three_labeled not in orders:
        raise ValueError(f"unknown labeling scheme {three_labeled!r}")
    strands = [edges[name] for name in orders[three_labeled]]
    # Counterclockwise incident orders read off the planar drawing.
    vertices = [
        Vertex((("a12", "out"), ("a14", "out"), ("a13", "out"))),  # v1
        Vertex(((t1, "out"), ("a24", "out"), ("a12", "in"))),      # v2
        Vertex((("a13", "in"), ("a34", "out"), (t4, "in"))),       # v3
        Vertex((("a14", "in"), ("a24", "in"), ("a34", "in"))),     # v4
    ]
    return _build("graph", strands, crossings, vertices)


def twisted_theta(k: int) -> Diagram:
    """Circle with two chords, the two long sides twisted k times.

    Viewed as a ladder: top vertices u1, u2 joined by the top arc e1 and
    the chord e3; bottom vertices w1, w2 joined by the bottom arc e5 and
    the chord e4; side edges e2 (from u1) and e6 (from u2) pass together
    through a block of k positive half-twists.  Strand order is
    (e1, e2, e3, e4, e5, e6), so a labeling (2, 2, m, n, 2, 2) puts m on
    the top chord and n on the bottom chord.

    k must be >= 1 (k = 0 is the planar diagram, also valid).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    # Twist block: at each half-twist the strand in the left position
    # crosses over to the right and the right strand goes under to the
    # left, starting a new arc.
    left, right = "c1", "h1"
    e2_arcs, e6_arcs = ["c1"], ["h1"]
    owner = {"c1": e2_arcs, "h1": e6_arcs}
    crossings = []
    for i in range(k):
        chain = owner[right]
        new_arc = f"{chain[0][0]}{len(chain) + 1}"
        chain.append(new_arc)
        owner[new_arc] = chain
        crossings.append(Crossing(over=left, under_in=right, under_out=new_arc, sign=1))
        left, right = new_arc, left
    strands = [
        Strand("e1", ("b1",)),
        Strand("e2", tuple(e2_arcs)),
        Strand("e3", ("d1",)),
        Strand("e4", ("f1",)),
        Strand("e5", ("g1",)),
        Strand("e6", tuple(e6_arcs)),
    ]
    vertices = [
        Vertex((("d1", "out"), ("b1", "out"), ("c1", "out"))),   # u1
        Vertex((("b1", "in"), ("d1", "in"), ("h1", "out"))),     # u2
        Vertex((("f1", "out"), (left, "in"), ("g1", "out"))),    # w1
        Vertex(((right, "in"), ("f1", "in"), ("g1", "in"))),     # w2
    ]
    return _build("graph", strands, crossings, vertices)
