"""Quandles, N-quandles and quotient groups of links and spatial graphs.

The pipeline: parse a diagram, read off its Wirtinger quandle and group
presentations, enumerate cosets of the peripheral subgroups in the
meridian-power quotient of the fundamental group, and assemble the
finite N-quandle as explicit operation tables.  A saturation oracle
recomputes small quandles directly from the presentation as an
independent check, and a catalog answers finiteness queries for the
known families.
"""

from .diagram import (
    Crossing,
    Diagram,
    DiagramError,
    NLabeling,
    Strand,
    Vertex,
    longitude,
    meridian,
    parse_diagram,
    parse_n_labeling,
    validate,
)
from .freeword import EMPTY, FreeWord, Generator, QuandleTerm, left_associate
from .presentation import (
    GroupPresentation,
    QuandlePresentation,
    QuandleRelation,
    conj_group,
    conj_n_group,
    fundamental_group,
    n_quandle_presentation,
    quotient_group_n,
    wirtinger_quandle,
)
from .coset import (
    CosetTable,
    EnumerationError,
    EnumerationLimit,
    LimitExceeded,
    enumerate_cosets,
    group_order,
    trace,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
