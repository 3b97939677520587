"""Reference digraphs ``fig1`` ... ``fig5_right``, given arc by arc.

Vertex ids are 0-based; ``labels`` carry the conventional vertex names.
In ``fig4_left`` vertex 3 is the sink and 5 is the digon partner of 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .digraph import Digraph, build_digraph
from .grundy import Labeling
from .pld import PartialLineMap, validate_pld


class UnknownFixture(KeyError):
    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self) -> str:
        return f"unknown fixture {self.name!r}; choose from {', '.join(FIXTURE_NAMES)}"


@dataclass(frozen=True)
class Fixture:
    name: str
    digraph: Digraph
    pld_map: Optional[PartialLineMap] = None
    grundy: Optional[Labeling] = None
    grundy_kl: Optional[tuple[int, int]] = None
    # published counts for this example, keyed by family name
    claimed_counts: dict = field(default_factory=dict)


def _named(names: str | list[str], arcs: list[tuple[str, str]]) -> Digraph:
    names = list(names)
    idx = {s: i for i, s in enumerate(names)}
    return build_digraph(len(names), [(idx[a], idx[b]) for a, b in arcs], names)


def _numbered(n: int, arcs: list[tuple[int, int]], labels: list[str] | None = None) -> Digraph:
    return build_digraph(n, [(a - 1, b - 1) for a, b in arcs], labels or [str(i) for i in range(1, n + 1)])


FIG1_ARCS = [(1, 3), (3, 6), (6, 1), (2, 5), (5, 4), (4, 2), (2, 1), (1, 2), (3, 4), (4, 3), (5, 6), (6, 5)]
FIG1_DROPPED = {(1, 2): (4, 2), (3, 4): (5, 4), (6, 5): (2, 5)}
# the expected partial line digraph, arcs between two-digit vertex names
FIG1_PLD_ARCS = [
    ("25", "54"), ("54", "42"), ("42", "25"), ("13", "36"), ("36", "61"), ("61", "13"),
    ("21", "13"), ("56", "61"), ("43", "36"), ("25", "56"), ("42", "21"), ("54", "43"),
    ("21", "42"), ("56", "25"), ("43", "54"), ("61", "42"), ("36", "25"), ("13", "54"),
]

FIG2_LEFT_ARCS = [("x", "t"), ("t", "z"), ("x", "y"), ("y", "z"), ("z", "x")]
FIG2_RIGHT_NAMES = ["xy", "zx", "yz", "tz", "xt"]
FIG2_RIGHT_ARCS = [("xy", "yz"), ("yz", "zx"), ("zx", "xy"), ("tz", "zx"), ("xt", "tz"), ("zx", "xt")]

FIG3_ARCS = [(2, 1), (1, 3), (3, 7), (7, 6), (6, 2), (4, 1), (1, 5), (5, 9), (9, 8), (8, 4), (8, 9)]
FIG3_LABELS = ["1", "2", "3", "4", "5", "6", "7", "8", "x"]

# arc number -> arc; the numbers name the line digraph's vertices
FIG4_LEFT_ARCS = {1: (1, 5), 2: (5, 1), 3: (1, 2), 4: (1, 4), 5: (2, 3), 6: (4, 3)}
FIG4_RIGHT_ARCS = [(1, 2), (2, 1), (2, 3), (2, 4), (3, 5), (4, 6)]

FIG5_LEFT_VALUES = {"x": 2, "y": 0, "z": 1, "t": 0}
FIG5_RIGHT_VALUES = {"xy": 2, "zx": 1, "yz": 0, "tz": 0, "xt": 2}


def _fig1() -> Fixture:
    D = _numbered(6, FIG1_ARCS)
    a_prime = [(a - 1, b - 1) for a, b in FIG1_ARCS if (a, b) not in FIG1_DROPPED]
    phi = {(a - 1, b - 1): (c - 1, d - 1) for (a, b), (c, d) in FIG1_DROPPED.items()}
    return Fixture("fig1", D, pld_map=validate_pld(D, a_prime, phi))


def fig1_pld_reference() -> Digraph:
    """The expected partial line digraph of ``fig1``, built independently."""
    names = sorted({s for arc in FIG1_PLD_ARCS for s in arc})
    return _named(names, FIG1_PLD_ARCS)


def _fig2_left() -> Fixture:
    return Fixture("fig2_left", _named("xyzt", FIG2_LEFT_ARCS), claimed_counts={"quasikernels": 3})


def _fig2_right() -> Fixture:
    return Fixture("fig2_right", _named(FIG2_RIGHT_NAMES, FIG2_RIGHT_ARCS), claimed_counts={"quasikernels": 5})


def _fig3() -> Fixture:
    return Fixture("fig3", _numbered(9, FIG3_ARCS, FIG3_LABELS), claimed_counts={"kernels": 0})


def _fig4_left() -> Fixture:
    return Fixture("fig4_left", _numbered(5, list(FIG4_LEFT_ARCS.values())), claimed_counts={"semikernels": 3})


def _fig4_right() -> Fixture:
    return Fixture("fig4_right", _numbered(6, FIG4_RIGHT_ARCS), claimed_counts={"semikernels": 6})


def _fig5_left() -> Fixture:
    D = _named("xyzt", FIG2_LEFT_ARCS)
    g = tuple(FIG5_LEFT_VALUES[D.label(v)] for v in range(D.n))
    return Fixture("fig5_left", D, grundy=g, grundy_kl=(2, 2))


def _fig5_right() -> Fixture:
    D = _named(FIG2_RIGHT_NAMES, FIG2_RIGHT_ARCS)
    g = tuple(FIG5_RIGHT_VALUES[D.label(v)] for v in range(D.n))
    return Fixture("fig5_right", D, grundy=g, grundy_kl=(3, 2))


_BUILDERS = {
    "fig1": _fig1,
    "fig2_left": _fig2_left,
    "fig2_right": _fig2_right,
    "fig3": _fig3,
    "fig4_left": _fig4_left,
    "fig4_right": _fig4_right,
    "fig5_left": _fig5_left,
    "fig5_right": _fig5_right,
}
FIXTURE_NAMES = tuple(_BUILDERS)


def fixture(name: str) -> Fixture:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise UnknownFixture(name) from None
