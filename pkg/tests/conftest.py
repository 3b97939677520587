from __future__ import annotations

import pytest
from hypothesis import strategies as st

from pldkernels import build_digraph

ACCEPTANCE_LINES: list[str] = []


@st.composite
def digraphs(draw, min_n=2, max_n=5, in_degree_one=True):
    """Small simple loopless digraphs; with ``in_degree_one`` every vertex
    gets at least one in-arc."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    arcs = set(draw(st.lists(st.sampled_from(pairs), max_size=len(pairs)))) if pairs else set()
    if in_degree_one:
        for v in range(n):
            if not any(b == v for _, b in arcs):
                u = draw(st.sampled_from([u for u in range(n) if u != v]))
                arcs.add((u, v))
    return build_digraph(n, arcs)


@pytest.fixture
def acceptance():
    def record(number: int, title: str, passed: bool, detail: str = "") -> None:
        status = "PASS" if passed else "FAIL"
        line = f"[{status}] criterion {number:>2}: {title}"
        if detail:
            line += f" ({detail})"
        print(line)
        ACCEPTANCE_LINES.append(line)
        assert passed, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
