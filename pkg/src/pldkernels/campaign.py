"""Theorem campaigns over random digraphs and their partial line digraphs.

For every trial digraph, every enumerated partial line map (up to
``pld_cap``) and every ``(k, l)`` in the grid, the counting theorems are
checked by exhaustive enumeration on both sides.  Inequalities are
checked everywhere; equalities only where their hypotheses hold, and the
other instances are tallied as ``not_applicable``.  A failed check becomes
a violation record carrying the digraph, the map and both families, and
:func:`replay_violation` re-runs that single check from the record.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Optional

from . import domination as dom
from . import grundy as gr
from .digraph import Digraph, girth
from .fixtures import fixture
from .formats import digraph_from_json, digraph_to_json, family_to_json
from .generators import random_digraph, stream_value
from .pld import PartialLineMap, build_pld, enumerate_plds, pld_from_json

log = logging.getLogger(__name__)

DEFAULT_GRID = ((2, 1), (2, 2), (3, 1), (3, 2), (3, 3))


@dataclass(frozen=True)
class CampaignConfig:
    trials: int = 100
    max_n: int = 6
    arc_probability: float = 0.3
    seed: int = 0
    pld_cap: int = 200
    kl_grid: tuple[tuple[int, int], ...] = DEFAULT_GRID
    independence_ks: tuple[int, ...] = (2, 3)
    # run on these fixtures instead of random digraphs
    fixtures: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "kl_grid", tuple(tuple(q) for q in self.kl_grid))
        object.__setattr__(self, "independence_ks", tuple(self.independence_ks))
        object.__setattr__(self, "fixtures", tuple(self.fixtures))
        if not 2 <= self.max_n <= 8:
            raise ValueError("max_n must lie in 2..8")
        if not 0 < self.arc_probability <= 1:
            raise ValueError("arc_probability must lie in (0, 1]")
        if self.trials < 0 or self.pld_cap < 1:
            raise ValueError("trials must be >= 0 and pld_cap >= 1")
        for k, l in self.kl_grid:
            if k < 2 or l < 1:
                raise ValueError(f"grid pair ({k}, {l}) needs k >= 2, l >= 1")
        if any(k < 2 for k in self.independence_ks):
            raise ValueError("independence radii must be >= 2")


@dataclass
class Tally:
    checked: int = 0
    tight: int = 0
    equal: int = 0
    not_applicable: int = 0
    violations: list = field(default_factory=list)

    def merge(self, other: "Tally") -> None:
        self.checked += other.checked
        self.tight += other.tight
        self.equal += other.equal
        self.not_applicable += other.not_applicable
        self.violations.extend(other.violations)


@dataclass
class TheoremReport:
    config: CampaignConfig
    per_theorem: dict[str, Tally] = field(default_factory=dict)
    truncated: bool = False
    digraphs: int = 0
    maps: int = 0

    def tally(self, name: str) -> Tally:
        return self.per_theorem.setdefault(name, Tally())

    def merge(self, other: "TheoremReport") -> None:
        for name, t in other.per_theorem.items():
            self.tally(name).merge(t)
        self.truncated |= other.truncated
        self.digraphs += other.digraphs
        self.maps += other.maps

    @property
    def violations(self) -> list[dict]:
        return [v for t in self.per_theorem.values() for v in t.violations]

    def to_json(self) -> dict:
        per = {}
        for name in sorted(self.per_theorem):
            t = self.per_theorem[name]
            per[name] = {
                "checked": t.checked,
                "tight": t.tight,
                "equal": t.equal,
                "not_applicable": t.not_applicable,
                "violations": sorted(t.violations, key=_violation_key),
            }
        return {
            "config": asdict(self.config),
            "per_theorem": per,
            "truncated": self.truncated,
            "digraphs": self.digraphs,
            "maps": self.maps,
            "violation_count": len(self.violations),
        }


def _violation_key(v: dict):
    return (v.get("trial", -1), v.get("map_index", -1), v["theorem"], str(v.get("query")))


class Families:
    """Lazily enumerated families of one digraph."""

    def __init__(self, D: Digraph):
        self.D = D
        self._cache: dict = {}

    def _get(self, key, fn: Callable):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    def independent(self, k: int):
        return self._get(("ind", k), lambda: dom.enumerate_k_independent_sets(self.D, k, include_empty=True))

    def kernels(self, k: int, l: int):
        return self._get(("ker", k, l), lambda: dom.enumerate_kl_kernels(self.D, k, l))

    def semikernels(self):
        return self._get("semi", lambda: dom.enumerate_semikernels(self.D))

    def grundy(self, k: int, l: int):
        return self._get(("gr", k, l), lambda: gr.enumerate_kl_grundy(self.D, k, l))

    @property
    def girth(self):
        return self._get("girth", lambda: girth(self.D))


class Instance:
    """A base digraph and one partial line map, with both sides' families."""

    def __init__(self, pmap: PartialLineMap, base: Optional[Families] = None):
        self.pmap = pmap
        self.base = base or Families(pmap.base)
        self.pld = Families(build_pld(pmap).digraph)


# -- outcomes -----------------------------------------------------------------

LE_TIGHT, LE_STRICT, EQUAL, NOT_APPLICABLE = "tight", "strict", "equal", "not_applicable"


class Violation(Exception):
    """A failed check.  ``kinds`` says whether each family holds vertex
    sets (``"sets"``) or Grundy labellings (``"labelings"``)."""

    def __init__(self, detail: str, base_family=None, pld_family=None, kinds=("sets", "sets")):
        super().__init__(detail)
        self.detail = detail
        self.base_family = base_family
        self.pld_family = pld_family
        self.kinds = kinds


def _le(a: int, b: int, what: str, base_family=None, pld_family=None) -> str:
    if a > b:
        raise Violation(f"{what}: base count {a} > partial line digraph count {b}", base_family, pld_family)
    return LE_TIGHT if a == b else LE_STRICT


def _eq(a: int, b: int, what: str, base_family=None, pld_family=None) -> str:
    if a != b:
        raise Violation(f"{what}: base count {a} != partial line digraph count {b}", base_family, pld_family)
    return EQUAL


def _f_image(inst: Instance, base_family, pld_family, what: str) -> None:
    """``f`` must send ``base_family`` injectively into ``pld_family``."""
    target = set(pld_family)
    images = set()
    for S in base_family:
        image = dom.map_f(inst.pmap, S)
        if image not in target:
            raise Violation(f"{what}: f{list(S)} = {list(image)} is not in the partial line digraph family",
                            base_family, pld_family)
        images.add(image)
    if len(images) != len(base_family):
        raise Violation(f"{what}: f is not injective", base_family, pld_family)


# -- theorem checks -----------------------------------------------------------
# Each takes (instance, k, l) and returns an outcome string or raises Violation.
# Count claims and map claims are separate checks: a map can fail to be
# well defined while the counts still compare as claimed.


def check_k_independent_le(inst: Instance, k: int, l: int = 0) -> str:
    a, b = inst.base.independent(k), inst.pld.independent(k)
    return _le(len(a), len(b), f"{k}-independent sets", a, b)


def check_k_independent_f(inst: Instance, k: int, l: int = 0) -> str:
    a, b = inst.base.independent(k), inst.pld.independent(k)
    _f_image(inst, a, b, f"{k}-independent sets")
    return EQUAL


def check_fibonacci(inst: Instance, k: int = 2, l: int = 0) -> str:
    a, b = inst.base.independent(2), inst.pld.independent(2)
    return _le(len(a), len(b), "Fibonacci number", a, b)


def check_kernel_le(inst: Instance, k: int, l: int) -> str:
    a, b = inst.base.kernels(k, l), inst.pld.kernels(k, l)
    return _le(len(a), len(b), f"({k},{l})-kernels", a, b)


def check_kernel_f(inst: Instance, k: int, l: int) -> str:
    a, b = inst.base.kernels(k, l), inst.pld.kernels(k, l)
    _f_image(inst, a, b, f"({k},{l})-kernels")
    return EQUAL


def kernel_eq_applies(girth_value, k: int, l: int) -> bool:
    """Hypotheses of the kernel equality: ``l < k`` and girth >= ``l + 1``."""
    return l < k and girth_value >= l + 1


def check_kernel_eq(inst: Instance, k: int, l: int) -> str:
    if not kernel_eq_applies(inst.base.girth, k, l):
        return NOT_APPLICABLE
    a, b = inst.base.kernels(k, l), inst.pld.kernels(k, l)
    return _eq(len(a), len(b), f"({k},{l})-kernels", a, b)


def check_kernel_h(inst: Instance, k: int, l: int) -> str:
    """``h`` maps kernels of the partial line digraph to kernels of the base
    and inverts ``f``."""
    if not kernel_eq_applies(inst.base.girth, k, l):
        return NOT_APPLICABLE
    a, b = inst.base.kernels(k, l), inst.pld.kernels(k, l)
    base_set = set(a)
    for K in a:
        if dom.map_h(inst.pmap, dom.map_f(inst.pmap, K)) != K:
            raise Violation(f"h(f({list(K)})) != {list(K)}", a, b)
    for Khat in b:
        image = dom.map_h(inst.pmap, Khat)
        if image not in base_set:
            raise Violation(f"h{list(Khat)} = {list(image)} is not a ({k},{l})-kernel of the base", a, b)
        if dom.map_f(inst.pmap, image) != Khat:
            raise Violation(f"f(h({list(Khat)})) != {list(Khat)}", a, b)
    return EQUAL


def check_kernel_exists_iff(inst: Instance, k: int, l: int) -> str:
    if not kernel_eq_applies(inst.base.girth, k, l):
        return NOT_APPLICABLE
    a, b = inst.base.kernels(k, l), inst.pld.kernels(k, l)
    return _eq(int(bool(a)), int(bool(b)), f"({k},{l})-kernel existence", a, b)


def check_kernel_count_eq(inst: Instance, k: int = 2, l: int = 1) -> str:
    a, b = inst.base.kernels(2, 1), inst.pld.kernels(2, 1)
    return _eq(len(a), len(b), "kernels", a, b)


def check_quasikernel_le(inst: Instance, k: int = 2, l: int = 2) -> str:
    a, b = inst.base.kernels(2, 2), inst.pld.kernels(2, 2)
    return _le(len(a), len(b), "quasikernels", a, b)


def check_semikernel_le(inst: Instance, k: int = 0, l: int = 0) -> str:
    a, b = inst.base.semikernels(), inst.pld.semikernels()
    return _le(len(a), len(b), "semikernels", a, b)


def check_semikernel_f(inst: Instance, k: int = 0, l: int = 0) -> str:
    a, b = inst.base.semikernels(), inst.pld.semikernels()
    _f_image(inst, a, b, "semikernels")
    return EQUAL


def check_semikernel_exists_iff(inst: Instance, k: int = 0, l: int = 0) -> str:
    a, b = inst.base.semikernels(), inst.pld.semikernels()
    return _eq(int(bool(a)), int(bool(b)), "semikernel existence", a, b)


def check_semikernel_h(inst: Instance, k: int = 0, l: int = 0) -> str:
    """Heads of every semikernel of the partial line digraph form a
    semikernel of the base."""
    a, b = inst.base.semikernels(), inst.pld.semikernels()
    base_set = set(a)
    for S in b:
        if dom.map_h(inst.pmap, S) not in base_set:
            raise Violation(f"heads of semikernel {list(S)} do not form a semikernel", a, b)
    return EQUAL


_LABELINGS = ("labelings", "labelings")


def grundy_eq_applies(k: int, l: int) -> bool:
    return l <= k - 1


def check_grundy_lift(inst: Instance, k: int, l: int) -> str:
    a = inst.base.grundy(k, l)
    pld = inst.pld.D
    for g in a:
        lifted = tuple(g[x] for _, x in inst.pmap.a_prime)
        if not gr.is_kl_grundy(pld, lifted, k, l):
            raise Violation(f"lift of {list(g)} is not a ({k},{l})-Grundy function", a, kinds=("labelings", "sets"))
    return EQUAL


def check_grundy_count_eq(inst: Instance, k: int, l: int) -> str:
    if not grundy_eq_applies(k, l):
        return NOT_APPLICABLE
    a, b = inst.base.grundy(k, l), inst.pld.grundy(k, l)
    if len(a) != len(b):
        raise Violation(f"({k},{l})-Grundy functions: base count {len(a)} != partial line digraph count {len(b)}",
                        a, b, _LABELINGS)
    return EQUAL


def check_grundy_roundtrip(inst: Instance, k: int, l: int) -> str:
    if not grundy_eq_applies(k, l):
        return NOT_APPLICABLE
    a, b = inst.base.grundy(k, l), inst.pld.grundy(k, l)
    pld = inst.pld.D
    try:
        for g in a:
            if gr.project_grundy(inst.pmap, gr.lift_grundy(inst.pmap, g, k, l, pld), k, l, pld) != g:
                raise Violation(f"project(lift({list(g)})) != g", a, b, _LABELINGS)
        for h in b:
            if gr.lift_grundy(inst.pmap, gr.project_grundy(inst.pmap, h, k, l, pld), k, l, pld) != h:
                raise Violation(f"lift(project({list(h)})) != h", a, b, _LABELINGS)
    except gr.GrundyError as exc:
        raise Violation(f"{type(exc).__name__}: {exc}", a, b, _LABELINGS) from None
    return EQUAL


def check_grundy_projection(inst: Instance, k: int, l: int) -> str:
    """Projection of every Grundy function of the partial line digraph is
    well defined (never raises :class:`IllDefinedProjection`)."""
    if not grundy_eq_applies(k, l):
        return NOT_APPLICABLE
    a, b = inst.base.grundy(k, l), inst.pld.grundy(k, l)
    for h in b:
        try:
            gr.project_grundy(inst.pmap, h, k, l, inst.pld.D)
        except gr.IllDefinedProjection as exc:
            raise Violation(f"IllDefinedProjection for {list(h)}: {exc}", a, b, _LABELINGS) from None
        except gr.NotAGrundyFunction:
            pass  # caught by grundy_roundtrip
    return EQUAL


def check_grundy_zero_kernel(inst: Instance, k: int, l: int) -> str:
    sides = [("base", inst.base)]
    if grundy_eq_applies(k, l):
        sides.append(("partial line digraph", inst.pld))
    for side, fam in sides:
        kernels = set(fam.kernels(k, l))
        for g in fam.grundy(k, l):
            zero = tuple(x for x, t in enumerate(g) if t == 0)
            if zero not in kernels:
                raise Violation(f"zero set of {list(g)} on the {side} is not a ({k},{l})-kernel",
                                fam.grundy(k, l), fam.kernels(k, l), ("labelings", "sets"))
    return EQUAL


# name -> (check, which queries: "grid", "ind", or None for a single run)
THEOREMS: dict[str, tuple[Callable, Optional[str]]] = {
    "k_independent_le": (check_k_independent_le, "ind"),
    "k_independent_f_injective": (check_k_independent_f, "ind"),
    "fibonacci_le": (check_fibonacci, None),
    "kl_kernel_le": (check_kernel_le, "grid"),
    "kl_kernel_f_injective": (check_kernel_f, "grid"),
    "kl_kernel_eq": (check_kernel_eq, "grid"),
    "kl_kernel_h_inverse": (check_kernel_h, "grid"),
    "kl_kernel_exists_iff": (check_kernel_exists_iff, "grid"),
    "kernel_count_eq": (check_kernel_count_eq, None),
    "quasikernel_le": (check_quasikernel_le, None),
    "semikernel_le": (check_semikernel_le, None),
    "semikernel_f_injective": (check_semikernel_f, None),
    "semikernel_exists_iff": (check_semikernel_exists_iff, None),
    "semikernel_h_image": (check_semikernel_h, None),
    "grundy_lift": (check_grundy_lift, "grid"),
    "grundy_count_eq": (check_grundy_count_eq, "grid"),
    "grundy_roundtrip": (check_grundy_roundtrip, "grid"),
    "grundy_projection_defined": (check_grundy_projection, "grid"),
    "grundy_zero_kernel": (check_grundy_zero_kernel, "grid"),
}


def theorem_key(name: str, query: Optional[tuple[int, int]]) -> str:
    if query is None:
        return name
    if THEOREMS[name][1] == "ind":
        return f"{name}[k={query[0]}]"
    return f"{name}[k={query[0]},l={query[1]}]"


def _queries(cfg: CampaignConfig, scope: Optional[str]) -> list[Optional[tuple[int, int]]]:
    if scope == "grid":
        return list(cfg.kl_grid)
    if scope == "ind":
        return [(k, 0) for k in cfg.independence_ks]
    return [None]


def run_check(name: str, inst: Instance, query: Optional[tuple[int, int]]) -> str:
    check = THEOREMS[name][0]
    return check(inst, *query) if query is not None else check(inst)


def check_instance(report: TheoremReport, inst: Instance, trial: int, map_index: int) -> None:
    for name, (_, scope) in THEOREMS.items():
        for query in _queries(report.config, scope):
            t = report.tally(theorem_key(name, query))
            try:
                outcome = run_check(name, inst, query)
            except Violation as v:
                t.checked += 1
                t.violations.append(_record(name, query, inst, trial, map_index, v))
                continue
            if outcome == NOT_APPLICABLE:
                t.not_applicable += 1
                continue
            t.checked += 1
            if outcome == LE_TIGHT:
                t.tight += 1
            elif outcome == EQUAL:
                t.equal += 1


def _record(name, query, inst: Instance, trial: int, map_index: int, v: Violation) -> dict:
    return {
        "theorem": name,
        "query": None if query is None else {"k": query[0], "l": query[1]},
        "trial": trial,
        "map_index": map_index,
        "digraph": digraph_to_json(inst.pmap.base),
        "map": inst.pmap.to_json(),
        "detail": v.detail,
        "base_girth": _girth_json(inst.base.girth),
        "base_family": _family_json(v.base_family, v.kinds[0]),
        "pld_family": _family_json(v.pld_family, v.kinds[1]),
    }


def _girth_json(value):
    return None if value == float("inf") else int(value)


def _family_json(family, kind: str):
    if family is None:
        return None
    if kind == "labelings":
        return [list(g) for g in family]
    return family_to_json(family)


def replay_violation(record: dict) -> bool:
    """Re-run the recorded check on the recorded instance; True if it
    still fails."""
    base = digraph_from_json(record["digraph"])
    pmap = pld_from_json(base, record["map"])
    q = record.get("query")
    query = None if q is None else (q["k"], q["l"])
    try:
        run_check(record["theorem"], Instance(pmap), query)
    except Violation:
        return True
    return False


def _trial_digraph(cfg: CampaignConfig, trial: int) -> Digraph:
    if cfg.fixtures:
        return fixture(cfg.fixtures[trial % len(cfg.fixtures)]).digraph
    n = 2 + stream_value(cfg.seed, 2 * trial) % (cfg.max_n - 1)
    return random_digraph(n, cfg.arc_probability, stream_value(cfg.seed, 2 * trial + 1))


def _run_trials(cfg: CampaignConfig, trials: range) -> TheoremReport:
    report = TheoremReport(cfg)
    for trial in trials:
        D = _trial_digraph(cfg, trial)
        batch = enumerate_plds(D, cfg.pld_cap)
        report.truncated |= batch.truncated
        report.digraphs += 1
        base = Families(D)
        for i, pmap in enumerate(batch.maps):
            check_instance(report, Instance(pmap, base), trial, i)
            report.maps += 1
    return report


def _trial_count(cfg: CampaignConfig) -> int:
    return len(cfg.fixtures) if cfg.fixtures and cfg.trials == 0 else cfg.trials


def run_campaign(cfg: CampaignConfig, workers: int = 1) -> TheoremReport:
    """Run every check on every trial.  The report depends only on ``cfg``;
    ``workers > 1`` splits the trials over processes."""
    total = _trial_count(cfg)
    if workers <= 1 or total < 2:
        report = _run_trials(cfg, range(total))
    else:
        chunks = [range(s, total, workers) for s in range(workers)]
        report = TheoremReport(cfg)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_run_trials, [cfg] * len(chunks), chunks):
                report.merge(part)
    for t in report.per_theorem.values():
        t.violations.sort(key=_violation_key)
    log.info("campaign: %d digraphs, %d maps, %d violations", report.digraphs, report.maps, len(report.violations))
    return report
