"""Acceptance criteria, one PASS/FAIL line each.

Run ``pytest tests/test_acceptance.py -s`` to see the lines as they are
produced; they are also collected into a summary section at the end of
any pytest run that includes this module.
"""

from __future__ import annotations

import time

import pytest

import oracles
from pldkernels import (
    acyclic_grundy,
    build_pld,
    cycle,
    enumerate_kernels,
    enumerate_kl_grundy,
    enumerate_kl_kernels,
    enumerate_semikernels,
    fibonacci_number,
    fixture,
    is_kl_grundy,
    random_dag,
    random_digraph,
)
from pldkernels.campaign import CampaignConfig, run_campaign
from pldkernels.fixtures import fig1_pld_reference
from pldkernels.generators import stream_value

CAMPAIGN = CampaignConfig(trials=500, max_n=6, seed=0, pld_cap=200,
                          kl_grid=((2, 1), (2, 2), (3, 1), (3, 2), (3, 3)), independence_ks=(2, 3))


@pytest.fixture(scope="module")
def campaign():
    start = time.perf_counter()
    report = run_campaign(CAMPAIGN)
    return report, time.perf_counter() - start


def violations(report, *keys):
    return {key: len(report.per_theorem[key].violations) for key in keys}


def summary(counts):
    bad = {k: v for k, v in counts.items() if v}
    return "all zero" if not bad else ", ".join(f"{k}: {v}" for k, v in bad.items())


def labelled_arcs(D):
    return {(D.label(u), D.label(v)) for u, v in D.arcs}


def named(D, *groups):
    return sorted(tuple(sorted(D.labels.index(s) for s in g)) for g in groups)


def test_criterion_01_fig1_reconstruction(acceptance):
    start = time.perf_counter()
    L = build_pld(fixture("fig1").pld_map).digraph
    arcs = labelled_arcs(L)
    required = {("21", "42"), ("61", "42"), ("36", "25"), ("13", "54")}
    elapsed = time.perf_counter() - start
    ok = L.n == 9 and len(L.arcs) == 18 and required <= arcs and arcs == labelled_arcs(fig1_pld_reference())
    acceptance(1, "fig1 partial line digraph equals the reference", ok and elapsed < 1,
               f"{L.n} vertices, {len(L.arcs)} arcs, {elapsed:.3f}s")


def test_criterion_02_fig2_counts(acceptance):
    L, R = fixture("fig2_left").digraph, fixture("fig2_right").digraph
    left, right = enumerate_kl_kernels(L, 2, 2), enumerate_kl_kernels(R, 2, 2)
    ok = left == named(L, "x", "z", "yt") and right == named(
        R, ["zx"], ["tz", "yz"], ["xy", "xt"], ["xt", "yz"], ["xy", "tz"])
    acceptance(2, "fig2 quasikernels", ok and len(left) < len(right), f"{len(left)} < {len(right)}")


def test_criterion_03_fig3(acceptance):
    D = fixture("fig3").digraph
    x = D.labels.index("x")
    semi, kern = enumerate_semikernels(D), enumerate_kernels(D)
    acceptance(3, "fig3 semikernel {x}, no kernel", (x,) in semi and kern == [],
               f"semikernels {len(semi)}, kernels {len(kern)}")


def test_criterion_04_fig4(acceptance):
    left = enumerate_semikernels(fixture("fig4_left").digraph)
    right = enumerate_semikernels(fixture("fig4_right").digraph)
    claimed = fixture("fig4_right").claimed_counts["semikernels"]
    ok = len(left) == 3 and 3 <= len(right)
    acceptance(4, "fig4 semikernel counts", ok,
               f"left {len(left)} (expected 3), right {len(right)} (published count {claimed})")


def test_criterion_05_fig5(acceptance):
    ok = all(is_kl_grundy(fx.digraph, fx.grundy, *fx.grundy_kl)
             for fx in (fixture("fig5_left"), fixture("fig5_right")))
    acceptance(5, "fig5 labelings are (k,l)-Grundy functions", ok)


def test_criterion_06_kernel_counts(acceptance, campaign):
    report, elapsed = campaign
    eq = violations(report, "kl_kernel_eq[k=2,l=1]", "kl_kernel_eq[k=3,l=1]", "kl_kernel_eq[k=3,l=2]")
    le = violations(report, "kl_kernel_le[k=2,l=2]", "kl_kernel_le[k=3,l=3]")
    ok = not any(eq.values()) and not any(le.values()) and elapsed < 600
    acceptance(6, "kernel count equality and inequality", ok,
               f"{report.digraphs} digraphs, {report.maps} maps, {elapsed:.0f}s; {summary({**eq, **le})}")


def test_criterion_07_independence(acceptance, campaign):
    report, _ = campaign
    counts = violations(report, "k_independent_le[k=2]", "k_independent_le[k=3]", "fibonacci_le")
    acceptance(7, "k-independent and Fibonacci monotonicity", not any(counts.values()), summary(counts))


def test_criterion_08_semikernels(acceptance, campaign):
    report, _ = campaign
    counts = violations(report, "semikernel_le", "semikernel_exists_iff")
    acceptance(8, "semikernel inequality and existence", not any(counts.values()), summary(counts))


def test_criterion_09_grundy(acceptance, campaign):
    report, _ = campaign
    keys = []
    for k, l in CAMPAIGN.kl_grid:
        if l <= k - 1:
            q = f"[k={k},l={l}]"
            keys += [f"grundy_count_eq{q}", f"grundy_roundtrip{q}", f"grundy_projection_defined{q}"]
    counts = violations(report, *keys)
    acceptance(9, "Grundy count equality and round trips", not any(counts.values()), summary(counts))


def test_criterion_10_acyclic_uniqueness(acceptance):
    start = time.perf_counter()
    failures = 0
    for i in range(100):
        n = 2 + stream_value(10, 2 * i) % 6
        D = random_dag(n, 0.4, stream_value(10, 2 * i + 1))
        if enumerate_kl_grundy(D, 2, 1) != [acyclic_grundy(D)]:
            failures += 1
    elapsed = time.perf_counter() - start
    acceptance(10, "unique Grundy function on DAGs", failures == 0 and elapsed < 30,
               f"{failures} failures, {elapsed:.2f}s")


def test_criterion_11_cycles(acceptance):
    got = {n: (len(enumerate_kl_grundy(cycle(n), 2, 1)), len(enumerate_kernels(cycle(n)))) for n in range(3, 8)}
    want = {3: (0, 0), 4: (2, 2), 5: (0, 0), 6: (2, 2), 7: (0, 0)}
    fib = (fibonacci_number(cycle(3)), fibonacci_number(cycle(4)))
    acceptance(11, "cycle battery", got == want and fib == (4, 7), f"fibonacci C3, C4 = {fib}")


def test_criterion_12_naive_oracles(acceptance):
    start = time.perf_counter()
    mismatches = 0
    for i in range(50):
        n = 2 + stream_value(12, 2 * i) % 3
        D = random_digraph(n, 0.4, stream_value(12, 2 * i + 1))
        for k, l in CAMPAIGN.kl_grid:
            mismatches += enumerate_kl_grundy(D, k, l) != oracles.kl_grundy(D.n, D.arcs, k, l)
            mismatches += enumerate_kl_kernels(D, k, l) != oracles.kl_kernels(D.n, D.arcs, k, l)
        mismatches += enumerate_semikernels(D) != oracles.semikernels(D.n, D.arcs)
    elapsed = time.perf_counter() - start
    acceptance(12, "enumerators agree with naive filters", mismatches == 0 and elapsed < 60,
               f"{mismatches} mismatches, {elapsed:.2f}s")
