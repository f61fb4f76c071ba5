"""Acceptance gate: ten criteria, each with a time limit and a PASS/FAIL line in the terminal summary."""

import random
import time

import pytest

from conftest import ACCEPTANCE_LINES
from oracles import brute_monochromatic_paths, is_hamiltonian_nx
from mckec.coloring import EdgeColoring, count_monochromatic_paths, is_mc_k
from mckec.constructions import (
    decompose_bipartite,
    decompose_complete_even,
    decompose_complete_odd,
    kkn_mc_coloring,
)
from mckec.graph import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    graph_corpus,
    petersen,
    random_connected,
)
from mckec.harness import COUNTEREXAMPLE, hamiltonicity_via_umc2, run_conjecture
from mckec.kecss import mader_checks, minimalize, minimum_kecss
from mckec.packing import packing_coloring, psi_oracle, tree_packing_number
from mckec.search import exact_mc_k, exact_umc_k

SEED = 20240601


def report(number, title, ok, elapsed, limit, detail=""):
    passed = ok and elapsed < limit
    line = f"ACCEPTANCE {number:>2} {'PASS' if passed else 'FAIL'}  {title}  ({elapsed:.1f}s / {limit}s) {detail}".rstrip()
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line
    assert elapsed < limit, line


@pytest.fixture(scope="module")
def sweeps():
    out = {}
    for k in (2, 3):
        t = time.perf_counter()
        out[k] = (run_conjecture(graph_corpus(5, k), k), time.perf_counter() - t)
    return out


def test_01_mc2_formula():
    t = time.perf_counter()
    bad, corpus = [], graph_corpus(5, 2)
    for g in corpus:
        h = minimum_kecss(g, 2)
        mc = exact_mc_k(g, 2)
        if not (h.exact and mc.exact and mc.value == g.m - h.size + 1):
            bad.append(g)
    report(1, "mc_2 = e - e(H) + 1 on 2-edge-connected n<=5", not bad, time.perf_counter() - t, 300,
           f"[{len(corpus)} graphs, {len(bad)} failures]")


def test_02_umc_formula():
    t = time.perf_counter()
    bad, total = [], 0
    for k in (2, 3):
        for g in graph_corpus(5, k):
            total += 1
            h = minimum_kecss(g, k)
            umc = exact_umc_k(g, k)
            if not (h.exact and umc.exact and umc.value == g.m - h.size + 1):
                bad.append((k, g))
    report(2, "umc_k = e - e(H) + 1 for k=2,3 on n<=5", not bad, time.perf_counter() - t, 600,
           f"[{total} (graph, k) cases, {len(bad)} failures]")


def test_03_mc4_k5():
    t = time.perf_counter()
    r = exact_mc_k(complete(5), 4, seeded=False)
    ok = r.exact and r.value == 2 and is_mc_k(complete(5), r.witness, 4).passed
    report(3, "mc_4(K_5) = 2 by full search", ok, time.perf_counter() - t, 300,
           f"[value {r.value}, {r.explored} nodes]")


def test_04_mc3_k33():
    t = time.perf_counter()
    r = exact_mc_k(complete_bipartite(3, 3), 3, seeded=False)
    report(4, "mc_3(K_{3,3}) = 1", r.exact and r.value == 1, time.perf_counter() - t, 300,
           f"[value {r.value}]")


def test_05_constructions():
    t = time.perf_counter()
    ok = True
    for n in (1, 2, 3):
        for make in (decompose_complete_odd, decompose_complete_even):
            g, d = make(n)
            d.validate(g)
    for n in (1, 2):
        for odd in (False, True):
            g, d = decompose_bipartite(n, odd)
            d.validate(g)
    g, c = kkn_mc_coloring(4, 6)
    ok &= c.num_colors == 2 and is_mc_k(g, c, 4).passed
    k6 = complete(6)
    c = packing_coloring(k6, 3)
    ok &= c.num_colors == 3 and is_mc_k(k6, c, 3).passed
    report(5, "decompositions valid; K_{4,6} and K_6 colorings verify", ok, time.perf_counter() - t, 60)


def test_06_nash_williams_tutte():
    t = time.perf_counter()
    rng = random.Random(SEED)
    pool = [random_connected(rng.randint(2, 7), rng, rng.uniform(0.3, 0.9)) for _ in range(100)]
    pool += [complete(n) for n in range(2, 8)]
    pool += [cycle(n) for n in range(3, 8)]
    pool += [complete_bipartite(a, b) for a in range(1, 7) for b in range(a, 8 - a)]
    bad = [g for g in pool if tree_packing_number(g)[0] != psi_oracle(g).Psi]
    report(6, "tree packing number = floor(psi)", not bad, time.perf_counter() - t, 300,
           f"[{len(pool)} graphs, {len(bad)} failures]")


def test_07_verifier_oracle():
    t = time.perf_counter()
    rng = random.Random(SEED)
    bad, done = 0, 0
    while done < 200:
        n = rng.randint(2, 6)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        edges = sorted(rng.sample(pairs, rng.randint(1, min(8, len(pairs)))))
        g = Graph(n, tuple(edges))
        c = EdgeColoring.from_colors(rng.randrange(3) for _ in range(g.m))
        u, v = rng.choice(pairs)
        if count_monochromatic_paths(g, c, u, v)[0] != brute_monochromatic_paths(g, c.assignment, u, v):
            bad += 1
        done += 1
    report(7, "path counts equal exhaustive monochromatic path packing", bad == 0, time.perf_counter() - t, 120,
           f"[{done} instances, {bad} failures]")


def test_08_hamiltonicity():
    t = time.perf_counter()
    corpus = graph_corpus(6, 2, n_min=3)
    bad = []
    for g in corpus:
        r = hamiltonicity_via_umc2(g)
        if not (r.agrees and r.hamiltonian == is_hamiltonian_nx(g)):
            bad.append(g)
    p = hamiltonicity_via_umc2(petersen())
    ok = not bad and len(corpus) >= 50 and p.agrees and not p.hamiltonian and p.umc2 == 5 and p.e_h == 11
    report(8, "Hamiltonian iff umc_2 = e - n + 1", ok, time.perf_counter() - t, 900,
           f"[{len(corpus)} graphs + Petersen, {len(bad)} disagreements]")


def test_09_mader_and_bounds(sweeps):
    t = time.perf_counter()
    violations = []
    for k in (2, 3):
        for g in graph_corpus(6, k):
            h = minimalize(g, k)
            sub = Graph(g.n, tuple(g.edges[i] for i in h.edges))
            mr = mader_checks(sub, k)
            if not (mr.is_minimal and mr.consistent):
                violations.append(("minimalize", k, g))
        for rec in sweeps[k][0].records:
            if not (rec.mc_exact and rec.umc_exact):
                continue
            e, n = rec.m, rec.n
            if not (e - k * (n - 1) + 1 <= rec.umc and 2 * rec.umc <= 2 * e - k * n + 2):
                violations.append(("sandwich", k, rec.graph))
            if rec.mc < rec.umc:
                violations.append(("umc<=mc", k, rec.graph))
        for g in graph_corpus(5, k):
            if mader_checks(g, k).is_minimal and exact_mc_k(g, k).value > k - 1:
                violations.append(("minimal bound", k, g))
    elapsed = time.perf_counter() - t + sweeps[2][1] + sweeps[3][1]
    report(9, "Mader properties and mc/umc bounds", not violations, elapsed, 600,
           f"[{len(violations)} violations]")


def test_10_conjecture_sweep(sweeps):
    records = sweeps[2][0].records + sweeps[3][0].records
    elapsed = sweeps[2][1] + sweeps[3][1]
    counterexamples = sum(r.status == COUNTEREXAMPLE for r in records)
    conclusive = sum(r.conclusive for r in records)
    ok = counterexamples == 0 and conclusive >= 0.9 * len(records)
    report(10, "conjecture sweep k=2,3 on n<=5", ok, elapsed, 1800,
           f"[{len(records)} records, {conclusive} conclusive, {counterexamples} counterexamples]")
