"""Acceptance suite: nine binding criteria, one pass/fail line each.

Every expected value is produced by an independent oracle or is an exact
identity; no tolerance is applied anywhere.
"""

import random
import statistics
import time
from itertools import combinations

from k5edge.audit import (
    audit_adjacency,
    audit_neighborhood,
    contract_2_vertices_map,
    detect_sz_configs,
    edge_bound_checks,
    is_delta_critical_oracle,
)
from k5edge.color import SolveBudget, chromatic_index_exact, validate_coloring, vizing_color
from k5edge.discharge import (
    DischargingContext,
    apply_rules,
    check_hypotheses,
    find_configuration,
    initial_charges,
    make_context,
    verify_outcome,
)
from k5edge.embed import build_embedding, charge_identity_terms
from k5edge.generate import random_connected_planar, sample_k5_free
from k5edge.graph import build_graph, induced_subgraph
from k5edge.minor import (
    has_k5_minor,
    is_planar,
    is_planar_triangulation,
    is_wagner,
    maximalize_k5_free,
    wagner_graph,
)
from k5edge.treedec import tree_decompose_3simple, validate_tree_decomposition

from oracles import (
    connected_graphs_max_edges,
    connected_graphs_max_n,
    k5_minor_exhaustive,
    naive_chromatic_index,
)


def report(num: int, ok: bool, detail: str) -> None:
    verdict = "PASS" if ok else "FAIL"
    print(f"\nACCEPTANCE {num}: {verdict} - {detail}")
    assert ok, f"criterion {num}: {detail}"


def test_acceptance_1_theorem_desk_scale():
    """100 generated K5-minor-free graphs with Delta >= 7, n <= 24:
    exact chromatic index equals Delta; median time <= 10 s, budget 60 s."""
    rng = random.Random(101)
    times = []
    failures = []
    for i in range(100):
        n = rng.randint(10, 20)
        parts = rng.randint(1, 2)
        attempt = 0
        while True:
            g = sample_k5_free(
                n_target=n, parts=parts,
                wagner_probability=rng.choice([0.0, 0.2, 0.4]),
                delete_fraction=rng.choice([0.0, 0.0, 0.1]),
                seed=1000 + i + 100_000 * attempt, min_delta=7)
            if g.n <= 24:
                break
            attempt += 1
        assert g.n <= 24 and g.max_degree() >= 7
        t0 = time.monotonic()
        res = chromatic_index_exact(g, SolveBudget(time_limit_ms=60_000))
        times.append(time.monotonic() - t0)
        if res.status != "ok" or res.chromatic_index != g.max_degree():
            failures.append((i, res.status, res.chromatic_index, g.max_degree()))
    median = statistics.median(times)
    ok = not failures and median <= 10.0
    report(1, ok,
           f"{100 - len(failures)}/100 instances class 1, "
           f"median {median:.3f} s, max {max(times):.3f} s"
           + (f", failures {failures[:3]}" if failures else ""))


def test_acceptance_2_vizing_gupta_bound():
    """1000 random graphs (n <= 40, p in 0.2/0.5): constructive coloring
    validates and uses at most Delta+1 colors."""
    rng = random.Random(202)
    bad = 0
    for _ in range(1000):
        n = rng.randint(2, 40)
        p = rng.choice([0.2, 0.5])
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < p]
        g = build_graph(n, edges)
        if g.m == 0:
            continue
        c = vizing_color(g)
        valid, _ = validate_coloring(g, c)
        if not valid or c.palette > g.max_degree() + 1:
            bad += 1
    report(2, bad == 0, f"1000 graphs, {bad} bound/validity violations")


def test_acceptance_3_exact_solver_oracle_equivalence():
    """All connected graphs with m <= 10 (one per isomorphism class):
    chromatic_index_exact matches naive enumeration exactly."""
    corpus = connected_graphs_max_edges(10)
    mismatches = []
    for g in corpus:
        got = chromatic_index_exact(g).chromatic_index
        want = naive_chromatic_index(g)
        if got != want:
            mismatches.append((g.n, g.edges, got, want))
    report(3, not mismatches,
           f"{len(corpus)} graphs compared, {len(mismatches)} mismatches"
           + (f", first {mismatches[0]}" if mismatches else ""))


def test_acceptance_4_charge_identities():
    """200 random plane embeddings: initial and final charge totals are
    exactly zero and the vertex/face term identity equals -12."""
    bad = 0
    for seed in range(200):
        n = random.Random(seed).randint(5, 20)
        g = random_connected_planar(n, seed=seed,
                                    delete_fraction=(seed % 5) / 10)
        planar, emb = is_planar(g)
        assert planar and emb is not None
        vsum, fsum = charge_identity_terms(emb)
        contexts = [DischargingContext(embedding=emb, Y=frozenset())]
        outer = sorted(set(emb.faces[emb.outer_face]))
        singles = [v for v in outer]
        if singles:
            contexts.append(make_context(emb, [singles[0]]))
        for ctx in contexts:
            led0 = initial_charges(ctx)
            led = apply_rules(ctx, led0)
            out = verify_outcome(led)
            if led0.total() != 0 or not out.conserved or vsum + fsum != -12:
                bad += 1
    report(4, bad == 0, f"200 embeddings, {bad} identity violations")


def _heavy_icosahedron():
    """Icosahedron with a 3-vertex inserted into 8 faces chosen to cover
    each original vertex exactly twice: all original vertices reach
    degree 7, and the hypotheses of the planar lemma hold for many
    (f0, Y) choices."""
    import networkx as nx
    g = build_graph(12, list(nx.icosahedral_graph().edges()))
    planar, emb = is_planar(g)
    assert planar
    faces = [tuple(sorted(set(w))) for w in emb.faces]

    def search(idx, chosen, count):
        if len(chosen) == 8:
            return list(chosen) if all(c == 2 for c in count) else None
        if idx == len(faces):
            return None
        found = search(idx + 1, chosen, count)
        if found:
            return found
        f = faces[idx]
        if all(count[v] < 2 for v in f):
            for v in f:
                count[v] += 1
            chosen.append(idx)
            found = search(idx + 1, chosen, count)
            chosen.pop()
            for v in f:
                count[v] -= 1
            if found:
                return found
        return None

    selected = search(0, [], [0] * 12)
    assert selected is not None
    edges = list(g.edges)
    n = 12
    for i in selected:
        edges.extend((v, n) for v in faces[i])
        n += 1
    return build_graph(n, edges)


def _admissible_ys(g, emb, face_id):
    walk = sorted(set(emb.faces[face_id]))
    for size in (1, 2, 3):
        for ys in combinations(walk, size):
            if any(g.has_edge(u, v) for u, v in combinations(ys, 2)):
                continue
            if any(e[0] not in ys and e[1] not in ys for e in g.edges):
                yield ys


def test_acceptance_5_lemma_implication():
    """Plane corpus with Delta <= 7: whenever the hypotheses pass for an
    admissible Y, a reducible configuration exists."""
    graphs = []
    for seed in range(60):
        g = random_connected_planar(random.Random(seed).randint(6, 14),
                                    seed=300 + seed)
        if g.max_degree() <= 7:
            graphs.append(g)
    for seed in range(60):
        g = sample_k5_free(n_target=random.Random(seed).randint(10, 14),
                           parts=1, seed=400 + seed,
                           delete_fraction=0.1 * (seed % 3), min_delta=7)
        if g.max_degree() == 7 and is_planar(g)[0]:
            graphs.append(g)
    graphs.append(_heavy_icosahedron())
    checked = hits = 0
    counterexamples = []
    for g in graphs:
        planar, emb = is_planar(g)
        assert planar
        rotation = [list(r) for r in emb.rotation]
        for face_id in range(len(emb.faces)):
            emb_f = build_embedding(g, rotation, face_id)
            for ys in _admissible_ys(g, emb_f, face_id):
                rep = check_hypotheses(g, list(ys), "planar-lemma1", emb_f)
                checked += 1
                if not rep.passed:
                    continue
                hits += 1
                members = [v for v in range(g.n) if v not in ys]
                if find_configuration(g, members) is None:
                    counterexamples.append((g.edges, ys))
    report(5, not counterexamples,
           f"{len(graphs)} plane graphs, {checked} (graph, f0, Y) triples, "
           f"{hits} with hypotheses satisfied, "
           f"{len(counterexamples)} missing configurations")


def test_acceptance_6_critical_detector_soundness():
    """All connected graphs n <= 7: detectors never fire on a graph the
    exact oracle certifies Delta-critical."""
    t0 = time.monotonic()
    corpus = connected_graphs_max_n(7)
    critical = 0
    cycles_seen = set()
    violations = []
    for g in corpus:
        if g.m < 2:
            continue
        cert = is_delta_critical_oracle(g)
        if cert.status != "critical":
            continue
        critical += 1
        if g.m == g.n and g.max_degree() == 2:
            cycles_seen.add(g.n)
        findings = (audit_adjacency(g) + audit_neighborhood(g)
                    + detect_sz_configs(g)
                    + edge_bound_checks(g, not has_k5_minor(g)))
        if findings:
            violations.append((g.n, g.edges, [f.lemma for f in findings]))
    elapsed = time.monotonic() - t0
    ok = (not violations and {5, 7} <= cycles_seen and elapsed <= 600)
    report(6, ok,
           f"{len(corpus)} graphs, {critical} critical "
           f"(odd cycles {sorted(cycles_seen)}), "
           f"{len(violations)} detector violations, {elapsed:.0f} s"
           + (f", first {violations[0]}" if violations else ""))


def test_acceptance_7_minor_tester_equivalence():
    """has_k5_minor agrees with the exhaustive branch-set oracle on
    10^4 sampled graphs with n <= 8 plus edge-maximal fixtures;
    Petersen is positive and Wagner negative."""
    rng = random.Random(707)
    mismatches = []
    for i in range(10_000):
        n = rng.randint(5, 8)
        p = rng.choice([0.3, 0.5, 0.7, 0.9])
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < p]
        g = build_graph(n, edges)
        if has_k5_minor(g) != k5_minor_exhaustive(g):
            mismatches.append((n, g.edges))
    fixtures = [wagner_graph()]
    for i in range(30):
        n = rng.randint(5, 8)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < 0.3]
        g = build_graph(n, edges)
        if not k5_minor_exhaustive(g):
            fixtures.append(maximalize_k5_free(g))
    for g in fixtures:
        if has_k5_minor(g) != k5_minor_exhaustive(g):
            mismatches.append(("fixture", g.edges))
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    petersen = build_graph(10, outer + spokes + inner)
    named_ok = has_k5_minor(petersen) and not has_k5_minor(wagner_graph())
    report(7, not mismatches and named_ok,
           f"10000 sampled + {len(fixtures)} edge-maximal fixtures, "
           f"{len(mismatches)} disagreements, "
           f"Petersen={has_k5_minor(petersen)}, Wagner={has_k5_minor(wagner_graph())}")


def test_acceptance_8_decomposition_soundness():
    """50 generated edge-maximal K5-minor-free graphs: decompositions
    satisfy the tree-decomposition axioms with <= 3-clique separators,
    parts are triangulations or Wagner, and m <= 3n-6."""
    rng = random.Random(808)
    bad = []
    for i in range(50):
        g = sample_k5_free(n_target=rng.randint(8, 22), parts=rng.randint(1, 3),
                           wagner_probability=rng.choice([0.0, 0.3, 0.6]),
                           seed=2000 + i)
        try:
            td = tree_decompose_3simple(g)
            validate_tree_decomposition(g, td)
        except Exception as exc:  # noqa: BLE001 - any failure is a criterion failure
            bad.append((i, str(exc)))
            continue
        if any(len(s) > 3 for s in td.separators) or g.m > 3 * g.n - 6:
            bad.append((i, "separator or edge bound"))
            continue
        for bag in td.bags:
            if len(bag) <= 4:
                continue
            part, _ = induced_subgraph(g, bag)
            if not (is_planar_triangulation(part) or is_wagner(part)):
                bad.append((i, f"bag {sorted(bag)} not triangulation/Wagner"))
                break
    report(8, not bad, f"50 decompositions, {len(bad)} failures"
           + (f", first {bad[0]}" if bad else ""))


def test_acceptance_9_reduction_contracts():
    """contract_2_vertices on 50 subdivision fixtures: output is simple,
    degrees drop by at most one, and K5-minor-freeness is preserved for
    n <= 12 inputs."""
    rng = random.Random(909)
    bad = []
    for i in range(50):
        base = sample_k5_free(n_target=rng.randint(5, 9),
                              parts=rng.randint(1, 2), seed=3000 + i)
        assert base.min_degree() >= 3
        # subdivide a random matching: the new 2-vertices are independent
        edges = list(base.edges)
        rng.shuffle(edges)
        chosen = edges[:rng.randint(1, 3)]
        n = base.n
        new_edges = [e for e in base.edges if e not in chosen]
        for u, v in chosen:
            new_edges += [(u, n), (v, n)]
            n += 1
        g = build_graph(n, new_edges)
        try:
            h, mapping = contract_2_vertices_map(g)
        except Exception as exc:  # noqa: BLE001
            bad.append((i, str(exc)))
            continue
        if len(set(h.edges)) != h.m:
            bad.append((i, "parallel edges"))
            continue
        if any(h.degree(new) < g.degree(old) - 1 for old, new in mapping.items()):
            bad.append((i, "degree dropped by more than one"))
            continue
        if g.n <= 12 and not has_k5_minor(g) and has_k5_minor(h):
            bad.append((i, "K5 minor introduced"))
    report(9, not bad, f"50 fixtures, {len(bad)} contract violations"
           + (f", first {bad[0]}" if bad else ""))
