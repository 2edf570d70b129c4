"""Enumeration, brute force, canonical forms, and ascent moves."""

import math
import random

import pytest

from specforest import (
    ForbiddenFamily,
    PartitionSpec,
    balance_step,
    brute_force_extremal,
    canonical_form,
    canonical_g6,
    clique_number,
    complete_bipartite,
    cycle_graph,
    empty_graph,
    enumerate_free_graphs,
    extremal_candidate,
    g6_decode,
    is_connected,
    is_free,
    join,
    make_graph,
    path_graph,
    quotient_radius,
    relabel,
    spectral_radius,
    union,
    zykov_climb,
    zykov_step,
)

from oracles import all_labeled_graphs, oracle_free, oracle_rho_dense


def test_enumeration_counts_tiny():
    fam = ForbiddenFamily(2, 2)
    assert sum(1 for _ in enumerate_free_graphs(2, fam)) == 2
    assert sum(1 for _ in enumerate_free_graphs(3, fam)) == 4
    fam = ForbiddenFamily(2, 3)
    assert sum(1 for _ in enumerate_free_graphs(3, fam)) == 7


def test_enumeration_matches_direct_filter():
    for k, s in ((2, 3), (3, 4), (2, 2)):
        fam = ForbiddenFamily(k, s)
        for n in range(1, 5):
            expected = sum(
                1 for g in all_labeled_graphs(n) if oracle_free(g, k, s)
            )
            got = sum(1 for _ in enumerate_free_graphs(n, fam))
            assert got == expected, (k, s, n)


def test_enumeration_yields_free_graphs_only():
    fam = ForbiddenFamily(3, 4)
    for g in enumerate_free_graphs(5, fam):
        assert is_free(g, fam).free


def test_enumeration_cap():
    with pytest.raises(ValueError):
        list(enumerate_free_graphs(9, ForbiddenFamily(2, 3)))


def test_enumeration_up_to_iso():
    fam = ForbiddenFamily(2, 3)
    labeled = list(enumerate_free_graphs(4, fam))
    reps = list(enumerate_free_graphs(4, fam, up_to_iso=True))
    assert len(reps) < len(labeled)
    keys = {canonical_g6(g) for g in labeled}
    assert {canonical_g6(g) for g in reps} == keys
    assert len(reps) == len(keys)


def test_canonical_form_is_isomorphism_invariant():
    rng = random.Random(101)
    for _ in range(20):
        n = rng.randrange(2, 7)
        g = make_graph(
            n,
            [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if rng.random() < 0.5
            ],
        )
        perm = list(range(n))
        rng.shuffle(perm)
        h = relabel(g, perm)
        assert canonical_form(g) == canonical_form(h)
        assert canonical_g6(g) == canonical_g6(h)


def test_brute_force_star_case():
    report = brute_force_extremal(5, ForbiddenFamily(2, 3))
    assert report.best_rho == pytest.approx(2.0, abs=1e-9)
    assert report.argmax == (canonical_g6(complete_bipartite(1, 4)),)
    assert report.verdict == "matches"
    assert report.count_free == sum(
        1 for g in all_labeled_graphs(5) if oracle_free(g, 2, 3)
    )


def test_brute_force_single_edge_case():
    report = brute_force_extremal(2, ForbiddenFamily(2, 2))
    assert report.best_rho == pytest.approx(1.0, abs=1e-9)
    assert report.argmax == (canonical_g6(path_graph(2)),)
    assert report.count_free == 2


def test_brute_force_best_matches_oracle():
    fam = ForbiddenFamily(3, 4)
    report = brute_force_extremal(5, fam)
    expected = max(
        oracle_rho_dense(g)
        for g in all_labeled_graphs(5)
        if oracle_free(g, 3, 4)
    )
    assert report.best_rho == pytest.approx(expected, abs=1e-8)
    for text in report.argmax:
        assert is_free(g6_decode(text), fam).free


def test_brute_force_deterministic_across_workers():
    fam = ForbiddenFamily(2, 3)
    one = brute_force_extremal(6, fam, workers=1)
    two = brute_force_extremal(6, fam, workers=3)
    assert one.best_rho == two.best_rho
    assert one.argmax == two.argmax
    assert one.count_free == two.count_free
    assert one.verdict == two.verdict


def test_brute_force_no_candidate_below_domain():
    # Candidate construction needs n >= s + 2.
    report = brute_force_extremal(4, ForbiddenFamily(3, 4))
    assert report.candidate_rho is None
    assert report.verdict == "no-candidate"
    assert report.count_free > 0


def test_brute_force_best_dominates_candidate():
    fams = [
        (6, ForbiddenFamily(2, 3)),
        (7, ForbiddenFamily(3, 4)),
        (7, ForbiddenFamily(2, 5)),
    ]
    for n, fam in fams:
        report = brute_force_extremal(n, fam)
        if report.candidate_rho is not None:
            assert report.best_rho >= report.candidate_rho - 1e-9


def test_brute_force_small_order_snapshot_contract():
    # Below the candidate domain (s + 2 = 7 > 6) the comparison is recorded
    # but nothing about optimality is asserted.
    fam = ForbiddenFamily(2, 5)
    report = brute_force_extremal(6, fam)
    assert report.candidate_rho is None
    assert report.verdict == "no-candidate"
    assert report.count_free > 0
    for text in report.argmax:
        assert is_free(g6_decode(text), fam).free


def test_brute_force_iso_count():
    report = brute_force_extremal(4, ForbiddenFamily(2, 3), count_iso=True)
    expected = len(
        {
            canonical_g6(g)
            for g in all_labeled_graphs(4)
            if oracle_free(g, 2, 3)
        }
    )
    assert report.count_free_iso == expected


# ---------------------------------------------------------------------------
# Ascent moves
# ---------------------------------------------------------------------------


def test_zykov_step_path_to_cycle():
    g = path_graph(4)
    res = spectral_radius(g)
    z = zykov_step(g, 0, 2, res.x)
    assert z == cycle_graph(4) or z.edge_count == 4
    rho_before = oracle_rho_dense(g)
    rho_after = oracle_rho_dense(z)
    assert rho_before == pytest.approx(1.6180339887498949, abs=1e-9)
    assert rho_after == pytest.approx(2.0, abs=1e-9)


def test_zykov_step_rejects_equal_neighborhoods():
    g = path_graph(3)
    res = spectral_radius(g)
    with pytest.raises(ValueError, match="different neighborhoods"):
        zykov_step(g, 0, 2, res.x)


def test_zykov_step_rejects_adjacent():
    g = path_graph(4)
    res = spectral_radius(g)
    with pytest.raises(ValueError, match="non-adjacent"):
        zykov_step(g, 0, 1, res.x)


def test_zykov_step_rejects_wrong_mass_order():
    # Star with a pendant hanging off leaf 1: N(2) = {hub}, N(5) = {1},
    # and the hub entry dominates, so rewiring 2 toward 5 must be refused.
    g = make_graph(6, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5)])
    res = spectral_radius(g)
    assert sum(res.x[w] for w in g.neighbors(2)) > sum(
        res.x[w] for w in g.neighbors(5)
    )
    with pytest.raises(ValueError, match="mass"):
        zykov_step(g, 2, 5, res.x)


def _random_connected(rng, n, p):
    while True:
        g = make_graph(
            n,
            [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if rng.random() < p
            ],
        )
        if is_connected(g):
            return g


def test_zykov_monotone_and_clique_safe_random_trials():
    rng = random.Random(107)
    trials = 0
    while trials < 120:
        g = _random_connected(rng, rng.randrange(5, 10), 0.45)
        res = spectral_radius(g, 1e-12)
        pairs = [
            (u, v)
            for u in range(g.n)
            for v in range(g.n)
            if u != v and not g.adjacent(u, v) and g.row(u) != g.row(v)
        ]
        rng.shuffle(pairs)
        for u, v in pairs:
            mass_u = sum(res.x[w] for w in g.neighbors(u))
            mass_v = sum(res.x[w] for w in g.neighbors(v))
            if mass_v < mass_u:
                continue
            z = zykov_step(g, u, v, res.x)
            after = spectral_radius(z, 1e-12)
            assert after.lower - res.upper > 1e-10
            assert clique_number(z) <= clique_number(g)
            trials += 1
            break


def test_zykov_climb_improves_and_stays_free():
    fam = ForbiddenFamily(2, 3)
    start = union(path_graph(2), empty_graph(8))
    end, trace = zykov_climb(start, fam)
    rho_start = spectral_radius(start).rho
    rho_end = spectral_radius(end).rho
    assert rho_end >= rho_start
    assert is_free(end, fam).free
    assert trace  # at least one improving move exists here
    assert rho_end >= 2.0 - 1e-9  # the 9-leaf star value is reachable


def test_zykov_climb_fixed_point_on_candidate():
    fam = ForbiddenFamily(2, 5)
    cand = extremal_candidate(12, 2, 5)
    end, trace = zykov_climb(cand.graph, fam)
    assert trace == []
    assert end == cand.graph


def test_zykov_climb_from_empty_graph():
    fam = ForbiddenFamily(2, 3)
    end, trace = zykov_climb(empty_graph(5), fam)
    assert spectral_radius(end).rho > 0
    assert is_free(end, fam).free
    assert all(move["move"] == "add-edge" for move in trace)


def test_zykov_climb_rejects_non_free_start():
    with pytest.raises(ValueError):
        zykov_climb(complete_graph_3 := cycle_graph(3), ForbiddenFamily(2, 3))


def test_balance_step_pair():
    res = balance_step(PartitionSpec((3, 1)))
    assert res.changed
    assert res.spec == PartitionSpec((2, 2))
    before = quotient_radius(PartitionSpec((3, 1))).rho
    after = quotient_radius(res.spec).rho
    assert before == pytest.approx(math.sqrt(3), abs=1e-9)
    assert after == pytest.approx(2.0, abs=1e-9)


def test_balance_step_already_balanced():
    res = balance_step(PartitionSpec((2, 2)))
    assert not res.changed
    assert res.spec == PartitionSpec((2, 2))


def test_balance_step_three_parts():
    res = balance_step(PartitionSpec((5, 1, 1)))
    assert res.changed
    assert res.spec == PartitionSpec((4, 2, 1))
    assert (
        quotient_radius(res.spec).rho
        > quotient_radius(PartitionSpec((5, 1, 1))).rho
    )


def test_balance_monotone_exhaustive():
    def partitions(total, max_parts, smallest=1):
        if max_parts == 1:
            yield (total,)
            return
        for first in range(smallest, total + 1):
            rest = total - first
            if rest == 0:
                yield (first,)
                continue
            for tail in partitions(rest, max_parts - 1, first):
                yield (first,) + tail

    for total in range(2, 11):
        for parts in partitions(total, 4):
            parts = tuple(sorted(parts, reverse=True))
            spec = PartitionSpec(parts)
            res = balance_step(spec)
            if max(parts) - min(parts) < 2:
                assert not res.changed
                continue
            assert res.changed
            before = quotient_radius(spec, 1e-12)
            after = quotient_radius(res.spec, 1e-12)
            assert after.lower > before.upper
