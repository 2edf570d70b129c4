"""graph6 codec: frozen values, round trips, reference cross-checks."""

import random

import networkx as nx
import pytest

from specforest import complement, complete_graph, empty_graph, g6_decode, g6_encode, make_graph

from oracles import all_labeled_graphs


def reference_g6(g) -> str:
    """Encode through networkx as an independent reference."""
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).decode().strip()


def test_known_encodings():
    assert g6_encode(complete_graph(3)) == "Bw"
    assert g6_encode(complete_graph(1)) == "@"


def test_decode_then_complement():
    g = g6_decode("Bw")
    assert g == complete_graph(3)
    assert complement(g) == empty_graph(3)


def test_matches_reference_encoder():
    rng = random.Random(17)
    for n in (1, 2, 5, 8, 13, 30):
        for _ in range(5):
            edges = [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if rng.random() < 0.4
            ]
            g = make_graph(n, edges)
            assert g6_encode(g) == reference_g6(g)


def test_long_header_matches_reference():
    rng = random.Random(23)
    edges = [
        (u, v) for u in range(100) for v in range(u + 1, 100) if rng.random() < 0.05
    ]
    g = make_graph(100, edges)
    text = g6_encode(g)
    assert text.startswith("~")
    assert text == reference_g6(g)
    assert g6_decode(text) == g


def test_round_trip_all_small_graphs():
    for n in range(6):
        for g in all_labeled_graphs(n):
            assert g6_decode(g6_encode(g)) == g


def test_round_trip_enumerated_free_graphs():
    from specforest import ForbiddenFamily, enumerate_free_graphs

    for k, s in ((2, 3), (3, 4)):
        for n in (6, 7):
            for g in enumerate_free_graphs(n, ForbiddenFamily(k, s)):
                assert g6_decode(g6_encode(g)) == g


def test_round_trip_random_larger():
    rng = random.Random(99)
    for _ in range(50):
        n = rng.randrange(6, 9)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < 0.5
        ]
        g = make_graph(n, edges)
        assert g6_decode(g6_encode(g)) == g


def test_decode_rejects_bad_inputs():
    with pytest.raises(ValueError):
        g6_decode("")
    with pytest.raises(ValueError):
        g6_decode("B")  # truncated body for n = 3
    with pytest.raises(ValueError):
        g6_decode("Bw!")  # length mismatch
    with pytest.raises(ValueError):
        g6_decode("B" + chr(150))  # character outside 63..126
    with pytest.raises(ValueError):
        g6_decode("A" + chr(63 + 16))  # nonzero padding for n = 2
