"""Graph construction: definition scan vs structural assembly, and exports."""

import json
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wzdgraph.errors import DomainError
from wzdgraph.graphcore import (
    Graph,
    Kind,
    annihilator,
    assemble_join,
    build_bruteforce_wzd,
    build_structural_wzd,
    build_zero_divisor_graph,
    divisor_classes,
    export_graph,
    graph_from_json,
    graphs_equal,
    is_spanning_subgraph,
    zero_divisors,
)
from wzdgraph.numtheory import euler_phi, is_prime

COMPOSITES_300 = [n for n in range(4, 301) if not is_prime(n)]


def components(g: Graph) -> int:
    """Connected component count by plain BFS, independent of the builders."""
    k = g.vertex_count
    adj = [[] for _ in range(k)]
    for i, j in g.edges:
        adj[i].append(j)
        adj[j].append(i)
    seen = [False] * k
    count = 0
    for start in range(k):
        if seen[start]:
            continue
        count += 1
        stack = [start]
        seen[start] = True
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
    return count


def label_edge_set(g: Graph) -> set[tuple[int, int]]:
    return set(g.label_edges())


@pytest.mark.parametrize(
    "n, x, expected",
    [
        (18, 3, {0, 6, 12}),
        (18, 2, {0, 9}),
        (6, 0, {0, 1, 2, 3, 4, 5}),
        (12, 8, {0, 3, 6, 9}),
    ],
)
def test_annihilator_examples(n, x, expected):
    assert annihilator(n, x) == expected


@given(st.integers(min_value=2, max_value=300), st.data())
def test_annihilator_is_multiples_of_cofactor(n, data):
    import math

    x = data.draw(st.integers(min_value=0, max_value=n - 1))
    d = math.gcd(x, n) if x else n
    step = n // d
    assert annihilator(n, x) == set(range(0, n, step))


def test_annihilator_domain_errors():
    with pytest.raises(DomainError):
        annihilator(1, 0)
    with pytest.raises(DomainError):
        annihilator(6, 6)


def test_bruteforce_wzd_small_cases():
    g6 = build_bruteforce_wzd(6)
    assert g6.labels == (2, 3, 4)
    assert label_edge_set(g6) == {(2, 3), (3, 4)}

    g4 = build_bruteforce_wzd(4)
    assert g4.labels == (2,) and g4.edge_count == 0

    g18 = build_bruteforce_wzd(18)
    assert g18.vertex_count == 11 and g18.edge_count == 40

    g9 = build_bruteforce_wzd(9)
    assert g9.labels == (3, 6) and label_edge_set(g9) == {(3, 6)}


def test_bruteforce_wzd_prime_is_empty():
    g = build_bruteforce_wzd(13)
    assert g.vertex_count == 0 and g.edge_count == 0


def test_divisor_classes_n18_matches_known_decomposition():
    part = divisor_classes(18)
    assert not part.degenerate
    got = {(c.divisor, c.members, c.kind) for c in part.classes}
    assert got == {
        (2, (2, 4, 8, 10, 14, 16), Kind.EMPTY),
        (3, (3, 15), Kind.COMPLETE),
        (6, (6, 12), Kind.COMPLETE),
        (9, (9,), Kind.COMPLETE),
    }


def test_divisor_classes_small_cases():
    part4 = divisor_classes(4)
    assert [(c.divisor, c.members, c.kind) for c in part4.classes] == [
        (2, (2,), Kind.COMPLETE)
    ]
    part6 = divisor_classes(6)
    assert [(c.divisor, c.members, c.kind) for c in part6.classes] == [
        (2, (2, 4), Kind.EMPTY),
        (3, (3,), Kind.EMPTY),
    ]


def test_divisor_classes_degenerate_for_primes():
    part = divisor_classes(7)
    assert part.degenerate and part.classes == ()


@settings(max_examples=120, deadline=None)
@given(st.sampled_from(COMPOSITES_300))
def test_divisor_classes_partition_properties(n):
    part = divisor_classes(n)
    all_members = [x for c in part.classes for x in c.members]
    assert sorted(all_members) == zero_divisors(n)
    assert len(set(all_members)) == len(all_members)
    for c in part.classes:
        assert c.size == euler_phi(n // c.divisor)


def test_structural_wzd_small_cases():
    assert label_edge_set(build_structural_wzd(6)) == {(2, 3), (3, 4)}
    g9 = build_structural_wzd(9)
    assert g9.labels == (3, 6) and label_edge_set(g9) == {(3, 6)}
    g18 = build_structural_wzd(18)
    assert g18.vertex_count == 11 and g18.edge_count == 40


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(COMPOSITES_300))
def test_construction_equivalence_sampled(n):
    assert graphs_equal(build_bruteforce_wzd(n), build_structural_wzd(n))


def test_zero_divisor_graph_examples():
    assert label_edge_set(build_zero_divisor_graph(6)) == {(2, 3), (3, 4)}
    assert label_edge_set(build_zero_divisor_graph(9)) == {(3, 6)}
    g12 = build_zero_divisor_graph(12)
    assert g12.labels == (2, 3, 4, 6, 8, 9, 10)
    edges = label_edge_set(g12)
    assert (4, 9) in edges and (6, 8) in edges
    assert (2, 3) not in edges
    # frozen from the definition scan over all pairs
    assert edges == {(2, 6), (3, 4), (3, 8), (4, 6), (4, 9), (6, 8), (6, 10), (8, 9)}


def test_graphs_equal_distinguishes_edge_sets():
    k2 = Graph(labels=(1, 2), edges=frozenset({(0, 1)}))
    k2bar = Graph(labels=(1, 2), edges=frozenset())
    assert not graphs_equal(k2, k2bar)
    assert graphs_equal(k2, Graph(labels=(1, 2), edges=frozenset({(0, 1)})))
    assert graphs_equal(build_bruteforce_wzd(6), build_zero_divisor_graph(6))


def test_spanning_subgraph_examples():
    assert is_spanning_subgraph(build_zero_divisor_graph(12), build_bruteforce_wzd(12))
    assert is_spanning_subgraph(build_zero_divisor_graph(6), build_bruteforce_wzd(6))
    k2 = Graph(labels=(1, 2), edges=frozenset({(0, 1)}))
    k2bar = Graph(labels=(1, 2), edges=frozenset())
    assert is_spanning_subgraph(k2bar, k2)
    assert not is_spanning_subgraph(k2, k2bar)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(COMPOSITES_300))
def test_zero_divisor_graph_spans_wzd(n):
    assert is_spanning_subgraph(build_zero_divisor_graph(n), build_bruteforce_wzd(n))


@settings(max_examples=120, deadline=None)
@given(st.sampled_from(COMPOSITES_300))
def test_vertex_count_identity(n):
    assert build_structural_wzd(n).vertex_count == n - euler_phi(n) - 1


@pytest.mark.parametrize("n", [4, 8, 9, 16, 25, 27, 36, 72, 100])
def test_all_square_prime_factors_give_complete_graphs(n):
    g = build_bruteforce_wzd(n)
    assert g.is_complete()


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(COMPOSITES_300))
def test_wzd_is_connected(n):
    g = build_structural_wzd(n)
    if g.vertex_count:
        assert components(g) == 1


def test_export_csv():
    assert export_graph(build_structural_wzd(4), "csv") == "2\n"
    assert export_graph(build_structural_wzd(6), "csv") == "2,3\n3,4\n"


def test_export_dot():
    dot = export_graph(build_structural_wzd(6), "dot")
    assert dot.splitlines() == [
        "graph wzd_6 {",
        "  2;",
        "  3;",
        "  4;",
        "  2 -- 3;",
        "  3 -- 4;",
        "}",
    ]


def test_export_json_roundtrip():
    g = build_structural_wzd(18)
    text = export_graph(g, "json")
    payload = json.loads(text)
    assert payload["modulus"] == 18
    assert len(payload["vertices"]) == 11 and len(payload["edges"]) == 40
    assert payload["edges"] == sorted(payload["edges"])
    assert graphs_equal(graph_from_json(text), g)


def test_export_unknown_format_rejected():
    with pytest.raises(DomainError):
        export_graph(build_structural_wzd(6), "xml")


def test_export_is_deterministic():
    g = build_structural_wzd(30)
    for fmt in ("dot", "json", "csv"):
        assert export_graph(g, fmt) == export_graph(g, fmt)


def test_assemble_join_star():
    g = assemble_join({(0, 1)}, [(2, []), (1, [])])
    assert g.labels == (0, 1, 2)
    assert g.edges == frozenset({(0, 2), (1, 2)})


def test_assemble_join_matches_structural_builder():
    # picking the divisor classes of 18 as components reproduces the graph
    part = divisor_classes(18)
    host_edges = set(combinations(range(len(part.classes)), 2))
    parts = []
    for c in part.classes:
        local = (
            list(combinations(range(c.size), 2)) if c.kind is Kind.COMPLETE else []
        )
        parts.append((c.size, local))
    joined = assemble_join(host_edges, parts)
    direct = build_structural_wzd(18)
    # same shape up to relabeling: class members are consecutive residue blocks
    assert joined.vertex_count == direct.vertex_count
    assert joined.edge_count == direct.edge_count
