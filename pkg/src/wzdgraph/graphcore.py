"""Construction of WΓ(Z_n) and Γ(Z_n), plus graph serialization.

WΓ(Z_n) is built two independent ways:

* ``build_bruteforce_wzd`` scans the adjacency definition directly: x ~ y iff
  some nonzero r annihilating x and nonzero s annihilating y have rs = 0 mod n.
* ``build_structural_wzd`` assembles the graph from its divisor-class
  partition: classes A_d = {x : gcd(x, n) = d} are pairwise completely joined,
  and each class induces either a complete or an empty subgraph.

Agreement of the two routes over a sweep of n is one of the package's core
verification checks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import gcd as _gcd

from .errors import DomainError
from .numtheory import exact_primes, is_prime, proper_divisors


class Kind(Enum):
    """Shape of the subgraph induced by one divisor class."""

    COMPLETE = "complete"
    EMPTY = "empty"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with a deterministic vertex order.

    ``labels`` are the vertex names (residues mod n, ascending, when the graph
    came from Z_n); ``edges`` hold index pairs (i, j) with i < j.  ``modulus``
    is the n the graph was built from, or None for generic graphs.
    """

    labels: tuple[int, ...]
    edges: frozenset[tuple[int, int]]
    modulus: int | None = None

    def __post_init__(self) -> None:
        k = len(self.labels)
        if len(set(self.labels)) != k:
            raise DomainError("duplicate vertex labels")
        for i, j in self.edges:
            if not (0 <= i < j < k):
                raise DomainError(f"bad edge ({i}, {j}) for {k} vertices")

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * len(self.labels)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def label_edges(self) -> list[tuple[int, int]]:
        """Edges as sorted label pairs (u, v), u < v, lexicographically sorted."""
        out = []
        for i, j in self.edges:
            u, v = self.labels[i], self.labels[j]
            out.append((u, v) if u < v else (v, u))
        return sorted(out)

    def is_complete(self) -> bool:
        k = len(self.labels)
        return len(self.edges) == k * (k - 1) // 2


@dataclass(frozen=True)
class DivisorClass:
    divisor: int
    members: tuple[int, ...]
    kind: Kind

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class DivisorClassPartition:
    """The sets A_d over proper divisors d of n, each tagged complete/empty.

    ``degenerate`` is set when n is prime or n < 4 (no proper divisors, so no
    partition exists and the vertex set is empty or the notion is void).
    """

    n: int
    classes: tuple[DivisorClass, ...]
    degenerate: bool = False


def annihilator(n: int, x: int) -> set[int]:
    """All r in Z_n with r*x = 0 mod n; equals the multiples of n/gcd(x, n)."""
    if n < 2:
        raise DomainError(f"need modulus n >= 2, got {n}")
    if not 0 <= x < n:
        raise DomainError(f"residue {x} out of range for Z_{n}")
    return {r for r in range(n) if r * x % n == 0}


def zero_divisors(n: int) -> list[int]:
    """Nonzero zero-divisors of Z_n, ascending; empty when n is prime."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    return [x for x in range(1, n) if _gcd(x, n) > 1]


def _wzd_adjacent(n: int, ann_x: tuple[int, ...], ann_y: tuple[int, ...]) -> bool:
    # Witnesses must be nonzero: with r = 0 allowed every pair would be
    # adjacent and the within-class empty subgraphs could not exist.
    for r in ann_x:
        for s in ann_y:
            if r * s % n == 0:
                return True
    return False


def build_bruteforce_wzd(n: int) -> Graph:
    """WΓ(Z_n) by direct definition scan over annihilator element pairs.

    Adjacency depends only on the two annihilator sets, so the witness search
    is memoized per pair of distinct annihilators; the scan itself stays a raw
    iteration over nonzero annihilator elements.
    """
    verts = zero_divisors(n)
    anns = [tuple(sorted(annihilator(n, x) - {0})) for x in verts]
    # Token per distinct annihilator set keeps memo keys small.
    tokens: dict[tuple[int, ...], int] = {}
    vert_tok = []
    for a in anns:
        if a not in tokens:
            tokens[a] = len(tokens)
        vert_tok.append(tokens[a])
    by_token = {t: a for a, t in tokens.items()}

    memo: dict[tuple[int, int], bool] = {}
    edges = set()
    for i, j in combinations(range(len(verts)), 2):
        key = (vert_tok[i], vert_tok[j]) if vert_tok[i] <= vert_tok[j] else (vert_tok[j], vert_tok[i])
        hit = memo.get(key)
        if hit is None:
            hit = memo[key] = _wzd_adjacent(n, by_token[key[0]], by_token[key[1]])
        if hit:
            edges.add((i, j))
    return Graph(labels=tuple(verts), edges=frozenset(edges), modulus=n)


def divisor_classes(n: int) -> DivisorClassPartition:
    """Partition of the nonzero zero-divisors of Z_n by gcd with n."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if n < 4 or is_prime(n):
        return DivisorClassPartition(n=n, classes=(), degenerate=True)
    members: dict[int, list[int]] = {d: [] for d in proper_divisors(n)}
    for x in range(1, n):
        d = _gcd(x, n)
        if d > 1:
            members[d].append(x)
    exact = exact_primes(n)
    classes = tuple(
        DivisorClass(
            divisor=d,
            members=tuple(members[d]),
            kind=Kind.EMPTY if d in exact else Kind.COMPLETE,
        )
        for d in sorted(members)
    )
    return DivisorClassPartition(n=n, classes=classes, degenerate=False)


def build_structural_wzd(n: int) -> Graph:
    """WΓ(Z_n) assembled from its divisor-class partition.

    All cross-class pairs are adjacent; within a class, adjacency is complete
    or absent according to the class kind.  Vertex order matches
    ``build_bruteforce_wzd`` (ascending residues).
    """
    part = divisor_classes(n)
    if part.degenerate:
        return Graph(labels=tuple(zero_divisors(n)), edges=frozenset(), modulus=n)
    labels = tuple(sorted(x for c in part.classes for x in c.members))
    index = {x: i for i, x in enumerate(labels)}
    edges = set()
    for a, b in combinations(part.classes, 2):
        for x in a.members:
            for y in b.members:
                i, j = index[x], index[y]
                edges.add((i, j) if i < j else (j, i))
    for c in part.classes:
        if c.kind is Kind.COMPLETE:
            for x, y in combinations(c.members, 2):
                i, j = index[x], index[y]
                edges.add((i, j) if i < j else (j, i))
    return Graph(labels=labels, edges=frozenset(edges), modulus=n)


def build_zero_divisor_graph(n: int) -> Graph:
    """Γ(Z_n): same vertex set as WΓ(Z_n); x ~ y iff x*y = 0 mod n."""
    verts = zero_divisors(n)
    edges = {
        (i, j)
        for i, j in combinations(range(len(verts)), 2)
        if verts[i] * verts[j] % n == 0
    }
    return Graph(labels=tuple(verts), edges=frozenset(edges), modulus=n)


def graphs_equal(g1: Graph, g2: Graph) -> bool:
    """True iff identical vertex label lists and identical edge sets."""
    return g1.labels == g2.labels and g1.edges == g2.edges


def is_spanning_subgraph(sub: Graph, sup: Graph) -> bool:
    """True iff vertex labels agree and every edge of ``sub`` is in ``sup``."""
    return sub.labels == sup.labels and sub.edges <= sup.edges


def assemble_join(
    host_edges: set[tuple[int, int]],
    component_edge_lists: list[tuple[int, list[tuple[int, int]]]],
) -> Graph:
    """Explicit generalized join: replace host vertex i by component i.

    ``component_edge_lists`` holds (order, local edges) per host vertex; host
    edges are index pairs into that list.  Vertices of the result are numbered
    0..N-1 in component order.
    """
    offsets = []
    total = 0
    for order, _ in component_edge_lists:
        if order < 1:
            raise DomainError("component order must be >= 1")
        offsets.append(total)
        total += order
    edges = set()
    for ci, (order, local) in enumerate(component_edge_lists):
        base = offsets[ci]
        for u, v in local:
            if not (0 <= u < order and 0 <= v < order and u != v):
                raise DomainError(f"bad local edge ({u}, {v}) in component {ci}")
            a, b = base + u, base + v
            edges.add((a, b) if a < b else (b, a))
    for i, j in host_edges:
        oi, ni = offsets[i], component_edge_lists[i][0]
        oj, nj = offsets[j], component_edge_lists[j][0]
        for u in range(oi, oi + ni):
            for v in range(oj, oj + nj):
                edges.add((u, v) if u < v else (v, u))
    return Graph(labels=tuple(range(total)), edges=frozenset(edges), modulus=None)


GRAPH_FORMATS = ("dot", "json", "csv")


def export_graph(g: Graph, fmt: str) -> str:
    """Deterministic serialization in DOT, JSON, or CSV edge-list form.

    CSV lists one ``u,v`` edge line per edge (u < v, sorted), then any
    isolated vertices as single-field lines so the vertex set round-trips.
    """
    if fmt == "dot":
        name = f"wzd_{g.modulus}" if g.modulus is not None else "g"
        lines = [f"graph {name} {{"]
        lines += [f"  {u};" for u in g.labels]
        lines += [f"  {u} -- {v};" for u, v in g.label_edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        payload = {
            "modulus": g.modulus,
            "vertices": list(g.labels),
            "edges": [list(e) for e in g.label_edges()],
        }
        return json.dumps(payload, separators=(", ", ": ")) + "\n"
    if fmt == "csv":
        covered = {u for e in g.label_edges() for u in e}
        lines = [f"{u},{v}" for u, v in g.label_edges()]
        lines += [str(u) for u in g.labels if u not in covered]
        return "".join(line + "\n" for line in lines)
    raise DomainError(f"unknown graph format {fmt!r}; expected one of {GRAPH_FORMATS}")


def graph_from_json(text: str) -> Graph:
    """Inverse of ``export_graph(..., "json")``."""
    payload = json.loads(text)
    labels = tuple(payload["vertices"])
    index = {u: i for i, u in enumerate(labels)}
    edges = set()
    for u, v in payload["edges"]:
        i, j = index[u], index[v]
        edges.add((i, j) if i < j else (j, i))
    return Graph(labels=labels, edges=frozenset(edges), modulus=payload.get("modulus"))
