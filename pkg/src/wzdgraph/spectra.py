"""Closed-form Laplacian spectra for generalized joins and for WΓ(Z_n).

The generic engine follows the join spectrum theorem: given a host graph on k
vertices with vertex weights n_i equal to the component orders, the Laplacian
spectrum of the join is the union over i of (D_i + component spectrum with one
0 removed) together with the spectrum of the k x k weighted host matrix, where
D_i is the total weight of the host neighbors of vertex i.

For WΓ(Z_n) the host is the complete graph on the proper divisors of n with
weight phi(n/d) at divisor d, which makes the host spectrum exact by a
rank-one argument and the whole result integer-valued.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import ContractViolation, DomainError
from .graphcore import Kind
from .numtheory import euler_phi, exact_primes, is_prime, proper_divisors

EXACT = "exact"
FLOAT = "float"

#: absolute tolerance for merging near-equal floating eigenvalues
MERGE_TOL = 1e-7


@dataclass(frozen=True)
class WeightedHostGraph:
    """Host graph whose vertex i carries a positive integer weight.

    For the WΓ(Z_n) specialization the labels are the proper divisors of n and
    the adjacency is complete; the generic join engine accepts any irreflexive
    symmetric adjacency, given as index pairs (i, j) with i < j.
    """

    labels: tuple
    weights: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        k = len(self.labels)
        if len(self.weights) != k:
            raise ContractViolation("one weight per host vertex required")
        if any(w < 1 for w in self.weights):
            raise ContractViolation("host weights must be >= 1")
        for i, j in self.edges:
            if not (0 <= i < j < k):
                raise ContractViolation(f"bad host edge ({i}, {j})")

    @property
    def order(self) -> int:
        return len(self.labels)

    def is_complete(self) -> bool:
        k = len(self.labels)
        return len(self.edges) == k * (k - 1) // 2

    def neighbor_weight_sums(self) -> list[int]:
        """D_i = total weight of the host neighbors of vertex i (0 if isolated)."""
        d = [0] * len(self.labels)
        for i, j in self.edges:
            d[i] += self.weights[j]
            d[j] += self.weights[i]
        return d


@dataclass
class SpectrumMultiset:
    """Eigenvalue -> multiplicity map, exact-integer or floating.

    Exact spectra carry int eigenvalues; floating ones carry floats that were
    merged at ``MERGE_TOL``.  ``n`` tags spectra of WΓ(Z_n) with their modulus.
    """

    entries: dict
    variant: str = EXACT
    n: int | None = None

    @property
    def order(self) -> int:
        return sum(self.entries.values())

    def items_sorted(self) -> list[tuple]:
        return sorted(self.entries.items())

    def expand(self) -> list:
        """All eigenvalues with multiplicity, ascending."""
        out = []
        for e, m in self.items_sorted():
            out.extend([e] * m)
        return out

    def trace(self):
        return sum(e * m for e, m in self.entries.items())

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "variant": self.variant,
            "order": self.order,
            "entries": [
                {"eigenvalue": e, "multiplicity": m} for e, m in self.items_sorted()
            ],
        }

    @classmethod
    def exact(cls, pairs, n: int | None = None) -> "SpectrumMultiset":
        entries: dict[int, int] = {}
        for e, m in pairs:
            if m < 0:
                raise ContractViolation("negative multiplicity")
            if m:
                entries[int(e)] = entries.get(int(e), 0) + m
        return cls(entries=entries, variant=EXACT, n=n)

    @classmethod
    def floating(cls, pairs, n: int | None = None, tol: float = MERGE_TOL) -> "SpectrumMultiset":
        merged: list[list] = []
        for e, m in sorted((float(e), m) for e, m in pairs if m):
            if merged and abs(e - merged[-1][0]) <= tol:
                merged[-1][1] += m
            else:
                merged.append([e, m])
        return cls(entries={e: m for e, m in merged}, variant=FLOAT, n=n)


def host_upsilon(n: int) -> WeightedHostGraph:
    """Complete host on the proper divisors of n, weight phi(n/d) at d."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    divs = [] if is_prime(n) else proper_divisors(n)
    edges = frozenset(combinations(range(len(divs)), 2))
    return WeightedHostGraph(
        labels=tuple(divs),
        weights=tuple(euler_phi(n // d) for d in divs),
        edges=edges,
    )


def weighted_laplacian(host: WeightedHostGraph) -> np.ndarray:
    """Zero-row-sum host matrix: diagonal D_i, off-diagonal -n_j on edges."""
    k = host.order
    L = np.zeros((k, k), dtype=np.int64)
    d = host.neighbor_weight_sums()
    for i in range(k):
        L[i, i] = d[i]
    for i, j in host.edges:
        L[i, j] = -host.weights[j]
        L[j, i] = -host.weights[i]
    return L


def symmetric_weighted_laplacian(host: WeightedHostGraph) -> np.ndarray:
    """Symmetrized host matrix: same diagonal, off-diagonal -sqrt(n_i n_j).

    Similar to ``weighted_laplacian`` and therefore has the same spectrum.
    """
    k = host.order
    L = np.zeros((k, k), dtype=np.float64)
    d = host.neighbor_weight_sums()
    for i in range(k):
        L[i, i] = d[i]
    for i, j in host.edges:
        L[i, j] = L[j, i] = -np.sqrt(host.weights[i] * host.weights[j])
    return L


def component_spectrum(order: int, kind: Kind) -> SpectrumMultiset:
    """Laplacian spectrum of K_m (kind COMPLETE) or of its complement (EMPTY)."""
    if order < 1:
        raise DomainError(f"component order must be >= 1, got {order}")
    if kind is Kind.COMPLETE:
        return SpectrumMultiset.exact([(0, 1), (order, order - 1)])
    return SpectrumMultiset.exact([(0, order)])


def _host_spectrum_pairs(host: WeightedHostGraph) -> tuple[list, bool]:
    """Eigenvalue pairs of the host matrix and whether they are exact.

    Edgeless hosts give {0^k}; complete hosts give {0, (sum of weights)^(k-1)}
    by the rank-one decomposition.  Anything else goes through the numeric
    symmetric eigensolver.
    """
    k = host.order
    if k == 0:
        return [], True
    if not host.edges:
        return [(0, k)], True
    if host.is_complete():
        total = sum(host.weights)
        return [(0, 1), (total, k - 1)], True
    from .oracle import symmetric_eigenvalues  # deferred: oracle imports this module

    eigs = symmetric_eigenvalues(symmetric_weighted_laplacian(host))
    return [(e, 1) for e in eigs], False


def _strip_one_zero(s: SpectrumMultiset) -> list[tuple]:
    pairs = s.items_sorted()
    if not pairs:
        raise ContractViolation("empty component spectrum")
    e0, m0 = pairs[0]
    near_zero = e0 == 0 if s.variant == EXACT else abs(e0) <= MERGE_TOL
    if not near_zero:
        raise ContractViolation("component spectrum lacks eigenvalue 0")
    rest = [(e0, m0 - 1)] if m0 > 1 else []
    return rest + pairs[1:]


def join_spectrum(
    host: WeightedHostGraph, components: list[SpectrumMultiset]
) -> SpectrumMultiset:
    """Laplacian spectrum of the generalized join of ``components`` over ``host``.

    Requires components[i].order == host.weights[i].  The result is exact when
    the host spectrum is exact (complete or edgeless host) and every component
    spectrum is exact; otherwise floating, merged at ``MERGE_TOL``.
    """
    if len(components) != host.order:
        raise ContractViolation(
            f"host has {host.order} vertices but {len(components)} components given"
        )
    for i, c in enumerate(components):
        if c.order != host.weights[i]:
            raise ContractViolation(
                f"component {i} has order {c.order}, host weight is {host.weights[i]}"
            )
    host_pairs, host_exact = _host_spectrum_pairs(host)
    exact = host_exact and all(c.variant == EXACT for c in components)
    d = host.neighbor_weight_sums()
    pairs = list(host_pairs)
    for i, c in enumerate(components):
        pairs.extend((e + d[i], m) for e, m in _strip_one_zero(c))
    if exact:
        return SpectrumMultiset.exact(pairs)
    return SpectrumMultiset.floating(pairs)


def wzd_spectrum_closed_form(n: int) -> SpectrumMultiset:
    """Exact Laplacian spectrum of WΓ(Z_n).

    With V = n - phi(n) - 1 vertices and A' the set of primes dividing n
    exactly once: if A' is empty the graph is complete and the spectrum is
    {0, V^(V-1)}; otherwise it is {0} with V at multiplicity
    (sum of phi(n/d) over proper divisors d outside A') + |A'| - 1, plus
    V - phi(n/p) at multiplicity phi(n/p) - 1 for each p in A'.
    """
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if is_prime(n):
        return SpectrumMultiset.exact([], n=n)
    v = n - euler_phi(n) - 1
    exact = exact_primes(n)
    if not exact:
        return SpectrumMultiset.exact([(0, 1), (v, v - 1)], n=n)
    pairs = [(0, 1)]
    v_mult = sum(euler_phi(n // d) for d in proper_divisors(n) if d not in exact)
    pairs.append((v, v_mult + len(exact) - 1))
    for p in sorted(exact):
        f = euler_phi(n // p)
        pairs.append((v - f, f - 1))
    return SpectrumMultiset.exact(pairs, n=n)


def algebraic_connectivity(s: SpectrumMultiset):
    """Second-smallest eigenvalue counting multiplicity."""
    if s.order < 2:
        raise DomainError("algebraic connectivity needs order >= 2")
    return s.expand()[1]


def spectral_radius(s: SpectrumMultiset):
    """Largest eigenvalue."""
    if s.order < 1:
        raise DomainError("spectral radius of an empty spectrum is undefined")
    return max(s.entries)
