"""Weakly zero-divisor graphs of Z_n: structure, spectra, and verification.

The vertex set of WΓ(Z_n) is the nonzero zero-divisors of Z_n; x and y are
adjacent when some nonzero annihilator elements r of x and s of y multiply to
zero.  The graph decomposes as a generalized join of complete and empty pieces
over the divisor lattice of n, which yields an exact integer Laplacian
spectrum.  This package builds the graphs, evaluates the closed-form spectrum,
and cross-checks everything with independent numeric and exact-arithmetic
oracles.
"""

from .errors import ContractViolation, ConvergenceError, DomainError, OrderCapError
from .graphcore import (
    DivisorClass,
    DivisorClassPartition,
    Graph,
    Kind,
    annihilator,
    build_bruteforce_wzd,
    build_structural_wzd,
    build_zero_divisor_graph,
    divisor_classes,
    export_graph,
    graph_from_json,
    graphs_equal,
    is_spanning_subgraph,
)
from .numtheory import (
    PrimeFactorization,
    euler_phi,
    exact_primes,
    factorize,
    gcd,
    proper_divisors,
)
from .oracle import (
    ExactPolynomial,
    SymmetricIntMatrix,
    VerificationReport,
    char_poly_exact,
    integrality_check,
    laplacian_matrix,
    poly_matches_spectrum,
    symmetric_eigenvalues,
    verify_spectrum,
)
from .spectra import (
    SpectrumMultiset,
    WeightedHostGraph,
    algebraic_connectivity,
    component_spectrum,
    host_upsilon,
    join_spectrum,
    spectral_radius,
    symmetric_weighted_laplacian,
    weighted_laplacian,
    wzd_spectrum_closed_form,
)

__version__ = "0.1.0"
