"""Exact rewriting of symmetric polynomials over the elementary symmetric basis.

The heavy lifting lives in the compiled ``_core`` extension; this package
re-exports its public surface. Coefficients cross the boundary as
``fractions.Fraction`` and exponents as plain tuples of ints.
"""

from ._core import (
    InconsistentSystemError,
    NotSymmetricError,
    ParseError,
    Polynomial,
    canonicalize,
    coefficient,
    compose_truncated,
    compose_with_sigma,
    decompose,
    decompose_truncated,
    degree_classes,
    elementary_symmetric,
    enumerate_decompositions,
    export_records,
    format_system,
    n2_coefficient,
    oracle_decompose,
    orbit,
    phi,
    phi_inv,
    symmetry_witness,
    system_matrix,
    verify_roundtrip,
    weight_vectors,
)

__all__ = [
    "InconsistentSystemError",
    "NotSymmetricError",
    "ParseError",
    "Polynomial",
    "canonicalize",
    "coefficient",
    "compose_truncated",
    "compose_with_sigma",
    "decompose",
    "decompose_truncated",
    "degree_classes",
    "elementary_symmetric",
    "enumerate_decompositions",
    "export_records",
    "format_system",
    "n2_coefficient",
    "oracle_decompose",
    "orbit",
    "phi",
    "phi_inv",
    "symmetry_witness",
    "system_matrix",
    "verify_roundtrip",
    "weight_vectors",
]
