"""Quantum Reed-Muller codes over the binary symplectic representation."""

from .construct import (
    QrmParams,
    QuantumCode,
    ValidationReport,
    build_generator,
    derive_stabilizer,
    format_code,
    parse_code,
    puncture,
    qrm_params,
    six04,
    stabilizer_direct,
    validate,
)
from .decode import DecoderTable, Syndrome, build_decoder_table, correctability_check, simulate, syndrome
from .distance import DistanceResult, distance_lowweight, distance_rowspace
from .gf2 import BitVector, Gf2Matrix, mat_mul_transpose, nullspace, rank, rotate_left, rowspace_contains, rref
from .pauli import PauliVector, or_weight, symplectic_product
from .reedmuller import MonomialIndex, RmCode, degree_layer, k_rm, monomial_eval, rm_generator

__version__ = "0.1.0"

__all__ = [
    "QrmParams",
    "QuantumCode",
    "ValidationReport",
    "build_generator",
    "derive_stabilizer",
    "format_code",
    "parse_code",
    "puncture",
    "qrm_params",
    "six04",
    "stabilizer_direct",
    "validate",
    "DecoderTable",
    "Syndrome",
    "build_decoder_table",
    "correctability_check",
    "simulate",
    "syndrome",
    "DistanceResult",
    "distance_lowweight",
    "distance_rowspace",
    "BitVector",
    "Gf2Matrix",
    "mat_mul_transpose",
    "nullspace",
    "rank",
    "rotate_left",
    "rowspace_contains",
    "rref",
    "PauliVector",
    "or_weight",
    "symplectic_product",
    "MonomialIndex",
    "RmCode",
    "degree_layer",
    "k_rm",
    "monomial_eval",
    "rm_generator",
]
