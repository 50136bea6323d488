"""Fat points at the origin of the affine line: criteria, witnesses and the rings H_{n,m}."""
from .hnm import (
    KNOWN_DISCREPANCIES, FiltrationReport, HnmPresentation, UniversalCertificate,
    coefficient_equations, construct_Hnm, elimination_ideal, filtration_check,
    same_ideal, verify_universal, y_recursion,
)
from .points import (
    Cofactor, HilbPoint, cofactor_Dp, default_power_cap, first_power_in_ideal,
    minimal_power, nilpotency_index, radical_contains_x, truncated_ring, x_power_remainder,
)
from .prorep import ProRepTuple, as_local_ring, enumerate_points, prorep_backward, prorep_forward
from .witness import Witness, witness_exponent_choice, witness_nonrepresentability

__all__ = [
    "KNOWN_DISCREPANCIES", "FiltrationReport", "HnmPresentation", "UniversalCertificate",
    "coefficient_equations", "construct_Hnm", "elimination_ideal", "filtration_check",
    "same_ideal", "verify_universal", "y_recursion",
    "Cofactor", "HilbPoint", "cofactor_Dp", "default_power_cap", "first_power_in_ideal",
    "minimal_power", "nilpotency_index", "radical_contains_x", "truncated_ring",
    "x_power_remainder",
    "ProRepTuple", "as_local_ring", "enumerate_points", "prorep_backward", "prorep_forward",
    "Witness", "witness_exponent_choice", "witness_nonrepresentability",
]
