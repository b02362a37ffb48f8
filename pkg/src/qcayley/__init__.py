"""Quadratic unitary Cayley graphs over Z_n and symplectic row reduction.

G_n joins a and b when a - b is plus or minus a square unit mod n. The
package computes counts, diameters, tensor splittings and perfectness
certificates for these graphs, and uses their small diameter to decompose
matrices in Sp_2m(Z_n) into O(m^2) elementary symplectic row operations.
"""
from .cayley import (
    diameter_formula,
    directed_quadratic_unitary_graph,
    full_tensor_decomposition,
    quadratic_unitary_graph,
    tensor_factorizes,
    uniform_diameter,
    uniform_diameter_formula,
)
from .counting import sd_counts, sd_oracle
from .errors import VerificationError
from .holes import construct_odd_hole, is_induced_odd_cycle, perfectness
from .kernels import BACKEND
from .modring import factorize, quadratic_units
from .symp import decompose, expand_c_power, is_symplectic, random_symplectic
from .walks import min_signed_walk, walk_with_signs

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "VerificationError",
    "construct_odd_hole",
    "decompose",
    "diameter_formula",
    "directed_quadratic_unitary_graph",
    "expand_c_power",
    "factorize",
    "full_tensor_decomposition",
    "is_induced_odd_cycle",
    "is_symplectic",
    "min_signed_walk",
    "perfectness",
    "quadratic_units",
    "quadratic_unitary_graph",
    "random_symplectic",
    "sd_counts",
    "sd_oracle",
    "tensor_factorizes",
    "uniform_diameter",
    "uniform_diameter_formula",
    "walk_with_signs",
]
