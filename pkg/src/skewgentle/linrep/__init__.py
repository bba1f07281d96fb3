"""Exact representations of bound quivers."""

from .field import FieldSpec
from .io import parse_representation, serialize_representation
from .linalg import Echelon, cokernel_matrix, kernel_matrix, rank
from .modules import band_module, string_module
from .oracle import brute_force_bricks
from .reflection import Orbit, coxeter_orbit, coxeter_step, preprojective, reflect, source_order
from .representation import (
    HomBasis,
    Representation,
    direct_sum,
    end_dim,
    hom_basis,
    hom_dim,
    is_brick,
    is_intertwiner,
    is_isomorphic,
    projective,
    simple,
)

__all__ = [
    "Echelon",
    "FieldSpec",
    "HomBasis",
    "Orbit",
    "Representation",
    "band_module",
    "brute_force_bricks",
    "cokernel_matrix",
    "coxeter_orbit",
    "coxeter_step",
    "direct_sum",
    "end_dim",
    "hom_basis",
    "hom_dim",
    "is_brick",
    "is_intertwiner",
    "is_isomorphic",
    "kernel_matrix",
    "parse_representation",
    "preprojective",
    "projective",
    "rank",
    "reflect",
    "serialize_representation",
    "simple",
    "source_order",
    "string_module",
]
