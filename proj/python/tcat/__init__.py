"""Socle filtrations, injective resolutions and Ext tables for tensor
categories of Mackey Lie algebras, plus a sparse-matrix levelizer.

Diagrams are lists of parts; tuples and degree vectors use the CLI text
form "lam_t,...,lam_0|lam;mu|mu_0,...,mu_t" with '.'-separated parts
and '-' for the empty diagram.
"""

from ._tcat import (
    check_m_h_identity,
    check_rev_symmetry,
    conjugate,
    ext_dim,
    h_coeff,
    level_sets,
    levelize,
    lr,
    lr_oracle,
    m_coeff,
    q_max,
    resolution_terms,
    sn_dim,
    socle_layers_I,
    socle_layers_I_lambda,
    socle_layers_J,
    socle_layers_J_degree,
    socle_layers_M,
    tensor_simples_layers,
)

__all__ = [
    "check_m_h_identity",
    "check_rev_symmetry",
    "conjugate",
    "ext_dim",
    "h_coeff",
    "level_sets",
    "levelize",
    "lr",
    "lr_oracle",
    "m_coeff",
    "q_max",
    "resolution_terms",
    "sn_dim",
    "socle_layers_I",
    "socle_layers_I_lambda",
    "socle_layers_J",
    "socle_layers_J_degree",
    "socle_layers_M",
    "tensor_simples_layers",
]
