"""Rigged configurations and restricted paths for the 27-vertex E6 crystal.

The package provides the classical crystal graph of the level-one
Kirillov-Reshetikhin module for affine E6, classically restricted paths in
its tensor powers with their energy statistic, rigged configurations with
their charge, and the statistic-preserving bijection between the two
families, along with the generating polynomials X and M and an exhaustive
verification harness for X = M.
"""

from .cartan import (CARTAN, ADJACENT, NODES, Weight, fundamental_weight,
                     simple_root, weight_add, weight_sub, is_dominant,
                     format_weight, parse_weight, solve_config_sizes,
                     feasible_weights)
from .crystal import EDGES, VERTICES, f, e, wt, reachable, verify_graph_lemma
from .tensor import (Path, e_tensor, f_tensor, eps_tensor, phi_tensor,
                     wt_path, is_classically_restricted, enumerate_paths,
                     enumerate_all_hw, format_path, parse_path)
from .laurent import LaurentPolynomial
from .energy import local_H, local_H_by_component, energy_D, one_dim_sum
from .rigged import (Partition, RiggedConfiguration, q_i, vacancy, charge,
                     charge_by_vacancy, cc, is_admissible_config,
                     enumerate_configs, enumerate_rcs, qbinom, fermionic_M)
from .bijection import (DeltaRecord, InvalidPairError, delta, delta_inv,
                        gamma, phi, phi_inv, vacancy_change_oracle,
                        predicted_vacancy_change)
from .verify import VerifyReport, verify

__all__ = [
    "CARTAN", "ADJACENT", "NODES", "Weight", "fundamental_weight",
    "simple_root", "weight_add", "weight_sub", "is_dominant",
    "format_weight", "parse_weight", "solve_config_sizes", "feasible_weights",
    "EDGES", "VERTICES", "f", "e", "wt", "reachable", "verify_graph_lemma",
    "Path", "e_tensor", "f_tensor", "eps_tensor", "phi_tensor", "wt_path",
    "is_classically_restricted", "enumerate_paths", "enumerate_all_hw",
    "format_path", "parse_path",
    "LaurentPolynomial",
    "local_H", "local_H_by_component", "energy_D", "one_dim_sum",
    "Partition", "RiggedConfiguration", "q_i", "vacancy", "charge",
    "charge_by_vacancy", "cc", "is_admissible_config", "enumerate_configs",
    "enumerate_rcs", "qbinom", "fermionic_M",
    "DeltaRecord", "InvalidPairError", "delta", "delta_inv", "gamma",
    "phi", "phi_inv", "vacancy_change_oracle", "predicted_vacancy_change",
    "VerifyReport", "verify",
]
