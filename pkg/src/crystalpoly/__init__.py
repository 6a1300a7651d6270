"""Polyhedral realizations of crystal bases for modified quantum algebras.

Elements of ``Z^infty_iota[lam]`` are finitely supported integer vectors; the
library provides the Kashiwara operators on them, the S_k rewriting of linear
forms, the type A_n and affine A_1^(1) inequality families, and a brute-force
oracle comparing the connected component of 0 with the inequality set.
"""

from .affine import LambdaAffine, affine_grid, c_k, d_k, hwv_affine, phi_l
from .cartan import CartanData, Kind, Weight, affine_a1, finite_a
from .crystal import (
    attainers,
    e_tilde,
    epsilon,
    f_tilde,
    is_highest_weight,
    phi,
    sigma,
    weight_of,
)
from .explorer import (
    CrystalGraph,
    OracleReport,
    bfs_component,
    export_graph,
    find_highest_weights,
    make_setting,
    oracle_compare,
)
from .forms import FormSet, LinearForm, beta_bar, check_pn, generate, generate_xi, s_bar
from .sequences import FinSuppVector, IotaSequence, di_neg, di_pos, iota_a, iota_affine
from .type_a import LambdaA, c_table, d_value_a, hwv_a, nested_plus, phi_mu, sign_pattern_grid

__all__ = [
    "CartanData", "Kind", "Weight", "finite_a", "affine_a1",
    "IotaSequence", "FinSuppVector", "iota_a", "iota_affine", "di_pos", "di_neg",
    "sigma", "attainers", "f_tilde", "e_tilde", "weight_of", "epsilon", "phi", "is_highest_weight",
    "LinearForm", "FormSet", "beta_bar", "s_bar", "generate", "generate_xi", "check_pn",
    "LambdaA", "nested_plus", "c_table", "hwv_a", "phi_mu", "d_value_a", "sign_pattern_grid",
    "LambdaAffine", "c_k", "hwv_affine", "phi_l", "d_k", "affine_grid",
    "CrystalGraph", "OracleReport", "bfs_component", "find_highest_weights", "export_graph",
    "make_setting", "oracle_compare",
]
