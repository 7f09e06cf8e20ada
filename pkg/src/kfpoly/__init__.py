"""Kostka-Foulkes polynomials for the classical root systems."""
from .charge import charge_A, chi, chi_row_closed, chi_trace, d3_to_a3, kostka_statistic
from .closed_forms import k_a2_weight0, k_b2_weight0, k_c2_weight0, small_matrix_entry
from .crystal import (e_op, eps_phi, f_op, generate_component, raise_to_highest,
                      transport, vector_edges, weight_of, weyl_crystal_action)
from .cyclage import cocyclage, cocyclage_authorized, cyclage_chain, export_cyclage_graph
from .kostant import degree_and_monic_check, kostant_q, kostka_def
from .pieri import (morris_kostka, morris_special, pieri_closed_b, pieri_closed_d,
                    pieri_crystal)
from .qlaurent import QLaurent, eval_at_one, geometric_ratio, parse
from .rootdata import RootSystem, SignedPerm, Weight
from .tableaux import (Tableau, factor_row, highest_tableau, p_stable, p_symbol,
                       strip_extremes, tableaux_of)
