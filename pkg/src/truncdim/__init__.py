"""truncdim: truncated metric dimension of finite connected graphs.

Distances are measured with the hop metric capped at k+1, so landmarks only
distinguish vertices inside their k-neighborhood.  The package computes and
verifies k-truncated resolving sets exactly (brute force over a compiled or
pure-Python subset-search kernel), provides closed forms for paths and
cycles, characterizes graphs of extreme dimension, builds the extremal
constructions, and solves trees at k=1 with a dynamic program.
"""

from .graph import (DisconnectedGraphError, DistanceMatrix, Graph,
                    GraphInputError, LabeledGraph, all_pairs_distances,
                    bfs_distances, diameter, enumerate_connected_graphs,
                    format_edge_list, from_edge_list, induced_subgraph,
                    is_complete, is_connected, is_cycle, is_path, is_tree,
                    leaves, parse_edge_list, path_order, read_edge_list)
from .resolve import (INFINITE, ResolvingCertificate, beta_0, beta_k_exact,
                      beta_k_matrix, ich_heuristic, is_truncated_resolving,
                      truncated_distance, truncated_matrix, truncated_vector)
from .formulas import (beta_k_cycle, beta_k_path, diameter_upper_bound,
                       has_beta_k_n_minus_1, has_beta_k_n_minus_2,
                       has_beta_k_one, n_minus_2_family, order_upper_bound,
                       path_resolving_set)
from .families import (ConstructionWarning, LabeledConstruction,
                       all_labeled_trees, beta_k_u_graph, complete,
                       complete_bipartite, cycle, disjoint_union, edgeless,
                       join, path, random_connected_graph, random_tree,
                       s_tilde, s_tilde_order, star, tree_from_pruefer,
                       u_graph)
from .trees import (BudgetExceededError, DpTables, PeelStep, RootedTree,
                    TkResult, beta_1_tree, dp_tables, exterior_major_vertices,
                    leaf_groups, locating_dominating_number,
                    locating_dominating_set, root_tree, tk_all_peel_totals,
                    tk_beta_k, tk_membership, tree_metric_dimension,
                    tree_resolving_set)
from . import kernel

__version__ = "0.1.0"
