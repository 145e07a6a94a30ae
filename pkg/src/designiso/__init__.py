"""Designs, line graphs, reconstruction and canonical forms."""
from .canonical import (CanonicalForm, Coloring, are_isomorphic, brute_force_iso, canonical_form,
                        line_graph_isomorphic, refine)
from .constructions import boolean_sqs, complete_design, fano, pasch_switch, scramble, sts
from .core import (ClosureChain, Design, DerivedCounts, Params, ValidationReport, check_admissibility,
                   closure, derived_counts, fisher_lower_bound, generating_sequence, is_subdesign,
                   kreher_rees_admissible, lambda_s, validate)
from .io import emit_design, emit_graph, parse_design, parse_graph
from .linegraph import Graph, line_graph, strongly_regular_check
from .reconstruct import point_cliques, rands_f, reconstruct, solve_v

__version__ = "0.1.0"
