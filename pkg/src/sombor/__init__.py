"""Minimum Sombor index of trees and unicyclic graphs, checked by exhaustive search."""

from .canon import canonical_code, canonical_form, canonical_labeling, is_isomorphic
from .enumeration import count, enumerate_class, enumerate_trees, enumerate_unicyclic
from .extremal import (
    ClosedForm,
    ExtremalParams,
    Family,
    Regime,
    Variant,
    build,
    closed_form_chemical,
    closed_form_tree,
    closed_form_unicyclic,
    construct_spider,
    construct_T_D,
    construct_T_nD,
    construct_U_D,
    construct_U_nD,
)
from .graph import Graph, GraphClass, GraphError, classify, max_degree
from .graph6 import Graph6Error
from .graph6 import decode as from_graph6
from .graph6 import encode as to_graph6
from .index import DESCRIPTORS, FIRST_ZAGREB, SOMBOR, IndexDescriptor, index_value, sombor, sombor_exact
from .transforms import TransformSite, apply, find_sites, predicted_delta
from .verifier import (
    VerificationReport,
    brute_force_min,
    karamata_check,
    verify_corollaries,
    verify_lemma_2_2,
    verify_structural_claims,
    verify_theorem_1_1,
    verify_theorem_1_2,
)

__all__ = [name for name in dir() if not name.startswith("_")]
