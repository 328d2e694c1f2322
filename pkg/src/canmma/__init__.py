"""Modifying modules over cA_n singularities k[[x,y,u,v]]/(f1...fn - uv)."""

from .errors import CanmmaError
from .graphs import (
    LabeledGraph,
    bfs_closure,
    build_exchange_graph,
    graphs_isomorphic,
    hasse_weak_order,
    inversions,
    multinomial,
    multiset_permutations,
    to_dot,
)
from .model import (
    FactorData,
    Flag,
    GroupSequence,
    class_normal_form,
    class_of_subset,
    flag_of_picture,
    flag_of_word,
    iso_class,
    picture_of_flag,
    validate,
    word_of_maximal_flag,
)
from .mutation import connected_components, is_fixed, mu_adjacent, mu_minus, mu_plus, reflect
from .poly import LinForm, Mat2, Poly, is_in_m2, is_unit_multiple, linear_part, parse_poly, span_dim, verify_mf
from .presentation import (
    build_quiver,
    count_MM,
    cy_reduce,
    derived_equiv_sufficient,
    is_CT,
    is_MM,
    is_modifying,
    mf_pair,
    mm_params,
    morita_class_count,
)

__version__ = "0.1.0"
