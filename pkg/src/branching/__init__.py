#!/usr/bin/env python3
"""
Branching Module

Restriction from GL(n) to Sp(2k), O(n) and SO(n): closed trivial-multiplicity
predicates, full signed branching with modification rules, and Weyl dimension
formulas for the target groups.
"""

from .groups import GroupKind, GroupId
from .predicates import trivial_multiplicity
from .modification import (
    BranchTerm, DepthConvention, DEFAULT_DEPTH_CONVENTION,
    modify_sp_label, modify_o_label, branch_to_sp, branch_to_o, branch,
    trivial_multiplicity_via_branching
)
from .dimensions import (
    sp_dimension, so_dimension, o_dimension, label_dimension, branching_dimension
)

__version__ = '1.0.0'
__all__ = [
    'GroupKind',
    'GroupId',
    'trivial_multiplicity',
    'BranchTerm',
    'DepthConvention',
    'DEFAULT_DEPTH_CONVENTION',
    'modify_sp_label',
    'modify_o_label',
    'branch_to_sp',
    'branch_to_o',
    'branch',
    'trivial_multiplicity_via_branching',
    'sp_dimension',
    'so_dimension',
    'o_dimension',
    'label_dimension',
    'branching_dimension'
]
