#!/usr/bin/env python3
"""
Oracle Module

Independent verification paths: Weyl constant-term integration over the
maximal torus of Sp(2k), SO(2k+1), SO(2k), and brute-force Littlewood-Richardson
coefficients.
"""

from .weyl import (
    TorusCharacter, restrict_weights, root_system, positive_roots,
    weyl_group_order, weyl_ct_trivial_multiplicity, highest_weight_multiplicities,
    hilbert_series_weyl, branching_from_weyl, pin_depth_convention,
    verify_depth_convention
)
from .lr_bruteforce import lr_bruteforce

__version__ = '1.0.0'
__all__ = [
    'TorusCharacter',
    'restrict_weights',
    'root_system',
    'positive_roots',
    'weyl_group_order',
    'weyl_ct_trivial_multiplicity',
    'highest_weight_multiplicities',
    'hilbert_series_weyl',
    'branching_from_weyl',
    'pin_depth_convention',
    'verify_depth_convention',
    'lr_bruteforce'
]
