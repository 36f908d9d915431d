#!/usr/bin/env python3
"""
Brute-Force Littlewood-Richardson Coefficients

Second, structurally different LR computation: multiply the two Schur
polynomials and decompose the product.
"""

from functools import lru_cache

from partition_core import Partition
from symfunc import SchurExpansion, schur_polynomial, schur_expand


@lru_cache(maxsize=512)
def _product_expansion(mu: Partition, nu: Partition) -> SchurExpansion:
    # every summand of s_mu * s_nu has at most l(mu) + l(nu) parts
    n = max(mu.length() + nu.length(), 1)
    return schur_expand(schur_polynomial(mu, n) * schur_polynomial(nu, n))


def lr_bruteforce(lam: Partition, mu: Partition, nu: Partition) -> int:
    """c^lambda_{mu nu} read from the Schur expansion of s_mu * s_nu."""
    if lam.size() != mu.size() + nu.size():
        return 0
    if lam.length() > mu.length() + nu.length():
        return 0
    return _product_expansion(mu, nu).get(lam)
