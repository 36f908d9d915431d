#!/usr/bin/env python3
"""
Weyl Integration Oracle

Independent computation of invariant dimensions for the connected groups
Sp(2k), SO(2k+1) and SO(2k): restrict a GL(n)-character to the maximal torus
and take the constant term of chi * prod_{alpha in roots} (1 - z^alpha),
divided by the order of the Weyl group.
"""

import logging
from dataclasses import dataclass
from math import factorial
from typing import Dict, List, Optional, Tuple

from hilbert_errors import InternalInconsistencyError, UnsupportedGroupError
from partition_core import Partition, enumerate_partitions_up_to
from symfunc import SymPoly, schur_polynomial
from branching import (
    GroupId, GroupKind, DepthConvention, DEFAULT_DEPTH_CONVENTION, branch
)
from hilbert_engine import ModuleSpec, TruncatedSeries, symmetric_algebra_characters

logger = logging.getLogger(__name__)

Weight = Tuple[int, ...]


@dataclass(frozen=True)
class TorusCharacter:
    """Laurent polynomial in the k torus coordinates of a connected group"""
    poly: SymPoly
    group: GroupId

    @property
    def rank(self) -> int:
        return self.poly.n

    def is_weyl_invariant(self) -> bool:
        """Invariance under coordinate swaps and sign changes (pairs of sign changes for SO(2k))"""
        k = self.rank
        for exponent, coeff in self.poly.items():
            for i in range(k - 1):
                swapped = exponent[:i] + (exponent[i + 1], exponent[i]) + exponent[i + 2:]
                if self.poly.coeff(swapped) != coeff:
                    return False
            if k == 0:
                continue
            if self.group.kind == GroupKind.SO and self.group.n % 2 == 0:
                if k >= 2:
                    flipped = exponent[:-2] + (-exponent[-2], -exponent[-1])
                    if self.poly.coeff(flipped) != coeff:
                        return False
            else:
                flipped = exponent[:-1] + (-exponent[-1],)
                if self.poly.coeff(flipped) != coeff:
                    return False
        return True


def _require_connected(group: GroupId):
    if not group.is_connected:
        raise UnsupportedGroupError(f"The Weyl oracle needs a connected group, got {group}")


def restrict_weights(chi: SymPoly, group: GroupId) -> TorusCharacter:
    """
    Restrict a GL(n)-character to the maximal torus of G.

    x_i -> z_i and x_{k+i} -> 1/z_i for i <= k; for n = 2k + 1 also x_n -> 1.

    Args:
        chi: Character in n variables
        group: Sp(n) or SO(n)

    Returns:
        TorusCharacter in k = n // 2 variables
    """
    _require_connected(group)
    if chi.n != group.n:
        raise UnsupportedGroupError(f"Character in {chi.n} variables cannot restrict to {group}")
    k = group.rank

    def to_torus(exponent: Weight) -> Weight:
        return tuple(exponent[i] - exponent[k + i] for i in range(k))

    return TorusCharacter(chi.map_exponents(to_torus, k), group)


def root_system(group: GroupId) -> List[Weight]:
    """All roots of C_k, B_k or D_k as exponent vectors"""
    _require_connected(group)
    k = group.rank
    roots: List[Weight] = []

    def unit(i: int, scale: int = 1) -> List[int]:
        vector = [0] * k
        vector[i] = scale
        return vector

    for i in range(k):
        for j in range(i + 1, k):
            for si in (1, -1):
                for sj in (1, -1):
                    vector = [0] * k
                    vector[i] = si
                    vector[j] = sj
                    roots.append(tuple(vector))
    if group.kind == GroupKind.SP:
        for i in range(k):
            roots.append(tuple(unit(i, 2)))
            roots.append(tuple(unit(i, -2)))
    elif group.n % 2 == 1:
        for i in range(k):
            roots.append(tuple(unit(i, 1)))
            roots.append(tuple(unit(i, -1)))
    return roots


def positive_roots(group: GroupId) -> List[Weight]:
    """Roots whose first nonzero coordinate is positive"""
    return [root for root in root_system(group) if next(c for c in root if c) > 0]


def weyl_group_order(group: GroupId) -> int:
    _require_connected(group)
    k = group.rank
    if k == 0:
        return 1
    if group.kind == GroupKind.SO and group.n % 2 == 0:
        return 2 ** (k - 1) * factorial(k)
    return 2 ** k * factorial(k)


def _windows(factors: List[Weight], k: int) -> List[Tuple[List[int], List[int]]]:
    """
    windows[i] = per-coordinate (lo, hi) reachable by the factors from index i on,
    so a term e survives step i only if -e lies in the window.
    """
    windows = [([0] * k, [0] * k) for _ in range(len(factors) + 1)]
    for index in range(len(factors) - 1, -1, -1):
        lo, hi = windows[index + 1]
        root = factors[index]
        windows[index] = (
            [lo[c] + min(0, root[c]) for c in range(k)],
            [hi[c] + max(0, root[c]) for c in range(k)],
        )
    return windows


def _prune(terms: Dict[Weight, int], window: Tuple[List[int], List[int]]) -> Dict[Weight, int]:
    lo, hi = window
    return {e: c for e, c in terms.items()
            if c and all(lo[i] <= -e[i] <= hi[i] for i in range(len(e)))}


def weyl_ct_trivial_multiplicity(chi: TorusCharacter, group: Optional[GroupId] = None) -> int:
    """
    Dimension of the G-invariants of a module with torus character chi.

    Args:
        chi: Restricted character
        group: Defaults to chi.group

    Returns:
        Nonnegative integer

    Raises:
        InternalInconsistencyError: the constant term is not divisible by |W|
    """
    group = group or chi.group
    _require_connected(group)
    k = chi.rank
    factors = root_system(group)
    windows = _windows(factors, k)
    terms = _prune(chi.poly.as_dict(), windows[0])
    for index, root in enumerate(factors):
        product: Dict[Weight, int] = dict(terms)
        for exponent, coeff in terms.items():
            key = tuple(a + b for a, b in zip(exponent, root))
            product[key] = product.get(key, 0) - coeff
        terms = _prune(product, windows[index + 1])
    constant = terms.get((0,) * k, 0)
    order = weyl_group_order(group)
    if constant % order != 0 or constant < 0:
        logger.error(f"Constant term {constant} is not a nonnegative multiple of |W| = {order} for {group}")
        raise InternalInconsistencyError(
            f"Weyl constant term {constant} not divisible by |W|={order} for {group}")
    return constant // order


def _is_dominant(weight: Weight, group: GroupId) -> bool:
    k = len(weight)
    if any(weight[i] < weight[i + 1] for i in range(k - 2)):
        return False
    if k == 0:
        return True
    if group.kind == GroupKind.SO and group.n % 2 == 0:
        if k == 1:
            return True
        return weight[k - 2] >= abs(weight[k - 1])
    if k >= 2 and weight[k - 2] < weight[k - 1]:
        return False
    return weight[k - 1] >= 0


def highest_weight_multiplicities(chi: TorusCharacter, group: Optional[GroupId] = None) -> Dict[Weight, int]:
    """
    Multiplicities of irreducible G-modules in chi, keyed by dominant highest weight.

    Reads the coefficient of z^mu, mu dominant, in chi * prod_{alpha > 0} (1 - z^(-alpha)).
    """
    group = group or chi.group
    _require_connected(group)
    result = chi.poly
    for root in positive_roots(group):
        result = result - result.shift(tuple(-c for c in root))
    multiplicities = {e: c for e, c in result.items() if _is_dominant(e, group)}
    logger.debug(f"{group} highest weights: {multiplicities}")
    return multiplicities


def hilbert_series_weyl(spec: ModuleSpec, group: GroupId, maxdeg: int,
                        characters: Optional[List[SymPoly]] = None) -> TruncatedSeries:
    """
    Hilbert series of C[W]^G by Weyl integration, degree by degree.

    Args:
        spec: The module W
        group: Sp(n) or SO(n)
        maxdeg: Truncation degree
        characters: Precomputed characters of S^l(W), if available

    Returns:
        TruncatedSeries
    """
    _require_connected(group)
    if characters is None:
        characters = symmetric_algebra_characters(spec, maxdeg)
    coeffs = []
    for degree in range(maxdeg + 1):
        torus = restrict_weights(characters[degree], group)
        coeffs.append(weyl_ct_trivial_multiplicity(torus, group))
        logger.debug(f"Weyl oracle {group} degree {degree}: {coeffs[-1]}")
    return TruncatedSeries(coeffs, maxdeg)


def branching_from_weyl(partition: Partition, group: GroupId) -> Dict[Weight, int]:
    """Highest-weight decomposition of V_lambda restricted to G"""
    return highest_weight_multiplicities(restrict_weights(schur_polynomial(partition, group.n), group))


def _branching_as_weights(partition: Partition, group: GroupId,
                          depth: DepthConvention) -> Dict[Weight, int]:
    """Modification-rule branching translated to highest weights of the connected group"""
    k = group.rank
    weights: Dict[Weight, int] = {}
    for term in branch(partition, group, depth):
        padded = term.mu.padded(k)
        images = [padded]
        if group.kind == GroupKind.SO and group.n % 2 == 0 and k > 0 and padded[-1] != 0:
            images.append(padded[:-1] + (-padded[-1],))
        for image in images:
            weights[image] = weights.get(image, 0) + term.multiplicity
    return {w: m for w, m in weights.items() if m}


def pin_depth_convention(max_size: int = 5, max_n: int = 4) -> List[DepthConvention]:
    """
    Conventions whose Sp and SO branchings agree with the Weyl oracle on every
    lambda with |lambda| <= max_size and n <= max_n.
    """
    groups = []
    for n in range(2, max_n + 1):
        if n % 2 == 0:
            groups.append(GroupId(GroupKind.SP, n))
        groups.append(GroupId(GroupKind.SO, n))
    expected = {}
    for group in groups:
        for partition in enumerate_partitions_up_to(max_size, group.n):
            expected[(partition, group)] = branching_from_weyl(partition, group)

    fitting = []
    for convention in DepthConvention:
        mismatch = next(((partition, group) for (partition, group), weights in expected.items()
                         if _branching_as_weights(partition, group, convention) != weights), None)
        if mismatch is None:
            fitting.append(convention)
        else:
            logger.info(f"Depth convention {convention.value} fails on {mismatch[0]} for {mismatch[1]}")
    return fitting


def verify_depth_convention(convention: DepthConvention = DEFAULT_DEPTH_CONVENTION,
                            max_size: int = 5, max_n: int = 4) -> List[DepthConvention]:
    """
    Raise InternalInconsistencyError unless convention is confirmed by the oracle.

    Returns:
        All conventions that fit
    """
    fitting = pin_depth_convention(max_size, max_n)
    if convention not in fitting:
        logger.error(f"Depth convention {convention.value} disagrees with the Weyl oracle; fitting: {fitting}")
        raise InternalInconsistencyError(f"Depth convention {convention.value} is not confirmed by the Weyl oracle")
    return fitting
