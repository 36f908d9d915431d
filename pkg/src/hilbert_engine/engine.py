#!/usr/bin/env python3
"""
Hilbert Engine

Characters of the symmetric powers S^l(W), their Schur multiplicities m_l(lambda),
and the Hilbert series of the invariant ring C[W]^G obtained by counting the
multiplicities of labels that carry a G-invariant.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Any, Dict, List, Optional

from hilbert_errors import InvalidInputError, InternalInconsistencyError
from partition_core import Partition
from symfunc import SymPoly, SchurExpansion, schur_polynomial, schur_expand, gl_dimension
from branching import GroupId, trivial_multiplicity
from .module_spec import ModuleSpec
from .series import TruncatedSeries

logger = logging.getLogger(__name__)


def module_character(spec: ModuleSpec) -> SymPoly:
    """Character sum_lambda k(lambda) s_lambda(x_1, ..., x_n) of W"""
    character = SymPoly.zero(spec.n)
    for partition, multiplicity in spec.components:
        character = character + schur_polynomial(partition, spec.n) * multiplicity
    return character


def symmetric_algebra_characters(spec: ModuleSpec, maxdeg: int) -> List[SymPoly]:
    """
    Characters of S^0(W), ..., S^maxdeg(W).

    Expands prod_mu (1 - x^mu t)^(-a_mu) over the weights mu of W, one geometric
    factor at a time, keeping only t-degrees up to maxdeg.

    Args:
        spec: The module W
        maxdeg: Highest symmetric power

    Returns:
        List indexed by l of SymPoly characters
    """
    if maxdeg < 0:
        raise InvalidInputError(f"Degree bound must be nonnegative, got {maxdeg}")
    n = spec.n
    levels: List[Dict[tuple, int]] = [{(0,) * n: 1}] + [{} for _ in range(maxdeg)]
    for weight, multiplicity in module_character(spec).items():
        for _ in range(multiplicity):
            for degree in range(1, maxdeg + 1):
                target = levels[degree]
                for exponent, coeff in levels[degree - 1].items():
                    key = tuple(a + b for a, b in zip(exponent, weight))
                    target[key] = target.get(key, 0) + coeff
    return [SymPoly(n, level) for level in levels]


@dataclass
class MultiplicityTable:
    """Schur multiplicities m_l(lambda) of S^l(W) for l = 0..maxdeg"""
    n: int
    rows: Dict[int, SchurExpansion] = field(default_factory=dict)

    @property
    def maxdeg(self) -> int:
        return max(self.rows) if self.rows else -1

    def get(self, degree: int, partition: Partition) -> int:
        row = self.rows.get(degree)
        return row.get(partition) if row is not None else 0

    def terms(self):
        """Iterate (degree, partition, multiplicity) in degree order"""
        for degree in sorted(self.rows):
            for partition, multiplicity in self.rows[degree].sorted_items():
                yield degree, partition, multiplicity

    def verify_nonnegative(self):
        for degree, partition, multiplicity in self.terms():
            if multiplicity < 0:
                raise InternalInconsistencyError(
                    f"Negative multiplicity {multiplicity} of {partition} in degree {degree}")

    def verify_dimensions(self, module_dimension: int):
        """
        Check sum_lambda m_l(lambda) dim V_lambda = dim S^l(W) for every stored l.

        Raises:
            InternalInconsistencyError: on the first degree that fails
        """
        for degree in sorted(self.rows):
            expected = 1 if degree == 0 else comb(module_dimension + degree - 1, degree) if module_dimension else 0
            actual = sum(mult * gl_dimension(partition, self.n) for partition, mult in self.rows[degree].coeffs.items())
            if actual != expected:
                raise InternalInconsistencyError(
                    f"dim S^{degree}(W) is {expected} but Schur multiplicities give {actual}")


def multiplicity_table(spec: ModuleSpec, maxdeg: int, workers: int = 1,
                       characters: Optional[List[SymPoly]] = None) -> MultiplicityTable:
    """
    Decompose every S^l(W), l <= maxdeg, into Schur polynomials.

    Args:
        spec: The module W
        maxdeg: Highest symmetric power
        workers: Thread count for the per-degree expansions
        characters: Precomputed symmetric_algebra_characters, if available

    Returns:
        MultiplicityTable, checked for nonnegativity and dimensions
    """
    if characters is None:
        characters = symmetric_algebra_characters(spec, maxdeg)
    characters = characters[:maxdeg + 1]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            expansions = list(pool.map(schur_expand, characters))
    else:
        expansions = [schur_expand(character) for character in characters]
    table = MultiplicityTable(spec.n, dict(enumerate(expansions)))
    table.verify_nonnegative()
    table.verify_dimensions(spec.dimension())
    return table


def series_from_table(table: MultiplicityTable, group: GroupId, maxdeg: int) -> TruncatedSeries:
    """Coefficient of t^l is sum_lambda m_l(lambda) * trivial_multiplicity(lambda, G)"""
    coeffs = [0] * (maxdeg + 1)
    for degree, partition, multiplicity in table.terms():
        if degree <= maxdeg:
            coeffs[degree] += multiplicity * trivial_multiplicity(partition, group)
    return TruncatedSeries(coeffs, maxdeg)


def _check_group(spec: ModuleSpec, group: GroupId):
    if group.n != spec.n:
        raise InvalidInputError(f"Group {group} does not act on a module of rank n={spec.n}")


def hilbert_series_invariants(spec: ModuleSpec, group: GroupId, maxdeg: int,
                              workers: int = 1) -> TruncatedSeries:
    """
    Hilbert series of C[W]^G truncated at t^maxdeg.

    Args:
        spec: The module W
        group: Sp(n), O(n) or SO(n) with n = spec.n
        maxdeg: Truncation degree
        workers: Thread count for the Schur expansions

    Returns:
        TruncatedSeries of invariant dimensions
    """
    _check_group(spec, group)
    return HilbertEngine(spec, maxdeg, workers).series(group)


class HilbertEngine:
    """
    Computes and caches the per-degree data of S(W) so several groups and
    verification paths can reuse it
    """

    def __init__(self, spec: ModuleSpec, maxdeg: int, workers: int = 1):
        if maxdeg < 0:
            raise InvalidInputError(f"Degree bound must be nonnegative, got {maxdeg}")
        self.spec = spec
        self.maxdeg = maxdeg
        self.workers = max(1, workers)
        self._characters: Optional[List[SymPoly]] = None
        self._table: Optional[MultiplicityTable] = None
        self.statistics = {
            'character_terms': 0,
            'schur_components': 0,
            'character_seconds': 0.0,
            'expansion_seconds': 0.0
        }

    def characters(self) -> List[SymPoly]:
        if self._characters is None:
            logger.info(f"Expanding S(W) for {self.spec} up to degree {self.maxdeg}")
            start = time.perf_counter()
            self._characters = symmetric_algebra_characters(self.spec, self.maxdeg)
            self.statistics['character_seconds'] = time.perf_counter() - start
            self.statistics['character_terms'] = sum(len(c) for c in self._characters)
            logger.debug(f"Characters hold {self.statistics['character_terms']} monomials")
        return self._characters

    def table(self) -> MultiplicityTable:
        if self._table is None:
            characters = self.characters()
            start = time.perf_counter()
            try:
                self._table = multiplicity_table(self.spec, self.maxdeg, self.workers, characters)
            except Exception as e:
                logger.error(f"Schur decomposition of S(W) failed: {e}")
                raise
            self.statistics['expansion_seconds'] = time.perf_counter() - start
            self.statistics['schur_components'] = sum(len(row) for row in self._table.rows.values())
            logger.info(f"Multiplicity table has {self.statistics['schur_components']} entries")
        return self._table

    def series(self, group: GroupId) -> TruncatedSeries:
        _check_group(self.spec, group)
        return series_from_table(self.table(), group, self.maxdeg)

    def series_via_substitution(self, group: GroupId) -> TruncatedSeries:
        from .substitution import substitution_series
        _check_group(self.spec, group)
        return substitution_series(self.table(), group, self.maxdeg)

    def get_statistics(self) -> Dict[str, Any]:
        return self.statistics.copy()
