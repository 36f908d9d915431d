#!/usr/bin/env python3
"""
Series Verifier

Compares truncated Hilbert series degree by degree and reports every
mismatch, either between two computed series or between the engine and a
golden closed form.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from hilbert_engine import TruncatedSeries, HilbertEngine, parse_module_spec
from rational_series import GoldenEntry, expand_rational

logger = logging.getLogger(__name__)


@dataclass
class VerificationError:
    """Represents a per-degree disagreement"""
    code: str
    message: str
    severity: str = "error"
    degree: Optional[int] = None


@dataclass
class VerificationWarning:
    """Represents a non-fatal observation"""
    code: str
    message: str
    degree: Optional[int] = None


@dataclass
class VerificationResult:
    """Results of a series comparison"""
    success: bool
    errors: List[VerificationError] = field(default_factory=list)
    warnings: List[VerificationWarning] = field(default_factory=list)
    build_info: Dict[str, Any] = field(default_factory=dict)
    verification_time: float = 0.0

    @property
    def verdict(self) -> str:
        return "MATCH" if self.success else "MISMATCH"

    @property
    def mismatch_degrees(self) -> List[int]:
        return [error.degree for error in self.errors if error.code == "SERIES_MISMATCH"]


class SeriesVerifier:
    """Per-degree comparison of truncated series"""

    def __init__(self, workers: int = 1):
        self.workers = workers
        self.statistics = {
            'comparisons': 0,
            'mismatches': 0,
            'golden_checked': 0
        }

    def compare(self, expected: TruncatedSeries, actual: TruncatedSeries,
                label: str = "series") -> VerificationResult:
        """
        Compare two series up to the smaller degree bound

        Args:
            expected: Reference series (closed form or oracle)
            actual: Series under test
            label: Name used in messages

        Returns:
            VerificationResult with one SERIES_MISMATCH error per differing degree
        """
        start_time = time.perf_counter()
        errors: List[VerificationError] = []
        warnings: List[VerificationWarning] = []

        bound = min(expected.maxdeg, actual.maxdeg)
        if expected.maxdeg != actual.maxdeg:
            warnings.append(VerificationWarning(
                code="DEGREE_BOUND_DIFFERS",
                message=f"{label}: comparing up to degree {bound} "
                        f"(bounds {expected.maxdeg} and {actual.maxdeg})"
            ))

        for degree in range(bound + 1):
            if expected[degree] != actual[degree]:
                errors.append(VerificationError(
                    code="SERIES_MISMATCH",
                    message=f"{label}: degree {degree} expected {expected[degree]}, got {actual[degree]}",
                    degree=degree
                ))

        self.statistics['comparisons'] += 1
        self.statistics['mismatches'] += len(errors)
        if errors:
            logger.warning(f"{label}: {len(errors)} degree(s) differ, first at t^{errors[0].degree}")

        return VerificationResult(
            success=len(errors) == 0,
            errors=errors,
            warnings=warnings,
            build_info={
                'verification_method': 'per_degree_comparison',
                'label': label,
                'compared_degrees': bound + 1,
                'first_mismatch_degree': errors[0].degree if errors else None,
                'expected': expected.to_list()[:bound + 1],
                'actual': actual.to_list()[:bound + 1],
                'total_errors': len(errors),
                'total_warnings': len(warnings)
            },
            verification_time=time.perf_counter() - start_time
        )

    def verify_golden(self, entry: GoldenEntry, maxdeg: Optional[int] = None,
                      engine: Optional[HilbertEngine] = None) -> VerificationResult:
        """
        Compare the engine series of a catalog entry with its closed form

        Args:
            entry: Golden catalog entry
            maxdeg: Degree bound, defaults to the entry's recommended bound
            engine: Engine already holding the module data, if any

        Returns:
            VerificationResult labelled with the entry key
        """
        maxdeg = entry.maxdeg if maxdeg is None else maxdeg
        try:
            if engine is None:
                spec = parse_module_spec(entry.spec_text, entry.group.n)
                engine = HilbertEngine(spec, maxdeg, self.workers)
            actual = engine.series(entry.group).truncate(maxdeg)
            expected = expand_rational(entry.form, maxdeg)
        except Exception as e:
            logger.error(f"Golden check {entry.key} failed to run: {e}")
            raise

        result = self.compare(expected, actual, entry.key)
        if entry.note:
            result.warnings.append(VerificationWarning(code="CATALOG_NOTE", message=f"{entry.key}: {entry.note}"))
        result.build_info.update({
            'golden_key': entry.key,
            'group': str(entry.group),
            'spec': entry.spec_text,
            'closed_form': entry.source or str(entry.form)
        })
        self.statistics['golden_checked'] += 1
        return result

    def get_statistics(self) -> Dict[str, Any]:
        return self.statistics.copy()


# Global instance for easy access
series_verifier = SeriesVerifier()
