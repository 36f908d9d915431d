#!/usr/bin/env python3
"""
Verification Module

Per-degree comparison of Hilbert series against oracles and the golden
catalog of closed forms.
"""

from .series_verifier import (
    SeriesVerifier, VerificationResult, VerificationError, VerificationWarning, series_verifier
)

__version__ = '1.0.0'
__all__ = [
    'SeriesVerifier',
    'VerificationResult',
    'VerificationError',
    'VerificationWarning',
    'series_verifier'
]
