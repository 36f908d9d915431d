#!/usr/bin/env python3
"""
Module Spec Parser

Parses textual module specifications such as "V + L2(V)" or "2*[3,1]" into
ModuleSpec values.

Grammar:
    spec  := '' | term ('+' term)*
    term  := [INT '*'] atom
    atom  := 'V' | 'S' INT '(V)' | 'L' INT '(V)' | '[' INT (',' INT)* ']' | '[]'
"""

import logging
import re
from typing import List, Tuple

from hilbert_errors import InvalidInputError, SpecParseError
from partition_core import Partition
from .module_spec import ModuleSpec

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"""
    \s*(?:
        (?P<coeff>\d+)\s*\*
      | (?P<power>[SL])(?P<degree>\d+)\s*\(\s*V\s*\)
      | (?P<standard>V)
      | \[(?P<weight>[\d\s,]*)\]
    )""", re.VERBOSE)

_PLUS = re.compile(r"\s*\+")
_TRAILING = re.compile(r"\s*$")


def _weight_from_match(match: re.Match) -> Partition:
    if match.group('standard'):
        return Partition((1,))
    if match.group('power'):
        degree = int(match.group('degree'))
        if match.group('power') == 'S':
            return Partition((degree,)) if degree else Partition(())
        return Partition((1,) * degree)

    body = match.group('weight').strip()
    if not body:
        return Partition(())
    try:
        parts = tuple(int(piece) for piece in body.split(','))
    except ValueError:
        raise SpecParseError(f"Malformed highest weight [{body}]", match.start('weight'))
    return Partition(parts)


def parse_module_spec(text: str, n: int) -> ModuleSpec:
    """
    Parse a module specification for GL(n)

    Args:
        text: Specification text; empty or blank means the zero module
        n: Number of variables

    Returns:
        Normalized ModuleSpec

    Raises:
        SpecParseError: on a syntax error, with the 0-based position
        InvalidInputError: when a highest weight has more than n parts
    """
    if _TRAILING.fullmatch(text):
        return ModuleSpec.empty(n)

    components: List[Tuple[Partition, int]] = []
    position = 0
    while True:
        match = _TOKEN.match(text, position)
        if match is None:
            raise SpecParseError(f"Expected a module term in {text!r}", _skip_spaces(text, position))

        multiplicity = 1
        if match.group('coeff') is not None:
            multiplicity = int(match.group('coeff'))
            if multiplicity < 1:
                raise SpecParseError("Multiplicity must be positive", match.start('coeff'))
            atom_start = match.end()
            match = _TOKEN.match(text, atom_start)
            if match is None or match.group('coeff') is not None:
                raise SpecParseError(f"Expected a module after '*' in {text!r}", _skip_spaces(text, atom_start))

        try:
            weight = _weight_from_match(match)
        except SpecParseError:
            raise
        except InvalidInputError as e:
            raise SpecParseError(str(e), _skip_spaces(text, match.start()))
        if weight.length() > n:
            raise InvalidInputError(
                f"Highest weight {weight} at position {_skip_spaces(text, match.start())} "
                f"has {weight.length()} parts but n={n}")
        components.append((weight, multiplicity))
        position = match.end()

        plus = _PLUS.match(text, position)
        if plus is None:
            break
        position = plus.end()

    if not _TRAILING.fullmatch(text, position):
        raise SpecParseError(f"Unexpected text {text[position:].strip()!r}", _skip_spaces(text, position))

    spec = ModuleSpec(n, tuple(components))
    logger.debug(f"Parsed {text!r} as {spec}")
    return spec


def _skip_spaces(text: str, position: int) -> int:
    while position < len(text) and text[position].isspace():
        position += 1
    return position
