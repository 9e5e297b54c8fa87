"""
Parser and printer for compact model notation such as ``AC+AD+AE+BCDEF``.

Groups are separated by ``+``. Inside a group, factors are either
juxtaposed single-character labels (``BCDEF``) or explicit names joined
by ``*`` or ``:`` (``smoking*age``). A group naming a declared factor
exactly is a main effect, and the group ``1`` is the intercept alone.
"""

from __future__ import annotations

import re
from collections.abc import Sequence

from loglinkit.exceptions import FormulaError
from loglinkit.formula.terms import ModelFormula, Term

_SEPARATORS = re.compile(r"[*:]")
INTERCEPT_TOKEN = "1"


def parse_model(spec: str, factors: Sequence[str]) -> ModelFormula:
    """
    Parse a model formula against a declared factor universe.

    Args:
        spec: Formula text, e.g. "AC+AD+AE+BCDEF"
        factors: Declared factor names, in order

    Returns:
        ModelFormula holding the hierarchical closure of the listed terms

    Raises:
        FormulaError: On an empty spec, an empty group, an unknown label,
            or a factor repeated inside one group
    """
    universe = tuple(factors)
    compact = re.sub(r"\s+", "", spec or "")
    if not compact:
        raise FormulaError("Empty model specification", spec=spec)

    generators: list[Term] = []
    offset = 0
    for group in compact.split("+"):
        if not group:
            raise FormulaError("Empty term between '+' separators", spec=compact, position=offset)
        if group != INTERCEPT_TOKEN:
            generators.append(_parse_group(group, universe, compact, offset))
        offset += len(group) + 1

    return ModelFormula.from_terms(generators, factors=universe)


def _parse_group(group: str, universe: tuple[str, ...], spec: str, offset: int) -> Term:
    """Resolve one ``+``-separated group into a term."""
    if _SEPARATORS.search(group):
        labels = _SEPARATORS.split(group)
        if any(not label for label in labels):
            raise FormulaError(f"Dangling separator in '{group}'", spec=spec, position=offset)
    elif group in universe:
        labels = [group]
    else:
        labels = list(group)

    seen: set[str] = set()
    for label in labels:
        if label not in universe:
            hint = ""
            if len(group) > 1 and not _SEPARATORS.search(group):
                hint = "; use '*' or ':' between multi-character factor names"
            raise FormulaError(
                f"Unknown factor '{label}' (declared: {', '.join(universe)}){hint}",
                spec=spec,
                position=offset,
            )
        if label in seen:
            raise FormulaError(
                f"Factor '{label}' repeated in term '{group}'", spec=spec, position=offset
            )
        seen.add(label)
    return frozenset(labels)


def format_term(term: Term, formula: ModelFormula) -> str:
    """Render one term: juxtaposed when all names are single characters."""
    names = formula.ordered_factors(term)
    joiner = "" if all(len(name) == 1 for name in formula.factors) else "*"
    return joiner.join(names)


def format_model(formula: ModelFormula) -> str:
    """
    Render the minimal generating set of a formula.

    Args:
        formula: Formula to print

    Returns:
        e.g. "AC+AD+AE+BCDEF"; "1" for the intercept-only model
    """
    maximal = formula.maximal_terms
    if not maximal:
        return INTERCEPT_TOKEN
    return "+".join(format_term(term, formula) for term in maximal)
