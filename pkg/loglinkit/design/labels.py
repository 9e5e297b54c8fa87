"""
Corner-point parameter labels.
"""

from __future__ import annotations

import itertools
from collections.abc import Mapping
from dataclasses import dataclass, field

from loglinkit.formula.terms import ModelFormula


@dataclass(frozen=True)
class ParameterLabel:
    """
    One corner-point parameter: a term and a level index (>= 1) per factor.

    The intercept has an empty term. ``show_levels`` only affects
    rendering; it is set for terms with a factor of more than two levels.
    """

    term: tuple[str, ...] = ()
    levels: tuple[int, ...] = ()
    show_levels: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.term) != len(self.levels):
            raise ValueError(f"Term {self.term} and levels {self.levels} differ in length")
        if any(level < 1 for level in self.levels):
            raise ValueError(f"Level indices must be >= 1 under corner-point coding: {self.levels}")

    @property
    def is_intercept(self) -> bool:
        return not self.term

    @property
    def key(self) -> frozenset[tuple[str, int]]:
        """Order-free identity used to match parameters across designs."""
        return frozenset(zip(self.term, self.levels))

    def __str__(self) -> str:
        if self.is_intercept:
            return "(Intercept)"
        if all(len(name) == 1 for name in self.term):
            name = "".join(self.term)
        else:
            name = ":".join(self.term)
        if self.show_levels:
            return f"{name}[{','.join(str(level) for level in self.levels)}]"
        return name


def parameter_labels(formula: ModelFormula, levels: Mapping[str, int]) -> list[ParameterLabel]:
    """
    Enumerate the columns of a formula's design matrix.

    The intercept comes first, then terms in column order. Within a term
    the level indices run over 1..J-1 per factor with the last factor
    varying fastest.

    Args:
        formula: Hierarchically closed formula
        levels: Number of levels for each factor of the formula

    Returns:
        list of ParameterLabel
    """
    labels = [ParameterLabel()]
    for term in formula.ordered_terms:
        names = formula.ordered_factors(term)
        ranges = [range(1, levels[name]) for name in names]
        show = any(levels[name] > 2 for name in names)
        labels.extend(
            ParameterLabel(names, combo, show_levels=show) for combo in itertools.product(*ranges)
        )
    return labels
