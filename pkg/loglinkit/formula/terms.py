"""
Interaction terms and hierarchically closed model formulas.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from math import prod

from loglinkit.exceptions import FormulaError

Term = frozenset[str]
"""A non-empty set of factor names. The intercept is implicit and never a Term."""


def hierarchical_closure(terms: Iterable[Iterable[str]]) -> frozenset[Term]:
    """
    Return the smallest superset of ``terms`` closed under non-empty subsets.

    Args:
        terms: Interaction terms, each an iterable of factor names

    Returns:
        frozenset of Terms (empty input gives the empty set)
    """
    closed: set[Term] = set()
    for term in terms:
        factors = tuple(sorted(set(term)))
        for size in range(1, len(factors) + 1):
            closed.update(frozenset(combo) for combo in itertools.combinations(factors, size))
    return frozenset(closed)


def is_closed(terms: Iterable[Term]) -> bool:
    """Check that every non-empty subset of every term is also a term."""
    term_set = frozenset(terms)
    return hierarchical_closure(term_set) == term_set


def term_sort_key(term: Term, factors: Sequence[str]) -> tuple[int, tuple[int, ...]]:
    """Column order: interaction order first, then factor positions in ``factors``."""
    return len(term), tuple(sorted(factors.index(name) for name in term))


@dataclass(frozen=True)
class ModelFormula:
    """
    A hierarchical model over named categorical factors.

    ``factors`` lists the factors used by the terms, in declared order.
    The intercept is always present and is not stored in ``terms``.
    """

    factors: tuple[str, ...]
    terms: frozenset[Term] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if len(set(self.factors)) != len(self.factors):
            raise FormulaError(f"Duplicate factor names in {self.factors}")
        for term in self.terms:
            if not term:
                raise FormulaError("Empty term; the intercept is implicit")
            unknown = term - set(self.factors)
            if unknown:
                raise FormulaError(
                    f"Term {''.join(sorted(term))} uses undeclared factors: "
                    + ", ".join(sorted(unknown))
                )
        if not is_closed(self.terms):
            raise FormulaError("Formula terms are not hierarchically closed")

    @classmethod
    def from_terms(
        cls, terms: Iterable[Iterable[str]], factors: Sequence[str] | None = None
    ) -> ModelFormula:
        """
        Build a formula from (possibly non-closed) generating terms.

        Args:
            terms: Generating terms
            factors: Declared factor order; factors not used by any term are dropped.
                     Defaults to sorted factor names.

        Returns:
            ModelFormula with the hierarchical closure of ``terms``
        """
        closed = hierarchical_closure(terms)
        used = set().union(*closed) if closed else set()
        if factors is None:
            ordered = tuple(sorted(used))
        else:
            missing = used - set(factors)
            if missing:
                raise FormulaError("Unknown factors: " + ", ".join(sorted(missing)))
            ordered = tuple(name for name in factors if name in used)
        return cls(factors=ordered, terms=closed)

    @property
    def ordered_terms(self) -> list[Term]:
        """Terms in column order."""
        return sorted(self.terms, key=lambda term: term_sort_key(term, self.factors))

    def ordered_factors(self, term: Term) -> tuple[str, ...]:
        """Factors of ``term`` in declared order."""
        return tuple(name for name in self.factors if name in term)

    @property
    def maximal_terms(self) -> list[Term]:
        """The minimal generating set: terms not contained in another term."""
        return [
            term
            for term in self.ordered_terms
            if not any(term < other for other in self.terms)
        ]

    def is_hierarchical(self) -> bool:
        return is_closed(self.terms)

    def has_term(self, term: Iterable[str]) -> bool:
        """Check whether a term (empty means intercept) belongs to the formula."""
        term_set = frozenset(term)
        return not term_set or term_set in self.terms

    def parameter_count(self, levels: Mapping[str, int]) -> int:
        """
        Number of corner-point parameters, intercept included.

        Args:
            levels: Number of levels J_p for every factor of the formula

        Returns:
            1 + sum over terms of the product of (J_p - 1)
        """
        return 1 + sum(prod(levels[name] - 1 for name in term) for term in self.terms)

    def rename(self, mapping: Mapping[str, str]) -> ModelFormula:
        """Return the same formula with factors renamed through ``mapping``."""
        renamed = tuple(mapping.get(name, name) for name in self.factors)
        return ModelFormula(
            factors=renamed,
            terms=frozenset(frozenset(mapping.get(n, n) for n in term) for term in self.terms),
        )

    def __str__(self) -> str:
        from loglinkit.formula.parser import format_model

        return format_model(self)
