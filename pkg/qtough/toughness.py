"""Exact Chvatal toughness and l-toughness over rationals."""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, Optional, Tuple, Union

from .config import NAIVE_BUDGET, TOUGHNESS_BUDGET
from .errors import BudgetExceeded, InvalidParameters
from .graph_core import Graph, VertexSet, count_components, independence_number


@functools.total_ordering
@dataclass(frozen=True)
class ExtendedRational:
    """A reduced rational, or +inf when `value` is None."""

    value: Optional[Fraction] = None

    @classmethod
    def of(cls, numerator: Union[int, Fraction], denominator: int = 1) -> "ExtendedRational":
        return cls(Fraction(numerator, denominator))

    @classmethod
    def infinity(cls) -> "ExtendedRational":
        return cls(None)

    @classmethod
    def parse(cls, text: str) -> "ExtendedRational":
        text = text.strip()
        if text.lower() in {"inf", "+inf"}:
            return cls.infinity()
        try:
            return cls(Fraction(text))
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidParameters(f"not a rational or 'inf': {text!r}") from e

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def _key(self) -> Tuple[int, Fraction]:
        return (1, Fraction(0)) if self.value is None else (0, self.value)

    def __lt__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ExtendedRational(Fraction(other))
        if not isinstance(other, ExtendedRational):
            return NotImplemented
        return self._key() < other._key()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ExtendedRational(Fraction(other))
        if not isinstance(other, ExtendedRational):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __float__(self) -> float:
        return float("inf") if self.value is None else float(self.value)

    def __str__(self) -> str:
        if self.value is None:
            return "inf"
        return f"{self.value.numerator}/{self.value.denominator}"


@dataclass(frozen=True)
class ToughnessResult:
    value: ExtendedRational
    witness: Optional[VertexSet]
    witness_components: int

    def to_json(self) -> Dict[str, Any]:
        return {
            "value": str(self.value),
            "witness": list(self.witness) if self.witness is not None else [],
            "components": self.witness_components,
        }


INFINITE = ToughnessResult(ExtendedRational.infinity(), None, 0)


def _check(g: Graph, l: int, budget: int) -> None:
    if l < 2:
        raise InvalidParameters(f"l must be >= 2, got {l}")
    if g.n > budget:
        raise BudgetExceeded("n", g.n, budget)


def _better(ratio: Fraction, mask: int, best: Optional[Tuple[Fraction, int]]) -> bool:
    # minimum ratio, ties to the smallest bitmask
    return best is None or (ratio, mask) < best


def l_toughness(g: Graph, l: int, budget: int = TOUGHNESS_BUDGET) -> ToughnessResult:
    """t_l(G) over proper subsets S (including the empty set) with c(G-S) >= l.

    Sizes are scanned upward; since c(G-S) <= min(n-s, alpha(G)), a size whose
    lower bound s / min(n-s, alpha) exceeds the best ratio is never reached.
    """
    _check(g, l, budget)
    alpha = independence_number(g)
    if l > alpha:
        return INFINITE

    rows, full = g.rows, g.full_mask
    best: Optional[Tuple[Fraction, int]] = None
    best_components = 0
    for s in range(g.n):
        cap = min(g.n - s, alpha)
        if cap < l:
            break
        if best is not None and Fraction(s, cap) > best[0]:
            break
        for members in combinations(range(g.n), s):
            mask = 0
            for v in members:
                mask |= 1 << v
            c = count_components(rows, full & ~mask)
            if c < l:
                continue
            ratio = Fraction(s, c)
            if _better(ratio, mask, best):
                best, best_components = (ratio, mask), c

    if best is None:
        return INFINITE
    return ToughnessResult(ExtendedRational(best[0]), VertexSet(best[1]), best_components)


def l_toughness_naive(g: Graph, l: int, budget: int = NAIVE_BUDGET) -> ToughnessResult:
    """Unpruned scan of all 2^n - 1 proper subsets; test oracle."""
    _check(g, l, budget)
    rows, full = g.rows, g.full_mask
    best: Optional[Tuple[Fraction, int]] = None
    best_components = 0
    for mask in range(full):
        c = count_components(rows, full & ~mask)
        if c < l:
            continue
        ratio = Fraction(mask.bit_count(), c)
        if _better(ratio, mask, best):
            best, best_components = (ratio, mask), c
    if best is None:
        return INFINITE
    return ToughnessResult(ExtendedRational(best[0]), VertexSet(best[1]), best_components)


def toughness(g: Graph, budget: int = TOUGHNESS_BUDGET) -> ToughnessResult:
    return l_toughness(g, 2, budget)


def is_tl_tough(g: Graph, t: Union[ExtendedRational, Fraction, int], l: int, budget: int = TOUGHNESS_BUDGET) -> bool:
    if not isinstance(t, ExtendedRational):
        t = ExtendedRational(Fraction(t))
    return l_toughness(g, l, budget).value >= t
