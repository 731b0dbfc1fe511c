"""Graph families, quotient matrices and polynomials of the two Q-index toughness theorems.

Every family here is K_s v (K_m u kK_1) for some part sizes; vertices are
labeled join clique first, then the big clique, then the isolated side.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple, Union

import numpy as np

from .errors import InvalidParameters
from .graph_core import Graph, copies, disjoint_union, join, make_complete
from .logging_utils import get_logger, log
from .spectral import QuotientMatrix

logger = get_logger("extremal")

Number = Union[int, float, Fraction]

THM11 = "thm11"
THM12 = "thm12"
THEOREMS = (THM11, THM12)


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class TheoremParams:
    b: int
    l: int
    n: int
    s: Optional[int] = None
    omega: Optional[int] = None

    @property
    def ceil_ratio(self) -> int:
        """ceil((l-1)/b)."""
        return ceil_div(self.l - 1, self.b)

    @property
    def floor_ratio(self) -> int:
        """floor((l-1)/b)."""
        return (self.l - 1) // self.b

    @property
    def divides(self) -> bool:
        return (self.l - 1) % self.b == 0

    def validate(self, theorem: str) -> None:
        min_b = 1 if theorem == THM11 else 2
        if theorem not in THEOREMS:
            raise InvalidParameters(f"unknown theorem {theorem!r}")
        if self.b < min_b:
            raise InvalidParameters(f"{theorem} requires b >= {min_b}, got b={self.b}")
        if self.l < 2:
            raise InvalidParameters(f"{theorem} requires l >= 2, got l={self.l}")


@dataclass(frozen=True)
class CubicPolynomial:
    c3: float
    c2: float
    c1: float
    c0: float

    @property
    def coefficients(self) -> Tuple[float, float, float, float]:
        return (self.c3, self.c2, self.c1, self.c0)

    def __call__(self, x: Number) -> Number:
        return ((self.c3 * x + self.c2) * x + self.c1) * x + self.c0


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidParameters(message)


def split_join_graph(s: int, m: int, k: int) -> Graph:
    """K_s v (K_m u kK_1)."""
    _require(s >= 0 and m >= 0 and k >= 0, f"part sizes must be >= 0, got s={s} m={m} k={k}")
    return join(make_complete(s), disjoint_union(make_complete(m), copies(k, make_complete(1))))


def _flag_disconnected(family: str, s: int, n: int) -> None:
    if s == 0:
        log(logger, logging.WARNING, "extremal.disconnected", op=family, n=n, status="join part size 0")


def n_min_thm11(b: int, l: int) -> int:
    TheoremParams(b, l, 0).validate(THM11)
    first = Fraction((5 * b * b + 8 * b + 6) * l, 2) - b * b - 2 * b - 5
    second = Fraction((2 * b + 1) * l * l + (2 * b - 3) * l + 2, 2)
    return math.ceil(max(first, second))


def n_min_thm12(b: int, l: int) -> int:
    p = TheoremParams(b, l, 0)
    p.validate(THM12)
    return 6 * b * p.ceil_ratio


def n_min(theorem: str, b: int, l: int) -> int:
    return n_min_thm11(b, l) if theorem == THM11 else n_min_thm12(b, l)


def thm11_parts(b: int, l: int, n: int) -> Tuple[int, int, int]:
    TheoremParams(b, l, n).validate(THM11)
    parts = (b * l - 1, n - (b + 1) * l + 2, l - 1)
    _require(parts[1] >= 1, f"thm11 needs n - (b+1)l + 2 >= 1, got {parts[1]}")
    return parts


def thm12_parts(b: int, l: int, n: int) -> Tuple[int, int, int]:
    p = TheoremParams(b, l, n)
    p.validate(THM12)
    f = p.floor_ratio
    parts = (f, n - f - l + 1, l - 1)
    _require(parts[1] >= 0, f"thm12 needs n - floor((l-1)/b) - l + 1 >= 0, got {parts[1]}")
    return parts


def extremal_parts(theorem: str, b: int, l: int, n: int) -> Tuple[int, int, int]:
    return thm11_parts(b, l, n) if theorem == THM11 else thm12_parts(b, l, n)


def thm11_extremal(b: int, l: int, n: int) -> Graph:
    """K_{bl-1} v (K_{n-(b+1)l+2} u (l-1)K_1)."""
    return split_join_graph(*thm11_parts(b, l, n))


def thm12_extremal(b: int, l: int, n: int) -> Graph:
    """K_f v (K_{n-f-l+1} u (l-1)K_1) with f = floor((l-1)/b); disconnected when f = 0."""
    s, m, k = thm12_parts(b, l, n)
    _flag_disconnected(THM12, s, n)
    return split_join_graph(s, m, k)


def extremal_graph(theorem: str, b: int, l: int, n: int) -> Graph:
    return thm11_extremal(b, l, n) if theorem == THM11 else thm12_extremal(b, l, n)


def predicted_toughness(theorem: str, b: int, l: int) -> Fraction:
    """t_l of the extremal graph: the join clique over its l components."""
    if theorem == THM11:
        return Fraction(b * l - 1, l)
    return Fraction((l - 1) // b, l)


def toughness_target(theorem: str, b: int) -> Fraction:
    return Fraction(b) if theorem == THM11 else Fraction(1, b)


def proof_g2_case1(b: int, omega: int, n: int) -> Graph:
    """K_{b.omega-1} v (K_{n-(b+1)omega+2} u (omega-1)K_1)."""
    _require(b >= 1 and omega >= 1, f"need b >= 1 and omega >= 1, got b={b} omega={omega}")
    _require(n >= (b + 1) * omega - 1, f"need n >= (b+1)omega - 1 = {(b + 1) * omega - 1}, got n={n}")
    return split_join_graph(b * omega - 1, n - (b + 1) * omega + 2, omega - 1)


def case2_split(b: int, n: int) -> int:
    """ceil((n+2)/(b+1))."""
    return ceil_div(n + 2, b + 1)


def proof_g3_case2(b: int, n: int) -> Graph:
    """K_{n-k} v kK_1 with k = ceil((n+2)/(b+1))."""
    _require(b >= 1 and n >= b + 1, f"need b >= 1 and n >= b+1, got b={b} n={n}")
    k = case2_split(b, n)
    return split_join_graph(n - k, 0, k)


def proof_thm12_g2(s: int, omega: int, n: int) -> Graph:
    """K_s v (K_{n-s-omega+1} u (omega-1)K_1)."""
    _require(s >= 0 and omega >= 1, f"need s >= 0 and omega >= 1, got s={s} omega={omega}")
    _require(n - s - omega + 1 >= 1, f"need n - s - omega + 1 >= 1, got {n - s - omega + 1}")
    return split_join_graph(s, n - s - omega + 1, omega - 1)


def thm12_g3_parts(b: int, l: int, n: int) -> Tuple[int, int, int]:
    p = TheoremParams(b, l, n)
    _require(b >= 1 and l >= 2, f"need b >= 1 and l >= 2, got b={b} l={l}")
    h = p.ceil_ratio
    parts = (h, n - b * h - h, b * h)
    _require(parts[1] >= 0, f"G3 needs n - b.h - h >= 0, got {parts[1]}")
    return parts


def thm12_g3prime_parts(b: int, l: int, n: int) -> Tuple[int, int, int]:
    p = TheoremParams(b, l, n)
    _require(b >= 1 and l >= 2, f"need b >= 1 and l >= 2, got b={b} l={l}")
    _require(not p.divides, f"G3' is only defined when b does not divide l-1 (b={b}, l={l})")
    h = p.ceil_ratio
    parts = (h - 1, n - b * h - h + 2, b * h - 1)
    _require(parts[1] >= 0, f"G3' needs n - b.h - h + 2 >= 0, got {parts[1]}")
    return parts


def proof_thm12_g3(b: int, l: int, n: int) -> Graph:
    return split_join_graph(*thm12_g3_parts(b, l, n))


def proof_thm12_g3prime(b: int, l: int, n: int) -> Graph:
    s, m, k = thm12_g3prime_parts(b, l, n)
    _flag_disconnected("thm12_g3prime", s, n)
    return split_join_graph(s, m, k)


def general_quotient(s: int, m: int, k: int) -> QuotientMatrix:
    """Quotient of Q(K_s v (K_m u kK_1)) for the partition join / big clique / isolated side."""
    n = s + m + k
    entries = np.array(
        [
            [n + s - 2, m, k],
            [s, s + 2 * m - 2, 0],
            [s, 0, s],
        ],
        dtype=np.float64,
    )
    return QuotientMatrix(entries=entries, class_sizes=(s, m, k))


def charpoly_general(s: int, m: int, k: int) -> CubicPolynomial:
    """det(xI - B) for B = general_quotient(s, m, k), by cofactor expansion."""
    n = s + m + k
    a, e = n + s - 2, s + 2 * m - 2
    p = np.poly1d([1, -a]) * np.poly1d([1, -e]) * np.poly1d([1, -s]) - m * s * np.poly1d([1, -s]) - k * s * np.poly1d([1, -e])
    c3, c2, c1, c0 = (float(c) for c in p.coeffs)
    return CubicPolynomial(c3, c2, c1, c0)


def quotient_B1(n: int, s: int, b: int) -> QuotientMatrix:
    _require(b >= 1 and s >= 1, f"need b >= 1 and s >= 1, got b={b} s={s}")
    _require(n - b * s - s >= 1, f"B1 needs n - bs - s >= 1, got {n - b * s - s}")
    return general_quotient(s, n - b * s - s, b * s)


def quotient_B2(n: int, b: int, l: int) -> QuotientMatrix:
    return general_quotient(*thm12_g3_parts(b, l, n))


def quotient_B2prime(n: int, b: int, l: int) -> QuotientMatrix:
    return general_quotient(*thm12_g3prime_parts(b, l, n))


def charpoly_fB1(n: Number, s: Number, b: Number) -> CubicPolynomial:
    return CubicPolynomial(
        1,
        -3 * n + 2 * b * s - s + 4,
        2 * n**2 - 2 * b * s * n + 3 * s * n - 6 * n - 4 * b * s**2 + 4 * b * s - 4 * s + 4,
        -2 * s * n**2 + 4 * b * s**2 * n + 6 * s * n - 2 * b**2 * s**3 - 6 * b * s**2 - 4 * s,
    )


def charpoly_fB2(n: int, b: int, l: int) -> CubicPolynomial:
    return charpoly_fB1(n, ceil_div(l - 1, b), b)


def charpoly_fB2prime(n: int, b: int, l: int) -> CubicPolynomial:
    h = ceil_div(l - 1, b)
    return CubicPolynomial(
        1,
        -3 * n + 2 * b * h - h + 3,
        2 * n**2 - 2 * b * h * n + 3 * h * n - 7 * n - 4 * b * h**2 + 8 * b * h,
        -2 * h * n**2
        + 2 * n**2
        + 4 * b * h**2 * n
        - 4 * b * h * n
        + 2 * h * n
        - 2 * n
        - 2 * b**2 * h**3
        + 2 * b**2 * h**2
        - 2 * b * h**2
        + 2 * b * h,
    )


def phi_sec3(omega: Number, n: Number, b: Number) -> Number:
    """(2b+1)w^2 - (2n+2b+3)w + 2n^2 - 2n + 4; (n-1) q(G2) is at most this."""
    return (2 * b + 1) * omega**2 - (2 * n + 2 * b + 3) * omega + 2 * n**2 - 2 * n + 4


def phi_sec3_gap(l: int, n: int, b: int) -> Fraction:
    """Factored form of phi(l+1) - phi((n+1)/(b+1))."""
    return Fraction((n - (b + 1) * l - b) * (n - (b + 1) * (2 * b + 1) * l + 1), (b + 1) ** 2)


def phi_sec4(x: Number, n: int, b: int, s: int, l: int) -> Number:
    h = ceil_div(l - 1, b)
    return (
        (2 * b - 1) * x**2
        - (2 * b * n - 3 * n + 4 * b * s + 4 * b * h - 4 * b + 4) * x
        - 2 * n**2
        + 4 * b * s * n
        + 4 * b * n * h
        + 6 * n
        - 2 * b**2 * s**2
        - 2 * b**2 * s * h
        - 2 * b**2 * h**2
        - 6 * b * s
        - 6 * b * h
        - 4
    )


def phi_sec4_axis(n: int, b: int, s: int, l: int) -> Fraction:
    h = ceil_div(l - 1, b)
    return Fraction(2 * b * n - 3 * n + 4 * b * s + 4 * b * h - 4 * b + 4, 2 * (2 * b - 1))


def eq45_difference(x: Number, n: int, b: int, l: int) -> Number:
    """Expanded f_B2(x) - f_B2'(x)."""
    h = ceil_div(l - 1, b)
    return (
        x**2
        + (n - 4 * b * h - 4 * h + 4) * x
        - 2 * n**2
        + 4 * b * h * n
        + 4 * h * n
        + 2 * n
        - 2 * b**2 * h**2
        - 4 * b * h**2
        - 2 * b * h
        - 4 * h
    )


def describe(theorem: str, b: int, l: int, n: int) -> Dict[str, object]:
    s, m, k = extremal_parts(theorem, b, l, n)
    return {
        "theorem": theorem,
        "b": b,
        "l": l,
        "n": n,
        "join": s,
        "clique": m,
        "isolated": k,
        "n_min": n_min(theorem, b, l),
        "predicted_t_l": str(predicted_toughness(theorem, b, l)),
        "connected": s >= 1,
    }
