"""Core representation of t-spread monomials.

A squarefree monomial is stored as a strictly increasing tuple of variable
indices; the empty tuple is the unit monomial 1.  A monomial is *t-spread*
when consecutive indices differ by at least t.  All operations here are pure
functions over immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

Monomial = tuple[int, ...]


class DomainError(ValueError):
    """Raised when an operation's precondition is violated."""


@dataclass(frozen=True)
class Ambient:
    """Ring context: ``n`` variables x_1..x_n and spread parameter ``t >= 1``."""

    n: int
    t: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"ambient requires n >= 1, got n={self.n}")
        if self.t < 1:
            raise DomainError(f"ambient requires t >= 1, got t={self.t}")


def as_monomial(indices: Iterable[int]) -> Monomial:
    """Normalize a sequence of indices into a monomial tuple.

    Indices must be positive and strictly increasing.
    """
    u = tuple(int(i) for i in indices)
    if u and u[0] < 1:
        raise DomainError(f"variable indices must be >= 1, got {list(u)}")
    for a, b in zip(u, u[1:]):
        if b <= a:
            raise DomainError(f"indices must be strictly increasing, got {list(u)}")
    return u


def check_in_ambient(u: Monomial, amb: Ambient) -> None:
    if u and u[-1] > amb.n:
        raise DomainError(f"index {u[-1]} exceeds the ambient n={amb.n}")


def degree(u: Monomial) -> int:
    return len(u)


def max_index(u: Monomial) -> int:
    """Largest variable index; 0 for the unit monomial."""
    return u[-1] if u else 0


def min_index(u: Monomial) -> int:
    """Smallest variable index; 0 for the unit monomial."""
    return u[0] if u else 0


def support(u: Monomial) -> frozenset[int]:
    return frozenset(u)


def is_tspread(u: Monomial, amb: Ambient) -> bool:
    """True when all consecutive index differences are >= t.

    Monomials of degree <= 1 are vacuously t-spread.
    """
    check_in_ambient(u, amb)
    return all(b - a >= amb.t for a, b in zip(u, u[1:]))


def slex_cmp(u: Monomial, v: Monomial) -> int:
    """Squarefree-lex comparison of equal-degree monomials.

    Returns +1 when u > v, -1 when u < v, 0 on equality.  u beats v exactly
    when u has the smaller index at the first differing position, so the
    plain tuple order is the *reverse* of slex: ascending tuples enumerate
    monomials in slex-descending order.
    """
    if len(u) != len(v):
        raise DomainError(
            f"slex compares equal degrees only, got degrees {len(u)} and {len(v)}"
        )
    if u == v:
        return 0
    return 1 if u < v else -1


def slex_sorted(monomials: Iterable[Monomial]) -> list[Monomial]:
    """Deduplicate and sort slex-descending (equivalently: ascending tuples)."""
    return sorted(set(monomials))


def gap_profile(u: Monomial, t: int) -> dict[int, int]:
    """Positions j (1-based) where i_{j+1} - i_j exceeds t, with the excess widths.

    Positions absent from the map are exactly the tight steps i_{j+1} - i_j = t.
    """
    if not u:
        raise DomainError("gap profile requires degree >= 1")
    gaps: dict[int, int] = {}
    for j, (a, b) in enumerate(zip(u, u[1:]), start=1):
        w = b - a - t
        if w < 0:
            raise DomainError(f"{list(u)} is not {t}-spread at position {j}")
        if w > 0:
            gaps[j] = w
    return gaps


def borel_move(u: Monomial, i: int, j: int, amb: Ambient) -> Optional[Monomial]:
    """Exchange x_j for the smaller x_i, i.e. form x_i * (u / x_j).

    Returns the resulting monomial when it is t-spread, otherwise None.
    Requires j in the support and 1 <= i < j.
    """
    if j not in u:
        raise DomainError(f"x_{j} does not divide {list(u)}")
    if not 1 <= i < j:
        raise DomainError(f"borel move needs 1 <= i < j, got i={i}, j={j}")
    check_in_ambient(u, amb)
    if i in u:
        return None
    v = tuple(sorted(set(u) - {j} | {i}))
    if all(b - a >= amb.t for a, b in zip(v, v[1:])):
        return v
    return None


def parse_monomial(text: str) -> Monomial:
    """Parse ``4,9,13,16`` or ``[4,9,13,16]``; empty input is the unit monomial."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    body = body.strip()
    if not body:
        return ()
    try:
        parts = [int(p) for p in body.split(",")]
    except ValueError as exc:
        raise DomainError(f"cannot parse monomial from {text!r}") from exc
    return as_monomial(parts)


def format_monomial(u: Monomial) -> str:
    return ",".join(str(i) for i in u)


def m2_monomial(u: Monomial) -> str:
    """Render as a product of variables readable by computer algebra systems."""
    if not u:
        return "1"
    return "*".join(f"x_{i}" for i in u)
