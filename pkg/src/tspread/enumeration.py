"""Counting and slex-ordered enumeration of t-spread monomials.

Two families matter:

* ``M(n, d, t)``: all t-spread monomials of degree d on x_1..x_n.
* ``A(k, l)``: the t-spread monomials of degree l whose largest index is
  exactly ``k + t*(l-1) + 1``.

Both are enumerated slex-descending, which coincides with ascending order of
the index tuples.  Ranks inside ``A`` are computed by the gap descent: the
count of monomials above ``u`` breaks into one exact binomial per admissible
smaller index at each position, so the whole rank is a short sum of
binomials driven by min(u) and the gap widths.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, Optional

from .monomial import Ambient, DomainError, Monomial, gap_profile, is_tspread


def binom(a: int, b: int) -> int:
    """Binomial coefficient with the conventions binom(a,b)=0 for a<b or b<0,
    and binom(a,0)=1 for a>=0 (including binom(0,0)=1)."""
    if b < 0 or a < b:
        return 0
    return comb(a, b)


def card_M(n: int, d: int, t: int) -> int:
    """|M(n,d,t)| = binom(n - (d-1)(t-1), d); zero when there is no room."""
    if n < 1 or t < 1 or d < 0:
        raise DomainError(f"card_M needs n,t >= 1 and d >= 0, got {(n, d, t)}")
    if d == 0:
        return 1
    return binom(n - (d - 1) * (t - 1), d)


def iter_M(n: int, d: int, t: int) -> Iterator[Monomial]:
    """Yield M(n,d,t) in slex-descending order.

    Works through the bijection with plain d-subsets of [1, n-(d-1)(t-1)]
    given by subtracting (j-1)(t-1) from the j-th index; lexicographic subset
    order maps exactly onto descending slex.
    """
    if n < 1 or t < 1 or d < 0:
        raise DomainError(f"iter_M needs n,t >= 1 and d >= 0, got {(n, d, t)}")
    if d == 0:
        yield ()
        return
    m = n - (d - 1) * (t - 1)
    if m < d:
        return
    shift = tuple(j * (t - 1) for j in range(d))
    for c in combinations(range(1, m + 1), d):
        yield tuple(a + s for a, s in zip(c, shift))


def enumerate_M(n: int, d: int, t: int) -> list[Monomial]:
    return list(iter_M(n, d, t))


def card_A(k: int, l: int) -> int:
    """|A(k,l)| = binom(k+l-1, l-1); independent of t and of the ambient n."""
    if k < 1 or l < 1:
        raise DomainError(f"card_A needs k,l >= 1, got {(k, l)}")
    return binom(k + l - 1, l - 1)


def top_index(k: int, l: int, t: int) -> int:
    """The fixed largest index k + t*(l-1) + 1 shared by all of A(k,l)."""
    return k + t * (l - 1) + 1


def max_A(k: int, l: int, t: int) -> Monomial:
    """Slex-greatest member: x_1 x_{1+t} ... x_{1+t(l-2)} x_{k+t(l-1)+1}."""
    if k < 1 or l < 1:
        raise DomainError(f"max_A needs k,l >= 1, got {(k, l)}")
    return tuple(1 + t * j for j in range(l - 1)) + (top_index(k, l, t),)


def min_A(k: int, l: int, t: int) -> Monomial:
    """Slex-least member: x_{k+1} x_{k+t+1} ... x_{k+t(l-1)+1}."""
    if k < 1 or l < 1:
        raise DomainError(f"min_A needs k,l >= 1, got {(k, l)}")
    return tuple(k + t * j + 1 for j in range(l))


def in_A(u: Monomial, k: int, l: int, amb: Ambient) -> bool:
    return (
        len(u) == l
        and is_tspread(u, amb)
        and u[-1] == top_index(k, l, amb.t)
    )


def _require_in_A(u: Monomial, k: int, l: int, amb: Ambient, op: str) -> None:
    if top_index(k, l, amb.t) > amb.n:
        raise DomainError(
            f"{op}: A({k},{l}) needs k+t(l-1)+1 = {top_index(k, l, amb.t)} <= n = {amb.n}"
        )
    if not in_A(u, k, l, amb):
        raise DomainError(f"{op}: {list(u)} is not in A({k},{l}) for t={amb.t}")


def enumerate_A(k: int, l: int, amb: Ambient) -> list[Monomial]:
    """All of A(k,l) slex-descending; the last l-th index is fixed, the head
    runs over M(k + t*(l-2) + 1, l-1, t)."""
    t = amb.t
    top = top_index(k, l, t)
    if top > amb.n:
        raise DomainError(f"enumerate_A: top index {top} exceeds n={amb.n}")
    if l == 1:
        return [(k + 1,)]
    return [head + (top,) for head in iter_M(k + t * (l - 2) + 1, l - 1, t)]


def successor_in_A(u: Monomial, k: int, l: int, amb: Ambient) -> Optional[Monomial]:
    """Greatest member of A(k,l) strictly below u, or None at the minimum.

    With p the last gap position of u, the successor bumps position p by one
    and continues with the tight run before rejoining the fixed top index.
    """
    _require_in_A(u, k, l, amb, "successor_in_A")
    t = amb.t
    gaps = gap_profile(u, t)
    if not gaps:
        return None
    p = max(gaps)
    base = u[p - 1] + 1
    run = tuple(base + t * nu for nu in range(1, l - p))
    return u[: p - 1] + (base,) + run + (top_index(k, l, t),)


def predecessor_in_A(u: Monomial, k: int, l: int, amb: Ambient) -> Optional[Monomial]:
    """Least member of A(k,l) strictly above u, or None at the maximum.

    Mirror of the successor: decrement the last position that can move left,
    then finish with the slex-least completion, the run tight against the top.
    """
    _require_in_A(u, k, l, amb, "predecessor_in_A")
    t = amb.t
    top = top_index(k, l, t)
    for s in range(l - 1, 0, -1):
        lo = u[s - 2] + t if s >= 2 else 1
        if u[s - 1] - 1 >= lo:
            tail = tuple(top - t * (l - j) for j in range(s + 1, l + 1))
            return u[: s - 1] + (u[s - 1] - 1,) + tail
    return None


def iter_A_ascending(k: int, l: int, amb: Ambient) -> Iterator[Monomial]:
    """Walk A(k,l) slex-ascending from the minimum, lazily."""
    u: Optional[Monomial] = min_A(k, l, amb.t)
    while u is not None:
        yield u
        u = predecessor_in_A(u, k, l, amb)


def rank_in_A(u: Monomial, k: int, l: int, amb: Ambient) -> int:
    """1-based position of u in the slex-descending order of A(k,l).

    Equals |{w in A(k,l) : w >= u}|.  Gap descent: for each position s and
    each admissible index j below u's, the completions with that prefix are
    counted by one binomial, so the rank is min(u) + (sum of gap widths of
    u / x_max) binomials in total, the last being binom(0,0) for u itself.
    """
    _require_in_A(u, k, l, amb, "rank_in_A")
    t = amb.t
    top = top_index(k, l, t)
    total = 1
    for s in range(1, l):
        lo = u[s - 2] + t if s >= 2 else 1
        m = l - s
        for j in range(lo, u[s - 1]):
            total += binom(top - j - t * m + m - 1, m - 1)
    return total


@dataclass(frozen=True)
class SlexSegment:
    """A slex interval [first, last] inside A(k,l): first >= last."""

    amb: Ambient
    k: int
    l: int
    first: Monomial
    last: Monomial

    def __post_init__(self):
        _require_in_A(self.first, self.k, self.l, self.amb, "SlexSegment")
        _require_in_A(self.last, self.k, self.l, self.amb, "SlexSegment")
        if self.first > self.last:  # ascending tuples = descending slex
            raise DomainError(
                f"segment needs first >= last in slex, got {list(self.first)}"
                f" < {list(self.last)}"
            )

    def members(self) -> list[Monomial]:
        out = [self.first]
        while out[-1] != self.last:
            nxt = successor_in_A(out[-1], self.k, self.l, self.amb)
            assert nxt is not None
            out.append(nxt)
        return out


def segment_card(seg: SlexSegment) -> int:
    """|[first, last]|; the half-open [first, last) is this value minus one."""
    hi = rank_in_A(seg.first, seg.k, seg.l, seg.amb)
    lo = rank_in_A(seg.last, seg.k, seg.l, seg.amb)
    return lo - hi + 1


def segment_ending_at(
    last: Monomial, a: int, k: int, l: int, amb: Ambient
) -> SlexSegment:
    """The segment of cardinality a whose final (slex-least) element is ``last``.

    Requires a <= rank(last): there must be enough room above.
    """
    _require_in_A(last, k, l, amb, "segment_ending_at")
    room = rank_in_A(last, k, l, amb)
    if not 1 <= a <= room:
        raise DomainError(
            f"segment_ending_at: need 1 <= a <= {room} above {list(last)}, got a={a}"
        )
    first = last
    for _ in range(a - 1):
        first = predecessor_in_A(first, k, l, amb)
        assert first is not None
    return SlexSegment(amb, k, l, first, last)


def take_smallest_segment(k: int, l: int, amb: Ambient, a: int) -> SlexSegment:
    """The a smallest members of A(k,l), as the segment ending at min A(k,l)."""
    if not 1 <= a <= card_A(k, l):
        raise DomainError(
            f"take_smallest_segment: need 1 <= a <= |A({k},{l})| = {card_A(k, l)},"
            f" got a={a}"
        )
    return segment_ending_at(min_A(k, l, amb.t), a, k, l, amb)


def decompose_by_min(k: int, l: int) -> list[tuple[int, int]]:
    """Split |A(k,l)| by smallest index: (i, b_i) with b_i = binom(k+l-1-i, l-2).

    The b_i count the members with min = i, for i = 1..k+1, and sum to
    binom(k+l-1, l-1).
    """
    if l < 2:
        raise DomainError(f"decompose_by_min needs l >= 2, got l={l}")
    if k < 1:
        raise DomainError(f"decompose_by_min needs k >= 1, got k={k}")
    return [(i, binom(k + l - 1 - i, l - 2)) for i in range(1, k + 2)]
