"""Shadows, strongly stable closures and Borel shadows of t-spread sets.

The t-shadow of a set multiplies each member by every variable that keeps it
t-spread.  The strongly stable closure saturates a set under all exchange
moves x_i(u/x_j), i < j.  A Borel shadow iterates the shadow of a closure and
keeps only the monomials whose largest index fits under a target corner; its
slex-minimum has a closed form used heavily by the solver.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional

from .monomial import Ambient, DomainError, Monomial, borel_move, is_tspread
from .enumeration import top_index


@dataclass(frozen=True)
class TMonomialSet:
    """A duplicate-free set of same-degree t-spread monomials.

    ``elements`` is kept in ascending tuple order, which is slex-descending.
    """

    amb: Ambient
    degree: int
    elements: tuple[Monomial, ...]

    @classmethod
    def of(cls, amb: Ambient, degree: int, monomials: Iterable[Monomial]) -> "TMonomialSet":
        if degree < 1:
            raise DomainError(f"monomial sets require degree >= 1, got {degree}")
        elems = sorted(set(tuple(u) for u in monomials))
        for u in elems:
            if len(u) != degree:
                raise DomainError(
                    f"expected degree {degree}, got {list(u)} of degree {len(u)}"
                )
            if not is_tspread(u, amb):
                raise DomainError(f"{list(u)} is not {amb.t}-spread")
        return cls(amb, degree, tuple(elems))

    @cached_property
    def _index(self) -> frozenset[Monomial]:
        return frozenset(self.elements)

    def __contains__(self, u: Monomial) -> bool:
        return u in self._index

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.elements)

    def greatest(self) -> Monomial:
        if not self.elements:
            raise DomainError("empty set has no greatest element")
        return self.elements[0]

    def least(self) -> Monomial:
        if not self.elements:
            raise DomainError("empty set has no least element")
        return self.elements[-1]

    def union(self, other: "TMonomialSet") -> "TMonomialSet":
        self._check_compatible(other)
        return TMonomialSet(
            self.amb, self.degree, tuple(sorted(self._index | other._index))
        )

    def difference(self, other: "TMonomialSet") -> "TMonomialSet":
        self._check_compatible(other)
        return TMonomialSet(
            self.amb, self.degree, tuple(sorted(self._index - other._index))
        )

    def _check_compatible(self, other: "TMonomialSet") -> None:
        if self.amb != other.amb or self.degree != other.degree:
            raise DomainError("set operands must share ambient and degree")


def _with_index(u: Monomial, i: int, t: int) -> Optional[Monomial]:
    # insert i into u when the result stays t-spread; None otherwise
    pos = bisect_left(u, i)
    if pos < len(u) and u[pos] == i:
        return None
    if pos > 0 and i - u[pos - 1] < t:
        return None
    if pos < len(u) and u[pos] - i < t:
        return None
    return u[:pos] + (i,) + u[pos:]


def shadow(L: TMonomialSet) -> TMonomialSet:
    """All t-spread one-variable multiples of members of L."""
    amb, t = L.amb, L.amb.t
    out = set()
    for w in L:
        for i in range(1, amb.n + 1):
            v = _with_index(w, i, t)
            if v is not None:
                out.add(v)
    return TMonomialSet(amb, L.degree + 1, tuple(sorted(out)))


def shadow_power(L: TMonomialSet, s: int) -> TMonomialSet:
    """s-fold iterated shadow; s = 0 is the identity."""
    if s < 0:
        raise DomainError(f"shadow_power needs s >= 0, got {s}")
    cur = L
    for _ in range(s):
        cur = shadow(cur)
    return cur


def borel_closure_degree(gens: TMonomialSet) -> TMonomialSet:
    """Smallest t-spread strongly stable set containing the generators.

    Worklist saturation under all admissible exchange moves; termination is
    clear since moves only decrease index tuples.
    """
    amb = gens.amb
    seen: set[Monomial] = set(gens.elements)
    stack: list[Monomial] = list(gens.elements)
    while stack:
        u = stack.pop()
        for j in u:
            for i in range(1, j):
                v = borel_move(u, i, j, amb)
                if v is not None and v not in seen:
                    seen.add(v)
                    stack.append(v)
    return TMonomialSet(amb, gens.degree, tuple(sorted(seen)))


def is_strongly_stable(L: TMonomialSet) -> bool:
    """True when L is closed under every admissible exchange move."""
    amb = L.amb
    for u in L:
        for j in u:
            for i in range(1, j):
                v = borel_move(u, i, j, amb)
                if v is not None and v not in L:
                    return False
    return True


def _borel_shadow_args(T: TMonomialSet, k2: int, l2: int, op: str) -> int:
    t = T.amb.t
    l1 = T.degree
    if l1 >= l2:
        raise DomainError(f"{op}: target degree must exceed {l1}, got {l2}")
    if k2 < 1:
        raise DomainError(f"{op}: target corner needs k2 >= 1, got {k2}")
    bound = top_index(k2, l2, t)
    if bound > T.amb.n:
        raise DomainError(f"{op}: bound index {bound} exceeds n={T.amb.n}")
    if T.elements:
        k1_eff = max(u[-1] for u in T) - t * (l1 - 1) - 1
        if k1_eff <= k2:
            raise DomainError(
                f"{op}: source corner k1={k1_eff} must exceed target k2={k2}"
            )
    return bound


def bshad(T: TMonomialSet, k2: int, l2: int) -> TMonomialSet:
    """Borel t-shadow of T with respect to the corner (k2, l2).

    Composition exactly as defined: strongly stable closure, then the
    iterated shadow up to degree l2, then the cut at max index
    k2 + t*(l2-1) + 1.
    """
    bound = _borel_shadow_args(T, k2, l2, "bshad")
    if not T.elements:
        return TMonomialSet(T.amb, l2, ())
    cur = borel_closure_degree(T)
    cur = shadow_power(cur, l2 - T.degree)
    return TMonomialSet(T.amb, l2, tuple(u for u in cur if u[-1] <= bound))


def min_bshad_single(u: Monomial, k2: int, l2: int, amb: Ambient) -> Monomial:
    """Slex-least member of the Borel t-shadow of {u} at the corner (k2, l2).

    Closed form: walk the corner profile b_s = k2 + t*(s-1) + 1.  Up to the
    crossover position, where u first exceeds the profile, the minimum keeps
    u's own indices; from there on it runs along the profile.  The junction
    is automatically t-spread because u crossed from below, so the formula is
    total on its domain: the filtered shadow is never empty here.
    """
    t = amb.t
    l1 = len(u)
    if l1 < 1:
        raise DomainError("min_bshad_single needs a monomial of degree >= 1")
    if not is_tspread(u, amb):
        raise DomainError(f"{list(u)} is not {t}-spread")
    if l1 >= l2:
        raise DomainError(f"min_bshad_single: target degree must exceed {l1}, got {l2}")
    if k2 < 1:
        raise DomainError(f"min_bshad_single: needs k2 >= 1, got {k2}")
    bound = top_index(k2, l2, t)
    if bound > amb.n:
        raise DomainError(f"min_bshad_single: bound index {bound} exceeds n={amb.n}")
    profile = tuple(k2 + t * s + 1 for s in range(l2))
    cross = l1
    for s in range(l1):
        if u[s] > profile[s]:
            cross = s
            break
    return u[:cross] + profile[cross:]


def min_bshad_set(T: TMonomialSet, k2: int, l2: int) -> Monomial:
    """Slex-least member of the Borel t-shadow of a set.

    Equals the minimum over its slex-least element: the closed form above is
    monotone in slex, so only the least generator matters.
    """
    if not T.elements:
        raise DomainError("min_bshad_set needs a nonempty set")
    _borel_shadow_args(T, k2, l2, "min_bshad_set")
    return min_bshad_single(T.least(), k2, l2, T.amb)
