"""Graded Betti numbers of t-spread strongly stable ideals.

For such an ideal the graded Betti numbers depend only on the minimal
generators: each generator u of degree l contributes binom(max(u)-t(l-1)-1, k)
to the entry in homological position k and degree l.  Extremal entries (the
corners of the table) are recognized directly from the generators' largest
indices, and their values count the generators attaining the top index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .monomial import Ambient, DomainError, Monomial, max_index
from .enumeration import binom, top_index
from .borel import TMonomialSet, borel_closure_degree, is_strongly_stable, shadow


@dataclass(frozen=True)
class TIdeal:
    """A t-spread monomial ideal given by its minimal generators per degree."""

    amb: Ambient
    graded_gens: tuple[tuple[int, TMonomialSet], ...]  # (degree, generators), ascending

    @classmethod
    def of(cls, amb: Ambient, gens_by_degree: Mapping[int, Iterable[Monomial]]) -> "TIdeal":
        graded = []
        for degree in sorted(gens_by_degree):
            mset = TMonomialSet.of(amb, degree, gens_by_degree[degree])
            if mset.elements:
                graded.append((degree, mset))
        if not graded:
            raise DomainError("an ideal needs at least one generator")
        return cls(amb, tuple(graded))

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.graded_gens)

    def generators(self, degree: int) -> TMonomialSet:
        for d, mset in self.graded_gens:
            if d == degree:
                return mset
        return TMonomialSet(self.amb, max(degree, 1), ())

    def all_generators(self) -> list[Monomial]:
        out: list[Monomial] = []
        for _, mset in self.graded_gens:
            out.extend(mset.elements)
        return out

    def component(self, degree: int) -> TMonomialSet:
        """The full set of degree-``degree`` t-spread monomials of the ideal."""
        first = self.degrees[0]
        if degree < first:
            return TMonomialSet(self.amb, max(degree, 1), ())
        comp = self.generators(first)
        for d in range(first + 1, degree + 1):
            comp = shadow(comp).union(self.generators(d))
        return comp

    def validate(self) -> None:
        """Check the strongly stable and minimality invariants, degreewise."""
        first = self.degrees[0]
        last = self.degrees[-1]
        comp = self.generators(first)
        if not is_strongly_stable(comp):
            raise DomainError(f"degree-{first} component is not strongly stable")
        for d in range(first + 1, last + 1):
            grown = shadow(comp)
            gens = self.generators(d)
            for u in gens:
                if u in grown:
                    raise DomainError(
                        f"generator {list(u)} in degree {d} is not minimal"
                    )
            comp = grown.union(gens)
            if not is_strongly_stable(comp):
                raise DomainError(f"degree-{d} component is not strongly stable")

    def to_json(self) -> dict:
        return {
            "n": self.amb.n,
            "t": self.amb.t,
            "generators": {
                str(d): [list(u) for u in mset] for d, mset in self.graded_gens
            },
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "TIdeal":
        try:
            amb = Ambient(int(obj["n"]), int(obj["t"]))
            gens = {
                int(d): [tuple(int(i) for i in u) for u in monomials]
                for d, monomials in obj["generators"].items()
            }
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed ideal object: {exc}") from exc
        return cls.of(amb, gens)


def ideal_from_borel_generators(amb: Ambient, monomials: Iterable[Monomial]) -> TIdeal:
    """The smallest t-spread strongly stable ideal containing the monomials,
    presented by its minimal generators."""
    by_degree: dict[int, list[Monomial]] = {}
    for u in monomials:
        by_degree.setdefault(len(u), []).append(tuple(u))
    if not by_degree:
        raise DomainError("need at least one Borel generator")
    first = min(by_degree)
    last = max(by_degree)
    comps = []
    comp = borel_closure_degree(TMonomialSet.of(amb, first, by_degree[first]))
    comps.append(comp)
    for d in range(first + 1, last + 1):
        comp = shadow(comp)
        if d in by_degree:
            comp = comp.union(
                borel_closure_degree(TMonomialSet.of(amb, d, by_degree[d]))
            )
        comps.append(comp)
    return minimalize(comps)


def minimalize(components: Iterable[TMonomialSet]) -> TIdeal:
    """Extract minimal generators from consecutive-degree strongly stable
    components: in each degree drop the shadow of the previous component."""
    comps = list(components)
    if not comps:
        raise DomainError("minimalize needs at least one component")
    amb = comps[0].amb
    gens: dict[int, tuple[Monomial, ...]] = {}
    prev = None
    for comp in comps:
        if comp.amb != amb:
            raise DomainError("components must share one ambient")
        if prev is not None and comp.degree != prev.degree + 1:
            raise DomainError(
                f"components must cover consecutive degrees, got {prev.degree}"
                f" then {comp.degree}"
            )
        if not is_strongly_stable(comp):
            raise DomainError(f"degree-{comp.degree} component is not strongly stable")
        if prev is None:
            gens[comp.degree] = comp.elements
        else:
            grown = shadow(prev)
            missing = [u for u in grown if u not in comp]
            if missing:
                raise DomainError(
                    f"degree-{comp.degree} component misses shadow element"
                    f" {list(missing[0])}"
                )
            gens[comp.degree] = comp.difference(grown).elements
        prev = comp
    return TIdeal.of(amb, {d: us for d, us in gens.items() if us})


def graded_betti(ideal: TIdeal, k: int, l: int) -> int:
    """The Betti number in homological position k and generator degree l."""
    t = ideal.amb.t
    gens = ideal.generators(l)
    return sum(binom(max_index(u) - t * (l - 1) - 1, k) for u in gens)


@dataclass(frozen=True)
class BettiTable:
    """Nonzero Betti entries keyed by (homological position k, degree l)."""

    entries: tuple[tuple[tuple[int, int], int], ...]

    def value(self, k: int, l: int) -> int:
        return dict(self.entries).get((k, l), 0)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.entries)

    @property
    def degrees(self) -> tuple[int, ...]:
        ls = sorted({l for (_, l), _ in self.entries})
        return tuple(ls)

    @property
    def max_k(self) -> int:
        return max((k for (k, _), _ in self.entries), default=0)

    def totals(self) -> list[int]:
        tot = [0] * (self.max_k + 1)
        for (k, _), v in self.entries:
            tot[k] += v
        return tot

    def to_json(self) -> dict:
        rows: dict[str, dict[str, int]] = {}
        for (k, l), v in sorted(self.entries, key=lambda kv: (kv[0][1], kv[0][0])):
            rows.setdefault(str(l), {})[str(k)] = v
        return {"rows": rows, "tot": {str(k): v for k, v in enumerate(self.totals())}}


def betti_table(ideal: TIdeal) -> BettiTable:
    entries = []
    t = ideal.amb.t
    for l, gens in ideal.graded_gens:
        tops = [max_index(u) - t * (l - 1) - 1 for u in gens]
        for k in range(max(tops) + 1):
            v = sum(binom(top, k) for top in tops)
            if v:
                entries.append(((k, l), v))
    return BettiTable(tuple(entries))


def render_betti_table(table: BettiTable) -> str:
    """Plain-text table: homological positions across, degrees down, '-' for
    zero entries, with a total row."""
    if not table.entries:
        return "(empty Betti table)"
    ks = list(range(table.max_k + 1))
    degrees = list(range(min(table.degrees), max(table.degrees) + 1))
    tot = table.totals()
    rows: list[tuple[str, list[str]]] = [("Tot:", [str(v) for v in tot])]
    for l in degrees:
        cells = [str(table.value(k, l)) if table.value(k, l) else "-" for k in ks]
        rows.append((f"{l}:", cells))
    label_w = max(len(label) for label, _ in rows)
    widths = [
        max(len(str(k)), max(len(row[col]) for _, row in rows))
        for col, k in enumerate(ks)
    ]
    lines = [
        " " * label_w
        + "  "
        + "  ".join(str(k).rjust(w) for k, w in zip(ks, widths))
    ]
    for label, cells in rows:
        lines.append(
            label.rjust(label_w)
            + "  "
            + "  ".join(c.rjust(w) for c, w in zip(cells, widths))
        )
    return "\n".join(lines)


def is_extremal(ideal: TIdeal, k: int, l: int) -> bool:
    """Corner test from the generators' largest indices.

    (k, l) is extremal iff some degree-l generator attains max index exactly
    k + t*(l-1) + 1, no one exceeds it, and every generator of higher degree j
    stays strictly below k + t*(j-1) + 1.
    """
    t = ideal.amb.t
    gens = ideal.generators(l)
    if not gens.elements:
        return False
    if max(max_index(u) for u in gens) != top_index(k, l, t):
        return False
    for j, mset in ideal.graded_gens:
        if j > l and any(max_index(u) >= top_index(k, j, t) for u in mset):
            return False
    return True


def extremal_value(ideal: TIdeal, k: int, l: int) -> int:
    """Value of an extremal entry: the number of degree-l generators whose
    largest index is exactly k + t*(l-1) + 1."""
    if not is_extremal(ideal, k, l):
        raise DomainError(f"({k},{l}) is not an extremal position of this ideal")
    top = top_index(k, l, ideal.amb.t)
    return sum(1 for u in ideal.generators(l) if max_index(u) == top)


@dataclass(frozen=True)
class CornerData:
    """All corners of an ideal with their values, degree-ascending."""

    corners: tuple[tuple[int, int], ...]
    values: tuple[int, ...]

    def __post_init__(self):
        ks = [k for k, _ in self.corners]
        ls = [l for _, l in self.corners]
        if ks != sorted(ks, reverse=True) or len(set(ks)) != len(ks):
            raise DomainError("corner positions must be strictly k-descending")
        if ls != sorted(ls) or len(set(ls)) != len(ls):
            raise DomainError("corner degrees must be strictly increasing")

    def to_json(self) -> list[dict]:
        return [
            {"k": k, "l": l, "value": v}
            for (k, l), v in zip(self.corners, self.values)
        ]


def corner_sequence(ideal: TIdeal) -> CornerData:
    """Corners and values of the ideal, sorted by increasing degree."""
    t = ideal.amb.t
    corners = []
    values = []
    for l, gens in ideal.graded_gens:
        if not gens.elements:
            continue
        k = max(max_index(u) for u in gens) - t * (l - 1) - 1
        if k >= 1 and is_extremal(ideal, k, l):
            corners.append((k, l))
            values.append(extremal_value(ideal, k, l))
    return CornerData(tuple(corners), tuple(values))


def m2_generator_list(ideal: TIdeal) -> str:
    """Generators as a single computer-algebra-readable monomial list."""
    from .monomial import m2_monomial

    return ", ".join(m2_monomial(u) for u in ideal.all_generators())
