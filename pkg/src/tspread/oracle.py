"""Brute-force reference implementations and the closed-form-vs-oracle sweep.

Everything here recomputes results definitionally: enumeration by filtering
plain index subsets, ranks by list position, closures by the componentwise
Borel order, Borel-shadow minima by materializing the whole filtered shadow,
extremality by scanning the full Betti table.  The sweep drives the library
against these references over a dense grid and reports any mismatch.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

from .monomial import Ambient, Monomial, max_index
from .enumeration import (
    card_A,
    card_M,
    decompose_by_min,
    enumerate_A,
    enumerate_M,
    predecessor_in_A,
    rank_in_A,
    successor_in_A,
    top_index,
)
from .borel import (
    TMonomialSet,
    borel_closure_degree,
    bshad,
    is_strongly_stable,
    min_bshad_set,
    min_bshad_single,
)
from .betti import TIdeal, betti_table, graded_betti, ideal_from_borel_generators, is_extremal


def oracle_enumerate_M(n: int, d: int, t: int) -> list[Monomial]:
    """All t-spread monomials of degree d on [1..n], slex-descending, by
    filtering every strictly increasing d-subset."""
    if d == 0:
        return [()]
    return sorted(
        u
        for u in combinations(range(1, n + 1), d)
        if all(b - a >= t for a, b in zip(u, u[1:]))
    )


def oracle_enumerate_A(k: int, l: int, amb: Ambient) -> list[Monomial]:
    top = top_index(k, l, amb.t)
    return [u for u in oracle_enumerate_M(amb.n, l, amb.t) if u[-1] == top]


def oracle_rank(u: Monomial, k: int, l: int, amb: Ambient) -> int:
    return oracle_enumerate_A(k, l, amb).index(tuple(u)) + 1


def borel_leq(v: Monomial, u: Monomial) -> bool:
    """Componentwise order: v is reachable from u by exchange moves."""
    return len(v) == len(u) and all(x <= y for x, y in zip(v, u))


def oracle_closure(gens: Iterable[Monomial], amb: Ambient) -> list[Monomial]:
    """Strongly stable closure as a filter of the full degree slice by the
    componentwise order.  Exchange moves never raise an index, so the slice
    can stop at the generators' largest index."""
    gen_list = [tuple(u) for u in gens]
    if not gen_list:
        return []
    d = len(gen_list[0])
    cap = max(u[-1] for u in gen_list)
    return [
        v
        for v in oracle_enumerate_M(cap, d, amb.t)
        if any(borel_leq(v, u) for u in gen_list)
    ]


def _oracle_shadow_step(L: Sequence[Monomial], amb: Ambient, cap: int) -> list[Monomial]:
    # one definitional shadow step; the max-index filter may be applied early
    # because multiplying by a variable never lowers the largest index
    out = set()
    t = amb.t
    for w in L:
        s = set(w)
        for i in range(1, min(amb.n, cap) + 1):
            if i in s:
                continue
            v = tuple(sorted(s | {i}))
            if v[-1] <= cap and all(b - a >= t for a, b in zip(v, v[1:])):
                out.add(v)
    return sorted(out)


def oracle_bshad(T: Iterable[Monomial], k2: int, l2: int, amb: Ambient) -> list[Monomial]:
    """The Borel shadow at (k2, l2), fully materialized."""
    gens = [tuple(u) for u in T]
    if not gens:
        return []
    cur = oracle_closure(gens, amb)
    bound = top_index(k2, l2, amb.t)
    for _ in range(l2 - len(gens[0])):
        cur = _oracle_shadow_step(cur, amb, bound)
    return [w for w in cur if w[-1] <= bound]


def oracle_min_bshad(T: Iterable[Monomial], k2: int, l2: int, amb: Ambient) -> Optional[Monomial]:
    members = oracle_bshad(T, k2, l2, amb)
    return max(members) if members else None  # tuple-max = slex-least


def oracle_is_extremal(ideal: TIdeal, k: int, l: int) -> bool:
    """Definition-level scan: the entry is nonzero and the whole quadrant
    weakly right and below it vanishes."""
    if graded_betti(ideal, k, l) == 0:
        return False
    t = ideal.amb.t
    k_cap = max(
        max_index(u) - t * (deg - 1) - 1
        for deg, gens in ideal.graded_gens
        for u in gens
    )
    l_cap = ideal.degrees[-1]
    for i in range(k, k_cap + 1):
        for j in range(l, l_cap + 1):
            if (i, j) != (k, l) and graded_betti(ideal, i, j) != 0:
                return False
    return True


def _iter_downsets(elements: Sequence[Monomial]) -> Iterator[tuple[Monomial, ...]]:
    """All downsets of a componentwise-ordered monomial family.

    ``elements`` must be in ascending tuple order, a linear extension of the
    componentwise order; an element may enter only once everything below it
    (within the family) is in.
    """
    below = [
        frozenset(j for j, v in enumerate(elements[:i]) if borel_leq(v, u))
        for i, u in enumerate(elements)
    ]
    m = len(elements)
    chosen: list[int] = []
    chosen_set: set[int] = set()

    def rec(i: int) -> Iterator[tuple[Monomial, ...]]:
        if i == m:
            yield tuple(elements[j] for j in chosen)
            return
        yield from rec(i + 1)
        if below[i] <= chosen_set:
            chosen.append(i)
            chosen_set.add(i)
            yield from rec(i + 1)
            chosen.pop()
            chosen_set.remove(i)

    yield from rec(0)


def iter_strongly_stable_sets(amb: Ambient, degree: int) -> Iterator[tuple[Monomial, ...]]:
    """Every t-spread strongly stable subset of the degree slice, the empty
    set included.  Strongly stable sets are exactly the downsets of the
    componentwise order."""
    yield from _iter_downsets(oracle_enumerate_M(amb.n, degree, amb.t))


def _corner_signature(
    g1: Sequence[Monomial], g2: Sequence[Monomial], t: int, l1: int, l2: int
) -> tuple[tuple[int, int, int], ...]:
    # corners of the ideal with minimal generators g1 in degree l1 and g2 in
    # degree l2, straight from the generators' largest indices
    corners = []
    if g1:
        m1 = max(u[-1] for u in g1)
        k1 = m1 - t * (l1 - 1) - 1
        blocked = any(u[-1] >= k1 + t * (l2 - 1) + 1 for u in g2)
        if k1 >= 1 and not blocked:
            corners.append((k1, l1, sum(1 for u in g1 if u[-1] == m1)))
    if g2:
        m2 = max(u[-1] for u in g2)
        k2 = m2 - t * (l2 - 1) - 1
        if k2 >= 1:
            corners.append((k2, l2, sum(1 for u in g2 if u[-1] == m2)))
    return tuple(corners)


def two_degree_corner_survey(
    amb: Ambient, l1: int, l2: int, cross_check_every: int = 0
) -> set[tuple[tuple[int, int, int], ...]]:
    """Corner signatures of every t-spread strongly stable ideal generated
    within degrees {l1, l2}.

    Runs over all pairs of a strongly stable degree-l1 slice and a strongly
    stable degree-l2 slice containing its iterated shadow.  When
    ``cross_check_every`` is positive, every so many pairs the signature is
    recomputed through the full ideal machinery and the definitional
    extremality scan; a mismatch raises.
    """
    t = amb.t
    m2_all = oracle_enumerate_M(amb.n, l2, t)
    achievable: set[tuple[tuple[int, int, int], ...]] = set()
    seen_pairs = 0
    for s1 in iter_strongly_stable_sets(amb, l1):
        shad = list(s1)
        for _ in range(l2 - l1):
            shad = _oracle_shadow_step(shad, amb, amb.n)
        shad_set = set(shad)
        residual = [u for u in m2_all if u not in shad_set]
        for d2 in _iter_downsets(residual):
            sig = _corner_signature(s1, d2, t, l1, l2)
            achievable.add(sig)
            seen_pairs += 1
            if cross_check_every and seen_pairs % cross_check_every == 0 and (s1 or d2):
                _assert_signature(amb, s1, d2, shad, l1, l2, sig)
    return achievable


def _assert_signature(amb, s1, d2, shad, l1, l2, sig) -> None:
    from .betti import corner_sequence

    gens: dict[int, list[Monomial]] = {}
    if s1:
        gens[l1] = list(s1)
    if d2:
        gens[l2] = list(d2)
    ideal = TIdeal.of(amb, gens)
    ideal.validate()
    data = corner_sequence(ideal)
    got = list(zip(data.corners, data.values))
    want = [((k, l), a) for k, l, a in sig]
    if got != want:
        raise AssertionError(
            f"signature mismatch for gens {gens}: sequence {got}, direct {want}"
        )
    for (k, l), _ in got:
        if not oracle_is_extremal(ideal, k, l):
            raise AssertionError(f"({k},{l}) fails the definitional scan")


@dataclass
class SweepResult:
    checks: int = 0
    sections: dict[str, int] = field(default_factory=dict)
    mismatches: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches


class _Sweep:
    def __init__(self):
        self.result = SweepResult()
        self.section = ""

    def start(self, name: str):
        self.section = name
        self.result.sections.setdefault(name, 0)

    def check(self, ok: bool, describe) -> None:
        self.result.checks += 1
        self.result.sections[self.section] += 1
        if not ok:
            self.result.mismatches.append(f"[{self.section}] {describe()}")


def _sample(items: Sequence, cap: int) -> list:
    """Deterministic slice of a list: everything when small, else both ends
    plus an evenly strided interior."""
    if len(items) <= cap:
        return list(items)
    head = cap // 3
    stride = max(1, len(items) // (cap - 2 * head))
    mid = list(items[head:-head:stride])[: cap - 2 * head]
    return list(items[:head]) + mid + list(items[-head:])


def _sweep_enumeration(sw: _Sweep, n_max: int, ts: Sequence[int], d_max: int) -> None:
    sw.start("enumeration M")
    for t in ts:
        for n in range(1, n_max + 1):
            for d in range(0, d_max + 1):
                want = oracle_enumerate_M(n, d, t)
                got = enumerate_M(n, d, t)
                sw.check(
                    got == want and len(got) == card_M(n, d, t),
                    lambda n=n, d=d, t=t: f"M({n},{d},{t}) enumeration or count",
                )


def _valid_A_pairs(n: int, t: int, l_max: int) -> list[tuple[int, int]]:
    out = []
    for l in range(1, l_max + 1):
        k = 1
        while top_index(k, l, t) <= n:
            out.append((k, l))
            k += 1
    return out


def _sweep_ranks(sw: _Sweep, n: int, ts: Sequence[int], l_max: int) -> None:
    sw.start("A ranks and neighbors")
    for t in ts:
        amb = Ambient(n, t)
        for k, l in _valid_A_pairs(n, t, l_max):
            want = oracle_enumerate_A(k, l, amb)
            got = enumerate_A(k, l, amb)
            sw.check(
                got == want and len(got) == card_A(k, l),
                lambda k=k, l=l, t=t: f"A({k},{l}) t={t} enumeration or count",
            )
            for pos, u in enumerate(want):
                sw.check(
                    rank_in_A(u, k, l, amb) == pos + 1,
                    lambda u=u, k=k, l=l, t=t, pos=pos:
                        f"rank of {u} in A({k},{l}) t={t}: expected {pos + 1}",
                )
                succ = successor_in_A(u, k, l, amb)
                succ_want = want[pos + 1] if pos + 1 < len(want) else None
                sw.check(
                    succ == succ_want,
                    lambda u=u, k=k, l=l, t=t: f"successor of {u} in A({k},{l}) t={t}",
                )
                pred = predecessor_in_A(u, k, l, amb)
                pred_want = want[pos - 1] if pos > 0 else None
                sw.check(
                    pred == pred_want,
                    lambda u=u, k=k, l=l, t=t: f"predecessor of {u} in A({k},{l}) t={t}",
                )
            if l >= 2:
                by_min = dict(decompose_by_min(k, l))
                for i in range(1, k + 2):
                    sw.check(
                        by_min[i] == sum(1 for u in want if u[0] == i),
                        lambda i=i, k=k, l=l, t=t: f"b_{i} of A({k},{l}) t={t}",
                    )


def _sweep_bshad(sw: _Sweep, n: int, ts: Sequence[int], l_max: int, u_cap: int) -> None:
    sw.start("borel shadow minima")
    for t in ts:
        amb = Ambient(n, t)
        pairs = _valid_A_pairs(n, t, l_max)
        for k1, l1 in pairs:
            members = enumerate_A(k1, l1, amb)
            for k2, l2 in pairs:
                if not (k2 < k1 and l1 < l2):
                    continue
                for u in _sample(members, u_cap):
                    want = oracle_min_bshad([u], k2, l2, amb)
                    got = min_bshad_single(u, k2, l2, amb)
                    sw.check(
                        got == want,
                        lambda u=u, k2=k2, l2=l2, t=t:
                            f"min bshad of {u} at ({k2},{l2}) t={t}",
                    )
                seg = members[-min(3, len(members)):]
                mset = TMonomialSet.of(amb, l1, seg)
                sw.check(
                    min_bshad_set(mset, k2, l2) == oracle_min_bshad(seg, k2, l2, amb),
                    lambda seg=tuple(seg), k2=k2, l2=l2, t=t:
                        f"min bshad of segment {seg} at ({k2},{l2}) t={t}",
                )
                got_set = bshad(mset, k2, l2)
                sw.check(
                    list(got_set) == oracle_bshad(seg, k2, l2, amb),
                    lambda seg=tuple(seg), k2=k2, l2=l2, t=t:
                        f"bshad of segment {seg} at ({k2},{l2}) t={t}",
                )


def _sweep_closures(sw: _Sweep, n_max: int, ts: Sequence[int], d_max: int, gen_cap: int) -> None:
    sw.start("strongly stable closures")
    for t in ts:
        for n in range(2, n_max + 1):
            amb = Ambient(n, t)
            for d in range(1, d_max + 1):
                slice_ = oracle_enumerate_M(n, d, t)
                if not slice_:
                    continue
                for u in _sample(slice_, gen_cap):
                    got = borel_closure_degree(TMonomialSet.of(amb, d, [u]))
                    sw.check(
                        list(got) == oracle_closure([u], amb)
                        and is_strongly_stable(got),
                        lambda u=u, n=n, t=t: f"closure of {u} in n={n}, t={t}",
                    )
                pair = [slice_[0], slice_[-1]]
                got = borel_closure_degree(TMonomialSet.of(amb, d, pair))
                sw.check(
                    list(got) == oracle_closure(pair, amb)
                    and borel_closure_degree(got).elements == got.elements,
                    lambda pair=tuple(pair), n=n, t=t:
                        f"closure of {pair} in n={n}, t={t}",
                )


def _extremal_probe_ideals(n: int, t: int) -> Iterator[TIdeal]:
    amb = Ambient(n, t)
    pairs = _valid_A_pairs(n, t, 4)
    singles = [pairs[0], pairs[len(pairs) // 2], pairs[-1]]
    for k, l in dict.fromkeys(singles):
        if l < 2:
            continue
        members = enumerate_A(k, l, amb)
        yield ideal_from_borel_generators(amb, [members[len(members) // 2]])
    for (k1, l1) in pairs:
        for (k2, l2) in pairs:
            if k2 < k1 and l1 < l2 and l1 >= 2:
                m1 = enumerate_A(k1, l1, amb)
                m2 = enumerate_A(k2, l2, amb)
                try:
                    yield ideal_from_borel_generators(amb, [m1[-1], m2[-1]])
                except Exception:
                    continue
                break


def _sweep_extremal(sw: _Sweep, ns: Sequence[int], ts: Sequence[int]) -> None:
    sw.start("extremal positions")
    for t in ts:
        for n in ns:
            if n <= t + 1:
                continue
            for ideal in _extremal_probe_ideals(n, t):
                table = betti_table(ideal)
                k_cap = table.max_k + 1
                l_cap = ideal.degrees[-1] + 1
                for k in range(0, k_cap + 1):
                    for l in range(ideal.degrees[0], l_cap + 1):
                        sw.check(
                            is_extremal(ideal, k, l) == oracle_is_extremal(ideal, k, l),
                            lambda k=k, l=l, n=n, t=t:
                                f"extremal test at ({k},{l}) n={n} t={t}",
                        )
    sw.start("betti vs corner counts")
    for t in ts:
        for n in ns:
            if n <= t + 1:
                continue
            for ideal in _extremal_probe_ideals(n, t):
                for (k, l), v in zip(*_corner_pairs(ideal)):
                    sw.check(
                        graded_betti(ideal, k, l) == v,
                        lambda k=k, l=l: f"corner value at ({k},{l})",
                    )


def _corner_pairs(ideal: TIdeal):
    from .betti import corner_sequence

    data = corner_sequence(ideal)
    return data.corners, data.values


def run_sweep(suite: str = "quick") -> SweepResult:
    """Run the closed-form-vs-oracle verification grid.

    ``quick`` keeps every family but on small parameters; ``full`` covers
    n <= 14, t in 1..4, degrees <= 7 for the enumerative families, with
    deterministic member sampling where whole-orbit checks would be wasteful.
    """
    if suite not in ("quick", "full"):
        raise ValueError(f"unknown suite {suite!r}")
    sw = _Sweep()
    start = time.monotonic()
    if suite == "quick":
        _sweep_enumeration(sw, n_max=9, ts=(1, 2, 3), d_max=5)
        _sweep_ranks(sw, n=9, ts=(1, 2, 3), l_max=5)
        _sweep_bshad(sw, n=9, ts=(1, 2), l_max=4, u_cap=8)
        _sweep_closures(sw, n_max=7, ts=(1, 2), d_max=4, gen_cap=6)
        _sweep_extremal(sw, ns=(8, 9), ts=(1, 2))
    else:
        _sweep_enumeration(sw, n_max=14, ts=(1, 2, 3, 4), d_max=7)
        _sweep_ranks(sw, n=14, ts=(1, 2, 3, 4), l_max=7)
        _sweep_bshad(sw, n=14, ts=(1, 2, 3, 4), l_max=7, u_cap=18)
        _sweep_closures(sw, n_max=10, ts=(1, 2, 3, 4), d_max=7, gen_cap=10)
        _sweep_extremal(sw, ns=(9, 11, 13, 14), ts=(1, 2, 3, 4))
    sw.result.elapsed = time.monotonic() - start
    return sw.result
