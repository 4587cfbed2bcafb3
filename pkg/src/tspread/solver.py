"""Decide and realize prescribed corner positions and values.

Given target corners (k_1,l_1) > ... > (k_r,l_r) in k, increasing in degree,
with positive values a_1..a_r, decide whether some t-spread strongly stable
ideal has exactly those extremal Betti entries, and construct one when it
does.

The decision runs in two sweeps.  Going from the last corner upward, a chain
of witnesses v_i is computed: v_r is the least member of A(k_r, l_r) and each
earlier v_i is the least member of A(k_i, l_i) whose Borel shadow at the next
corner avoids the top of the next corner's segment.  The room above v_i gives
the first bound a_i <= n_i.  Going downward, the construction places the
a_i slex-largest still-available members of A(k_i, l_i) (those just below the
Borel shadow of everything built so far), which sharpens the bound to
a_i <= n_i - p_i with p_i the room consumed above the first available
monomial.  Both sweeps fail fast with the violated bound.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping, Optional

from .monomial import Ambient, DomainError, Monomial
from .enumeration import (
    card_A,
    iter_A_ascending,
    max_A,
    min_A,
    rank_in_A,
    segment_ending_at,
    successor_in_A,
    top_index,
)
from .borel import (
    TMonomialSet,
    borel_closure_degree,
    bshad,
    min_bshad_set,
    min_bshad_single,
    shadow,
)
from .betti import TIdeal, corner_sequence, minimalize


@dataclass(frozen=True)
class CornerTarget:
    k: int
    l: int
    a: int


@dataclass(frozen=True)
class CornerSpec:
    """Requested corner positions and values in a fixed ambient."""

    amb: Ambient
    corners: tuple[CornerTarget, ...]

    @classmethod
    def of(cls, n: int, t: int, triples) -> "CornerSpec":
        return cls(Ambient(n, t), tuple(CornerTarget(k, l, a) for k, l, a in triples))

    def to_json(self) -> dict:
        return {
            "n": self.amb.n,
            "t": self.amb.t,
            "corners": [{"k": c.k, "l": c.l, "a": c.a} for c in self.corners],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "CornerSpec":
        try:
            amb = Ambient(int(obj["n"]), int(obj["t"]))
            corners = tuple(
                CornerTarget(int(c["k"]), int(c["l"]), int(c["a"]))
                for c in obj["corners"]
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed corner spec: {exc}") from exc
        return cls(amb, corners)


@dataclass
class CornerAudit:
    """Per-corner trace of the decision: witness, segment, room and bounds."""

    k: int
    l: int
    a: int
    v: Optional[Monomial] = None
    w: Optional[Monomial] = None
    n_i: Optional[int] = None
    p_i: Optional[int] = None
    u_first: Optional[Monomial] = None
    bound: Optional[int] = None

    def to_json(self) -> dict:
        def mono(u):
            return None if u is None else list(u)

        return {
            "k": self.k,
            "l": self.l,
            "a": self.a,
            "v": mono(self.v),
            "w": mono(self.w),
            "n_i": self.n_i,
            "p_i": self.p_i,
            "u_first": mono(self.u_first),
            "bound": self.bound,
        }


@dataclass
class SolveReport:
    spec: CornerSpec
    verdict: str  # "feasible" | "infeasible"
    audits: list[CornerAudit]
    failure_corner: Optional[int] = None  # 1-based corner index
    ideal: Optional[TIdeal] = None
    notes: list[str] = field(default_factory=list)

    @property
    def feasible(self) -> bool:
        return self.verdict == "feasible"

    def to_json(self) -> dict:
        out = {
            "verdict": self.verdict,
            "n": self.spec.amb.n,
            "t": self.spec.amb.t,
            "corners": [au.to_json() for au in self.audits],
            "failure_corner": self.failure_corner,
            "notes": list(self.notes),
            "generators": None,
        }
        if self.ideal is not None:
            out["generators"] = self.ideal.to_json()["generators"]
        return out

    def to_json_text(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False)


def decompose_n(n: int, t: int) -> tuple[int, int]:
    """Write n = d + k*t with 1 <= d <= t and k >= 1; unique."""
    if t < 1 or n <= t:
        raise DomainError(f"decompose_n needs n > t >= 1, got n={n}, t={t}")
    d = n % t
    if d == 0:
        d = t
    return d, (n - d) // t


def max_corners(n: int, t: int, l1: int) -> int:
    """Largest admissible number of corners for initial degree l1.

    k + floor((d-3)/t) when l1 = 2, and k + floor((d-2)/t) - (l1 - 2) when
    l1 >= 3, where n = d + k*t.  Floor division handles the negative cases
    exactly (floor(-1/t) = -1).
    """
    d, k = decompose_n(n, t)
    if l1 < 2:
        raise DomainError(f"max_corners needs l1 >= 2, got {l1}")
    cap = k + (d - 2) // t + 1
    if l1 > cap:
        raise DomainError(f"max_corners: initial degree {l1} exceeds the cap {cap}")
    if l1 == 2:
        return k + (d - 3) // t
    return k + (d - 2) // t - (l1 - 2)


def validate_spec(spec: CornerSpec) -> list[str]:
    """Structural admissibility; returns human-readable violations, empty when ok."""
    amb = spec.amb
    n, t = amb.n, amb.t
    out: list[str] = []
    corners = spec.corners
    if not corners:
        return ["at least one corner is required"]
    for c in corners:
        if c.a < 1:
            out.append(f"corner ({c.k},{c.l}): value a={c.a} must be >= 1")
        if c.l < 2:
            out.append(f"corner ({c.k},{c.l}): degree must be >= 2")
        if c.k < 1:
            out.append(f"corner ({c.k},{c.l}): position must have k >= 1")
        if top_index(c.k, c.l, t) > n:
            out.append(
                f"corner ({c.k},{c.l}): needs k+t(l-1)+1 = "
                f"{top_index(c.k, c.l, t)} <= n = {n}"
            )
    ks = [c.k for c in corners]
    ls = [c.l for c in corners]
    if any(b >= a for a, b in zip(ks, ks[1:])):
        out.append(f"k positions must strictly decrease, got {ks}")
    if any(b <= a for a, b in zip(ls, ls[1:])):
        out.append(f"degrees must strictly increase, got {ls}")
    if ks and ks[0] > n - t - 1:
        out.append(f"first corner needs k_1 <= n-t-1 = {n - t - 1}, got {ks[0]}")
    try:
        d, k = decompose_n(n, t)
    except DomainError as exc:
        out.append(str(exc))
        return out
    if k < 3:
        out.append(f"the ambient needs k >= 3 in n = d + k*t, got k={k}")
        return out
    try:
        cap_r = max_corners(n, t, ls[0])
    except DomainError as exc:
        out.append(str(exc))
        return out
    if len(corners) > cap_r:
        out.append(
            f"{len(corners)} corners requested but at most {cap_r} are possible"
            f" for initial degree {ls[0]}"
        )
    last_cap = k + ((d - 3) // t if ls[0] == 2 else (d - 2) // t) + 1
    if ls[-1] > last_cap:
        out.append(f"last degree {ls[-1]} exceeds the cap {last_cap}")
    return out


def _outside_borel_shadow(
    m: Monomial, u: Monomial, k2: int, l2: int, amb: Ambient
) -> bool:
    """True when m avoids the Borel shadow of {u} at the corner (k2, l2).

    The closed-form minimum settles most cases; only candidates at or above
    it need the explicit shadow membership test.
    """
    least = min_bshad_single(u, k2, l2, amb)
    if m > least:  # tuple-greater means slex-below the minimum
        return True
    if m == least:
        return False
    members = bshad(TMonomialSet.of(amb, len(u), [u]), k2, l2)
    return m not in members


def _run_chain(spec: CornerSpec, audits: list[CornerAudit]) -> Optional[int]:
    """Upward sweep computing v_i, n_i, w_i; returns the 1-based failing
    corner index, or None when all first bounds hold."""
    amb = spec.amb
    t = amb.t
    corners = spec.corners
    r = len(corners)
    for idx in range(r - 1, -1, -1):
        c = corners[idx]
        au = audits[idx]
        if idx == r - 1:
            v: Optional[Monomial] = min_A(c.k, c.l, t)
        else:
            nxt = corners[idx + 1]
            target = audits[idx + 1].w
            assert target is not None
            v = None
            for u in iter_A_ascending(c.k, c.l, amb):
                if _outside_borel_shadow(target, u, nxt.k, nxt.l, amb):
                    v = u
                    break
            if v is None:
                au.bound = 0
                return idx + 1
        au.v = v
        au.n_i = rank_in_A(v, c.k, c.l, amb)
        au.bound = au.n_i
        if c.a > au.n_i:
            return idx + 1
        au.w = segment_ending_at(v, c.a, c.k, c.l, amb).first
    return None


def feasibility_chain(spec: CornerSpec) -> SolveReport:
    """Decide the first-stage bounds a_i <= n_i without building the ideal."""
    violations = validate_spec(spec)
    if violations:
        raise DomainError("invalid corner spec: " + "; ".join(violations))
    audits = [CornerAudit(c.k, c.l, c.a) for c in spec.corners]
    notes = _ambient_notes(spec)
    fail = _run_chain(spec, audits)
    if fail is not None:
        return SolveReport(spec, "infeasible", audits, failure_corner=fail, notes=notes)
    return SolveReport(spec, "feasible", audits, notes=notes)


def _ambient_notes(spec: CornerSpec) -> list[str]:
    if spec.amb.t == 1:
        return ["bounds per t>=2 theorem"]
    return []


def construct_ideal(spec: CornerSpec) -> SolveReport:
    """Full decision with construction: sharpened bounds a_i <= n_i - p_i and,
    when they all hold, a realizing ideal whose corners match the spec."""
    violations = validate_spec(spec)
    if violations:
        raise DomainError("invalid corner spec: " + "; ".join(violations))
    amb = spec.amb
    t = amb.t
    corners = spec.corners
    audits = [CornerAudit(c.k, c.l, c.a) for c in corners]
    notes = _ambient_notes(spec)
    fail = _run_chain(spec, audits)
    if fail is not None:
        return SolveReport(spec, "infeasible", audits, failure_corner=fail, notes=notes)

    components: dict[int, TMonomialSet] = {}
    comp: Optional[TMonomialSet] = None
    for idx, c in enumerate(corners):
        au = audits[idx]
        assert au.n_i is not None
        if idx == 0:
            u_first: Optional[Monomial] = max_A(c.k, c.l, t)
            p = 0
        else:
            prev_degree = corners[idx - 1].l
            assert comp is not None
            while comp.degree < c.l:
                comp = shadow(comp)
                components[comp.degree] = comp
            least_shadow = min_bshad_set(components[prev_degree], c.k, c.l)
            u_first = successor_in_A(least_shadow, c.k, c.l, amb)
            p = card_A(c.k, c.l) if u_first is None else rank_in_A(u_first, c.k, c.l, amb) - 1
        au.u_first = u_first
        au.p_i = p
        au.bound = au.n_i - p
        if u_first is None or c.a > au.n_i - p:
            return SolveReport(
                spec, "infeasible", audits, failure_corner=idx + 1, notes=notes
            )
        picked = [u_first]
        for _ in range(c.a - 1):
            nxt = successor_in_A(picked[-1], c.k, c.l, amb)
            if nxt is None:
                raise RuntimeError("internal: segment ran past the minimum")
            picked.append(nxt)
        block = borel_closure_degree(TMonomialSet.of(amb, c.l, picked))
        comp = block if comp is None else components[c.l].union(block)
        components[c.l] = comp

    first_l, last_l = corners[0].l, corners[-1].l
    ideal = minimalize([components[d] for d in range(first_l, last_l + 1)])
    realized = corner_sequence(ideal)
    wanted = tuple((c.k, c.l) for c in corners)
    if realized.corners != wanted or realized.values != tuple(c.a for c in corners):
        raise RuntimeError(
            "internal: constructed ideal has corners "
            f"{realized.corners} values {realized.values}, expected {wanted}"
        )
    return SolveReport(spec, "feasible", audits, ideal=ideal, notes=notes)
