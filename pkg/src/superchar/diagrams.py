"""Weight diagrams and genericity tests.

A regular dominant weight is drawn on the number line from its
coordinate multiset: positions hit by both blocks get a vee, positions
hit by the eps block only a cross, by the delta block only a circle,
everything else a wedge.  The number of vees is the atypicality and
the diagram determines the weight.

Genericity here means that shifting the weight by any subset of the
distinguished odd positive roots never changes the strict within-block
ordering of the coordinates and never creates a tie (open chambers,
the strictest reading).  The brute test walks all 2^{mn} subsets; the
fast test checks that within-block coordinate gaps exceed n on the eps
block and m on the delta block.  The fast route is trusted by default
only on the profiles the equivalence suite exercises.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .rootdata import (
    EnumerationBound,
    RankProfile,
    Weight,
    classify,
    encode,
    odd_positive_roots,
    weight_from_coords,
)

CROSS, CIRCLE, VEE, WEDGE = "cross", "circle", "vee", "wedge"

DEFAULT_SUBSET_BOUND = 1 << 16

# Profiles whose fast gap criterion has a brute-force equivalence suite.
FAST_VALIDATED = frozenset({(1, 1), (2, 1), (1, 2), (2, 2)})


@dataclass(frozen=True)
class WeightDiagram:
    profile: RankProfile
    entries: tuple[tuple[int, str], ...]  # (position, symbol), symbol != wedge

    def label(self, position: int) -> str:
        for p, s in self.entries:
            if p == position:
                return s
        return WEDGE

    def positions(self, symbol: str) -> tuple[int, ...]:
        return tuple(sorted(p for p, s in self.entries if s == symbol))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(p for p, _ in self.entries))

    def __str__(self):
        return render_ascii(self)


def weight_diagram(lam: Weight) -> WeightDiagram:
    """Diagram of a regular dominant weight; anything else is rejected."""
    flags = classify(lam)
    if not flags.regular:
        raise ValueError(f"{lam} is not regular; it has no weight diagram")
    if not flags.dominant:
        raise ValueError(f"{lam} is not dominant; it has no weight diagram")
    c = encode(lam)
    eps, delta = set(c.eps_block), set(c.delta_block)
    entries = []
    for p in sorted(eps | delta):
        if p in eps and p in delta:
            entries.append((p, VEE))
        elif p in eps:
            entries.append((p, CROSS))
        else:
            entries.append((p, CIRCLE))
    return WeightDiagram(lam.profile, tuple(entries))


def diagram_weight(d: WeightDiagram) -> Weight:
    """The unique regular dominant weight with this diagram."""
    eps = sorted(d.positions(CROSS) + d.positions(VEE), reverse=True)
    delta = sorted(d.positions(CIRCLE) + d.positions(VEE))
    if len(eps) != d.profile.m or len(delta) != d.profile.n:
        raise ValueError("diagram does not match the profile's block sizes")
    return weight_from_coords(d.profile, eps, delta)


def is_totally_disconnected(lam: Weight) -> bool:
    """At least one wedge strictly between any two consecutive vees."""
    d = weight_diagram(lam)
    vees = d.positions(VEE)
    occupied = set(d.support)
    for lo, hi in zip(vees, vees[1:]):
        if all(q in occupied for q in range(lo + 1, hi)):
            return False
    return True


def _ordering_pattern(values: tuple[int, ...]):
    """Strict comparison pattern of a tuple, or None if it has a tie."""
    pattern = []
    for a in range(len(values)):
        for b in range(a + 1, len(values)):
            if values[a] == values[b]:
                return None
            pattern.append(values[a] < values[b])
    return tuple(pattern)


def _generic_brute(lam: Weight, bound: int) -> bool:
    p = lam.profile
    odd = odd_positive_roots(p)
    if 1 << len(odd) > bound:
        raise EnumerationBound(
            f"brute genericity needs 2^{len(odd)} subsets, over the bound {bound}"
        )
    c = encode(lam)
    base_eps = _ordering_pattern(c.eps_block)
    base_delta = _ordering_pattern(c.delta_block)
    if base_eps is None or base_delta is None:
        return False
    for mask in itertools.product((0, 1), repeat=len(odd)):
        rows = [0] * p.m
        cols = [0] * p.n
        for flag, beta in zip(mask, odd):
            if flag:
                rows[beta.i - 1] += 1
                cols[beta.j - p.m - 1] += 1
        eps = tuple(v - r for v, r in zip(c.eps_block, rows))
        delta = tuple(v - r for v, r in zip(c.delta_block, cols))
        if _ordering_pattern(eps) != base_eps or _ordering_pattern(delta) != base_delta:
            return False
    return True


def _generic_fast(lam: Weight) -> bool:
    p = lam.profile
    c = encode(lam)
    for block, cap in ((c.eps_block, p.n), (c.delta_block, p.m)):
        for a in range(len(block)):
            for b in range(a + 1, len(block)):
                if abs(block[a] - block[b]) <= cap:
                    return False
    return True


def is_g1_generic(
    lam: Weight, mode: str = "auto", bound: int = DEFAULT_SUBSET_BOUND
) -> bool:
    """Whether all odd-subset shifts of lam stay in one open Weyl chamber.

    mode "brute" enumerates the subsets, "fast" uses the gap criterion,
    "auto" uses fast only on profiles covered by the equivalence suite.
    """
    if mode == "brute":
        return _generic_brute(lam, bound)
    if mode == "fast":
        return _generic_fast(lam)
    if mode == "auto":
        p = lam.profile
        if (p.m, p.n) in FAST_VALIDATED:
            return _generic_fast(lam)
        return _generic_brute(lam, bound)
    raise ValueError(f"unknown mode {mode!r}")


_ASCII = {CROSS: "x", CIRCLE: "o", VEE: "v", WEDGE: "^"}


def render_ascii(d: WeightDiagram, lo: int | None = None, hi: int | None = None) -> str:
    """One character per integer over [lo, hi]; wedges fill the gaps."""
    if not d.entries and lo is None:
        return "(empty diagram)"
    positions = [p for p, _ in d.entries]
    lo = min(positions) - 1 if lo is None else lo
    hi = max(positions) + 1 if hi is None else hi
    line = "".join(_ASCII[d.label(q)] for q in range(lo, hi + 1))
    return f"{lo}: {line} :{hi}"


def diagram_json(d: WeightDiagram) -> dict:
    return {"positions": {str(p): s for p, s in d.entries}}
