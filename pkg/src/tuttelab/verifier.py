"""Quantitative verification layer.

Everything here is exact: thresholds, ratios, and slacks are Fractions,
never floats, so pass/fail verdicts cannot be poisoned by rounding.
Enumerations run over all candidate sets up to a stated size bound, in
(size, lexicographic) order, which makes reports and witnesses
deterministic.  A verdict is therefore always "pass up to max_x" - the
report carries its own bound.

The central check: a graph (window) satisfies the quantitative Tutte
condition at (epsilon, k) when (i) no vertex set X leaves more than |X|
odd finite components behind, and (ii) whenever the odd hull of X - X
together with the odd finite components of G - X - is connected and has
at least k vertices,

    |X| >= #odd_components(X) + epsilon * |hull_odd(X)|.

Finiteness of a component follows the window's frontier rule: a component
touching the frontier would continue past the truncation and is treated
as infinite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .core import (
    InputError,
    Window,
    iter_subsets,
    mask_components,
    mask_is_connected,
    mask_of,
    vertices_of,
)


@dataclass(frozen=True)
class HullReport:
    """Odd/finite components of G - x and the corresponding hulls."""

    x: tuple[int, ...]
    odd_components: tuple[tuple[int, ...], ...]
    finite_components: tuple[tuple[int, ...], ...]
    hull_odd: frozenset[int]
    hull_fin: frozenset[int]


@dataclass(frozen=True)
class Violation:
    """One failed inequality, with the witness data needed to recheck it.

    kind is "tutte" (more odd components than |x|), "quantitative" (the
    epsilon-weighted inequality), "boundary" (a finite component with too
    small an edge boundary), or "expansion" (the finite-component variant
    of the quantitative inequality).  slack is the amount by which the
    inequality held; violations have negative slack except for "boundary",
    where slack is boundary - d.
    """

    kind: str
    x: tuple[int, ...]
    count: int
    hull_size: int
    slack: Fraction
    component: tuple[int, ...] = ()


@dataclass(frozen=True)
class TutteReport:
    epsilon: Fraction
    k: int
    max_x: int
    candidates: int
    violations: tuple[Violation, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class ExpansionReport:
    delta_lower: Fraction
    delta_witness: tuple[int, ...]
    witness_boundary: int
    max_f: int
    exhaustive: bool
    checked: int


def hull_report(w: Window, x: Iterable[int]) -> HullReport:
    """Components of w.graph - x classified by the frontier rule."""
    xs = tuple(sorted(set(x)))
    n = w.graph.vertex_count
    for v in xs:
        if not 0 <= v < n:
            raise InputError(f"vertex {v} out of range")
    masks = w.graph.neighbor_masks
    avail = w.graph.full_mask & ~mask_of(xs)
    fmask = w.frontier_mask
    finite = []
    odd = []
    for comp in mask_components(masks, avail):
        if comp & fmask:
            continue
        verts = vertices_of(comp)
        finite.append(verts)
        if len(verts) % 2 == 1:
            odd.append(verts)
    hull_odd = frozenset(xs) | {v for c in odd for v in c}
    hull_fin = frozenset(xs) | {v for c in finite for v in c}
    return HullReport(xs, tuple(odd), tuple(finite), hull_odd, hull_fin)


def check_tutte_eps_k(
    w: Window, epsilon: Fraction | int, k: int, max_x: int
) -> TutteReport:
    """Exhaustively check the quantitative Tutte condition up to |X| <= max_x.

    Condition (i) is checked for every enumerated X; condition (ii) only
    where it applies, i.e. when the odd hull is connected and has size at
    least k.  The empty set is enumerated (it is how an odd component of
    the graph itself is caught).
    """
    epsilon = Fraction(epsilon)
    if epsilon < 0:
        raise InputError("epsilon must be nonnegative")
    if k < 1:
        raise InputError("k must be positive")
    if max_x < 1:
        raise InputError("max_x must be positive")
    g = w.graph
    masks = g.neighbor_masks
    full = g.full_mask
    fmask = w.frontier_mask
    violations: list[Violation] = []
    candidates = 0
    for xs in iter_subsets(range(g.vertex_count), max_x):
        candidates += 1
        xmask = mask_of(xs)
        odd_count = 0
        hull = xmask
        for comp in mask_components(masks, full & ~xmask):
            if comp & fmask:
                continue
            if comp.bit_count() & 1:
                odd_count += 1
                hull |= comp
        if odd_count > len(xs):
            violations.append(
                Violation(
                    kind="tutte",
                    x=xs,
                    count=odd_count,
                    hull_size=hull.bit_count(),
                    slack=Fraction(len(xs) - odd_count),
                )
            )
        hull_size = hull.bit_count()
        if hull_size >= k and mask_is_connected(masks, hull):
            slack = len(xs) - odd_count - epsilon * hull_size
            if slack < 0:
                violations.append(
                    Violation(
                        kind="quantitative",
                        x=xs,
                        count=odd_count,
                        hull_size=hull_size,
                        slack=slack,
                    )
                )
    return TutteReport(epsilon, k, max_x, candidates, tuple(violations))


def edge_boundary(w: Window, f: Iterable[int]) -> int:
    """Edges leaving f, counting external stubs of vertices in f."""
    fset = set(f)
    n = w.graph.vertex_count
    for v in fset:
        if not 0 <= v < n:
            raise InputError(f"vertex {v} out of range")
    fmask = mask_of(fset)
    masks = w.graph.neighbor_masks
    count = 0
    for v in fset:
        count += (masks[v] & ~fmask).bit_count()
        count += w.external_stubs[v]
    return count


def expansion_constant(
    w: Window, max_f: int, connected_only: bool = True
) -> ExpansionReport:
    """Minimum boundary-to-size ratio over nonempty F with |F| <= max_f.

    With connected_only the enumeration is restricted to connected
    induced subgraphs.  That restriction loses nothing: the boundary of
    a disconnected F is the sum over its connected pieces, so its ratio
    is at least the smallest piece's ratio (mediant inequality), and the
    pieces are themselves enumerated.  The flag is surfaced anyway as a
    speed/completeness tradeoff, and ``exhaustive`` records whether all
    subsets were visited.
    """
    if max_f < 1:
        raise InputError("max_f must be positive")
    n = w.graph.vertex_count
    if n == 0:
        raise InputError("window has no vertices")
    masks = w.graph.neighbor_masks
    stubs = w.external_stubs
    best: Fraction | None = None
    best_f: tuple[int, ...] = ()
    best_boundary = 0
    checked = 0
    for fs in iter_subsets(range(n), min(max_f, n)):
        if not fs:
            continue
        fmask = mask_of(fs)
        if connected_only and not mask_is_connected(masks, fmask):
            continue
        checked += 1
        boundary = 0
        for v in fs:
            boundary += (masks[v] & ~fmask).bit_count()
            boundary += stubs[v]
        ratio = Fraction(boundary, len(fs))
        if best is None or ratio < best:
            best = ratio
            best_f = fs
            best_boundary = boundary
    if best is None:
        raise InputError("no candidate subsets enumerated")
    return ExpansionReport(
        delta_lower=best,
        delta_witness=best_f,
        witness_boundary=best_boundary,
        max_f=max_f,
        exhaustive=not connected_only,
        checked=checked,
    )


def epsilon_from_delta(delta: Fraction | int, d: int) -> Fraction:
    """Quantitative-Tutte epsilon implied by expansion delta on a
    d-regular graph: exactly delta / d."""
    if d == 0:
        raise InputError("degree d must be positive")
    delta = Fraction(delta)
    if delta < 0 or d < 1:
        raise InputError("need delta >= 0 and d >= 1")
    return delta / d


def verify_expansion_lemma(
    w: Window, d: int, delta: Fraction | int, max_x: int
) -> TutteReport:
    """Check the finite-component expansion inequalities on a d-regular window.

    For every X with |X| <= max_x (none at all when max_x = 0, a vacuous
    pass):

      (a) each finite component of w - X has edge boundary >= d;
      (b) |X| >= #finite_components(X) + (delta/d) * |hull_fin(X)|.

    Regularity means degree-plus-stubs equals d at every vertex.
    """
    if max_x < 0:
        raise InputError("max_x must be nonnegative")
    delta = Fraction(delta)
    if delta < 0:
        raise InputError("delta must be nonnegative")
    g = w.graph
    for v in range(g.vertex_count):
        if g.degree(v) + w.external_stubs[v] != d:
            raise InputError(
                f"window is not {d}-regular at vertex {v} "
                f"(degree {g.degree(v)} + {w.external_stubs[v]} stubs)"
            )
    eps = epsilon_from_delta(delta, d)
    masks = g.neighbor_masks
    full = g.full_mask
    fmask = w.frontier_mask
    stubs = w.external_stubs
    violations: list[Violation] = []
    candidates = 0
    if max_x > 0:
        for xs in iter_subsets(range(g.vertex_count), max_x):
            candidates += 1
            xmask = mask_of(xs)
            fin_count = 0
            hull = xmask
            for comp in mask_components(masks, full & ~xmask):
                if comp & fmask:
                    continue
                fin_count += 1
                hull |= comp
                boundary = 0
                cv = comp
                while cv:
                    low = cv & -cv
                    cv ^= low
                    v = low.bit_length() - 1
                    boundary += (masks[v] & ~comp).bit_count()
                    boundary += stubs[v]
                if boundary < d:
                    violations.append(
                        Violation(
                            kind="boundary",
                            x=xs,
                            count=fin_count,
                            hull_size=comp.bit_count(),
                            slack=Fraction(boundary - d),
                            component=vertices_of(comp),
                        )
                    )
            hull_size = hull.bit_count()
            slack = len(xs) - fin_count - eps * hull_size
            if slack < 0:
                violations.append(
                    Violation(
                        kind="expansion",
                        x=xs,
                        count=fin_count,
                        hull_size=hull_size,
                        slack=slack,
                    )
                )
    return TutteReport(eps, 1, max_x, candidates, tuple(violations))
