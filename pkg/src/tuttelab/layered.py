"""Level-by-level matching construction with certified invariants.

The engine consumes a budget schedule (epsilon, f(0) < f(1) < ..., and
the per-level residues eps_n = epsilon - sum_{m<=n} 4/f(m)), a stack of
f(n)-separated vertex nets, and a window.  At level n it walks the net
A_n in ascending order and, for each net vertex still present, picks the
least incident edge whose removal (with both endpoints) keeps the
remaining graph perfectly matchable.  Endpoints are removed immediately,
so every later choice is validated against the current graph; the
distance separation that justifies simultaneous choices in the infinite
setting is still certified, just not relied on.

After each level the engine records a certificate: the remaining graph
has no odd finite component, and it passes the quantitative Tutte check
at (eps_n, f(n)) up to a caller-chosen enumeration bound.  The proofs
behind those facts are not re-derived; the checks test their conclusions
directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Edge, Graph, InputError, Window, distance, remove_window_vertices
from .matching import MatchingState, has_perfect_matching, is_allowed_edge, max_matching
from .verifier import TutteReport, check_tutte_eps_k, hull_report


@dataclass(frozen=True)
class Schedule:
    """Budget for the layered construction.

    Invariants (all exact, validated on construction):
      * sum over levels of 4/f(n) stays below epsilon;
      * eps_n = epsilon - sum_{m<=n} 4/f(m), all positive;
      * eps_{n-1} * f(n) > 4 with eps_{-1} = epsilon;
      * f strictly increasing.
    """

    epsilon: Fraction
    levels: tuple[int, ...]
    eps: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.epsilon <= 0:
            raise InputError("epsilon must be positive")
        if not self.levels:
            raise InputError("schedule needs at least one level")
        if len(self.eps) != len(self.levels):
            raise InputError("eps must align with levels")
        prev_f = 0
        total = Fraction(0)
        prev_eps = self.epsilon
        for f_n, eps_n in zip(self.levels, self.eps):
            if f_n <= prev_f:
                raise InputError("f must be strictly increasing and positive")
            total += Fraction(4, f_n)
            if eps_n != self.epsilon - total:
                raise InputError("eps_n must equal epsilon - sum of 4/f(m)")
            if eps_n <= 0:
                raise InputError("all eps_n must stay positive")
            if prev_eps * f_n <= 4:
                raise InputError("need eps_{n-1} * f(n) > 4 at every level")
            prev_eps = eps_n
            prev_f = f_n
        if total >= self.epsilon:
            raise InputError("sum of 4/f(n) must stay below epsilon")

    @property
    def level_count(self) -> int:
        return len(self.levels)


def build_schedule(epsilon: Fraction | int | str, level_count: int) -> Schedule:
    """Choose f(n) = c * 2^n with c the least power of two that works.

    With c > 8/epsilon the full geometric series sum_n 4/(c 2^n) = 8/c
    stays below epsilon, so any truncation of the schedule is safe, and
    eps_{n-1} f(n) = (epsilon - 8/c) f(n) + 8 > 4 holds at every level.
    """
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise InputError("epsilon must be positive")
    if level_count < 1:
        raise InputError("level_count must be positive")
    c = 1
    while c * epsilon <= 8:
        c *= 2
    levels = tuple(c * (1 << n) for n in range(level_count))
    eps = []
    total = Fraction(0)
    for f_n in levels:
        total += Fraction(4, f_n)
        eps.append(epsilon - total)
    return Schedule(epsilon, levels, tuple(eps))


@dataclass(frozen=True)
class NetLevels:
    """Per-level vertex nets A_n plus the interior vertices left over.

    Distinct vertices of A_n sit at graph distance > f(n); levels are
    pairwise disjoint and, together with the residual, cover exactly the
    interior of the window they were built from.
    """

    levels: tuple[tuple[int, ...], ...]
    residual: tuple[int, ...]


def build_nets(w: Window, schedule: Schedule) -> NetLevels:
    """Greedy maximal f(n)-separated nets over the interior, level by level.

    Each level scans the not-yet-used interior vertices in ascending id
    order and keeps a vertex unless it is within distance f(n) of a
    vertex already kept on this level, so each A_n is maximal among the
    remaining vertices.
    """
    g = w.graph
    remaining = sorted(w.interior)
    levels: list[tuple[int, ...]] = []
    for f_n in schedule.levels:
        chosen: list[int] = []
        blocked: set[int] = set()
        for v in remaining:
            if v in blocked:
                continue
            chosen.append(v)
            # Block everything within distance f_n of v (BFS cut off at f_n).
            frontier = [v]
            blocked.add(v)
            seen = {v}
            for _ in range(f_n):
                nxt = []
                for a in frontier:
                    for b in g.adjacency[a]:
                        if b not in seen:
                            seen.add(b)
                            nxt.append(b)
                blocked.update(nxt)
                frontier = nxt
                if not frontier:
                    break
        levels.append(tuple(chosen))
        chosen_set = set(chosen)
        remaining = [v for v in remaining if v not in chosen_set]
    return NetLevels(tuple(levels), tuple(remaining))


def least_extendable_edge(g: Graph, x: int) -> Edge:
    """Least edge at x contained in some perfect matching of g.

    Requires g to admit a perfect matching; then x is covered by every
    perfect matching, so an incident allowed edge always exists.
    """
    if not 0 <= x < g.vertex_count:
        raise InputError(f"vertex {x} out of range")
    if not g.adjacency[x]:
        raise InputError(f"vertex {x} is isolated")
    if not has_perfect_matching(g):
        raise InputError("graph has no perfect matching")
    for e in g.incident_edges(x):
        if is_allowed_edge(g, e):
            return e
    raise AssertionError("perfectly matchable graph must allow an edge at x")


@dataclass(frozen=True)
class LevelCertificate:
    level: int
    f_n: int
    eps_n: Fraction
    chosen_edges: tuple[Edge, ...]
    no_odd_components: bool
    odd_component_count: int
    tutte: TutteReport
    failed_vertices: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return (
            self.no_odd_components
            and self.tutte.passed
            and not self.failed_vertices
        )


@dataclass(frozen=True)
class RunCertificate:
    levels: tuple[LevelCertificate, ...]
    matching: MatchingState
    coverage: Fraction
    aborted: bool

    @property
    def passed(self) -> bool:
        return not self.aborted and all(c.passed for c in self.levels)


def run_layered_matching(
    w: Window, schedule: Schedule, nets: NetLevels, cert_max_x: int
) -> RunCertificate:
    """Run the level-by-level construction and certify each level.

    Closed windows must be perfectly matchable up front.  On open windows
    the run proceeds on the truncated graph and simply records a failure
    (and aborts with the partial certificate) at the first net vertex
    with no extendable edge - such a failure signals a genuine violation
    of Tutte's condition in the graph the run was given.
    """
    if len(nets.levels) != schedule.level_count:
        raise InputError("nets and schedule disagree on the number of levels")
    if cert_max_x < 1:
        raise InputError("cert_max_x must be positive")
    if w.is_closed and not has_perfect_matching(w.graph):
        raise InputError("closed window has no perfect matching")

    current = w
    orig_ids = tuple(range(w.graph.vertex_count))
    cur_of_orig = {v: v for v in orig_ids}
    matched: list[Edge] = []
    covered: set[int] = set()
    certificates: list[LevelCertificate] = []
    aborted = False

    for level_idx, (f_n, eps_n, net) in enumerate(
        zip(schedule.levels, schedule.eps, nets.levels)
    ):
        chosen: list[Edge] = []
        failed: list[int] = []
        for x in sorted(net):
            if x in covered:
                continue
            cx = cur_of_orig[x]
            try:
                e_cur = least_extendable_edge(current.graph, cx)
            except InputError:
                failed.append(x)
                aborted = True
                break
            e_orig = Edge.of(orig_ids[e_cur.u], orig_ids[e_cur.v])
            chosen.append(e_orig)
            matched.append(e_orig)
            covered.add(e_orig.u)
            covered.add(e_orig.v)
            sub = remove_window_vertices(current, {e_cur.u, e_cur.v})
            current = sub.window
            orig_ids = tuple(orig_ids[i] for i in sub.original_ids)
            cur_of_orig = {v: i for i, v in enumerate(orig_ids)}
        odd_now = hull_report(current, ()).odd_components
        tutte = check_tutte_eps_k(current, eps_n, f_n, cert_max_x)
        certificates.append(
            LevelCertificate(
                level=level_idx,
                f_n=f_n,
                eps_n=eps_n,
                chosen_edges=tuple(chosen),
                no_odd_components=not odd_now,
                odd_component_count=len(odd_now),
                tutte=tutte,
                failed_vertices=tuple(failed),
            )
        )
        if aborted:
            break

    matching = MatchingState.from_pairs(matched, w.graph)
    interior_count = len(w.interior)
    if interior_count:
        coverage = Fraction(len(covered & w.interior), interior_count)
    else:
        coverage = Fraction(1)
    return RunCertificate(tuple(certificates), matching, coverage, aborted)


def complete_matching(w: Window, run: RunCertificate) -> MatchingState:
    """Extend a run's matching greedily to the rest of the closed window.

    Runs a maximum matching on the vertices the layered pass left
    uncovered and merges; on a perfectly matchable closed window the
    result covers everything because the layered engine only ever picked
    edges that preserve perfect matchability.
    """
    leftover = [v for v in range(w.graph.vertex_count) if v not in run.matching.covered]
    sub = remove_window_vertices(w, set(range(w.graph.vertex_count)) - set(leftover))
    extra = max_matching(sub.window.graph)
    pairs = [(a, b) for a, b in run.matching.edges]
    for e in extra.edges:
        pairs.append((sub.original_ids[e.u], sub.original_ids[e.v]))
    return MatchingState.from_pairs(pairs, w.graph)


def net_separation_ok(w: Window, nets: NetLevels, schedule: Schedule) -> bool:
    """Exhaustive recheck that each A_n is f(n)-separated."""
    for f_n, level in zip(schedule.levels, nets.levels):
        for i, a in enumerate(level):
            for b in level[i + 1:]:
                d = distance(w.graph, a, b)
                if d is not None and d <= f_n:
                    return False
    return True
