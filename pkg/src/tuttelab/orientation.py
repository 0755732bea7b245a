"""Balanced orientations of even-degree graphs, two independent ways.

Route one follows Euler: trace an Euler circuit per component and orient
edges along the traversal.  Route two goes through a bipartite gadget:
one node per host edge, deg(v)/2 copy nodes per host vertex, each edge
node adjacent to every copy of its endpoints.  A perfect matching of the
gadget directs each host edge toward the vertex owning its matched copy,
and the in-degree at v is then exactly deg(v)/2.  The two routes validate
each other.

For truncation windows the gadget accepts stub counts: copies are
allocated against degree-plus-stubs (which must be even), i.e. each stub
contributes half a copy node.  Such gadgets exist for auditing
neighborhood expansion; they are not perfectly matchable inside the
truncation, since stub edges have no edge node.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .core import Edge, Graph, InputError
from .matching import MatchingState, bipartite_max_matching


class GadgetMatchingError(RuntimeError):
    """The gadget of a closed even-degree graph failed to match perfectly.

    Mathematically unreachable for valid input (an Euler orientation
    always induces a perfect gadget matching); raised so that a broken
    invariant surfaces loudly, with the deficient side attached.
    """

    def __init__(self, message: str, uncovered: tuple[int, ...]):
        super().__init__(message)
        self.uncovered = uncovered


@dataclass(frozen=True)
class Orientation:
    """One head per host edge; heads fixed at construction."""

    heads: tuple[tuple[Edge, int], ...]

    def __post_init__(self) -> None:
        seen = set()
        for e, h in self.heads:
            if e in seen:
                raise InputError(f"edge {e} directed twice")
            seen.add(e)
            if h not in (e.u, e.v):
                raise InputError(f"head {h} is not an endpoint of {e}")

    @classmethod
    def from_dict(cls, direction: dict[Edge, int]) -> "Orientation":
        return cls(tuple(sorted(direction.items())))

    @cached_property
    def _lookup(self) -> dict[Edge, int]:
        return dict(self.heads)

    def head(self, e: Edge) -> int:
        return self._lookup[e]

    def tail(self, e: Edge) -> int:
        h = self._lookup[e]
        return e.u if h == e.v else e.v

    def __len__(self) -> int:
        return len(self.heads)


@dataclass(frozen=True)
class BalanceReport:
    violations: tuple[tuple[int, int, int], ...]  # (vertex, in, out)

    @property
    def passed(self) -> bool:
        return not self.violations


def verify_balanced(g: Graph, o: Orientation, interior: Iterable[int]) -> BalanceReport:
    """List every interior vertex whose in- and out-degrees differ."""
    directed = o._lookup
    if set(directed) != set(g.edges()):
        raise InputError("orientation is not total on the host edge set")
    indeg = [0] * g.vertex_count
    outdeg = [0] * g.vertex_count
    for e, h in o.heads:
        indeg[h] += 1
        outdeg[e.u if h == e.v else e.v] += 1
    bad = []
    for v in sorted(set(interior)):
        if not 0 <= v < g.vertex_count:
            raise InputError(f"vertex {v} out of range")
        if indeg[v] != outdeg[v]:
            bad.append((v, indeg[v], outdeg[v]))
    return BalanceReport(tuple(bad))


@dataclass(frozen=True)
class GadgetGraph:
    """Bipartite auxiliary graph whose perfect matchings orient the host.

    Gadget ids: 0..m-1 are edge nodes (host_edges order), m.. are copy
    nodes grouped by owner vertex in ascending (vertex, index) order.
    """

    host: Graph
    stubs: tuple[int, ...]
    graph: Graph
    host_edges: tuple[Edge, ...]
    copy_owner: tuple[int, ...]
    copy_counts: tuple[int, ...]

    @property
    def edge_node_count(self) -> int:
        return len(self.host_edges)

    @property
    def copy_node_count(self) -> int:
        return len(self.copy_owner)

    @property
    def edge_nodes(self) -> range:
        return range(self.edge_node_count)

    @property
    def copy_nodes(self) -> range:
        return range(self.edge_node_count, self.graph.vertex_count)

    def owner_of(self, node: int) -> int:
        """Host vertex that a copy node projects to."""
        return self.copy_owner[node - self.edge_node_count]

    def edge_of(self, node: int) -> Edge:
        """Host edge that an edge node projects to."""
        return self.host_edges[node]


def build_gadget(g: Graph, stubs: Sequence[int] | None = None) -> GadgetGraph:
    """Build the bipartite gadget; degrees (plus stubs) must be even."""
    if stubs is None:
        stubs = (0,) * g.vertex_count
    stubs = tuple(stubs)
    if len(stubs) != g.vertex_count:
        raise InputError("stubs must list one count per host vertex")
    copy_counts = []
    for v in range(g.vertex_count):
        total = g.degree(v) + stubs[v]
        if total % 2 != 0:
            raise InputError(f"vertex {v} has odd degree {total}")
        copy_counts.append(total // 2)
    host_edges = tuple(g.edges())
    m = len(host_edges)
    copy_owner: list[int] = []
    first_copy = {}
    for v, c in enumerate(copy_counts):
        first_copy[v] = m + len(copy_owner)
        copy_owner.extend([v] * c)
    gadget_edges = []
    for i, e in enumerate(host_edges):
        for v in (e.u, e.v):
            base = first_copy[v]
            for j in range(copy_counts[v]):
                gadget_edges.append((i, base + j))
    gadget = Graph.from_edges(m + len(copy_owner), gadget_edges)
    return GadgetGraph(
        host=g,
        stubs=stubs,
        graph=gadget,
        host_edges=host_edges,
        copy_owner=tuple(copy_owner),
        copy_counts=tuple(copy_counts),
    )


def orientation_from_matching(gadget: GadgetGraph, m: MatchingState) -> Orientation:
    """Direct each host edge toward the owner of its matched copy node."""
    if 2 * m.size != gadget.graph.vertex_count:
        raise InputError(
            "matching is not perfect on the gadget "
            f"({m.size} edges for {gadget.graph.vertex_count} nodes)"
        )
    partner: dict[int, int] = {}
    for e in m.edges:
        partner[e.u] = e.v
        partner[e.v] = e.u
    direction: dict[Edge, int] = {}
    for i, host_edge in enumerate(gadget.host_edges):
        mate = partner.get(i)
        if mate is None:
            raise InputError(f"edge node for {host_edge} is unmatched")
        direction[host_edge] = gadget.owner_of(mate)
    return Orientation.from_dict(direction)


def balanced_orientation_via_gadget(g: Graph) -> Orientation:
    """Orient via a perfect gadget matching; verified balanced on return."""
    gadget = build_gadget(g)
    matching = bipartite_max_matching(gadget.graph, gadget.edge_nodes)
    if 2 * matching.size != gadget.graph.vertex_count:
        uncovered = tuple(
            v for v in range(gadget.graph.vertex_count) if v not in matching.covered
        )
        side = "edge" if uncovered and uncovered[0] < gadget.edge_node_count else "vertex"
        raise GadgetMatchingError(
            f"gadget matching not perfect; deficient {side}-type nodes: {uncovered}",
            uncovered,
        )
    o = orientation_from_matching(gadget, matching)
    report = verify_balanced(g, o, range(g.vertex_count))
    if not report.passed:
        raise GadgetMatchingError(
            f"gadget orientation unbalanced at {report.violations}", ()
        )
    return o


def eulerian_orientation(g: Graph) -> Orientation:
    """Orient along an Euler circuit of each component (deterministic).

    Circuits start at the least positive-degree vertex of a component and
    always leave along the least unused incident edge, so identical
    inputs produce identical orientations.
    """
    for v in range(g.vertex_count):
        if g.degree(v) % 2 != 0:
            raise InputError(f"vertex {v} has odd degree {g.degree(v)}")
    adj = g.adjacency
    used: set[Edge] = set()
    ptr = [0] * g.vertex_count
    direction: dict[Edge, int] = {}
    for start in range(g.vertex_count):
        if not adj[start] or all(
            Edge.of(start, u) in used for u in adj[start]
        ):
            continue
        stack = [start]
        trail: list[int] = []
        while stack:
            v = stack[-1]
            advanced = False
            while ptr[v] < len(adj[v]):
                u = adj[v][ptr[v]]
                e = Edge.of(v, u)
                if e in used:
                    ptr[v] += 1
                    continue
                used.add(e)
                stack.append(u)
                advanced = True
                break
            if not advanced:
                trail.append(stack.pop())
        circuit = trail[::-1]
        for a, b in zip(circuit, circuit[1:]):
            direction[Edge.of(a, b)] = b
    return Orientation.from_dict(direction)


@dataclass(frozen=True)
class HallSide:
    side: str  # "edge" or "vertex"
    checked: int
    min_ratio: Fraction | None
    witness: tuple[int, ...]
    min_ratio_credited: Fraction | None
    witness_credited: tuple[int, ...]


@dataclass(frozen=True)
class GadgetHallReport:
    epsilon: Fraction
    max_f: int
    edge_side: HallSide
    vertex_side: HallSide

    @staticmethod
    def _ok(value: Fraction | None, threshold: Fraction) -> bool:
        return value is None or value >= threshold

    @property
    def passed(self) -> bool:
        t = 1 + self.epsilon
        return self._ok(self.edge_side.min_ratio_credited, t) and self._ok(
            self.vertex_side.min_ratio_credited, t
        )

    @property
    def passed_raw(self) -> bool:
        t = 1 + self.epsilon
        return self._ok(self.edge_side.min_ratio, t) and self._ok(
            self.vertex_side.min_ratio, t
        )


def check_gadget_hall_expansion(
    gadget: GadgetGraph,
    stubs: Sequence[int] | None,
    epsilon: Fraction | int,
    max_f: int,
) -> GadgetHallReport:
    """Audit |N(F)| >= (1+epsilon)|F| for F on one gadget side at a time.

    Neighborhoods are counted literally in the gadget, whatever shape F
    has.  Vertices at the truncation frontier additionally earn a
    half-neighbor credit per stub for vertex-type F (a stub edge's node
    lies outside the truncation; crediting half of it mirrors the way
    boundary edges enter the neighborhood count).  Edge-type F needs no
    credit: stub halves already entered the copy counts when the gadget
    was built.  Minima are reported both with and without the credit.
    """
    epsilon = Fraction(epsilon)
    if epsilon < 0:
        raise InputError("epsilon must be nonnegative")
    if max_f < 1:
        raise InputError("max_f must be positive")
    if stubs is None:
        stubs = gadget.stubs
    stubs = tuple(stubs)
    if len(stubs) != gadget.host.vertex_count:
        raise InputError("stubs must list one count per host vertex")
    masks = gadget.graph.neighbor_masks

    def audit(side_name: str, nodes: Sequence[int]) -> HallSide:
        best_raw: Fraction | None = None
        best_raw_f: tuple[int, ...] = ()
        best_cred: Fraction | None = None
        best_cred_f: tuple[int, ...] = ()
        checked = 0
        for size in range(1, min(max_f, len(nodes)) + 1):
            for fs in combinations(nodes, size):
                checked += 1
                nmask = 0
                for node in fs:
                    nmask |= masks[node]
                count = nmask.bit_count()
                raw = Fraction(count, size)
                if side_name == "vertex":
                    owners = {gadget.owner_of(node) for node in fs}
                    credit = Fraction(sum(stubs[v] for v in owners), 2)
                else:
                    credit = Fraction(0)
                cred = (count + credit) / size if credit else raw
                if best_raw is None or raw < best_raw:
                    best_raw = raw
                    best_raw_f = fs
                if best_cred is None or cred < best_cred:
                    best_cred = cred
                    best_cred_f = fs
        return HallSide(
            side=side_name,
            checked=checked,
            min_ratio=best_raw,
            witness=best_raw_f,
            min_ratio_credited=best_cred,
            witness_credited=best_cred_f,
        )

    edge_side = audit("edge", list(gadget.edge_nodes))
    vertex_side = audit("vertex", list(gadget.copy_nodes))
    return GadgetHallReport(epsilon, max_f, edge_side, vertex_side)
