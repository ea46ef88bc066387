"""Finite digraphs and the subpath order on their paths.

Paths here are walks: vertices may repeat, a single vertex is a path of
length zero, and a cycle is a closed walk with at least one edge.  The poset
under study is the set of paths ordered by consecutive-subpath containment.
Atomicity of that poset is equivalent to the graph being strongly connected
or a bicycle; well-quasi-ordering is equivalent to the absence of an in-out
cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from factorder.decision import Decision, ResourceCapError

DiPath = tuple[str, ...]


class Digraph:
    """Directed graph with string vertex ids, loops allowed, no parallel edges."""

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str]]):
        vs = list(vertices)
        seen: set[str] = set()
        for v in vs:
            if not isinstance(v, str) or not v:
                raise ValueError(f"vertex id must be a nonempty string, got {v!r}")
            if v in seen:
                raise ValueError(f"duplicate vertex id {v!r}")
            seen.add(v)
        es: list[tuple[str, str]] = []
        eseen: set[tuple[str, str]] = set()
        for e in edges:
            u, w = e
            if u not in seen:
                raise ValueError(f"edge tail {u!r} is not a vertex")
            if w not in seen:
                raise ValueError(f"edge head {w!r} is not a vertex")
            if (u, w) in eseen:
                raise ValueError(f"duplicate edge {(u, w)!r}")
            eseen.add((u, w))
            es.append((u, w))
        self.vertices: tuple[str, ...] = tuple(sorted(seen))
        self.edges: tuple[tuple[str, str], ...] = tuple(sorted(eseen))
        succ: dict[str, list[str]] = {v: [] for v in self.vertices}
        pred: dict[str, list[str]] = {v: [] for v in self.vertices}
        for u, w in self.edges:
            succ[u].append(w)
            pred[w].append(u)
        self.succ: dict[str, tuple[str, ...]] = {v: tuple(sorted(s)) for v, s in succ.items()}
        self.pred: dict[str, tuple[str, ...]] = {v: tuple(sorted(p)) for v, p in pred.items()}
        self._edge_set = eseen

    def has_edge(self, u: str, w: str) -> bool:
        return (u, w) in self._edge_set

    def out_degree(self, v: str) -> int:
        return len(self.succ[v])

    def in_degree(self, v: str) -> int:
        return len(self.pred[v])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Digraph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __repr__(self) -> str:
        return f"Digraph({len(self.vertices)} vertices, {len(self.edges)} edges)"


def make_digraph(vertices: Iterable[str], edges: Iterable[Sequence[str]]) -> Digraph:
    return Digraph(vertices, [(e[0], e[1]) for e in edges])


def digraph_to_json(g: Digraph) -> dict:
    return {"vertices": list(g.vertices), "edges": [[u, w] for u, w in g.edges]}


def digraph_from_json(data: dict) -> Digraph:
    if not isinstance(data, dict):
        raise ValueError("digraph JSON must be an object")
    if "vertices" not in data:
        raise ValueError("digraph JSON is missing the 'vertices' field")
    if "edges" not in data:
        raise ValueError("digraph JSON is missing the 'edges' field")
    verts = data["vertices"]
    edges = data["edges"]
    if not isinstance(verts, list):
        raise ValueError("'vertices' must be a list of strings")
    if not isinstance(edges, list):
        raise ValueError("'edges' must be a list of [tail, head] pairs")
    out_edges = []
    for e in edges:
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise ValueError(f"edge {e!r} must be a [tail, head] pair")
        out_edges.append((e[0], e[1]))
    return Digraph(verts, out_edges)


def is_path(g: Digraph, p: Sequence[str]) -> bool:
    if len(p) == 0:
        return False
    if any(v not in g.succ for v in p):
        return False
    return all(g.has_edge(p[i], p[i + 1]) for i in range(len(p) - 1))


def subpath_leq(p: Sequence[str], q: Sequence[str]) -> bool:
    """Consecutive containment of vertex sequences."""
    n, m = len(p), len(q)
    if n > m:
        return False
    tp = tuple(p)
    return any(tuple(q[i : i + n]) == tp for i in range(m - n + 1))


def enumerate_paths(g: Digraph, max_vertices: int, cap: int = 2_000_000) -> list[DiPath]:
    """All paths (walks) with 1..max_vertices vertices, lexicographic."""
    if max_vertices < 1:
        raise ValueError("max_vertices must be >= 1")
    out: list[DiPath] = []
    layer: list[DiPath] = [(v,) for v in g.vertices]
    for _ in range(max_vertices):
        out.extend(layer)
        if len(out) > cap:
            raise ResourceCapError(f"path enumeration cap {cap} exceeded")
        nxt: list[DiPath] = []
        for p in layer:
            for s in g.succ[p[-1]]:
                nxt.append(p + (s,))
        layer = nxt
        if not layer:
            break
    return sorted(out)


# ---------------------------------------------------------------------------
# strongly connected components


@dataclass(frozen=True)
class SccDecomposition:
    """SCC partition plus the condensation.

    components are sorted internally and listed by smallest contained vertex.
    The condensation names each component after its smallest vertex, so the
    condensation of an already acyclic graph is the graph itself.
    """

    components: tuple[tuple[str, ...], ...]
    condensation: Digraph

    def component_of(self, v: str) -> int:
        for i, comp in enumerate(self.components):
            if v in comp:
                return i
        raise KeyError(v)

    def component_leq(self, i: int, j: int) -> bool:
        """Reachability order on components: i <= j iff j is reachable from i."""
        start = self.components[i][0]
        goal = self.components[j][0]
        seen = {start}
        frontier = [start]
        while frontier:
            if goal in seen:
                return True
            nxt = []
            for v in frontier:
                for w in self.condensation.succ[v]:
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        return goal in seen


def _tarjan(g: Digraph) -> list[list[str]]:
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    comps: list[list[str]] = []
    counter = 0
    for root in g.vertices:
        if root in index:
            continue
        work: list[tuple[str, int]] = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            advanced = False
            succ = g.succ[v]
            while pi < len(succ):
                w = succ[pi]
                pi += 1
                if w not in index:
                    work[-1] = (v, pi)
                    work.append((w, 0))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return comps


def scc(g: Digraph) -> SccDecomposition:
    comps = [tuple(sorted(c)) for c in _tarjan(g)]
    comps.sort(key=lambda c: c[0])
    comp_of: dict[str, int] = {}
    for i, c in enumerate(comps):
        for v in c:
            comp_of[v] = i
    names = [c[0] for c in comps]
    cedges = set()
    for u, w in g.edges:
        cu, cw = comp_of[u], comp_of[w]
        if cu != cw:
            cedges.add((names[cu], names[cw]))
    cond = Digraph(names, sorted(cedges))
    return SccDecomposition(components=tuple(comps), condensation=cond)


def _is_trivial_comp(g: Digraph, comp: tuple[str, ...]) -> bool:
    return len(comp) == 1 and not g.has_edge(comp[0], comp[0])


def is_strongly_connected(g: Digraph) -> bool:
    if not g.vertices:
        return False
    return len(scc(g).components) == 1


def is_acyclic(g: Digraph) -> bool:
    return all(_is_trivial_comp(g, c) for c in scc(g).components)


def _linear_comp_order(g: Digraph, dec: SccDecomposition) -> Optional[list[int]]:
    """Topological order of components if it is unique, else None.

    Uniqueness of the Kahn order is equivalent to the components being
    linearly ordered by reachability.
    """
    n = len(dec.components)
    comp_of = {v: i for i, c in enumerate(dec.components) for v in c}
    indeg = [0] * n
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, w in g.edges:
        cu, cw = comp_of[u], comp_of[w]
        if cu != cw and cw not in adj[cu]:
            adj[cu].add(cw)
    for cu in range(n):
        for cw in adj[cu]:
            indeg[cw] += 1
    order: list[int] = []
    ready = [i for i in range(n) if indeg[i] == 0]
    while ready:
        if len(ready) > 1:
            return None
        i = ready.pop()
        order.append(i)
        for j in sorted(adj[i]):
            indeg[j] -= 1
            if indeg[j] == 0:
                ready.append(j)
    assert len(order) == n
    return order


def _first_incomparable_comps(g: Digraph, dec: SccDecomposition) -> Optional[tuple[int, int]]:
    """First pair of incomparable components met by Kahn elimination."""
    n = len(dec.components)
    comp_of = {v: i for i, c in enumerate(dec.components) for v in c}
    indeg = [0] * n
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, w in g.edges:
        cu, cw = comp_of[u], comp_of[w]
        if cu != cw and cw not in adj[cu]:
            adj[cu].add(cw)
    for cu in range(n):
        for cw in adj[cu]:
            indeg[cw] += 1
    ready = sorted(i for i in range(n) if indeg[i] == 0)
    while ready:
        if len(ready) > 1:
            return ready[0], ready[1]
        i = ready.pop()
        for j in sorted(adj[i]):
            indeg[j] -= 1
            if indeg[j] == 0:
                ready.append(j)
        ready.sort()
    return None


def _bfs_path(g: Digraph, start: str, goal: str, within: set[str]) -> Optional[DiPath]:
    """Shortest path start..goal inside `within`, lex-least among shortest.

    start == goal gives the single-vertex path.
    """
    if start == goal:
        return (start,)
    # distances to goal over reversed edges, then greedy forward walk
    dist = {goal: 0}
    frontier = [goal]
    while frontier:
        nxt = []
        for v in frontier:
            for u in g.pred[v]:
                if u in within and u not in dist:
                    dist[u] = dist[v] + 1
                    nxt.append(u)
        frontier = nxt
    if start not in dist:
        return None
    path = [start]
    cur = start
    while cur != goal:
        cur = min(s for s in g.succ[cur] if s in within and dist.get(s, -1) == dist[cur] - 1)
        path.append(cur)
    return tuple(path)


# ---------------------------------------------------------------------------
# bicycles


@dataclass(frozen=True)
class Bicycle:
    """A graph shaped as cycle, connecting path, cycle.

    Either cycle may be absent.  The connecting path starts at the exit
    vertex of the initial cycle (index 0 of initial_cycle) and ends at the
    entry vertex of the terminal cycle (index 0 of terminal_cycle); a lone
    cycle is stored as terminal_cycle with the single-vertex connecting path.
    """

    initial_cycle: Optional[tuple[str, ...]]
    connecting_path: tuple[str, ...]
    terminal_cycle: Optional[tuple[str, ...]]

    def __post_init__(self) -> None:
        assert len(self.connecting_path) >= 1
        if self.initial_cycle is not None:
            assert self.connecting_path[0] == self.initial_cycle[0]
        if self.terminal_cycle is not None:
            assert self.connecting_path[-1] == self.terminal_cycle[0]
        if self.initial_cycle is not None and self.terminal_cycle is not None:
            assert not set(self.initial_cycle) & set(self.terminal_cycle)
            assert len(self.connecting_path) >= 2
        interior = set(self.connecting_path[1:-1])
        for cyc in (self.initial_cycle, self.terminal_cycle):
            if cyc is not None:
                assert not interior & set(cyc)

    def vertex_set(self) -> set[str]:
        out = set(self.connecting_path)
        for cyc in (self.initial_cycle, self.terminal_cycle):
            if cyc is not None:
                out |= set(cyc)
        return out

    def edge_set(self) -> set[tuple[str, str]]:
        out: set[tuple[str, str]] = set()
        for cyc in (self.initial_cycle, self.terminal_cycle):
            if cyc is not None:
                r = len(cyc)
                for i in range(r):
                    out.add((cyc[i], cyc[(i + 1) % r]))
        p = self.connecting_path
        for i in range(len(p) - 1):
            out.add((p[i], p[i + 1]))
        return out

    def contains_path(self, p: Sequence[str]) -> bool:
        if len(p) == 1:
            return p[0] in self.vertex_set()
        es = self.edge_set()
        return all((p[i], p[i + 1]) in es for i in range(len(p) - 1))

    def to_json(self) -> dict:
        return {
            "initialCycle": list(self.initial_cycle) if self.initial_cycle else None,
            "connectingPath": list(self.connecting_path),
            "terminalCycle": list(self.terminal_cycle) if self.terminal_cycle else None,
        }


def _comp_cycle(g: Digraph, comp: tuple[str, ...], first: str) -> tuple[str, ...]:
    """Vertex order of a simple-cycle component, rotated to start at first."""
    if len(comp) == 1:
        assert g.has_edge(comp[0], comp[0])
        return (comp[0],)
    members = set(comp)
    order = [first]
    cur = first
    while True:
        nxts = [s for s in g.succ[cur] if s in members]
        assert len(nxts) == 1, f"component is not a simple cycle at {cur!r}"
        cur = nxts[0]
        if cur == first:
            break
        order.append(cur)
    assert len(order) == len(comp)
    return tuple(order)


def _comp_is_simple_cycle(g: Digraph, comp: tuple[str, ...]) -> bool:
    members = set(comp)
    for v in comp:
        if len([s for s in g.succ[v] if s in members]) != 1:
            return False
        if len([p for p in g.pred[v] if p in members]) != 1:
            return False
    return True


def as_bicycle(g: Digraph) -> Optional[Bicycle]:
    if not g.vertices:
        return None
    dec = scc(g)
    comps = dec.components
    if len(comps) == 1:
        comp = comps[0]
        if _is_trivial_comp(g, comp):
            return Bicycle(None, (comp[0],), None)
        if _comp_is_simple_cycle(g, comp):
            least = comp[0]
            return Bicycle(None, (least,), _comp_cycle(g, comp, least))
        return None
    order = _linear_comp_order(g, dec)
    if order is None:
        return None
    chain = [comps[i] for i in order]
    last = set(chain[-1])
    first = set(chain[0])
    for v in g.vertices:
        if v not in last and g.in_degree(v) > 1:
            return None
        if v not in first and g.out_degree(v) > 1:
            return None
    comp_of = {v: i for i, c in enumerate(chain) for v in c}
    cross = [(u, w) for u, w in g.edges if comp_of[u] != comp_of[w]]
    tails = [comp_of[u] for u, _ in cross]
    heads = [comp_of[w] for _, w in cross]
    if len(set(tails)) != len(cross) or len(set(heads)) != len(cross):
        return None
    # the cross edges must chain consecutive components
    step = {}
    for u, w in cross:
        step[comp_of[u]] = (u, w)
    for k in range(len(chain) - 1):
        if k not in step or comp_of[step[k][1]] != k + 1:
            return None
    conn = [step[0][0]]
    for k in range(len(chain) - 1):
        conn.append(step[k][1])
    for mid in chain[1:-1]:
        if not _is_trivial_comp(g, mid):
            return None
    initial = None
    if not _is_trivial_comp(g, chain[0]):
        initial = _comp_cycle(g, chain[0], conn[0])
    terminal = None
    if not _is_trivial_comp(g, chain[-1]):
        terminal = _comp_cycle(g, chain[-1], conn[-1])
    return Bicycle(initial, tuple(conn), terminal)


# ---------------------------------------------------------------------------
# in-out cycles and the wqo decision


def _nontrivial_comps(g: Digraph, dec: SccDecomposition) -> list[tuple[str, ...]]:
    return [c for c in dec.components if not _is_trivial_comp(g, c)]


def _find_in_out_cycle(g: Digraph) -> Optional[tuple[DiPath, str, str]]:
    """Closed walk through an in-degree>1 vertex and an out-degree>1 vertex.

    Degrees count the whole graph; the walk stays inside one component.
    Returns (cycle, u_in, u_out) with cycle[0] == cycle[-1] == u_in.
    """
    dec = scc(g)
    for comp in _nontrivial_comps(g, dec):
        members = set(comp)
        cin = [v for v in comp if g.in_degree(v) > 1]
        cout = [v for v in comp if g.out_degree(v) > 1]
        if not cin or not cout:
            continue
        u = min(cin)
        w = min(cout)
        if u != w:
            p1 = _bfs_path(g, u, w, members)
            p2 = _bfs_path(g, w, u, members)
            assert p1 is not None and p2 is not None
            return p1 + p2[1:], u, w
        s = min(x for x in g.succ[u] if x in members)
        if s == u:
            return (u, u), u, u
        p = _bfs_path(g, s, u, members)
        assert p is not None
        return (u,) + p, u, u
    return None


def has_in_out_cycle(g: Digraph) -> Optional[DiPath]:
    found = _find_in_out_cycle(g)
    return found[0] if found else None


def _in_out_antichain(g: Digraph, cycle: DiPath, u_in: str, u_out: str, count: int) -> list[DiPath]:
    """Path antichain pumped from an in-out cycle with two spare edges."""
    base = cycle[:-1]
    walk_pred = cycle[-2]
    spare_in = min(t for t in g.pred[u_in] if t != walk_pred)
    pos = base.index(u_out)
    walk_succ = cycle[pos + 1]
    spare_out = min(h for h in g.succ[u_out] if h != walk_succ)
    out: list[DiPath] = []
    for k in range(1, count + 1):
        out.append((spare_in,) + base * k + base[: pos + 1] + (spare_out,))
    for i, a in enumerate(out):
        assert is_path(g, a)
        for b_ in out[i + 1 :]:
            assert not subpath_leq(a, b_) and not subpath_leq(b_, a)
    return out


def path_poset_wqo(g: Digraph, witness: bool = True, witness_len: int = 10) -> Decision:
    found = _find_in_out_cycle(g)
    if found is None:
        return Decision(value=True, explanation="no in-out cycle, so the subpath order is a wqo")
    cycle, u_in, u_out = found
    w = None
    if witness:
        chain = _in_out_antichain(g, cycle, u_in, u_out, witness_len)
        w = {"in_out_cycle": list(cycle), "antichain": [list(p) for p in chain]}
    return Decision(
        value=False,
        explanation="an in-out cycle pumps an infinite antichain of paths",
        witness=w,
    )


# ---------------------------------------------------------------------------
# atomicity of the subpath order


def path_poset_atomic(g: Digraph, witness: bool = True) -> Decision:
    if not g.vertices:
        return Decision(
            value=None,
            degenerate="degenerate: empty",
            explanation="empty graph has an empty path poset",
        )
    if is_strongly_connected(g):
        return Decision(value=True, explanation="strongly connected, so any two paths extend to a common path")
    bike = as_bicycle(g)
    if bike is not None:
        return Decision(value=True, explanation="the graph is a bicycle, whose paths are directed by containment")
    pair = _atomic_witness_paths(g)
    assert is_path(g, pair[0]) and is_path(g, pair[1])
    w = {"path_pair": [list(pair[0]), list(pair[1])]} if witness else None
    return Decision(
        value=False,
        explanation="neither strongly connected nor a bicycle: two paths with no common extension",
        witness=w,
    )


def _atomic_witness_paths(g: Digraph) -> tuple[DiPath, DiPath]:
    """Two paths with no common superpath, for a non-SC non-bicycle graph."""
    dec = scc(g)
    comps = dec.components
    incomp = _first_incomparable_comps(g, dec)
    if incomp is not None:
        i, j = incomp
        u, v = comps[i][0], comps[j][0]
        a, b = sorted([(u,), (v,)])
        return a, b
    order = _linear_comp_order(g, dec)
    assert order is not None
    chain = [comps[i] for i in order]
    comp_pos = {v: k for k, c in enumerate(chain) for v in c}
    first = set(chain[0])
    last = set(chain[-1])

    cands = sorted(v for v in g.vertices if v not in first and g.out_degree(v) > 1)
    if cands:
        u = cands[0]
        k = comp_pos[u]
        members = set(chain[k])
        entering = sorted((t, h) for t, h in g.edges if comp_pos[t] < k and comp_pos[h] == k)
        t, h = entering[0]
        inner = _bfs_path(g, h, u, members)
        assert inner is not None
        pi = (t,) + inner
        heads = list(g.succ[u])[:2]
        return pi + (heads[0],), pi + (heads[1],)

    cands = sorted(v for v in g.vertices if v not in last and g.in_degree(v) > 1)
    if cands:
        u = cands[0]
        k = comp_pos[u]
        members = set(chain[k])
        leaving = sorted((t, h) for t, h in g.edges if comp_pos[t] == k and comp_pos[h] > k)
        t, h = leaving[0]
        inner = _bfs_path(g, u, t, members)
        assert inner is not None
        pi = inner + (h,)
        tails = list(g.pred[u])[:2]
        return (tails[0],) + pi, (tails[1],) + pi

    cross = sorted((u, w) for u, w in g.edges if comp_pos[u] != comp_pos[w])
    by_tail: dict[int, list[tuple[str, str]]] = {}
    by_head: dict[int, list[tuple[str, str]]] = {}
    for e in cross:
        by_tail.setdefault(comp_pos[e[0]], []).append(e)
        by_head.setdefault(comp_pos[e[1]], []).append(e)
    for grouping in (by_tail, by_head):
        for k in sorted(grouping):
            if len(grouping[k]) >= 2:
                e1, e2 = grouping[k][0], grouping[k][1]
                return tuple(e1), tuple(e2)
    raise AssertionError("graph is not a bicycle yet no witness rule applies")


# ---------------------------------------------------------------------------
# bicycle decomposition


def bicycle_decomposition(g: Digraph, cap: int = 100_000) -> Optional[list[Bicycle]]:
    """Cover of all paths by bicycles, or None when an in-out cycle exists."""
    if has_in_out_cycle(g) is not None:
        return None
    dec = scc(g)
    comps = dec.components
    comp_of = {v: i for i, c in enumerate(comps) for v in c}
    has_in = [False] * len(comps)
    has_out = [False] * len(comps)
    for u, w in g.edges:
        cu, cw = comp_of[u], comp_of[w]
        if cu != cw:
            has_out[cu] = True
            has_in[cw] = True
    sinks = {i for i in range(len(comps)) if not has_out[i]}
    out: list[Bicycle] = []
    for i, comp in enumerate(comps):
        if not has_in[i] and not has_out[i]:
            if _is_trivial_comp(g, comp):
                out.append(Bicycle(None, (comp[0],), None))
            else:
                least = comp[0]
                out.append(Bicycle(None, (least,), _comp_cycle(g, comp, least)))
            continue
        if has_in[i]:
            continue
        # source component: walk every route to a sink through trivial comps
        nontrivial_src = not _is_trivial_comp(g, comp)
        starts = sorted(u for u in comp if any(comp_of[s] != i for s in g.succ[u]))
        for start in starts:
            stack: list[DiPath] = [(start,)]
            while stack:
                route = stack.pop()
                cur = route[-1]
                ci = comp_of[cur]
                if len(route) > 1 and ci in sinks:
                    if len(out) >= cap:
                        raise ResourceCapError(f"bicycle decomposition cap {cap} exceeded")
                    initial = _comp_cycle(g, comp, start) if nontrivial_src else None
                    tcomp = comps[ci]
                    terminal = None if _is_trivial_comp(g, tcomp) else _comp_cycle(g, tcomp, cur)
                    out.append(Bicycle(initial, route, terminal))
                    continue
                if len(route) > 1:
                    assert _is_trivial_comp(g, comps[ci]), "route crossed a nontrivial middle component"
                nexts = [s for s in g.succ[cur] if comp_of[s] != ci] if len(route) > 1 else [
                    s for s in g.succ[cur] if comp_of[s] != i
                ]
                for s in sorted(nexts, reverse=True):
                    stack.append(route + (s,))
    return out


# ---------------------------------------------------------------------------
# DOT export


def export_dot(g: Digraph, bicycle: Optional[Bicycle] = None) -> str:
    lines = ["digraph {"]
    if not g.vertices:
        lines.append("  // empty graph")
    roles: dict[str, str] = {}
    if bicycle is not None:
        for v in bicycle.connecting_path:
            roles[v] = "connecting-path"
        if bicycle.initial_cycle:
            for v in bicycle.initial_cycle:
                roles[v] = "initial-cycle"
        if bicycle.terminal_cycle:
            for v in bicycle.terminal_cycle:
                roles[v] = "terminal-cycle"
    for v in g.vertices:
        if v in roles:
            lines.append(f'  "{v}" [comment="{roles[v]}"];')
        else:
            lines.append(f'  "{v}";')
    for u, w in g.edges:
        lines.append(f'  "{u}" -> "{w}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
