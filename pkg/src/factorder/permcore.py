"""Windows, consecutive containment, and path maps for permutation classes.

Permutations are tuples of ranks 1..n in one-line notation.  A class is cut
out by a finite basis of forbidden consecutive patterns.  The window maps
translate between permutations and paths in the dimension-m factor graph,
and the incremental realization routines recover, for a given path, the
permutations tracing it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .digraph import Digraph, DiPath, enumerate_paths, scc

Perm = tuple[int, ...]


def canonical_perm(values) -> Perm:
    """Rank sequence of a tuple of distinct values (the order isomorph)."""
    vals = tuple(values)
    if len(set(vals)) != len(vals):
        raise ValueError(f"values must be distinct: {vals}")
    rank = {v: i + 1 for i, v in enumerate(sorted(vals))}
    return tuple(rank[v] for v in vals)


def perm_str(p: Perm) -> str:
    """One-line notation: digit string up to length 9, space separated after."""
    if len(p) <= 9:
        return "".join(str(x) for x in p)
    return " ".join(str(x) for x in p)


def perm_from_str(s: str) -> Perm:
    tokens = s.split() if " " in s else list(s)
    try:
        vals = tuple(int(t) for t in tokens)
    except ValueError:
        raise ValueError(f"not a permutation string: {s!r}") from None
    _check_perm(vals)
    return vals


def _check_perm(vals) -> None:
    if sorted(vals) != list(range(1, len(vals) + 1)):
        raise ValueError(f"not a permutation of 1..{len(vals)}: {vals}")


def perm_from_obj(obj) -> Perm:
    """Parse a permutation given as a digit string or a list of ranks."""
    if isinstance(obj, str):
        return perm_from_str(obj)
    if isinstance(obj, (list, tuple)):
        vals = []
        for x in obj:
            if isinstance(x, bool) or not isinstance(x, int):
                raise ValueError(f"permutation entries must be integers: {x!r}")
            vals.append(x)
        vals = tuple(vals)
        _check_perm(vals)
        return vals
    raise ValueError(f"cannot parse a permutation from {obj!r}")


def perm_to_obj(p: Perm):
    """JSON form: digit string up to length 9, list of integers after."""
    if len(p) <= 9:
        return perm_str(p)
    return list(p)


def perm_factor_leq(small: Perm, big: Perm) -> bool:
    """True iff some width-len(small) window of big canonicalizes to small."""
    small = tuple(small)
    big = tuple(big)
    k = len(small)
    if k > len(big):
        return False
    if k == 0:
        return True
    return any(canonical_perm(big[i:i + k]) == small
               for i in range(len(big) - k + 1))


class PermClassSpec:
    """A permutation class given by forbidden consecutive patterns.

    The basis is normalized to an antichain: duplicates collapse and any
    element containing a kept shorter one as a factor is dropped.  b is the
    longest surviving basis length, raised to 2 so window graphs exist; a
    basis containing 1 (or the empty permutation) leaves no members at all.
    """

    def __init__(self, basis):
        parsed = [perm_from_obj(p) for p in basis]
        kept: list[Perm] = []
        for p in sorted(set(parsed), key=lambda q: (len(q), q)):
            if not any(perm_factor_leq(k, p) for k in kept):
                kept.append(p)
        self.basis: tuple[Perm, ...] = tuple(kept)
        self.empty_class: bool = bool(kept) and len(kept[0]) <= 1
        self.empty_basis: bool = not kept
        b = max((len(p) for p in kept), default=2)
        self.b: int = b if self.empty_class else max(b, 2)
        by_len: dict[int, list[Perm]] = {}
        for p in kept:
            by_len.setdefault(len(p), []).append(p)
        self._by_len: dict[int, tuple[Perm, ...]] = {
            n: tuple(v) for n, v in by_len.items()
        }

    def sort_key(self, p: Perm):
        return (len(p), tuple(p))

    def avoids(self, p: Perm) -> bool:
        return not any(perm_factor_leq(bp, p) for bp in self.basis)

    def _last_window_ok(self, p: Perm) -> bool:
        # grown from a clean parent, so only windows ending at the new
        # last entry need checking
        for n, elems in self._by_len.items():
            if n <= len(p) and canonical_perm(p[len(p) - n:]) in elems:
                return False
        return True


def enumerate_class_perms(spec: PermClassSpec, max_len: int) -> list[Perm]:
    """All class members of length 1..max_len, shortest first then lex.

    Members are grown one final entry at a time; the class is closed under
    deleting the last entry, so the growth never misses anything.
    """
    if spec.empty_class or max_len < 1:
        return []
    out: list[Perm] = []
    layer: list[Perm] = [(1,)]
    for n in range(1, max_len + 1):
        out.extend(layer)
        if n == max_len:
            break
        grown = []
        for p in layer:
            for v in range(1, n + 2):
                child = tuple(x if x < v else x + 1 for x in p) + (v,)
                if spec._last_window_ok(child):
                    grown.append(child)
        layer = sorted(grown)
    return out


@dataclass(frozen=True)
class PermFactorGraph:
    """Window graph of a permutation class at a fixed dimension."""

    dimension: int
    graph: Digraph
    vertex_perms: dict

    def perm_of(self, vertex_id: str) -> Perm:
        return self.vertex_perms[vertex_id]


def perm_factor_graph(spec: PermClassSpec, m: int) -> PermFactorGraph:
    """Graph on the class members of length m, with p -> q whenever the
    last m-1 entries of p and the first m-1 entries of q agree in pattern.

    Unlike letter graphs this keeps natural loops: the increasing vertex
    always sees 123 -> 123.
    """
    if spec.empty_class:
        if m < 1:
            raise ValueError("dimension must be at least 1")
        return PermFactorGraph(m, Digraph((), ()), {})
    if m < spec.b:
        raise ValueError(f"dimension {m} is below the basis bound {spec.b}")
    perms = [p for p in enumerate_class_perms(spec, m) if len(p) == m]
    vertex_perms = {perm_str(p): p for p in perms}
    by_prefix: dict[Perm, list[Perm]] = {}
    for q in perms:
        by_prefix.setdefault(canonical_perm(q[:m - 1]), []).append(q)
    edges = []
    for p in perms:
        for q in by_prefix.get(canonical_perm(p[1:]), ()):
            edges.append((perm_str(p), perm_str(q)))
    return PermFactorGraph(m, Digraph(list(vertex_perms), edges), vertex_perms)


def perm_to_path(p: Perm, m: int) -> DiPath:
    """Vertex id sequence of the width-m windows of p."""
    p = tuple(p)
    if m < 1:
        raise ValueError("window width must be at least 1")
    if len(p) < m:
        raise ValueError(
            f"permutation of length {len(p)} has no width-{m} windows")
    return tuple(perm_str(canonical_perm(p[i:i + m]))
                 for i in range(len(p) - m + 1))


def _path_perms(path) -> tuple[Perm, ...]:
    """Normalize a path given as vertex ids or rank tuples; validate edges."""
    taus = []
    for x in path:
        taus.append(perm_from_str(x) if isinstance(x, str) else tuple(x))
    if not taus:
        raise ValueError("empty path")
    m = len(taus[0])
    if m < 1:
        raise ValueError("path vertices must be nonempty permutations")
    for t in taus:
        if len(t) != m:
            raise ValueError("path vertices must share one window width")
        _check_perm(t)
    for a, b in zip(taus, taus[1:]):
        if canonical_perm(a[1:]) != canonical_perm(b[:m - 1]):
            raise ValueError(f"not an edge: {perm_str(a)} -> {perm_str(b)}")
    return tuple(taus)


def _append_candidates(state, tau: Perm) -> range:
    """Insertion values that extend state by one entry whose window shows tau.

    The candidate slots sit between consecutive values of the trailing
    m-1 entries, picked out by the rank of tau's final entry.  Never empty.
    """
    m = len(tau)
    trailing = sorted(state[len(state) - (m - 1):]) if m > 1 else []
    walls = [0] + trailing + [len(state) + 1]
    r = tau[-1]
    return range(walls[r - 1] + 1, walls[r] + 1)


def _insert_shift(state, v: int) -> list:
    return [x if x < v else x + 1 for x in state] + [v]


def path_to_perm_set(path, limit: Optional[int] = None) -> list[Perm]:
    """All permutations tracing the given window path, sorted lex.

    With limit set, at most limit+1 results are produced; that is enough to
    tell whether more than limit realizations exist without enumerating all
    of them.  Every partial state completes, so the result is never empty.
    """
    taus = _path_perms(path)
    states = [list(taus[0])]
    for tau in taus[1:]:
        grown = []
        for st in states:
            for v in _append_candidates(st, tau):
                grown.append(_insert_shift(st, v))
        grown.sort()
        if limit is not None and len(grown) > limit + 1:
            del grown[limit + 1:]
        states = grown
    return [tuple(st) for st in sorted(states)]


def sigma_min_rep(path) -> Perm:
    """Deterministic realization of a path: smallest insertion value at
    every step.  A canonical pick, not the lex least realization."""
    taus = _path_perms(path)
    st = list(taus[0])
    for tau in taus[1:]:
        st = _insert_shift(st, _append_candidates(st, tau)[0])
    return tuple(st)


def _prepend_values(tail: Perm, front: Perm) -> range:
    """Front insertion values extending tail by a new first entry whose
    window shows front.  Requires edge compatibility."""
    m = len(front)
    if len(tail) < m - 1:
        raise ValueError("tail shorter than the window overlap")
    if canonical_perm(front[1:]) != canonical_perm(tail[:m - 1]):
        raise ValueError(
            f"front vertex {perm_str(front)} does not fit the tail")
    walls = [0] + sorted(tail[:m - 1]) + [len(tail) + 1]
    r = front[0]
    return range(walls[r - 1] + 1, walls[r] + 1)


def _apply_prepend(tail: Perm, v: int) -> Perm:
    return (v,) + tuple(x if x < v else x + 1 for x in tail)


def unambiguous_prepend(tail: Perm, front: Perm):
    """Count the front insertions placing front before tail; when the count
    is 1 also return the unique extension, else None for the extension."""
    tail = tuple(tail)
    front = tuple(front)
    values = _prepend_values(tail, front)
    if len(values) == 1:
        return 1, _apply_prepend(tail, values[0])
    return len(values), None


def is_path_ambiguous(path) -> Optional[tuple[Perm, Perm]]:
    """Walk the path backwards by unique prepends; at the first step with
    two or more choices, return two full realizations of the whole path
    proving it ambiguous.  None when every prepend is forced."""
    taus = _path_perms(path)
    tail = taus[-1]
    for k in range(len(taus) - 2, -1, -1):
        values = _prepend_values(tail, taus[k])
        if len(values) >= 2:
            pair = [_apply_prepend(tail, values[0]),
                    _apply_prepend(tail, values[1])]
            for j in range(k - 1, -1, -1):
                pair = [_apply_prepend(t, _prepend_values(t, taus[j])[0])
                        for t in pair]
            pair.sort()
            return (pair[0], pair[1])
        tail = _apply_prepend(tail, values[0])
    return None


def has_ambiguous_path(g: PermFactorGraph) -> Optional[DiPath]:
    """First ambiguous path with at most dimension many vertices, shortest
    then lex; ambiguity always shows at that scale, so None means none."""
    if not g.graph.vertices:
        return None
    paths = sorted(enumerate_paths(g.graph, g.dimension),
                   key=lambda p: (len(p), p))
    for p in paths:
        if len(p) < 2:
            continue
        if is_path_ambiguous([g.vertex_perms[v] for v in p]) is not None:
            return p
    return None


def has_ambiguous_cycle(g: PermFactorGraph) -> Optional[DiPath]:
    """First minimal ambiguous path whose end can walk back to its start,
    shortest then lex.  Such a path closes into an ambiguous cycle; None
    means no cycle through the graph is ambiguous."""
    if not g.graph.vertices:
        return None
    decomp = scc(g.graph)
    paths = sorted(enumerate_paths(g.graph, g.dimension),
                   key=lambda p: (len(p), p))
    for p in paths:
        if len(p) < 2:
            continue
        perms = [g.vertex_perms[v] for v in p]
        if is_path_ambiguous(perms) is None:
            continue
        # minimal: dropping either end vertex kills the ambiguity
        if is_path_ambiguous(perms[:-1]) is not None:
            continue
        if is_path_ambiguous(perms[1:]) is not None:
            continue
        if decomp.component_leq(decomp.component_of(p[-1]),
                                decomp.component_of(p[0])):
            return p
    return None
