"""Iterators, cores, and splittable pairs of bicycle-shaped factor graphs.

Winding a cycle of a bicycle stamps out copies of one short permutation,
the iterator of that side.  This module computes the iterators, classifies
the gaps between consecutive iterator values by how they evolve from copy
to copy, enumerates the cores (the balanced permutations of minimal cycle
length), grows any core to larger cycle lengths, and searches the cores
for a splittable pair: an entry from the far side of the bicycle caught
inside a shrinking gap.  A splittable pair converts into an explicit
infinite antichain, realized here by its first n elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .digraph import Bicycle, DiPath
from .permcore import (
    Perm,
    _insert_shift,
    canonical_perm,
    is_path_ambiguous,
    path_to_perm_set,
    perm_factor_leq,
    perm_from_str,
    perm_str,
    perm_to_path,
)


class AmbiguousCycleError(ValueError):
    """Raised when a cycle window admits two realizations.

    Iterators only exist over unambiguous cycles; callers that reach this
    state should have routed the graph through the ambiguity witness path
    instead.  Carries the offending window and a realization pair.
    """

    def __init__(self, cycle, path, evidence) -> None:
        self.cycle = tuple(cycle)
        self.path = tuple(path)
        self.evidence = evidence
        super().__init__("ambiguous cycle window " + " -> ".join(self.path))


@dataclass(frozen=True)
class IteratorSpec:
    """One side of a bicycle, wound into its repeating permutation.

    cycle_vertices is rotated so index 0 touches the connecting path (the
    exit vertex on the initial side, the entry vertex on the terminal
    side).  iterator has length r*s where s is least with r*s >= b.
    juxtaposition is the pattern of two adjacent copies (length 2*r*s);
    entry_monotonicity records, per iterator position, whether the entry
    rises or falls from each copy to the next, copies ordered outward from
    the connecting segment on both sides.
    """

    side: str
    cycle_vertices: tuple[Perm, ...]
    r: int
    s: int
    iterator: Perm
    juxtaposition: Perm
    entry_monotonicity: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.iterator)

    def to_json(self) -> dict:
        return {
            "side": self.side,
            "cycleVertices": [perm_str(p) for p in self.cycle_vertices],
            "r": self.r,
            "s": self.s,
            "iterator": perm_str(self.iterator),
            "entryMonotonicity": list(self.entry_monotonicity),
        }


@dataclass(frozen=True)
class PairClass:
    """A consecutive value gap of an iterator and how it evolves.

    Proper pairs are (v, v+1); the boundary gaps below 1 and above the top
    value use None for the missing endpoint.  Positions are 1-based within
    the iterator.  kind is increasing, decreasing, expanding or shrinking:
    the copy-1 interval of a shrinking gap strictly contains the copy-2
    interval, so later copies pull away from anything caught inside.
    """

    side: str
    low_value: Optional[int]
    high_value: Optional[int]
    low_position: Optional[int]
    high_position: Optional[int]
    kind: str

    def to_json(self) -> dict:
        return {
            "side": self.side,
            "pair": [self.low_value, self.high_value],
            "positions": [self.low_position, self.high_position],
            "kind": self.kind,
        }


def _wind(cycle, offset: int, count: int) -> tuple:
    r = len(cycle)
    return tuple(cycle[(offset + t) % r] for t in range(count))


def _unique_sigma(path) -> Perm:
    sigma = path_to_perm_set(path, limit=1)
    assert len(sigma) == 1, "winding of an unambiguous cycle realizes uniquely"
    return sigma[0]


def _cycle_iterator(cycle_ids, side: str, b: int) -> IteratorSpec:
    cyc = tuple(perm_from_str(v) for v in cycle_ids)
    r = len(cyc)
    s = -(-b // r)
    rs = r * s
    # Minimal ambiguous paths fit in b vertices, so the b-windows at the r
    # offsets cover every way the winding could branch.
    for off in range(r):
        window = _wind(cycle_ids, off, b)
        evidence = is_path_ambiguous(window)
        if evidence is not None:
            raise AmbiguousCycleError(cycle_ids, window, evidence)
    # The first terminal chunk starts b entries past the entry window, the
    # first initial chunk right at the exit window.
    offset = 0 if side == "initial" else b % r
    iterator = _unique_sigma(_wind(cyc, offset, rs - b + 1))
    juxtaposition = _unique_sigma(_wind(cyc, offset, 2 * rs - b + 1))
    assert canonical_perm(juxtaposition[:rs]) == iterator
    assert canonical_perm(juxtaposition[rs:]) == iterator
    mono = []
    for i in range(1, rs + 1):
        if side == "terminal":
            up = juxtaposition[i - 1] < juxtaposition[rs + i - 1]
        else:
            # initial copies read right to left: the chunk next to the
            # connecting segment is copy 1 and sits on the right
            up = juxtaposition[rs + i - 1] < juxtaposition[i - 1]
        mono.append("increasing" if up else "decreasing")
    return IteratorSpec(side, cyc, r, s, iterator, juxtaposition, tuple(mono))


def compute_iterators(
        bi: Bicycle, b: int) -> tuple[Optional[IteratorSpec], Optional[IteratorSpec]]:
    """Iterators of both sides of the bicycle; None for an absent cycle."""
    alpha = None
    gamma = None
    if bi.initial_cycle is not None:
        alpha = _cycle_iterator(bi.initial_cycle, "initial", b)
    if bi.terminal_cycle is not None:
        gamma = _cycle_iterator(bi.terminal_cycle, "terminal", b)
    return alpha, gamma


def classify_pairs(it: IteratorSpec) -> list[PairClass]:
    """All consecutive value gaps of the iterator, boundaries included."""
    n = len(it.iterator)
    pos = {v: i + 1 for i, v in enumerate(it.iterator)}
    mono = it.entry_monotonicity
    out = []
    for v in range(n + 1):
        if v == 0:
            j = pos[1]
            kind = "expanding" if mono[j - 1] == "increasing" else "shrinking"
            out.append(PairClass(it.side, None, 1, None, j, kind))
        elif v == n:
            i = pos[n]
            kind = "expanding" if mono[i - 1] == "decreasing" else "shrinking"
            out.append(PairClass(it.side, n, None, i, None, kind))
        else:
            i, j = pos[v], pos[v + 1]
            mi, mj = mono[i - 1], mono[j - 1]
            if mi == "increasing" and mj == "increasing":
                kind = "increasing"
            elif mi == "decreasing" and mj == "decreasing":
                kind = "decreasing"
            elif mi == "decreasing":
                kind = "expanding"
            else:
                kind = "shrinking"
            out.append(PairClass(it.side, v, v + 1, i, j, kind))
    return out


def _balanced_path(bi: Bicycle, alpha: Optional[IteratorSpec],
                   gamma: Optional[IteratorSpec], m: int) -> tuple[Perm, ...]:
    """Vertex sequence winding each present cycle m times around."""
    conn = tuple(perm_from_str(v) for v in bi.connecting_path)
    path: list[Perm] = []
    if alpha is not None:
        w = _wind(alpha.cycle_vertices, 0, m * len(alpha) + 1)
        assert w[-1] == conn[0]
        path.extend(w)
        path.extend(conn[1:])
    else:
        path.extend(conn)
    if gamma is not None:
        assert path[-1] == gamma.cycle_vertices[0]
        path.extend(_wind(gamma.cycle_vertices, 1, m * len(gamma)))
    return tuple(path)


@dataclass(frozen=True)
class Core:
    """A balanced permutation of minimal cycle length, segmented.

    perm splits as alpha_c .. alpha_1, beta, gamma_1 .. gamma_c; chunk t=1
    of either side is adjacent to beta and chunks are numbered outward.
    beta covers the b entries of the entry window plus one entry per
    connecting edge.
    """

    perm: Perm
    c: int
    b: int
    alpha: Optional[IteratorSpec]
    gamma: Optional[IteratorSpec]
    bicycle: Bicycle

    @property
    def alpha_len(self) -> int:
        return self.c * len(self.alpha) if self.alpha is not None else 0

    @property
    def beta_len(self) -> int:
        return self.b + len(self.bicycle.connecting_path) - 1

    @property
    def gamma_len(self) -> int:
        return self.c * len(self.gamma) if self.gamma is not None else 0

    def alpha_chunk(self, t: int) -> Perm:
        assert self.alpha is not None and 1 <= t <= self.c
        rs = len(self.alpha)
        hi = self.alpha_len - (t - 1) * rs
        return self.perm[hi - rs:hi]

    def beta_seg(self) -> Perm:
        return self.perm[self.alpha_len:self.alpha_len + self.beta_len]

    def gamma_chunk(self, t: int) -> Perm:
        assert self.gamma is not None and 1 <= t <= self.c
        rs = len(self.gamma)
        lo = self.alpha_len + self.beta_len + (t - 1) * rs
        return self.perm[lo:lo + rs]

    def to_json(self) -> dict:
        return {
            "perm": list(self.perm),
            "cycleLength": self.c,
            "segments": {
                "alpha": [list(self.alpha_chunk(t))
                          for t in range(self.c, 0, -1)] if self.alpha else [],
                "beta": list(self.beta_seg()),
                "gamma": [list(self.gamma_chunk(t))
                          for t in range(1, self.c + 1)] if self.gamma else [],
            },
        }


def _check_core(core: Core) -> None:
    assert len(core.perm) == core.alpha_len + core.beta_len + core.gamma_len
    for t in range(1, core.c + 1):
        if core.alpha is not None:
            assert canonical_perm(core.alpha_chunk(t)) == core.alpha.iterator
        if core.gamma is not None:
            assert canonical_perm(core.gamma_chunk(t)) == core.gamma.iterator
    beta_path = perm_to_path(canonical_perm(core.beta_seg()), core.b)
    assert beta_path == tuple(core.bicycle.connecting_path)


def enumerate_cores(bi: Bicycle, b: int) -> list[Core]:
    """All cores of the bicycle in lexicographic order."""
    alpha, gamma = compute_iterators(bi, b)
    c = max(len(alpha) if alpha else 0, len(gamma) if gamma else 0)
    path = _balanced_path(bi, alpha, gamma, c)
    cores = []
    for q in path_to_perm_set(path):
        core = Core(q, c, b, alpha, gamma, bi)
        _check_core(core)
        cores.append(core)
    return cores


def _append_gamma_copy(vals: list, spec: IteratorSpec) -> list:
    """Extend a balanced value sequence by one more terminal chunk.

    Each new entry is placed against the previous chunk by the two-copy
    juxtaposition and against everything older exactly as the previous
    chunk's entry at the same position sits, which pins its slot uniquely.
    """
    rs = len(spec)
    chi = spec.juxtaposition
    p0 = len(vals) - rs
    for k in range(1, rs + 1):
        below = 0
        for idx, e in enumerate(vals):
            if p0 <= idx < p0 + rs:
                if chi[idx - p0] < chi[rs + k - 1]:
                    below += 1
            elif idx >= p0 + rs:
                if chi[rs + (idx - p0 - rs)] < chi[rs + k - 1]:
                    below += 1
            elif e < vals[p0 + k - 1]:
                below += 1
        vals = _insert_shift(vals, below + 1)
    return vals


def _prepend_alpha_copy(vals: list, spec: IteratorSpec) -> list:
    """Extend a balanced value sequence by one more initial chunk in front."""
    rs = len(spec)
    chi = spec.juxtaposition
    placed = 0
    # position k of the new chunk is prepended after positions k+1..rs
    for k in range(rs, 0, -1):
        below = 0
        for idx, e in enumerate(vals):
            if idx < placed:
                if chi[k + idx] < chi[k - 1]:
                    below += 1
            elif idx < placed + rs:
                if chi[rs + (idx - placed)] < chi[k - 1]:
                    below += 1
            elif e < vals[placed + k - 1]:
                below += 1
        v = below + 1
        vals = [v] + [x if x < v else x + 1 for x in vals]
        placed += 1
    return vals


def balanced_permutation(core: Core, m: int) -> Perm:
    """The unique balanced permutation with this core and cycle length m."""
    if m < core.c:
        raise ValueError(f"cycle length {m} below the core length {core.c}")
    vals = list(core.perm)
    for _ in range(m - core.c):
        if core.gamma is not None:
            vals = _append_gamma_copy(vals, core.gamma)
        if core.alpha is not None:
            vals = _prepend_alpha_copy(vals, core.alpha)
    out = tuple(vals)
    expected = _balanced_path(core.bicycle, core.alpha, core.gamma, m)
    assert perm_to_path(out, core.b) == tuple(perm_str(p) for p in expected)
    return out


def _is_lone_cycle(bi: Bicycle) -> bool:
    one_side = (bi.initial_cycle is None) != (bi.terminal_cycle is None)
    return one_side and len(bi.connecting_path) == 1


def has_splittable_pair(
        bi: Bicycle, b: int) -> Optional[tuple[Core, PairClass, int]]:
    """First (core, shrinking pair, caught entry) witness, or None.

    The caught entry for a terminal-side pair comes from the alpha..beta
    prefix and must sit strictly inside the copy-1 gap; initial-side pairs
    mirror this with the beta..gamma suffix.  Cores are scanned in order
    and the rightmost qualifying entry of the first hit is reported.
    """
    if _is_lone_cycle(bi):
        # a lone cycle has no material outside its own winding
        return None
    for core in enumerate_cores(bi, b):
        if core.gamma is not None:
            g1 = core.gamma_chunk(1)
            prefix_end = core.alpha_len + core.beta_len
            for pc in classify_pairs(core.gamma):
                if pc.kind != "shrinking":
                    continue
                lo = g1[pc.low_position - 1] if pc.low_position else None
                hi = g1[pc.high_position - 1] if pc.high_position else None
                best = None
                for q in range(prefix_end):
                    p = core.perm[q]
                    if (lo is None or p > lo) and (hi is None or p < hi):
                        best = p
                if best is not None:
                    return core, pc, best
        if core.alpha is not None:
            a1 = core.alpha_chunk(1)
            for pc in classify_pairs(core.alpha):
                if pc.kind != "shrinking":
                    continue
                lo = a1[pc.low_position - 1] if pc.low_position else None
                hi = a1[pc.high_position - 1] if pc.high_position else None
                best = None
                for q in range(core.alpha_len, len(core.perm)):
                    p = core.perm[q]
                    if (lo is None or p > lo) and (hi is None or p < hi):
                        best = p
                if best is not None:
                    return core, pc, best
    return None


def reverse_bicycle(bi: Bicycle) -> Bicycle:
    """The bicycle read backwards: reversed vertices, reversed edges.

    Swaps the roles of the two cycles, so an initial-side construction can
    run as a terminal-side one on the reversed class.
    """
    def rv(vid: str) -> str:
        return perm_str(tuple(reversed(perm_from_str(vid))))

    def rev_cycle(cyc):
        return (rv(cyc[0]),) + tuple(rv(c) for c in reversed(cyc[1:]))

    return Bicycle(
        initial_cycle=rev_cycle(bi.terminal_cycle)
        if bi.terminal_cycle is not None else None,
        connecting_path=tuple(rv(c) for c in reversed(bi.connecting_path)),
        terminal_cycle=rev_cycle(bi.initial_cycle)
        if bi.initial_cycle is not None else None,
    )


def _loop_antichain(core: Core, pc: PairClass, p: int, n: int) -> list[Perm]:
    # r = 1: the loop winding grows one entry per turn, so elements may
    # stop at consecutive lengths instead of whole-chunk strides.
    spec = core.gamma
    pos_p = core.perm.index(p)
    delta_len = core.alpha_len + core.beta_len - pos_p
    start_len = max(delta_len, core.b + 1)
    vals = list(core.perm)
    while len(vals) < pos_p + start_len + n - 1:
        vals = _append_gamma_copy(vals, spec)
    out = []
    for w in range(n):
        raw = vals[pos_p:pos_p + start_len + w]
        anchor = raw[-1]
        if pc.high_value is None:
            # gap (top, inf): slip the new head just under the climbing entry
            head = 2 * anchor - 1
        else:
            assert pc.low_value is None
            head = 2 * anchor + 1
        elem = canonical_perm([head] + [2 * v for v in raw[1:]])
        assert perm_to_path(elem, core.b) == perm_to_path(
            canonical_perm(raw), core.b)
        out.append(elem)
    return out


def _terminal_antichain(core: Core, pc: PairClass, p: int, n: int) -> list[Perm]:
    spec = core.gamma
    assert spec is not None and pc.side == "terminal"
    rs = len(spec)
    if spec.r == 1:
        return _loop_antichain(core, pc, p, n)
    pos_p = core.perm.index(p)
    base = core.alpha_len + core.beta_len
    assert pos_p < base
    vals = list(core.perm)
    for _ in range(max(0, n + 1 - core.c)):
        vals = _append_gamma_copy(vals, spec)
    out = []
    for m in range(2, n + 2):
        raw = vals[pos_p:base + m * rs]
        if pc.high_value is not None:
            # insert just above the m-th copy's high entry; the previous
            # copy's high entry bounds it from above
            anchor = vals[base + (m - 1) * rs + pc.high_position - 1]
            head = 2 * anchor + 1
        else:
            anchor = vals[base + (m - 1) * rs + pc.low_position - 1]
            head = 2 * anchor - 1
        elem = canonical_perm([head] + [2 * v for v in raw[1:]])
        assert perm_to_path(elem, core.b) == perm_to_path(
            canonical_perm(raw), core.b)
        out.append(elem)
    return out


def antichain_from_splittable(
        bi: Bicycle, witness: tuple[Core, PairClass, int], n: int) -> list[Perm]:
    """First n elements of the antichain grown from a splittable pair.

    The caught entry is removed and re-inserted ever deeper between
    consecutive copies of the shrinking gap; a factor embedding between
    two such elements would have to align their heads, which the gap
    forbids.  Output is re-validated pairwise before returning.
    """
    core, pc, p = witness
    if pc.side == "terminal":
        elems = _terminal_antichain(core, pc, p, n)
    else:
        rbi = reverse_bicycle(bi)
        target = tuple(reversed(core.perm))
        rcore = next(c for c in enumerate_cores(rbi, core.b)
                     if c.perm == target)
        rpc = next(q for q in classify_pairs(rcore.gamma)
                   if (q.low_value, q.high_value) == (pc.low_value,
                                                      pc.high_value))
        assert rpc.kind == "shrinking"
        elems = [tuple(reversed(e))
                 for e in _terminal_antichain(rcore, rpc, p, n)]
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            assert not perm_factor_leq(elems[i], elems[j])
            assert not perm_factor_leq(elems[j], elems[i])
    return elems
