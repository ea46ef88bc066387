"""Brute-force baselines for containment properties.

Everything here works by direct enumeration and filtering, kept apart from
the incremental machinery so tests can cross-check decisions and witnesses
against first principles.  Only the canonicalization and comparison
primitives are shared with the production modules.  Scale guards fail
loudly: a silently weakened baseline is worse than none.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .digraph import Digraph
from .permcore import (
    Perm,
    perm_factor_leq,
    perm_from_obj,
    perm_str,
    perm_to_obj,
    perm_to_path,
)
from .words import factor_leq as word_factor_leq
from .words import word_to_obj

_MAX_PERM_LEN = 10
_MAX_WORD_COUNT = 2_000_000


@dataclass(frozen=True)
class OracleReport:
    """Outcome of one brute-force validation run."""

    checked: str
    scale: str
    verdict: str  # confirmed | refuted | inconclusive
    counterexample: object = None

    def to_json(self) -> dict:
        out = {"checked": self.checked, "scale": self.scale,
               "verdict": self.verdict}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def enumerate_av_perms(basis, max_len: int) -> list[Perm]:
    """All permutations of length 1..max_len with no basis element as a
    consecutive pattern, by filtering whole symmetric groups."""
    if max_len > _MAX_PERM_LEN:
        raise ValueError(
            f"scale guard: max_len {max_len} exceeds {_MAX_PERM_LEN}")
    forbidden = [perm_from_obj(p) for p in basis]
    out: list[Perm] = []
    for n in range(1, max_len + 1):
        for cand in itertools.permutations(range(1, n + 1)):
            if not any(perm_factor_leq(f, cand) for f in forbidden):
                out.append(cand)
    return out


def enumerate_av_words(alphabet, basis, max_len: int) -> list[tuple]:
    """All words of length 0..max_len over the alphabet with no forbidden
    factor, by filtering the full language level by level."""
    syms = tuple(alphabet)
    total = sum(len(syms) ** n for n in range(max_len + 1))
    if total > _MAX_WORD_COUNT:
        raise ValueError(f"scale guard: {total} candidate words")
    forbidden = [_as_word(w) for w in basis]
    out = []
    for n in range(max_len + 1):
        for cand in itertools.product(syms, repeat=n):
            if not any(word_factor_leq(f, cand) for f in forbidden):
                out.append(cand)
    return out


def brute_sigma(path, m: int) -> list[Perm]:
    """Reference realization set: filter every permutation of the target
    length by window-path equality."""
    ids = tuple(x if isinstance(x, str) else perm_str(tuple(x)) for x in path)
    n = len(ids) + m - 1
    if n > _MAX_PERM_LEN:
        raise ValueError(f"scale guard: target length {n} exceeds "
                         f"{_MAX_PERM_LEN}")
    return [cand for cand in itertools.permutations(range(1, n + 1))
            if perm_to_path(cand, m) == ids]


def brute_sigma_table(m: int, n: int) -> dict:
    """Bucket every length-n permutation by its width-m window path."""
    if n > _MAX_PERM_LEN:
        raise ValueError(f"scale guard: length {n} exceeds {_MAX_PERM_LEN}")
    table: dict = {}
    for cand in itertools.permutations(range(1, n + 1)):
        table.setdefault(perm_to_path(cand, m), []).append(cand)
    return table


def _as_word(x) -> tuple:
    return tuple(x)


def _norm_item(x):
    if isinstance(x, str):
        return tuple(x)
    t = tuple(x)
    if t and all(isinstance(v, int) and not isinstance(v, bool) for v in t):
        return t
    return t


def _order_for(items):
    """Pick the containment order by element type: rank tuples compare as
    permutations, everything else as words."""
    saw_perm = saw_word = False
    for t in items:
        if t and all(isinstance(v, int) and not isinstance(v, bool)
                     for v in t):
            saw_perm = True
        else:
            saw_word = True
    if saw_perm and saw_word:
        raise ValueError("cannot mix permutations and words in one check")
    if saw_perm:
        return perm_factor_leq, perm_to_obj
    return word_factor_leq, word_to_obj


def bounded_jep(elements, universe) -> OracleReport:
    """Search the universe for a common super-element of every pair.

    Refutation is exact only when the universe provably bounds joins, for
    example the whole of a finite class; otherwise it bounds the scale at
    which any join must appear.
    """
    elems = [_norm_item(x) for x in elements]
    univ = [_norm_item(x) for x in universe]
    checked = "joint embedding within the supplied universe"
    scale = f"{len(elems)} elements, {len(univ)} candidates"
    if not elems:
        return OracleReport(checked, scale, "confirmed")
    leq, to_obj = _order_for(elems + univ)
    for i in range(len(elems)):
        for j in range(i, len(elems)):
            a, b = elems[i], elems[j]
            if not any(leq(a, w) and leq(b, w) for w in univ):
                return OracleReport(checked, scale, "refuted",
                                    [to_obj(a), to_obj(b)])
    return OracleReport(checked, scale, "confirmed")


def validate_antichain(items) -> OracleReport:
    """Confirmed iff the items are pairwise incomparable."""
    elems = [_norm_item(x) for x in items]
    checked = "pairwise incomparability"
    scale = f"{len(elems)} elements"
    if len(elems) <= 1:
        return OracleReport(checked, scale, "confirmed")
    leq, to_obj = _order_for(elems)
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            a, b = elems[i], elems[j]
            if leq(a, b) or leq(b, a):
                return OracleReport(checked, scale, "refuted",
                                    [to_obj(a), to_obj(b)])
    return OracleReport(checked, scale, "confirmed")


def _kmp_fail(pat) -> list[int]:
    fail = [0] * len(pat)
    k = 0
    for i in range(1, len(pat)):
        while k and pat[i] != pat[k]:
            k = fail[k - 1]
        if pat[i] == pat[k]:
            k += 1
        fail[i] = k
    return fail


def _kmp_step(pat, fail, state: int, ch) -> int:
    if state == len(pat):
        state = fail[state - 1]
    while state and pat[state] != ch:
        state = fail[state - 1]
    return state + 1 if pat[state] == ch else 0


def no_common_superpath(g: Digraph, p, q) -> bool:
    """Exact check that no walk of g contains both given vertex sequences
    as consecutive runs, by breadth-first search over the product of the
    two run-matching automata with the graph."""
    p = tuple(p)
    q = tuple(q)
    if not p or not q:
        raise ValueError("paths must be nonempty")
    fp, fq = _kmp_fail(p), _kmp_fail(q)
    stack = []
    seen = set()
    for v in g.vertices:
        i = _kmp_step(p, fp, 0, v)
        j = _kmp_step(q, fq, 0, v)
        st = (v, i, j, i == len(p), j == len(q))
        if st not in seen:
            seen.add(st)
            stack.append(st)
    while stack:
        v, i, j, dp, dq = stack.pop()
        if dp and dq:
            return False
        for w in g.succ[v]:
            i2 = _kmp_step(p, fp, i, w)
            j2 = _kmp_step(q, fq, j, w)
            st = (w, i2, j2, dp or i2 == len(p), dq or j2 == len(q))
            if st not in seen:
                seen.add(st)
                stack.append(st)
    return True
