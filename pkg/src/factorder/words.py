"""Words under the factor (consecutive subword) order.

A downward closed set of words is described by the finite basis of its
minimal forbidden factors.  The length-b words of the set form the factor
graph, an induced subgraph of the b-dimensional de Bruijn graph, and the
questions of atomicity and well-quasi-ordering reduce to the structure of
that graph: atomic iff strongly connected or a bicycle (plus every short
word extending to length b), wqo iff no in-out cycle.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Optional, Sequence, Union

from factorder.decision import Decision
from factorder.digraph import (
    DiPath,
    Digraph,
    is_acyclic,
    path_poset_atomic,
    path_poset_wqo,
)

Word = tuple[str, ...]
WordObj = Union[str, list]


def factor_leq(u: Sequence[str], v: Sequence[str]) -> bool:
    """True iff u occurs in v as a block of consecutive letters."""
    n, m = len(u), len(v)
    if n > m:
        return False
    tu = tuple(u)
    return any(tuple(v[i : i + n]) == tu for i in range(m - n + 1))


def word_to_obj(w: Word) -> WordObj:
    if all(len(t) == 1 for t in w):
        return "".join(w)
    return list(w)


def parse_word(obj: WordObj, alphabet: Sequence[str]) -> Word:
    symbols = set(alphabet)
    if isinstance(obj, str):
        if not all(len(t) == 1 for t in alphabet):
            raise ValueError(
                f"word {obj!r} given as a string but the alphabet has multi-character symbols"
            )
        tokens = tuple(obj)
    elif isinstance(obj, (list, tuple)):
        tokens = tuple(obj)
    else:
        raise ValueError(f"word must be a string or a list of symbols, got {obj!r}")
    for t in tokens:
        if t not in symbols:
            raise ValueError(f"symbol {t!r} is not in the alphabet")
    return tokens


def _check_alphabet(alphabet: Sequence[str]) -> tuple[str, ...]:
    syms = tuple(alphabet)
    if not syms:
        raise ValueError("alphabet must be nonempty")
    seen = set()
    for s in syms:
        if not isinstance(s, str) or not s:
            raise ValueError(f"alphabet symbol must be a nonempty string, got {s!r}")
        if "," in s:
            raise ValueError(f"alphabet symbol {s!r} must not contain a comma")
        if s in seen:
            raise ValueError(f"duplicate alphabet symbol {s!r}")
        seen.add(s)
    return syms


def _word_id(w: Word, single_char: bool) -> str:
    return "".join(w) if single_char else ",".join(w)


def word_to_path(w: Sequence[str], m: int) -> DiPath:
    """Sliding length-m windows of w, as de Bruijn vertex identifiers."""
    if m < 1:
        raise ValueError("window length m must be >= 1")
    if len(w) < m:
        raise ValueError(f"word of length {len(w)} is shorter than m = {m}")
    tw = tuple(w)
    single = all(len(t) == 1 for t in tw)
    return tuple(_word_id(tw[i : i + m], single) for i in range(len(tw) - m + 1))


def path_to_word(p: Sequence[str], words: Optional[dict[str, Word]] = None) -> Word:
    """Overlap-concatenation of the path's vertex words, inverse to word_to_path."""
    if not p:
        raise ValueError("path must be nonempty")
    if words is not None:
        toks = [words[v] for v in p]
    else:
        toks = [tuple(v.split(",")) if "," in v else tuple(v) for v in p]
    m = len(toks[0])
    out = list(toks[0])
    for prev, cur in zip(toks, toks[1:]):
        if len(cur) != m or prev[1:] != cur[:-1]:
            raise ValueError(f"vertices {prev!r} -> {cur!r} do not overlap")
        out.append(cur[-1])
    return tuple(out)


def de_bruijn_graph(alphabet: Sequence[str], m: int) -> Digraph:
    syms = _check_alphabet(alphabet)
    if m < 1:
        raise ValueError("de Bruijn dimension must be >= 1")
    single = all(len(s) == 1 for s in syms)
    verts = [tuple(w) for w in product(syms, repeat=m)]
    ids = [_word_id(w, single) for w in verts]
    edges = []
    for w in verts:
        for s in syms:
            edges.append((_word_id(w, single), _word_id(w[1:] + (s,), single)))
    return Digraph(ids, edges)


class WordClassSpec:
    """Av(basis) over a fixed alphabet: the words avoiding every basis factor.

    The basis is normalized on construction: duplicates and any element that
    contains another element as a factor are dropped.  b is the maximum
    basis length after normalization, except b := 1 for an empty basis.
    """

    def __init__(self, alphabet: Sequence[str], basis: Iterable[Sequence[str]]):
        self.alphabet = _check_alphabet(alphabet)
        self.symbol_index = {s: i for i, s in enumerate(self.alphabet)}
        raw = []
        for w in basis:
            tw = tuple(w)
            for t in tw:
                if t not in self.symbol_index:
                    raise ValueError(f"basis symbol {t!r} is not in the alphabet")
            raw.append(tw)
        kept: list[Word] = []
        for w in sorted(set(raw), key=self.sort_key):
            if not any(factor_leq(v, w) for v in kept):
                kept.append(w)
        self.basis: tuple[Word, ...] = tuple(kept)
        self.b: int = max((len(w) for w in kept), default=1)
        self.single_char = all(len(s) == 1 for s in self.alphabet)
        self._basis_by_len: dict[int, set[Word]] = {}
        for w in kept:
            if len(w) >= 1:
                self._basis_by_len.setdefault(len(w), set()).add(w)

    def sort_key(self, w: Sequence[str]):
        return (len(w), tuple(self.symbol_index[t] for t in w))

    @property
    def empty_class(self) -> bool:
        # a basis containing the empty word normalizes to exactly that word
        return any(len(w) == 0 for w in self.basis)

    @property
    def empty_basis(self) -> bool:
        return not self.basis

    def word_id(self, w: Word) -> str:
        return _word_id(w, self.single_char)

    def _suffix_ok(self, w: Word) -> bool:
        # only windows ending at the last letter need checking on extension
        return all(
            w[-l:] not in ws for l, ws in self._basis_by_len.items() if l <= len(w)
        )

    def avoids(self, w: Sequence[str]) -> bool:
        if self.empty_class:
            return False
        return not any(factor_leq(v, w) for v in self.basis)


def enumerate_class_words(spec: WordClassSpec, max_len: int) -> list[Word]:
    """All class words of length <= max_len, shortest first, then lexicographic."""
    if spec.empty_class:
        return []
    out: list[Word] = [()]
    layer: list[Word] = [()]
    for _ in range(max_len):
        nxt = []
        for w in layer:
            for s in spec.alphabet:
                w2 = w + (s,)
                if spec._suffix_ok(w2):
                    nxt.append(w2)
        out.extend(nxt)
        layer = nxt
        if not layer:
            break
    return out


class WordFactorGraph:
    """Induced subgraph of the b-dimensional de Bruijn graph on C_b."""

    def __init__(self, dimension: int, graph: Digraph, vertex_words: dict[str, Word]):
        self.dimension = dimension
        self.graph = graph
        self.vertex_words = vertex_words

    def word_of(self, vertex_id: str) -> Word:
        return self.vertex_words[vertex_id]


def word_factor_graph(spec: WordClassSpec) -> WordFactorGraph:
    b = spec.b
    layer: list[Word] = [()]
    for _ in range(b):
        layer = [
            w + (s,) for w in layer for s in spec.alphabet if spec._suffix_ok(w + (s,))
        ]
    if spec.empty_class:
        layer = []
    words = {spec.word_id(w): w for w in layer}
    by_prefix: dict[Word, list[Word]] = {}
    for w in layer:
        by_prefix.setdefault(w[:-1], []).append(w)
    edges = []
    for w in layer:
        for v in by_prefix.get(w[1:], []):
            edges.append((spec.word_id(w), spec.word_id(v)))
    return WordFactorGraph(b, Digraph(sorted(words), edges), words)


def _obj_path_words(fg: WordFactorGraph, ids: Sequence[str]) -> WordObj:
    return word_to_obj(path_to_word(ids, fg.vertex_words))


def decide_word_atomic(spec: WordClassSpec, witness: bool = True) -> Decision:
    if spec.empty_class:
        return Decision(
            value=None,
            degenerate="degenerate: empty class",
            explanation="the basis contains the empty word, so the class is empty",
        )
    degenerate = "degenerate: empty basis" if spec.empty_basis else None
    fg = word_factor_graph(spec)
    g = fg.graph
    if is_acyclic(g):
        return _finite_jep(spec, g, witness, degenerate)
    graph_dec = path_poset_atomic(g, witness=witness)
    if graph_dec.value is False:
        w = None
        if witness:
            p1, p2 = graph_dec.witness["path_pair"]
            w = {"word_pair": [_obj_path_words(fg, p1), _obj_path_words(fg, p2)]}
        return Decision(
            value=False,
            explanation="factor graph is neither strongly connected nor a bicycle",
            witness=w,
            degenerate=degenerate,
        )
    long_words = [fg.vertex_words[v] for v in g.vertices]
    long_words.sort(key=spec.sort_key)
    for u in enumerate_class_words(spec, spec.b - 1):
        if not any(factor_leq(u, v) for v in long_words):
            w = None
            if witness:
                w = {
                    "short_word": word_to_obj(u),
                    "pair": [word_to_obj(u), word_to_obj(long_words[0])],
                }
            return Decision(
                value=False,
                explanation=f"short class word does not extend to any class word of length {spec.b}",
                witness=w,
                degenerate=degenerate,
            )
    return Decision(
        value=True,
        explanation="factor graph is strongly connected or a bicycle and every short word extends",
        degenerate=degenerate,
    )


def _finite_jep(
    spec: WordClassSpec, g: Digraph, witness: bool, degenerate: Optional[str]
) -> Decision:
    # acyclic factor graph: longest class word has fewer than b + |V| letters
    bound = spec.b + len(g.vertices)
    words = enumerate_class_words(spec, bound)
    assert all(len(w) < bound for w in words)
    for i, u in enumerate(words):
        for v in words[i:]:
            if not any(factor_leq(u, z) and factor_leq(v, z) for z in words):
                w = None
                if witness:
                    w = {"word_pair": [word_to_obj(u), word_to_obj(v)]}
                return Decision(
                    value=False,
                    explanation="finite class with a pair of words having no join",
                    witness=w,
                    degenerate=degenerate,
                )
    return Decision(
        value=True,
        explanation="finite class in which every pair of words has a join",
        degenerate=degenerate,
    )


def decide_word_wqo(
    spec: WordClassSpec, witness: bool = True, witness_len: int = 10
) -> Decision:
    if spec.empty_class:
        return Decision(
            value=None,
            degenerate="degenerate: empty class",
            explanation="the basis contains the empty word, so the class is empty",
        )
    degenerate = "degenerate: empty basis" if spec.empty_basis else None
    fg = word_factor_graph(spec)
    dec = path_poset_wqo(fg.graph, witness=witness, witness_len=witness_len)
    if dec.value is True:
        return Decision(
            value=True,
            explanation="factor graph has no in-out cycle",
            degenerate=degenerate,
        )
    w = None
    if witness:
        cyc = [word_to_obj(fg.vertex_words[v]) for v in dec.witness["in_out_cycle"]]
        chain = [path_to_word(p, fg.vertex_words) for p in dec.witness["antichain"]]
        for i, a in enumerate(chain):
            for b_ in chain[i + 1 :]:
                assert not factor_leq(a, b_) and not factor_leq(b_, a)
        w = {"in_out_cycle": cyc, "antichain": [word_to_obj(a) for a in chain]}
    return Decision(
        value=False,
        explanation="factor graph has an in-out cycle, which pumps an infinite antichain",
        witness=w,
        degenerate=degenerate,
    )
