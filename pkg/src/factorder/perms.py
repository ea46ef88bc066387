"""Decision procedures for permutation classes under the factor order.

Atomicity reduces to connectivity of the window graph plus an extension
check for the members shorter than the window size.  Well quasi-order
reduces to three obstacles: an in-out cycle, an ambiguous cycle (which
lifts to an in-out cycle in a higher dimension), and a splittable pair of
a decomposition bicycle.  Negative answers carry permutation witnesses
rebuilt from the graph evidence, validated before they are returned.
"""

from __future__ import annotations

from typing import Optional

from .balance import antichain_from_splittable, has_splittable_pair
from .decision import Decision
from .digraph import (
    Digraph,
    bicycle_decomposition,
    is_acyclic,
    is_strongly_connected,
    path_poset_atomic,
    path_poset_wqo,
)
from .permcore import (
    PermClassSpec,
    enumerate_class_perms,
    has_ambiguous_cycle,
    has_ambiguous_path,
    is_path_ambiguous,
    perm_factor_graph,
    perm_factor_leq,
    perm_str,
    sigma_min_rep,
)

EMPTY_CLASS = Decision(
    value=None,
    degenerate="degenerate: empty class",
    explanation="the basis contains a permutation of length at most one, "
                "so the class is empty",
)


def decide_perm_atomic(spec: PermClassSpec, witness: bool = True) -> Decision:
    if spec.empty_class:
        return EMPTY_CLASS
    degenerate = "degenerate: empty basis" if spec.empty_basis else None
    fg = perm_factor_graph(spec, spec.b)
    g = fg.graph
    if is_acyclic(g):
        return _finite_jep(spec, g, witness, degenerate)
    graph_dec = path_poset_atomic(g, witness=witness)
    if graph_dec.value is False:
        w = None
        if witness:
            p1, p2 = graph_dec.witness["path_pair"]
            w = {"perm_pair": [perm_str(sigma_min_rep(p1)),
                               perm_str(sigma_min_rep(p2))]}
        return Decision(
            value=False,
            explanation="factor graph is neither strongly connected nor a "
                        "bicycle",
            witness=w,
            degenerate=degenerate,
        )
    if not is_strongly_connected(g):
        amb = has_ambiguous_path(fg)
        if amb is not None:
            w = None
            if witness:
                evidence = is_path_ambiguous(amb)
                assert evidence is not None
                w = {"perm_pair": [perm_str(q) for q in evidence]}
            return Decision(
                value=False,
                explanation="an ambiguous path realizes two permutations "
                            "that have no join in the class",
                witness=w,
                degenerate=degenerate,
            )
    longs = sorted((fg.vertex_perms[v] for v in g.vertices),
                   key=spec.sort_key)
    for u in enumerate_class_perms(spec, spec.b - 1):
        if not any(perm_factor_leq(u, v) for v in longs):
            w = None
            if witness:
                w = {"short_perm": perm_str(u),
                     "pair": [perm_str(u), perm_str(longs[0])]}
            return Decision(
                value=False,
                explanation="short class permutation does not extend to any "
                            f"class permutation of length {spec.b}",
                witness=w,
                degenerate=degenerate,
            )
    return Decision(
        value=True,
        explanation="factor graph is strongly connected or an unambiguous "
                    "bicycle and every short permutation extends",
        degenerate=degenerate,
    )


def _finite_jep(spec: PermClassSpec, g: Digraph, witness: bool,
                degenerate: Optional[str]) -> Decision:
    # acyclic factor graph: the longest member has fewer than b + |V| entries
    bound = spec.b + len(g.vertices)
    perms = enumerate_class_perms(spec, bound)
    assert all(len(p) < bound for p in perms)
    for i, u in enumerate(perms):
        for v in perms[i:]:
            if not any(perm_factor_leq(u, z) and perm_factor_leq(v, z)
                       for z in perms):
                w = {"perm_pair": [perm_str(u), perm_str(v)]} if witness \
                    else None
                return Decision(
                    value=False,
                    explanation="finite class with a pair of permutations "
                                "having no join",
                    witness=w,
                    degenerate=degenerate,
                )
    return Decision(
        value=True,
        explanation="finite class in which every pair of permutations has "
                    "a join",
        degenerate=degenerate,
    )


def _checked_antichain(paths) -> list:
    chain = [sigma_min_rep(p) for p in paths]
    for i, a in enumerate(chain):
        for b in chain[i + 1:]:
            assert not perm_factor_leq(a, b) and not perm_factor_leq(b, a)
    return chain


def decide_perm_wqo(spec: PermClassSpec, witness: bool = True,
                    witness_len: int = 10) -> Decision:
    if spec.empty_class:
        return EMPTY_CLASS
    degenerate = "degenerate: empty basis" if spec.empty_basis else None
    fg = perm_factor_graph(spec, spec.b)
    g = fg.graph
    bikes = bicycle_decomposition(g)
    if bikes is None:
        dec = path_poset_wqo(g, witness=witness, witness_len=witness_len)
        assert dec.value is False
        w = None
        if witness:
            chain = _checked_antichain(dec.witness["antichain"])
            w = {"in_out_cycle": list(dec.witness["in_out_cycle"]),
                 "antichain": [perm_str(a) for a in chain]}
        return Decision(
            value=False,
            explanation="factor graph has an in-out cycle, which pumps an "
                        "infinite antichain",
            witness=w,
            degenerate=degenerate,
        )
    amb = has_ambiguous_cycle(fg)
    if amb is not None:
        w = None
        if witness:
            # realizations of the cycle windings form the vertices of a
            # higher-dimensional factor graph with an in-out cycle
            lifted = perm_factor_graph(spec, spec.b + len(amb) - 1)
            dec = path_poset_wqo(lifted.graph, witness=True,
                                 witness_len=witness_len)
            assert dec.value is False
            chain = _checked_antichain(dec.witness["antichain"])
            w = {"ambiguous_cycle": list(amb),
                 "antichain": [perm_str(a) for a in chain]}
        return Decision(
            value=False,
            explanation="an ambiguous cycle lifts to an in-out cycle in a "
                        "higher-dimensional factor graph",
            witness=w,
            degenerate=degenerate,
        )
    for bi in bikes:
        found = has_splittable_pair(bi, spec.b)
        if found is None:
            continue
        core, pc, entry = found
        w = None
        if witness:
            chain = antichain_from_splittable(bi, found, witness_len)
            w = {"splittable": {"bicycle": bi.to_json(),
                                "core": list(core.perm),
                                "pair": pc.to_json(),
                                "entry": entry},
                 "antichain": [perm_str(a) for a in chain]}
        return Decision(
            value=False,
            explanation="a splittable pair of a decomposition bicycle grows "
                        "an infinite antichain",
            witness=w,
            degenerate=degenerate,
        )
    return Decision(
        value=True,
        explanation="bicycle decomposition with no ambiguous cycles and no "
                    "splittable pairs",
        degenerate=degenerate,
    )
