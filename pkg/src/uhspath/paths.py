"""Longest remaining path and decycling checks on the implicit de Bruijn graph.

The graph on sigma^w nodes is peeled with an iterative, wave-based Kahn
topological sort (no recursion, vectorized over numpy arrays).  When the
surviving subgraph is acyclic, a DP over the reversed wave order yields the
exact maximum path length in vertices together with one witness path.
Path lengths are always counted in vertices (w-mers); a string of L symbols
corresponds to a walk of L - w + 1 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import DEFAULT_NODE_BUDGET, Kmer, check_budget
from .kmerset import KmerSet

ACYCLIC = "ACYCLIC"
CYCLIC = "CYCLIC"


@dataclass(frozen=True)
class PathReport:
    """Result of longest-remaining-path analysis after removing a set."""

    kind: str
    longest_vertices: int = 0
    witness: list[Kmer] = field(default_factory=list)
    cycle_witness: list[Kmer] = field(default_factory=list)


def _peel(survives: np.ndarray, sigma: int, n: int):
    """Kahn peel restricted to surviving nodes.

    Returns (codes, waves, done): surviving codes, the frontier waves in
    topological order (each wave sorted ascending), and the done mask.
    Nodes left not-done lie on a cycle or on a path feeding one.
    """
    codes = np.flatnonzero(survives)
    indeg = np.zeros(n, dtype=np.int32)
    for a in range(sigma):
        sv = (codes * sigma + a) % n
        sv = sv[survives[sv]]
        if sv.size:
            indeg += np.bincount(sv, minlength=n).astype(np.int32)
    done = np.zeros(n, dtype=bool)
    frontier = codes[indeg[codes] == 0]
    waves: list[np.ndarray] = []
    while frontier.size:
        done[frontier] = True
        waves.append(frontier)
        parts = []
        for a in range(sigma):
            sv = (frontier * sigma + a) % n
            parts.append(sv[survives[sv]])
        allsucc = np.concatenate(parts) if parts else np.empty(0, dtype=np.int64)
        if allsucc.size == 0:
            break
        if allsucc.size > n >> 3:
            indeg -= np.bincount(allsucc, minlength=n).astype(np.int32)
            frontier = np.flatnonzero((indeg == 0) & survives & ~done)
        else:
            np.subtract.at(indeg, allsucc, 1)
            cand = np.unique(allsucc)
            frontier = cand[(indeg[cand] == 0) & ~done[cand]]
    return codes, waves, done


def _cycle_witness(survives: np.ndarray, done: np.ndarray, sigma: int, n: int) -> list[int]:
    """Extract one cycle from the leftover (non-peelable) nodes.

    Every leftover node has a leftover predecessor, so walking predecessors
    from the least leftover node must revisit a node; the revisited segment,
    reversed, is a forward cycle.
    """
    leftover = survives & ~done
    start = int(np.flatnonzero(leftover)[0])
    shift = n // sigma
    seen = {start: 0}
    walk = [start]
    v = start
    while True:
        base = v // sigma
        for b in range(sigma):
            u = base + b * shift
            if leftover[u]:
                break
        else:  # pragma: no cover - impossible by the Kahn invariant
            raise AssertionError("leftover node without leftover predecessor")
        if u in seen:
            cyc = walk[seen[u] :]
            cyc.reverse()
            return cyc
        seen[u] = len(walk)
        walk.append(u)
        v = u


def longest_remaining_path(kset: KmerSet, budget: int = DEFAULT_NODE_BUDGET) -> PathReport:
    """Exact longest path (in vertices) avoiding the set, with one witness.

    Ties are broken deterministically: the witness starts at the least code
    achieving the maximum and follows the least successor symbol among
    optimal continuations.  Returns a CYCLIC report with a witness cycle
    when the complement subgraph is not acyclic.
    """
    sigma, w = kset.sigma, kset.w
    n = kset.n
    check_budget(n, budget, "longest remaining path")
    survives = ~kset.mask
    codes, waves, done = _peel(survives, sigma, n)

    if int(done.sum()) != codes.size:
        cyc = _cycle_witness(survives, done, sigma, n)
        return PathReport(CYCLIC, cycle_witness=[Kmer(c, sigma, w) for c in cyc])

    if codes.size == 0:
        return PathReport(ACYCLIC, longest_vertices=0)

    best = np.zeros(n, dtype=np.int32)
    choice = np.full(n, -1, dtype=np.int8)
    for wave in reversed(waves):
        bv = np.ones(wave.size, dtype=np.int32)
        ch = np.full(wave.size, -1, dtype=np.int8)
        for a in range(sigma):
            sv = (wave * sigma + a) % n
            cand = np.where(survives[sv], best[sv] + 1, 0).astype(np.int32)
            upd = cand > bv
            bv[upd] = cand[upd]
            ch[upd] = a
        best[wave] = bv
        choice[wave] = ch

    longest = int(best[codes].max())
    start = int(codes[best[codes] == longest][0])
    path = [start]
    v = start
    while choice[v] >= 0:
        v = (v * sigma + int(choice[v])) % n
        path.append(v)
    assert len(path) == longest
    return PathReport(
        ACYCLIC, longest_vertices=longest, witness=[Kmer(c, sigma, w) for c in path]
    )


def is_decycling(kset: KmerSet, budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """True iff the subgraph induced by the complement of the set is acyclic."""
    n = kset.n
    check_budget(n, budget, "decycling check")
    survives = ~kset.mask
    codes, _, done = _peel(survives, kset.sigma, n)
    return int(done.sum()) == codes.size


def is_uhs(kset: KmerSet, l: int, budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """True iff the set hits every walk of l vertices (decycling + short paths)."""
    report = longest_remaining_path(kset, budget=budget)
    return report.kind == ACYCLIC and report.longest_vertices < l


def string_length_for_walk(l: int, w: int) -> int:
    """Symbols covered by a walk of l vertices: L = l + w - 1."""
    return l + w - 1


def verify_witness(kset: KmerSet, report: PathReport) -> bool:
    """Re-verify a PathReport witness: edges valid, vertices outside the set."""
    sigma, w = kset.sigma, kset.w
    n = kset.n

    def edge(u: Kmer, v: Kmer) -> bool:
        return (u.code * sigma) % n <= v.code < (u.code * sigma) % n + sigma

    if report.kind == ACYCLIC:
        path = report.witness
        if len(path) != report.longest_vertices:
            return False
        if any(x in kset for x in path):
            return False
        return all(edge(u, v) for u, v in zip(path, path[1:]))
    cyc = report.cycle_witness
    if not cyc or any(x in kset for x in cyc):
        return False
    return all(edge(u, v) for u, v in zip(cyc, cyc[1:] + cyc[:1]))
