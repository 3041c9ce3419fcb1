import numpy as np
import pytest

from uhspath.core import BudgetError, kmer_encode
from uhspath.kmerset import KmerSet, hits
from uhspath.paths import (
    ACYCLIC,
    CYCLIC,
    is_decycling,
    is_uhs,
    longest_remaining_path,
    string_length_for_walk,
    verify_witness,
)


def brute_longest(kset):
    """Exhaustive DFS oracle: (has_cycle, longest simple path in vertices)."""
    sigma, n = kset.sigma, kset.n
    alive = [v for v in range(n) if not kset.mask[v]]
    succ = {v: [s for a in range(sigma) if not kset.mask[s := (v * sigma + a) % n]] for v in alive}
    has_cycle = False
    best = 0

    def dfs(v, visited, depth):
        nonlocal has_cycle, best
        best = max(best, depth)
        for s in succ[v]:
            if s in visited:
                has_cycle = True
            else:
                visited.add(s)
                dfs(s, visited, depth + 1)
                visited.remove(s)

    for v in alive:
        dfs(v, {v}, 1)
    return has_cycle, best


def brute_has_cycle(kset):
    sigma, n = kset.sigma, kset.n
    color = {}

    def dfs(v):
        color[v] = 1
        for a in range(sigma):
            s = (v * sigma + a) % n
            if kset.mask[s]:
                continue
            if color.get(s) == 1:
                return True
            if s not in color and dfs(s):
                return True
        color[v] = 2
        return False

    return any(dfs(v) for v in range(n) if not kset.mask[v] and v not in color)


class TestAgainstBruteForce:
    @pytest.mark.parametrize("w", [2, 3, 4])
    def test_random_sets(self, w):
        rng = np.random.default_rng(7 + w)
        for _ in range(400):
            mask = rng.random(2**w) < rng.uniform(0.2, 0.9)
            kset = KmerSet(2, w, mask)
            report = longest_remaining_path(kset)
            cyc = brute_has_cycle(kset)
            assert (report.kind == CYCLIC) == cyc
            assert verify_witness(kset, report)
            if report.kind == ACYCLIC:
                _, best = brute_longest(kset)
                assert report.longest_vertices == best

    def test_full_and_empty(self):
        assert longest_remaining_path(KmerSet.full(2, 4)).longest_vertices == 0
        assert longest_remaining_path(KmerSet.empty(2, 4)).kind == CYCLIC

    def test_self_loop_detected(self):
        # 0^w survives => self loop
        kset = KmerSet(2, 3, ~KmerSet.from_codes(2, 3, [0]).mask)
        report = longest_remaining_path(kset)
        assert report.kind == CYCLIC
        assert [k.code for k in report.cycle_witness] == [0]


class TestDeterminism:
    def test_repeat_runs_identical(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            kset = KmerSet(2, 4, rng.random(16) < 0.6)
            r1 = longest_remaining_path(kset)
            r2 = longest_remaining_path(kset)
            assert [k.code for k in r1.witness] == [k.code for k in r2.witness]
            assert [k.code for k in r1.cycle_witness] == [k.code for k in r2.cycle_witness]

    def test_witness_starts_at_least_optimal_code(self):
        rng = np.random.default_rng(6)
        for _ in range(100):
            kset = KmerSet(2, 3, rng.random(8) < 0.6)
            report = longest_remaining_path(kset)
            if report.kind != ACYCLIC or report.longest_vertices == 0:
                continue
            starts = [
                v
                for v in range(8)
                if not kset.mask[v]
                and brute_longest_from(kset, v) == report.longest_vertices
            ]
            assert report.witness[0].code == min(starts)


def brute_longest_from(kset, start):
    sigma, n = kset.sigma, kset.n
    best = 0

    def dfs(v, visited, depth):
        nonlocal best
        best = max(best, depth)
        for a in range(sigma):
            s = (v * sigma + a) % n
            if not kset.mask[s] and s not in visited:
                visited.add(s)
                dfs(s, visited, depth + 1)
                visited.remove(s)

    dfs(start, {start}, 1)
    return best


class TestMonotonicity:
    def test_adding_members_never_hurts(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            mask = rng.random(16) < 0.5
            a = KmerSet(2, 4, mask)
            grown = mask.copy()
            grown[rng.integers(0, 16, size=3)] = True
            b = KmerSet(2, 4, grown)
            ra, rb = longest_remaining_path(a), longest_remaining_path(b)
            if ra.kind == ACYCLIC:
                assert rb.kind == ACYCLIC
                assert rb.longest_vertices <= ra.longest_vertices


class TestUhsSemantics:
    def test_is_uhs_and_string_conversion(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            mask = rng.random(16) < 0.6
            kset = KmerSet(2, 4, mask)
            report = longest_remaining_path(kset)
            if report.kind != ACYCLIC:
                continue
            l = report.longest_vertices + 1
            assert is_uhs(kset, l)
            assert not is_uhs(kset, report.longest_vertices) or report.longest_vertices == 0
            # every string long enough for a walk of l vertices is hit
            L = string_length_for_walk(l, 4)
            for _ in range(50):
                s = "".join(rng.choice(["0", "1"], size=L))
                assert hits(kset, s)

    def test_is_decycling(self):
        assert is_decycling(KmerSet.from_texts(2, 2, ["00", "10", "11"]))
        assert not is_decycling(KmerSet.from_texts(2, 2, ["00"]))

    def test_budget(self):
        with pytest.raises(BudgetError):
            longest_remaining_path(KmerSet.empty(2, 10), budget=100)
