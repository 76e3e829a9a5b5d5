from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from sccore import partitions as pt
from sccore.config import Limits
from sccore.errors import InvalidHooks, NotSelfConjugate, OutOfDiagram, ResourceLimit
from sccore.series import sc_coeffs


def partitions_strategy(max_n=30):
    return st.integers(0, max_n).flatmap(
        lambda n: st.sampled_from(pt.partitions_of(n))
    )


@st.composite
def sc_hooks(draw):
    """Strictly decreasing positive odd integers, built from gap choices."""
    gaps = draw(st.lists(st.integers(1, 20), max_size=12))
    hooks, cur = [], -1
    for g in gaps:
        cur += 2 * g
        hooks.append(cur)
    return tuple(reversed(hooks))


class TestConjugate:
    def test_examples(self):
        assert pt.conjugate((4, 3, 1, 1)) == (4, 2, 2, 1)
        assert pt.conjugate(()) == ()
        assert pt.conjugate((3, 2, 1)) == (3, 2, 1)

    def test_involution_exhaustive_small(self):
        for n in range(13):
            for p in pt.partitions_of(n):
                assert pt.conjugate(pt.conjugate(p)) == p

    @given(partitions_strategy())
    def test_involution(self, p):
        assert pt.conjugate(pt.conjugate(p)) == p


class TestSelfConjugate:
    def test_examples(self):
        assert pt.is_self_conjugate((3, 3, 2))
        assert not pt.is_self_conjugate((2,))
        assert pt.is_self_conjugate(())

    def test_diagonal_hooks_examples(self):
        assert pt.diagonal_hooks((3, 2, 1)).hooks == (5, 1)
        assert pt.diagonal_hooks((4, 2, 1, 1)).hooks == (7, 1)
        assert pt.diagonal_hooks((1,)).hooks == (1,)

    def test_diagonal_hooks_rejects_non_sc(self):
        with pytest.raises(NotSelfConjugate):
            pt.diagonal_hooks((2,))

    def test_from_diagonal_hooks_examples(self):
        assert pt.from_diagonal_hooks((5, 1)) == (3, 2, 1)
        assert pt.from_diagonal_hooks((29, 15)) == (
            15, 9, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1,
        )
        assert pt.from_diagonal_hooks((1,)) == (1,)

    def test_invalid_hooks_rejected(self):
        with pytest.raises(InvalidHooks):
            pt.DiagonalHooks((4, 2))
        with pytest.raises(InvalidHooks):
            pt.DiagonalHooks((3, 3))
        with pytest.raises(InvalidHooks):
            pt.DiagonalHooks((1, 3))

    def test_round_trip_exhaustive(self):
        for n in range(51):
            for p in pt.enumerate_self_conjugate(n):
                dh = pt.diagonal_hooks(p)
                assert all(h % 2 == 1 for h in dh.hooks)
                assert len(set(dh.hooks)) == len(dh.hooks)
                assert sum(dh.hooks) == n
                assert pt.from_diagonal_hooks(dh) == p

    @given(sc_hooks())
    @settings(max_examples=300)
    def test_round_trip_random_hooks(self, hooks):
        p = pt.from_diagonal_hooks(hooks)
        assert pt.is_self_conjugate(p)
        assert pt.diagonal_hooks(p).hooks == hooks


class TestHooks:
    def test_examples(self):
        assert pt.hook_length((4, 2, 1, 1), 1, 2) == 4
        assert pt.hook_length((1,), 1, 1) == 1
        assert pt.hook_length((3, 3, 2), 1, 1) == 5

    def test_out_of_diagram(self):
        with pytest.raises(OutOfDiagram):
            pt.hook_length((2, 1), 1, 3)
        with pytest.raises(OutOfDiagram):
            pt.hook_length((2, 1), 3, 1)

    def test_grid_matches_pointwise(self):
        for n in range(11):
            for p in pt.partitions_of(n):
                grid = pt.hook_grid(p)
                for i in range(1, len(p) + 1):
                    for j in range(1, p[i - 1] + 1):
                        assert grid[i - 1][j - 1] == pt.hook_length(p, i, j)

    def test_diagonal_rule_and_off_diagonal_bound(self):
        # on the d x d corner h_ij = (d_i + d_j)/2; beyond it h_ij < d_i / 2
        for n in range(61):
            for p in pt.enumerate_self_conjugate(n):
                hooks = pt.diagonal_hooks(p).hooks
                d = len(hooks)
                grid = pt.hook_grid(p)
                for i in range(1, d + 1):
                    for j in range(1, p[i - 1] + 1):
                        if j <= d and j >= i:
                            assert grid[i - 1][j - 1] == (hooks[i - 1] + hooks[j - 1]) // 2
                        elif j > d:
                            assert 2 * grid[i - 1][j - 1] < hooks[i - 1]

    def test_no_hook_exceeds_half_n_except_first(self):
        for n in range(101):
            for p in pt.enumerate_self_conjugate(n):
                grid = pt.hook_grid(p)
                for i, row in enumerate(grid, start=1):
                    for j, h in enumerate(row, start=1):
                        if (i, j) != (1, 1):
                            assert 2 * h <= n


class TestTCore:
    def test_examples(self):
        assert pt.is_t_core((2, 1), 5)
        assert not pt.is_t_core((3, 3, 2), 4)
        assert pt.is_t_core((), 3)

    def test_matches_hook_multiset(self):
        for n in range(13):
            for p in pt.partitions_of(n):
                hooks = set(pt.hook_multiset(p))
                for t in range(1, 15):
                    assert pt.is_t_core(p, t) == (t not in hooks)


class TestEnumeration:
    def test_examples(self):
        assert pt.enumerate_self_conjugate(8) == [(3, 3, 2), (4, 2, 1, 1)]
        assert pt.enumerate_self_conjugate(2) == []
        assert pt.enumerate_self_conjugate_t_core(13, 6) == []

    def test_counts_match_series(self):
        sc = sc_coeffs(80).coeffs
        for n in range(81):
            assert len(pt.enumerate_self_conjugate(n)) == sc[n]

    def test_spot_large_count(self):
        assert len(pt.enumerate_self_conjugate(100)) == sc_coeffs(100)[100]

    def test_resource_limit(self):
        with pytest.raises(ResourceLimit):
            pt.enumerate_self_conjugate(10, Limits(oracle_cap=5))

    def test_all_outputs_are_sc_t_cores(self):
        for n in range(31):
            for t in (2, 5, 8):
                for p in pt.enumerate_self_conjugate_t_core(n, t):
                    assert pt.is_self_conjugate(p)
                    assert pt.is_t_core(p, t)


def _syt_count(p):
    """Independent oracle for the character degree: count standard Young
    tableaux by peeling corners down Young's lattice."""
    from functools import lru_cache

    @lru_cache(maxsize=None)
    def count(q):
        if sum(q) <= 1:
            return 1
        total = 0
        for i in range(len(q)):
            if q[i] > (q[i + 1] if i + 1 < len(q) else 0):
                child = list(q)
                child[i] -= 1
                if child[-1] == 0:
                    child.pop()
                total += count(tuple(child))
        return total

    return count(p)


class TestCharacterDegree:
    def test_examples(self):
        assert pt.character_degree((2, 1)) == 2
        assert pt.character_degree((2, 2)) == 2
        for n in (1, 4, 9):
            assert pt.character_degree((n,)) == 1

    def test_against_tableau_count(self):
        for n in range(11):
            for p in pt.partitions_of(n):
                assert pt.character_degree(p) == _syt_count(p)

    def test_invariant_under_conjugation(self):
        for n in range(15):
            for p in pt.partitions_of(n):
                assert pt.character_degree(p) == pt.character_degree(pt.conjugate(p))
