from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from enumeration import enumerate_all
from xyzfam.errors import MalformedRow
from xyzfam.search import (
    SearchConfig,
    TableRow,
    farey,
    positive_fractions,
    read_table,
    search_many,
    search_solutions,
    shipped_table,
    solve_z,
    verify_table,
)
from xyzfam.exact import height

F = Fraction


def test_solve_z_examples():
    assert solve_z(1, F(3, 2), F(4, 3)) == F(1, 6)
    assert solve_z(3, 1, 1) == 1
    assert solve_z(1, 1, 1) is None


def test_farey():
    assert list(farey(3)) == [(1, 3), (1, 2), (2, 3), (1, 1)]
    fr = positive_fractions(4)
    values = [F(p, q) for p, q in fr]
    assert values == sorted(values)
    assert len(set(values)) == len(values)
    assert all(height(v) <= 4 for v in values)


class TestSearch:
    def test_examples(self):
        assert TableRow(3, F(1), F(1), F(1)) in search_solutions(SearchConfig(3, 10))
        assert TableRow(48, F(2), F(2), F(2)) in search_solutions(SearchConfig(48, 10))
        assert search_solutions(SearchConfig(1, 1)) == []
        assert search_solutions(SearchConfig(0, 5)) == []

    def test_bad_height(self):
        with pytest.raises(ValueError):
            SearchConfig(1, 0)

    def test_exact_path_agrees(self):
        # force the arbitrary-precision path and compare
        from xyzfam import search as mod

        cfg = SearchConfig(7, 15)
        fast = search_solutions(cfg)
        saved = mod._INT64_SAFE
        mod._INT64_SAFE = 0
        try:
            slow = search_solutions(cfg)
        finally:
            mod._INT64_SAFE = saved
        assert fast == slow

    def test_parallel_matches_serial(self):
        serial = list(search_many(range(1, 7), 12, jobs=1))
        parallel = list(search_many(range(1, 7), 12, jobs=3))
        assert serial == parallel
        assert [a for a, _ in parallel] == list(range(1, 7))

    def test_against_independent_enumeration(self):
        h = 8
        truth = enumerate_all(6, h)
        for a in range(1, 7):
            found = {(r.x, r.y, r.z) for r in search_solutions(SearchConfig(a, h)) if height(r.z) <= h}
            assert found == truth[a]


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 40), st.integers(1, 12))
def test_search_properties(a, h):
    rows = search_solutions(SearchConfig(a, h))
    for row in rows:
        assert row.is_solution()
        assert row.x >= row.y >= row.z > 0
        assert height(row.x) <= h and height(row.y) <= h
    assert len(set(rows)) == len(rows)
    # monotone in the height bound
    assert set(rows) <= set(search_solutions(SearchConfig(a, h + 3)))


class TestTable:
    def test_shipped(self):
        rows = shipped_table()
        assert len(rows) == 99
        assert [r.a for r in rows] == list(range(1, 100))
        assert verify_table(rows).ok

    def test_specific_rows(self):
        rows = {r.a: r for r in shipped_table()}
        assert rows[97] == TableRow(97, F(10, 3), F(49, 20), F(45, 28))
        assert rows[2] == TableRow(2, F(5, 2), F(5, 6), F(4, 15))
        assert rows[1] == TableRow(1, F(3, 2), F(4, 3), F(1, 6))

    def test_failures(self):
        report = verify_table([TableRow(1, F(1), F(1), F(1))])
        assert not report.ok
        assert "3 != 1" in list(report.lines())[1]
        assert verify_table([TableRow(2, F(5, 2), F(5, 6), F(4, 15))]).ok
        assert not verify_table([TableRow(3, F(-1), F(-1), F(-1))]).ok

    def test_malformed(self):
        with pytest.raises(MalformedRow):
            read_table("a,x,y,z\n1,2,3\n")
        with pytest.raises(MalformedRow):
            read_table("a,x,y,z\n1,2,3,x\n")
        with pytest.raises(MalformedRow):
            read_table("a,x,y,z\n1/2,1,1,1\n")

    def test_read_with_line_numbers(self):
        rows = read_table("a,x,y,z\n3,1,1,1\n\n48,2,2,2\n")
        assert [n for n, _ in rows] == [2, 4]
