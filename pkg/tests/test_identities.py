import json

import pytest

from jmkit.characters import GuardError, chi
from jmkit.identities import (
    IDENTITIES,
    analyze_pair_cancellation,
    remove_add_paths,
    summarize,
    sweep,
    verify_eq2,
    verify_eq4_coefficient,
    verify_eq8,
    verify_eq9,
    verify_t1,
    verify_t2,
    verify_t3,
)
from jmkit.partitions import corner_cells, partitions_of, remove_cell
from jmkit.symfunc import lhs_eq3


def sides(rec):
    return rec.lhs, rec.rhs, rec.ok


def test_t1_examples():
    assert sides(verify_t1((2,), (1,))) == (1, 1, True)
    assert sides(verify_t1((1, 1), (1,))) == (-1, -1, True)
    for lam in partitions_of(6):
        rec = verify_t1(lam, (3, 1, 1))
        assert rec.lhs == 2 * chi(lam, (3, 2, 1)) + 3 * chi(lam, (4, 1, 1))
        assert rec.ok
    with pytest.raises(ValueError):
        verify_t1((2,), (2,))


def test_eq2_examples():
    assert sides(verify_eq2((2,), (1,))) == (2, 2, True)
    assert sides(verify_eq2((1, 1), (1,))) == (0, 0, True)


def test_t2_examples():
    assert sides(verify_t2((3,), (1,))) == (1, 1, True)
    assert sides(verify_t2((2, 1), (1,))) == (-1, -1, True)
    assert sides(verify_t2((1, 1, 1), (1,))) == (1, 1, True)


def test_t3_examples():
    assert sides(verify_t3((1,), (2,))) == (2, 2, True)
    assert sides(verify_t3((2,), (3,))) == (3, 3, True)
    for lam in partitions_of(5):
        assert sides(verify_t3(lam, (1,) * 6)) == (0, 0, True)


def test_eq8_examples():
    rec = verify_eq8((1,), (1, 1))
    assert sides(rec) == (2, 2, True) and "fixed-point" in rec.note
    rec = verify_eq8((1,), (2,))
    assert sides(rec) == (2, 2, True) and rec.note is None


def test_eq9_examples():
    assert sides(verify_eq9((1,))) == (0, 0, True)
    assert sides(verify_eq9((2, 1))) == (0, 0, True)
    assert sides(verify_eq9(())) == (0, 0, True)


def test_eq4_examples():
    rec = verify_eq4_coefficient((3, 3, 2), (3, 2, 2))
    assert sides(rec) == (1, 1, True)
    paths = remove_add_paths((3, 3, 2), (3, 2, 2))
    assert [(p.j, p.nu, p.height_removed, p.height_added, p.sign) for p in paths] == [
        (1, (2, 2, 2), 1, 0, -1), (2, (3, 1, 1), 1, 1, 1), (3, (3, 1), 1, 1, 1)]
    assert sides(verify_eq4_coefficient((3, 3, 2), (4, 3))) == (0, 0, True)
    assert sides(verify_eq4_coefficient((2,), (1,))) == (1, 1, True)


@pytest.mark.parametrize("n", range(1, 11))
def test_eq4_agrees_with_operator(n):
    for lam in partitions_of(n):
        full = lhs_eq3(lam)
        for zeta in partitions_of(n - 1):
            assert verify_eq4_coefficient(lam, zeta).lhs == full.coefficient(zeta)


def test_figure_two():
    report = analyze_pair_cancellation((4, 3, 2, 2), (6, 3, 1))
    assert sorted((w.d, w.a, w.r) for w in report.ways) == [(2, 1, 0), (2, 1, 2)]
    assert report.cancels


def test_case_table_cancellation():
    report = analyze_pair_cancellation((3, 3, 2), (4, 3))
    assert [(w.j, w.nu, w.net_sign) for w in report.ways] == [(1, (3, 3), 1), (4, (2, 1), -1)]


def test_small_cancellation():
    report = analyze_pair_cancellation((2, 2), (3,))
    assert [(w.j, w.nu, w.net_sign) for w in report.ways] == [(1, (2,), 1), (2, (1,), -1)]


def test_cancellation_preconditions():
    with pytest.raises(ValueError):
        analyze_pair_cancellation((3, 3, 2), (3, 2, 2))
    with pytest.raises(ValueError):
        analyze_pair_cancellation((2,), (1, 1))
    assert analyze_pair_cancellation((3, 2), (2, 1, 1)).ways == ()


@pytest.mark.parametrize("n", range(1, 11))
def test_case_dichotomy(n):
    for lam in partitions_of(n):
        corner_of = {remove_cell(lam, x): x for x in corner_cells(lam)}
        for zeta in partitions_of(n - 1):
            paths = remove_add_paths(lam, zeta)
            if zeta in corner_of:
                x = corner_of[zeta]
                # col - 1 ways keep the sign, row - 1 ways flip it
                assert sum(p.sign > 0 for p in paths) == x.col - 1
                assert sum(p.sign < 0 for p in paths) == x.row - 1
            elif paths:
                assert analyze_pair_cancellation(lam, zeta).cancels


@pytest.mark.parametrize("n", range(1, 10))
def test_full_sweep(n):
    records = sweep(n)
    assert records and all(r.ok for r in records)


def test_sweep_counts_and_order():
    records = sweep(9, ["T1"])
    assert len(records) == 30 * 22
    assert sweep(2, ["EQ9"])[0].inputs == {"lambda": (1,)}
    assert len(sweep(2, ["EQ9"])) == 1


def test_sweep_failures_first(monkeypatch):
    import jmkit.identities as ids

    def broken(lam):
        rec = ids.verify_eq9(lam)
        rec.ok = lam != (2,)
        return rec

    monkeypatch.setitem(ids._CHECKS, "EQ9", broken)
    records = sweep(3, ["EQ9"])
    assert [r.inputs["lambda"] for r in records] == [(2,), (1, 1)]
    summary = summarize(records, stable=True)
    assert summary["failed"] == 1 and summary["first_failure"]["lambda"] == [2]


def test_sweep_guard_and_unknown():
    with pytest.raises(GuardError):
        sweep(20, ["EQ9"])
    with pytest.raises(ValueError):
        sweep(3, ["NOPE"])


def test_parallel_sweep_matches_sequential():
    a = [r.to_json(stable=True) for r in sweep(5, IDENTITIES, jobs=1)]
    b = [r.to_json(stable=True) for r in sweep(5, IDENTITIES, jobs=3)]
    assert a == b


def test_record_json():
    rec = verify_t1((3, 2, 1), (3, 1, 1))
    data = json.loads(rec.dumps())
    assert data["identity"] == "T1" and data["n"] == 6
    assert data["lambda"] == [3, 2, 1] and data["type"] == [3, 1, 1]
    assert data["lhs"] == data["rhs"] and data["ok"] is True
    assert "elapsed_ms" in data and "elapsed_ms" not in rec.to_json(stable=True)


def test_filters():
    records = sweep(6, ["T1"], filters={"lambda": (3, 2, 1), "type": (3, 1, 1)})
    assert len(records) == 1
