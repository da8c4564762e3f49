"""QAPLIB plumbing: format parsing, graph adaptation, benchmark rows.

The shipped data/qaplib suite doubles as a fixture: every instance has a
verified best-known score (brute force or provable construction), so any
finite phi below 1 would expose a scoring bug.
"""
import math
from pathlib import Path

import numpy as np
import pytest

from gasm import (
    FLAG_NO_BEST,
    QapInstance,
    QapRow,
    instance_to_graphs,
    load_instance,
    load_suite,
    parse_instance,
    parse_solution,
    phi_distributions,
    qap_cost,
    run_qaplib,
    serialize_instance,
)
from gasm.qaplib import _permutation_array
from gasm.matching import Matching

SUITE_DIR = Path(__file__).resolve().parent.parent / "data" / "qaplib"


# ---------------------------------------------------------------------------
# parsing


def test_parse_instance_two_by_two():
    inst = parse_instance("2 0 1 1 0 0 2 2 0", name="toy")
    assert inst.n == 2
    assert np.array_equal(inst.a, [[0, 1], [1, 0]])
    assert np.array_equal(inst.b, [[0, 2], [2, 0]])
    assert inst.name == "toy"
    assert inst.best_known is None


def test_parse_instance_minimal():
    inst = parse_instance("1 5 7")
    assert inst.n == 1
    assert inst.a[0, 0] == 5 and inst.b[0, 0] == 7


def test_parse_instance_ignores_line_breaks():
    text = "2\n\n0 1\n1 0\n\n0 2\n2 0\n"
    inst = parse_instance(text)
    assert np.array_equal(inst.b, [[0, 2], [2, 0]])


@pytest.mark.parametrize("text", [
    "",
    "2 0 1 1 0 0 2 2",          # truncated
    "2 0 1 1 0 0 2 2 0 9",      # trailing token
    "2 0 x 1 0 0 2 2 0",        # non-numeric
    "0",                        # degenerate size
    "2.5 0 1 1 0 0 2 2 0",      # fractional size
])
def test_parse_instance_rejects_garbage(text):
    with pytest.raises(ValueError):
        parse_instance(text)


def test_parse_solution_basic():
    score, perm = parse_solution("2 4\n2 1")
    assert score == 4.0
    assert perm.mapping == (1, 0)


def test_parse_solution_zero_score():
    score, perm = parse_solution("1 0\n1")
    assert score == 0.0
    assert perm.mapping == (0,)


@pytest.mark.parametrize("text", [
    "2 4\n1 1",        # repeated assignment
    "2 4\n1 3",        # out of range
    "2 4\n1",          # short
    "2 4\n1 2 3",      # long
    "2",               # score missing
])
def test_parse_solution_rejects_garbage(text):
    with pytest.raises(ValueError):
        parse_solution(text)


def test_serialize_round_trip():
    rng = np.random.default_rng(13)
    for _ in range(30):
        n = int(rng.integers(1, 11))
        inst = QapInstance(name="rt", n=n,
                           a=rng.integers(0, 50, (n, n)).astype(float),
                           b=rng.integers(0, 50, (n, n)).astype(float))
        text = serialize_instance(inst)
        back = parse_instance(text)
        assert back.n == n
        assert np.array_equal(back.a, inst.a)
        assert np.array_equal(back.b, inst.b)


def test_serialize_integer_formatting():
    inst = QapInstance(name="fmt", n=2,
                       a=np.array([[0.0, 3.0], [1.0, 0.0]]),
                       b=np.array([[0.0, 2.5], [2.0, 0.0]]))
    text = serialize_instance(inst)
    assert "3" in text.split() and "3.0" not in text.split()
    assert "2.5" in text.split()


# ---------------------------------------------------------------------------
# graph adaptation


def test_instance_to_graphs_single_edge():
    inst = parse_instance("2 0 1 0 0 0 0 0 0")
    g_a, g_b = instance_to_graphs(inst)
    assert g_a.directed and g_a.edges == ((0, 1),)
    assert g_a.edge_attributes[0].values == (1.0,)
    assert g_b.edges == () and g_b.edge_attributes[0].values == ()


def test_instance_to_graphs_dense_with_loops():
    n = 3
    inst = QapInstance(name="dense", n=n,
                       a=np.ones((n, n)), b=np.full((n, n), 2.0))
    g_a, g_b = instance_to_graphs(inst)
    assert g_a.m == n * n and g_b.m == n * n
    assert g_a.loop_count == n
    assert set(g_b.edge_attributes[0].values) == {2.0}


def test_instance_to_graphs_row_major_weights():
    inst = parse_instance("2 0 3 7 0 0 0 0 0")
    g_a, _ = instance_to_graphs(inst)
    assert g_a.edges == ((0, 1), (1, 0))
    assert g_a.edge_attributes[0].values == (3.0, 7.0)


# ---------------------------------------------------------------------------
# files


def test_load_instance_with_solution(tmp_path):
    (tmp_path / "toy.dat").write_text("2 0 1 1 0 0 2 2 0")
    (tmp_path / "toy.sln").write_text("2 4\n2 1")
    inst = load_instance(tmp_path / "toy.dat")
    assert inst.name == "toy"
    assert inst.best_known.score == 4.0
    assert inst.best_known.permutation.mapping == (1, 0)


def test_load_instance_without_solution(tmp_path):
    (tmp_path / "toy.dat").write_text("1 5 7")
    assert load_instance(tmp_path / "toy.dat").best_known is None


def test_load_instance_solution_size_mismatch(tmp_path):
    (tmp_path / "toy.dat").write_text("2 0 1 1 0 0 2 2 0")
    (tmp_path / "toy.sln").write_text("3 4\n1 2 3")
    with pytest.raises(ValueError):
        load_instance(tmp_path / "toy.dat")


def test_load_suite_shipped_fixtures():
    instances, warnings = load_suite([SUITE_DIR])
    assert warnings == []
    assert len(instances) == 9
    assert all(inst.best_known is not None for inst in instances)
    assert all(inst.n <= 32 for inst in instances)


def test_load_suite_max_n_filter():
    instances, _ = load_suite([SUITE_DIR], max_n=9)
    assert instances and all(inst.n <= 9 for inst in instances)


def test_load_suite_collects_warnings(tmp_path):
    (tmp_path / "bad.dat").write_text("2 0 1")
    (tmp_path / "good.dat").write_text("1 5 7")
    instances, warnings = load_suite([tmp_path])
    assert [inst.name for inst in instances] == ["good"]
    assert len(warnings) == 1 and "bad.dat" in warnings[0]


def test_load_suite_accepts_single_file(tmp_path):
    (tmp_path / "solo.dat").write_text("1 5 7")
    instances, warnings = load_suite([tmp_path / "solo.dat"])
    assert [inst.name for inst in instances] == ["solo"] and not warnings


# ---------------------------------------------------------------------------
# benchmark rows


def test_permutation_array_completes_partial_matchings():
    m = Matching(((0, 2), (2, 1)), 4, 4)
    p = _permutation_array(m, 4)
    assert p[0] == 2 and p[2] == 1
    assert sorted(p) == [0, 1, 2, 3]


def test_run_qaplib_row_grid_and_determinism():
    instances, _ = load_suite([SUITE_DIR], max_n=9)
    rows = run_qaplib(instances, seeds=(0, 1))
    assert len(rows) == len(instances) * 3 * 2
    again = run_qaplib(instances, seeds=(0, 1))
    assert rows == again


def test_run_qaplib_phi_never_below_one_on_verified_instances():
    # every shipped best-known is exact, so phi < 1 would be a scoring bug
    instances, _ = load_suite([SUITE_DIR])
    rows = run_qaplib(instances, seeds=(0,))
    assert all(row.phi is not None and row.phi >= 1.0 for row in rows)
    assert all(row.flag == "" for row in rows)


def test_run_qaplib_cost_is_trace_objective():
    instances, _ = load_suite([SUITE_DIR], max_n=6)
    rows = run_qaplib(instances, algorithms=("2opt",), seeds=(3,))
    for row, inst in zip(rows, instances):
        assert row.instance == inst.name
        # cost must be reachable: some permutation of the instance attains it
        assert row.cost >= inst.best_known.score


def test_run_qaplib_zero_best_scores_one():
    instances, _ = load_suite([SUITE_DIR])
    zero_rows = [r for r in run_qaplib(instances, seeds=(0,))
                 if r.instance == "zero12"]
    assert len(zero_rows) == 3
    assert all(r.phi == 1.0 and r.cost == 0.0 for r in zero_rows)


def test_run_qaplib_flags_missing_best(tmp_path):
    (tmp_path / "toy.dat").write_text("2 0 1 1 0 0 2 2 0")
    instances, _ = load_suite([tmp_path])
    rows = run_qaplib(instances, algorithms=("2opt",), seeds=(0,))
    assert rows[0].phi is None and rows[0].flag == FLAG_NO_BEST
    assert phi_distributions(rows) == {}


def test_run_qaplib_rejects_unknown_algorithm():
    inst = parse_instance("1 5 7")
    with pytest.raises(ValueError):
        run_qaplib([inst], algorithms=("simplex",))


def test_phi_distributions_sorted_per_algorithm():
    rows = [
        QapRow("i1", 4, "gasm", 0, 12.0, 10.0, 1.2),
        QapRow("i2", 4, "gasm", 0, 10.0, 10.0, 1.0),
        QapRow("i1", 4, "2opt", 0, 15.0, 10.0, 1.5),
        QapRow("i3", 4, "gasm", 0, 0.0, None, None, FLAG_NO_BEST),
    ]
    assert phi_distributions(rows) == {"gasm": [1.0, 1.2], "2opt": [1.5]}
