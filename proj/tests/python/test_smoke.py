import json
from fractions import Fraction

import pytest

import knutson


def test_sequences():
    assert knutson.seq_L_Sn(200) == [1, 6, 10, 21, 36, 66, 105, 120, 136, 190]
    assert knutson.seq_L_An(60)[:6] == [1, 2, 5, 6, 8, 10]
    assert knutson.seq_zero_columns_sn(12) == [1, 5, 6, 8, 9, 10, 12]


def test_number_theory():
    assert knutson.is_loeschian(7)
    assert not knutson.is_loeschian(2)
    assert knutson.loeschian_witness(13) == (3, 1)
    assert knutson.sigma3(7) == 2
    assert knutson.quadform_xxyy(6) == knutson.quadform_xxyy(6, brute_force=True)


def test_partitions_and_cores():
    assert knutson.partition_count(100) == 190569292
    assert len(knutson.partitions(6)) == 11
    assert knutson.conjugate([3, 1]) == [2, 1, 1]
    assert knutson.hook_degree([2, 1]) == 2
    assert knutson.count_t_cores(10, 3) == knutson.count_t_cores(10, 3, brute_force=True) == 2
    core = knutson.find_t_core(10, 3)
    assert core is not None and sum(core) == 10 and knutson.is_t_core(core, 3)


def test_group_table():
    g = knutson.Group("an", 5)
    assert g.order == 60
    assert sorted(g.degrees) == [1, 3, 3, 4, 5]
    assert g.is_orthogonal()
    assert "sqrt(5)" in g.value("(3,1,1)+", 3) or "sqrt(5)" in g.value("(3,1,1)+", 4)
    assert g.lower_bound() == Fraction(1)
    table = json.loads(g.to_json())
    assert table["order"] == 60


def test_knutson_indices():
    g = knutson.Group("sl2", 5)
    assert g.knutson_index_group() == 2
    assert max(g.knutson_indices()) == 2
    summary = g.summary()
    assert summary["K"] == 2
    assert summary["k_prime"] == Fraction(1)
    assert summary["obstruction_confirmed"] is True
    tensor = g.tensor(0, "psi")
    assert tensor[g.characters.index("psi")] == 1


def test_rho_search():
    r = knutson.Group("sl2", 2).min_rho_search()
    assert r["k_prime"] == Fraction(1, 3)
    assert r["degree"] == 2


def test_lattice():
    u, d, v = knutson.smith_normal_form([[2, 4], [6, 8]])
    assert [d[0][0], d[1][1]] == [2, 4]
    assert knutson.min_multiplier([[2, 0], [0, 3]], [1, 1]) == 6
    assert knutson.solve_integer([[1, 0], [0, 2]], [3, 4]) == [3, 2]
    assert knutson.solve_integer([[1, 0], [0, 2]], [3, 3]) is None


def test_suites_and_cli():
    ok, checks = knutson.run_suite("sequences")
    assert ok and len(checks) == 3
    code, out, err = knutson.run_cli(["cores", "10", "3"])
    assert code == 0 and "count: 2" in out
    code, _, _ = knutson.run_cli(["seq", "a363701", "--limit", "31"])
    assert code == 3


def test_errors():
    with pytest.raises(ValueError):
        knutson.Group("sl2", 6)
    with pytest.raises(knutson.ResourceCapError):
        knutson.Group("sl2", 19)
    with pytest.raises(ValueError):
        knutson.Group("sn", 4).knutson_index("(9)")
