import json
import os
from itertools import combinations

import pytest

import sbrokit as sb

DATA = os.environ.get(
    "SBROKIT_DATA_DIR",
    os.path.join(os.path.dirname(__file__), "..", "..", "data"),
)


def test_uniform_rank():
    m = sb.uniform(2, 4)
    assert m.size == 4
    assert m.rank() == 2
    assert m.rank([]) == 0
    assert m.rank({0, 3}) == 2
    assert len(m.bases()) == 6
    assert len(m.circuits()) == 4


def test_json_round_trip():
    doc = {"op": "contract", "set": [5],
           "of": {"op": "delete", "set": [11],
                  "of": {"type": "catalog", "name": "s_5_6_12"}}}
    m = sb.Matroid.from_json(json.dumps(doc))
    t = sb.catalog("t")
    for k in range(4):
        for x in combinations(range(10), k):
            assert m.rank(x) == t.rank(x)
    again = sb.Matroid.from_json(m.to_json())
    assert again.to_json() == m.to_json()


def test_input_error_has_location():
    with pytest.raises(sb.InputError, match="at /set/0"):
        sb.Matroid.from_json(json.dumps(
            {"op": "delete", "set": [99],
             "of": {"type": "uniform", "r": 1, "n": 2}}))
    with pytest.raises(ValueError):
        sb.uniform(2, 4).rank([7])


def test_covering_numbers():
    k4 = sb.catalog("m_k4")
    mp = sb.catalog("k4_matching_partition")
    assert sb.covering_number(k4) == 2
    assert sb.covering_number(mp) == 2
    res = sb.covering_number_intersection(k4, mp)
    assert res["verdict"] == "found"
    assert res["value"] == 3
    for part in res["parts"]:
        assert k4.is_independent(part) and mp.is_independent(part)


def test_exchange_witness_round_trip():
    x10 = sb.catalog("x10")
    a, b = [0, 1, 2, 4, 8], [3, 5, 6, 7, 9]
    assert sb.find_exchange_witness(x10, a, b, "sbro")["verdict"] == "none"
    res = sb.find_exchange_witness(x10, a, b, "bo")
    assert res["verdict"] == "found"
    assert sb.verify_witness(x10, a, b, res["witness"])


def test_class_checks():
    assert sb.check_class(sb.catalog("m_k4"), "sbro")["verdict"] == "fails"
    assert sb.check_class(sb.uniform(2, 4), "sbo")["verdict"] == "holds"
    assert sb.check_class(sb.uniform(2, 4), "pplus")["verdict"] == "holds"


def test_cover_path_and_ordering():
    k4 = sb.graphic(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    a, b = [0, 3, 5], [1, 2, 4]
    path = sb.construct_pp_path(k4, a, b)
    assert sorted(path) == list(range(6))
    edges = list(zip(path, path[1:]))
    assert sb.covers_pair(k4, a, b, edges)
    assert sb.has_shape(a, b, edges, [], "pplus")
    order = sb.weak_cyclic_ordering(k4, a, b, path)
    assert order["ok"]
    res = sb.find_cover_graph(k4, a, b, "r")
    w = res["witness"]
    assert sb.covers_pair(k4, a, b, w["edges"], w["doubled"])


def test_fundamental_covers():
    m = sb.catalog("p8")
    bases = m.bases()
    a, b = bases[0], bases[-1]
    fundamental = []
    for x, y in ((a, b), (b, a)):
        for e in set(y) - set(x):
            (c,) = m.circuits(within=sorted(set(x) | {e}))
            fundamental.append(set(c))
    for cover in (sb.fundamental_cover_tree, sb.fundamental_cover_2regular):
        g = cover(m, a, b)
        edges = g["edges"] + g["doubled"]
        for c in fundamental:
            assert any(u in c and v in c for u, v in edges)


def test_minor_and_iso():
    assert sb.has_minor(sb.catalog("x10"), sb.catalog("m_k4"))["verdict"] == "none"
    k4 = sb.graphic(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert sb.are_isomorphic(k4, sb.catalog("m_k4")) is not None
    assert sb.are_isomorphic(k4, sb.uniform(3, 6)) is None


def test_decompose_and_colorings():
    u = sb.uniform(2, 4)
    d = sb.decompose_common_sbro(u, u)
    assert d["k"] == 2
    k4 = sb.catalog("m_k4")
    m2 = sb.partition([[0, 3], [1, 4], [2, 5]])
    parts = sb.color_cover_plus_partition(k4, m2, 3)
    assert sorted(e for p in parts for e in p) == list(range(6))
    assert all(m2.is_independent(p) for p in parts)
    assert len(sb.greedy_color(k4, m2)) <= 3


def test_cli_from_python():
    code, out, err = sb.run_cli(
        ["beta2", os.path.join(DATA, "j.json"),
         os.path.join(DATA, "j_partition.json")])
    assert code == 0, err
    assert json.loads(out)["value"] == 3
    code, _, _ = sb.run_cli(["nonsense"])
    assert code == 64
