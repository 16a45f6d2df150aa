import json
import pytest

import combspec


def p3():
    return combspec.Graph(3, [(1, 2), (2, 3)])


def test_graph_roundtrip():
    g = combspec.Graph.parse("3 2\n1 2\n2 3\n")
    assert g == p3()
    assert g.graph6 == "Bg"
    assert combspec.Graph.parse("Bg") == g
    assert g.is_connected()
    assert len(combspec.connected_graphs(4)) == 6


def test_checks_match_oracles():
    dom = combspec.dominating(p3(), 1, workers=1)
    assert dom["holds"] and dom["witness"]["set"] == [2]
    assert combspec.oracle("domination", p3(), 1)["witness"] == [2]
    assert combspec.edge_roman_at_most(p3(), 2)["witness"]["labels"] == [
        {"u": 1, "v": 2, "label": 2},
        {"u": 2, "v": 3, "label": 0},
    ]
    assert not combspec.antimagic(combspec.complete_graph(2))["holds"]
    assert combspec.hamiltonian_number(combspec.cycle_graph(5)) == 5
    assert combspec.hamiltonian_spectrum(combspec.cycle_graph(3), p3()) == [4]


def test_family_sizes():
    assert combspec.edge_deleted_closure_size(3) == (7, 3)
    assert combspec.coloring_count(combspec.complete_graph(3), 2) == 8


def test_errors_carry_codes():
    with pytest.raises(combspec.CombspecError) as info:
        combspec.one_two_three(combspec.complete_graph(2))
    assert info.value.code == "precondition"
    with pytest.raises(combspec.CombspecError) as info:
        combspec.Graph.parse("3 1\n1 4\n")
    assert info.value.code == "parse"


def test_verify_reports():
    report = combspec.verify("domination", max_n=4, workers=1)
    assert report["ok"] and report["disagreements"] == 0
    json.dumps(report)
    assert combspec.verify_identity("R1", 3, 5)["ok"]
