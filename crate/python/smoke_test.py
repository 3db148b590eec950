"""Smoke test for the grundylab Python module.

Build and install first:  pip install --no-build-isolation -e crates/py
Run:  python python/smoke_test.py
"""

import json

import grundylab as gl


def main():
    p4 = gl.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert p4.n == 4 and len(p4) == 4
    assert gl.Graph.from_graph6(p4.graph6()) == p4

    value, order = gl.grundy_number(p4)
    assert value == 3
    assert max(gl.greedy_color(p4, order)) == 3
    assert gl.grundy_oracle(p4) == 3

    petersen = gl.Graph.named("petersen")
    assert gl.grundy_number(petersen)[0] == 4
    assert gl.partial_grundy_number(gl.Graph.named("K3,3"))[0] == 2
    assert gl.cubic_grundy(petersen) == 4
    assert gl.twin_grundy_upper_bound(gl.Graph.named("K3,3")) == 2

    assert gl.has_induced_minimal_atom(gl.Graph.named("C5"), 3)
    assert not gl.has_induced_minimal_atom(gl.Graph.named("C4"), 3)
    assert len(gl.minimal_atoms(3)) == 2

    g = gl.g_rki(4, 3, [2, 2], 2)
    assert g.regularity() == 4 and gl.grundy_number(g)[0] == 3

    double_k23, regular = gl.build_script(
        "base K2,3\nunion K2,3\nedge 2 7\nedge 3 8\nedge 4 9\n", "f3"
    )
    assert regular and gl.cubic_grundy(double_k23) == 3

    assert len(gl.regular_graphs(3, 10)) == 19

    try:
        gl.grundy_number(gl.regular_graphs(3, 10)[-1], budget=1)
    except gl.BudgetExceeded:
        pass
    else:
        raise AssertionError("expected BudgetExceeded")

    lines = gl.verify("C4FREE-R", 8, r=3).splitlines()
    summary = json.loads(lines[-1])
    assert summary["kind"] == "summary" and summary["verdict"] == "pass"

    print("grundylab smoke test passed")


if __name__ == "__main__":
    main()
