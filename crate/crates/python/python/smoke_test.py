"""Smoke test for the strongcolor extension module."""

from fractions import Fraction

import strongcolor as sc


def main():
    c5 = sc.Graph.cycle(5)
    assert (c5.vertex_count, c5.edge_count, c5.girth()) == (5, 5, 5)
    assert sc.strong_chromatic_index(c5)[0] == 5
    assert sc.Graph.path(4).girth() is None
    assert sorted(c5.conflicts(0)) == [1, 2, 3, 4]

    density, witness = sc.mad(sc.Graph.petersen())
    assert density == Fraction(3) and len(witness) == 10
    assert sc.mad(sc.Graph(3, [(0, 1)]))[0] == Fraction(1)

    inst = sc.generate("sparse-mad3", 30, 4, seed=1, list_size=13)
    g = inst.graph
    assert sc.mad(g)[0] < 3
    r = sc.solve_mad3(g, inst.lists)
    assert r.certified and r.list_bound == 3 * g.max_degree + 1 and r.bound_violations == 0
    assert sc.verify_strong(g, r.coloring) == []
    assert all(c in lst for c, lst in zip(r.coloring, inst.lists))

    bad = list(r.coloring)
    e, f = 0, g.conflicts(0)[0]
    bad[f] = bad[e]
    assert sc.verify_strong(g, bad)

    planar = sc.generate("planar-girth7", 40, 4, seed=3)
    assert planar.planar and planar.graph.girth() >= 7
    r = sc.solve_girth7(planar.graph, cap=4)
    assert r.certified and r.list_bound == 12
    assert sc.verify_strong(planar.graph, r.coloring) == []

    back = sc.parse_instance(planar.to_text())
    assert back.to_text() == planar.to_text()
    assert sorted(back.face_degrees()) == sorted(planar.face_degrees())

    ledger = sc.audit(planar, "girth7")
    assert ledger["identity"] == Fraction(-14) and ledger["conserved"]
    assert ledger["total_final"] == Fraction(-14)
    ledger = sc.audit(inst, "mad3")
    assert ledger["conserved"] and ledger["negative"]

    k4 = sc.Graph.complete(4)
    assert sc.list_strong_colorable(k4, [[0, 1, 2, 3, 4]] * 6) is None
    assert sc.list_strong_colorable(k4, [list(range(6))] * 6) is not None

    for call in (
        lambda: sc.Graph(2, [(0, 0)]),
        lambda: sc.parse_instance("e 0 1\n"),
        lambda: sc.generate("no-such-family", 10, 4, 0),
        lambda: sc.solve_girth7(c5, cap=3),
    ):
        try:
            call()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")

    print("smoke test ok")


if __name__ == "__main__":
    main()
