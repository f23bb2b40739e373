import zres


CUSP = {
    "name": "cusp",
    "vertices": [
        {"id": "A1", "e": -3, "m": 2},
        {"id": "A2", "e": -1, "m": 6},
        {"id": "A3", "e": -2, "m": 3},
    ],
    "edges": [["A1", "A2"], ["A2", "A3"]],
    "arrows": [{"id": "St1", "attach": "A2", "m": 1}],
}


def test_validate_cusp():
    assert zres.validate(CUSP) == []


def test_validate_reports_broken_relation():
    bad = {
        "name": "bad",
        "vertices": [{"id": "A", "e": -1, "m": 3}],
        "edges": [],
        "arrows": [{"id": "St1", "attach": "A", "m": 1}],
    }
    violations = zres.validate(bad)
    assert any(v["rule"] == "relation" for v in violations)


def test_order_and_complex():
    assert zres.order_vertices(CUSP) == ["A1", "A2", "A3"]
    cx = zres.build_complex(CUSP)
    kinds = [s["kind"] for s in cx["surfaces"]]
    assert kinds.count("compact_tower_level") == 7
    assert kinds.count("noncompact_E") == 3
    assert cx["order"] == ["A1", "A2", "A3"]
    alt = zres.build_complex(CUSP, order=["A2", "A1", "A3"])
    assert alt["order"] == ["A2", "A1", "A3"]


def test_surface_graph_minimal_is_a2():
    sg = zres.surface_graph(CUSP, minimal=True)
    selfs = sorted(v["self_int"] for v in sg["vertices"])
    assert selfs == [-2, -2]
    assert len(sg["edges"]) == 1


def test_brieskorn_chain():
    g = zres.brieskorn_graph(2, 7)
    sg = zres.surface_graph(g, minimal=True)
    assert sorted(v["self_int"] for v in sg["vertices"]) == [-2] * 6
    assert len(sg["edges"]) == 5


def test_fiber_chain_matches_oracle():
    for m in range(1, 21):
        assert zres.fiber_chain(m) == zres.local_blowup_oracle(m)


def test_formula_values():
    assert zres.c1m_self_int(2, [3, 1]) == 0
    assert zres.picard_rank([3, 1]) == 5
    assert zres.blow_up_count(6) == 3


def test_run_checks_pass():
    report = zres.run_checks(CUSP)
    assert report["pass"] is True


def test_refinement_keeps_minimal_model():
    refined = zres.random_refinement(CUSP, seed=3, steps=4)
    assert zres.validate(refined) == []
    sg = zres.surface_graph(refined, minimal=True)
    assert sorted(v["self_int"] for v in sg["vertices"]) == [-2, -2]


def test_render_dot():
    dot = zres.render_dot(CUSP, "surface_graph")
    assert dot.startswith("graph")
