import os
from pathlib import Path

import pytest

import jssp_landscape as jl

FIXTURES = Path(os.environ.get("JSSP_FIXTURE_DIR", Path(__file__).resolve().parents[2] / "fixtures"))

# J1 = (m0, 3), (m1, 2); J2 = (m1, 2), (m0, 4)
I22 = [[(0, 3), (1, 2)], [(1, 2), (0, 4)]]


def test_worked_instance():
    inst = jl.Instance(I22)
    assert (inst.n_jobs, inst.n_machines, inst.edge_count) == (2, 2, 2)
    assert jl.lower_bound(inst) == 7
    r = jl.solve(inst)
    assert r["status"] == "optimal"
    assert r["optimum"] == 7
    assert r["witness"] == [[0, 1], [1, 0]]
    assert jl.makespan(inst, [[0, 1], [0, 1]]) == 11
    assert not jl.is_acyclic(inst, [[1, 0], [0, 1]])
    assert jl.distance([[0, 1], [1, 0]], [[1, 0], [1, 0]]) == 1


def test_fixture_round_trip():
    inst = jl.load_instance(str(FIXTURES / "i22.jsp"))
    assert inst == jl.Instance(I22)
    assert jl.parse_instance(inst.to_text()) == inst
    assert jl.parse_instance(inst.to_json()) == inst


def test_backbone_and_descent():
    inst = jl.Instance(I22)
    b = jl.backbone(inst, [1.0, 1.6])
    assert b["optimum"] == 7
    assert b["fraction"] == [1.0, 0.0]
    assert jl.makespan(inst, jl.ball_descent(inst, [[0, 1], [0, 1]], 1)) == 7
    d = jl.rho_distances(inst, 3, [1.0], seed=2)
    assert d == [[0, 0, 0]]


def test_solver_matches_enumeration():
    for seed in range(10):
        inst = jl.random_instance(3, 3, seed)
        assert jl.solve(inst)["optimum"] == jl.brute_force_optimum(inst)
        start = jl.random_schedule(inst, seed)
        assert jl.makespan(inst, start) >= jl.lower_bound(inst)


def test_experiments_are_deterministic():
    csv = jl.backbone_experiment("3x3,2x4", instances=4, rho=[1.0, 1.2], seed=5, threads=2)
    assert csv.splitlines()[0] == "combo,n,m,rho,mean_fraction,q25,q75,count"
    assert len(csv.splitlines()) == 1 + 2 * 2
    assert csv == jl.backbone_experiment("3x3,2x4", instances=4, rho=[1.0, 1.2], seed=5, threads=1)
    quality, slopes = jl.quality_experiment("2x2,3x3", instances=3, samples=5)
    assert slopes.startswith("ratio,quantity,slope")
    assert "mean_A" in quality
    assert jl.exactness_experiment("3x3", instances=2, k=2).startswith("combo,n,m,norm_radius")
    assert jl.distance_experiment("3x3", instances=2, k=2, rho=[1.0]).startswith("combo,n,m,rho")
    assert jl.difficulty_experiment("3x3", instances=2).startswith("combo,n,m,log10_size")


def test_errors():
    with pytest.raises(jl.ValidationError):
        jl.Instance([[(0, 3), (0, 2)]])
    with pytest.raises(jl.ValidationError):
        jl.backbone_experiment("6y6")
    with pytest.raises(jl.Error):
        jl.load_instance(str(FIXTURES / "missing.jsp"))
    r = jl.solve(jl.random_instance(8, 8, 1), node_limit=1)
    assert r["status"] == "aborted"
    assert not r["proven"]
