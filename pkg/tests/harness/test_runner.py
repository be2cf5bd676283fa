"""Tests for the seeded runner and the verification checks."""

import copy

import pytest

from certilab.algos import AlgoResult
from certilab.certify import ShortcutSet
from certilab.errors import InputMismatchError, ParameterError
from certilab.graph.core import Graph
from certilab.harness import ExperimentSpec, generate, run_experiment, run_one, verify_rows
from certilab.harness.checks import check_witness
from certilab.harness.experiment import payload_digest
from certilab.instances import Instance, build_uy_gadget, load_instance
from certilab.io.output import write_json_atomic


def _save(tmp_path, name, payload):
    path = tmp_path / name
    write_json_atomic(str(path), payload)
    return str(path)


def _experiment(tmp_path, payload, algo, params=None, seeds=(0,), record_timing=False):
    spec = ExperimentSpec(
        instance_path=_save(tmp_path, "instance.json", payload),
        algo=algo,
        params=params or {},
        seeds=list(seeds),
        record_timing=record_timing,
    )
    return run_experiment(spec)


@pytest.fixture
def dag_payload():
    return generate("random-dag", {"n": 16, "m": 30}, seed=2)


@pytest.fixture
def gadget_payload(tmp_path):
    g = Graph(6, [(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)])
    inner = _save(tmp_path, "inner.json", Instance(graph=g, critical_paths=[[0, 2, 3, 4], [1, 2, 3, 5]]).to_dict())
    return generate("uy", {"inner": inner})


class TestRunner:
    """Tests for run_one and run_experiment."""

    def test_rows_follow_seed_order(self, tmp_path, dag_payload):
        """Test one row per seed, in order, tied to the instance digest."""
        document, failed = _experiment(tmp_path, dag_payload, "fineman", seeds=[3, 1, 2])
        assert failed == 0
        assert [row["seed"] for row in document["runs"]] == [3, 1, 2]
        assert document["instance"]["digest"] == payload_digest(dag_payload)
        assert document["instance"]["kind"] == "random-dag"

    def test_deterministic_without_timing(self, tmp_path, dag_payload):
        """Test that reruns give identical documents when timing is off."""
        first, _ = _experiment(tmp_path, dag_payload, "jls", seeds=range(4))
        second, _ = _experiment(tmp_path, dag_payload, "jls", seeds=range(4))
        assert first == second
        assert "wall_ms" not in first["runs"][0]["metrics"]

    def test_timing_and_diameters_recorded(self, dag_payload):
        """Test the harness metrics on a single run."""
        row = run_one(load_instance(dag_payload), "uy", {"p": 0.5}, 0)
        assert row["metrics"]["wall_ms"] >= 0
        assert row["metrics"]["diameter_after"] <= row["metrics"]["diameter_before"]

    def test_failed_run_becomes_error_row(self, tmp_path, dag_payload):
        """Test that a missing algorithm parameter yields an error row."""
        document, failed = _experiment(tmp_path, dag_payload, "uy", seeds=[0, 1])
        assert failed == 2
        assert document["runs"][0]["error"]["type"] == "ParameterError"

    def test_unknown_algorithm(self, dag_payload):
        """Test that an unknown algorithm name raises ParameterError."""
        with pytest.raises(ParameterError):
            run_one(load_instance(dag_payload), "dijkstra", {}, 0)

    def test_brr_budget_from_gadget(self, gadget_payload):
        """Test that brr takes |S| * |T| as budget on gadgets."""
        row = run_one(load_instance(gadget_payload), "brr", {}, 0, record_timing=False)
        assert row["params"] == {"budget": 4}


class TestVerifyRows:
    """Tests for verify_rows and the individual checks."""

    def test_pivot_run_passes(self, tmp_path, dag_payload):
        """Test certified, diameter, closure and schedule on fineman runs."""
        checks = ["certified", "diameter", "closure", "schedule"]
        document, _ = _experiment(tmp_path, dag_payload, "fineman", seeds=[0, 1])
        rows = verify_rows(dag_payload, document, checks, "dag")
        for row in rows:
            assert row["instance"] == "dag"
            assert all(row["checks"][c]["passed"] for c in checks)
            assert row["certified"] is True

    def test_cover_check(self, tmp_path, dag_payload):
        """Test the cover check on chain covers and on results without one."""
        bals, _ = _experiment(tmp_path, dag_payload, "bals")
        assert verify_rows(dag_payload, bals, ["cover"])[0]["checks"]["cover"]["passed"]
        uy, _ = _experiment(tmp_path, dag_payload, "uy", {"p": 0.3})
        assert not verify_rows(dag_payload, uy, ["cover"])[0]["checks"]["cover"]["passed"]

    def test_complexity_check(self, tmp_path):
        """Test brute-force complexity on an eight-vertex DAG."""
        payload = generate("random-dag", {"n": 8, "m": 10}, seed=1)
        document, _ = _experiment(tmp_path, payload, "uy", {"p": 0.5})
        row = verify_rows(payload, document, ["complexity"])[0]
        assert row["checks"]["complexity"]["passed"]
        assert row["cert_complexity"] >= 0

    def test_witness_check(self, tmp_path, gadget_payload):
        """Test the witness check on a gadget instance."""
        document, _ = _experiment(tmp_path, gadget_payload, "uy", {"p": 1.0})
        row = verify_rows(gadget_payload, document, ["witness"])[0]
        assert row["checks"]["witness"]["passed"]
        assert "witness_lower_bound" in row

    def test_witness_needs_gadget(self, tmp_path, dag_payload):
        """Test that the witness check on a plain instance is an input mismatch."""
        document, _ = _experiment(tmp_path, dag_payload, "uy", {"p": 0.3})
        with pytest.raises(InputMismatchError):
            verify_rows(dag_payload, document, ["witness"])

    def test_witness_fails_when_pairs_share_an_edge(self):
        """Test that two critical pairs charged to one shortcut edge fail the witness check."""
        diamond = Graph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
        gadget = build_uy_gadget(Instance(graph=diamond, critical_paths=[[0, 1, 3], [0, 2, 3]]))
        h = ShortcutSet([(gadget.aux_of[0][0], gadget.aux_of[3][0])])
        outcome = check_witness(gadget, AlgoResult(algo="uy", seed=0, shortcut=h))
        assert not outcome.passed
        assert outcome.values["witness_lower_bound"] == 3
        assert outcome.values["witness_required"] == 6

    def test_witness_passes_with_one_edge_per_pair(self):
        """Test that distinct shortcut edges for each critical pair pass the witness check."""
        g = Graph(6, [(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)])
        gadget = build_uy_gadget(Instance(graph=g, critical_paths=[[0, 2, 3, 4], [1, 2, 3, 5]]))
        h = ShortcutSet([(gadget.aux_of[0][0], gadget.aux_of[4][0]), (gadget.aux_of[1][0], gadget.aux_of[5][0])])
        outcome = check_witness(gadget, AlgoResult(algo="uy", seed=0, shortcut=h))
        assert outcome.passed
        assert outcome.values["witness_lower_bound"] == outcome.values["witness_required"] == 8

    def test_tampered_diameter_fails(self, tmp_path, dag_payload):
        """Test that a wrong recorded diameter fails the diameter check."""
        document, _ = _experiment(tmp_path, dag_payload, "jls")
        tampered = copy.deepcopy(document)
        tampered["runs"][0]["metrics"]["diameter_after"] += 1
        row = verify_rows(dag_payload, tampered, ["diameter"])[0]
        assert not row["checks"]["diameter"]["passed"]

    def test_other_instance_rejected(self, tmp_path, dag_payload):
        """Test that results from another instance raise InputMismatchError."""
        document, _ = _experiment(tmp_path, dag_payload, "jls")
        other = generate("random-dag", {"n": 16, "m": 30}, seed=3)
        with pytest.raises(InputMismatchError):
            verify_rows(other, document, ["certified"])

    def test_error_rows_fail_every_check(self, tmp_path, dag_payload):
        """Test that failed runs fail all requested checks."""
        document, _ = _experiment(tmp_path, dag_payload, "kp")
        row = verify_rows(dag_payload, document, ["certified", "closure"])[0]
        assert row["error"].startswith("ParameterError")
        assert row["checks"]["closure"] == {"passed": False, "detail": "run failed"}
