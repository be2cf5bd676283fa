"""Tests for the experiment parsers and the instance families."""

import pytest

from certilab.errors import InputMismatchError, ParameterError
from certilab.graph.core import Graph
from certilab.harness import generate, hull_points, parse_checks, parse_params, parse_seeds
from certilab.harness.experiment import ExperimentSpec, payload_digest
from certilab.instances import GadgetInstance, Instance, load_instance
from certilab.io.output import write_json_atomic


@pytest.fixture
def inner_file(tmp_path):
    """A six-vertex instance with two critical paths, saved as JSON."""
    g = Graph(6, [(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)])
    path = tmp_path / "inner.json"
    write_json_atomic(str(path), Instance(graph=g, critical_paths=[[0, 2, 3, 4], [1, 2, 3, 5]]).to_dict())
    return str(path)


class TestParsers:
    """Tests for parse_params, parse_seeds and parse_checks."""

    def test_params_are_typed(self):
        """Test int, float, boolean and string values."""
        params = parse_params("n=10,p=0.5,directed=false,r=sqrt(2)")
        assert params == {"n": 10, "p": 0.5, "directed": False, "r": "sqrt(2)"}
        assert parse_params(None) == {}

    def test_params_need_equals(self):
        """Test that a bare word raises ParameterError."""
        with pytest.raises(ParameterError):
            parse_params("n=10,oops")

    def test_seed_ranges(self):
        """Test lists, ranges and the default seed."""
        assert parse_seeds("0,3,5-8") == [0, 3, 5, 6, 7, 8]
        assert parse_seeds(None) == [0]
        with pytest.raises(ParameterError):
            parse_seeds("1,1")
        with pytest.raises(ParameterError):
            parse_seeds("a-b")

    def test_checks_keep_canonical_order(self):
        """Test that checks come back in the fixed order."""
        assert parse_checks("schedule,certified") == ["certified", "schedule"]
        assert parse_checks("") == ["certified"]
        with pytest.raises(ParameterError):
            parse_checks("certified,speed")

    def test_digest_ignores_key_order(self):
        """Test the canonical digest."""
        assert payload_digest({"a": 1, "b": [2]}) == payload_digest({"b": [2], "a": 1})
        assert payload_digest({"a": 1}) != payload_digest({"a": 2})

    def test_spec_validation(self, tmp_path, inner_file):
        """Test missing files and unknown checks."""
        with pytest.raises(InputMismatchError):
            ExperimentSpec(instance_path=str(tmp_path / "missing.json"), algo="jls").validate()
        with pytest.raises(ParameterError):
            ExperimentSpec(instance_path=inner_file, algo="jls", checks=["speed"]).validate()


class TestFamilies:
    """Tests for generate and hull_points."""

    def test_random_dag_family(self):
        """Test the random DAG family and its determinism."""
        payload = generate("random-dag", {"n": 12, "m": 20}, seed=4)
        assert payload["kind"] == "random-dag"
        assert payload["graph"]["n"] == 12
        assert len(payload["graph"]["edges"]) == 20
        assert payload == generate("random-dag", {"n": 12, "m": 20}, seed=4)
        assert payload != generate("random-dag", {"n": 12, "m": 20}, seed=5)

    def test_layered_family(self):
        """Test the layered DAG family."""
        instance = load_instance(generate("layered", {"width": 3, "layers": 4}))
        assert instance.graph.n == 12
        assert instance.graph.m == 9

    def test_hs_family(self):
        """Test the layered grid family on a 20 x 20 grid."""
        instance = load_instance(generate("hs", {"d": 1, "D": 1, "r": 5}))
        assert instance.kind == "hs"
        assert instance.graph.n == 400
        assert all(len(path) == 2 for path in instance.critical_paths)

    def test_hull_family(self):
        """Test the hull family returns V(r) as pairs."""
        assert generate("hull", {"r": 5}) == [[4, 3], [3, 4]]
        assert hull_points({"r": 1}) == []

    def test_gadget_families_wrap_files(self, inner_file):
        """Test uy, brr, kp and cc gadgets around an instance file."""
        uy = load_instance(generate("uy", {"inner": inner_file}))
        assert isinstance(uy, GadgetInstance)
        assert uy.graph.n == 18
        assert load_instance(generate("brr", {"inner": inner_file})).kind == "brr"
        assert load_instance(generate("kp", {"inner": inner_file, "copies": 2})).graph.n == 36
        assert load_instance(generate("cc", {"inner": inner_file})).kind == "cc"

    def test_kp_rejects_gadget_inner(self, tmp_path, inner_file):
        """Test that kp refuses to wrap a gadget."""
        gadget_file = tmp_path / "uy.json"
        write_json_atomic(str(gadget_file), generate("uy", {"inner": inner_file}))
        with pytest.raises(InputMismatchError):
            generate("kp", {"inner": str(gadget_file)})

    def test_bad_family_and_params(self):
        """Test unknown families and missing parameters."""
        with pytest.raises(ParameterError):
            generate("grid", {})
        with pytest.raises(ParameterError):
            generate("random-dag", {"n": 5})
        with pytest.raises(ParameterError):
            generate("hull", {})
