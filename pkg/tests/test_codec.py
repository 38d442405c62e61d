import json
import logging
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from idemmeasure import codec
from idemmeasure.cone import ThresholdFunction
from idemmeasure.errors import NotNormalized, ParseError, SchemaError
from idemmeasure.measures import MaxMinMeasure, make_maxmin
from idemmeasure.sampling import random_map, random_metric, random_nested, random_space
from idemmeasure.scalars import POS_INF

F = Fraction


def roundtrip(obj):
    return codec.loads(codec.dumps(obj))


class TestScalars:
    def test_normalized(self):
        assert codec.scalar_from_json("2/6") == F(1, 3)
        assert codec.scalar_from_json(3) == 3
        assert codec.scalar_from_json("-inf") == float("-inf")
        assert codec.loads("1.25") == F(5, 4)

    @pytest.mark.parametrize("bad", ["inf ", " 1", "1/0", "nan", "1.5.2", "", True, None, [1]])
    def test_rejected(self, bad):
        with pytest.raises(SchemaError):
            codec.scalar_from_json(bad)

    def test_schema_error_path(self):
        obj = {"kind": "max-min", "atoms": [{"point": "a", "weight": "inf "}]}
        with pytest.raises(SchemaError, match=r"\$\.atoms\[0\]\.weight"):
            codec.measure_from_json(obj)

    def test_bad_json(self):
        with pytest.raises(ParseError):
            codec.loads("{")


class TestMeasures:
    def test_duplicate_atoms_canonicalized_with_notice(self, caplog):
        obj = {"kind": "max-min", "atoms": [
            {"point": "b", "weight": "2"}, {"point": "a", "weight": "inf"}, {"point": "b", "weight": "1"}]}
        obj["space"] = {"points": ["a", "b"]}
        with caplog.at_level(logging.WARNING, logger="idemmeasure"):
            mu = codec.measure_from_json(obj)
        assert mu.weights == {"a": POS_INF, "b": 2}
        assert "canonicalized" in caplog.text

    def test_canonical_input_is_silent(self, caplog):
        mu = make_maxmin(codec.space_from_json({"points": ["a", "b"]}), {"a": POS_INF, "b": 2})
        with caplog.at_level(logging.WARNING, logger="idemmeasure"):
            assert codec.measure_from_json(roundtrip(codec.measure_to_json(mu))) == mu
        assert caplog.text == ""

    def test_not_normalized(self):
        with pytest.raises(NotNormalized):
            codec.measure_from_json({"kind": "max-plus", "atoms": [{"point": "a", "weight": "-1"}]})

    def test_missing_fields(self):
        with pytest.raises(SchemaError, match="kind"):
            codec.measure_from_json({"atoms": []})
        with pytest.raises(SchemaError, match=r"\$\.kind"):
            codec.measure_from_json({"kind": "probability", "atoms": []})

    @given(st.integers(0, 10**9), st.sampled_from(["max-min", "max-plus"]), st.integers(1, 3))
    def test_roundtrip(self, seed, kind, depth):
        rng = random.Random(seed)
        mu = random_nested(rng, random_space(rng, 3), kind, depth, width=2)
        text = codec.measure_to_json(mu)
        assert codec.measure_from_json(roundtrip(text)) == mu
        assert codec.measure_to_json(codec.measure_from_json(roundtrip(text))) == text


class TestDescriptors:
    @given(st.integers(0, 10**9))
    def test_map_metric_threshold_roundtrip(self, seed):
        rng = random.Random(seed)
        X, Y = random_space(rng), random_space(rng, prefix="y")
        f = random_map(rng, X, Y)
        assert codec.map_from_json(roundtrip(codec.map_to_json(f))) == f
        d = random_metric(rng, X)
        assert codec.metric_from_json(roundtrip(codec.metric_to_json(d)), X) == d
        A = ThresholdFunction(d, {p: F(1) if i == 0 else F(rng.randint(0, 4), 4) for i, p in enumerate(X)})
        assert codec.threshold_from_json(roundtrip(codec.threshold_to_json(A))) == A

    def test_threshold_object_form(self):
        A = codec.threshold_from_json({"space": {"points": ["a", "b"]}, "tau": {"a": "1", "b": "1/2"}})
        assert A.tau == (1, F(1, 2))

    def test_map_object_form(self):
        f = codec.map_from_json({"source": {"points": ["a", "b"]}, "target": {"points": ["u"]},
                                 "assignment": {"a": "u", "b": "u"}})
        assert f("b") == "u"

    def test_function_needs_space(self):
        with pytest.raises(SchemaError):
            codec.function_from_json({"values": {"a": "1"}})

    def test_point(self):
        assert codec.point_from_json({"coords": ["0", "1/2", 3]}) == (0, F(1, 2), 3)
        with pytest.raises(SchemaError, match=r"coords\[0\]"):
            codec.point_from_json({"coords": ["inf"]})

    def test_section(self):
        obj = {
            "map": {"source": {"points": ["z1", "z2"]}, "target": {"points": ["x"]},
                    "assignment": {"z1": "x", "z2": "x"}},
            "sections": [{"point": "x", "measure": {"kind": "max-min", "atoms": [
                {"point": "z1", "weight": "inf"}, {"point": "z2", "weight": "1"}]}}],
        }
        sec = codec.section_from_json(obj)
        assert sec.s["x"].weights == {"z1": POS_INF, "z2": 1}
        assert isinstance(sec.s["x"], MaxMinMeasure)

    def test_dumps_is_plain_json(self):
        assert json.loads(codec.dumps({"a": ["1/2"]})) == {"a": ["1/2"]}
