import json

import numpy as np
import pytest

from braket import (
    KindedOperator,
    MetricOperator,
    OperatorKind,
    SchemaError,
    Variance,
    VarVector,
    Weight,
    build_rep,
    build_rep_diag,
    rotation_basis,
)
from braket.dsl import Environment
from braket.serialize import (
    environment_from_json,
    environment_to_json,
    load_json,
    matrix_from_json,
    matrix_to_json,
    operator_from_json,
    operator_to_json,
    rep_from_json,
    rep_to_json,
    vector_from_json,
    vector_to_json,
)
from conftest import max_dev, random_complex


class TestMatrixSchema:
    def test_identity_payload(self):
        assert matrix_to_json(np.eye(2)) == {
            "rows": 2,
            "cols": 2,
            "data": [[1, 0], [0, 0], [0, 0], [1, 0]],
        }

    def test_round_trip_bit_exact(self, rng):
        m = random_complex(rng, 3, 4)
        text = json.dumps(matrix_to_json(m))
        back = matrix_from_json(json.loads(text))
        assert (back == m).all()

    def test_truncated_json(self):
        with pytest.raises(SchemaError):
            load_json('{"rows": 2, "cols":')

    def test_missing_key(self):
        with pytest.raises(SchemaError):
            matrix_from_json({"rows": 2, "data": []})

    def test_wrong_length(self):
        with pytest.raises(SchemaError):
            matrix_from_json({"rows": 2, "cols": 2, "data": [[1, 0]]})

    def test_bad_entry(self):
        with pytest.raises(SchemaError):
            matrix_from_json({"rows": 1, "cols": 1, "data": [[1]]})
        with pytest.raises(SchemaError):
            matrix_from_json({"rows": 1, "cols": 1, "data": ["x"]})

    def test_bad_dims(self):
        with pytest.raises(SchemaError):
            matrix_from_json({"rows": 0, "cols": 1, "data": []})


class TestVectorOperatorSchema:
    def test_vector_round_trip(self, rng):
        v = VarVector(random_complex(rng, 3), Variance.BRA_UP)
        back = vector_from_json(json.loads(json.dumps(vector_to_json(v))))
        assert back.variance == v.variance
        assert (back.components == v.components).all()

    def test_vector_bad_variance(self):
        with pytest.raises(SchemaError):
            vector_from_json({"variance": "xx", "components": [[1, 0]]})

    def test_operator_round_trip(self, rng):
        x = KindedOperator(random_complex(rng, 2, 2), OperatorKind.UP_DOWN)
        back = operator_from_json(json.loads(json.dumps(operator_to_json(x))))
        assert back.kind == x.kind
        assert (back.mat == x.mat).all()

    def test_operator_bad_kind(self):
        with pytest.raises(SchemaError):
            operator_from_json({"kind": "zz", "matrix": matrix_to_json(np.eye(2))})


class TestRepSchema:
    def test_round_trip_fundamental(self):
        rep = build_rep(Weight(1), Weight(0))
        payload = json.loads(json.dumps(rep_to_json(rep)))
        back = rep_from_json(payload)
        assert back.j1 == rep.j1 and back.j2 == rep.j2
        assert back.dim == rep.dim
        assert back.epsilon == rep.epsilon
        assert back.basis == rep.basis
        assert back.labels == rep.labels
        for mine, theirs in zip(rep.M + rep.N + rep.I + rep.K,
                                back.M + back.N + back.I + back.K):
            assert (mine == theirs).all()
        assert (back.metric.eta == rep.metric.eta).all()

    def test_diagonal_rep_omits_second_weight(self):
        payload = rep_to_json(build_rep_diag(Weight(2)))
        assert "twice_j2" not in payload
        back = rep_from_json(payload)
        assert back.is_diagonal and back.j1 == Weight(2)

    def test_signature_field(self):
        payload = rep_to_json(build_rep(Weight(1), Weight(0)))
        assert payload["signature"] == [2, 2]

    def test_rotation_basis_round_trip(self):
        _, rot = rotation_basis(build_rep_diag(Weight(1)))
        back = rep_from_json(json.loads(json.dumps(rep_to_json(rot))))
        assert back.basis == "rotation"
        assert max_dev(back.metric.eta, rot.metric.eta) == 0

    def test_equal_weights_must_be_omitted(self):
        payload = rep_to_json(build_rep(Weight(1), Weight(0)))
        payload["twice_j2"] = payload["twice_j1"]
        with pytest.raises(SchemaError):
            rep_from_json(payload)

    def test_bad_generator_count(self):
        payload = rep_to_json(build_rep(Weight(1), Weight(0)))
        payload["generators"]["M"] = payload["generators"]["M"][:2]
        with pytest.raises(SchemaError):
            rep_from_json(payload)

    def test_bad_epsilon(self):
        payload = rep_to_json(build_rep(Weight(1), Weight(0)))
        payload["epsilon"] = 3
        with pytest.raises(SchemaError):
            rep_from_json(payload)

    def test_label_count_mismatch(self):
        payload = rep_to_json(build_rep(Weight(1), Weight(0)))
        payload["labels"] = payload["labels"][:-1]
        with pytest.raises(SchemaError):
            rep_from_json(payload)


class TestEnvironmentSchema:
    def test_round_trip(self, rng):
        env = Environment(
            dimension=2,
            metric=MetricOperator(np.diag([1.0, -1.0])),
            vectors={"x": VarVector(random_complex(rng, 2), Variance.KET_DOWN)},
            operators={"A": KindedOperator(random_complex(rng, 2, 2), OperatorKind.DOWN_DOWN)},
        )
        back = environment_from_json(json.loads(json.dumps(environment_to_json(env))))
        assert back.dimension == 2
        assert (back.metric.eta == env.metric.eta).all()
        assert (back.vectors["x"].components == env.vectors["x"].components).all()
        assert back.operators["A"].kind == OperatorKind.DOWN_DOWN

    def test_missing_metric(self):
        with pytest.raises(SchemaError):
            environment_from_json({"dimension": 2})

    def test_vectors_must_be_object(self):
        with pytest.raises(SchemaError):
            environment_from_json(
                {"dimension": 1, "metric": matrix_to_json(np.eye(1)), "vectors": []}
            )
