"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
report. Every tolerance is fixed here, not configurable.
"""

import json
from contextlib import contextmanager
from fractions import Fraction

import numpy as np
import pytest

from braket import (
    GaugeParams,
    KindedOperator,
    MetricOperator,
    OperatorKind,
    Projector,
    Variance,
    VarVector,
    Weight,
    add,
    build_rep,
    build_rep_diag,
    chiral_projectors,
    clebsch_gordan,
    compose,
    dirac_adjoint,
    generator_h,
    generator_x,
    group_element,
    is_additive,
    is_perp,
    is_semi_hermitian,
    radical_sum,
    rotation_basis,
    scalar_product,
    scale,
    signature,
    subspace_projector,
    trace,
)
from braket.cli import main as cli_main
from braket.serialize import (
    environment_from_json,
    matrix_from_json,
    matrix_to_json,
    rep_from_json,
    rep_to_json,
)
from braket.dsl import eval_source
from conftest import (
    max_dev,
    random_complex,
    random_hermitian_invertible,
    random_invertible,
    random_metric_projector,
)
from test_sl2c import (
    DIAG_WEIGHTS,
    PAIR_WEIGHTS,
    all_reps,
    diag_signature,
    pair_signature,
    spectral_rotation_metric,
)


@contextmanager
def criterion(num: int, description: str):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {num:02d} {description}: FAIL")
        raise
    print(f"ACCEPTANCE {num:02d} {description}: PASS")


def test_criterion_01_fundamental_signature():
    with criterion(1, "[1/2,0] bundle reports signature (2,2)"):
        payload = rep_to_json(build_rep(Weight(1), Weight(0)))
        assert payload["signature"] == [2, 2]


def test_criterion_02_symmetric_signatures():
    with criterion(2, "two-weight bundles have signature (n,n)"):
        for tj1, tj2 in ((1, 0), (2, 0), (2, 1), (3, 1)):
            rep = build_rep(Weight(tj1), Weight(tj2))
            n = (tj1 + 1) * (tj2 + 1)
            assert rep_to_json(rep)["signature"] == [n, n]


def test_criterion_03_tensor_square_signatures():
    with criterion(3, "tensor-square signatures (1,3)/(6,3)/(6,10)"):
        wanted = {1: (1, 3), 2: (6, 3), 3: (6, 10)}
        for tj, want in wanted.items():
            rep = build_rep_diag(Weight(tj))
            assert rep_to_json(rep)["signature"] == list(want)
            assert diag_signature(tj) == want


def test_criterion_04_adjoint_exchange():
    with criterion(4, "M+ = eta N eta_inv below 1e-10 for every bundle"):
        for rep in all_reps():
            eta, eta_inv = rep.metric.eta, rep.metric.eta_inv
            for a in range(3):
                dev = max_dev(rep.M[a].conj().T, eta @ rep.N[a] @ eta_inv)
                assert dev < 1e-10


def test_criterion_05_commutators():
    with criterion(5, "rotation/boost commutators below 1e-10, dim <= 16"):
        eps = np.zeros((3, 3, 3))
        eps[0, 1, 2] = eps[1, 2, 0] = eps[2, 0, 1] = 1.0
        eps[0, 2, 1] = eps[2, 1, 0] = eps[1, 0, 2] = -1.0
        for rep in all_reps():
            assert rep.dim <= 16
            for a in range(3):
                for b in range(3):
                    for left, right, out, coeff in (
                        (rep.I, rep.I, rep.I, 1j),
                        (rep.I, rep.K, rep.K, 1j),
                        (rep.K, rep.K, rep.I, -1j),
                    ):
                        comm = left[a] @ right[b] - right[b] @ left[a]
                        want = sum(coeff * eps[a, b, c] * out[c] for c in range(3))
                        assert max_dev(comm, want) < 1e-10


def test_criterion_06_perp_additive_equivalence():
    with criterion(6, "perp <=> additive on 200 self-adjoint pairs per metric"):
        rng = np.random.default_rng(1906)
        bases = [np.diag([1.0, -1.0]), np.diag([1.0, 1.0, -1.0])]
        metrics = [MetricOperator(b) for b in bases]
        for b in bases:
            t = random_invertible(rng, b.shape[0])
            metrics.append(MetricOperator(t.conj().T @ b @ t))
        for metric in metrics:
            n = metric.dim
            violations = 0
            for _ in range(200):
                p = random_metric_projector(rng, metric, int(rng.integers(1, n)))
                if rng.uniform() < 0.5:
                    q = random_metric_projector(rng, metric, int(rng.integers(1, n)))
                else:
                    w = random_complex(rng, n, 1)
                    v = (np.eye(n) - p.mat) @ w
                    if np.linalg.norm(v) < 1e-6:
                        continue
                    try:
                        q = subspace_projector(metric, v)
                    except Exception:
                        continue
                if is_perp(p, q, metric, 1e-8) != is_additive(p, q, 1e-8):
                    violations += 1
            assert violations == 0
        # fixed witness: additive but not perp without self-adjointness
        skew = Projector.from_matrix([[1.0, 1.0], [0.0, 0.0]])
        comp = Projector.from_matrix([[0.0, -1.0], [0.0, 1.0]])
        flat = MetricOperator(np.diag([1.0, -1.0]))
        assert is_additive(skew, comp, 1e-12)
        assert not is_perp(skew, comp, flat, 1e-6)


def test_criterion_07_dirac_adjoint_algebra():
    with criterion(7, "Dirac adjoint algebra on 500 samples below 1e-12"):
        rng = np.random.default_rng(1907)
        flat = MetricOperator(np.diag([1.0, 1.0, -1.0]))
        t = np.eye(3) + 0.3 * random_complex(rng, 3, 3)
        curved = MetricOperator(t.conj().T @ flat.eta @ t)
        kinds = list(OperatorKind)
        samples = 0
        while samples < 500:
            m = flat if samples % 2 == 0 else curved
            kind = kinds[samples % 4]
            x = KindedOperator(random_complex(rng, 3, 3), kind)
            # involution
            back = dirac_adjoint(dirac_adjoint(x, m), m)
            assert back.kind == kind and max_dev(back.mat, x.mat) < 1e-12
            # anti-linearity against a partner of the same kind
            y = KindedOperator(random_complex(rng, 3, 3), kind)
            alpha, beta = complex(*rng.uniform(-1, 1, 2)), complex(*rng.uniform(-1, 1, 2))
            lhs = dirac_adjoint(add(scale(alpha, x), scale(beta, y)), m)
            rhs = add(
                scale(np.conj(alpha), dirac_adjoint(x, m)),
                scale(np.conj(beta), dirac_adjoint(y, m)),
            )
            assert max_dev(lhs.mat, rhs.mat) < 1e-12
            # anti-multiplicativity where the identity is kind-exact
            if kind.is_endomorphism:
                lhs = dirac_adjoint(compose(x, y), m)
                rhs = compose(dirac_adjoint(y, m), dirac_adjoint(x, m))
                assert lhs.kind == rhs.kind
                assert max_dev(lhs.mat, rhs.mat) < 1e-12
            samples += 1


def test_criterion_08_semi_unitarity():
    with criterion(8, "constrained exponentials are symmetries below 1e-8"):
        rng = np.random.default_rng(1908)
        etas = (
            np.diag([1.0, -1.0]),
            np.diag([1.0, 1.0, -1.0]),
            np.diag([1.0, 1.0, -1.0, -1.0]),
        )
        for eta in etas:
            m = MetricOperator(eta)
            n = m.dim
            for _ in range(100):
                params = GaugeParams.from_real_parameters(
                    rng.uniform(-0.25, 0.25, (n, n)), rng.uniform(-0.25, 0.25, (n, n))
                )
                assert np.max(np.abs(params.omega)) <= 0.5
                u = group_element(params, m)
                assert max_dev(u.conj().T @ m.eta @ u, m.eta) < 1e-8
                u_inv = np.linalg.inv(u)
                x = VarVector(random_complex(rng, n), Variance.KET_DOWN)
                y = VarVector(random_complex(rng, n), Variance.KET_DOWN)
                moved_x = VarVector(u_inv @ x.components, Variance.KET_DOWN)
                moved_y = VarVector(u_inv @ y.components, Variance.KET_DOWN)
                assert (
                    abs(scalar_product(m, moved_x, moved_y) - scalar_product(m, x, y))
                    < 1e-8
                )


def test_criterion_09_generator_identities():
    with criterion(9, "generator trace/contraction/index-swap identities"):
        rng = np.random.default_rng(1909)
        for n in (2, 3, 4):
            for _ in range(5):
                m = MetricOperator(random_hermitian_invertible(rng, n))
                contraction = np.zeros((n, n), dtype=complex)
                for i in range(1, n + 1):
                    for j in range(1, n + 1):
                        h = generator_h(i, j, m)
                        assert abs(trace(h)) < 1e-12
                        contraction += m.eta_inv[i - 1, j - 1] * h.mat
                        bar = dirac_adjoint(generator_x(i, j, m), m)
                        assert max_dev(bar.mat, generator_x(j, i, m).mat) < 1e-12
                assert max_dev(contraction, np.zeros((n, n))) < 1e-12


def test_criterion_10_cg_exactness():
    with criterion(10, "CG orthogonality and exchange symmetry exact, j <= 2"):
        for tj1 in range(0, 5):
            for tj2 in range(0, 5):
                spins = [
                    Fraction(t, 2)
                    for t in range(tj1 + tj2, abs(tj1 - tj2) - 2, -2)
                ]
                l1s = [Fraction(t, 2) for t in range(tj1, -tj1 - 2, -2)]
                l2s = [Fraction(t, 2) for t in range(tj2, -tj2 - 2, -2)]
                columns = [
                    (s, Fraction(t, 2))
                    for s in spins
                    for t in range(int(2 * s), -int(2 * s) - 2, -2)
                ]
                # exchange symmetry, exact
                for s in spins:
                    phase = (-1) ** int(s - Fraction(tj1 + tj2, 2))
                    for l1 in l1s:
                        for l2 in l2s:
                            if abs(l1 + l2) > s:
                                continue
                            a = clebsch_gordan(
                                Fraction(tj1, 2), l1, Fraction(tj2, 2), l2, s, l1 + l2
                            )
                            b = clebsch_gordan(
                                Fraction(tj2, 2), l2, Fraction(tj1, 2), l1, s, l1 + l2
                            )
                            assert a.squared == b.squared
                            assert a.sign == phase * b.sign
                # orthogonality, exact
                for si, sigi in columns:
                    for sj, sigj in columns:
                        terms = [
                            clebsch_gordan(Fraction(tj1, 2), l1, Fraction(tj2, 2), l2, si, sigi)
                            * clebsch_gordan(Fraction(tj1, 2), l1, Fraction(tj2, 2), l2, sj, sigj)
                            for l1 in l1s
                            for l2 in l2s
                        ]
                        total = radical_sum(terms)
                        want = {1: Fraction(1)} if (si, sigi) == (sj, sigj) else {}
                        assert total == want


def test_criterion_11_rotation_metric_spectral_form():
    with criterion(11, "rotation-basis metric matches spectral form below 1e-10"):
        for rep in all_reps():
            assert rep.dim <= 16
            _, rot = rotation_basis(rep)
            assert max_dev(rot.metric.eta, spectral_rotation_metric(rot)) < 1e-10


def test_criterion_12_chiral_projectors():
    with criterion(12, "chiral projector algebra below 1e-12"):
        for tj1, tj2 in ((1, 0), (2, 1)):
            rep = build_rep(Weight(tj1), Weight(tj2))
            left, right = chiral_projectors(rep)
            dim = rep.dim
            assert max_dev(left.mat + right.mat, np.eye(dim)) < 1e-12
            assert max_dev(left.mat @ right.mat, np.zeros((dim, dim))) < 1e-12
            bar_left = dirac_adjoint(left.op, rep.metric)
            assert max_dev(bar_left.mat, right.mat) < 1e-12
            assert is_semi_hermitian(left.op, rep.metric, 1e-6) is False


def test_criterion_13_sylvester_inertia():
    with criterion(13, "signature invariant under 100 congruences, dims 2-6"):
        rng = np.random.default_rng(1913)
        for n in range(2, 7):
            h = random_hermitian_invertible(rng, n)
            expected = signature(h)
            for _ in range(100):
                t = random_invertible(rng, n)
                assert signature(t.conj().T @ h @ t) == expected


def test_criterion_14_cli_dsl_coherence(tmp_path):
    with criterion(14, "evaluator matches library and CLI on golden file"):
        import golden_recipes as recipes

        doc = json.loads(recipes.GOLDEN_PATH.read_text())
        envs = {
            name: environment_from_json(payload)
            for name, payload in doc["environments"].items()
        }
        env_files = {}
        for name, payload in doc["environments"].items():
            path = tmp_path / f"{name}.json"
            path.write_text(json.dumps(payload))
            env_files[name] = str(path)
        assert len(doc["cases"]) == 20
        for case in doc["cases"]:
            env = envs[case["env"]]
            got = eval_source(case["expr"], env)
            want = recipes.library_value(case["expr"], env)
            assert recipes.payload_dev(got, case["expect"]) < 1e-12
            assert recipes.value_dev(got, want) < 1e-12
            # the CLI must agree with the in-process evaluator
            code, payload = recipes.run_cli_eval(
                cli_main, env_files[case["env"]], case["expr"]
            )
            assert code == 0
            assert recipes.payload_dev(got, payload) < 1e-12
        # JSON round trips are identities
        rep = build_rep(Weight(1), Weight(0))
        back = rep_from_json(json.loads(json.dumps(rep_to_json(rep))))
        assert (back.metric.eta == rep.metric.eta).all()
        assert back.labels == rep.labels
        mat = random_complex(np.random.default_rng(1914), 3, 3)
        assert (matrix_from_json(json.loads(json.dumps(matrix_to_json(mat)))) == mat).all()
