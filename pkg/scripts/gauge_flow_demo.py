#!/usr/bin/env python3
"""Sample the gauge group of an indefinite metric and watch what it preserves.

Draws random constrained parameter matrices, exponentiates them to group
elements U, and reports the worst-case deviation of U+ . eta . U from eta
together with the drift of a fixed scalar product under the induced
component transformation. Unconstrained parameters are sampled as a
control group and break the metric immediately.

    python scripts/gauge_flow_demo.py [--signature 2,2] [--samples 50]
"""

import argparse

import numpy as np

from braket import (
    GaugeParams,
    MetricOperator,
    Variance,
    VarVector,
    group_element,
    scalar_product,
)


def metric_for(signature: str) -> MetricOperator:
    n_plus, n_minus = (int(x) for x in signature.split(","))
    return MetricOperator(np.diag([1.0] * n_plus + [-1.0] * n_minus))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--signature", default="2,2")
    parser.add_argument("--samples", type=int, default=50)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    m = metric_for(args.signature)
    n = m.dim
    x = VarVector(rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n), Variance.KET_DOWN)
    y = VarVector(rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n), Variance.KET_DOWN)
    reference = scalar_product(m, x, y)

    worst_metric = 0.0
    worst_product = 0.0
    for _ in range(args.samples):
        params = GaugeParams.from_real_parameters(
            rng.uniform(-0.25, 0.25, (n, n)), rng.uniform(-0.25, 0.25, (n, n))
        )
        u = group_element(params, m)
        worst_metric = max(worst_metric, float(np.max(np.abs(u.conj().T @ m.eta @ u - m.eta))))
        u_inv = np.linalg.inv(u)
        moved = scalar_product(
            m,
            VarVector(u_inv @ x.components, Variance.KET_DOWN),
            VarVector(u_inv @ y.components, Variance.KET_DOWN),
        )
        worst_product = max(worst_product, abs(moved - reference))

    print(f"metric signature          : ({args.signature})")
    print(f"gauge samples             : {args.samples}")
    print(f"max |U+ eta U - eta|      : {worst_metric:.3e}")
    print(f"max scalar-product drift  : {worst_product:.3e}")

    control = GaugeParams(rng.uniform(-0.25, 0.25, (n, n)) + 1j * rng.uniform(-0.25, 0.25, (n, n)))
    u = group_element(control, m)
    broken = float(np.max(np.abs(u.conj().T @ m.eta @ u - m.eta)))
    print(f"unconstrained control     : |U+ eta U - eta| = {broken:.3e}")


if __name__ == "__main__":
    main()
