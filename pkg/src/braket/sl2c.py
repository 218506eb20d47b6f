"""Coupled finite-dimensional sl(2,C) representations with invariant metrics.

A two-weight bundle lives on (K^j1 x K^j2) + (K^j2 x K^j1) and carries
commuting block generators M (left tensor slot) and N (right slot); the
rotations are I = M + N and the boosts K = -i(M - N). The invariant
metric is epsilon times the block-swap pairing, which makes I and K
self-adjoint and exchanges the adjoints of M and N. For equal weights the
carrier is the single tensor square K^j x K^j with the slot-swap metric.

Basis pipeline: canonical (tensor-product labels) -> rotation (total-spin
labels via Clebsch-Gordan columns, diagonalizing I^2 and I3) ->
orthonormal (diagonal +-1 metric; only needed when the weights differ,
the rotation basis of an equal-weight bundle is already orthonormal).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cg import clebsch_gordan
from .errors import EqualWeights, WrongRepShape
from .linalg import DEFAULT_TOLS, Tolerances, inverse, kron, signature
from .projections import Projector
from .spaces import MetricOperator
from .su2 import Weight, su2_generators

__all__ = [
    "CoupledRep",
    "default_epsilon",
    "default_epsilon_diag",
    "build_rep",
    "build_rep_diag",
    "chiral_projectors",
    "rotation_basis",
    "orthonormal_basis",
    "rep_signature",
]

CANONICAL = "canonical"
ROTATION = "rotation"
ORTHONORMAL = "orthonormal"


@dataclass(frozen=True, eq=False)
class CoupledRep:
    """A full representation bundle in one fixed basis."""

    j1: Weight
    j2: Weight
    dim: int
    M: tuple[np.ndarray, np.ndarray, np.ndarray]
    N: tuple[np.ndarray, np.ndarray, np.ndarray]
    I: tuple[np.ndarray, np.ndarray, np.ndarray]
    K: tuple[np.ndarray, np.ndarray, np.ndarray]
    metric: MetricOperator
    epsilon: int
    basis: str
    labels: tuple[dict, ...]

    @property
    def is_diagonal(self) -> bool:
        """Equal-weight bundles live on a single tensor square."""
        return self.j1 == self.j2


def default_epsilon(j1: Weight, j2: Weight) -> int:
    """Sign choice (-1)^(j1+j2-|j1-j2|) for a two-weight bundle."""
    return -1 if min(j1.twice_j, j2.twice_j) % 2 else 1


def default_epsilon_diag(j: Weight) -> int:
    """Sign choice (-1)^(2j) for an equal-weight bundle."""
    return -1 if j.twice_j % 2 else 1


def _check_epsilon(epsilon) -> int:
    if epsilon not in (-1, 1):
        raise ValueError(f"epsilon must be +1 or -1, got {epsilon!r}")
    return int(epsilon)


def _exchange(d_left: int, d_right: int) -> np.ndarray:
    """Permutation sending y (x) x to x (x) y for x in C^d_left, y in C^d_right."""
    s = np.zeros((d_left * d_right, d_right * d_left), dtype=complex)
    for p in range(d_left):
        for q in range(d_right):
            s[p * d_right + q, q * d_left + p] = 1.0
    return s


def _block_diag(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.zeros((a.shape[0] + b.shape[0], a.shape[1] + b.shape[1]), dtype=complex)
    out[: a.shape[0], : a.shape[1]] = a
    out[a.shape[0] :, a.shape[1] :] = b
    return out


def _derived(m: np.ndarray, n: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    return m + n, -1j * (m - n)


def _canonical_block_labels(jl: Weight, jr: Weight) -> list[dict]:
    return [
        {
            "twice_jl": jl.twice_j,
            "twice_jr": jr.twice_j,
            "twice_ml": jl.twice_j - 2 * p,
            "twice_mr": jr.twice_j - 2 * q,
        }
        for p in range(jl.dim)
        for q in range(jr.dim)
    ]


def _spin_range(j1: Weight, j2: Weight) -> list[int]:
    """Total twice-spins, descending from j1+j2 to |j1-j2|."""
    return list(range(j1.twice_j + j2.twice_j, abs(j1.twice_j - j2.twice_j) - 2, -2))


def _rotation_block_labels(jl: Weight, jr: Weight) -> list[dict]:
    return [
        {
            "twice_jl": jl.twice_j,
            "twice_jr": jr.twice_j,
            "twice_s": ts,
            "twice_sigma": tsig,
        }
        for ts in _spin_range(jl, jr)
        for tsig in range(ts, -ts - 2, -2)
    ]


def build_rep(j1: Weight, j2: Weight, epsilon: int | None = None) -> CoupledRep:
    """Two-weight bundle on (K^j1 x K^j2) + (K^j2 x K^j1), canonical basis.

    Inside each block the basis is ordered left slot major with magnetic
    labels descending. The metric is epsilon times the off-diagonal pair
    of slot-exchange blocks, which couples each basis vector with its
    mirrored tensor slot in the other block.
    """
    if j1 == j2:
        raise EqualWeights("equal weights form a tensor square; use build_rep_diag")
    epsilon = default_epsilon(j1, j2) if epsilon is None else _check_epsilon(epsilon)
    d1, d2 = j1.dim, j2.dim
    n = d1 * d2
    rep1, rep2 = su2_generators(j1), su2_generators(j2)
    eye1 = np.eye(d1, dtype=complex)
    eye2 = np.eye(d2, dtype=complex)

    m_gens, n_gens, i_gens, k_gens = [], [], [], []
    for a in range(3):
        m_a = _block_diag(kron(rep1.J[a], eye2), kron(rep2.J[a], eye1))
        n_a = _block_diag(kron(eye1, rep2.J[a]), kron(eye2, rep1.J[a]))
        i_a, k_a = _derived(m_a, n_a)
        m_gens.append(m_a)
        n_gens.append(n_a)
        i_gens.append(i_a)
        k_gens.append(k_a)

    eta = np.zeros((2 * n, 2 * n), dtype=complex)
    swap = _exchange(d1, d2)
    eta[:n, n:] = epsilon * swap
    eta[n:, :n] = epsilon * swap.conj().T

    labels = _canonical_block_labels(j1, j2) + _canonical_block_labels(j2, j1)
    return CoupledRep(
        j1=j1,
        j2=j2,
        dim=2 * n,
        M=tuple(m_gens),
        N=tuple(n_gens),
        I=tuple(i_gens),
        K=tuple(k_gens),
        metric=MetricOperator(eta),
        epsilon=epsilon,
        basis=CANONICAL,
        labels=tuple(labels),
    )


def build_rep_diag(j: Weight, epsilon: int | None = None) -> CoupledRep:
    """Equal-weight bundle on the tensor square K^j x K^j, canonical basis.

    The metric is epsilon times the tensor-slot swap.
    """
    epsilon = default_epsilon_diag(j) if epsilon is None else _check_epsilon(epsilon)
    d = j.dim
    rep = su2_generators(j)
    eye = np.eye(d, dtype=complex)

    m_gens = [kron(rep.J[a], eye) for a in range(3)]
    n_gens = [kron(eye, rep.J[a]) for a in range(3)]
    derived = [_derived(m_gens[a], n_gens[a]) for a in range(3)]

    eta = epsilon * _exchange(d, d)
    labels = _canonical_block_labels(j, j)
    return CoupledRep(
        j1=j,
        j2=j,
        dim=d * d,
        M=tuple(m_gens),
        N=tuple(n_gens),
        I=tuple(x[0] for x in derived),
        K=tuple(x[1] for x in derived),
        metric=MetricOperator(eta),
        epsilon=epsilon,
        basis=CANONICAL,
        labels=tuple(labels),
    )


def _chiral_matrices(rep: CoupledRep) -> tuple[np.ndarray, np.ndarray]:
    n = rep.dim // 2
    eye = np.eye(n, dtype=complex)
    zero = np.zeros((n, n), dtype=complex)
    left = _block_diag(eye, zero)
    right = _block_diag(zero, eye)
    if rep.basis == ORTHONORMAL:
        # The +- mixing is the fixed involution C2; conjugate through it.
        c2 = np.vstack(
            [np.hstack([eye, eye]), np.hstack([eye, -eye])]
        ) / np.sqrt(2.0)
        left = c2 @ left @ c2
        right = c2 @ right @ c2
    return left, right


def chiral_projectors(rep: CoupledRep) -> tuple[Projector, Projector]:
    """Projectors onto the two tensor-order summands of a two-weight bundle.

    They are complementary and additive but not self-adjoint: the metric
    exchanges them under Dirac conjugation, which is exactly why the
    bundle has no common invariant subspace of generators and metric.
    """
    if rep.is_diagonal:
        raise WrongRepShape("equal-weight bundles have no chiral split")
    left, right = _chiral_matrices(rep)
    return Projector.from_matrix(left), Projector.from_matrix(right)


def _cg_block(jl: Weight, jr: Weight) -> np.ndarray:
    """Columns of Clebsch-Gordan coefficients carrying (jl, jr) tensor
    labels into total-spin labels, both in descending order."""
    rows = jl.dim * jr.dim
    cols = []
    for ts in _spin_range(jl, jr):
        for tsig in range(ts, -ts - 2, -2):
            col = np.zeros(rows, dtype=complex)
            for p in range(jl.dim):
                for q in range(jr.dim):
                    col[p * jr.dim + q] = clebsch_gordan(
                        jl.j,
                        Fraction(jl.twice_j - 2 * p, 2),
                        jr.j,
                        Fraction(jr.twice_j - 2 * q, 2),
                        Fraction(ts, 2),
                        Fraction(tsig, 2),
                    ).value
            cols.append(col)
    return np.stack(cols, axis=1)


def _transform(rep: CoupledRep, c: np.ndarray, basis: str, labels) -> CoupledRep:
    c_inv = inverse(c)
    move = lambda mats: tuple(c_inv @ m @ c for m in mats)
    return CoupledRep(
        j1=rep.j1,
        j2=rep.j2,
        dim=rep.dim,
        M=move(rep.M),
        N=move(rep.N),
        I=move(rep.I),
        K=move(rep.K),
        metric=MetricOperator(c.conj().T @ rep.metric.eta @ c),
        epsilon=rep.epsilon,
        basis=basis,
        labels=tuple(labels),
    )


def rotation_basis(rep: CoupledRep) -> tuple[np.ndarray, CoupledRep]:
    """Change a canonical bundle to the basis diagonalizing I^2 and I3.

    Returns the basis-change matrix (columns are the new basis vectors in
    canonical components, built from Clebsch-Gordan coefficients) together
    with the transformed bundle. Column labels run over total spin s
    descending, then sigma descending, block by block.
    """
    if rep.basis != CANONICAL:
        raise WrongRepShape(f"expected a canonical-basis bundle, got {rep.basis!r}")
    if rep.is_diagonal:
        c = _cg_block(rep.j1, rep.j1)
        labels = _rotation_block_labels(rep.j1, rep.j1)
    else:
        c = _block_diag(_cg_block(rep.j1, rep.j2), _cg_block(rep.j2, rep.j1))
        labels = _rotation_block_labels(rep.j1, rep.j2) + _rotation_block_labels(
            rep.j2, rep.j1
        )
    return c, _transform(rep, c, ROTATION, labels)


def orthonormal_basis(rep: CoupledRep) -> CoupledRep:
    """Diagonalize the metric of a rotation-basis two-weight bundle.

    New basis vectors are (|block0; s,sigma> +- |block1; s,sigma>)/sqrt(2);
    the metric becomes diagonal with entries +-1 and the signature can be
    read off directly. Equal-weight bundles are already orthonormal in the
    rotation basis and are rejected here.
    """
    if rep.is_diagonal:
        raise WrongRepShape("equal-weight bundles are orthonormal in the rotation basis")
    if rep.basis != ROTATION:
        raise WrongRepShape(f"expected a rotation-basis bundle, got {rep.basis!r}")
    n = rep.dim // 2
    eye = np.eye(n, dtype=complex)
    c2 = np.vstack([np.hstack([eye, eye]), np.hstack([eye, -eye])]) / np.sqrt(2.0)
    labels = [
        {"sign": sign, "twice_s": lab["twice_s"], "twice_sigma": lab["twice_sigma"]}
        for sign in (1, -1)
        for lab in rep.labels[:n]
    ]
    return _transform(rep, c2, ORTHONORMAL, labels)


def rep_signature(rep: CoupledRep, tols: Tolerances = DEFAULT_TOLS) -> tuple[int, int]:
    """Eigenvalue signature (n_plus, n_minus) of the bundle's metric."""
    return signature(rep.metric.eta, tols)
