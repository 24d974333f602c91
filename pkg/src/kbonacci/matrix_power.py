"""Fast exact evaluation of f(n) and its partial sums by matrix powering.

The k x k companion matrix of the recurrence (first row all ones,
subdiagonal identity) advances the state vector (f(n), ..., f(n-k+1)) by
one index.  Binary exponentiation therefore reaches index n in O(log n)
matrix squarings, each a k^3 batch of big-integer multiplications, instead
of the O(n) additions of the linear engine.  A (k+1) x (k+1) augmentation
carries the running sum alongside the state so partial sums propagate the
same way.  No eigenvalues, no floats: exactness is the point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .sequence import _check_k, _check_n, kbonacci_prefix, kbonacci_recurrence, partial_sum_direct

Matrix = list[list[int]]


@dataclass
class OpCount:
    """Tally of big-integer multiplications performed, for benchmarking."""

    matrix_products: int = 0
    scalar_mults: int = 0


def companion_matrix(k: int) -> Matrix:
    """First row all ones, ones on the subdiagonal, zeros elsewhere."""
    _check_k(k)
    rows = [[1] * k]
    for r in range(1, k):
        rows.append([1 if c == r - 1 else 0 for c in range(k)])
    return rows


def augmented_matrix(k: int) -> Matrix:
    """Companion matrix extended with a running-sum row.

    Acts on (S(n), f(n), ..., f(n-k+1)) with S(n) = f(0) + ... + f(n) and
    produces the state for index n+1.
    """
    _check_k(k)
    dim = k + 1
    rows = [[1] * dim, [0] + [1] * k]
    for r in range(2, dim):
        rows.append([1 if c == r - 1 else 0 for c in range(dim)])
    return rows


def identity_matrix(dim: int) -> Matrix:
    return [[1 if c == r else 0 for c in range(dim)] for r in range(dim)]


def mat_mul(a: Matrix, b: Matrix, ops: OpCount | None = None) -> Matrix:
    dim = len(a)
    bt = list(zip(*b))
    if ops is not None:
        ops.matrix_products += 1
        ops.scalar_mults += dim * dim * dim
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(m: Matrix, v: list[int], ops: OpCount | None = None) -> list[int]:
    if ops is not None:
        ops.scalar_mults += len(m) * len(v)
    return [sum(x * y for x, y in zip(row, v)) for row in m]


def mat_pow(m: Matrix, e: int, ops: OpCount | None = None) -> Matrix:
    """m**e by binary exponentiation; e = 0 gives the identity."""
    if e < 0:
        raise ValueError(f"exponent must be non-negative, got {e}")
    result = identity_matrix(len(m))
    base = m
    while e:
        if e & 1:
            result = mat_mul(result, base, ops)
        e >>= 1
        if e:
            base = mat_mul(base, base, ops)
    return result


def kbonacci_matrix(k: int, n: int, ops: OpCount | None = None) -> int:
    """Return f(n) via companion-matrix powering; exact for any n.

    Indices below k delegate to the recurrence engine, which owns the base
    cases.
    """
    _check_k(k)
    _check_n(n)
    if n < k:
        return kbonacci_recurrence(k, n)
    state = kbonacci_prefix(k, k - 1)[::-1]  # (f(k-1), ..., f(0))
    power = mat_pow(companion_matrix(k), n - (k - 1), ops)
    return mat_vec(power, state, ops)[0]


def partial_sum_matrix(k: int, n: int, ops: OpCount | None = None) -> int:
    """Return f(0) + ... + f(n) via augmented-matrix powering; exact."""
    _check_k(k)
    _check_n(n)
    if n < k:
        return partial_sum_direct(k, n)
    prefix = kbonacci_prefix(k, k - 1)
    state = [sum(prefix)] + prefix[::-1]  # (S(k-1), f(k-1), ..., f(0))
    power = mat_pow(augmented_matrix(k), n - (k - 1), ops)
    return mat_vec(power, state, ops)[0]
