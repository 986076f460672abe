"""
Partial braidings c_i on V^(x)n and the quantum symmetrizer.

Basis tuples (i_1, ..., i_n) are encoded as integers with the first slot as
the most significant base-d digit. The symmetrizer follows the recursion

    S_1 = id,    S_n = S_{n-1,1} (S_{n-1} (x) id),
    S_{n-1,1} = id + c_{n-1} + c_{n-2} c_{n-1} + ... + c_1 ... c_{n-1}.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from algebra.exactla import (
    MonomialOperator,
    SparseMatrix,
    SparseVec,
    compose,
    tensor,
)
from braided.braiding import MonomialBraiding


def slot_arrays(c: MonomialBraiding, n: int, i: int) -> tuple[np.ndarray, np.ndarray]:
    """
    Index arrays for c acting in slots (i, i+1) of V^(x)n, 1 <= i <= n-1.

    Returns (image, pair): basis index t goes to image[t], scaled by the
    coefficient of the slot pair pair[t] = x * d + y.
    """
    if not 1 <= i <= n - 1:
        raise ValueError(f"partial braiding c_{i} needs 1 <= i <= {n - 1}")
    d = c.dim
    idx = np.arange(d ** n, dtype=np.int64)
    hi = d ** (n - i)
    lo = d ** (n - i - 1)
    x = (idx // hi) % d
    y = (idx // lo) % d
    sigma = np.asarray(c.solution.sigma, dtype=np.int64)
    tau = np.asarray(c.solution.tau, dtype=np.int64)
    base = idx - x * hi - y * lo
    image = base + sigma[x, y] * hi + tau[y, x] * lo
    return image, x * d + y


def operator_from_arrays(c: MonomialBraiding, image: np.ndarray, pair: np.ndarray) -> MonomialOperator:
    flat = [v for row in c.R for v in row]
    coeff = [flat[k] for k in pair.tolist()]
    return MonomialOperator(image.tolist(), coeff, c.field, check=False)


def c_i(c: MonomialBraiding, n: int, i: int) -> MonomialOperator:
    """id^(i-1) (x) c (x) id^(n-i-1) as a monomial operator on d^n."""
    return operator_from_arrays(c, *slot_arrays(c, n, i))


def partial_braidings(c: MonomialBraiding, n: int) -> list[MonomialOperator]:
    """[c_1, ..., c_{n-1}]."""
    return [c_i(c, n, i) for i in range(1, n)]


def add_into(total: SparseVec, vec: SparseVec) -> None:
    for k, v in vec.items():
        prev = total.get(k)
        if prev is None:
            total[k] = v
        else:
            s = prev + v
            if s.is_zero():
                del total[k]
            else:
                total[k] = s


def apply_shuffle(ops: Sequence[MonomialOperator], vec: SparseVec) -> SparseVec:
    """
    S_{m,1} applied to vec, where ops = [c_1, ..., c_m] on V^(x)(m+1).

    u_0 = vec, u_k = c_{m-k+1} u_{k-1}; the result is the sum of all u_k.
    """
    total = dict(vec)
    cur = vec
    for op in reversed(ops):
        cur = op.apply(cur)
        if not cur:
            break
        add_into(total, cur)
    return total


def extend_right(vec: SparseVec, d: int, v: int) -> SparseVec:
    """vec (x) w_v."""
    return {k * d + v: x for k, x in vec.items()}


def symmetrizer_columns(c: MonomialBraiding, n: int) -> list[SparseVec]:
    """Column j of S_n is S_n e_j, built degree by degree."""
    if n < 1:
        raise ValueError(f"symmetrizer needs n >= 1, got {n}")
    d = c.dim
    one = c.field.one()
    cols: list[SparseVec] = [{k: one} for k in range(d)]
    for m in range(2, n + 1):
        ops = partial_braidings(c, m)
        cols = [apply_shuffle(ops, extend_right(u, d, v)) for u in cols for v in range(d)]
    return cols


def symmetrizer(c: MonomialBraiding, n: int) -> SparseMatrix:
    """The n-th quantum symmetrizer on V^(x)n."""
    cols = symmetrizer_columns(c, n)
    return SparseMatrix.from_columns(c.dim ** n, cols, c.field)


def shuffle_terms(c: MonomialBraiding, m: int) -> list[MonomialOperator]:
    """id, c_{m-1}, c_{m-2} c_{m-1}, ..., c_1 ... c_{m-1} on V^(x)m."""
    ops = partial_braidings(c, m)
    cur = MonomialOperator.identity(c.dim ** m, c.field)
    terms = [cur]
    for op in reversed(ops):
        cur = compose(op, cur)
        terms.append(cur)
    return terms


def symmetrizer_terms(c: MonomialBraiding, n: int) -> list[MonomialOperator]:
    """The n! monomial summands of S_n, one per permutation."""
    if n < 1:
        raise ValueError(f"symmetrizer needs n >= 1, got {n}")
    ident = MonomialOperator.identity(c.dim, c.field)
    terms = [ident]
    for m in range(2, n + 1):
        lifted = [tensor(t, ident) for t in terms]
        terms = [compose(s, t) for s in shuffle_terms(c, m) for t in lifted]
    return terms
