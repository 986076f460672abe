"""
Diagonal braidings: the q_ij matrix, rank-two Dynkin data, and a small table
of Cartan types whose Nichols algebras are finite-dimensional.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from algebra.cyclo import CycloNum
from braided.braiding import MonomialBraiding


@dataclass(frozen=True)
class DiagonalProfile:
    """q[i][j] with c(w_i (x) w_j) = q[i][j] w_j (x) w_i."""

    q: tuple[tuple[CycloNum, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.q)

    def dynkin(self) -> tuple[CycloNum, ...]:
        """(q11,) in rank one; (q11, q12*q21, q22) in rank two."""
        q = self.q
        if self.rank == 1:
            return (q[0][0],)
        if self.rank == 2:
            return q[0][0], q[0][1] * q[1][0], q[1][1]
        raise ValueError(f"Dynkin data is only tabulated for rank <= 2, got rank {self.rank}")


@dataclass(frozen=True)
class CartanType:
    """
    A finite-dimensional diagonal type.

    `pbw` lists (degree, height) for each PBW generator: the Hilbert series is
    the product of (1 - t^(degree*height)) / (1 - t^degree).
    """

    name: str
    dimension: int
    pbw: tuple[tuple[int, int], ...]


def diagonal_profile(c: MonomialBraiding) -> Optional[DiagonalProfile]:
    sol = c.solution
    for i in range(c.dim):
        for j in range(c.dim):
            if sol.sigma[i][j] != j or sol.tau[j][i] != i:
                return None
    return DiagonalProfile(c.R)


def _order(x: CycloNum) -> Optional[int]:
    return x.root_order()


def dynkin_type(data: tuple[CycloNum, ...]) -> Optional[CartanType]:
    """
    Look up rank-one data (q,) or rank-two data (q11, q12*q21, q22).

    Returns None for anything outside A1, A1 x A1, A2 and super A2.
    """
    if len(data) == 1:
        N = _order(data[0])
        if N is None or N == 1:
            return None
        return CartanType("A1", N, ((1, N),))

    q11, p, q22 = data
    N1, Np, N2 = _order(q11), _order(p), _order(q22)
    if N1 is None or Np is None or N2 is None:
        return None
    if p.is_one():
        if N1 == 1 or N2 == 1:
            return None
        return CartanType("A1xA1", N1 * N2, ((1, N1), (1, N2)))
    if q11 == q22 and N1 > 1 and (p * q11).is_one():
        return CartanType("A2", N1 ** 3, ((1, N1), (1, N1), (2, N1)))
    if q11 == -1 and q22 == -1 and Np > 2:
        return CartanType("superA2", 4 * Np, ((1, 2), (1, 2), (2, Np)))
    return None
