"""
Graded dimensions of Nichols algebras and the finiteness scanner.

dim B^n(V) = rank S_n. Instead of forming S_n, a basis of Im S_{n-1} is
carried forward: Im S_n = S_{n-1,1}(Im S_{n-1} (x) V). The braid group
preserves the span of every orbit of basis tuples, so each candidate lives in
one orbit and is reduced only against that orbit's echelon basis.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from algebra.exactla import Echelon, SparseVec
from braided.braiding import MonomialBraiding
from config import DEFAULT_BUDGET_SECS, MAX_NONZEROS
from nichols.hilbert import hilbert_polynomial
from nichols.symmetrizer import apply_shuffle, extend_right, operator_from_arrays, slot_arrays

# candidates between budget checks inside one degree
CHECK_EVERY = 256


class BudgetExceeded(RuntimeError):
    """The scan ran out of time or memory; `dims` and `stats` hold what was finished."""

    def __init__(self, reason: str, dims: list[int], stats: list[DegreeStats]):
        super().__init__(reason)
        self.reason = reason
        self.dims = dims
        self.stats = stats


@dataclass
class Budget:
    seconds: Optional[float] = DEFAULT_BUDGET_SECS
    max_nonzeros: int = MAX_NONZEROS
    started: float = field(default_factory=time.monotonic)

    def elapsed(self) -> float:
        return time.monotonic() - self.started

    def check(self, nonzeros: int, dims: list[int], stats: list[DegreeStats]) -> None:
        if self.seconds is not None and self.elapsed() > self.seconds:
            raise BudgetExceeded(f"time budget of {self.seconds:g}s exceeded", list(dims), list(stats))
        if nonzeros > self.max_nonzeros:
            raise BudgetExceeded(
                f"memory budget exceeded ({nonzeros} stored nonzeros > {self.max_nonzeros})",
                list(dims), list(stats),
            )


@dataclass(frozen=True)
class DegreeStats:
    degree: int
    candidates: int
    rank: int
    orbits: int
    nonzeros: int
    seconds: float

    def as_dict(self) -> dict:
        return {
            "degree": self.degree,
            "candidates": self.candidates,
            "rank": self.rank,
            "orbits": self.orbits,
            "nonzeros": self.nonzeros,
            "seconds": round(self.seconds, 3),
        }


@dataclass(frozen=True)
class GradedDims:
    """dims[n] = dim B^n(V) for n = 0..len(dims)-1; finite once a zero is reached."""

    dims: tuple[int, ...]
    cap: int

    @property
    def finite(self) -> bool:
        return self.dims[-1] == 0

    @property
    def total(self) -> Optional[int]:
        return sum(self.dims) if self.finite else None

    @property
    def top_degree(self) -> Optional[int]:
        if not self.finite:
            return None
        return max(n for n, v in enumerate(self.dims) if v > 0)

    @property
    def verdict(self) -> str:
        return "finite" if self.finite else "undetermined"

    @property
    def degrees_computed(self) -> int:
        return len(self.dims) - 1

    def as_dict(self) -> dict:
        return {
            "dims": list(self.dims),
            "total": self.total,
            "top_degree": self.top_degree,
            "verdict": self.verdict,
            "degrees_computed": self.degrees_computed,
        }


def orbit_labels(images: list[np.ndarray], size: int) -> np.ndarray:
    """
    Label every point by the smallest point of its orbit under the group
    generated by the given permutations of range(size).
    """
    labels = np.arange(size, dtype=np.int64)
    while True:
        old = labels.copy()
        for img in images:
            # push along x -> img[x], then pull back
            np.minimum.at(labels, img, labels.copy())
            labels = np.minimum(labels, labels[img])
        labels = labels[labels]
        if np.array_equal(labels, old):
            return labels


def braid_orbits(c: MonomialBraiding, n: int) -> np.ndarray:
    """Orbit labels of basis tuples of V^(x)n under the braid group B_n."""
    size = c.dim ** n
    if n < 2:
        return np.arange(size, dtype=np.int64)
    images = [slot_arrays(c, n, i)[0] for i in range(1, n)]
    return orbit_labels(images, size)


def _run(c: MonomialBraiding, cap: int, budget: Budget, verbose: bool) -> tuple[list[int], list[DegreeStats]]:
    d = c.dim
    one = c.field.one()
    dims = [1, d]
    stats: list[DegreeStats] = []
    basis: list[SparseVec] = [{k: one} for k in range(d)]

    for n in range(2, cap + 1):
        t0 = time.monotonic()
        arrays = [slot_arrays(c, n, i) for i in range(1, n)]
        ops = [operator_from_arrays(c, image, pair) for image, pair in arrays]
        labels = orbit_labels([image for image, _ in arrays], d ** n)
        echelons: dict[int, Echelon] = {}
        accepted: list[SparseVec] = []
        carried = sum(len(u) for u in basis)
        candidates = 0
        for u in basis:
            for v in range(d):
                candidates += 1
                if candidates % CHECK_EVERY == 0:
                    budget.check(carried + sum(e.nonzeros for e in echelons.values()), dims, stats)
                img = apply_shuffle(ops, extend_right(u, d, v))
                if not img:
                    continue
                label = int(labels[next(iter(img))])
                ech = echelons.get(label)
                if ech is None:
                    ech = echelons[label] = Echelon(c.field)
                if ech.insert(img):
                    accepted.append(img)
                    carried += len(img)
        nonzeros = sum(e.nonzeros for e in echelons.values())
        budget.check(carried + nonzeros, dims, stats)

        dims.append(len(accepted))
        stats.append(DegreeStats(n, candidates, len(accepted), len(np.unique(labels)),
                                 nonzeros, time.monotonic() - t0))
        if verbose:
            s = stats[-1]
            print(f"[Scan] degree {n}: rank {s.rank} from {s.candidates} candidates "
                  f"({s.orbits} orbits, {s.nonzeros} nonzeros, {s.seconds:.2f}s)", file=sys.stderr)
        if not accepted:
            break
        basis = accepted
    return dims, stats


def graded_dims(c: MonomialBraiding, cap: int, budget: Optional[Budget] = None,
                verbose: bool = False) -> GradedDims:
    """
    dim B^n(V) for n = 0..cap, stopping after the first zero.

    Raises:
        BudgetExceeded: when `budget` runs out before the cap or a zero rank.
    """
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    budget = budget or Budget()
    dims, _ = _run(c, cap, budget, verbose)
    return GradedDims(tuple(dims), cap)


@dataclass
class ScanReport:
    dims: GradedDims
    stats: list[DegreeStats]
    elapsed: float
    budget_exceeded: bool = False
    reason: Optional[str] = None

    @property
    def hilbert(self) -> str:
        return hilbert_polynomial(self.dims.dims)

    def as_dict(self) -> dict:
        out = self.dims.as_dict()
        out["hilbert"] = self.hilbert
        out["cap"] = self.dims.cap
        out["budget_exceeded"] = self.budget_exceeded
        if self.reason:
            out["reason"] = self.reason
        out["stats"] = [s.as_dict() for s in self.stats]
        return out


def finiteness_scan(c: MonomialBraiding, cap: int, budget: Optional[Budget] = None,
                    verbose: bool = False) -> ScanReport:
    """
    graded_dims with timing, per-degree statistics and the Hilbert polynomial.

    A budget overrun does not raise: the report keeps the degrees finished so
    far and is flagged undetermined.
    """
    if cap < 2:
        raise ValueError(f"finiteness scan needs cap >= 2, got {cap}")
    budget = budget or Budget()
    try:
        dims, stats = _run(c, cap, budget, verbose)
    except BudgetExceeded as e:
        if verbose:
            print(f"[Scan] {e.reason}; stopping after degree {len(e.dims) - 1}", file=sys.stderr)
        return ScanReport(GradedDims(tuple(e.dims), cap), e.stats, budget.elapsed(), True, e.reason)
    return ScanReport(GradedDims(tuple(dims), cap), stats, budget.elapsed())
