"""
Hilbert series of the finite diagonal types, as integer coefficient lists.
"""

from typing import Optional, Sequence

import numpy as np

from braided.diagonal import CartanType


def series_product(a: Sequence[int], b: Sequence[int], cap: Optional[int] = None) -> list[int]:
    """Product of two polynomials in t, truncated after degree `cap` if given."""
    out = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)).tolist()
    if cap is not None:
        out = out[:cap + 1]
    return [int(x) for x in out]


def quantum_integer(degree: int, height: int) -> list[int]:
    """(1 - t^(degree*height)) / (1 - t^degree) = 1 + t^degree + ... + t^(degree*(height-1))."""
    if degree < 1 or height < 1:
        raise ValueError(f"need degree >= 1 and height >= 1, got ({degree}, {height})")
    out = [0] * (degree * (height - 1) + 1)
    for k in range(height):
        out[k * degree] = 1
    return out


def pbw_series(pbw: Sequence[tuple[int, int]]) -> list[int]:
    series = [1]
    for degree, height in pbw:
        series = series_product(series, quantum_integer(degree, height))
    return series


CARTAN_PBW = {
    "A1": lambda N: ((1, N),),
    "A1xA1": lambda N: ((1, N), (1, N)),
    "A2": lambda N: ((1, N), (1, N), (2, N)),
    "superA2": lambda N: ((1, 2), (1, 2), (2, N)),
}


def cartan_series(name: str, order: int) -> list[int]:
    """
    Hilbert series of a diagonal type with all vertices at a root of order `order`
    (for super A2, `order` is the order of q12*q21).

    Args:
        name: one of "A1", "A1xA1", "A2", "superA2"
        order: root-of-unity order N >= 2

    Returns:
        Coefficients [dim B^0, dim B^1, ...]
    """
    if name not in CARTAN_PBW:
        raise ValueError(f"no closed form for type {name!r}; known: {', '.join(CARTAN_PBW)}")
    return pbw_series(CARTAN_PBW[name](order))


def cartan_type_series(ct: CartanType) -> list[int]:
    return pbw_series(ct.pbw)


def hilbert_polynomial(dims: Sequence[int]) -> str:
    """Render [1, 2, 1] as '1 + 2t + t^2'."""
    terms = []
    for k, v in enumerate(dims):
        if v == 0:
            continue
        if k == 0:
            terms.append(str(v))
            continue
        coef = "" if v == 1 else str(v)
        power = "t" if k == 1 else f"t^{k}"
        terms.append(coef + power)
    return " + ".join(terms) if terms else "0"
