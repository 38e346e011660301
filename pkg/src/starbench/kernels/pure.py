"""Pure-numpy kernels: the fallback when the compiled extension is absent.

Each function mirrors its compiled twin exactly, including the witness
contract: the lexicographically first violating tuple is returned, scanning
indices in ascending order (and, for distributivity, the left law before the
right law at each triple).

Tables are dense int32 arrays, table[i, j] = index of op(i, j).
"""

from __future__ import annotations

from typing import Optional, Tuple

import numpy as np

BACKEND = "pure"


def first_assoc_violation(table: np.ndarray) -> Optional[Tuple[int, int, int]]:
    """First (x, y, z) with op(op(x,y),z) != op(x,op(y,z)), else None."""
    t = np.ascontiguousarray(table)
    n = t.shape[0]
    for x in range(n):
        row = t[x]
        lhs = t[row, :]  # lhs[y, z] = t[t[x, y], z]
        rhs = row[t]     # rhs[y, z] = t[x, t[y, z]]
        bad = lhs != rhs
        if bad.any():
            flat = int(np.argmax(bad))
            return (x, flat // n, flat % n)
    return None


def first_distrib_violation(
    add: np.ndarray, mul: np.ndarray
) -> Optional[Tuple[int, int, int, int]]:
    """First (side, x, y, z) breaking distributivity; side 0=left, 1=right.

    Left law:  x*(y+z) == x*y + x*z
    Right law: (y+z)*x == y*x + z*x
    At a given (x, y, z) the left law is checked first.
    """
    a = np.ascontiguousarray(add)
    m = np.ascontiguousarray(mul)
    n = a.shape[0]
    for x in range(n):
        mrow = m[x]        # x*y over y
        mcol = m[:, x]     # y*x over y
        left_lhs = mrow[a]                      # x*(y+z)
        left_rhs = a[mrow[:, None], mrow[None, :]]   # x*y + x*z
        right_lhs = mcol[a]                     # (y+z)*x
        right_rhs = a[mcol[:, None], mcol[None, :]]  # y*x + z*x
        bad_l = left_lhs != left_rhs
        bad_r = right_lhs != right_rhs
        bad = bad_l | bad_r
        if bad.any():
            flat = int(np.argmax(bad))
            y, z = flat // n, flat % n
            side = 0 if bad_l[y, z] else 1
            return (side, x, y, z)
    return None


def first_antimult_violation(
    mul: np.ndarray, star: np.ndarray
) -> Optional[Tuple[int, int]]:
    """First (x, y) with star(x*y) != star(y)*star(x), else None."""
    m = np.ascontiguousarray(mul)
    s = np.ascontiguousarray(star)
    n = m.shape[0]
    for x in range(n):
        lhs = s[m[x]]        # (x*y)^*
        rhs = m[s, s[x]]     # y^* * x^*
        bad = lhs != rhs
        if bad.any():
            return (x, int(np.argmax(bad)))
    return None


def semi_proper_witness(mul: np.ndarray, star: np.ndarray) -> Optional[int]:
    """First a != 0 with a*r*star(a) == 0 for every r, else None.

    Index 0 is the zero element by construction, so "== 0" is "index == 0".
    """
    m = np.ascontiguousarray(mul)
    s = np.ascontiguousarray(star)
    n = m.shape[0]
    for a in range(1, n):
        products = m[m[a], s[a]]  # (a*r)*star(a) over r
        if not products.any():
            return a
    return None
