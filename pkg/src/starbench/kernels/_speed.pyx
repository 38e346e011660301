# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot exhaustive scans.

Witness contract is identical to kernels/pure.py: lexicographically first
violation, left distributive law before right at each triple. Inputs are
C-contiguous int32 arrays.
"""

BACKEND = "compiled"


def first_assoc_violation(const int[:, ::1] table):
    cdef Py_ssize_t n = table.shape[0]
    cdef Py_ssize_t x, y, z
    cdef int xy, yz
    for x in range(n):
        for y in range(n):
            xy = table[x, y]
            for z in range(n):
                yz = table[y, z]
                if table[xy, z] != table[x, yz]:
                    return (x, y, z)
    return None


def first_distrib_violation(const int[:, ::1] add, const int[:, ::1] mul):
    cdef Py_ssize_t n = add.shape[0]
    cdef Py_ssize_t x, y, z
    cdef int xy, xz, yx, zx, yz_sum
    for x in range(n):
        for y in range(n):
            xy = mul[x, y]
            yx = mul[y, x]
            for z in range(n):
                yz_sum = add[y, z]
                xz = mul[x, z]
                zx = mul[z, x]
                if mul[x, yz_sum] != add[xy, xz]:
                    return (0, x, y, z)
                if mul[yz_sum, x] != add[yx, zx]:
                    return (1, x, y, z)
    return None


def first_antimult_violation(const int[:, ::1] mul, const int[::1] star):
    cdef Py_ssize_t n = mul.shape[0]
    cdef Py_ssize_t x, y
    for x in range(n):
        for y in range(n):
            if star[mul[x, y]] != mul[star[y], star[x]]:
                return (x, y)
    return None


def semi_proper_witness(const int[:, ::1] mul, const int[::1] star):
    cdef Py_ssize_t n = mul.shape[0]
    cdef Py_ssize_t a, r
    cdef int sa
    cdef bint all_zero
    for a in range(1, n):
        sa = star[a]
        all_zero = True
        for r in range(n):
            if mul[mul[a, r], sa] != 0:
                all_zero = False
                break
        if all_zero:
            return a
    return None
