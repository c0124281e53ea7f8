"""Exact linear algebra over the integers for small matrices.

Matrices are immutable tuples of row tuples of Python ints.  Everything
here is fraction free: determinants use the Bareiss scheme, and row
reduction is the Hermite normal form computed with elementary unimodular
row operations whose product is tracked, which gives integer kernels that
are automatically saturated (a primitive basis of the full lattice of
integer solutions, not just a finite-index sublattice).

Sizes in this package stay below 15 x 15, so no effort is spent on
asymptotics; clarity and exactness win.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

Vec = tuple[int, ...]
Mat = tuple[Vec, ...]


def freeze(rows: Iterable[Sequence[int]]) -> Mat:
    """Copy ``rows`` into the canonical immutable representation."""
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(m: Mat) -> Mat:
    return tuple(zip(*m)) if m else ()


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(m: Mat, v: Vec) -> Vec:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def is_zero(v: Sequence[int]) -> bool:
    return all(x == 0 for x in v)


def det(m: Mat) -> int:
    """Determinant by the fraction-free Bareiss elimination."""
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _row_sub(rows: list[list[int]], i: int, j: int, q: int) -> None:
    """rows[i] -= q * rows[j], in place."""
    ri, rj = rows[i], rows[j]
    for c in range(len(ri)):
        ri[c] -= q * rj[c]


def hermite_row_form(m: Mat) -> tuple[Mat, Mat]:
    """Row Hermite normal form with its unimodular transform.

    Returns ``(h, u)`` with ``u @ m == h``, ``u`` unimodular, ``h`` in row
    echelon form with positive pivots and the entries above each pivot
    reduced into ``[0, pivot)``.  Zero rows of ``h`` are collected at the
    bottom; the matching rows of ``u`` span the left kernel of ``m``.
    """
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rows = [list(row) for row in m]
    u = [list(row) for row in identity(nrows)]

    def swap(i: int, j: int) -> None:
        rows[i], rows[j] = rows[j], rows[i]
        u[i], u[j] = u[j], u[i]

    def combine(i: int, j: int, q: int) -> None:
        _row_sub(rows, i, j, q)
        _row_sub(u, i, j, q)

    pivot_row = 0
    for col in range(ncols):
        live = [i for i in range(pivot_row, nrows) if rows[i][col] != 0]
        if not live:
            continue
        # Euclid on the column entries until a single nonzero survives.
        while len(live) > 1:
            base = min(live, key=lambda i: abs(rows[i][col]))
            for i in live:
                if i == base:
                    continue
                q = rows[i][col] // rows[base][col]
                if q:
                    combine(i, base, q)
            live = [i for i in range(pivot_row, nrows) if rows[i][col] != 0]
        swap(pivot_row, live[0])
        if rows[pivot_row][col] < 0:
            rows[pivot_row] = [-x for x in rows[pivot_row]]
            u[pivot_row] = [-x for x in u[pivot_row]]
        p = rows[pivot_row][col]
        for i in range(pivot_row):
            q = rows[i][col] // p
            if q:
                combine(i, pivot_row, q)
        pivot_row += 1
        if pivot_row == nrows:
            break
    return freeze(rows), freeze(u)


def hnf_basis(rows: Iterable[Sequence[int]]) -> Mat:
    """Canonical basis of the row span: HNF with zero rows dropped.

    Two integer row sets span the same sublattice exactly when their
    ``hnf_basis`` outputs are equal.
    """
    frozen = freeze(rows)
    if not frozen:
        return ()
    h, _ = hermite_row_form(frozen)
    return tuple(row for row in h if not is_zero(row))


def kernel_basis(m: Mat) -> Mat:
    """Basis of the right kernel ``{x : m @ x == 0}`` as rows, saturated.

    Computed from the unimodular transform of the Hermite form of the
    transpose, then put into canonical HNF shape.  Because the transform
    is invertible over Z, every integer solution is an integer combination
    of the returned rows.
    """
    if not m or not m[0]:
        n = len(m[0]) if m else 0
        return identity(n)
    h, u = hermite_row_form(transpose(m))
    raw = tuple(urow for urow, hrow in zip(u, h) if is_zero(hrow))
    return hnf_basis(raw)


def hnf_contains(hnf_rows: Mat, v: Vec) -> bool:
    """Membership of ``v`` in the row span, given a basis in HNF shape."""
    w = list(v)
    for row in hnf_rows:
        p = next((c for c, x in enumerate(row) if x != 0), None)
        if p is None:
            continue
        if w[p] == 0:
            continue
        q, r = divmod(w[p], row[p])
        if r != 0:
            return False
        for c in range(len(w)):
            w[c] -= q * row[c]
    return is_zero(w)


def spans_equal(a: Iterable[Sequence[int]], b: Iterable[Sequence[int]]) -> bool:
    return hnf_basis(a) == hnf_basis(b)
