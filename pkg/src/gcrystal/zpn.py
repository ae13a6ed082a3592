"""Linear algebra over the chain ring Z/p^N on plain integer matrices.

Valuation-pivot elimination gives exact solutions, nullspaces and
diagonalizations; used for sigma-semilinear systems, where Frobenius is
Z/p^N-linear on power-basis coordinates.
"""

from __future__ import annotations

from typing import List, Optional, Tuple


def _vp(a: int, p: int, N: int, pn: int) -> int:
    a %= pn
    if a == 0:
        return N
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


def diagonalize(rows: List[List[int]], p: int, N: int):
    """Return (m, b_ops, vmat, exps) with rowops * A * colops = diag(p^exps).

    ``m`` is the transformed matrix (diagonal), ``b_ops`` a closure applying
    the accumulated row operations to a right-hand side, ``vmat`` the column
    operation matrix (x = vmat @ y), ``exps`` the diagonal exponents (N for
    zero pivots).  Works for rectangular shapes.
    """
    pn = p ** N
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    m = [[v % pn for v in row] for row in rows]
    vmat = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]
    rowlog: List[Tuple] = []
    r = min(nr, nc)
    exps = [N] * nc
    for k in range(r):
        best, bi, bj = N, -1, -1
        for i in range(k, nr):
            for j in range(k, nc):
                v = _vp(m[i][j], p, N, pn)
                if v < best:
                    best, bi, bj = v, i, j
                    if v == 0:
                        break
            if best == 0:
                break
        if bi < 0:
            break
        if bi != k:
            m[k], m[bi] = m[bi], m[k]
            rowlog.append(("swap", k, bi))
        if bj != k:
            for row in m:
                row[k], row[bj] = row[bj], row[k]
            for row in vmat:
                row[k], row[bj] = row[bj], row[k]
        exps[k] = best
        pe = p ** best
        uinv = pow(m[k][k] // pe, -1, pn)
        for i in range(nr):
            if m[i][k]:
                m[i][k] = m[i][k] * uinv % pn
        for i in range(nc):
            vmat[i][k] = vmat[i][k] * uinv % pn
        for j in range(k + 1, nc):
            if m[k][j]:
                f = (m[k][j] // pe) % pn
                for i in range(nr):
                    if m[i][k]:
                        m[i][j] = (m[i][j] - f * m[i][k]) % pn
                for i in range(nc):
                    vmat[i][j] = (vmat[i][j] - f * vmat[i][k]) % pn
        for i in range(k + 1, nr):
            if m[i][k]:
                f = (m[i][k] // pe) % pn
                for j in range(k, nc):
                    m[i][j] = (m[i][j] - f * m[k][j]) % pn
                rowlog.append(("axpy", i, k, f))

    def apply_rowops(b: List[int]) -> List[int]:
        b = [v % pn for v in b]
        for op in rowlog:
            if op[0] == "swap":
                _, i, j = op
                b[i], b[j] = b[j], b[i]
            else:
                _, i, k2, f = op
                b[i] = (b[i] - f * b[k2]) % pn
        return b

    return m, apply_rowops, vmat, exps


def solve(rows: List[List[int]], rhs: List[int], p: int, N: int
          ) -> Optional[List[int]]:
    """One solution of rows @ x = rhs over Z/p^N, or None."""
    pn = p ** N
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    _, apply_rowops, vmat, exps = diagonalize(rows, p, N)
    b = apply_rowops(list(rhs))
    y = [0] * nc
    for i in range(min(nr, nc)):
        pe = p ** exps[i]
        if b[i] % pe:
            return None
        y[i] = (b[i] // pe) % pn
    for i in range(min(nr, nc), nr):
        if b[i] % pn:
            return None
    return [sum(vmat[i][j] * y[j] for j in range(nc)) % pn
            for i in range(nc)]


def nullspace(rows: List[List[int]], p: int, N: int) -> List[List[int]]:
    """Generators of {x : rows @ x = 0 over Z/p^N}.

    Returns one generator per column: column j of the column-op matrix
    scaled by p^(N - e_j); zero generators are dropped.
    """
    pn = p ** N
    nc = len(rows[0]) if rows else 0
    _, _, vmat, exps = diagonalize(rows, p, N)
    out = []
    for j in range(nc):
        e = exps[j]
        if e == 0:
            continue
        scale = p ** (N - e)
        vec = [vmat[i][j] * scale % pn for i in range(nc)]
        if any(vec):
            out.append(vec)
    return out
