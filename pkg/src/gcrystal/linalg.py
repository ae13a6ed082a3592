"""Exact matrix arithmetic over a truncated Witt ring.

Matrices are immutable, stored flat (row-major, s coordinates per cell);
products run through the selected kernel.  Also provides unit-pivot
inversion, Smith form with witnesses over the local ring, Howell canonical
forms for column spans, and the division-free characteristic polynomial.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import NotIntegral, PrecisionLoss
from .witt import Coeffs, WittElem, WittRing


class WMatrix:
    __slots__ = ("ring", "n", "m", "data")

    def __init__(self, ring: WittRing, n: int, m: int, data):
        self.ring = ring
        self.n = n
        self.m = m
        self.data = tuple(data)
        assert len(self.data) == n * m * ring.s

    # -- constructors --------------------------------------------------------

    @classmethod
    def zeros(cls, ring: WittRing, n: int, m: Optional[int] = None):
        m = n if m is None else m
        return cls(ring, n, m, (0,) * (n * m * ring.s))

    @classmethod
    def identity(cls, ring: WittRing, n: int):
        out = cls.zeros(ring, n, n)
        return out._bulk_set({(i, i): ring.one_t for i in range(n)})

    @classmethod
    def from_rows(cls, ring: WittRing, rows: Sequence[Sequence]):
        n = len(rows)
        m = len(rows[0]) if n else 0
        data: List[int] = []
        for row in rows:
            assert len(row) == m
            for v in row:
                data.extend(_cell(ring, v))
        return cls(ring, n, m, data)

    @classmethod
    def diag(cls, ring: WittRing, cells: Sequence):
        n = len(cells)
        out = cls.zeros(ring, n, n)
        return out._bulk_set({(i, i): _cell(ring, c) for i, c in enumerate(cells)})

    @classmethod
    def diag_ppow(cls, ring: WittRing, exps: Sequence[int]):
        if any(e < 0 for e in exps):
            raise NotIntegral("negative p-power on the diagonal")
        return cls.diag(ring, [ring.from_int(ring.p ** e) for e in exps])

    @classmethod
    def perm(cls, ring: WittRing, pi: Sequence[int]):
        """Permutation matrix sending e_i to e_{pi[i]}."""
        out = cls.zeros(ring, len(pi), len(pi))
        return out._bulk_set({(pi[i], i): ring.one_t for i in range(len(pi))})

    @classmethod
    def random(cls, ring: WittRing, n: int, m: int, rng):
        return cls(ring, n, m,
                   [rng.randrange(ring.pn) for _ in range(n * m * ring.s)])

    # -- cell access ----------------------------------------------------------

    def entry(self, i: int, j: int) -> Coeffs:
        s = self.ring.s
        pos = (i * self.m + j) * s
        return self.data[pos:pos + s]

    def elem(self, i: int, j: int) -> WittElem:
        return WittElem(self.ring, self.entry(i, j))

    def rows(self) -> List[List[Coeffs]]:
        return [[self.entry(i, j) for j in range(self.m)] for i in range(self.n)]

    def _bulk_set(self, cells: dict) -> "WMatrix":
        s = self.ring.s
        data = list(self.data)
        for (i, j), c in cells.items():
            pos = (i * self.m + j) * s
            data[pos:pos + s] = c
        return WMatrix(self.ring, self.n, self.m, data)

    def with_entry(self, i: int, j: int, cell) -> "WMatrix":
        return self._bulk_set({(i, j): _cell(self.ring, cell)})

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "WMatrix":
        out = []
        for i in rows:
            for j in cols:
                out.extend(self.entry(i, j))
        return WMatrix(self.ring, len(rows), len(cols), out)

    def transpose(self) -> "WMatrix":
        out = []
        for j in range(self.m):
            for i in range(self.n):
                out.extend(self.entry(i, j))
        return WMatrix(self.ring, self.m, self.n, out)

    # -- arithmetic -----------------------------------------------------------

    def __matmul__(self, other: "WMatrix") -> "WMatrix":
        r = self.ring
        assert self.m == other.n and r == other.ring
        return WMatrix(r, self.n, other.m, r.kernel.mat_mul(
            self.data, other.data, self.n, self.m, other.m, r.s, r._red, r.pn))

    def __add__(self, other: "WMatrix") -> "WMatrix":
        r = self.ring
        return WMatrix(r, self.n, self.m,
                       r.kernel.mat_add(self.data, other.data, r.pn))

    def __sub__(self, other: "WMatrix") -> "WMatrix":
        r = self.ring
        return WMatrix(r, self.n, self.m,
                       r.kernel.mat_sub(self.data, other.data, r.pn))

    def __neg__(self) -> "WMatrix":
        return WMatrix(self.ring, self.n, self.m,
                       self.ring.kernel.mat_neg(self.data, self.ring.pn))

    def __eq__(self, other):
        return (isinstance(other, WMatrix) and self.n == other.n
                and self.m == other.m and self.ring == other.ring
                and self.data == other.data)

    def __hash__(self):
        return hash((self.ring, self.n, self.m, self.data))

    def scalar_mul(self, c) -> "WMatrix":
        r = self.ring
        ct = _cell(r, c)
        out = []
        for i in range(self.n):
            for j in range(self.m):
                out.extend(r.mul_t(self.entry(i, j), ct))
        return WMatrix(r, self.n, self.m, out)

    def frob(self, k: int = 1) -> "WMatrix":
        r = self.ring
        k %= r.s
        if k == 0:
            return self
        fm = r._frob_pows[k]
        return WMatrix(r, self.n, self.m, r.kernel.mat_cellmap(
            self.data, self.n * self.m, r.s, r.s, fm, r.pn))

    def map_ring(self, big: WittRing, emb: Tuple[int, ...]) -> "WMatrix":
        """Push entries through a ring embedding."""
        r = self.ring
        return WMatrix(big, self.n, self.m, big.kernel.mat_cellmap(
            self.data, self.n * self.m, r.s, big.s, emb, big.pn))

    def permute(self, rowp: Optional[Sequence[int]] = None,
                colp: Optional[Sequence[int]] = None) -> "WMatrix":
        """Rows i -> rowp[i], columns j -> colp[j]."""
        out = WMatrix.zeros(self.ring, self.n, self.m)
        cells = {}
        for i in range(self.n):
            for j in range(self.m):
                ti = rowp[i] if rowp else i
                tj = colp[j] if colp else j
                cells[(ti, tj)] = self.entry(i, j)
        return out._bulk_set(cells)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.data)

    def reduce_mod(self, k: int) -> "WMatrix":
        pk = self.ring.p ** min(k, self.ring.N)
        return WMatrix(self.ring, self.n, self.m,
                       [v % pk for v in self.data])

    def min_val(self) -> int:
        r = self.ring
        best = r.N
        for i in range(self.n):
            for j in range(self.m):
                best = min(best, r.val_t(self.entry(i, j)))
                if best == 0:
                    return 0
        return best

    def scale_rows_ppow(self, exps: Sequence[int]) -> "WMatrix":
        """Multiply row i by p^exps[i]; negative exponents must divide exactly."""
        r = self.ring
        cells = {}
        for i in range(self.n):
            e = exps[i]
            for j in range(self.m):
                c = self.entry(i, j)
                if e >= 0:
                    cells[(i, j)] = tuple(v * r.p ** e % r.pn for v in c)
                else:
                    cells[(i, j)] = r.divp_t(c, -e)
        return self._bulk_set(cells)

    def scale_cols_ppow(self, exps: Sequence[int]) -> "WMatrix":
        r = self.ring
        cells = {}
        for i in range(self.n):
            for j in range(self.m):
                e = exps[j]
                c = self.entry(i, j)
                if e >= 0:
                    cells[(i, j)] = tuple(v * r.p ** e % r.pn for v in c)
                else:
                    cells[(i, j)] = r.divp_t(c, -e)
        return self._bulk_set(cells)

    def det(self) -> WittElem:
        cp = charpoly(self)
        c0 = cp[0]
        if self.n % 2:
            c0 = self.ring.neg_t(c0)
        return WittElem(self.ring, c0)

    def inv(self) -> "WMatrix":
        """Inverse over the local ring; unit pivots always exist when the
        determinant is a unit."""
        r = self.ring
        n = self.n
        assert n == self.m
        a = [[self.entry(i, j) for j in range(n)] for i in range(n)]
        b = [[r.one_t if i == j else r.zero_t for j in range(n)]
             for i in range(n)]
        for k in range(n):
            piv = next((i for i in range(k, n) if r.is_unit_t(a[i][k])), None)
            if piv is None:
                raise PrecisionLoss("matrix is not invertible over the ring")
            a[k], a[piv] = a[piv], a[k]
            b[k], b[piv] = b[piv], b[k]
            inv = r.inv_t(a[k][k])
            a[k] = [r.mul_t(inv, v) for v in a[k]]
            b[k] = [r.mul_t(inv, v) for v in b[k]]
            for i in range(n):
                if i != k and not r.is_zero_t(a[i][k]):
                    f = a[i][k]
                    a[i] = [r.sub_t(u, r.mul_t(f, v))
                            for u, v in zip(a[i], a[k])]
                    b[i] = [r.sub_t(u, r.mul_t(f, v))
                            for u, v in zip(b[i], b[k])]
        return WMatrix.from_rows(r, b)

    def is_invertible(self) -> bool:
        return self.ring.is_unit_t(self.det().coeffs)

    def __repr__(self):
        rows = []
        for i in range(self.n):
            rows.append("[" + " ".join(str(list(self.entry(i, j)))
                                       for j in range(self.m)) + "]")
        return f"WMatrix({self.ring})\n" + "\n".join(rows)


def _cell(ring: WittRing, v) -> Coeffs:
    if isinstance(v, WittElem):
        return v.coeffs
    if isinstance(v, int):
        return ring.from_int(v)
    t = tuple(int(c) % ring.pn for c in v)
    assert len(t) == ring.s
    return t


def rand_gl(ring: WittRing, n: int, rng) -> WMatrix:
    while True:
        cand = WMatrix.random(ring, n, n, rng)
        if cand.is_invertible():
            return cand


# ---------------------------------------------------------------------------
# Characteristic polynomial (division-free Berkowitz iteration).

def charpoly(a: WMatrix) -> List[Coeffs]:
    """Coefficients of det(xI - a), constant term first, leading term 1."""
    r = a.ring
    n = a.n
    if n == 0:
        return [r.one_t]
    c = [r.one_t]  # leading-first vector for the 0x0 matrix
    for i in range(n):
        diag = a.entry(i, i)
        # Krylov column: first entries 1, -a_ii, then -(R M^t C).
        col = [r.one_t, r.neg_t(diag)]
        if i > 0:
            rrow = [a.entry(i, j) for j in range(i)]
            ccol = [a.entry(j, i) for j in range(i)]
            vec = ccol
            for _ in range(i):
                dot = r.zero_t
                for u in range(i):
                    dot = r.add_t(dot, r.mul_t(rrow[u], vec[u]))
                col.append(r.neg_t(dot))
                vec = [_mvdot(r, a, u, vec, i) for u in range(i)]
        new = [r.zero_t] * (i + 2)
        for row in range(i + 2):
            acc = r.zero_t
            for k in range(min(row, len(col) - 1) + 1):
                j = row - k
                if j <= i:
                    acc = r.add_t(acc, r.mul_t(col[k], c[j]))
            new[row] = acc
        c = new
    return list(reversed(c))


def _mvdot(r: WittRing, a: WMatrix, u: int, vec, i: int) -> Coeffs:
    acc = r.zero_t
    for t in range(i):
        acc = r.add_t(acc, r.mul_t(a.entry(u, t), vec[t]))
    return acc


# ---------------------------------------------------------------------------
# Smith normal form over the local ring, with GL(O) witnesses.

def snf_with_witnesses(mat: WMatrix) -> Tuple[WMatrix, List[int], WMatrix]:
    """U, exps, V with mat = U @ diag(p^exps) @ V and U, V in GL(O).

    Exponents come out sorted descending.  Raises PrecisionLoss when an
    elementary divisor is not determined at working precision.
    """
    r = mat.ring
    n, m = mat.n, mat.m
    assert n == m, "Smith form with witnesses implemented for square input"
    a = [[mat.entry(i, j) for j in range(m)] for i in range(n)]
    u = [[r.one_t if i == j else r.zero_t for j in range(n)] for i in range(n)]
    v = [[r.one_t if i == j else r.zero_t for j in range(m)] for i in range(m)]
    exps = [r.N] * n
    for k in range(n):
        bi = bj = -1
        best = r.N
        for i in range(k, n):
            for j in range(k, m):
                val = r.val_t(a[i][j])
                if val < best:
                    best, bi, bj = val, i, j
        if bi < 0:
            raise PrecisionLoss(
                "matrix not invertible at working precision (Smith form)")
        if bi != k:
            a[k], a[bi] = a[bi], a[k]
            for row in u:
                row[k], row[bi] = row[bi], row[k]
        if bj != k:
            for row in a:
                row[k], row[bj] = row[bj], row[k]
            v[k], v[bj] = v[bj], v[k]
        exps[k] = best
        pe = r.p ** best
        unit = r.divp_t(a[k][k], best)
        uinv = r.inv_t(unit)
        a[k] = [r.mul_t(uinv, x) for x in a[k]]
        for row in u:
            row[k] = r.mul_t(row[k], unit)
        for i in range(k + 1, n):
            if not r.is_zero_t(a[i][k]):
                q = r.divp_t(a[i][k], best)
                a[i] = [r.sub_t(x, r.mul_t(q, y)) for x, y in zip(a[i], a[k])]
                for rr in range(n):
                    u[rr][k] = r.add_t(u[rr][k], r.mul_t(q, u[rr][i]))
        for j in range(k + 1, m):
            if not r.is_zero_t(a[k][j]):
                q = r.divp_t(a[k][j], best)
                for i in range(n):
                    a[i][j] = r.sub_t(a[i][j], r.mul_t(q, a[i][k]))
                v[k] = [r.add_t(x, r.mul_t(q, y))
                        for x, y in zip(v[k], v[j])]
    order = sorted(range(n), key=lambda i: -exps[i])
    exps_sorted = [exps[i] for i in order]
    uw = WMatrix.from_rows(r, u).permute(colp=_inv_perm(order))
    vw = WMatrix.from_rows(r, v).permute(rowp=_inv_perm(order))
    return uw, exps_sorted, vw


def _inv_perm(order: Sequence[int]) -> List[int]:
    inv = [0] * len(order)
    for newpos, old in enumerate(order):
        inv[old] = newpos
    return inv


# ---------------------------------------------------------------------------
# Howell canonical form for column spans (submodules of O^d).

def howell_span(ring: WittRing, vectors: Iterable[Sequence]) -> Tuple[Tuple[Coeffs, ...], ...]:
    """Canonical generating set of the O-span of the given vectors.

    Vectors are sequences of cells; the result is a tuple of vectors in
    echelon order, unique for the span (Howell form over the chain ring).
    """
    vecs = [tuple(_cell(ring, c) for c in v) for v in vectors]
    d = len(vecs[0]) if vecs else 0
    pool = [v for v in vecs if any(not ring.is_zero_t(c) for c in v)]
    result = []
    pivots = []
    for col in range(d):
        cand = [v for v in pool if not ring.is_zero_t(v[col])]
        if not cand:
            continue
        best = min(ring.val_t(v[col]) for v in cand)
        piv = min(v for v in cand if ring.val_t(v[col]) == best)
        pool.remove(piv)
        unit = ring.divp_t(piv[col], best)
        uinv = ring.inv_t(unit)
        piv = tuple(ring.mul_t(uinv, c) for c in piv)
        newpool = []
        for v in pool:
            if not ring.is_zero_t(v[col]):
                q = ring.divp_t(v[col], best)
                v = tuple(ring.sub_t(x, ring.mul_t(q, y))
                          for x, y in zip(v, piv))
            if any(not ring.is_zero_t(c) for c in v):
                newpool.append(v)
        pool = newpool
        tail = ring.p ** (ring.N - best)
        closure = tuple(tuple(c * tail % ring.pn for c in cell) for cell in piv)
        if any(not ring.is_zero_t(c) for c in closure):
            pool.append(closure)
        result.append((col, best, piv))
        pivots.append((col, best))
    # reduce entries above each pivot for canonicity
    rows = [list(pr[2]) for pr in result]
    for idx in range(len(rows) - 1, -1, -1):
        colx, ex, _ = result[idx]
        pe = ring.p ** ex
        for above in range(idx):
            cell = rows[above][colx]
            q = tuple(c // pe for c in cell)
            if any(q):
                rows[above] = [ring.sub_t(x, ring.mul_t(tuple(
                    qq % ring.pn for qq in q), y))
                    for x, y in zip(rows[above], rows[idx])]
    return tuple(tuple(row) for row in rows)


def span_equal(ring: WittRing, gens_a, gens_b) -> bool:
    return howell_span(ring, gens_a) == howell_span(ring, gens_b)


def span_contains(ring: WittRing, gens, vector) -> bool:
    base = howell_span(ring, gens)
    aug = list(base) + [tuple(_cell(ring, c) for c in vector)]
    return howell_span(ring, aug) == base
