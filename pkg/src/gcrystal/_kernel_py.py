"""Pure-Python arithmetic kernels.

Matrices over W(F_{p^s})/p^N are stored flat: ``data[(i*ncols + j)*s + t]``
is the t-th power-basis coordinate of entry (i, j), a canonical residue in
[0, p^N).  ``red`` is the reduction table of the ring modulus, flattened:
row j (length s) gives the coordinates of x^(s+j) for j = 0..s-2.

The compiled extension (gcrystal._speedups) implements the same functions;
see gcrystal.kernel for the selection logic.
"""

IMPLEMENTATION = "python"


def cell_mul(x, y, s, red, pn):
    """Product of two ring elements given as coordinate tuples."""
    if s == 1:
        return ((x[0] * y[0]) % pn,)
    conv = [0] * (2 * s - 1)
    for i in range(s):
        xi = x[i]
        if xi:
            for j in range(s):
                conv[i + j] += xi * y[j]
    return _fold(conv, s, red, pn)


def _fold(conv, s, red, pn):
    for t in range(2 * s - 2, s - 1, -1):
        c = conv[t]
        if c:
            base = (t - s) * s
            for u in range(s):
                conv[u] += c * red[base + u]
            conv[t] = 0
    return tuple(c % pn for c in conv[:s])


def mat_mul(a, b, n, k, m, s, red, pn):
    """Flat (n x k) @ (k x m) product."""
    out = [0] * (n * m * s)
    if s == 1:
        for i in range(n):
            arow = i * k
            for j in range(m):
                acc = 0
                for t in range(k):
                    acc += a[arow + t] * b[t * m + j]
                out[i * m + j] = acc % pn
        return out
    for i in range(n):
        for j in range(m):
            conv = [0] * (2 * s - 1)
            for t in range(k):
                pa = (i * k + t) * s
                pb = (t * m + j) * s
                for u in range(s):
                    xu = a[pa + u]
                    if xu:
                        for v in range(s):
                            conv[u + v] += xu * b[pb + v]
            cell = _fold(conv, s, red, pn)
            pos = (i * m + j) * s
            for u in range(s):
                out[pos + u] = cell[u]
    return out


def mat_add(a, b, pn):
    return [(x + y) % pn for x, y in zip(a, b)]


def mat_sub(a, b, pn):
    return [(x - y) % pn for x, y in zip(a, b)]


def mat_neg(a, pn):
    return [(-x) % pn for x in a]


def mat_cellmap(a, ncells, s_in, s_out, fm, pn):
    """Apply an (s_out x s_in) integer matrix to every cell of ``a``.

    Used for Frobenius powers (square) and ring embeddings (rectangular).
    """
    out = [0] * (ncells * s_out)
    for c in range(ncells):
        pa = c * s_in
        po = c * s_out
        for i in range(s_out):
            acc = 0
            row = i * s_in
            for j in range(s_in):
                acc += fm[row + j] * a[pa + j]
            out[po + i] = acc % pn
    return out
