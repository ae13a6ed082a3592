"""Exact arithmetic in truncated unramified Witt rings W(F_{p^s})/p^N.

A ring is (Z/p^N)[x]/(m(x)) for a monic degree-s lift m of an irreducible
polynomial over F_p, together with the Frobenius sigma, the unique ring
automorphism congruent to the p-power map mod p.  Elements are power-basis
coordinate tuples with canonical residues in [0, p^N).

The modulus is chosen deterministically (first irreducible in base-p
coefficient enumeration) so that all outputs are bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from . import zpn
from .errors import ExtensionBudgetExceeded, InvalidParams, PrecisionLoss
from .kernel import kernel_for_modulus

Coeffs = Tuple[int, ...]

_RING_CACHE: dict = {}
_EMBED_SEARCH_LIMIT = 2_000_000


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# F_p[x] helpers (coefficient lists, low degree first), used only to pick
# the modulus and to invert residues.

def _fp_trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mul(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _fp_trim(out)


def _fp_mod(a: Sequence[int], f: Sequence[int], p: int) -> List[int]:
    a = [c % p for c in a]
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    _fp_trim(a)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        if c:
            for i, y in enumerate(f):
                a[shift + i] = (a[shift + i] - c * y) % p
        a.pop()
        _fp_trim(a)
    return a


def _fp_powmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> List[int]:
    result = [1]
    base = _fp_mod(a, f, p)
    while e:
        if e & 1:
            result = _fp_mod(_fp_mul(result, base, p), f, p)
        base = _fp_mod(_fp_mul(base, base, p), f, p)
        e >>= 1
    return result


def _fp_gcd(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    a, b = list(a), list(b)
    while _fp_trim(b):
        a, b = b, _fp_mod(a, b, p)
    return _fp_trim(a)


def _fp_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin test: f irreducible of degree s over F_p."""
    s = len(f) - 1
    if s < 1:
        return False
    x = [0, 1]
    if _fp_powmod(x, p ** s, f, p) != _fp_mod(x, f, p):
        return False
    for q in {q for q in range(2, s + 1) if s % q == 0 and _is_prime(q)}:
        h = _fp_powmod(x, p ** (s // q), f, p)
        diff = [(u - v) % p for u, v in
                zip(h + [0] * 2, _fp_mod(x, f, p) + [0] * (len(h) + 2))]
        g = _fp_gcd(f, _fp_trim(diff), p)
        if len(g) - 1 > 0:
            return False
    return True


def _first_irreducible(p: int, s: int) -> Tuple[int, ...]:
    """First monic irreducible of degree s, low coefficients as base-p digits."""
    if s == 1:
        return (0, 1)  # x itself; the ring is Z/p^N
    for k in range(p ** s):
        coeffs = []
        t = k
        for _ in range(s):
            coeffs.append(t % p)
            t //= p
        f = coeffs + [1]
        if _fp_irreducible(f, p):
            return tuple(f)
    raise InvalidParams(f"no irreducible polynomial of degree {s} over F_{p}")


class WittRing:
    """W(F_{p^s})/p^N with Frobenius.  Construct through make_ring()."""

    def __init__(self, p: int, s: int, N: int):
        if p == 2 or not _is_prime(p):
            raise InvalidParams(f"p must be an odd prime, got {p}")
        if s < 1 or N < 1:
            raise InvalidParams("need s >= 1 and N >= 1")
        self.p = p
        self.s = s
        self.N = N
        self.pn = p ** N
        self.kernel = kernel_for_modulus(self.pn)
        mod_fp = _first_irreducible(p, s)
        self.modulus: Coeffs = tuple(int(c) % self.pn for c in mod_fp)
        self._red = self._reduction_table()
        self.zero_t: Coeffs = (0,) * s
        self.one_t: Coeffs = tuple([1] + [0] * (s - 1))
        self.gen_t: Coeffs = tuple([0, 1] + [0] * (s - 2)) if s > 1 else (1,)
        self._frob_pows: List[Tuple[int, ...]] = []
        self.frobenius_matrix = self._compute_frobenius()
        self._embeddings: dict = {}

    # -- construction internals --------------------------------------------

    def _reduction_table(self) -> Tuple[int, ...]:
        """Coordinates of x^(s+j), j = 0..s-2, flattened."""
        s, pn = self.s, self.pn
        if s == 1:
            return ()
        rows = []
        cur = [(-c) % pn for c in self.modulus[:s]]  # x^s
        rows.append(tuple(cur))
        for _ in range(s - 2):
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for u in range(s):
                    cur[u] = (cur[u] + top * rows[0][u]) % pn
            rows.append(tuple(cur))
        return tuple(v for row in rows for v in row)

    def _compute_frobenius(self) -> Tuple[Coeffs, ...]:
        s, pn = self.s, self.pn
        if s == 1:
            fm = ((1,),)
        else:
            # Hensel-lift the root x^p of the modulus from precision 1 to N.
            r = self.pow_t(self.gen_t, self.p)
            fder = tuple((i * c) % pn for i, c in enumerate(self.modulus))[1:]
            while True:
                fr = self._eval_int_poly(self.modulus, r)
                if all(c == 0 for c in fr):
                    break
                dfr = self._eval_int_poly(fder, r)
                r = self.sub_t(r, self.mul_t(fr, self.inv_t(dfr)))
            cols = [self.one_t]
            for _ in range(s - 1):
                cols.append(self.mul_t(cols[-1], r))
            fm = tuple(tuple(cols[j][i] for j in range(s)) for i in range(s))
        self._frob_flat = tuple(v for row in fm for v in row)
        self._frob_pows = [None] * self.s  # type: ignore[list-item]
        ident = tuple(v for i in range(s) for v in
                      (1 if j == i else 0 for j in range(s)))
        self._frob_pows[0] = ident
        if s > 1:
            self._frob_pows[1] = self._frob_flat
            for k in range(2, s):
                self._frob_pows[k] = self._matmul_int(
                    self._frob_pows[k - 1], self._frob_flat)
        return fm

    def _matmul_int(self, a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
        s, pn = self.s, self.pn
        return tuple(
            sum(a[i * s + t] * b[t * s + j] for t in range(s)) % pn
            for i in range(s) for j in range(s))

    def _eval_int_poly(self, coeffs, x):
        """Horner evaluation of an integer-coefficient polynomial at x."""
        acc = self.zero_t
        for c in reversed(coeffs):
            acc = self.mul_t(acc, x)
            if c:
                acc = self.add_t(acc, self.from_int(c))
        return acc

    # -- raw tuple arithmetic ----------------------------------------------

    def add_t(self, x: Coeffs, y: Coeffs) -> Coeffs:
        pn = self.pn
        return tuple((a + b) % pn for a, b in zip(x, y))

    def sub_t(self, x: Coeffs, y: Coeffs) -> Coeffs:
        pn = self.pn
        return tuple((a - b) % pn for a, b in zip(x, y))

    def neg_t(self, x: Coeffs) -> Coeffs:
        pn = self.pn
        return tuple((-a) % pn for a in x)

    def mul_t(self, x: Coeffs, y: Coeffs) -> Coeffs:
        return tuple(self.kernel.cell_mul(x, y, self.s, self._red, self.pn))

    def pow_t(self, x: Coeffs, e: int) -> Coeffs:
        if e < 0:
            return self.pow_t(self.inv_t(x), -e)
        acc, base = self.one_t, x
        while e:
            if e & 1:
                acc = self.mul_t(acc, base)
            base = self.mul_t(base, base)
            e >>= 1
        return acc

    def from_int(self, a: int) -> Coeffs:
        return tuple([a % self.pn] + [0] * (self.s - 1))

    def is_zero_t(self, x: Coeffs) -> bool:
        return all(c == 0 for c in x)

    def val_t(self, x: Coeffs) -> int:
        """p-adic valuation, N if x == 0 at working precision."""
        if self.is_zero_t(x):
            return self.N
        v, p = 0, self.p
        cur = x
        while all(c % p == 0 for c in cur):
            cur = tuple(c // p for c in cur)
            v += 1
        return v

    def is_unit_t(self, x: Coeffs) -> bool:
        return any(c % self.p for c in x)

    def divp_t(self, x: Coeffs, k: int = 1) -> Coeffs:
        pk = self.p ** k
        if any(c % pk for c in x):
            raise PrecisionLoss(f"element not divisible by p^{k}")
        return tuple(c // pk for c in x)

    def inv_t(self, x: Coeffs) -> Coeffs:
        if not self.is_unit_t(x):
            raise PrecisionLoss("attempt to invert a non-unit")
        p = self.p
        # residue inverse via extended Euclid in F_p[x], then Hensel.
        a = _fp_trim([c % p for c in x])
        f = [c % p for c in self.modulus]
        r0, r1 = list(f), list(a)
        t0, t1 = [], [1]
        while _fp_trim(list(r1)):
            q, r = _fp_divmod(r0, r1, p)
            r0, r1 = r1, r
            t0, t1 = t1, _fp_trim([(u - v) % p for u, v in
                                   _pad(t0, _fp_mul(q, t1, p))])
        lead = pow(r0[-1] if r0 else 1, -1, p)
        inv = [c * lead % p for c in t0]
        y = tuple((inv + [0] * self.s)[: self.s])
        two = self.from_int(2)
        steps = max(1, (self.N - 1).bit_length() + 1)
        for _ in range(steps):
            y = self.mul_t(y, self.sub_t(two, self.mul_t(x, y)))
        assert self.mul_t(x, y) == self.one_t
        return y

    def frob_t(self, x: Coeffs, k: int = 1) -> Coeffs:
        k %= self.s
        if k == 0:
            return x
        fm = self._frob_pows[k]
        s, pn = self.s, self.pn
        return tuple(
            sum(fm[i * s + j] * x[j] for j in range(s)) % pn for i in range(s))

    def teichmuller_t(self, x: Coeffs) -> Coeffs:
        """Unique multiplicative lift of the residue of x."""
        if all(c % self.p == 0 for c in x):
            return self.zero_t
        q = self.p ** self.s
        y = x
        for _ in range(self.N):
            y = self.pow_t(y, q)
        assert self.pow_t(y, q) == y
        return y

    def rand_t(self, rng) -> Coeffs:
        return tuple(rng.randrange(self.pn) for _ in range(self.s))

    def rand_unit_t(self, rng) -> Coeffs:
        while True:
            x = self.rand_t(rng)
            if self.is_unit_t(x):
                return x

    def reduce_mod_t(self, x: Coeffs, k: int) -> Coeffs:
        pk = self.p ** min(k, self.N)
        return tuple(c % pk for c in x)

    # -- wrapped elements ----------------------------------------------------

    def elem(self, coeffs) -> "WittElem":
        if isinstance(coeffs, WittElem):
            return coeffs
        if isinstance(coeffs, int):
            return WittElem(self, self.from_int(coeffs))
        t = tuple(int(c) % self.pn for c in coeffs)
        if len(t) != self.s:
            raise InvalidParams(f"need {self.s} coordinates, got {len(t)}")
        return WittElem(self, t)

    @property
    def zero(self) -> "WittElem":
        return WittElem(self, self.zero_t)

    @property
    def one(self) -> "WittElem":
        return WittElem(self, self.one_t)

    @property
    def generator(self) -> "WittElem":
        return WittElem(self, self.gen_t)

    # -- unramified extensions ----------------------------------------------

    def extension(self, e: int) -> Tuple["WittRing", Tuple[int, ...]]:
        """Degree-e unramified extension and the flat embedding matrix.

        The embedding matrix has shape (e*s) x s and sends power-basis
        coordinates here to coordinates in the big ring; it commutes with
        the two Frobenii.
        """
        if e == 1:
            ident = tuple(v for i in range(self.s) for v in
                          (1 if j == i else 0 for j in range(self.s)))
            return self, ident
        key = e
        if key in self._embeddings:
            return self._embeddings[key]
        big = make_ring(self.p, self.s * e, self.N)
        root = self._embed_root(big)
        cols = [big.one_t]
        for _ in range(self.s - 1):
            cols.append(big.mul_t(cols[-1], root))
        emb = tuple(cols[j][i] for i in range(big.s) for j in range(self.s))
        self._embeddings[key] = (big, emb)
        return big, emb

    def _embed_root(self, big: "WittRing") -> Coeffs:
        """Root of self.modulus in big, Hensel-lifted from the residue field."""
        p, s = self.p, self.s
        if s == 1:
            return big.one_t  # modulus is x; embedding sends 1 -> 1
        if p ** s > _EMBED_SEARCH_LIMIT:
            raise InvalidParams("residue subfield too large to search")
        # F_p-basis of the fixed field of sigma^s inside the big residue field.
        sb = big.s
        fm = [[big._frob_pows[1][i * sb + j] % p for j in range(sb)]
              for i in range(sb)] if sb > 1 else [[1]]
        m = _int_matpow_mod(fm, s, p)
        for i in range(sb):
            m[i][i] = (m[i][i] - 1) % p
        basis = _fp_nullspace(m, p)
        assert len(basis) == s, "fixed field has wrong dimension"
        best = None
        mod_fp = [c % p for c in self.modulus]
        for k in range(1, p ** s):
            coeffs = []
            t = k
            for _ in range(s):
                coeffs.append(t % p)
                t //= p
            cand = [0] * sb
            for c, vec in zip(coeffs, basis):
                if c:
                    for i in range(sb):
                        cand[i] = (cand[i] + c * vec[i]) % p
            ct = tuple(cand)
            acc = big.zero_t
            for c in reversed(mod_fp):
                acc = big.mul_t(acc, ct)
                if c:
                    acc = big.add_t(acc, big.from_int(c))
            if all(v % p == 0 for v in acc):
                if best is None or ct < best:
                    best = ct
        assert best is not None, "modulus has no root in the extension"
        r = best
        fder = tuple((i * c) for i, c in enumerate(self.modulus))[1:]
        while True:
            fr = big._eval_int_poly(self.modulus, r)
            if all(c == 0 for c in fr):
                return r
            dfr = big._eval_int_poly(fder, r)
            r = big.sub_t(r, big.mul_t(fr, big.inv_t(dfr)))

    def embed_t(self, emb: Tuple[int, ...], big: "WittRing", x: Coeffs) -> Coeffs:
        s, sb, pn = self.s, big.s, big.pn
        return tuple(
            sum(emb[i * s + j] * x[j] for j in range(s)) % pn
            for i in range(sb))

    # -- misc ----------------------------------------------------------------

    def __repr__(self):
        return f"WittRing(p={self.p}, s={self.s}, N={self.N})"

    def __eq__(self, other):
        return (isinstance(other, WittRing)
                and (self.p, self.s, self.N) == (other.p, other.s, other.N))

    def __hash__(self):
        return hash((self.p, self.s, self.N))


def _pad(a: List[int], b: List[int]):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))


def _fp_divmod(a: Sequence[int], b: Sequence[int], p: int):
    a = list(a)
    b = _fp_trim(list(b))
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * max(0, len(a) - db)
    while len(_fp_trim(a)) - 1 >= db and a:
        a = _fp_trim(a)
        if len(a) - 1 < db:
            break
        c = a[-1] * inv % p
        shift = len(a) - 1 - db
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - c * y) % p
        a = a[:-1]
    return _fp_trim(q), _fp_trim(a)


def _int_matpow_mod(m, e, p):
    n = len(m)
    out = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    base = [row[:] for row in m]
    while e:
        if e & 1:
            out = _int_matmul_mod(out, base, p)
        base = _int_matmul_mod(base, base, p)
        e >>= 1
    return out


def _int_matmul_mod(a, b, p):
    n, k, m = len(a), len(b), len(b[0])
    return [[sum(a[i][t] * b[t][j] for t in range(k)) % p for j in range(m)]
            for i in range(n)]


def _fp_nullspace(m, p) -> List[List[int]]:
    """Basis of the right nullspace of m over F_p (deterministic)."""
    rows = [row[:] for row in m]
    nr, nc = len(rows), len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [v * inv % p for v in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(u - f * v) % p for u, v in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * nc
        vec[fc] = 1
        for i, pc in enumerate(pivots):
            vec[pc] = (-rows[i][fc]) % p
        basis.append(vec)
    return basis


@dataclass(frozen=True)
class WittElem:
    """Element of a WittRing in power-basis coordinates."""

    ring: WittRing
    coeffs: Coeffs

    def __add__(self, other):
        return WittElem(self.ring, self.ring.add_t(self.coeffs, _c(other, self.ring)))

    def __sub__(self, other):
        return WittElem(self.ring, self.ring.sub_t(self.coeffs, _c(other, self.ring)))

    def __mul__(self, other):
        return WittElem(self.ring, self.ring.mul_t(self.coeffs, _c(other, self.ring)))

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return WittElem(self.ring, self.ring.sub_t(_c(other, self.ring), self.coeffs))

    def __neg__(self):
        return WittElem(self.ring, self.ring.neg_t(self.coeffs))

    def __pow__(self, e: int):
        return WittElem(self.ring, self.ring.pow_t(self.coeffs, e))

    def inverse(self) -> "WittElem":
        return WittElem(self.ring, self.ring.inv_t(self.coeffs))

    def frobenius(self, k: int = 1) -> "WittElem":
        return WittElem(self.ring, self.ring.frob_t(self.coeffs, k))

    def val(self) -> int:
        return self.ring.val_t(self.coeffs)

    def is_zero(self) -> bool:
        return self.ring.is_zero_t(self.coeffs)

    def is_unit(self) -> bool:
        return self.ring.is_unit_t(self.coeffs)

    def __repr__(self):
        return f"W{list(self.coeffs)}"


def _c(x, ring: WittRing) -> Coeffs:
    if isinstance(x, WittElem):
        return x.coeffs
    if isinstance(x, int):
        return ring.from_int(x)
    return tuple(int(v) % ring.pn for v in x)


def make_ring(p: int, s: int, N: int) -> WittRing:
    """The ring W(F_{p^s})/p^N with its deterministic modulus."""
    key = (p, s, N)
    if key not in _RING_CACHE:
        _RING_CACHE[key] = WittRing(p, s, N)
    return _RING_CACHE[key]


def frobenius(ring: WittRing, x: WittElem, k: int = 1) -> WittElem:
    """sigma^k applied to x (k taken mod s)."""
    return ring.elem(x).frobenius(k)


def teichmuller(ring: WittRing, xbar: WittElem) -> WittElem:
    """Multiplicative (Teichmueller) lift of the residue of xbar."""
    return WittElem(ring, ring.teichmuller_t(ring.elem(xbar).coeffs))


# ---------------------------------------------------------------------------
# Laurent elements: p^val * unit with tracked precision.

@dataclass(frozen=True)
class LaurentElem:
    """p^val * unit, trusted modulo p^eff_prec (absolute precision).

    unit is a unit coordinate tuple reduced mod p^(eff_prec - val); the
    distinguished zero has an all-zero unit and val = 0.
    """

    ring: WittRing
    val: int
    unit: Coeffs
    eff_prec: int

    @classmethod
    def zero(cls, ring: WittRing, window: Optional[int] = None) -> "LaurentElem":
        w = ring.N if window is None else window
        return cls(ring, 0, ring.zero_t, w)

    @classmethod
    def from_witt(cls, x: WittElem, val_shift: int = 0) -> "LaurentElem":
        """Laurent form of p^(-val_shift) * x for an integral x mod p^N."""
        ring = x.ring
        if x.is_zero():
            return cls.zero(ring, ring.N - val_shift)
        v = x.val()
        unit = ring.divp_t(x.coeffs, v)
        rel = ring.N - v
        return cls(ring, v - val_shift, ring.reduce_mod_t(unit, rel),
                   ring.N - val_shift)

    def is_zero(self) -> bool:
        return self.ring.is_zero_t(self.unit)

    def rel_prec(self) -> int:
        return self.eff_prec - self.val

    def _check(self, rel: int):
        if rel < 1:
            raise PrecisionLoss("effective precision exhausted")

    def __mul__(self, other: "LaurentElem") -> "LaurentElem":
        r = self.ring
        if self.is_zero() or other.is_zero():
            return LaurentElem.zero(r, min(self.eff_prec + other.val,
                                           other.eff_prec + self.val))
        rel = min(self.rel_prec(), other.rel_prec())
        self._check(rel)
        u = r.reduce_mod_t(r.mul_t(self.unit, other.unit), rel)
        v = self.val + other.val
        return LaurentElem(r, v, u, v + rel)

    def __add__(self, other: "LaurentElem") -> "LaurentElem":
        r = self.ring
        if self.is_zero():
            return LaurentElem(r, other.val, other.unit,
                               min(other.eff_prec, self.eff_prec))
        if other.is_zero():
            return LaurentElem(r, self.val, self.unit,
                               min(self.eff_prec, other.eff_prec))
        v = min(self.val, other.val)
        abs_prec = min(self.eff_prec, other.eff_prec)
        window = abs_prec - v
        self._check(window)
        pw = r.p ** window
        a = tuple(c * r.p ** (self.val - v) % pw for c in self.unit)
        bb = tuple(c * r.p ** (other.val - v) % pw for c in other.unit)
        tot = tuple((x + y) % pw for x, y in zip(a, bb))
        if all(c == 0 for c in tot):
            return LaurentElem.zero(r, abs_prec)
        c0 = 0
        cur = tot
        while all(c % r.p == 0 for c in cur):
            cur = tuple(c // r.p for c in cur)
            c0 += 1
        rel = window - c0
        self._check(rel)
        return LaurentElem(r, v + c0, r.reduce_mod_t(cur, rel), abs_prec)

    def __neg__(self):
        rel = self.rel_prec()
        pw = self.ring.p ** rel
        return LaurentElem(self.ring, self.val,
                           tuple((-c) % pw for c in self.unit), self.eff_prec)

    def __sub__(self, other):
        return self + (-other)

    def div_p(self, k: int = 1) -> "LaurentElem":
        return LaurentElem(self.ring, self.val - k, self.unit, self.eff_prec - k)

    def inverse(self) -> "LaurentElem":
        if self.is_zero():
            raise PrecisionLoss("cannot invert zero")
        r = self.ring
        rel = self.rel_prec()
        self._check(rel)
        lifted = r.inv_t(self.unit)
        return LaurentElem(r, -self.val, r.reduce_mod_t(lifted, rel),
                           rel - self.val)

    def __repr__(self):
        if self.is_zero():
            return f"O(p^{self.eff_prec})"
        return f"p^{self.val}*W{list(self.unit)}+O(p^{self.eff_prec})"


# ---------------------------------------------------------------------------
# sigma-semilinear solver: x - A sigma(x) = c.
#
# sigma is Z/p^N-linear on power-basis coordinates, so the equation is one
# exact linear system over the chain ring Z/p^N.

def _sigma_linear_attempt(ring: WittRing, a_rows, c_vec):
    """Solve x - A sigma(x) = c over ring, or return None."""
    n = len(c_vec)
    s, pn = ring.s, ring.pn
    dim = n * s
    cols = []
    for j in range(dim):
        x = [ring.zero_t] * n
        cell = [0] * s
        cell[j % s] = 1
        x[j // s] = tuple(cell)
        out = []
        for i in range(n):
            acc = x[i]
            for t in range(n):
                acc = ring.sub_t(acc, ring.mul_t(
                    a_rows[i][t], ring.frob_t(x[t], 1)))
            out.append(acc)
        cols.append([out[i][u] for i in range(n) for u in range(s)])
    rows = [[cols[j][i] for j in range(dim)] for i in range(dim)]
    b = [c_vec[i][u] for i in range(n) for u in range(s)]
    sol = zpn.solve(rows, b, ring.p, ring.N)
    if sol is None:
        return None
    return [tuple(sol[i * s + u] for u in range(s)) for i in range(n)]


def solve_sigma_linear(ring: WittRing, A, c, ext_budget: int = 8):
    """Solve x - A*sigma(x) = c, extending the residue field if needed.

    A is an n x n matrix and c a length-n vector (WittElem or coordinate
    tuples).  Returns (x, ring_used); ring_used has residue degree e*s with
    e <= ext_budget, else ExtensionBudgetExceeded is raised.
    """
    n = len(c)
    a_rows = [[_c(v, ring) for v in row] for row in A]
    c_vec = [_c(v, ring) for v in c]
    for e in range(1, max(1, ext_budget) + 1):
        big, emb = ring.extension(e)
        if e == 1:
            ar, cr = a_rows, c_vec
        else:
            ar = [[ring.embed_t(emb, big, v) for v in row] for row in a_rows]
            cr = [ring.embed_t(emb, big, v) for v in c_vec]
        sol = _sigma_linear_attempt(big, ar, cr)
        if sol is not None:
            return [WittElem(big, v) for v in sol], big
    raise ExtensionBudgetExceeded(
        f"no solution within residue extension degree {ext_budget}*{ring.s}")
