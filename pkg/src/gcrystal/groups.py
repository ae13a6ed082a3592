"""Root-datum combinatorics for the supported group presets.

Presets: GL(n); GSp(2n) with antidiagonal form (1..1,-1..-1) and torus
diag(t_1..t_n, c/t_n..c/t_1); ResGL(n, f) = f copies of GL_n cyclically
permuted by the Galois action.  Cocharacters live on the diagonal torus
X_*(T) = Z^d; all dominance arithmetic is exact (Fractions, never floats).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import InvalidParams, NotDominant, NotInGroup, NotIntegral, ParseError
from .linalg import WMatrix, rand_gl
from .witt import WittRing


@dataclass(frozen=True)
class Cocharacter:
    weights: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))

    def as_rational(self) -> "RationalCocharacter":
        return RationalCocharacter(tuple(Fraction(w) for w in self.weights))

    def __repr__(self):
        return f"Cochar{list(self.weights)}"


@dataclass(frozen=True)
class RationalCocharacter:
    weights: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "weights", tuple(Fraction(w) for w in self.weights))

    def is_integral(self) -> bool:
        return all(w.denominator == 1 for w in self.weights)

    def __repr__(self):
        return "QCochar[" + ", ".join(str(w) for w in self.weights) + "]"


AnyCochar = (Cocharacter, RationalCocharacter)


@dataclass(frozen=True)
class KottwitzClass:
    value: int

    def __repr__(self):
        return f"Kottwitz({self.value})"


class GroupPreset:
    """Immutable description of one supported reductive group."""

    def __init__(self, kind: str, n: int, factors: int = 1):
        if kind not in ("GL", "GSp", "ResGL"):
            raise InvalidParams(f"unknown preset kind {kind!r}")
        if n < 1 or factors < 1:
            raise InvalidParams("rank data must be positive")
        if kind == "GSp" and n % 2:
            raise InvalidParams("GSp preset needs even rank")
        if kind != "ResGL" and factors != 1:
            raise InvalidParams("only ResGL takes a factor count")
        self.kind = kind
        self.n = n // 2 if kind == "GSp" else n
        self.factors = factors
        self.dim = n * factors if kind == "ResGL" else n
        if kind == "ResGL":
            self.blocks = [list(range(b * n, (b + 1) * n))
                           for b in range(factors)]
        else:
            self.blocks = [list(range(self.dim))]
        if kind == "ResGL":
            # sigma sends block b to block b+1, same offset
            pi = [0] * self.dim
            for b in range(factors):
                for t in range(n):
                    pi[b * n + t] = ((b + 1) % factors) * n + t
            self.galois_perm = tuple(pi)
        else:
            self.galois_perm = tuple(range(self.dim))
        self.galois_order = factors

    # -- naming ---------------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "GroupPreset":
        parts = text.strip().split(":")
        try:
            if parts[0] == "GL" and len(parts) == 2:
                return cls("GL", int(parts[1]))
            if parts[0] == "GSp" and len(parts) == 2:
                return cls("GSp", int(parts[1]))
            if parts[0] == "ResGL" and len(parts) == 3:
                return cls("ResGL", int(parts[1]), int(parts[2]))
        except ValueError as exc:
            raise ParseError(f"bad preset {text!r}: {exc}") from None
        raise ParseError(f"bad preset {text!r}")

    def name(self) -> str:
        if self.kind == "GL":
            return f"GL:{self.dim}"
        if self.kind == "GSp":
            return f"GSp:{self.dim}"
        return f"ResGL:{self.n}:{self.factors}"

    def __repr__(self):
        return f"GroupPreset({self.name()})"

    def __eq__(self, other):
        return isinstance(other, GroupPreset) and self.name() == other.name()

    def __hash__(self):
        return hash(self.name())

    # -- roots ------------------------------------------------------------------

    def partner(self, i: int) -> int:
        return self.dim - 1 - i

    def positive_positions(self) -> List[Tuple[int, int]]:
        """Matrix positions (i, j), i < j, carrying positive root spaces."""
        out = []
        for blk in self.blocks:
            for ai, i in enumerate(blk):
                for j in blk[ai + 1:]:
                    out.append((i, j))
        if self.kind == "GSp":
            out = [(i, j) for i in range(self.dim)
                   for j in range(i + 1, self.dim)]
        return out

    def simple_positions(self) -> List[Tuple[int, int]]:
        if self.kind == "GSp":
            return [(i, i + 1) for i in range(self.n)]
        out = []
        for blk in self.blocks:
            out.extend((blk[t], blk[t + 1]) for t in range(len(blk) - 1))
        return out

    def simple_coroots(self) -> List[Tuple[int, ...]]:
        d = self.dim
        out = []
        if self.kind == "GSp":
            for i in range(self.n - 1):
                vec = [0] * d
                vec[i], vec[i + 1] = 1, -1
                vec[self.partner(i + 1)], vec[self.partner(i)] = 1, -1
                out.append(tuple(vec))
            vec = [0] * d
            vec[self.n - 1], vec[self.n] = 1, -1
            out.append(tuple(vec))
            return out
        for blk in self.blocks:
            for t in range(len(blk) - 1):
                vec = [0] * d
                vec[blk[t]], vec[blk[t + 1]] = 1, -1
                out.append(tuple(vec))
        return out

    # -- cocharacter plumbing -----------------------------------------------

    def check_weights(self, mu) -> Tuple:
        w = tuple(mu.weights)
        if len(w) != self.dim:
            raise InvalidParams(
                f"cocharacter has {len(w)} weights, preset wants {self.dim}")
        if self.kind == "GSp":
            kappa = w[0] + w[-1]
            if any(w[i] + w[self.partner(i)] != kappa for i in range(self.n)):
                raise InvalidParams(
                    "GSp cocharacter must satisfy w_i + w_(2n+1-i) = const")
        return w

    def similitude_weight(self, mu) -> int:
        w = self.check_weights(mu)
        return w[0] + w[-1]

    def apply_galois(self, mu, k: int = 1):
        w = self.check_weights(mu)
        pi = self.galois_perm
        out = list(w)
        for _ in range(k % self.galois_order):
            nxt = [0] * len(out)
            for i, v in enumerate(out):
                nxt[pi[i]] = v
            out = nxt
        cls = Cocharacter if isinstance(mu, Cocharacter) else RationalCocharacter
        return cls(tuple(out))

    def is_dominant(self, mu) -> bool:
        w = self.check_weights(mu)
        return all(w[i] >= w[j] for i, j in self.simple_positions())


def preset_gl(n: int) -> GroupPreset:
    return GroupPreset("GL", n)


def preset_gsp(two_n: int) -> GroupPreset:
    return GroupPreset("GSp", two_n)


def preset_resgl(n: int, factors: int) -> GroupPreset:
    return GroupPreset("ResGL", n, factors)


# ---------------------------------------------------------------------------
# Operations

def dominant_rep(g: GroupPreset, mu):
    """Weyl representative in the closed dominant chamber."""
    w = list(g.check_weights(mu))
    if g.kind == "GSp":
        n = g.n
        kappa = w[0] + w[-1]
        pairs = sorted((max(w[i], w[g.partner(i)]) for i in range(n)),
                       reverse=True)
        out = pairs + [kappa - v for v in reversed(pairs)]
    else:
        out = []
        for blk in g.blocks:
            out.extend(sorted((w[i] for i in blk), reverse=True))
    cls = Cocharacter if isinstance(mu, Cocharacter) else RationalCocharacter
    return cls(tuple(out))


def leq_dominance(g: GroupPreset, mu, mu_prime) -> bool:
    """mu <= mu' iff mu' - mu is a nonnegative rational combination of
    simple coroots (both inputs dominant)."""
    for c in (mu, mu_prime):
        if not g.is_dominant(c):
            raise NotDominant(f"{c} is not dominant for {g.name()}")
    wa = [Fraction(x) for x in mu.weights]
    wb = [Fraction(x) for x in mu_prime.weights]
    diff = [b - a for a, b in zip(wa, wb)]
    coroots = g.simple_coroots()
    coeffs = _solve_in_span(coroots, diff)
    if coeffs is None:
        return False
    return all(c >= 0 for c in coeffs)


def _solve_in_span(vectors: Sequence[Sequence[int]], target: Sequence[Fraction]
                   ) -> Optional[List[Fraction]]:
    """Exact solve of sum c_k v_k = target; None if target not in the span."""
    d = len(target)
    r = len(vectors)
    rows = [[Fraction(vectors[k][i]) for k in range(r)] + [target[i]]
            for i in range(d)]
    pivots = []
    rr = 0
    for c in range(r):
        piv = next((i for i in range(rr, d) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rr], rows[piv] = rows[piv], rows[rr]
        inv = 1 / rows[rr][c]
        rows[rr] = [v * inv for v in rows[rr]]
        for i in range(d):
            if i != rr and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [u - f * v for u, v in zip(rows[i], rows[rr])]
        pivots.append(c)
        rr += 1
    for i in range(rr, d):
        if rows[i][r] != 0:
            return None
    coeffs = [Fraction(0)] * r
    for i, c in enumerate(pivots):
        coeffs[c] = rows[i][r]
    return coeffs


def galois_average(g: GroupPreset, mu) -> RationalCocharacter:
    w = g.check_weights(mu)
    f = g.galois_order
    acc = [Fraction(0)] * len(w)
    cur = list(w)
    pi = g.galois_perm
    for _ in range(f):
        acc = [a + Fraction(v) for a, v in zip(acc, cur)]
        nxt = [0] * len(cur)
        for i, v in enumerate(cur):
            nxt[pi[i]] = v
        cur = nxt
    return RationalCocharacter(tuple(a / f for a in acc))


def is_central(g: GroupPreset, mu) -> bool:
    w = g.check_weights(mu)
    return all(w[i] == w[j] for i, j in g.positive_positions())


def kottwitz_of_cocharacter(g: GroupPreset, mu) -> KottwitzClass:
    w = g.check_weights(mu)
    if g.kind == "GSp":
        return KottwitzClass(g.similitude_weight(mu))
    total = sum(w)
    if isinstance(mu, RationalCocharacter):
        if Fraction(total).denominator != 1:
            raise InvalidParams("Kottwitz class of a non-integral cocharacter")
        total = int(total)
    return KottwitzClass(int(total))


def levi_of(g: GroupPreset, nu) -> List[Tuple[Fraction, Tuple[int, ...]]]:
    """Coordinate blocks of the centralizer of nu, ordered by weight desc."""
    if not g.is_dominant(nu):
        raise NotDominant(f"{nu} is not dominant for {g.name()}")
    w = [Fraction(x) for x in g.check_weights(nu)]
    seen: List[Fraction] = []
    for x in w:
        if x not in seen:
            seen.append(x)
    seen.sort(reverse=True)
    return [(lvl, tuple(i for i in range(len(w)) if w[i] == lvl))
            for lvl in seen]


# ---------------------------------------------------------------------------
# Matrix-level structure

def shift_perm_matrix(g: GroupPreset, ring: WittRing) -> WMatrix:
    """Permutation matrix of the Galois coordinate shift (identity for
    GL/GSp); b * P is the underlying semilinear Frobenius matrix."""
    return WMatrix.perm(ring, g.galois_perm)


def sigma_g_matrix(g: GroupPreset, mat: WMatrix, k: int = 1) -> WMatrix:
    """Group-level Frobenius: entrywise sigma^k then coordinate shift."""
    out = mat.frob(k)
    for _ in range(k % g.galois_order):
        out = out.permute(rowp=g.galois_perm, colp=g.galois_perm)
    return out


def gsp_form(g: GroupPreset, ring: WittRing) -> WMatrix:
    d = g.dim
    cells = {}
    m = WMatrix.zeros(ring, d, d)
    for i in range(d):
        cells[(i, d - 1 - i)] = ring.one_t if i < g.n else ring.neg_t(ring.one_t)
    return m._bulk_set(cells)


def similitude(g: GroupPreset, ring: WittRing, mat: WMatrix):
    """The scalar c with mat^T J mat = c J; NotInGroup if there is none."""
    j = gsp_form(g, ring)
    lhs = mat.transpose() @ j @ mat
    c = lhs.entry(0, g.dim - 1)
    if lhs != j.scalar_mul(c):
        raise NotInGroup("matrix does not preserve the symplectic form "
                         "up to scalar")
    return c


def check_in_group(g: GroupPreset, ring: WittRing, mat: WMatrix):
    """Exact membership of an integral matrix in G(O); returns the
    similitude for GSp, else None."""
    if mat.n != g.dim or mat.m != g.dim:
        raise NotInGroup(f"matrix size {mat.n} does not match {g.name()}")
    if not mat.is_invertible():
        raise NotInGroup("matrix is not invertible over the ring")
    if g.kind == "ResGL":
        for i in range(g.dim):
            for j in range(g.dim):
                if _block_of(g, i) != _block_of(g, j) and \
                        not ring.is_zero_t(mat.entry(i, j)):
                    raise NotInGroup("entry outside the block-diagonal "
                                     "support of ResGL")
        return None
    if g.kind == "GSp":
        c = similitude(g, ring, mat)
        if not ring.is_unit_t(c):
            raise NotInGroup("similitude is not a unit")
        return c
    return None


def _block_of(g: GroupPreset, i: int) -> int:
    return i // g.n if g.kind == "ResGL" else 0


def random_group_element(g: GroupPreset, ring: WittRing, rng) -> WMatrix:
    """Seeded random element of G(O) (exact membership guaranteed)."""
    if g.kind == "GL":
        return rand_gl(ring, g.dim, rng)
    if g.kind == "ResGL":
        out = WMatrix.zeros(ring, g.dim, g.dim)
        cells = {}
        for blk in g.blocks:
            sub = rand_gl(ring, g.n, rng)
            for a, i in enumerate(blk):
                for b, j in enumerate(blk):
                    cells[(i, j)] = sub.entry(a, b)
        return out._bulk_set(cells)
    # GSp: product of Levi, similitude torus and symmetric unipotents.
    n, d = g.n, g.dim
    w = WMatrix.perm(ring, [n - 1 - i for i in range(n)])  # antidiag block

    def levi(a: WMatrix, c) -> WMatrix:
        lower = w @ a.inv().transpose() @ w
        out = WMatrix.zeros(ring, d, d)
        cells = {}
        for i in range(n):
            for j in range(n):
                cells[(i, j)] = a.entry(i, j)
                cells[(n + i, n + j)] = ring.mul_t(c, lower.entry(i, j))
        return out._bulk_set(cells)

    def sym_unipotent(upper: bool) -> WMatrix:
        t = WMatrix.random(ring, n, n, rng)
        sym = t + t.transpose()
        s = w @ sym
        out = WMatrix.identity(ring, d)
        cells = {}
        for i in range(n):
            for j in range(n):
                if upper:
                    cells[(i, n + j)] = s.entry(i, j)
                else:
                    cells[(n + i, j)] = s.entry(i, j)
        return out._bulk_set(cells)

    out = levi(rand_gl(ring, n, rng), ring.rand_unit_t(rng))
    out = out @ sym_unipotent(True) @ sym_unipotent(False)
    out = out @ levi(rand_gl(ring, n, rng), ring.one_t)
    check_in_group(g, ring, out)
    return out
