"""Orthogonal groups of the 2-dimensional spaces and the split embedding.

The anisotropic orthogonal group is stored structurally: every element is
(c, reflect) acting by v -> c * sigma^reflect(v) with norm(c) = 1, which
turns the dihedral check into a presentation check.  Hyperbolic isometries
are kept as raw 2x2 matrices.  Enumeration is a brute-force scan over all
2x2 matrices mod q (vectorized), cross-checked against the structured set.
"""

import numpy as np

from .errors import EvenCharacteristic, NotNormOne, UnsupportedKind
from .ffield import ExtElement, FieldCtx, frobenius, ker_norm, norm
from .quadspace import ANISOTROPIC, SPLIT4, QuadSpace, gram_matrix

_EXHAUSTIVE_Q = 101


class Mat2:
    """A 2x2 matrix over F_q, immutable."""

    __slots__ = ("q", "a", "b", "c", "d")

    def __init__(self, q: int, a: int, b: int, c: int, d: int):
        self.q = q
        self.a = a % q
        self.b = b % q
        self.c = c % q
        self.d = d % q

    @classmethod
    def identity(cls, q: int) -> "Mat2":
        return cls(q, 1, 0, 0, 1)

    @classmethod
    def zero(cls, q: int) -> "Mat2":
        return cls(q, 0, 0, 0, 0)

    def __mul__(self, other: "Mat2") -> "Mat2":
        q = self.q
        return Mat2(
            q,
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __add__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.q, self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.q, self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __neg__(self) -> "Mat2":
        return Mat2(self.q, -self.a, -self.b, -self.c, -self.d)

    def scale(self, k: int) -> "Mat2":
        return Mat2(self.q, k * self.a, k * self.b, k * self.c, k * self.d)

    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % self.q

    def tr(self) -> int:
        return (self.a + self.d) % self.q

    def inverse(self) -> "Mat2":
        dt = self.det()
        if dt == 0:
            raise ZeroDivisionError("singular matrix")
        k = pow(dt, -1, self.q)
        return Mat2(self.q, k * self.d, -k * self.b, -k * self.c, k * self.a)

    def transpose(self) -> "Mat2":
        return Mat2(self.q, self.a, self.c, self.b, self.d)

    def __call__(self, v: tuple[int, int]) -> tuple[int, int]:
        q = self.q
        return ((self.a * v[0] + self.b * v[1]) % q, (self.c * v[0] + self.d * v[1]) % q)

    def __pow__(self, n: int) -> "Mat2":
        if n < 0:
            return self.inverse() ** (-n)
        acc = Mat2.identity(self.q)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __eq__(self, other):
        return isinstance(other, Mat2) and self.q == other.q and self.entries() == other.entries()

    def __hash__(self):
        return hash((self.q,) + self.entries())

    def __repr__(self):
        return f"Mat2({self.q}; {self.a},{self.b};{self.c},{self.d})"


class AnisoOrthMap:
    """An isometry of the anisotropic plane: v -> c * sigma^reflect(v)."""

    __slots__ = ("ctx", "c", "reflect")

    def __init__(self, ctx: FieldCtx, c: ExtElement, reflect: bool):
        if norm(c) != 1:
            raise NotNormOne(f"norm({c!r}) != 1")
        self.ctx = ctx
        self.c = c
        self.reflect = bool(reflect)

    @classmethod
    def identity(cls, ctx: FieldCtx) -> "AnisoOrthMap":
        return cls(ctx, ctx.one, False)

    def __call__(self, v: ExtElement) -> ExtElement:
        return self.c * (frobenius(v) if self.reflect else v)

    def __mul__(self, other: "AnisoOrthMap") -> "AnisoOrthMap":
        # (c, s)(c', s') = (c * sigma^s(c'), s xor s')
        oc = frobenius(other.c) if self.reflect else other.c
        return AnisoOrthMap(self.ctx, self.c * oc, self.reflect ^ other.reflect)

    def inverse(self) -> "AnisoOrthMap":
        if self.reflect:
            return AnisoOrthMap(self.ctx, self.c, True)
        return AnisoOrthMap(self.ctx, self.c.inverse(), False)

    def order(self) -> int:
        acc = self
        n = 1
        ident = AnisoOrthMap.identity(self.ctx)
        while acc != ident:
            acc = acc * self
            n += 1
        return n

    def matrix(self) -> Mat2:
        """Matrix in the basis (1, theta)."""
        col1 = self(self.ctx.one)
        col2 = self(self.ctx.theta)
        return Mat2(self.ctx.q, col1.a0, col2.a0, col1.a1, col2.a1)

    def __eq__(self, other):
        return (
            isinstance(other, AnisoOrthMap)
            and self.c == other.c
            and self.reflect == other.reflect
        )

    def __hash__(self):
        return hash((self.c, self.reflect))

    def __repr__(self):
        tag = "*sigma" if self.reflect else ""
        return f"AnisoOrthMap({self.c!r}{tag})"


def rotation(ctx: FieldCtx, c: ExtElement) -> AnisoOrthMap:
    """The rotation v -> c*v for a norm-one c."""
    return AnisoOrthMap(ctx, c, False)


def sigma_map(ctx: FieldCtx) -> AnisoOrthMap:
    """The Galois reflection as an isometry."""
    return AnisoOrthMap(ctx, ctx.one, True)


class SplitOrthMap:
    """A block map (alpha beta; gamma delta) on base + dual, preserving Q.

    All four blocks are 2x2 matrices over F_q in the canonical basis and
    its hat-dual; `gram` is the Gram matrix of the base bilinear form,
    needed to evaluate Q(v, w-hat) = coords(w)^T G coords(v).  `source`
    (optional) records the 2-dim isometry this map was embedded from.
    """

    __slots__ = ("ctx", "q", "alpha", "beta", "gamma", "delta", "gram", "source")

    def __init__(self, ctx: FieldCtx, alpha: Mat2, beta: Mat2, gamma: Mat2,
                 delta: Mat2, gram: Mat2, source: Mat2 | None = None):
        if ctx.q == 2:
            raise EvenCharacteristic("split maps need odd characteristic")
        self.ctx = ctx
        self.q = ctx.q
        self.alpha = alpha
        self.beta = beta
        self.gamma = gamma
        self.delta = delta
        self.gram = gram
        self.source = source
        if not self._preserves_q():
            raise ArithmeticError("block map does not preserve the split form")

    def apply_coords(self, cs: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
        x = (cs[0], cs[1])
        y = (cs[2], cs[3])
        ax, bx = self.alpha(x), self.beta(y)
        gx, dx = self.gamma(x), self.delta(y)
        q = self.q
        return ((ax[0] + bx[0]) % q, (ax[1] + bx[1]) % q,
                (gx[0] + dx[0]) % q, (gx[1] + dx[1]) % q)

    def _bq(self, u: tuple[int, int, int, int], v: tuple[int, int, int, int]) -> int:
        """Polarized split form in coordinates: (y_u^T G x_v + y_v^T G x_u) / 2."""
        q = self.q
        g = self.gram

        def pair(y, x):
            gx0 = g.a * x[0] + g.b * x[1]
            gx1 = g.c * x[0] + g.d * x[1]
            return y[0] * gx0 + y[1] * gx1

        inv2 = pow(2, -1, q)
        return (pair(u[2:], v[:2]) + pair(v[2:], u[:2])) * inv2 % q

    def _preserves_q(self) -> bool:
        basis = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
        images = [self.apply_coords(e) for e in basis]
        for i in range(4):
            for j in range(i, 4):
                if self._bq(images[i], images[j]) != self._bq(basis[i], basis[j]):
                    return False
        return True

    def __mul__(self, other: "SplitOrthMap") -> "SplitOrthMap":
        src = None
        if self.source is not None and other.source is not None:
            src = self.source * other.source
        return SplitOrthMap(
            self.ctx,
            self.alpha * other.alpha + self.beta * other.gamma,
            self.alpha * other.beta + self.beta * other.delta,
            self.gamma * other.alpha + self.delta * other.gamma,
            self.gamma * other.beta + self.delta * other.delta,
            self.gram,
            src,
        )

    def blocks(self) -> tuple[Mat2, Mat2, Mat2, Mat2]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    def __eq__(self, other):
        return (
            isinstance(other, SplitOrthMap)
            and self.q == other.q
            and self.blocks() == other.blocks()
        )

    def __hash__(self):
        return hash((self.q,) + tuple(m.entries() for m in self.blocks()))

    def __repr__(self):
        return f"SplitOrthMap(q={self.q}, blocks={[m.entries() for m in self.blocks()]})"


def split_embedding(space: QuadSpace, g) -> SplitOrthMap:
    """Embed a 2-dim isometry g into the split orthogonal group.

    Blocks (with h = 1/2): alpha = h(I + g), beta = gamma = h(I - g),
    delta = h(I + g), written in the canonical basis and its hat-dual.
    The result fixes every (v, v-hat) and sends (v, -v-hat) to
    (g v, -(g v)-hat); both properties are verified exhaustively.
    """
    ctx = space.ctx
    q = ctx.q
    if q == 2:
        raise EvenCharacteristic("split embedding needs odd characteristic")
    mg = g.matrix() if isinstance(g, AnisoOrthMap) else g
    ident = Mat2.identity(q)
    half = pow(2, -1, q)
    plus = (ident + mg).scale(half)
    minus = (ident - mg).scale(half)
    g11, g12 = gram_matrix(space)[0]
    g21, g22 = gram_matrix(space)[1]
    gram = Mat2(q, g11, g12, g21, g22)
    m = SplitOrthMap(ctx, plus, minus, minus, plus, gram, source=mg)

    cells = range(q) if q <= _EXHAUSTIVE_Q else range(min(q, 23))
    for x0 in cells:
        for x1 in cells:
            fixed = m.apply_coords((x0, x1, x0, x1))
            if fixed != (x0 % q, x1 % q, x0 % q, x1 % q):
                raise ArithmeticError("embedding does not fix the diagonal")
            gx = mg((x0, x1))
            flipped = m.apply_coords((x0, x1, -x0 % q, -x1 % q))
            if flipped != (gx[0], gx[1], -gx[0] % q, -gx[1] % q):
                raise ArithmeticError("embedding wrong on the antidiagonal")
    return m


def is_orthogonal(space: QuadSpace, mapping) -> bool:
    """Exhaustive form-preservation check (spanning-set polarization for split)."""
    if space.kind == SPLIT4:
        if isinstance(mapping, SplitOrthMap):
            return mapping._preserves_q()
        raise UnsupportedKind("split-space check expects a SplitOrthMap")
    if isinstance(mapping, Mat2) and space.kind == ANISOTROPIC:
        mat = mapping
        mapping = lambda v: space.from_coords(mat(space.coords(v)))  # noqa: E731
    for v in space.vectors():
        if space.form(mapping(v)) != space.form(v):
            return False
    return True


def _scan_form_preserving(space: QuadSpace) -> set[tuple[int, int, int, int]]:
    """All invertible 2x2 matrices mod q preserving the form, by brute force."""
    q = space.ctx.q
    vidx_form = np.empty(q * q, dtype=np.int64)
    for v in space.vectors():
        x, y = space.coords(v)
        vidx_form[x * q + y] = space.form(v)
    xs, ys = np.divmod(np.arange(q * q, dtype=np.int64), q)
    mats = np.indices((q, q, q, q), dtype=np.int64).reshape(4, -1).T  # (q^4, 4)
    survivors: set[tuple[int, int, int, int]] = set()
    chunk = 4096
    for lo in range(0, len(mats), chunk):
        blk = mats[lo:lo + chunk]
        xp = (blk[:, 0:1] * xs[None, :] + blk[:, 1:2] * ys[None, :]) % q
        yp = (blk[:, 2:3] * xs[None, :] + blk[:, 3:4] * ys[None, :]) % q
        forms = vidx_form[xp * q + yp]
        ok = (forms == vidx_form[None, :]).all(axis=1)
        for row in blk[ok]:
            a, b, c, d = (int(t) for t in row)
            if (a * d - b * c) % q != 0:
                survivors.add((a, b, c, d))
    return survivors


def enumerate_orth(space: QuadSpace):
    """All form-preserving invertible linear maps of a 2-dimensional space.

    Anisotropic: returns the 2(q+1) structured maps, after checking that
    the brute-force matrix scan produces exactly the rotations and
    reflections by norm-one elements.  Hyperbolic: returns the 2(q-1)
    matrices and checks they have the rotation/reflection shape.  The
    dihedral presentation is certified in both cases.
    """
    if space.kind == SPLIT4:
        raise UnsupportedKind("enumeration only for the 2-dimensional kinds")
    ctx = space.ctx
    q = ctx.q
    found = _scan_form_preserving(space)
    if space.kind == ANISOTROPIC:
        maps = [AnisoOrthMap(ctx, c, False) for c in ker_norm(ctx)]
        maps += [AnisoOrthMap(ctx, c, True) for c in ker_norm(ctx)]
        structured = {m.matrix().entries() for m in maps}
        if structured != found:
            raise ArithmeticError("anisotropic orthogonal group scan mismatch")
        if len(maps) != 2 * (q + 1):
            raise ArithmeticError("unexpected anisotropic orthogonal order")
        dihedral_generators(maps, AnisoOrthMap.identity(ctx))
        return maps
    # hyperbolic: diag(a, a^-1) rotations and antidiag(a^-1; a) reflections
    expected = set()
    for a in range(1, q):
        ainv = pow(a, -1, q)
        expected.add((a, 0, 0, ainv))
        expected.add((0, ainv, a, 0))
    if expected != found:
        raise ArithmeticError("hyperbolic orthogonal group scan mismatch")
    mats = [Mat2(q, a, 0, 0, pow(a, -1, q)) for a in range(1, q)]
    mats += [Mat2(q, 0, pow(a, -1, q), a, 0) for a in range(1, q)]
    if len(mats) != 2 * (q - 1):
        raise ArithmeticError("unexpected hyperbolic orthogonal order")
    dihedral_generators(mats, Mat2.identity(q))
    return mats


def dihedral_generators(maps, identity):
    """Exhibit (r, s) with r^n = s^2 = 1, s r s = r^-1, n = |maps| / 2.

    Also checks that the 2n products r^i s^j exhaust the group.  Raises if
    the collection is not dihedral of order 2n.
    """
    n = len(maps) // 2
    r = None
    for m in maps:
        acc, order = m, 1
        while acc != identity:
            acc = acc * m
            order += 1
        if order == n:
            r = m
            break
    if r is None:
        raise ArithmeticError("no rotation of maximal order found")
    powers = [identity]
    for _ in range(n - 1):
        powers.append(powers[-1] * r)
    s = next(m for m in maps if m not in set(powers))
    if s * s != identity:
        raise ArithmeticError("chosen reflection is not an involution")
    rinv = powers[-1]  # r^(n-1) = r^-1
    if s * r * s != rinv:
        raise ArithmeticError("s r s != r^-1")
    elements = set(powers) | {p * s for p in powers}
    if len(elements) != 2 * n or elements != set(maps):
        raise ArithmeticError("products r^i s^j do not exhaust the group")
    return r, s
