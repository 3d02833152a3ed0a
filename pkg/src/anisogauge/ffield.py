"""Exact arithmetic in the prime field F_q and its quadratic extension.

Elements of the extension are written a0 + a1*theta, where theta is a root
of the canonical defining polynomial: x^2 - d with d the least quadratic
non-residue mod q (odd q), or x^2 + x + 1 for q = 2.  All arithmetic is
plain integer arithmetic mod q; there is no floating point anywhere.

Everything here is immutable and deterministic: the same q always yields
the same field model, so downstream results are reproducible bit for bit.
q = 2 is supported in restricted mode (no operation that divides by 2).
"""

from functools import lru_cache
from typing import Iterator

from .errors import BoundExceeded, NoSuchElement, NotPrime

DEFAULT_PRIME_BOUND = 10_000


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (desk-scale inputs)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def least_nonresidue(q: int) -> int:
    """Smallest quadratic non-residue mod an odd prime q."""
    squares = {pow(a, 2, q) for a in range(1, q)}
    for d in range(2, q):
        if d not in squares:
            return d
    raise NoSuchElement(f"no quadratic non-residue mod {q}")


class FieldCtx:
    """The quadratic extension of F_q, fixed by its canonical defining polynomial.

    The polynomial is stored as (c0, c1) meaning x^2 + c1*x + c0, so the
    generator theta satisfies theta^2 = -c1*theta - c0.
    """

    __slots__ = ("q", "poly", "d")

    def __init__(self, q: int):
        if not is_prime(q):
            raise NotPrime(f"{q} is not prime")
        self.q = q
        if q == 2:
            self.poly = (1, 1)  # x^2 + x + 1
            self.d = None
        else:
            d = least_nonresidue(q)
            self.poly = ((-d) % q, 0)  # x^2 - d
            self.d = d
        # irreducibility: no root in F_q, checked by exhaustive evaluation
        c0, c1 = self.poly
        for a in range(q):
            if (a * a + c1 * a + c0) % q == 0:
                raise ArithmeticError(f"defining polynomial reducible mod {q}")

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self.q == other.q and self.poly == other.poly

    def __hash__(self):
        return hash((self.q, self.poly))

    def __repr__(self):
        return f"FieldCtx(q={self.q}, poly={self.poly_str()})"

    def poly_str(self) -> str:
        if self.q == 2:
            return "x^2 + x + 1"
        return f"x^2 - {self.d}"

    def elem(self, a0: int, a1: int = 0) -> "ExtElement":
        return ExtElement(self, a0, a1)

    @property
    def zero(self) -> "ExtElement":
        return ExtElement(self, 0, 0)

    @property
    def one(self) -> "ExtElement":
        return ExtElement(self, 1, 0)

    @property
    def theta(self) -> "ExtElement":
        return ExtElement(self, 0, 1)

    def elements(self) -> Iterator["ExtElement"]:
        """All q^2 elements in (a0, a1) lexicographic order."""
        for a0 in range(self.q):
            for a1 in range(self.q):
                yield ExtElement(self, a0, a1)

    def base_elements(self) -> Iterator["ExtElement"]:
        for a in range(self.q):
            yield ExtElement(self, a, 0)


class ExtElement:
    """An element a0 + a1*theta of the quadratic extension."""

    __slots__ = ("ctx", "a0", "a1")

    def __init__(self, ctx: FieldCtx, a0: int, a1: int = 0):
        self.ctx = ctx
        self.a0 = a0 % ctx.q
        self.a1 = a1 % ctx.q

    def _coerce(self, other) -> "ExtElement":
        if isinstance(other, ExtElement):
            return other
        if isinstance(other, int):
            return ExtElement(self.ctx, other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ExtElement(self.ctx, self.a0 + o.a0, self.a1 + o.a1)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ExtElement(self.ctx, self.a0 - o.a0, self.a1 - o.a1)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return ExtElement(self.ctx, -self.a0, -self.a1)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        q = self.ctx.q
        c0, c1 = self.ctx.poly
        # (a0 + a1 t)(b0 + b1 t) with t^2 = -c1 t - c0
        hi = self.a1 * o.a1
        return ExtElement(
            self.ctx,
            (self.a0 * o.a0 - c0 * hi) % q,
            (self.a0 * o.a1 + self.a1 * o.a0 - c1 * hi) % q,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "ExtElement":
        if n < 0:
            return self.inverse() ** (-n)
        acc = self.ctx.one
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def inverse(self) -> "ExtElement":
        n = norm(self)
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return frobenius(self) * pow(n, -1, self.ctx.q)

    def __eq__(self, other):
        if isinstance(other, int):
            other = ExtElement(self.ctx, other, 0)
        return (
            isinstance(other, ExtElement)
            and self.ctx == other.ctx
            and self.a0 == other.a0
            and self.a1 == other.a1
        )

    def __hash__(self):
        return hash((self.a0, self.a1, self.ctx.q))

    def __bool__(self):
        return self.a0 != 0 or self.a1 != 0

    def key(self) -> tuple[int, int]:
        """Canonical (a0, a1) sort key."""
        return (self.a0, self.a1)

    @property
    def in_base(self) -> bool:
        return self.a1 == 0

    def __repr__(self):
        if self.a1 == 0:
            return f"{self.a0}"
        return f"{self.a0}+{self.a1}t"


def make_field(q: int, bound: int = DEFAULT_PRIME_BOUND) -> FieldCtx:
    """Construct the canonical quadratic extension of F_q.

    Deterministic for fixed q.  Raises NotPrime / BoundExceeded.
    """
    if not is_prime(q):
        raise NotPrime(f"{q} is not prime")
    if q > bound:
        raise BoundExceeded(f"q={q} exceeds bound {bound}")
    return FieldCtx(q)


def frobenius(x: ExtElement) -> ExtElement:
    """The involution x -> x^q; fixes exactly the base field."""
    q = x.ctx.q
    if q == 2:
        return ExtElement(x.ctx, x.a0 + x.a1, x.a1)
    # theta^q = -theta since theta^2 is a non-residue
    return ExtElement(x.ctx, x.a0, -x.a1)


def norm(x: ExtElement) -> int:
    """Multiplicative norm x * x^q, landing in the base field."""
    q = x.ctx.q
    if q == 2:
        return (x.a0 * x.a0 + x.a0 * x.a1 + x.a1 * x.a1) % 2
    return (x.a0 * x.a0 - x.ctx.d * x.a1 * x.a1) % q


def trace(x: ExtElement) -> int:
    """Additive trace x + x^q, landing in the base field."""
    if x.ctx.q == 2:
        return x.a1
    return (2 * x.a0) % x.ctx.q


@lru_cache(maxsize=None)
def ker_norm(ctx: FieldCtx) -> tuple[ExtElement, ...]:
    """All norm-one elements, sorted by (a0, a1); a cyclic group of order q + 1.

    Computed by exhaustive scan; cyclicity is certified by exhibiting a
    generator of order exactly q + 1.
    """
    members = tuple(x for x in ctx.elements() if norm(x) == 1)
    n = ctx.q + 1
    if len(members) != n:
        raise ArithmeticError(f"norm-one subgroup has size {len(members)}, expected {n}")
    for g in members:
        order = 1
        acc = g
        while acc != ctx.one:
            acc = acc * g
            order += 1
        if order == n:
            break
    else:
        raise ArithmeticError("norm-one subgroup is not cyclic")
    return members


def pick_order_p(ctx: FieldCtx, p: int) -> ExtElement:
    """Lexicographically smallest c != 1 with norm(c) = 1 and c^p = 1.

    Requires p prime and p | q + 1 (otherwise NoSuchElement).
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if (ctx.q + 1) % p != 0:
        raise NoSuchElement(f"{p} does not divide q+1 = {ctx.q + 1}")
    for c in ker_norm(ctx):
        if c != ctx.one and c ** p == ctx.one:
            return c
    raise NoSuchElement(f"no element of order {p} in the norm-one subgroup")


def sqrt_ext(x: ExtElement) -> ExtElement | None:
    """A canonical square root of x in the extension, or None if x is not a square.

    Every base-field element is a square up here.  The canonical choice is
    the smaller of {y, -y} in (a0, a1) order.
    """
    ctx = x.ctx
    if not x:
        return ctx.zero
    n = ctx.q * ctx.q - 1
    if n % 2 == 1:  # q = 2: odd group order, everything is a square
        y = x ** ((n + 1) // 2)
    else:
        if x ** (n // 2) != ctx.one:
            return None
        # Tonelli-Shanks in the multiplicative group of order n
        s, m = n, 0
        while s % 2 == 0:
            s //= 2
            m += 1
        z = next(e for e in ctx.elements() if e and e ** (n // 2) == -ctx.one)
        c = z ** s
        y = x ** ((s + 1) // 2)
        t = x ** s
        while t != ctx.one:
            t2 = t
            i = 0
            while t2 != ctx.one:
                t2 = t2 * t2
                i += 1
            b = c ** (1 << (m - i - 1))
            y = y * b
            c = b * b
            t = t * c
            m = i
    if y * y != x:
        raise ArithmeticError("square-root extraction failed")
    return min(y, -y, key=ExtElement.key)
