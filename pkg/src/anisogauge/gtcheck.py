"""The eigenvalue-ratio test for group-theoreticality, plus controls.

The test takes a split-orthogonal block map with invertible off-diagonal
block, forms A = alpha + beta*delta*beta^-1, extracts its eigenvalues in
the quadratic extension, and asks whether their ratio is fixed by the
Galois involution.  Rotations of the anisotropic plane fail the test
(non-group-theoretical); rotations of the hyperbolic plane pass it.
"""

from dataclasses import dataclass

from .errors import (
    BadParameter,
    BetaSingular,
    EvenCharacteristic,
    ExistenceViolated,
    ZeroEigenvalue,
)
from .ffield import ExtElement, FieldCtx, frobenius, is_prime, make_field, pick_order_p, sqrt_ext
from .orthogroup import Mat2, SplitOrthMap, rotation, split_embedding
from .quadspace import build_anisotropic, build_hyperbolic

_ROOT_SCAN_Q = 50


@dataclass(frozen=True)
class GTVerdict:
    group_theoretical: bool
    mu1: ExtElement
    mu2: ExtElement
    ratio: ExtElement | None
    ratio_reversed: ExtElement | None
    witness: str


@dataclass
class SuiteReport:
    entries: list  # (name, passed, detail)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.entries)


def eigenvalues_2x2(m: Mat2, ctx: FieldCtx) -> tuple[ExtElement, ExtElement]:
    """Roots of x^2 - tr(m) x + det(m) in the extension, canonically ordered.

    The discriminant is a base-field element, hence always a square up in
    the extension, so both roots exist.
    """
    if ctx.q == 2:
        raise EvenCharacteristic("eigenvalue extraction needs odd characteristic")
    q = ctx.q
    tr, det = m.tr(), m.det()
    disc = ctx.elem((tr * tr - 4 * det) % q)
    root = sqrt_ext(disc)
    if root is None:
        raise ArithmeticError("base-field discriminant must be a square")
    inv2 = pow(2, -1, q)
    mu1 = (ctx.elem(tr) + root) * inv2
    mu2 = (ctx.elem(tr) - root) * inv2
    mu1, mu2 = sorted((mu1, mu2), key=ExtElement.key)
    if mu1 + mu2 != ctx.elem(tr) or mu1 * mu2 != ctx.elem(det):
        raise ArithmeticError("eigenvalue pair fails the trace/determinant check")
    return mu1, mu2


def gt_criterion(m: SplitOrthMap) -> GTVerdict:
    """Apply the eigenvalue-ratio test to a split-orthogonal block map.

    Requires an invertible beta block.  For maps produced by the split
    embedding, also asserts the block identity
    alpha + beta*delta*beta^-1 = I + g exactly.
    """
    ctx = m.ctx
    if ctx.q == 2:
        raise EvenCharacteristic("criterion needs odd characteristic")
    if m.beta.det() == 0:
        raise BetaSingular("beta block is singular")
    a = m.alpha + m.beta * m.delta * m.beta.inverse()
    if m.source is not None:
        assert a == Mat2.identity(ctx.q) + m.source, "block identity A = I + g failed"
    mu1, mu2 = eigenvalues_2x2(a, ctx)
    if not mu1 or not mu2:
        raise ZeroEigenvalue("an eigenvalue vanishes; ratio undefined")
    ratio = mu1 / mu2
    gt = frobenius(ratio) == ratio
    return GTVerdict(
        group_theoretical=gt,
        mu1=mu1,
        mu2=mu2,
        ratio=ratio,
        ratio_reversed=mu2 / mu1,
        witness=f"frobenius {'fixes' if gt else 'moves'} mu1/mu2 = {ratio!r}",
    )


def hyperbolic_control(q: int, a: int) -> SplitOrthMap:
    """Split embedding of the hyperbolic rotation diag(a, a^-1).

    Requires odd prime q and a outside {0, 1} (so that I - g is
    invertible).  For a != -1 the criterion on the result comes out
    group-theoretical with base-field eigenvalues 1+a and 1+a^-1.
    """
    if not is_prime(q) or q == 2:
        raise BadParameter(f"q={q} must be an odd prime")
    a %= q
    if a in (0, 1):
        raise BadParameter(f"a={a} must avoid 0 and 1 mod q")
    ctx = make_field(q)
    g = Mat2(q, a, 0, 0, pow(a, -1, q))
    return split_embedding(build_hyperbolic(ctx), g)


def quartic_identity_check(q: int) -> bool:
    """Expand (x+1)^3 (x-1) over F_q and compare with x^4 + 2x^3 - 2x - 1.

    For q <= 50 also scans the extension exhaustively and demands that the
    quartic has no roots besides 1 and -1.
    """
    if not is_prime(q):
        raise BadParameter(f"q={q} must be prime")
    cube = [1, 3, 3, 1]  # (x+1)^3
    prod = [0] * 5
    for i, ci in enumerate(cube):  # multiply by (x - 1)
        prod[i] += -ci
        prod[i + 1] += ci
    target = [-1, -2, 0, 2, 1]
    if [c % q for c in prod] != [c % q for c in target]:
        return False
    if q <= _ROOT_SCAN_Q:
        ctx = make_field(q)
        for x in ctx.elements():
            value = ctx.zero
            for c in reversed(target):
                value = value * x + c
            if not value and x != ctx.one and x != -ctx.one:
                return False
    return True


def non_group_theoretical_suite(p: int, q: int) -> SuiteReport:
    """The four-step pipeline certifying the anisotropic rotation gauge fails
    the group-theoreticality test.

    For c the canonical order-p norm-one element: (a) the rotation matrix
    has eigenvalues {c, c^-1} exchanged by Frobenius; (b) the ratio
    (1+c)/(1+c^-1) equals c; (c) that ratio is not Galois-fixed; (d) the
    criterion on the embedded rotation returns non-group-theoretical.
    """
    if not (is_prime(p) and is_prime(q)) or p == 2 or q == 2:
        raise ExistenceViolated(f"({p}, {q}) must be odd primes")
    if p == q or (q + 1) % p != 0:
        raise ExistenceViolated(f"p={p} does not divide q+1={q + 1}")
    ctx = make_field(q)
    c = pick_order_p(ctx, p)
    rho = rotation(ctx, c)
    entries = []

    mu1, mu2 = eigenvalues_2x2(rho.matrix(), ctx)
    ok_a = {mu1, mu2} == {c, c.inverse()} and frobenius(mu1) == mu2
    entries.append(("eigenvalues-swap", ok_a, f"mu = {mu1!r}, {mu2!r}"))

    lam = (ctx.one + c) / (ctx.one + c.inverse())
    ok_b = lam == c
    entries.append(("lambda-equals-c", ok_b, f"lambda = {lam!r}"))

    ok_c = frobenius(lam) != lam
    entries.append(("lambda-not-in-base", ok_c, f"frobenius moves {lam!r}"))

    aniso = build_anisotropic(ctx)
    verdict = gt_criterion(split_embedding(aniso, rho))
    ok_d = not verdict.group_theoretical and verdict.ratio in (c, c.inverse())
    entries.append(("non-gt-verdict", ok_d, verdict.witness))

    return SuiteReport(entries)


def existence_gate(p: int, q: int) -> bool:
    """Whether a non-group-theoretical gauge of total dimension (p*q)^2 can
    exist: odd primes p < q with p dividing q + 1."""
    if not (is_prime(p) and is_prime(q)) or p == 2 or q == 2:
        raise BadParameter(f"({p}, {q}) must be odd primes")
    if not p < q:
        raise BadParameter(f"need p < q, got ({p}, {q})")
    return (q + 1) % p == 0
