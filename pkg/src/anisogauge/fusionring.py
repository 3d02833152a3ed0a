"""Fusion rings, simple-object censuses, and group-rank oracles.

The central construction is the degree-graded ring with q^2 invertibles
indexed by the extension field and p-1 non-invertibles X_1..X_{p-1}; its
axioms are checked exhaustively (with a vectorized shortcut for the pure
group-like block, which is a Cayley-table associativity check).  Censuses
are plain inventories (label, dimension, count) whose weighted square sum
must reproduce the declared global dimension.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BadParameter, BoundExceeded, ExistenceViolated, NotACharacter, NotPrime
from .ffield import ExtElement, is_prime, make_field, pick_order_p

DOUBLE_RANK_BOUND = 200
CROSS_CHECK_BOUND = 2000


class FusionRing:
    """Basis labels, duality involution, and a sparse structure tensor.

    `tensor` maps (i, j) to the row {k: N_ij^k} with only nonzero entries
    stored.  Construction does not validate the axioms; use verify_axioms.
    """

    def __init__(self, basis, unit: str, dual: dict, tensor: dict):
        self.basis = list(basis)
        self.unit = unit
        self.dual = dict(dual)
        self.tensor = tensor
        self.index = {l: t for t, l in enumerate(self.basis)}

    def n(self, i: str, j: str, k: str) -> int:
        return self.tensor.get((i, j), {}).get(k, 0)

    def product(self, i: str, j: str) -> dict:
        return self.tensor.get((i, j), {})

    def __repr__(self):
        return f"FusionRing(rank={len(self.basis)}, unit={self.unit!r})"


@dataclass
class AxiomReport:
    passed: bool
    unit_ok: bool
    assoc_ok: bool
    duality_ok: bool
    counterexample: str | None = None


@dataclass(frozen=True)
class Census:
    """Simple-object inventory; weighted square sum must match global_dim."""

    entries: tuple
    global_dim: int

    def __post_init__(self):
        total = sum(count * dim * dim for _, dim, count in self.entries)
        if total != self.global_dim:
            raise ArithmeticError(
                f"census squares sum to {total}, declared {self.global_dim}"
            )

    @property
    def rank(self) -> int:
        return sum(count for _, _, count in self.entries)

    def dims_multiset(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for _, dim, count in self.entries:
            out[dim] = out.get(dim, 0) + count
        return out


def _inv_label(v: ExtElement) -> str:
    return f"g{v.a0}_{v.a1}"


def build_extension_ring(p: int, q: int) -> FusionRing:
    """The graded ring with invertibles from the extension field and X_1..X_{p-1}.

    Rules: a*b = a+b on invertibles, a*X_i = X_i*a = X_i,
    X_i*X_j = q*X_{i+j} for i+j != p and the sum of all invertibles for
    i+j = p; X_i^* = X_{p-i}.  Exists only when p | q+1.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if not is_prime(q):
        raise NotPrime(f"{q} is not prime")
    if p == q or (q + 1) % p != 0:
        raise ExistenceViolated(f"p={p} does not divide q+1={q + 1}")
    ctx = make_field(q)
    invs = sorted(ctx.elements(), key=ExtElement.key)
    inv_labels = [_inv_label(v) for v in invs]
    x_labels = [f"X{i}" for i in range(1, p)]
    basis = inv_labels + x_labels
    unit = _inv_label(ctx.zero)
    dual = {_inv_label(v): _inv_label(-v) for v in invs}
    dual.update({f"X{i}": f"X{p - i}" for i in range(1, p)})

    tensor: dict = {}
    for v in invs:
        lv = _inv_label(v)
        for w in invs:
            tensor[(lv, _inv_label(w))] = {_inv_label(v + w): 1}
    for i in range(1, p):
        xi = f"X{i}"
        for lv in inv_labels:
            tensor[(lv, xi)] = {xi: 1}
            tensor[(xi, lv)] = {xi: 1}
        for j in range(1, p):
            if (i + j) % p == 0:
                tensor[(xi, f"X{j}")] = {l: 1 for l in inv_labels}
            else:
                tensor[(xi, f"X{j}")] = {f"X{(i + j) % p}": q}
    return FusionRing(basis, unit, dual, tensor)


def _grouplike_block(ring: FusionRing) -> set | None:
    """Labels whose rows are all single-term with coefficient 1, if closed."""
    tensor = ring.tensor
    empty: dict = {}
    out = set()
    for i in ring.basis:
        ok = True
        for j in ring.basis:
            for row in (tensor.get((i, j), empty), tensor.get((j, i), empty)):
                if len(row) != 1 or next(iter(row.values())) != 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.add(i)
    for a in out:
        for b in out:
            if next(iter(tensor[(a, b)])) not in out:
                return None
    return out


def _assoc_triple(ring: FusionRing, i: str, j: str, k: str) -> bool:
    rij = ring.product(i, j)
    rjk = ring.product(j, k)
    if len(rij) == 1 and len(rjk) == 1:
        # (i j) k = cm * (m k)  vs  i (j k) = cn * (i m2): compare scaled rows
        ((m, cm),) = rij.items()
        ((m2, cn),) = rjk.items()
        left = ring.product(m, k)
        right = ring.product(i, m2)
        if cm == 1 and cn == 1:
            return left == right
        if left.keys() != right.keys():
            return False
        return all(cm * v == cn * right[l] for l, v in left.items())
    lhs: dict = {}
    for m, cm in rij.items():
        for l, cl in ring.product(m, k).items():
            lhs[l] = lhs.get(l, 0) + cm * cl
    rhs: dict = {}
    for m, cm in rjk.items():
        for l, cl in ring.product(i, m).items():
            rhs[l] = rhs.get(l, 0) + cm * cl
    return lhs == rhs


def verify_axioms(ring: FusionRing) -> AxiomReport:
    """Exhaustive unit/associativity/duality check.

    Associativity runs over every triple; triples entirely inside the
    group-like block are checked through a vectorized Cayley-table pass,
    everything else by direct row expansion.  The report carries the
    lexicographically first counterexample found.
    """
    basis = ring.basis
    idx = ring.index
    unit_ok, duality_ok, assoc_ok = True, True, True
    counterexample = None

    for j in basis:
        if ring.product(ring.unit, j) != {j: 1} or ring.product(j, ring.unit) != {j: 1}:
            unit_ok = False
            counterexample = counterexample or f"unit law fails at {j}"
            break

    for i in basis:
        if ring.dual.get(ring.dual.get(i)) != i:
            duality_ok = False
            counterexample = counterexample or f"dual not involutive at {i}"
            break
    if duality_ok:
        for i in basis:
            for j in basis:
                want = 1 if j == ring.dual[i] else 0
                if ring.n(i, j, ring.unit) != want:
                    duality_ok = False
                    counterexample = counterexample or f"N({i},{j};unit) != {want}"
                    break
            if not duality_ok:
                break
    if duality_ok:
        for (i, j), row in ring.tensor.items():
            for k, v in row.items():
                if ring.n(ring.dual[i], k, j) != v or ring.n(k, ring.dual[j], i) != v:
                    duality_ok = False
                    counterexample = counterexample or f"reciprocity fails at N({i},{j};{k})"
                    break
            if not duality_ok:
                break

    block = _grouplike_block(ring)
    assoc_fail = None  # (i_idx, j_idx, k_idx)
    tensor = ring.tensor
    empty: dict = {}

    if block:
        slabels = [i for i in basis if i in block]
        spos = {l: t for t, l in enumerate(slabels)}
        ns = len(slabels)
        table = np.empty((ns, ns), dtype=np.int32)
        for a, la in enumerate(slabels):
            for b, lb in enumerate(slabels):
                table[a, b] = spos[next(iter(tensor[(la, lb)]))]
        for a in range(ns):
            lhs = table[table[a]]
            rhs = table[a][table]
            if not np.array_equal(lhs, rhs):
                b, c = map(int, np.argwhere(lhs != rhs)[0])
                assoc_fail = (idx[slabels[a]], idx[slabels[b]], idx[slabels[c]])
                break

    members = block if block is not None else set()
    nonmembers = [k for k in basis if k not in members]
    for i in basis:
        i_in = i in members
        for j in basis:
            ks = nonmembers if (i_in and j in members) else basis
            rij = tensor.get((i, j), empty)
            single_ij = len(rij) == 1
            if single_ij:
                ((m, cm),) = rij.items()
            for k in ks:
                rjk = tensor.get((j, k), empty)
                if single_ij and len(rjk) == 1:
                    ((m2, cn),) = rjk.items()
                    left = tensor.get((m, k), empty)
                    right = tensor.get((i, m2), empty)
                    if cm == 1 and cn == 1:
                        if left == right:
                            continue
                    elif left.keys() == right.keys() and all(
                        cm * v == cn * right[l] for l, v in left.items()
                    ):
                        continue
                elif _assoc_triple(ring, i, j, k):
                    continue
                cand = (idx[i], idx[j], idx[k])
                if assoc_fail is None or cand < assoc_fail:
                    assoc_fail = cand
                break
            else:
                continue
            break
        else:
            continue
        break

    if assoc_fail is not None:
        assoc_ok = False
        i, j, k = (basis[t] for t in assoc_fail)
        counterexample = counterexample or f"associativity fails at ({i},{j},{k})"

    return AxiomReport(
        passed=unit_ok and assoc_ok and duality_ok,
        unit_ok=unit_ok,
        assoc_ok=assoc_ok,
        duality_ok=duality_ok,
        counterexample=counterexample,
    )


def fp_dims(ring: FusionRing) -> dict:
    """The unique positive character d with d(i)d(j) = sum_k N_ij^k d(k).

    First proposes integer dimensions from the ring structure (1 on the
    group-like block, sqrt of the weight of i * i^dual when that row stays
    in the block) and certifies the character equations exactly.  If the
    proposal does not verify it falls back to a power-iteration eigenvector
    rationalized and re-certified exactly; NotACharacter if neither works.
    """
    basis = ring.basis
    block = _grouplike_block(ring) or set()
    proposal: dict | None = {}
    for i in basis:
        if i in block:
            proposal[i] = 1
            continue
        row = ring.product(i, ring.dual.get(i))
        if set(row) <= block:
            s = sum(row.values())
            r = math.isqrt(s)
            if r * r == s and r > 0:
                proposal[i] = r
            else:
                proposal = None
                break
        else:
            proposal = None
            break

    if proposal is not None and _certify_character(ring, proposal):
        return proposal

    approx = _power_iteration(ring)
    if approx is not None:
        rational = {
            i: Fraction(x).limit_denominator(10 ** 6) for i, x in zip(basis, approx)
        }
        if all(v > 0 for v in rational.values()) and _certify_character(ring, rational):
            return {
                i: int(v) if v.denominator == 1 else v for i, v in rational.items()
            }
    raise NotACharacter("no consistent positive character found")


def _certify_character(ring: FusionRing, d: dict) -> bool:
    if any(v <= 0 for v in d.values()):
        return False
    if d.get(ring.unit) != 1:
        return False
    for i in ring.basis:
        for j in ring.basis:
            total = sum(v * d[k] for k, v in ring.product(i, j).items())
            if d[i] * d[j] != total:
                return False
    return True


def _power_iteration(ring: FusionRing, iters: int = 5000, tol: float = 1e-14):
    basis = ring.basis
    idx = ring.index
    n = len(basis)
    jj, kk, vv = [], [], []
    for (i, j), row in ring.tensor.items():
        for k, v in row.items():
            jj.append(idx[j])
            kk.append(idx[k])
            vv.append(v)
    jj = np.array(jj)
    kk = np.array(kk)
    vv = np.array(vv, dtype=np.float64)
    v = np.ones(n)
    for _ in range(iters):
        w = np.zeros(n)
        np.add.at(w, kk, vv * v[jj])
        nw = np.linalg.norm(w)
        if nw == 0:
            return None
        w /= nw
        if np.max(np.abs(w - v)) < tol:
            v = w
            break
        v = w
    u = idx[ring.unit]
    if v[u] <= 0:
        return None
    return v / v[u]


def fp_global_dim(ring: FusionRing) -> int:
    d = fp_dims(ring)
    return sum(v * v for v in d.values())


def orbit_census(p: int, q: int) -> list[tuple[ExtElement, ...]]:
    """Orbits of v -> c*v on the nonzero field elements; all have size p."""
    if not (is_prime(p) and is_prime(q)):
        raise NotPrime(f"({p}, {q}) must be prime")
    if p == q or (q + 1) % p != 0:
        raise ExistenceViolated(f"p={p} does not divide q+1={q + 1}")
    ctx = make_field(q)
    c = pick_order_p(ctx, p)
    seen: set = set()
    orbits = []
    for v in ctx.elements():
        if not v or v in seen:
            continue
        orbit = [v]
        w = c * v
        while w != v:
            orbit.append(w)
            w = c * w
        if len(orbit) != p:
            raise ArithmeticError(f"orbit of {v!r} has size {len(orbit)}, expected {p}")
        seen.update(orbit)
        orbits.append(tuple(sorted(orbit, key=ExtElement.key)))
    orbits.sort(key=lambda o: o[0].key())
    if len(orbits) != (q * q - 1) // p:
        raise ArithmeticError("wrong number of orbits")
    return orbits


def equivariantization_census(p: int, q: int) -> Census:
    """Simple objects after the cyclic-group equivariantization.

    Three families: p invertibles (unit with a character), one p-dimensional
    object per free orbit, and p(p-1) q-dimensional pairs (X_i, character).
    Rank is p^2 + (q^2 - 1) / p and the squares sum to (p*q)^2.
    """
    n_orbits = len(orbit_census(p, q))
    entries = (
        ("(1,chi)", 1, p),
        ("orbit-sum", p, n_orbits),
        ("(X_i,chi)", q, p * (p - 1)),
    )
    census = Census(entries, p * p * q * q)
    if census.rank != p * p + (q * q - 1) // p:
        raise ArithmeticError("census rank disagrees with the closed formula")
    return census


def semidirect_group_table(p: int, q: int) -> np.ndarray:
    """Multiplication table of the extension field (additively) twisted by c.

    Element (v, k) has index k*q^2 + (a0*q + a1); the product is
    (v + c^k w, k + l).
    """
    ctx = make_field(q)
    c = pick_order_p(ctx, p)
    q2 = q * q
    xs, ys = np.divmod(np.arange(q2, dtype=np.int64), q)
    vadd = ((xs[:, None] + xs[None, :]) % q) * q + (ys[:, None] + ys[None, :]) % q

    perms = np.empty((p, q2), dtype=np.int64)
    acc = ctx.one
    for k in range(p):
        # coords of acc * w for all w, via the multiplication matrix of acc
        col1 = acc * ctx.one
        col2 = acc * ctx.theta
        nx = (col1.a0 * xs + col2.a0 * ys) % q
        ny = (col1.a1 * xs + col2.a1 * ys) % q
        perms[k] = nx * q + ny
        acc = acc * c

    n = p * q2
    table = np.empty((n, n), dtype=np.int32)
    for k in range(p):
        for l in range(p):
            kl = (k + l) % p
            table[k * q2:(k + 1) * q2, l * q2:(l + 1) * q2] = kl * q2 + vadd[:, perms[k]]
    return table


def group_identity(table: np.ndarray) -> int:
    n = len(table)
    hits = np.nonzero((table == np.arange(n, dtype=table.dtype)[None, :]).all(axis=1))[0]
    if len(hits) != 1:
        raise BadParameter("table has no unique identity")
    return int(hits[0])


def group_inverses(table: np.ndarray) -> np.ndarray:
    e = group_identity(table)
    inv = np.argmax(table == e, axis=1)
    if not (table[np.arange(len(table)), inv] == e).all():
        raise BadParameter("table has non-invertible elements")
    return inv


def conjugacy_classes(table: np.ndarray) -> list[np.ndarray]:
    """Partition of the element set into conjugacy classes."""
    n = len(table)
    inv = group_inverses(table)
    visited = np.zeros(n, dtype=bool)
    classes = []
    for g in range(n):
        if visited[g]:
            continue
        cls = np.unique(table[table[:, g], inv])
        visited[cls] = True
        classes.append(cls)
    return classes


def validate_group_table(table: np.ndarray) -> None:
    """Identity, latin-square, inverse and associativity checks."""
    n = len(table)
    if table.shape != (n, n):
        raise BadParameter("table is not square")
    if table.min() < 0 or table.max() >= n:
        raise BadParameter("table entries out of range")
    ar = np.arange(n, dtype=table.dtype)
    for axis in (0, 1):
        if not (np.sort(table, axis=axis) == (ar[:, None] if axis == 0 else ar[None, :])).all():
            raise BadParameter("table rows/columns are not permutations")
    group_inverses(table)
    for a in range(n):
        if not np.array_equal(table[table[a]], table[a][table]):
            raise BadParameter("table is not associative")


def semidirect_irreps(p: int, q: int) -> Census:
    """Irreducible-representation census of the order-p*q^2 twisted product.

    Little-group method on the characters of the translation part: the
    trivial character is fixed and contributes p linear irreps; every other
    character lies in a free orbit of size p and induces one p-dimensional
    irrep.  Cross-validated against brute-force conjugacy-class counting
    whenever the group order is at most 2000.
    """
    if not (is_prime(p) and is_prime(q)):
        raise NotPrime(f"({p}, {q}) must be prime")
    if p == q or (q + 1) % p != 0:
        raise ExistenceViolated(f"p={p} does not divide q+1={q + 1}")
    ctx = make_field(q)
    c = pick_order_p(ctx, p)

    # dual action on characters chi_w: w -> M^T w for M the matrix of v -> c*v
    col1, col2 = c * ctx.one, c * ctx.theta
    orbits = 0
    seen = set()
    for w in ((a, b) for a in range(q) for b in range(q)):
        if w == (0, 0) or w in seen:
            continue
        orbit = [w]
        cur = w
        while True:
            cur = ((col1.a0 * cur[0] + col1.a1 * cur[1]) % q,
                   (col2.a0 * cur[0] + col2.a1 * cur[1]) % q)
            if cur == w:
                break
            orbit.append(cur)
        if len(orbit) != p:
            raise ArithmeticError("character orbit is not free")
        seen.update(orbit)
        orbits += 1
    if orbits != (q * q - 1) // p:
        raise ArithmeticError("wrong number of character orbits")

    census = Census((("linear", 1, p), ("induced", p, orbits)), p * q * q)
    if p * q * q <= CROSS_CHECK_BOUND:
        classes = conjugacy_classes(semidirect_group_table(p, q))
        if len(classes) != census.rank:
            raise ArithmeticError(
                f"class count {len(classes)} disagrees with census rank {census.rank}"
            )
    return census


def drinfeld_double_rank(table: np.ndarray) -> int:
    """Rank of the double: sum over class representatives of the number of
    conjugacy classes of the centralizer."""
    table = np.asarray(table)
    n = len(table)
    if n > DOUBLE_RANK_BOUND:
        raise BoundExceeded(f"group order {n} exceeds {DOUBLE_RANK_BOUND}")
    validate_group_table(table)
    total = 0
    for cls in conjugacy_classes(table):
        g = int(cls[0])
        cent = np.nonzero(table[:, g] == table[g, :])[0]
        pos = np.full(n, -1, dtype=np.int64)
        pos[cent] = np.arange(len(cent))
        sub = pos[table[np.ix_(cent, cent)]]
        if sub.min() < 0:
            raise ArithmeticError("centralizer is not closed")
        total += len(conjugacy_classes(sub))
    return total


def cyclic_group_ring(n: int) -> FusionRing:
    """Group ring of Z/n with basis g0..g(n-1)."""
    labels = [f"g{k}" for k in range(n)]
    dual = {f"g{k}": f"g{(-k) % n}" for k in range(n)}
    tensor = {
        (f"g{a}", f"g{b}"): {f"g{(a + b) % n}": 1} for a in range(n) for b in range(n)
    }
    return FusionRing(labels, "g0", dual, tensor)


def ring_to_text(ring: FusionRing) -> str:
    """Plain-text form: header, one dual line per basis label, then the
    nonzero tensor entries as 0-based index quadruples in lexicographic order."""
    idx = ring.index
    lines = [f"fusionring v1 {len(ring.basis)}"]
    for l in ring.basis:
        if " " in l:
            raise BadParameter(f"label {l!r} contains a space")
        lines.append(f"{l} {ring.dual[l]}")
    quads = []
    for (i, j), row in ring.tensor.items():
        for k, v in row.items():
            quads.append((idx[i], idx[j], idx[k], v))
    quads.sort()
    lines.extend(f"{i} {j} {k} {v}" for i, j, k, v in quads)
    return "\n".join(lines) + "\n"


def ring_from_text(text: str) -> FusionRing:
    lines = [l for l in text.splitlines() if l.strip()]
    head = lines[0].split()
    if head[:2] != ["fusionring", "v1"]:
        raise BadParameter("bad header")
    n = int(head[2])
    basis, dual = [], {}
    for line in lines[1:1 + n]:
        label, dlabel = line.split()
        basis.append(label)
        dual[label] = dlabel
    tensor: dict = {}
    for line in lines[1 + n:]:
        i, j, k, v = line.split()
        key = (basis[int(i)], basis[int(j)])
        tensor.setdefault(key, {})[basis[int(k)]] = int(v)
    unit = None
    for u in basis:
        if all(
            tensor.get((u, j), {}) == {j: 1} and tensor.get((j, u), {}) == {j: 1}
            for j in basis
        ):
            unit = u
            break
    if unit is None:
        raise BadParameter("no unit found in serialized ring")
    return FusionRing(basis, unit, dual, tensor)
