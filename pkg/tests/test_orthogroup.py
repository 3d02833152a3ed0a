import pytest

from anisogauge import (
    AnisoOrthMap,
    EvenCharacteristic,
    Mat2,
    NotNormOne,
    build_anisotropic,
    build_hyperbolic,
    build_split,
    dihedral_generators,
    enumerate_orth,
    frobenius,
    is_orthogonal,
    ker_norm,
    make_field,
    pick_order_p,
    rotation,
    sigma_map,
    split_embedding,
)


@pytest.mark.parametrize("q,count", [(2, 6), (3, 8), (5, 12), (7, 16)])
def test_anisotropic_orthogonal_order(q, count):
    maps = enumerate_orth(build_anisotropic(make_field(q)))
    assert len(maps) == count == 2 * (q + 1)


@pytest.mark.parametrize("q,count", [(2, 2), (3, 4), (5, 8), (7, 12)])
def test_hyperbolic_orthogonal_order(q, count):
    maps = enumerate_orth(build_hyperbolic(make_field(q)))
    assert len(maps) == count == 2 * (q - 1)


def test_anisotropic_group_is_rotations_and_reflections():
    ctx = make_field(5)
    maps = set(enumerate_orth(build_anisotropic(ctx)))
    expected = {rotation(ctx, c) for c in ker_norm(ctx)}
    expected |= {rotation(ctx, c) * sigma_map(ctx) for c in ker_norm(ctx)}
    assert maps == expected


@pytest.mark.parametrize("q", [2, 3, 5, 7, 11])
def test_dihedral_presentation(q):
    ctx = make_field(q)
    maps = enumerate_orth(build_anisotropic(ctx))
    r, s = dihedral_generators(maps, AnisoOrthMap.identity(ctx))
    assert r.order() == q + 1
    assert (s * s) == AnisoOrthMap.identity(ctx)
    hmaps = enumerate_orth(build_hyperbolic(ctx))
    dihedral_generators(hmaps, Mat2.identity(q))


def test_q2_group_is_symmetric_group_on_three_letters():
    ctx = make_field(2)
    maps = enumerate_orth(build_anisotropic(ctx))
    assert len(maps) == 6
    orders = sorted(m.order() for m in maps)
    assert orders == [1, 2, 2, 2, 3, 3]  # the S3 order profile


def test_rotation_examples():
    ctx = make_field(2)
    assert rotation(ctx, ctx.one) == AnisoOrthMap.identity(ctx)
    assert rotation(ctx, ctx.theta).order() == 3
    ctx5 = make_field(5)
    c = pick_order_p(ctx5, 3)
    assert rotation(ctx5, c).order() == 3
    with pytest.raises(NotNormOne):
        rotation(ctx5, ctx5.elem(2))


def test_rotation_multiplicative_injective():
    ctx = make_field(7)
    seen = set()
    for c in ker_norm(ctx):
        for c2 in ker_norm(ctx):
            assert rotation(ctx, c) * rotation(ctx, c2) == rotation(ctx, c * c2)
        seen.add(rotation(ctx, c))
    assert len(seen) == len(ker_norm(ctx))


def test_is_orthogonal_examples():
    ctx = make_field(5)
    aniso = build_anisotropic(ctx)
    assert is_orthogonal(aniso, lambda v: v)
    assert not is_orthogonal(aniso, lambda v: ctx.elem(2) * v)
    assert is_orthogonal(aniso, frobenius)


def test_split_embedding_identity():
    ctx = make_field(5)
    aniso = build_anisotropic(ctx)
    m = split_embedding(aniso, AnisoOrthMap.identity(ctx))
    ident, zero = Mat2.identity(5), Mat2.zero(5)
    assert m.blocks() == (ident, zero, zero, ident)


def test_split_embedding_rotation_beta_invertible():
    ctx = make_field(5)
    aniso = build_anisotropic(ctx)
    c = pick_order_p(ctx, 3)
    m = split_embedding(aniso, rotation(ctx, c))
    assert m.beta.det() != 0
    assert is_orthogonal(build_split(ctx), m)


def test_split_embedding_fixes_diagonal_everywhere():
    ctx = make_field(7)
    aniso = build_anisotropic(ctx)
    for c in ker_norm(ctx):
        m = split_embedding(aniso, rotation(ctx, c))
        mg = rotation(ctx, c).matrix()
        for x0 in range(7):
            for x1 in range(7):
                assert m.apply_coords((x0, x1, x0, x1)) == (x0, x1, x0, x1)
                gx = mg((x0, x1))
                assert m.apply_coords((x0, x1, -x0, -x1)) == (
                    gx[0], gx[1], (-gx[0]) % 7, (-gx[1]) % 7,
                )


@pytest.mark.parametrize("p,q", [(3, 5), (3, 11), (7, 13)])
def test_split_embedding_homomorphism_on_rotation_subgroup(p, q):
    ctx = make_field(q)
    aniso = build_anisotropic(ctx)
    c = pick_order_p(ctx, p)
    powers = [rotation(ctx, c ** k) for k in range(p)]
    images = {k: split_embedding(aniso, powers[k]) for k in range(p)}
    assert len(set(images.values())) == p  # injective
    for a in range(p):
        for b in range(p):
            assert images[a] * images[b] == images[(a + b) % p]


@pytest.mark.parametrize("p,q", [(3, 5), (3, 11), (5, 19), (7, 13)])
def test_unique_cyclic_subgroup_of_odd_order(p, q):
    ctx = make_field(q)
    maps = enumerate_orth(build_anisotropic(ctx))
    subgroups = set()
    for m in maps:
        if m.order() == p:
            sub = set()
            acc = AnisoOrthMap.identity(ctx)
            for _ in range(p):
                sub.add(acc)
                acc = acc * m
            subgroups.add(frozenset(sub))
    assert len(subgroups) == 1
    c = pick_order_p(ctx, p)
    expected = frozenset(rotation(ctx, c ** k) for k in range(p))
    assert subgroups == {expected}


def test_split_embedding_even_characteristic():
    ctx = make_field(2)
    aniso = build_anisotropic(ctx)
    with pytest.raises(EvenCharacteristic):
        split_embedding(aniso, AnisoOrthMap.identity(ctx))


def test_enumerate_rejects_split_space():
    from anisogauge import UnsupportedKind

    with pytest.raises(UnsupportedKind):
        enumerate_orth(build_split(make_field(5)))


def test_composition_law():
    ctx = make_field(5)
    maps = enumerate_orth(build_anisotropic(ctx))
    for a in maps:
        for b in maps:
            prod = a * b
            for v in list(ctx.elements())[:6]:
                assert prod(v) == a(b(v))
