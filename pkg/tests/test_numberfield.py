import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from g29sing.numberfield import (
    QQ, AlgebraicNumber, ComplexBall, FieldEmbedding, NumberField,
    ZeroDivisorSplit, adjoin_root, embed_complex, format_algebraic, nf_create,
    parse_algebraic, q_gcd, q_is_squarefree, q_rational_roots, q_resultant,
    q_squarefree_decomposition, rat,
)


def test_nf_create_gaussian():
    K = nf_create([1, 0, 1])  # a^2 + 1
    assert K.degree == 2
    i = K.gen
    assert i * i == K(-1)


def test_nf_create_degree_one_is_q():
    assert nf_create([0, 1]) is QQ
    assert nf_create([-5, 1]) is QQ


def test_nf_create_rejects_nonmonic():
    with pytest.raises(ValueError):
        nf_create([1, 0, 2])


def test_nf_create_rejects_nonsquarefree():
    with pytest.raises(ValueError):
        nf_create([0, 0, 1])  # a^2


def test_sqrt3_field():
    K = nf_create([-3, 0, 1])
    r = K.gen
    assert r * r == K(3)
    assert (1 + r) * (1 - r) == K(-2)
    third = K(1) / r
    assert third * 3 == r  # 1/sqrt3 = sqrt3/3


def test_division_by_zero():
    K = nf_create([-3, 0, 1])
    with pytest.raises(ZeroDivisionError):
        K(1) / K(0)


def test_zero_divisor_split():
    # a^2 - 1 is squarefree but reducible; inverting (a - 1) must split
    K = NumberField((mpq(-1), mpq(0), mpq(1)), symbol="a")
    with pytest.raises(ZeroDivisorSplit) as exc:
        (K.gen - 1).inverse()
    assert len(exc.value.factor) == 2


@given(st.integers(-40, 40), st.integers(-40, 40), st.integers(-40, 40),
       st.integers(-40, 40), st.integers(-40, 40), st.integers(-40, 40))
@settings(max_examples=60, deadline=None)
def test_field_axioms_qsqrt3(a0, a1, b0, b1, c0, c1):
    K = nf_create([-3, 0, 1])
    a, b, c = K((a0, a1)), K((b0, b1)), K((c0, c1))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * a.inverse() == K.one


def test_minimal_polynomial_of_generator():
    K = nf_create([-3, 0, 1])
    assert K.gen.minimal_polynomial() == (mpq(-3), mpq(0), mpq(1))
    assert K(5).minimal_polynomial() == (mpq(-5), mpq(1))


def test_adjoin_root_linear_returns_base():
    K, root, emb = adjoin_root(QQ, [QQ(-5), QQ.one])
    assert K is QQ and root == QQ(5)


def test_adjoin_root_sqrt3():
    K, root, emb = adjoin_root(QQ, [QQ(-3), QQ(0), QQ(1)])
    assert K.degree == 2
    assert root * root == K(3)


def test_adjoin_i_to_sqrt3_gives_degree_4():
    K3, r3, _ = adjoin_root(QQ, [QQ(-3), QQ(0), QQ(1)])
    L, i, emb = adjoin_root(K3, [K3.one, K3.zero, K3.one])
    assert L.degree == 4
    assert i * i == L(-1)
    r3L = emb(r3)
    assert r3L * r3L == L(3)
    # primitive element minimal polynomial annihilates i + sqrt3
    s = i + r3L
    m = s.minimal_polynomial()
    assert len(m) - 1 == 4
    acc = L.zero
    for c in reversed(m):
        acc = acc * s + L(c)
    assert not acc


def test_adjoin_root_rejects_nonsquarefree():
    with pytest.raises(ValueError):
        adjoin_root(QQ, [QQ(0), QQ(0), QQ(1)])


def test_embedding_checks_minpoly():
    K = nf_create([-3, 0, 1])
    with pytest.raises(ValueError):
        FieldEmbedding(K, K, K(2))


def test_embed_complex_sqrt3():
    K = nf_create([-3, 0, 1])
    ball = embed_complex(K.gen, root_index=1, precision_bits=64)
    import mpmath
    with mpmath.workprec(300):
        assert abs(ball.mid - mpmath.sqrt(3)) < mpmath.mpf(2) ** -60
        assert ball.rad < mpmath.mpf(2) ** -60


def test_embed_complex_i():
    K = nf_create([1, 0, 1])
    ball = embed_complex(K.gen, root_index=1, precision_bits=64)
    assert abs(ball.mid.imag - 1) < 1e-15 and abs(ball.mid.real) < 1e-15


def test_embed_complex_rational_is_exact():
    ball = embed_complex(QQ(mpq(1, 45)), root_index=0, precision_bits=64)
    import mpmath
    with mpmath.workprec(300):
        assert ball.rad < mpmath.mpf(2) ** -60
        assert abs(ball.mid - mpmath.mpf(1) / 45) < mpmath.mpf(2) ** -60


def test_embed_is_ring_hom_up_to_enclosure():
    K = nf_create([-3, 0, 1])
    a, b = K((1, 2)), K((mpq(1, 3), -1))
    ea = embed_complex(a, 1, 96)
    eb = embed_complex(b, 1, 96)
    eab = embed_complex(a + b, 1, 96)
    assert eab.overlaps(ea + eb)
    em = embed_complex(a * b, 1, 96)
    assert em.overlaps(ea * eb)


def test_adjoined_root_encloses_zero():
    K3, r3, _ = adjoin_root(QQ, [QQ(-3), QQ(0), QQ(1)])
    L, i, emb = adjoin_root(K3, [K3.one, K3.zero, K3.one])
    val = i * i + 1
    ball = embed_complex(val if val else L.zero, 0, 96)
    assert ball.contains_zero()


def test_format_parse_roundtrip():
    K = nf_create([-3, 0, 1])
    elem = K((mpq(3, 384), mpq(1, 384)))
    text = format_algebraic(elem)
    assert text == "(3+a)/384"
    assert parse_algebraic(text, K) == elem
    assert parse_algebraic("-5/7", QQ) == QQ(mpq(-5, 7))
    e2 = K((mpq(-5, 6912), mpq(3, 6912)))
    assert parse_algebraic(format_algebraic(e2), K) == e2


def test_rational_roots():
    # (x - 2)(x + 1/3)(x^2 + 1)
    p = [mpq(1), mpq(1, 1)]  # placeholder; build by multiplication
    from g29sing.numberfield import q_mul
    p = q_mul(q_mul([-2, 1], [mpq(1, 3), 1]), [1, 0, 1])
    roots = q_rational_roots(p)
    assert set(roots) == {mpq(2), mpq(-1, 3)}


def test_resultant_matches_common_root():
    # res(x^2-1, x-1) = 0; res(x^2+1, x-1) = 2
    assert q_resultant([-1, 0, 1], [-1, 1]) == 0
    assert q_resultant([1, 0, 1], [-1, 1]) == 2


def test_squarefree_decomposition():
    from g29sing.numberfield import q_mul
    p = q_mul(q_mul([-1, 1], [-1, 1]), [1, 1])  # (x-1)^2 (x+1)
    dec = q_squarefree_decomposition(p)
    assert sorted((tuple(f), m) for f, m in dec) == [((mpq(-1), mpq(1)), 2),
                                                     ((mpq(1), mpq(1)), 1)]
