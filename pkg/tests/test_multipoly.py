import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from g29sing.numberfield import QQ, nf_create
from g29sing.multipoly import (
    BlockElim, GrevLex, Lex, Poly, PolyRing, build_invariants, evaluate,
    exact_divide, format_poly, gcd_poly, gradient, grevlex_key_func,
    grevlex_unkey_func, hessian_det, is_squarefree, lex_key_func,
    parse_poly, partial_derivative, pencil_parts, poly_arithmetic,
    ring_xyzt, sigma4, substitute, taylor_shift,
)


@pytest.fixture(scope="module")
def R():
    return ring_xyzt()


def test_basic_arithmetic(R):
    x, y = R.var("x"), R.var("y")
    assert poly_arithmetic(x + y, x - y, "mul") == x * x - y * y
    f1 = build_invariants()[0]
    assert f1 + R.zero == f1
    with pytest.raises(ValueError):
        poly_arithmetic(x, PolyRing(QQ, ("u",)).var("u"), "add")


def test_sigma4_examples(R):
    s = sigma4(R, (1, 1, 0, 0))
    assert s.num_terms() == 6
    assert s == parse_poly("x*y + x*z + x*t + y*z + y*t + z*t", R)
    assert sigma4(R, (1, 1, 1, 1)).num_terms() == 1
    assert sigma4(R, (4, 0, 0, 0)).num_terms() == 4


def test_sigma4_fixed_by_all_permutations(R):
    import itertools
    s = sigma4(R, (3, 2, 1, 0))
    for perm in itertools.permutations(range(4)):
        moved = Poly(R, {tuple(m[perm[i]] for i in range(4)): c
                         for m, c in s.terms.items()})
        assert moved == s


def test_invariants_degrees(R):
    f1, f2, f3 = build_invariants()
    assert f1.total_degree() == 4 and f2.total_degree() == 8 and f3.total_degree() == 12
    assert f1.is_homogeneous() and f2.is_homogeneous() and f3.is_homogeneous()
    assert f3.degree_in("x") == 8
    assert (f1 * f2).total_degree() == 12


def test_invariant_evaluations(R):
    f1, _, _ = build_invariants()
    one = [QQ(1), QQ(0), QQ(0), QQ(0)]
    assert evaluate(f1, one) == QQ(1)
    allone = [QQ(1)] * 4
    assert evaluate(f1, allone) == QQ(-32)


def test_partial_derivative(R):
    x = R.var("x")
    assert partial_derivative(x ** 4, "x") == 4 * x ** 3
    f1 = build_invariants()[0]
    d = partial_derivative(f1, "x")
    assert evaluate(d, [QQ(1), QQ(0), QQ(0), QQ(0)]) == QQ(4)
    assert partial_derivative(R.constant(7), "x") == R.zero


def test_hessian_quadric(R):
    x, y, z, t = R.gens
    q = x * x + y * y + z * z + t * t
    assert hessian_det(q) == R.constant(16)


def test_hessian_f1_proportional_f2(R):
    f1, f2, _ = build_invariants()
    h = hessian_det(f1)
    ratio = exact_divide(h, f2)
    assert ratio.is_constant()
    c = ratio.constant_coefficient()
    assert c and c.is_rational()
    # the proportionality is exact
    assert h == f2 * c


def test_hessian_xyzt(R):
    x, y, z, t = R.gens
    h = hessian_det(x * y * z * t)
    m = x ** 2 * y ** 2 * z ** 2 * t ** 2
    ratio = exact_divide(h, m)
    assert ratio.is_constant()
    assert ratio.constant_coefficient() == QQ(-3)


def test_evaluate_respects_products(R):
    f1, f2, _ = build_invariants()
    pt = [QQ(2), QQ(-1), QQ(mpq(1, 3)), QQ(5)]
    assert evaluate(f1 * f2, pt) == evaluate(f1, pt) * evaluate(f2, pt)


def test_substitute_powers(R):
    Rx = PolyRing(QQ, ("x",))
    x = Rx.var("x")
    assert substitute(x * x + 1, {"x": x * x}) == x ** 4 + 1


def test_substitute_dehomogenize(R):
    f1 = build_invariants()[0]
    R3 = PolyRing(QQ, ("x", "y", "z"))
    aff = substitute(f1, {"x": R3.var("x"), "y": R3.var("y"),
                          "z": R3.var("z"), "t": R3.one}, target_ring=R3)
    assert aff.total_degree() == 4
    assert evaluate(aff, [QQ(1), QQ(1), QQ(1)]) == QQ(-32)


def test_substitute_kth_power_degree(R):
    _, _, f3 = build_invariants()
    sq = {v: R.var(v) ** 2 for v in R.variables}
    lifted = substitute(f3, sq)
    assert lifted.total_degree() == 24


def test_taylor_shift(R):
    x, y = R.var("x"), R.var("y")
    p = x * x * y + 3 * x
    expected = substitute(p, {"x": x + R.constant(2)}, target_ring=R)
    assert taylor_shift(p, "x", QQ(2)) == expected


def test_gcd_examples(R):
    x, y = R.var("x"), R.var("y")
    assert gcd_poly(x * x - y * y, x - y) == x - y
    f1 = build_invariants()[0]
    assert gcd_poly(f1, partial_derivative(f1, "x")).is_constant()
    p = x * y + y * y
    assert gcd_poly(p, R.zero) == y * (x + y) * mpq(1, 1)


def test_is_squarefree(R):
    x, y = R.var("x"), R.var("y")
    assert not is_squarefree((x + y) ** 2)
    assert is_squarefree(x * x + y * y)
    f1, f2, f3 = build_invariants()
    assert is_squarefree(f1)


def test_squarefree_scaling_invariant(R):
    x, y = R.var("x"), R.var("y")
    p = x ** 3 + y
    assert is_squarefree(p) == is_squarefree(p * mpq(7, 3))


def test_grevlex_key_order():
    key = grevlex_key_func(3)
    # x > y > z in grevlex at equal degree
    assert key((1, 0, 0)) > key((0, 1, 0)) > key((0, 0, 1))
    assert key((2, 0, 0)) > key((1, 1, 0))
    assert key((0, 2, 0)) > key((1, 0, 1))  # y^2 > xz in grevlex
    unkey = grevlex_unkey_func(3)
    for m in [(1, 2, 3), (0, 0, 0), (5, 0, 2)]:
        assert unkey(key(m)) == m
    # additivity
    assert key((1, 2, 3)) + key((2, 0, 1)) == key((3, 2, 4))


def test_lex_key_order():
    key = lex_key_func(2)
    assert key((1, 0)) > key((0, 5))
    assert key((2, 1)) > key((2, 0))


def test_block_key_eliminates_front():
    order = BlockElim(1)
    key = order.key_func(3)
    # any power of the front variable beats anything without it
    assert key((1, 0, 0)) > key((0, 9, 9))


def test_format_parse_roundtrip(R):
    f1, f2, f3 = build_invariants()
    for p in (f1, f2, f3, R.zero, R.one):
        assert parse_poly(format_poly(p), R) == p
    K = nf_create([-3, 0, 1])
    RK = PolyRing(K, ("x", "y"))
    p = RK.monomial((2, 1), K((mpq(3, 384), mpq(1, 384)))) - RK.monomial((0, 0), K.gen)
    assert parse_poly(format_poly(p), RK) == p


@given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4),
                          st.integers(-9, 9)), min_size=1, max_size=6))
@settings(max_examples=40, deadline=None)
def test_parse_roundtrip_random(terms):
    R2 = PolyRing(QQ, ("x", "y"))
    p = R2.zero
    for a, b, c in terms:
        p = p + R2.monomial((a, b), c)
    assert parse_poly(format_poly(p), R2) == p


def test_pencil_parts_degree(R):
    g3, g21, g111 = pencil_parts()
    assert g3.total_degree() == g21.total_degree() == g111.total_degree() == 12
