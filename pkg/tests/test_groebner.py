import random

import pytest
from gmpy2 import mpq

from g29sing.numberfield import QQ, nf_create
from g29sing.multipoly import (
    GrevLex, Lex, PolyRing, build_invariants, gradient, parse_poly, ring_xyzt,
)
from g29sing.groebner import (
    Budget, BudgetExceeded, GroebnerBasis, Ideal, affine_colength, buchberger,
    eliminate, hilbert_dimension_degree, normal_form,
    projective_dimension_and_degree,
)


def test_gb_of_x_y():
    R = PolyRing(QQ, ("x", "y"))
    gb = buchberger(Ideal(R, [R.var("x"), R.var("y")]), GrevLex())
    assert sorted(str(p) for p in gb.polys) == ["x", "y"]


def test_gb_lex_elimination_example():
    # I = (x^2 - y, y^2 - x), lex x > y: GB contains y^4 - y; NF(x - y^2) = 0
    R = PolyRing(QQ, ("x", "y"))
    x, y = R.gens
    gb = buchberger(Ideal(R, [x * x - y, y * y - x]), Lex())
    strs = [str(p) for p in gb.polys]
    assert "y^4 - y" in strs
    assert normal_form(x - y * y, gb) == R.zero


def test_gb_principal():
    f1 = build_invariants()[0]
    gb = buchberger(Ideal(f1.ring, [f1]), GrevLex())
    assert len(gb.polys) == 1
    lead_coeff = sorted(f1.terms.items())[0]
    assert gb.polys[0] * f1.terms[max(f1.terms, key=GrevLex().key_func(4))] == f1


def test_normal_form_examples():
    R = PolyRing(QQ, ("x", "y"))
    x, y = R.gens
    gb = buchberger(Ideal(R, [x, y]), GrevLex())
    assert normal_form(x * y, gb) == R.zero
    assert normal_form(R.one, gb) == R.one


def test_spair_criterion_small():
    # every S-polynomial of the reduced basis reduces to zero
    R = PolyRing(QQ, ("x", "y", "z"))
    x, y, z = R.gens
    gens = [x * y - z * z, y * y + x * z, x * x * z - y]
    gb = buchberger(Ideal(R, gens), GrevLex())
    key = GrevLex().key_func(3)
    polys = gb.polys
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            mi = max(polys[i].terms, key=key)
            mj = max(polys[j].terms, key=key)
            lcm = tuple(max(a, b) for a, b in zip(mi, mj))
            ui = R.monomial(tuple(a - b for a, b in zip(lcm, mi)))
            uj = R.monomial(tuple(a - b for a, b in zip(lcm, mj)))
            ci = polys[i].terms[mi]
            cj = polys[j].terms[mj]
            spoly = polys[i] * ui * cj - polys[j] * uj * ci
            assert normal_form(spoly, gb) == R.zero


def test_reduced_gb_unique_under_permutation():
    R = PolyRing(QQ, ("x", "y", "z"))
    x, y, z = R.gens
    gens = [x * y - z, y * z - x, z * x - y]
    rng = random.Random(7)
    reference = None
    for _ in range(4):
        shuffled = list(gens)
        rng.shuffle(shuffled)
        gb = buchberger(Ideal(R, shuffled), GrevLex())
        rep = [str(p) for p in gb.polys]
        if reference is None:
            reference = rep
        assert rep == reference


def test_eliminate_substitution():
    R = PolyRing(QQ, ("x", "l", "m"))
    x, l, m = R.gens
    I = Ideal(R, [x * x - l, x - m])
    J = eliminate(I, {"x"})
    assert len(J.generators) == 1
    assert str(J.generators[0]) in ("l - m^2", "m^2 - l", "-l + m^2")
    # normalize: the generator is monic m^2 - l
    g = J.generators[0]
    assert g == parse_poly("m^2 - l", J.ring) or g == parse_poly("l - m^2", J.ring)


def test_eliminate_linear():
    R = PolyRing(QQ, ("x", "y"))
    x, y = R.gens
    J = eliminate(Ideal(R, [x + y, x - y]), {"x"})
    assert [str(p) for p in J.generators] == ["y"]


def _resultant_in_y(p, q):
    """res_x(p, q) as a univariate polynomial in y, by interpolation.

    Specializes y only at points where neither leading x-coefficient drops
    degree, so the specialized resultant equals the specialization.
    """
    from g29sing.numberfield import q_add, q_mul, q_resultant, q_scale

    def x_coeffs(f):
        out = {}
        for m, c in f.terms.items():
            out.setdefault(m[0], {})[m[1]] = c.coeffs[0]
        return out

    pc, qc = x_coeffs(p), x_coeffs(q)
    dxp, dxq = max(pc), max(qc)

    def lead_at(cf, dx, y0):
        return sum(c * mpq(y0) ** e for e, c in cf[dx].items())

    dy = (p.total_degree() + 1) * (q.total_degree() + 1)
    ys, vals = [], []
    y0 = 0
    while len(ys) <= dy:
        if lead_at(pc, dxp, y0) and lead_at(qc, dxq, y0):
            def uni(cf, dx):
                out = []
                for i in range(dx + 1):
                    out.append(sum((c * mpq(y0) ** e for e, c in cf.get(i, {}).items()),
                                   mpq(0)))
                return out
            ys.append(mpq(y0))
            vals.append(q_resultant(uni(pc, dxp), uni(qc, dxq)))
        y0 += 1
    res = []
    for i, (xi, yi) in enumerate(zip(ys, vals)):
        if yi == 0:
            continue
        numpoly = [yi]
        den = mpq(1)
        for j, xj in enumerate(ys):
            if j != i:
                numpoly = q_mul(numpoly, [-xj, mpq(1)])
                den *= (xi - xj)
        res = q_add(res, q_scale(numpoly, 1 / den))
    return res


def test_elimination_vs_resultant_random():
    # res_x(p, q) always lies in the elimination ideal (p, q) ∩ Q[y]
    rng = random.Random(3)
    R = PolyRing(QQ, ("x", "y"))
    checked = 0
    for _ in range(10):
        p = R.zero
        q = R.zero
        for _ in range(5):
            p = p + R.monomial((rng.randint(0, 2), rng.randint(0, 2)), rng.randint(-3, 3))
            q = q + R.monomial((rng.randint(0, 2), rng.randint(0, 2)), rng.randint(-3, 3))
        if not p or not q or p.degree_in("x") == 0 or q.degree_in("x") == 0:
            continue
        res = _resultant_in_y(p, q)
        if not res:
            continue
        J = eliminate(Ideal(R, [p, q]), {"x"})
        if not J.generators:
            continue
        gb = buchberger(Ideal(J.ring, J.generators), GrevLex())
        from g29sing.multipoly import Poly
        res_in_y = Poly(J.ring, {(k,): QQ(c) for k, c in enumerate(res) if c})
        assert normal_form(res_in_y, gb) == J.ring.zero
        checked += 1
    assert checked >= 3


def test_projective_dimension_examples():
    R = ring_xyzt()
    x, y, z, t = R.gens
    # irrelevant ideal: empty scheme
    dim, deg = projective_dimension_and_degree(Ideal(R, [x, y, z, t]))
    assert dim == -1
    # a line
    dim, deg = projective_dimension_and_degree(Ideal(R, [x, y]))
    assert dim == 1 and deg is None
    # complete intersection of x^2, y^3 in P^2
    R3 = PolyRing(QQ, ("x", "y", "z"))
    dim, deg = projective_dimension_and_degree(
        Ideal(R3, [R3.var("x") ** 2, R3.var("y") ** 3]))
    assert dim == 0 and deg == 6


def test_hilbert_complete_intersections_random():
    rng = random.Random(5)
    for _ in range(6):
        degs = [rng.randint(1, 4) for _ in range(3)]
        R3 = PolyRing(QQ, ("x", "y", "z"))
        gens = [R3.var(v) ** d for v, d in zip(("x", "y", "z"), degs)]
        leads = [tuple(d if i == j else 0 for i in range(3))
                 for j, d in enumerate(degs)]
        dim, deg = hilbert_dimension_degree(leads, 3)
        assert dim == 0
        assert deg == degs[0] * degs[1] * degs[2]


def test_euler_relation_quadric():
    R = ring_xyzt()
    x, y, z, t = R.gens
    F = x * x + y * y + z * z + t * t
    J = Ideal(R, gradient(F))
    gb = buchberger(J, GrevLex())
    assert normal_form(F, gb) == R.zero
    dim, deg = projective_dimension_and_degree(gb)
    assert dim == -1


def test_cayley_cubic_jacobian():
    R = ring_xyzt()
    x, y, z, t = R.gens
    F = x * y * z + x * y * t + x * z * t + y * z * t
    gb = buchberger(Ideal(R, gradient(F)), GrevLex())
    dim, deg = projective_dimension_and_degree(gb)
    assert dim == 0 and deg == 4
    assert normal_form(F, gb) == R.zero


def test_budget_pair_cap():
    R = PolyRing(QQ, ("x", "y", "z"))
    x, y, z = R.gens
    gens = [x ** 3 - y * z + x, y ** 3 - x * z + y, z ** 3 - x * y]
    with pytest.raises(BudgetExceeded):
        buchberger(Ideal(R, gens), GrevLex(), Budget(max_basis=2))


def test_gb_over_number_field():
    K = nf_create([-3, 0, 1])
    R = PolyRing(K, ("x", "y"))
    x, y = R.gens
    r3 = R.constant(K.gen)
    gb = buchberger(Ideal(R, [x * x - r3 * y, y * y - K.gen * x]), GrevLex())
    # x^2 = sqrt3 y, y^2 = sqrt3 x => x^4 = 3 y^2 = 3 sqrt3 x
    p = x ** 4 - 3 * r3 * x
    assert normal_form(p, gb) == R.zero


def test_affine_colength():
    R = PolyRing(QQ, ("x", "y"))
    x, y = R.gens
    gb = buchberger(Ideal(R, [x ** 2 - 1, y ** 3 - y]), GrevLex())
    assert affine_colength(gb) == 6
