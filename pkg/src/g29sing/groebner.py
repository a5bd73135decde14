"""Buchberger engine over number fields, with elimination and Hilbert data.

Global orders only; local standard bases live in ``localsing``.  Coefficients
run fraction-free inside the kernel: every reducer is scaled to an integral
polynomial whose leading coefficient is a plain positive integer, and the
accumulator divides out integer content as it goes.  Budgets are explicit:
blowing one raises BudgetExceeded rather than ever returning a wrong answer.
"""

from __future__ import annotations

import heapq
import time
from functools import lru_cache

from gmpy2 import gcd as _gcd, lcm as _lcm, mpq, mpz

from .kernel import BudgetExceeded, reduce_full
from .multipoly import GrevLex, Lex, BlockElim, Poly, PolyRing
from .numberfield import QQ, AlgebraicNumber


class Budget:
    """Resource caps for one Groebner run."""

    def __init__(self, max_pairs=200000, max_basis=5000, max_heap=4_000_000,
                 seconds=None):
        self.max_pairs = max_pairs
        self.max_basis = max_basis
        self.max_heap = max_heap
        self.deadline = time.monotonic() + seconds if seconds else None

    def check(self, stage):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceeded(stage, "wall clock")


DEFAULT_BUDGET = Budget()


class Ideal:
    """Ideal with nonzero generators in a fixed ring."""

    def __init__(self, ring, generators):
        self.ring = ring
        self.generators = [g for g in generators if g]

    def __repr__(self):
        return f"Ideal({len(self.generators)} gens in {self.ring!r})"


class GroebnerBasis:
    """Reduced Groebner basis: monic, auto-reduced, deterministic."""

    def __init__(self, ring, order, polys, stats=None):
        self.ring = ring
        self.order = order
        self.polys = polys
        self.stats = stats or {}

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def leading_exponents(self):
        key = self.order.key_func(self.ring.nvars())
        return [max(p.terms, key=key) for p in self.polys]


class _QOps:
    """Integral coefficient arithmetic over Q (gmpy2.mpz scalars)."""

    __slots__ = ()
    degree = 1
    zero = mpz(0)
    one = mpz(1)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def is_zero(a):
        return not a

    @staticmethod
    def from_int(n):
        return mpz(n)

    @staticmethod
    def content(a):
        return abs(a)

    @staticmethod
    def content_many(values):
        g = mpz(0)
        for v in values:
            g = _gcd(g, v)
            if g == 1:
                return mpz(1)
        return g if g else mpz(1)

    @staticmethod
    def scale_int(a, n):
        return a * n

    @staticmethod
    def div_int(a, n):
        return a // n


class _NFOps:
    """Integral coefficient arithmetic over a number field: tuples of mpz.

    Requires the field's minimal polynomial to be integral (monic with
    integer coefficients) so that reduction stays in Z[alpha].  For pure
    quadratic fields Z[w], w^2 = s, a best-effort Euclidean gcd supplies
    *algebraic* content removal: without it, junk unit-multiples (powers of
    1+sqrt(3) and friends) balloon the intermediate coefficients.
    """

    __slots__ = ("field", "degree", "zero", "one", "_red", "_quad_s")

    def __init__(self, field):
        self.field = field
        self.degree = field.degree
        d = field.degree
        self.zero = (mpz(0),) * d
        self.one = (mpz(1),) + (mpz(0),) * (d - 1)
        if any(c.denominator != 1 for c in field.minpoly):
            raise ValueError("Groebner engine needs an integral minimal polynomial")
        self._red = [tuple(mpz(c) for c in row) for row in field._red]
        self._quad_s = None
        if d == 2 and field.minpoly[1] == 0:
            self._quad_s = mpz(-field.minpoly[0])  # w^2 = s

    # -- algebraic content (quadratic fields only, best effort) ---------

    def _quad_norm(self, v):
        a, b = v
        return a * a - self._quad_s * b * b

    @staticmethod
    def _round_nearest(x, n):
        q, r = divmod(x, n)
        if 2 * abs(r) >= abs(n):
            q += 1
        return q

    def _quad_divmod(self, u, v):
        """Nearest-quotient division u = q*v + r in Z[w]; r may be None."""
        a, b = u
        c, d = v
        n = self._quad_norm(v)
        if not n:
            return None, None
        s = self._quad_s
        # u * conj(v) = (a*c - s*b*d, b*c - a*d)
        xr = a * c - s * b * d
        xi = b * c - a * d
        qr = self._round_nearest(xr, n)
        qi = self._round_nearest(xi, n)
        rr = (a - (qr * c + s * qi * d), b - (qr * d + qi * c))
        return (qr, qi), rr

    def quad_gcd(self, u, v):
        """Gcd in Z[w] by norm-Euclid; returns one-ish on failure."""
        for _ in range(256):
            if not any(v):
                return u
            q, r = self._quad_divmod(u, v)
            if q is None:
                return (mpz(1), mpz(0))
            if any(r) and abs(self._quad_norm(r)) >= abs(self._quad_norm(v)):
                return (mpz(1), mpz(0))
            u, v = v, r
        return (mpz(1), mpz(0))

    def alg_content_many(self, values):
        """A common Z[w]-divisor of all values (possibly trivial)."""
        if self._quad_s is None:
            return None
        g = (mpz(0), mpz(0))
        for vec in values:
            g = self.quad_gcd(g, (mpz(vec[0]), mpz(vec[1])))
            if abs(self._quad_norm(g)) == 1:
                return None
        if not any(g) or abs(self._quad_norm(g)) == 1:
            return None
        return g

    def alg_divexact(self, vec, g):
        """vec / g exactly in Z[w]."""
        a, b = vec
        c, d = g
        n = self._quad_norm(g)
        s = self._quad_s
        xr = a * c - s * b * d
        xi = b * c - a * d
        return (xr // n, xi // n)

    @staticmethod
    def add(a, b):
        return tuple(x + y for x, y in zip(a, b))

    @staticmethod
    def sub(a, b):
        return tuple(x - y for x, y in zip(a, b))

    def mul(self, a, b):
        d = self.degree
        conv = [mpz(0)] * (2 * d - 1)
        for i in range(d):
            ai = a[i]
            if ai:
                for j in range(d):
                    if b[j]:
                        conv[i + j] += ai * b[j]
        out = conv[:d]
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                row = self._red[k - d]
                for i in range(d):
                    if row[i]:
                        out[i] += c * row[i]
        return tuple(out)

    @staticmethod
    def neg(a):
        return tuple(-x for x in a)

    @staticmethod
    def is_zero(a):
        return not any(a)

    def from_int(self, n):
        return (mpz(n),) + (mpz(0),) * (self.degree - 1)

    @staticmethod
    def content(a):
        g = mpz(0)
        for v in a:
            g = _gcd(g, v)
            if g == 1:
                return mpz(1)
        return g if g else mpz(1)

    @staticmethod
    def content_many(values):
        g = mpz(0)
        for vec in values:
            for v in vec:
                g = _gcd(g, v)
            if g == 1:
                return mpz(1)
        return g if g else mpz(1)

    @staticmethod
    def scale_int(a, n):
        return tuple(x * n for x in a)

    @staticmethod
    def div_int(a, n):
        return tuple(x // n for x in a)


def _ops_for(field):
    return _QOps() if field.is_rational else _NFOps(field)


def _pack_rational(poly, keyfunc):
    """Packed form with exact rational (mpq / mpq-tuple) coefficients."""
    pairs = sorted(((keyfunc(m), c) for m, c in poly.terms.items()), reverse=True)
    keys = [k for k, _ in pairs]
    if poly.ring.field.is_rational:
        coeffs = [c.coeffs[0] for _, c in pairs]
    else:
        coeffs = [c.coeffs for _, c in pairs]
    return keys, coeffs


def _integerize(keys, coeffs, ops):
    """Clear denominators and content; returns integral coefficient list."""
    if ops.degree == 1:
        den = mpz(1)
        for c in coeffs:
            den = _lcm(den, c.denominator)
        ints = [mpz(c * den) for c in coeffs]
    else:
        den = mpz(1)
        for vec in coeffs:
            for c in vec:
                den = _lcm(den, c.denominator)
        ints = [tuple(mpz(c * den) for c in vec) for vec in coeffs]
    cont = ops.content_many(ints)
    if cont > 1:
        ints = [ops.div_int(c, cont) for c in ints]
    return ints


def _monic_rational(keys, coeffs, ops, field):
    """Divide by the lead coefficient: returns rational coefficient list."""
    if ops.degree == 1:
        inv = mpq(1) / mpq(coeffs[0])
        return [mpq(c) * inv for c in coeffs]
    lead = tuple(mpq(c) for c in coeffs[0])
    inv = field.inv_vec(lead)
    return [field.mul_vec(tuple(mpq(x) for x in c), inv) for c in coeffs]


def _basis_entry(keys, int_coeffs, ops, field, unkey):
    """Normalize an integral poly into a reducer with integer lead.

    Over Q: flip sign so the lead is positive.  Over a field: make monic,
    then clear denominators; the lead becomes (D, 0, ..., 0).
    """
    if ops.degree == 1:
        if int_coeffs[0] < 0:
            int_coeffs = [-c for c in int_coeffs]
        lead_int = int_coeffs[0]
        tail = int_coeffs[1:]
    else:
        lead = int_coeffs[0]
        if any(lead[1:]):
            monic = _monic_rational(keys, int_coeffs, ops, field)
            int_coeffs = _integerize(keys, monic, ops)
        if any(int_coeffs[0][1:]) or int_coeffs[0][0] <= 0:
            if int_coeffs[0][0] < 0 and not any(int_coeffs[0][1:]):
                int_coeffs = [ops.neg(c) for c in int_coeffs]
            else:
                raise AssertionError("lead normalization failed")
        lead_int = int_coeffs[0][0]
        tail = int_coeffs[1:]
    return (keys[0], unkey(keys[0]), lead_int, keys[1:], tail)


def _unpack_monic(keys, int_coeffs, ring, unkey, ops):
    """Poly from integral packed form, divided by its lead (monic output)."""
    field = ring.field
    monic = _monic_rational(keys, int_coeffs, ops, field)
    if field.is_rational:
        terms = {unkey(k): field(c) for k, c in zip(keys, monic)}
    else:
        terms = {unkey(k): AlgebraicNumber(field, c) for k, c in zip(keys, monic)}
    return Poly(ring, terms)


def _unpack_scaled(keys, int_coeffs, scale, alg, ring, unkey, ops):
    """Poly equal to (packed ints) / scale / alg exactly."""
    field = ring.field
    inv = 1 / scale
    if field.is_rational:
        terms = {unkey(k): field(mpq(c) * inv) for k, c in zip(keys, int_coeffs)}
        return Poly(ring, terms)
    alg_inv = None
    if alg is not None:
        alg_inv = field.inv_vec(tuple(mpq(x) for x in alg))
    terms = {}
    for k, c in zip(keys, int_coeffs):
        vec = tuple(mpq(x) * inv for x in c)
        if alg_inv is not None:
            vec = field.mul_vec(vec, alg_inv)
        terms[unkey(k)] = AlgebraicNumber(field, vec)
    return Poly(ring, terms)


def _exp_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _exp_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class _Engine:
    def __init__(self, ring, order, budget):
        self.ring = ring
        self.order = order
        self.budget = budget or DEFAULT_BUDGET
        self.n = ring.nvars()
        self.keyfunc = order.key_func(self.n)
        self.unkey = order.unkey_func(self.n)
        self.ops = _ops_for(ring.field)
        # basis entries: (lead_key, lead_exp, lead_int, tail_keys, tail_coeffs)
        self.basis = []
        self.lead_exps = []
        self.lead_degs = []
        self.sugars = []

    def divisor_index(self, key):
        exp = self.unkey(key)
        deg = sum(exp)
        best = -1
        best_len = None
        for i, le in enumerate(self.lead_exps):
            if self.lead_degs[i] <= deg and _exp_divides(le, exp):
                tlen = len(self.basis[i][3])
                if best_len is None or tlen < best_len:
                    best = i
                    best_len = tlen
        return best

    def add_poly(self, poly):
        keys, coeffs = _pack_rational(poly, self.keyfunc)
        return keys, _integerize(keys, coeffs, self.ops)

    def add_basis_element(self, keys, int_coeffs, sugar):
        entry = _basis_entry(keys, int_coeffs, self.ops, self.ring.field, self.unkey)
        self.basis.append(entry)
        self.lead_exps.append(entry[1])
        self.lead_degs.append(sum(entry[1]))
        self.sugars.append(sugar)
        if len(self.basis) > self.budget.max_basis:
            raise BudgetExceeded("buchberger", "basis size cap")
        return entry

    def full_reduce(self, streams):
        return reduce_full(streams, self.basis, self.divisor_index, self.ops,
                           self.budget)


def buchberger(ideal, order=None, budget=None):
    """Reduced Groebner basis; deterministic for fixed input and order."""
    order = order or GrevLex()
    if not order.is_global:
        raise ValueError("buchberger needs a global order; use the Mora engine")
    ring = ideal.ring
    eng = _Engine(ring, order, budget)
    gens = [g for g in ideal.generators if g]
    if not gens:
        return GroebnerBasis(ring, order, [], {"pairs": 0})
    packed = sorted((eng.add_poly(g) for g in gens), reverse=True)

    pairs = []  # heap of (sugar, lcm_key, t, i)
    pair_set = {}

    def gm_update(new_index):
        """Gebauer-Moeller pair update for the freshly added element."""
        t = new_index
        lt = eng.lead_exps[t]
        cand = []
        for i in range(t):
            lcm = _exp_lcm(eng.lead_exps[i], lt)
            cand.append((i, lcm, sum(lcm)))
        keep = []
        for i, lcm, d in cand:
            dominated = False
            for j, lcm2, _d2 in cand:
                if j != i and lcm2 != lcm and _exp_divides(lcm2, lcm):
                    dominated = True
                    break
            if not dominated:
                keep.append((i, lcm, d))
        seen_lcm = {}
        for i, lcm, d in keep:
            if lcm not in seen_lcm:
                seen_lcm[lcm] = (i, d)
        new_pairs = []
        for lcm, (i, d) in seen_lcm.items():
            li = eng.lead_exps[i]
            if all(a == 0 or b == 0 for a, b in zip(li, lt)):
                continue  # product criterion
            new_pairs.append((i, lcm, d))
        for (i, j), (lcm, alive) in list(pair_set.items()):
            if not alive:
                continue
            if _exp_divides(lt, lcm):
                lcm_it = _exp_lcm(eng.lead_exps[i], lt)
                lcm_jt = _exp_lcm(eng.lead_exps[j], lt)
                if lcm_it != lcm and lcm_jt != lcm:
                    pair_set[(i, j)] = (lcm, False)
        for i, lcm, d in new_pairs:
            sugar = max(eng.sugars[i] + d - eng.lead_degs[i],
                        eng.sugars[t] + d - eng.lead_degs[t])
            heapq.heappush(pairs, (sugar, eng.keyfunc(lcm), t, i))
            pair_set[(i, t)] = (lcm, True)

    stats = {"pairs": 0, "zero_reductions": 0}
    for keys, int_coeffs in packed:
        if not keys:
            continue
        nf_keys, nf_coeffs, _scale, _alg = eng.full_reduce(
            [(0, eng.ops.one, keys, int_coeffs)])
        if not nf_keys:
            continue
        eng.add_basis_element(nf_keys, nf_coeffs, sum(eng.unkey(nf_keys[0])))
        gm_update(len(eng.basis) - 1)

    while pairs:
        sugar, _lcm_key, t, i = heapq.heappop(pairs)
        rec = pair_set.get((i, t))
        if rec is None or not rec[1]:
            continue
        pair_set[(i, t)] = (rec[0], False)
        stats["pairs"] += 1
        if stats["pairs"] > eng.budget.max_pairs:
            raise BudgetExceeded("buchberger", "pair cap")
        eng.budget.check("buchberger")
        lcm = rec[0]
        lk_i, _, D_i, tk_i, tc_i = eng.basis[i]
        lk_t, _, D_t, tk_t, tc_t = eng.basis[t]
        gma = _gcd(D_i, D_t)
        lcm_key = eng.keyfunc(lcm)
        streams = [(lcm_key - lk_i, eng.ops.from_int(D_t // gma), tk_i, tc_i),
                   (lcm_key - lk_t, eng.ops.from_int(-(D_i // gma)), tk_t, tc_t)]
        nf_keys, nf_coeffs, _scale, _alg = eng.full_reduce(streams)
        if not nf_keys:
            stats["zero_reductions"] += 1
            continue
        eng.add_basis_element(nf_keys, nf_coeffs, sugar)
        gm_update(len(eng.basis) - 1)

    # minimalize: drop elements whose lead is divisible by another lead
    order_idx = sorted(range(len(eng.basis)), key=lambda k: eng.basis[k][0])
    minimal = []
    for k in order_idx:
        le = eng.lead_exps[k]
        if not any(_exp_divides(eng.lead_exps[m], le) for m in minimal if m != k):
            minimal.append(k)
    # tail-reduce each survivor against the others
    min_entries = [eng.basis[k] for k in minimal]
    reduced = []
    for pos, k in enumerate(minimal):
        lead_key, lead_exp, lead_int, tkeys, tcoeffs = eng.basis[k]
        others = [min_entries[m] for m in range(len(minimal)) if m != pos]
        if others and tkeys:
            def div_idx(key, _others=others, _unkey=eng.unkey):
                exp = _unkey(key)
                for idx2, entry in enumerate(_others):
                    if _exp_divides(entry[1], exp):
                        return idx2
                return -1

            tk, tc, tscale, talg = reduce_full(
                [(0, eng.ops.one, tkeys, tcoeffs)], others, div_idx, eng.ops,
                eng.budget)
            # rebuild lead * x^L + tails/(tscale*talg); the lead absorbs the
            # scale since the whole thing is monicized on unpacking
            lead_c = eng.ops.from_int(lead_int)
            if talg is not None:
                lead_c = eng.ops.mul(lead_c, tuple(mpz(x) for x in talg))
            num = tscale.numerator
            den = tscale.denominator
            keys = [lead_key] + list(tk)
            coeffs = ([eng.ops.scale_int(lead_c, num)]
                      + [eng.ops.scale_int(c, den) for c in tc])
        else:
            keys = [lead_key] + list(tkeys)
            coeffs = [eng.ops.from_int(lead_int)] + list(tcoeffs)
        reduced.append((keys, coeffs))

    reduced.sort(key=lambda e: -e[0][0])
    polys = [_unpack_monic(keys, coeffs, ring, eng.unkey, eng.ops)
             for keys, coeffs in reduced]
    stats["basis_size"] = len(polys)
    return GroebnerBasis(ring, order, polys, stats)


def normal_form(p, gb, budget=None):
    """Unique remainder of p modulo the basis; zero iff p is in the ideal."""
    ring = gb.ring
    eng = _Engine(ring, gb.order, budget)
    for poly in gb.polys:
        keys, ints = eng.add_poly(poly)
        eng.add_basis_element(keys, ints, sum(eng.unkey(keys[0])))
    keys, ints = eng.add_poly(p)
    if not keys:
        return ring.zero
    nf_keys, nf_coeffs, scale, alg = eng.full_reduce([(0, eng.ops.one, keys, ints)])
    if not nf_keys:
        return ring.zero
    # the input was integerized: recover the normal form of the original p
    in_keys, in_coeffs = _pack_rational(p, eng.keyfunc)
    lead_in = in_coeffs[0] if ring.field.is_rational else None
    # scale back: reduce_full reduced (p * clear) where clear = ints/p
    # compute clear from the first packed coefficient
    if ring.field.is_rational:
        clear = mpq(ints[0]) / in_coeffs[0]
    else:
        # first nonzero coordinate ratio
        vec_in = in_coeffs[0]
        vec_int = ints[0]
        for a, b in zip(vec_int, vec_in):
            if b:
                clear = mpq(a) / b
                break
    return _unpack_scaled(nf_keys, nf_coeffs, scale * clear, alg, ring,
                          eng.unkey, eng.ops)


def eliminate(ideal, front_variables, budget=None):
    """Generators of the ideal's intersection with the back subring."""
    ring = ideal.ring
    front = [v for v in ring.variables if v in front_variables]
    back = [v for v in ring.variables if v not in front_variables]
    perm_ring = PolyRing(ring.field, tuple(front + back))

    def move(p, dst):
        src_positions = [dst._var_index.get(v) for v in p.ring.variables]
        out = {}
        for m, c in p.terms.items():
            mm = [0] * dst.nvars()
            for i, e in enumerate(m):
                if e:
                    pos = src_positions[i]
                    if pos is None:
                        raise ValueError("variable lost in elimination move")
                    mm[pos] = e
            out[tuple(mm)] = dst.field(c)
        return Poly(dst, out)

    moved = Ideal(perm_ring, [move(g, perm_ring) for g in ideal.generators])
    gb = buchberger(moved, BlockElim(len(front)), budget)
    back_ring = PolyRing(ring.field, tuple(back))
    kept = []
    nfront = len(front)
    for p in gb.polys:
        if all(all(e == 0 for e in m[:nfront]) for m in p.terms):
            kept.append(move(p, back_ring))
    return Ideal(back_ring, kept)


# ---------------------------------------------------------------------------
# Hilbert data of the leading-term staircase
# ---------------------------------------------------------------------------

def _minimalize_monomials(gens):
    gens = sorted(set(gens), key=lambda m: (sum(m), m))
    out = []
    for m in gens:
        if not any(_exp_divides(g, m) for g in out):
            out.append(m)
    return out


def _hilbert_numerator(gens, nvars):
    """Numerator N(t) with HS_{R/M}(t) = N(t)/(1-t)^nvars, as coeff list."""
    gens = tuple(_minimalize_monomials(gens))

    @lru_cache(maxsize=None)
    def rec(ms):
        if not ms:
            return (1,)
        if any(sum(m) == 0 for m in ms):
            return (0,)
        # base case: all generators pure powers -> product of (1 - t^deg)
        if all(sum(1 for e in m if e) == 1 for m in ms):
            poly = [1]
            for m in ms:
                d = sum(m)
                term = [0] * (d + 1)
                term[0] = 1
                term[d] = -1
                poly = _poly_mul_int(poly, term)
            return tuple(poly)
        # pivot from the mixed-support generators (guarantees progress)
        mixed = [m for m in ms if sum(1 for e in m if e) > 1]
        counts = [0] * nvars
        for m in mixed:
            for i, e in enumerate(m):
                if e:
                    counts[i] += 1
        piv_var = max(range(nvars), key=lambda i: counts[i])
        piv_exp = min(m[piv_var] for m in mixed if m[piv_var])
        pivot = tuple(piv_exp if i == piv_var else 0 for i in range(nvars))
        plus = _minimalize_monomials(list(ms) + [pivot])
        colon = _minimalize_monomials(
            tuple(max(e - (piv_exp if i == piv_var else 0), 0)
                  for i, e in enumerate(m)) for m in ms)
        a = rec(tuple(plus))
        b = rec(tuple(colon))
        shifted = [0] * piv_exp + list(b)
        return tuple(_poly_add_int(list(a), shifted))

    return list(rec(gens))


def _poly_mul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    while out and out[-1] == 0:
        out.pop()
    return out


def _poly_add_int(a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    while out and out[-1] == 0:
        out.pop()
    return out


def hilbert_dimension_degree(lead_exponents, nvars):
    """Affine dimension (pole order of HS) and multiplicity of the staircase.

    HS_{R/M}(t) = N(t)/(1-t)^nvars; cancelling (1-t)-factors of N leaves
    Q(t) with Q(1) != 0, the pole order nvars - #cancellations is the affine
    Krull dimension and Q(1) the corresponding multiplicity.  Returns
    (-1, 0) when 1 lies in the ideal (empty affine scheme).
    """
    if not lead_exponents:
        return nvars, 1
    if any(sum(m) == 0 for m in lead_exponents):
        return -1, 0
    num = _hilbert_numerator(tuple(lead_exponents), nvars)
    cancels = 0
    cur = list(num)
    while cur and sum(cur) == 0:
        acc = 0
        quo = []
        for c in cur[:-1]:
            acc += c
            quo.append(acc)
        cur = quo
        cancels += 1
    return nvars - cancels, sum(cur)


def projective_dimension_and_degree(ideal_or_gb, order=None, budget=None):
    """(dimension of Proj, degree when dimension is 0) from a grevlex GB.

    dimension -1 means the projective scheme is empty.  All generators must
    be homogeneous.
    """
    if isinstance(ideal_or_gb, GroebnerBasis):
        gb = ideal_or_gb
    else:
        for g in ideal_or_gb.generators:
            if not g.is_homogeneous():
                raise ValueError("projective data needs homogeneous generators")
        gb = buchberger(ideal_or_gb, order or GrevLex(), budget)
    if not gb.polys:
        return gb.ring.nvars() - 1, None
    leads = gb.leading_exponents()
    nvars = gb.ring.nvars()
    aff_dim, degree = hilbert_dimension_degree(leads, nvars)
    if aff_dim <= 0:
        return -1, None
    proj_dim = aff_dim - 1
    return proj_dim, (degree if proj_dim == 0 else None)


def affine_colength(gb):
    """dim_K of R/I for a zero-dimensional affine ideal (else None)."""
    if not gb.polys:
        return None
    leads = gb.leading_exponents()
    nvars = gb.ring.nvars()
    aff_dim, degree = hilbert_dimension_degree(leads, nvars)
    if aff_dim == -1:
        return 0
    if aff_dim != 0:
        return None
    return degree
