"""Exact arithmetic in Q and in absolute number fields Q(a).

Elements are coefficient vectors in the power basis of a single generator
whose monic squarefree minimal polynomial is fixed at field creation.
Towers are flattened on creation (see :func:`adjoin_root`), so every field
is presented as an absolute extension of Q.

Rationals are gmpy2.mpq throughout: always normalized, hashable, fast.
"""

from __future__ import annotations

import itertools

from gmpy2 import mpq, mpz
import mpmath

Rational = mpq

_QQ_MINPOLY = (mpq(0), mpq(1))  # the polynomial a - 0, i.e. Q itself


class ZeroDivisorSplit(Exception):
    """A non-invertible element revealed a factor of the minimal polynomial.

    Raised during inversion when gcd(elem, minpoly) is proper.  Callers that
    work in fields built from unfactored polynomials catch this, split the
    field along ``factor`` and retry (dynamic-evaluation style).
    """

    def __init__(self, field, factor):
        super().__init__(f"minimal polynomial of {field.symbol} splits")
        self.field = field
        self.factor = tuple(factor)


def rat(value) -> mpq:
    """Coerce ints/strings like '-3/384' to an exact rational."""
    if isinstance(value, mpq):
        return value
    return mpq(value)


# ---------------------------------------------------------------------------
# dense univariate polynomials over Q: lists of mpq, low degree first
# ---------------------------------------------------------------------------

def q_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def q_add(p, q):
    n = max(len(p), len(q))
    out = [mpq(0)] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return q_trim(out)


def q_neg(p):
    return [-c for c in p]


def q_scale(p, c):
    c = rat(c)
    if c == 0:
        return []
    return [a * c for a in p]


def q_mul(p, q):
    if not p or not q:
        return []
    out = [mpq(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return q_trim(out)


def q_divmod(p, q):
    if not q:
        raise ZeroDivisionError("univariate division by zero polynomial")
    p = list(p)
    quo = [mpq(0)] * max(0, len(p) - len(q) + 1)
    inv = 1 / q[-1]
    while len(p) >= len(q):
        c = p[-1] * inv
        k = len(p) - len(q)
        quo[k] = c
        for i, b in enumerate(q):
            p[k + i] -= c * b
        q_trim(p)
        if not p:
            break
    return q_trim(quo), p


def q_gcd(p, q):
    """Monic gcd over Q."""
    a, b = [rat(c) for c in p], [rat(c) for c in q]
    while b:
        a, b = b, q_divmod(a, b)[1]
    if a:
        inv = 1 / a[-1]
        a = [c * inv for c in a]
    return a


def q_deriv(p):
    return [i * c for i, c in enumerate(p)][1:]


def q_eval(p, x):
    acc = mpq(0) if isinstance(x, mpq) else x * 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def q_squarefree_part(p):
    g = q_gcd(p, q_deriv(p))
    if len(g) <= 1:
        out = list(p)
    else:
        out = q_divmod(p, g)[0]
    if out:
        inv = 1 / out[-1]
        out = [c * inv for c in out]
    return out


def q_is_squarefree(p):
    return len(q_gcd(p, q_deriv(p))) <= 1


def q_squarefree_decomposition(p):
    """Yun's algorithm: list of (factor, multiplicity), factors monic."""
    p = list(p)
    if len(p) <= 1:
        return []
    inv = 1 / p[-1]
    p = [c * inv for c in p]
    dp = q_deriv(p)
    g = q_gcd(p, dp)
    if len(g) <= 1:
        return [(p, 1)]
    out = []
    w = q_divmod(p, g)[0]
    y = q_divmod(dp, g)[0]
    z = q_add(y, q_neg(q_deriv(w)))
    k = 1
    while len(w) > 1:
        g1 = q_gcd(w, z)
        if len(g1) > 1:
            out.append((g1, k))
        w = q_divmod(w, g1)[0]
        y = q_divmod(z, g1)[0]
        z = q_add(y, q_neg(q_deriv(w)))
        k += 1
    return out


def q_resultant(p, q):
    """Resultant of two rational polynomials (Euclid with lc bookkeeping)."""
    a, b = [rat(c) for c in p], [rat(c) for c in q]
    if not a or not b:
        return mpq(0)
    res = mpq(1)
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            return res * b[0] ** da
        _, r = q_divmod(a, b)
        dr = len(r) - 1
        if not r:
            return mpq(0)
        res *= (-1) ** (da * db) * b[-1] ** (da - dr)
        a, b = b, r


def q_rational_roots(p):
    """All rational roots, found numerically then certified exactly."""
    p = q_trim([rat(c) for c in p])
    roots = []
    if not p:
        return roots
    while p and p[0] == 0:
        roots.append(mpq(0))
        p = p[1:]
    if len(p) <= 1:
        return roots
    with mpmath.workdps(60):
        try:
            approx = mpmath.polyroots([mpmath.mpf(c.numerator) / mpmath.mpf(c.denominator)
                                       for c in reversed(p)], maxsteps=200, extraprec=200)
        except Exception:
            approx = []
    seen = set()
    for z in approx:
        if abs(mpmath.im(z)) > 1e-20:
            continue
        cand = _continued_fraction_rational(mpmath.re(z), max_den=10 ** 30)
        if cand is not None and cand not in seen and q_eval(p, cand) == 0:
            seen.add(cand)
            roots.append(cand)
    return roots


def _continued_fraction_rational(x, max_den=10 ** 30):
    """Best small-denominator rational near x, or None."""
    with mpmath.workdps(60):
        h0, h1 = mpz(1), mpz(mpmath.floor(x))
        k0, k1 = mpz(0), mpz(1)
        frac = x - mpmath.floor(x)
        for _ in range(200):
            if abs(x - mpmath.mpf(h1) / mpmath.mpf(k1)) < mpmath.mpf(10) ** -40:
                return mpq(h1, k1)
            if frac == 0 or k1 > max_den:
                break
            x2 = 1 / frac
            a = mpz(mpmath.floor(x2))
            h0, h1 = h1, a * h1 + h0
            k0, k1 = k1, a * k1 + k0
            frac = x2 - mpmath.floor(x2)
    return None


# ---------------------------------------------------------------------------
# number fields
# ---------------------------------------------------------------------------

class NumberField:
    """An absolute field Q[a]/(m(a)) with m monic and squarefree.

    With degree-1 minimal polynomial this is Q itself.  The polynomial is not
    certified irreducible (only squarefree and free of rational roots when it
    comes from :func:`adjoin_root`); if a zero divisor ever shows up,
    arithmetic raises :class:`ZeroDivisorSplit` and callers refine.
    """

    _registry_counter = itertools.count()

    def __init__(self, minpoly, symbol="a"):
        minpoly = tuple(rat(c) for c in minpoly)
        if not minpoly or minpoly[-1] != 1:
            raise ValueError("minimal polynomial must be monic")
        if len(minpoly) < 2:
            raise ValueError("minimal polynomial must have degree >= 1")
        if not q_is_squarefree(list(minpoly)):
            raise ValueError("minimal polynomial must be squarefree")
        self.minpoly = minpoly
        self.symbol = symbol
        self.degree = len(minpoly) - 1
        self._id = next(NumberField._registry_counter)
        self._hash = hash((self.minpoly, symbol))
        d = self.degree
        # reduction table: a^(d+k) as vectors, k = 0..d-2
        rows = []
        if d >= 1:
            cur = [-c for c in minpoly[:-1]]  # a^d
            rows.append(tuple(cur))
            for _ in range(d - 2):
                cur = [mpq(0)] + cur
                top = cur.pop()
                if top:
                    cur = [cur[i] + top * rows[0][i] for i in range(d)]
                rows.append(tuple(cur))
        self._red = rows
        self.zero = AlgebraicNumber(self, (mpq(0),) * d)
        self.one = AlgebraicNumber(self, ((mpq(1),) + (mpq(0),) * (d - 1)))
        if d > 1:
            self.gen = AlgebraicNumber(self, ((mpq(0), mpq(1)) + (mpq(0),) * (d - 2)))
        else:
            self.gen = AlgebraicNumber(self, (-minpoly[0],))
        self._roots_cache = {}

    def __repr__(self):
        if self.degree == 1:
            return "QQ"
        return f"NumberField({self.symbol}, deg {self.degree})"

    def __eq__(self, other):
        return self is other or (isinstance(other, NumberField)
                                 and self.minpoly == other.minpoly
                                 and self.symbol == other.symbol)

    def __hash__(self):
        return self._hash

    @property
    def is_rational(self):
        return self.degree == 1

    def __call__(self, value):
        """Coerce a rational (or coefficient vector) into the field."""
        if isinstance(value, AlgebraicNumber):
            if value.field is self or value.field == self:
                return AlgebraicNumber(self, value.coeffs)
            if value.field.is_rational:
                return self(value.coeffs[0])
            raise TypeError(f"cannot coerce element of {value.field} into {self}")
        if isinstance(value, (int, mpq, mpz, str)):
            c = rat(value)
            return AlgebraicNumber(self, (c,) + (mpq(0),) * (self.degree - 1))
        if isinstance(value, (tuple, list)):
            v = [rat(c) for c in value]
            if len(v) > self.degree:
                v = self._reduce_long(v)
            v += [mpq(0)] * (self.degree - len(v))
            return AlgebraicNumber(self, tuple(v))
        raise TypeError(f"cannot coerce {type(value)} into {self}")

    def _reduce_long(self, vec):
        d = self.degree
        vec = list(vec) + [mpq(0)] * max(0, d - len(vec))
        for k in range(len(vec) - 1, d - 1, -1):
            c = vec[k]
            if c:
                row = self._red[k - d]
                for i in range(d):
                    if row[i]:
                        vec[i] += c * row[i]
            vec.pop()
        return vec

    def mul_vec(self, a, b):
        d = self.degree
        if d == 1:
            return (a[0] * b[0],)
        conv = [mpq(0)] * (2 * d - 1)
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

    def inv_vec(self, a):
        d = self.degree
        if d == 1:
            if a[0] == 0:
                raise ZeroDivisionError("division by zero")
            return (1 / a[0],)
        # extended Euclid: s*elem + t*minpoly = g
        r0, r1 = list(self.minpoly), q_trim([mpq(c) for c in a])
        if not r1:
            raise ZeroDivisionError("division by zero")
        s0, s1 = [], [mpq(1)]
        while True:
            quo, rem = q_divmod(r0, r1)
            if not rem:
                break
            s0, s1 = s1, q_add(s0, q_neg(q_mul(quo, s1)))
            r0, r1 = r1, rem
        if len(r1) > 1:
            inv = 1 / r1[-1]
            raise ZeroDivisorSplit(self, [c * inv for c in r1])
        inv = 1 / r1[0]
        out = [c * inv for c in s1]
        out = self._reduce_long(out)
        out += [mpq(0)] * (d - len(out))
        return tuple(out)

    # -- diagnostics ---------------------------------------------------

    def complex_roots(self, prec_bits=128):
        """Certified isolating balls for the roots of the minimal polynomial.

        Returns a list of (midpoint mpc, radius mpf) sorted by (Re, Im).
        Raises if the requested precision cannot isolate the roots.
        """
        if self.degree == 1:
            c = self.minpoly[0]
            mid = mpmath.mpc(mpmath.mpf(-c.numerator) / mpmath.mpf(c.denominator))
            return [(mid, mpmath.mpf(0))]
        key = prec_bits
        if key in self._roots_cache:
            return self._roots_cache[key]
        coeffs = list(reversed(self.minpoly))
        for attempt in range(6):
            work = 4 * prec_bits + 120 * (attempt + 1)
            with mpmath.workprec(work):
                cs = [mpmath.mpf(c.numerator) / mpmath.mpf(c.denominator) for c in coeffs]
                try:
                    roots = mpmath.polyroots(cs, maxsteps=500, extraprec=work)
                except Exception:
                    continue
                # a-posteriori Weierstrass disks: each disk holds >= one root;
                # pairwise disjoint disks isolate exactly one root each
                n = len(roots)
                radii = []
                ok = True
                for i, z in enumerate(roots):
                    pz = mpmath.polyval(cs, z)
                    denom = cs[0]
                    for j, w in enumerate(roots):
                        if j != i:
                            denom *= (z - w)
                    if denom == 0:
                        ok = False
                        break
                    radii.append(n * abs(pz / denom))
                if not ok:
                    continue
                for i in range(n):
                    for j in range(i + 1, n):
                        if abs(roots[i] - roots[j]) <= radii[i] + radii[j]:
                            ok = False
                if ok and all(r < mpmath.mpf(2) ** (-prec_bits) for r in radii):
                    out = [(mpmath.mpc(z), mpmath.mpf(r)) for z, r in zip(roots, radii)]
                    out.sort(key=lambda t: (t[0].real, t[0].imag))
                    self._roots_cache[key] = out
                    return out
        raise ValueError(f"could not isolate roots of {self.symbol} at {prec_bits} bits")


def nf_create(minpoly, symbol="a"):
    """Create the field Q[a]/(m(a)); degree-1 input returns Q itself.

    The input must be monic and squarefree (checked), given low-degree-first.
    """
    minpoly = [rat(c) for c in minpoly]
    if not minpoly or minpoly[-1] != 1:
        raise ValueError("minimal polynomial must be monic")
    if len(minpoly) == 2:
        return QQ
    return NumberField(minpoly, symbol=symbol)


class AlgebraicNumber:
    """Element of a NumberField: coefficient vector in the power basis."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs
        self._hash = None

    def __repr__(self):
        return format_algebraic(self)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field._hash, self.coeffs))
        return self._hash

    def __eq__(self, other):
        if isinstance(other, AlgebraicNumber):
            return self.field._hash == other.field._hash and self.coeffs == other.coeffs
        if isinstance(other, (int, mpq)):
            c = rat(other)
            return self.coeffs[0] == c and all(x == 0 for x in self.coeffs[1:])
        return NotImplemented

    def __bool__(self):
        return any(self.coeffs)

    _COERCIBLE = (int, mpq, mpz, str)

    def _coerce(self, other):
        if isinstance(other, AlgebraicNumber):
            if other.field is self.field:
                return other
            if other.field.is_rational:
                return self.field(other.coeffs[0])
            if self.field.is_rational:
                raise TypeError("cannot mix fields; embed explicitly")
            if other.field == self.field:
                return AlgebraicNumber(self.field, other.coeffs)
            raise TypeError("cannot mix distinct fields; embed explicitly")
        return self.field(other)

    def __add__(self, other):
        if not isinstance(other, (AlgebraicNumber,) + self._COERCIBLE):
            return NotImplemented
        other = self._coerce(other)
        return AlgebraicNumber(self.field,
                               tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicNumber(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, (AlgebraicNumber,) + self._COERCIBLE):
            return NotImplemented
        other = self._coerce(other)
        return AlgebraicNumber(self.field,
                               tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, mpq)):
            c = rat(other)
            return AlgebraicNumber(self.field, tuple(a * c for a in self.coeffs))
        if not isinstance(other, (AlgebraicNumber,) + self._COERCIBLE):
            return NotImplemented
        other = self._coerce(other)
        return AlgebraicNumber(self.field, self.field.mul_vec(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.field(other) / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self):
        return AlgebraicNumber(self.field, self.field.inv_vec(self.coeffs))

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def minimal_polynomial(self):
        """Monic minimal polynomial over Q (exact linear algebra)."""
        d = self.field.degree
        powers = [self.field.one.coeffs]
        cur = self.field.one
        for _ in range(d):
            cur = cur * self
            powers.append(cur.coeffs)
        # find least k with a dependency among powers[0..k]
        rows = []  # reduced echelon rows: (pivot index, vector, combo)
        for k, vec in enumerate(powers):
            v = list(vec)
            combo = [mpq(0)] * (d + 1)
            combo[k] = mpq(1)
            for piv, rvec, rcombo in rows:
                c = v[piv]
                if c:
                    for i in range(d):
                        v[i] -= c * rvec[i]
                    for i in range(d + 1):
                        combo[i] -= c * rcombo[i]
            nz = next((i for i, c in enumerate(v) if c), None)
            if nz is None:
                poly = q_trim(combo[:k + 1])
                inv = 1 / poly[-1]
                return tuple(c * inv for c in poly)
            inv = 1 / v[nz]
            v = [c * inv for c in v]
            combo = [c * inv for c in combo]
            rows.append((nz, v, combo))
        raise AssertionError("no dependency found up to field degree")


QQ = NumberField(_QQ_MINPOLY, symbol="q")


# ---------------------------------------------------------------------------
# univariate polynomials over a NumberField (lists of AlgebraicNumber)
# ---------------------------------------------------------------------------

def k_trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def k_divmod(p, q):
    if not q:
        raise ZeroDivisionError("division by zero polynomial")
    p = list(p)
    field = q[-1].field
    quo = [field.zero] * max(0, len(p) - len(q) + 1)
    inv = q[-1].inverse()
    while len(p) >= len(q):
        c = p[-1] * inv
        k = len(p) - len(q)
        quo[k] = c
        for i, b in enumerate(q):
            p[k + i] = p[k + i] - c * b
        k_trim(p)
        if not p:
            break
    return k_trim(quo), p


def k_gcd(p, q):
    a, b = k_trim(list(p)), k_trim(list(q))
    while b:
        a, b = b, k_divmod(a, b)[1]
    if a:
        inv = a[-1].inverse()
        a = [c * inv for c in a]
    return a


def k_deriv(p):
    return k_trim([c * i for i, c in enumerate(p)][1:])


def k_eval(p, x):
    field = x.field
    acc = field.zero
    for c in reversed(p):
        acc = acc * x + c
    return acc


def k_is_squarefree(p):
    return len(k_gcd(p, k_deriv(p))) <= 1


def k_squarefree_part(p):
    g = k_gcd(p, k_deriv(p))
    if len(g) <= 1:
        out = list(p)
    else:
        out = k_divmod(p, g)[0]
    inv = out[-1].inverse()
    return [c * inv for c in out]


# ---------------------------------------------------------------------------
# field embeddings and adjunction
# ---------------------------------------------------------------------------

class FieldEmbedding:
    """Q-algebra map src -> dst determined by the image of src's generator."""

    __slots__ = ("src", "dst", "gen_image", "_powers")

    def __init__(self, src, dst, gen_image, check=True):
        self.src = src
        self.dst = dst
        self.gen_image = gen_image
        if check:
            img = k_eval([dst(c) for c in src.minpoly], gen_image)
            if img:
                raise ValueError("generator image does not satisfy the minimal polynomial")
        powers = [dst.one]
        for _ in range(src.degree - 1):
            powers.append(powers[-1] * gen_image)
        self._powers = powers

    def __call__(self, elem):
        if isinstance(elem, (int, mpq)):
            return self.dst(elem)
        if elem.field is not self.src and elem.field != self.src:
            if elem.field.is_rational:
                return self.dst(elem.coeffs[0])
            raise TypeError("element not in the source field")
        acc = self.dst.zero
        for c, p in zip(elem.coeffs, self._powers):
            if c:
                acc = acc + p * c
        return acc

    def compose(self, inner):
        """Return embedding inner.src -> self.dst."""
        return FieldEmbedding(inner.src, self.dst, self(inner.gen_image), check=False)


def identity_embedding(field):
    return FieldEmbedding(field, field, field.gen, check=False)


def split_field(field, factor):
    """Split Q[a]/(m) along a monic proper factor g | m.

    Returns [(field1, reduce1), (field2, reduce2)] where reduce maps elements
    by polynomial reduction modulo the factor.
    """
    g = [rat(c) for c in factor]
    h, rem = q_divmod(list(field.minpoly), g)
    if rem:
        raise ValueError("not a factor of the minimal polynomial")
    out = []
    for part in (g, h):
        if len(part) == 1:
            continue
        sub = NumberField(tuple(part), symbol=field.symbol)

        def make_reduce(subfield, modulus):
            def reduce_elem(elem):
                vec = q_divmod(q_trim([mpq(c) for c in elem.coeffs]), modulus)[1]
                return subfield(tuple(vec))
            return reduce_elem

        out.append((sub, make_reduce(sub, part)))
    return out


_ADJOIN_SYMBOLS = "bcdefgh"


def _resultant_eliminate_generator(base, poly, shift):
    """Res_X(m(X), sum_k a_k(X) (W - shift*X)^k) in Q[W] by interpolation."""
    d1 = base.degree
    d2 = len(poly) - 1
    n = d1 * d2
    xs = []
    ys = []
    w = mpq(0)
    while len(xs) < n + 1:
        # specialize W := w, take resultant over Q
        spec = []
        acc = {}  # coefficients of the X-polynomial sum a_k(X) (w - c X)^k
        for k, a in enumerate(poly):
            # (w - shift*X)^k expanded
            binom = [mpq(1)]
            for _ in range(k):
                new = [mpq(0)] * (len(binom) + 1)
                for i, b in enumerate(binom):
                    new[i] += b * w
                    new[i + 1] -= b * shift
                binom = new
            avec = a.coeffs
            for i, b in enumerate(binom):
                if b:
                    for j, c in enumerate(avec):
                        if c:
                            acc[i + j] = acc.get(i + j, mpq(0)) + b * c
        if acc:
            spec = [acc.get(i, mpq(0)) for i in range(max(acc) + 1)]
        r = q_resultant(list(base.minpoly), spec)
        xs.append(w)
        ys.append(r)
        w += 1
    # Lagrange interpolation (xs = 0..n)
    result = []
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        num = [yi]
        den = mpq(1)
        for j, xj in enumerate(xs):
            if j != i:
                num = q_mul(num, [-xj, mpq(1)])
                den *= (xi - xj)
        result = q_add(result, q_scale(num, 1 / den))
    return result


def adjoin_root(base, poly, symbol=None):
    """Adjoin a root of a monic squarefree polynomial over ``base``.

    ``poly`` is a list of AlgebraicNumbers in ``base`` (low degree first),
    monic.  Returns (field, root, embed) with ``field`` absolute over Q,
    ``root`` a designated root of ``poly`` in it and ``embed`` the inclusion
    of ``base``.

    Irreducibility over the base is only approximated (squarefree check plus
    rational/linear factor search); genuinely reducible inputs either land in
    a consistent factor field here or trigger ZeroDivisorSplit downstream.
    """
    poly = [base(c) if not isinstance(c, AlgebraicNumber) else c for c in poly]
    poly = k_trim(list(poly))
    if not poly or poly[-1] != base.one:
        raise ValueError("polynomial must be monic")
    if len(poly) < 2:
        raise ValueError("polynomial must have degree >= 1")
    if not k_is_squarefree(poly):
        raise ValueError("polynomial must be squarefree")
    if symbol is None:
        depth = 0 if base.is_rational else _ADJOIN_SYMBOLS.index(base.symbol) + 1 \
            if base.symbol in _ADJOIN_SYMBOLS else 0
        symbol = _ADJOIN_SYMBOLS[min(depth, len(_ADJOIN_SYMBOLS) - 1)]
    if len(poly) == 2:
        return base, -poly[0], identity_embedding(base)

    if base.is_rational:
        qpoly = [c.rational_value() for c in poly]
        roots = q_rational_roots(qpoly)
        if roots:
            return base, base(roots[0]), identity_embedding(base)
        field = NumberField(tuple(qpoly), symbol=symbol)
        return field, field.gen, FieldEmbedding(QQ, field, field.one, check=False)

    # flatten the tower via a primitive element w = root + shift * theta
    for shift in (1, 2, 3, 5, 7, 11):
        r_poly = _resultant_eliminate_generator(base, poly, mpq(shift))
        if q_is_squarefree(r_poly):
            break
    else:
        raise ValueError("no separating shift found for primitive element")
    inv = 1 / r_poly[-1]
    r_poly = [c * inv for c in r_poly]

    candidates = [tuple(r_poly)]
    while candidates:
        minpoly = candidates.pop(0)
        big = NumberField(minpoly, symbol=symbol)
        try:
            # theta := the root of base.minpoly shared with Phi(X, w),
            # where Phi(X, W) = sum_k a_k(X) (W - shift*X)^k
            mx = [big(c) for c in base.minpoly]
            wminus = [big.gen, big(-shift)]  # w - shift*X
            phi = [big.zero]
            power = [big.one]
            for k, a in enumerate(poly):
                if k:
                    new = [big.zero] * (len(power) + 1)
                    for i, b in enumerate(power):
                        new[i] = new[i] + b * wminus[0]
                        new[i + 1] = new[i + 1] + b * wminus[1]
                    power = new
                for i, b in enumerate(power):
                    while len(phi) <= i:
                        phi.append(big.zero)
                    # a has coordinates in base: theta^j contributes X^j
                    for j, cj in enumerate(a.coeffs):
                        if cj:
                            while len(phi) <= i + j:
                                phi.append(big.zero)
                            phi[i + j] = phi[i + j] + b * cj
            g = k_gcd(mx, k_trim(phi))
            if len(g) != 2:
                raise ValueError("shift does not separate; retry")
            theta_img = -g[0]
            embed = FieldEmbedding(base, big, theta_img)
            root = big.gen - theta_img * shift
            if k_eval([embed(c) for c in poly], root):
                raise AssertionError("adjoined root fails its polynomial")
            return big, root, embed
        except ZeroDivisorSplit as exc:
            for sub, _reduce in split_field(big, exc.factor):
                candidates.append(sub.minpoly)
        except ValueError:
            continue
    raise ValueError("failed to adjoin root (no consistent factor field)")


# ---------------------------------------------------------------------------
# complex balls (diagnostic enclosures)
# ---------------------------------------------------------------------------

class ComplexBall:
    """Rectangle-free complex enclosure: midpoint + radius, conservative ops."""

    __slots__ = ("mid", "rad", "prec")

    def __init__(self, mid, rad=0, prec=128):
        self.mid = mpmath.mpc(mid)
        self.rad = mpmath.mpf(rad)
        self.prec = prec

    def __repr__(self):
        return f"ComplexBall({self.mid}, rad={mpmath.nstr(self.rad, 3)})"

    def _slack(self, value):
        # rounding slop at the precision the arithmetic actually ran at
        return (abs(value) + mpmath.mpf(2) ** (-mpmath.mp.prec)) \
            * mpmath.mpf(2) ** (6 - mpmath.mp.prec)

    def _wrap(self, mid, rad):
        return ComplexBall(mid, rad + self._slack(mid), self.prec)

    def _workprec(self):
        return max(mpmath.mp.prec, self.prec + 30)

    def __add__(self, other):
        other = other if isinstance(other, ComplexBall) else ComplexBall(other, 0, self.prec)
        with mpmath.workprec(self._workprec()):
            return self._wrap(self.mid + other.mid, self.rad + other.rad)

    def __sub__(self, other):
        other = other if isinstance(other, ComplexBall) else ComplexBall(other, 0, self.prec)
        with mpmath.workprec(self._workprec()):
            return self._wrap(self.mid - other.mid, self.rad + other.rad)

    def __mul__(self, other):
        other = other if isinstance(other, ComplexBall) else ComplexBall(other, 0, self.prec)
        with mpmath.workprec(self._workprec()):
            rad = (abs(self.mid) * other.rad + abs(other.mid) * self.rad
                   + self.rad * other.rad)
            return self._wrap(self.mid * other.mid, rad)

    def contains_zero(self):
        return abs(self.mid) <= self.rad

    def overlaps(self, other):
        return abs(self.mid - other.mid) <= self.rad + other.rad


def embed_complex(elem, root_index=0, precision_bits=128):
    """Enclosure of the image of ``elem`` under a chosen complex embedding.

    Embeddings are indexed by the field's roots sorted by (Re, Im).
    """
    field = elem.field
    roots = field.complex_roots(precision_bits)
    if not 0 <= root_index < len(roots):
        raise IndexError(f"root_index {root_index} out of range ({len(roots)} embeddings)")
    mid, rad = roots[root_index]
    with mpmath.workprec(4 * precision_bits + 60):
        ball = ComplexBall(mid, rad, precision_bits)
        acc = ComplexBall(0, 0, precision_bits)
        for c in reversed(elem.coeffs):
            cv = mpmath.mpf(c.numerator) / mpmath.mpf(c.denominator)
            acc = acc * ball + ComplexBall(cv, 0, precision_bits)
    return acc


# ---------------------------------------------------------------------------
# element text syntax: polynomials in the generator symbol, e.g. "(3+a)/384"
# ---------------------------------------------------------------------------

def format_algebraic(elem):
    field = elem.field
    if elem.is_rational():
        return str(elem.coeffs[0])
    from gmpy2 import gcd, lcm
    den = mpz(1)
    for c in elem.coeffs:
        den = lcm(den, c.denominator)
    parts = []
    for k, c in enumerate(elem.coeffs):
        n = c * den
        if n == 0:
            continue
        n = mpz(n)
        if k == 0:
            parts.append(f"{n}")
        else:
            mono = field.symbol if k == 1 else f"{field.symbol}^{k}"
            if n == 1:
                parts.append(mono)
            elif n == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{n}*{mono}")
    body = "+".join(parts).replace("+-", "-")
    if den == 1:
        return body if len(parts) == 1 else f"({body})"
    return f"({body})/{den}"


def parse_algebraic(text, field):
    """Parse the element syntax produced by :func:`format_algebraic`."""
    s = text.strip().replace(" ", "")
    den = mpq(1)
    if ")/" in s:
        body, d = s.rsplit(")/", 1)
        if not body.startswith("("):
            raise ValueError(f"malformed element: {text}")
        s = body[1:]
        den = mpq(d)
    elif s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    # tokenize into signed terms
    terms = []
    cur = ""
    depth = 0
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and cur not in ("", "+", "-") and not cur.endswith("/"):
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    if cur:
        terms.append(cur)
    coeffs = [mpq(0)] * max(field.degree, 1)
    sym = field.symbol
    for term in terms:
        t = term
        sign = mpq(1)
        while t and t[0] in "+-":
            if t[0] == "-":
                sign = -sign
            t = t[1:]
        if sym in t:
            head, _, tail = t.partition(sym)
            coeff = mpq(head.rstrip("*")) if head.rstrip("*") else mpq(1)
            power = 1
            if tail.startswith("^"):
                power = int(tail[1:])
            elif tail:
                raise ValueError(f"malformed term: {term}")
            if power >= field.degree:
                raise ValueError(f"power {power} exceeds field degree")
            coeffs[power] += sign * coeff
        else:
            coeffs[0] += sign * mpq(t)
    return field(tuple(c / den for c in coeffs))
