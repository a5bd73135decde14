"""Sparse multivariate polynomials over a number field.

Terms are stored as a dict from exponent tuples to nonzero field elements;
monomial orders supply packed integer keys on demand, so the stored form is
order-independent.  Everything is exact and immutable.
"""

from __future__ import annotations

import itertools

from gmpy2 import mpq

from .numberfield import (
    QQ, AlgebraicNumber, NumberField, format_algebraic, parse_algebraic, rat,
)


class PolyRing:
    """A polynomial ring: coefficient field plus ordered variable names."""

    __slots__ = ("field", "variables", "_var_index", "zero", "one", "_hash", "gens")

    def __init__(self, field, variables):
        self.field = field
        self.variables = tuple(variables)
        self._var_index = {v: i for i, v in enumerate(self.variables)}
        self._hash = hash((field, self.variables))
        self.zero = Poly(self, {})
        self.one = Poly(self, {(0,) * len(self.variables): field.one})
        self.gens = tuple(
            Poly(self, {tuple(1 if j == i else 0 for j in range(len(self.variables))): field.one})
            for i in range(len(self.variables)))

    def __repr__(self):
        return f"PolyRing({self.field!r}, {','.join(self.variables)})"

    def __eq__(self, other):
        return self is other or (isinstance(other, PolyRing)
                                 and self.field == other.field
                                 and self.variables == other.variables)

    def __hash__(self):
        return self._hash

    def nvars(self):
        return len(self.variables)

    def var(self, name):
        return self.gens[self._var_index[name]]

    def index(self, name):
        return self._var_index[name]

    def from_terms(self, terms):
        return Poly(self, {m: c for m, c in terms.items() if c})

    def constant(self, value):
        c = self.field(value)
        if not c:
            return self.zero
        return Poly(self, {(0,) * self.nvars(): c})

    def monomial(self, exps, coeff=1):
        c = self.field(coeff)
        if not c:
            return self.zero
        return Poly(self, {tuple(exps): c})


class Poly:
    """Immutable sparse polynomial."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- basics ---------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, mpq)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring._hash, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return format_poly(self)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def degree_in(self, var):
        if not self.terms:
            return -1
        i = self.ring.index(var)
        return max(m[i] for m in self.terms)

    def is_homogeneous(self):
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def is_constant(self):
        return all(sum(m) == 0 for m in self.terms)

    def constant_coefficient(self):
        return self.terms.get((0,) * self.ring.nvars(), self.ring.field.zero)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.ring.field.zero)

    def num_terms(self):
        return len(self.terms)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValueError("ring mismatch")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = out.get(m)
            acc = c if acc is None else acc + c
            if acc:
                out[m] = acc
            elif m in out:
                del out[m]
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, mpq, AlgebraicNumber)):
            c = self.ring.field(other)
            if not c:
                return self.ring.zero
            return Poly(self.ring, {m: v * c for m, v in self.terms.items()})
        other = self._coerce(other)
        if len(self.terms) < len(other.terms):
            a, b = self.terms, other.terms
        else:
            a, b = other.terms, self.terms
        out = {}
        n = self.ring.nvars()
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = tuple(m1[i] + m2[i] for i in range(n))
                c = c1 * c2
                acc = out.get(m)
                acc = c if acc is None else acc + c
                if acc:
                    out[m] = acc
                elif m in out:
                    del out[m]
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def map_coefficients(self, func, new_ring=None):
        ring = new_ring or self.ring
        out = {}
        for m, c in self.terms.items():
            v = func(c)
            if v:
                out[m] = v
        return Poly(ring, out)


def poly_arithmetic(p, q, op):
    """Spec surface for +, -, *; plain operators do the work."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# calculus and evaluation
# ---------------------------------------------------------------------------

def partial_derivative(p, var):
    i = p.ring.index(var) if isinstance(var, str) else var
    out = {}
    for m, c in p.terms.items():
        e = m[i]
        if e:
            m2 = m[:i] + (e - 1,) + m[i + 1:]
            v = c * e
            acc = out.get(m2)
            acc = v if acc is None else acc + v
            if acc:
                out[m2] = acc
            elif m2 in out:
                del out[m2]
    return Poly(p.ring, out)


def gradient(p):
    return [partial_derivative(p, i) for i in range(p.ring.nvars())]


def evaluate(p, point, coeff_map=None):
    """Exact value of p at a point.

    ``point``: sequence of AlgebraicNumbers in one field L.  Coefficients of
    p are moved into L via ``coeff_map`` (an embedding-like callable); when
    omitted, rational coefficients coerce canonically and same-field
    coefficients pass through.
    """
    if len(point) != p.ring.nvars():
        raise ValueError("point length != number of variables")
    if not p.terms:
        field = point[0].field if point else p.ring.field
        return field.zero
    field = point[0].field
    if coeff_map is None:
        if p.ring.field.is_rational:
            coeff_map = lambda c: field(c.coeffs[0])
        elif p.ring.field == field:
            coeff_map = lambda c: c
        else:
            raise TypeError("coefficients not coercible; pass coeff_map")
    # power cache per variable
    maxdeg = [0] * p.ring.nvars()
    for m in p.terms:
        for i, e in enumerate(m):
            if e > maxdeg[i]:
                maxdeg[i] = e
    powers = []
    for i, x in enumerate(point):
        row = [field.one]
        for _ in range(maxdeg[i]):
            row.append(row[-1] * x)
        powers.append(row)
    acc = field.zero
    for m, c in p.terms.items():
        v = coeff_map(c)
        for i, e in enumerate(m):
            if e:
                v = v * powers[i][e]
        acc = acc + v
    return acc


def substitute(p, assignments, target_ring=None):
    """Exact composition: replace variables by polynomials.

    ``assignments`` maps variable names to Polys in the target ring;
    unmapped variables must exist in the target ring and map to themselves.
    """
    ring = p.ring
    if target_ring is None:
        some = next(iter(assignments.values()), None)
        target_ring = some.ring if isinstance(some, Poly) else ring
    images = []
    for v in ring.variables:
        img = assignments.get(v)
        if img is None:
            img = target_ring.var(v)
        elif not isinstance(img, Poly):
            img = target_ring.constant(img)
        images.append(img)
    if target_ring.field.is_rational and not ring.field.is_rational:
        raise TypeError("cannot move coefficients into a smaller field")
    if ring.field.is_rational:
        coeff_map = lambda c: target_ring.field(c.coeffs[0])
    elif ring.field == target_ring.field:
        coeff_map = lambda c: target_ring.field(c)
    else:
        raise TypeError("coefficient fields differ; embed first")
    # memoized powers of the images
    pow_cache = [{0: target_ring.one} for _ in images]

    def img_power(i, e):
        cache = pow_cache[i]
        if e not in cache:
            half = img_power(i, e // 2)
            sq = half * half
            cache[e] = sq if e % 2 == 0 else sq * images[i]
        return cache[e]

    acc = target_ring.zero
    for m, c in p.terms.items():
        term = target_ring.constant(coeff_map(c))
        for i, e in enumerate(m):
            if e:
                term = term * img_power(i, e)
        acc = acc + term
    return acc


def taylor_shift(p, var, c):
    """p with var replaced by var + c (exact, variablewise synthetic shift)."""
    ring = p.ring
    i = ring.index(var) if isinstance(var, str) else var
    c = ring.field(c)
    if not c:
        return p
    # group terms by exponent of var: coefficients are polys in the others
    byexp = {}
    for m, v in p.terms.items():
        byexp.setdefault(m[i], {})[m[:i] + (0,) + m[i + 1:]] = v
    maxe = max(byexp) if byexp else 0
    # Horner in (var + c): acc = acc*(var+c) + coeff_e
    acc = {}
    for e in range(maxe, -1, -1):
        new = {}
        for m, v in acc.items():
            m_up = m[:i] + (m[i] + 1,) + m[i + 1:]
            new[m_up] = new.get(m_up, ring.field.zero) + v
            vv = v * c
            prev = new.get(m)
            prev = vv if prev is None else prev + vv
            new[m] = prev
        for m, v in byexp.get(e, {}).items():
            prev = new.get(m)
            prev = v if prev is None else prev + v
            new[m] = prev
        acc = {m: v for m, v in new.items() if v}
    return Poly(ring, acc)


def hessian_det(p):
    """Determinant of the matrix of second partials (exact expansion)."""
    n = p.ring.nvars()
    second = [[None] * n for _ in range(n)]
    firsts = [partial_derivative(p, i) for i in range(n)]
    for i in range(n):
        for j in range(i, n):
            second[i][j] = second[j][i] = partial_derivative(firsts[i], j)
    return _det_poly([[second[i][j] for j in range(n)] for i in range(n)])


def _det_poly(mat):
    n = len(mat)
    if n == 1:
        return mat[0][0]
    ring = mat[0][0].ring
    acc = ring.zero
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = list(perm)
        for a in range(n):
            for b in range(a + 1, n):
                if seen[a] > seen[b]:
                    sign = -sign
        term = ring.one
        for i in range(n):
            term = term * mat[i][perm[i]]
        acc = acc + (term if sign > 0 else -term)
    return acc


def exact_divide(p, q):
    """p / q when q divides p exactly; raises ValueError otherwise."""
    ring = p.ring
    if not q:
        raise ZeroDivisionError("division by zero polynomial")
    if not p:
        return ring.zero
    n = ring.nvars()
    # reduce against the single divisor using grevlex leading terms
    key = grevlex_key_func(n)
    qlead = max(q.terms, key=key)
    qlc_inv = q.terms[qlead].inverse()
    rem = dict(p.terms)
    quo = {}
    while rem:
        m = max(rem, key=key)
        if any(m[i] < qlead[i] for i in range(n)):
            raise ValueError("not an exact multiple")
        u = tuple(m[i] - qlead[i] for i in range(n))
        c = rem[m] * qlc_inv
        quo[u] = c
        for m2, c2 in q.terms.items():
            mm = tuple(u[i] + m2[i] for i in range(n))
            acc = rem.get(mm, ring.field.zero) - c * c2
            if acc:
                rem[mm] = acc
            elif mm in rem:
                del rem[mm]
    return Poly(ring, quo)


# ---------------------------------------------------------------------------
# gcd and squarefreeness (primitive-part recursion with subresultant PRS)
# ---------------------------------------------------------------------------

def _to_univariate(p, i):
    """View p as univariate in variable i with Poly coefficients."""
    ring = p.ring
    byexp = {}
    for m, v in p.terms.items():
        byexp.setdefault(m[i], {})[m[:i] + (0,) + m[i + 1:]] = v
    if not byexp:
        return []
    out = [Poly(ring, byexp.get(e, {})) for e in range(max(byexp) + 1)]
    return out


def _from_univariate(coeffs, i):
    ring = coeffs[0].ring if coeffs else None
    out = {}
    for e, poly in enumerate(coeffs):
        for m, v in poly.terms.items():
            out[m[:i] + (e,) + m[i + 1:]] = v
    return Poly(ring, out)


def _poly_content(coeffs):
    """Gcd of a list of polys (recursive multivariate gcd)."""
    acc = None
    for c in coeffs:
        if not c:
            continue
        acc = c if acc is None else gcd_poly(acc, c)
        if acc.is_constant():
            return acc.ring.one
    return acc


def _uni_trim(c):
    while c and not c[-1]:
        c.pop()
    return c


def _uni_pseudo_rem(a, b, i):
    """Pseudo-remainder of univariate (Poly-coefficient) a by b."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while a and len(a) - 1 >= db:
        da = len(a) - 1
        lead = a[-1]
        # lb*a - lead*x^(da-db)*b: top coefficient cancels exactly
        a = [c * lb for c in a[:-1]]
        for k in range(db):
            a[da - db + k] = a[da - db + k] - lead * b[k]
        _uni_trim(a)
    return a


def gcd_poly(p, q):
    """A gcd of p and q, normalized with leading (grevlex) coefficient 1."""
    ring = p.ring
    if ring != q.ring:
        raise ValueError("ring mismatch")
    if not p:
        return _normalize_lead(q)
    if not q:
        return _normalize_lead(p)
    if p.is_constant() or q.is_constant():
        return ring.one
    # choose main variable: one appearing in both, of least max degree
    n = ring.nvars()
    best = None
    for i in range(n):
        dp = max(m[i] for m in p.terms)
        dq = max(m[i] for m in q.terms)
        if dp > 0 and dq > 0:
            score = max(dp, dq)
            if best is None or score < best[1]:
                best = (i, score)
    if best is None:
        # disjoint variable supports: gcd of contents only
        return ring.one
    i = best[0]
    a = _to_univariate(p, i)
    b = _to_univariate(q, i)
    ca = _poly_content(a)
    cb = _poly_content(b)
    a = [exact_divide(c, ca) for c in a]
    b = [exact_divide(c, cb) for c in b]
    cont = gcd_poly(ca, cb)
    if len(a) < len(b):
        a, b = b, a
    while True:
        r = _uni_pseudo_rem(a, b, i)
        if not r:
            break
        cr = _poly_content(r)
        r = [exact_divide(c, cr) for c in r]
        a, b = b, r
        if len(b) == 1:
            return _normalize_lead(cont)
    prim = _from_univariate(b, i)
    return _normalize_lead(cont * prim)


def _normalize_lead(p):
    if not p:
        return p
    n = p.ring.nvars()
    key = grevlex_key_func(n)
    lead = max(p.terms, key=key)
    inv = p.terms[lead].inverse()
    return Poly(p.ring, {m: c * inv for m, c in p.terms.items()})


def is_squarefree(p):
    """True iff gcd(p, dp/dv) is constant for every variable occurring in p."""
    if not p:
        raise ValueError("zero polynomial")
    for i in range(p.ring.nvars()):
        if all(m[i] == 0 for m in p.terms):
            continue
        d = partial_derivative(p, i)
        if not gcd_poly(p, d).is_constant():
            return False
    return True


# ---------------------------------------------------------------------------
# monomial orders (packed integer keys; addition of keys = multiplication)
# ---------------------------------------------------------------------------

_FIELD_BITS = 16
_FIELD_MASK = (1 << _FIELD_BITS) - 1


def grevlex_key_func(nvars):
    """Packed grevlex key: lex on (deg, deg-e_n, deg-e_n-e_{n-1}, ...)."""
    shifts = [_FIELD_BITS * k for k in range(nvars - 1, -1, -1)]

    def key(m):
        d = sum(m)
        acc = d << shifts[0]
        run = d
        for k in range(nvars - 1):
            run -= m[nvars - 1 - k]
            acc |= run << shifts[k + 1]
        return acc

    return key


def grevlex_unkey_func(nvars):
    def unkey(key):
        fields = []
        for k in range(nvars):
            fields.append((key >> (_FIELD_BITS * (nvars - 1 - k))) & _FIELD_MASK)
        # fields = (d, d-e_n, d-e_n-e_{n-1}, ..., e_1 + e_2? ) reconstruct
        exps = [0] * nvars
        for idx in range(nvars - 1):
            exps[nvars - 1 - idx] = fields[idx] - fields[idx + 1]
        exps[0] = fields[nvars - 1]
        return tuple(exps)
    return unkey


def lex_key_func(nvars):
    shifts = [_FIELD_BITS * (nvars - 1 - i) for i in range(nvars)]

    def key(m):
        acc = 0
        for i, e in enumerate(m):
            acc |= e << shifts[i]
        return acc

    return key


def lex_unkey_func(nvars):
    def unkey(key):
        return tuple((key >> (_FIELD_BITS * (nvars - 1 - i))) & _FIELD_MASK
                     for i in range(nvars))
    return unkey


class MonomialOrder:
    """Descriptor of a monomial order; supplies packed key functions."""

    kind = "abstract"
    is_global = True

    def key_func(self, nvars):
        raise NotImplementedError

    def unkey_func(self, nvars):
        raise NotImplementedError


class GrevLex(MonomialOrder):
    kind = "grevlex"

    def key_func(self, nvars):
        return grevlex_key_func(nvars)

    def unkey_func(self, nvars):
        return grevlex_unkey_func(nvars)


class Lex(MonomialOrder):
    kind = "lex"

    def key_func(self, nvars):
        return lex_key_func(nvars)

    def unkey_func(self, nvars):
        return lex_unkey_func(nvars)


class BlockElim(MonomialOrder):
    """Eliminates the first ``front`` variables: grevlex blockwise."""

    kind = "block"

    def __init__(self, front):
        self.front = front

    def key_func(self, nvars):
        nf = self.front
        nb = nvars - nf
        fkey = grevlex_key_func(nf)
        bkey = grevlex_key_func(nb) if nb else (lambda m: 0)
        width = _FIELD_BITS * max(nb, 1)

        def key(m):
            return (fkey(m[:nf]) << width) | bkey(m[nf:])

        return key

    def unkey_func(self, nvars):
        nf = self.front
        nb = nvars - nf
        funk = grevlex_unkey_func(nf)
        bunk = grevlex_unkey_func(nb) if nb else (lambda k: ())
        width = _FIELD_BITS * max(nb, 1)
        mask = (1 << width) - 1

        def unkey(key):
            return funk(key >> width) + bunk(key & mask)

        return unkey


class LocalDegRevLex(MonomialOrder):
    """Local anti-graded order: 1 is largest; used by the Mora engine."""

    kind = "local-antigraded"
    is_global = False

    def key_func(self, nvars):
        g = grevlex_key_func(nvars)
        top = sum(_FIELD_BITS for _ in range(nvars))

        def key(m):
            # larger key = earlier in local order: lower degree wins,
            # grevlex breaks ties
            d = sum(m)
            return ((_FIELD_MASK - d) << top) | (g(m) & ((1 << top) - 1))

        return key


# ---------------------------------------------------------------------------
# symmetrization and the fundamental invariants
# ---------------------------------------------------------------------------

def sigma4(ring, exps):
    """Sum of the distinct permutations of a monomial in 4 variables."""
    if ring.nvars() != 4:
        raise ValueError("sigma4 needs exactly 4 variables")
    exps = tuple(exps)
    out = {}
    for p in itertools.permutations(range(4)):
        m = tuple(exps[p[i]] for i in range(4))
        out[m] = ring.field.one
    return Poly(ring, out)


_RING_Q_XYZT = None


def ring_xyzt(field=None):
    """The ambient ring in x, y, z, t (cached for Q)."""
    global _RING_Q_XYZT
    if field is None or field is QQ:
        if _RING_Q_XYZT is None:
            _RING_Q_XYZT = PolyRing(QQ, ("x", "y", "z", "t"))
        return _RING_Q_XYZT
    return PolyRing(field, ("x", "y", "z", "t"))


_INVARIANTS_CACHE = {}


def build_invariants():
    """The three fundamental invariants of degrees 4, 8, 12 over Q."""
    if "f" not in _INVARIANTS_CACHE:
        R = ring_xyzt()
        f1 = sigma4(R, (4, 0, 0, 0)) - 6 * sigma4(R, (2, 2, 0, 0))
        f2 = (sigma4(R, (8, 0, 0, 0)) + 4 * sigma4(R, (6, 2, 0, 0))
              + 6 * sigma4(R, (4, 4, 0, 0)) - 20 * sigma4(R, (4, 2, 2, 0))
              + 152 * R.monomial((2, 2, 2, 2)))
        f3 = (sigma4(R, (8, 2, 2, 0)) - sigma4(R, (6, 4, 2, 0))
              + 2 * sigma4(R, (6, 2, 2, 2)) - 2 * sigma4(R, (4, 4, 4, 0))
              + 2 * sigma4(R, (4, 4, 2, 2)))
        _INVARIANTS_CACHE["f"] = (f1, f2, f3)
    return _INVARIANTS_CACHE["f"]


def pencil_parts():
    """(f3, f2*f1, f1^3): the three degree-12 building blocks over Q."""
    if "parts" not in _INVARIANTS_CACHE:
        f1, f2, f3 = build_invariants()
        _INVARIANTS_CACHE["parts"] = (f3, f2 * f1, f1 ** 3)
    return _INVARIANTS_CACHE["parts"]


# ---------------------------------------------------------------------------
# text format: "-6*x^2*y^2 + (3+a)/384*x*y", round-trips bit-exactly
# ---------------------------------------------------------------------------

def format_poly(p):
    if not p.terms:
        return "0"
    n = p.ring.nvars()
    key = grevlex_key_func(n)
    parts = []
    for m in sorted(p.terms, key=key, reverse=True):
        c = p.terms[m]
        mono = "*".join(
            (v if e == 1 else f"{v}^{e}")
            for v, e in zip(p.ring.variables, m) if e)
        ctext = format_algebraic(c)
        if mono:
            if ctext == "1":
                parts.append(mono)
            elif ctext == "-1":
                parts.append(f"-{mono}")
            else:
                parts.append(f"{ctext}*{mono}")
        else:
            parts.append(ctext)
    out = " + ".join(parts).replace("+ -", "- ")
    return out


def parse_poly(text, ring):
    """Parse the format produced by :func:`format_poly`."""
    s = text.strip()
    if s == "0":
        return ring.zero
    # split into top-level terms on +/- outside parentheses
    terms = []
    cur = ""
    depth = 0
    prev = ""
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and prev not in ("", "^", "*", "e", "+", "-", "/"):
            terms.append(cur.strip())
            cur = ch
        else:
            cur += ch
        if not ch.isspace():
            prev = ch
    if cur.strip():
        terms.append(cur.strip())
    acc = ring.zero
    for term in terms:
        t = term.replace(" ", "")
        sign = 1
        while t and t[0] in "+-":
            if t[0] == "-":
                sign = -sign
            t = t[1:]
        # split into factors on * outside parens
        factors = []
        cur = ""
        depth = 0
        for ch in t:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            if ch == "*" and depth == 0:
                factors.append(cur)
                cur = ""
            else:
                cur += ch
        if cur:
            factors.append(cur)
        coeff = ring.field.one
        exps = [0] * ring.nvars()
        for f in factors:
            name, _, power = f.partition("^")
            if name in ring._var_index:
                exps[ring.index(name)] += int(power) if power else 1
            else:
                coeff = coeff * parse_algebraic(f, ring.field)
        if sign < 0:
            coeff = -coeff
        acc = acc + ring.monomial(exps, coeff)
    return acc
