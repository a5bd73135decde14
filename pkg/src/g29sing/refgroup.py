"""The complex reflection group of order 7680 acting on C^4.

Elements are 4x4 matrices over Q(i) whose entries are Gaussian integers
divided by a power of two; that shape is closed under the group operations
here and makes hashing and equality exact and cheap.  The heavy closure
walk runs on int64 numpy blocks (exact integer arithmetic, overflow-checked).
"""

from __future__ import annotations

import itertools

import numpy as np
from gmpy2 import mpq

from .numberfield import QQ, AlgebraicNumber, FieldEmbedding, nf_create
from .multipoly import Poly, PolyRing, substitute

_QI = None


def gaussian_field():
    """Q(i), the field of definition of the group."""
    global _QI
    if _QI is None:
        _QI = nf_create([1, 0, 1], symbol="i")
    return _QI


class GroupElement:
    """Matrix with entries (a + b*i) / 2^e, canonically normalized."""

    __slots__ = ("ints", "e", "_hash")

    def __init__(self, ints, e):
        # normalize: strip common factors of 2 while e > 0
        while e > 0 and all(v % 2 == 0 for v in ints):
            ints = tuple(v // 2 for v in ints)
            e -= 1
        self.ints = tuple(int(v) for v in ints)
        self.e = e
        self._hash = hash((self.ints, e))

    @classmethod
    def from_rows(cls, rows, denom_power=0):
        """rows: 4x4 of complex-like pairs (re, im) of integers."""
        flat = []
        for r in rows:
            for a, b in r:
                flat.extend((int(a), int(b)))
        return cls(tuple(flat), denom_power)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.ints == other.ints \
            and self.e == other.e

    def __repr__(self):
        return f"GroupElement(e={self.e}, {self.ints[:8]}...)"

    def entry(self, i, j):
        """Entry (i, j) as a pair of exact rationals (re, im)."""
        k = 2 * (4 * i + j)
        d = mpq(1, 2 ** self.e)
        return (self.ints[k] * d, self.ints[k + 1] * d)

    def __mul__(self, other):
        a, b = self.ints, other.ints
        out = [0] * 32
        for i in range(4):
            for j in range(4):
                re = im = 0
                for k in range(4):
                    ar = a[2 * (4 * i + k)]
                    ai = a[2 * (4 * i + k) + 1]
                    br = b[2 * (4 * k + j)]
                    bi = b[2 * (4 * k + j) + 1]
                    re += ar * br - ai * bi
                    im += ar * bi + ai * br
                out[2 * (4 * i + j)] = re
                out[2 * (4 * i + j) + 1] = im
        return GroupElement(tuple(out), self.e + other.e)

    def inverse(self):
        """Conjugate transpose (all elements here are unitary)."""
        out = [0] * 32
        for i in range(4):
            for j in range(4):
                src = 2 * (4 * j + i)
                out[2 * (4 * i + j)] = self.ints[src]
                out[2 * (4 * i + j) + 1] = -self.ints[src + 1]
        return GroupElement(tuple(out), self.e)

    def conjugate(self):
        out = list(self.ints)
        for k in range(1, 32, 2):
            out[k] = -out[k]
        return GroupElement(tuple(out), self.e)

    def is_identity(self):
        return self == identity_element()

    def field_matrix(self):
        """4x4 tuple of AlgebraicNumbers over Q(i)."""
        K = gaussian_field()
        d = mpq(1, 2 ** self.e)
        return tuple(tuple(K((self.ints[2 * (4 * i + j)] * d,
                              self.ints[2 * (4 * i + j) + 1] * d))
                           for j in range(4)) for i in range(4))

    def matrix_in(self, field, i_image):
        """Entries mapped into ``field`` via i -> i_image."""
        d = mpq(1, 2 ** self.e)
        out = []
        for i in range(4):
            row = []
            for j in range(4):
                re = self.ints[2 * (4 * i + j)] * d
                im = self.ints[2 * (4 * i + j) + 1] * d
                val = field(re)
                if im:
                    val = val + i_image * im
                row.append(val)
            out.append(tuple(row))
        return tuple(out)

    def fixed_space_rank_deficiency(self):
        """dim ker(M - I), computed by exact Gaussian elimination over Q(i)."""
        d = 2 ** self.e
        rows = []
        for i in range(4):
            row = []
            for j in range(4):
                re = mpq(self.ints[2 * (4 * i + j)], d)
                im = mpq(self.ints[2 * (4 * i + j) + 1], d)
                if i == j:
                    re -= 1
                row.append((re, im))
            rows.append(row)
        rank = _complex_rank4(rows)
        return 4 - rank

    def minus_identity_row_space_generator(self):
        """A nonzero row of (M - I) normalized; defines the fixed hyperplane."""
        d = 2 ** self.e
        rows = []
        for i in range(4):
            row = []
            for j in range(4):
                re = mpq(self.ints[2 * (4 * i + j)], d)
                im = mpq(self.ints[2 * (4 * i + j) + 1], d)
                if i == j:
                    re -= 1
                row.append((re, im))
            rows.append(row)
        for row in rows:
            nz = next((k for k, (a, b) in enumerate(row) if a or b), None)
            if nz is not None:
                a0, b0 = row[nz]
                n2 = a0 * a0 + b0 * b0
                out = []
                for (a, b) in row:
                    # divide (a+bi) by (a0+b0 i)
                    out.append(((a * a0 + b * b0) / n2, (b * a0 - a * b0) / n2))
                return tuple(out)
        return None


def _complex_rank4(rows):
    rows = [list(r) for r in rows]
    rank = 0
    for col in range(4):
        piv = None
        for r in range(rank, 4):
            a, b = rows[r][col]
            if a or b:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pa, pb = rows[rank][col]
        n2 = pa * pa + pb * pb
        for r in range(rank + 1, 4):
            a, b = rows[r][col]
            if a or b:
                # factor = (a+bi)/(pa+pb i)
                fr = (a * pa + b * pb) / n2
                fi = (b * pa - a * pb) / n2
                for c in range(col, 4):
                    xa, xb = rows[rank][c]
                    ya, yb = rows[r][c]
                    rows[r][c] = (ya - (fr * xa - fi * xb),
                                  yb - (fr * xb + fi * xa))
        rank += 1
    return rank


_IDENTITY = None


def identity_element():
    global _IDENTITY
    if _IDENTITY is None:
        ints = [0] * 32
        for i in range(4):
            ints[2 * (4 * i + i)] = 1
        _IDENTITY = GroupElement(tuple(ints), 0)
    return _IDENTITY


def reflection_from_root(root):
    """Unitary order-2 reflection I - 2 a a^H/(a,a) for a Gaussian root.

    ``root``: 4 pairs (re, im) of integers.  The result must have dyadic
    entries; the roots used here have (a,a) a power of two times a unit.
    """
    n2 = sum(a * a + b * b for a, b in root)
    # entries: delta_ij - 2 * a_i * conj(a_j) / n2; require n2 | 2 * ...
    # normalize to denominator n2 (n2 in {1, 2, 4} for our roots)
    rows = []
    for i in range(4):
        row = []
        for j in range(4):
            ar, ai = root[i]
            br, bi = root[j]
            # a_i * conj(a_j)
            pr = ar * br + ai * bi
            pi = ai * br - ar * bi
            re = -2 * pr
            im = -2 * pi
            if i == j:
                re += n2
            row.append((re, im))
        rows.append(row)
    # denominator n2 must be a power of two
    e = 0
    m = n2
    while m % 2 == 0:
        m //= 2
        e += 1
    if m != 1:
        raise ValueError("root norm is not a power of two")
    return GroupElement.from_rows(rows, e)


def standard_generators():
    """The four generating reflections (order 2 each).

    s1, s2 are the coordinate swaps (x y) and (y z); s3 is the reflection
    with root (1, -1, -i, -i); s4 is the sign flip of t.  Together they
    generate the full order-7680 group fixing the quartic invariant, the
    group is stable under complex conjugation, and conj(s3) = s1*s3*s1.
    """
    s1 = reflection_from_root([(1, 0), (-1, 0), (0, 0), (0, 0)])
    s2 = reflection_from_root([(0, 0), (1, 0), (-1, 0), (0, 0)])
    s3 = reflection_from_root([(1, 0), (-1, 0), (0, -1), (0, -1)])
    s4 = reflection_from_root([(0, 0), (0, 0), (0, 0), (1, 0)])
    return [s1, s2, s3, s4]


class ClosureCapExceeded(RuntimeError):
    pass


class Group:
    """A finite matrix group given by the closure of its generators."""

    def __init__(self, generators, cap=100000):
        self.generators = list(generators)
        self.elements = _closure(self.generators, cap)
        self.element_set = set(self.elements)
        self.order = len(self.elements)
        self._reflections = None

    def __contains__(self, g):
        return g in self.element_set

    def __len__(self):
        return self.order

    def center(self, cap=100000):
        gens = self.generators
        central = [g for g in self.elements
                   if all(g * h == h * g for h in gens)]
        return Group(central, cap=cap) if central else Group([identity_element()])

    def reflections(self):
        if self._reflections is None:
            eye = identity_element()
            self._reflections = [g for g in self.elements
                                 if g != eye and g.fixed_space_rank_deficiency() == 3]
        return self._reflections

    def reflecting_hyperplanes(self):
        return sorted({g.minus_identity_row_space_generator()
                       for g in self.reflections()})


def _closure(generators, cap):
    """BFS closure on exact int64 blocks; returns a deterministic list."""
    eye = identity_element()
    if not generators:
        return [eye]
    maxe = max(g.e for g in generators)

    def to_block(g):
        arr = np.array(g.ints, dtype=np.int64).reshape(4, 4, 2)
        return arr * np.int64(2 ** (maxe - g.e)), maxe

    gen_blocks = [np.array(g.ints, dtype=np.int64).reshape(4, 4, 2)
                  for g in generators]
    gen_es = [g.e for g in generators]

    def canon(arr, e):
        flat = arr.reshape(-1)
        m = int(np.max(np.abs(flat))) if flat.size else 0
        if m == 0:
            return (tuple(int(v) for v in flat), 0)
        while e > 0 and not np.any(flat & 1):
            flat = flat >> 1
            e -= 1
        return (tuple(int(v) for v in flat), e)

    seen = {canon(np.array(eye.ints, dtype=np.int64), 0)}
    frontier = [(np.array(eye.ints, dtype=np.int64).reshape(4, 4, 2), 0)]
    out = [eye]
    while frontier:
        mats = np.stack([f[0] for f in frontier])  # (N,4,4,2)
        es = [f[1] for f in frontier]
        nxt = []
        for gb, ge in zip(gen_blocks, gen_es):
            ar, ai = mats[..., 0], mats[..., 1]
            br, bi = gb[..., 0], gb[..., 1]
            re = ar @ br - ai @ bi
            im = ar @ bi + ai @ br
            if max(int(np.max(np.abs(re))), int(np.max(np.abs(im)))) > 2 ** 40:
                raise OverflowError("entry growth exceeded int64 safety bound")
            prod = np.stack([re, im], axis=-1)
            for idx in range(prod.shape[0]):
                key = canon(prod[idx].copy(), es[idx] + ge)
                if key not in seen:
                    seen.add(key)
                    if len(seen) > cap:
                        raise ClosureCapExceeded(f"closure exceeded cap {cap}")
                    elem = GroupElement(key[0], key[1])
                    out.append(elem)
                    nxt.append((np.array(key[0], dtype=np.int64).reshape(4, 4, 2),
                                key[1]))
        frontier = nxt
    return out


_G29 = None


def g29():
    """The order-7680 reflection group, cached."""
    global _G29
    if _G29 is None:
        _G29 = Group(standard_generators())
        if _G29.order != 7680:
            raise AssertionError(f"closure has order {_G29.order}, expected 7680")
    return _G29


# ---------------------------------------------------------------------------
# invariance of polynomials
# ---------------------------------------------------------------------------

def apply_element_to_poly(f, g, ring_qi=None):
    """f composed with the linear substitution given by g (over Q(i))."""
    K = gaussian_field()
    if ring_qi is None:
        ring_qi = PolyRing(K, f.ring.variables)
    i_img = K.gen
    rows = g.matrix_in(K, i_img)
    assignments = {}
    for idx, v in enumerate(ring_qi.variables):
        form = ring_qi.zero
        for j, w in enumerate(ring_qi.variables):
            c = rows[idx][j]
            if c:
                form = form + ring_qi.monomial(
                    tuple(1 if k == j else 0 for k in range(4)), c)
        assignments[v] = form
    if f.ring.field.is_rational:
        f_qi = f.map_coefficients(lambda c: K(c.coeffs[0]), ring_qi)
    else:
        f_qi = f
    return substitute(f_qi, assignments, target_ring=ring_qi)


def is_invariant(f, group_or_generators):
    """True iff f o g = f for every generator (sufficient by generation)."""
    gens = group_or_generators.generators \
        if isinstance(group_or_generators, Group) else list(group_or_generators)
    K = gaussian_field()
    ring_qi = PolyRing(K, f.ring.variables)
    if f.ring.field.is_rational:
        f_qi = f.map_coefficients(lambda c: K(c.coeffs[0]), ring_qi)
    else:
        f_qi = f
    for g in gens:
        if apply_element_to_poly(f, g, ring_qi) != f_qi:
            return False
    return True


# ---------------------------------------------------------------------------
# projective points and lines; orbits
# ---------------------------------------------------------------------------

def normalize_point(coords):
    """Scale so the first nonzero coordinate is 1 (canonical form)."""
    field = coords[0].field
    for c in coords:
        if c:
            inv = c.inverse()
            return tuple(x * inv for x in coords)
    raise ValueError("zero vector is not a projective point")


class ProjectivePoint:
    """Point of P^3 with exact coordinates, canonically normalized."""

    __slots__ = ("coords", "_hash")

    def __init__(self, coords, normalized=False):
        self.coords = tuple(coords) if normalized else normalize_point(coords)
        self._hash = hash(self.coords)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, ProjectivePoint) and self.coords == other.coords

    def __repr__(self):
        return "[" + " : ".join(repr(c) for c in self.coords) + "]"

    @property
    def field(self):
        return self.coords[0].field

    def apply(self, matrix_rows):
        field = self.field
        out = []
        for i in range(4):
            acc = field.zero
            for j in range(4):
                c = matrix_rows[i][j]
                if c:
                    acc = acc + c * self.coords[j]
            out.append(acc)
        return ProjectivePoint(out)


def orbit_point(group, point, i_image=None):
    """Full orbit of a projective point under the group's projective action.

    ``point``: ProjectivePoint over a field L; ``i_image``: the image of the
    Gaussian unit in L (required unless L it is Q(i) itself).
    """
    field = point.field
    if i_image is None:
        K = gaussian_field()
        if field == K:
            i_image = field.gen
        else:
            raise ValueError("need i_image: the square root of -1 in the point's field")
    mats = [g.matrix_in(field, i_image) for g in group.generators]
    seen = {point}
    frontier = [point]
    while frontier:
        nxt = []
        for p in frontier:
            for m in mats:
                q = p.apply(m)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def stabilizer_order(group, point, i_image=None):
    field = point.field
    if i_image is None:
        i_image = field.gen if field == gaussian_field() else None
    count = 0
    for g in group.elements:
        m = g.matrix_in(field, i_image) if i_image is not None else g.field_matrix()
        if point.apply(m) == point:
            count += 1
    return count


class ProjectiveLine:
    """Line in P^3 stored by normalized Pluecker coordinates."""

    __slots__ = ("pluecker", "_hash")

    _PAIRS = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]

    def __init__(self, p, q):
        a, b = p.coords, q.coords
        field = a[0].field
        pl = [a[i] * b[j] - a[j] * b[i] for i, j in self._PAIRS]
        if not any(pl):
            raise ValueError("points do not span a line")
        self.pluecker = normalize_point(pl)
        # Pluecker quadric p01 p23 - p02 p13 + p03 p12 = 0
        g = self.pluecker
        if g[0] * g[5] - g[1] * g[4] + g[2] * g[3]:
            raise AssertionError("Pluecker relation violated")
        self._hash = hash(self.pluecker)

    @classmethod
    def from_pluecker(cls, pl):
        obj = cls.__new__(cls)
        obj.pluecker = normalize_point(pl)
        g = obj.pluecker
        if g[0] * g[5] - g[1] * g[4] + g[2] * g[3]:
            raise ValueError("not a line: Pluecker relation fails")
        obj._hash = hash(obj.pluecker)
        return obj

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, ProjectiveLine) and self.pluecker == other.pluecker

    def spanning_points(self):
        """Recover two spanning points (for applying matrices)."""
        # rows of the rank-2 antisymmetric matrix give the line's points
        g = self.pluecker
        field = g[0].field
        zero = field.zero
        mat = [[zero, g[0], g[1], g[2]],
               [-g[0], zero, g[3], g[4]],
               [-g[1], -g[3], zero, g[5]],
               [-g[2], -g[4], -g[5], zero]]
        pts = []
        for row in mat:
            if any(row):
                pt = ProjectivePoint(row)
                if pt not in pts:
                    pts.append(pt)
            if len(pts) == 2:
                break
        return pts


def orbit_line(group, line, i_image=None):
    field = line.pluecker[0].field
    if i_image is None:
        K = gaussian_field()
        if field == K:
            i_image = field.gen
        else:
            raise ValueError("need i_image in the line's field")
    mats = [g.matrix_in(field, i_image) for g in group.generators]
    seen = {line}
    frontier = [line]
    while frontier:
        nxt = []
        for ln in frontier:
            p, q = ln.spanning_points()
            for m in mats:
                moved = ProjectiveLine(p.apply(m), q.apply(m))
                if moved not in seen:
                    seen.add(moved)
                    nxt.append(moved)
        frontier = nxt
    return seen
