"""Pure-Python reduction kernel for the Groebner engine.

Fraction-free full reduction: the accumulator carries integral
coefficients (mpz scalars over Q, tuples of mpz over a number field) and a
running scale; reducers are pre-cleared so their lead is a plain positive
integer.  Integer content is swept adaptively; over quadratic fields an
additional best-effort algebraic content sweep strips unit-multiple junk
(powers of 1+sqrt(3) and the like) that rational content cannot see.

The compiled extension in ``_speedups`` implements the same entry points;
``kernel`` picks whichever is available.
"""

from __future__ import annotations

import heapq

from gmpy2 import gcd as _gcd, mpq, mpz

BACKEND = "python"

_SWEEP_SCALE_BITS = 160


class BudgetExceeded(RuntimeError):
    """A resource cap was hit; carries the stage for certificates."""

    def __init__(self, stage, detail=""):
        super().__init__(f"budget exceeded in {stage}" + (f": {detail}" if detail else ""))
        self.stage = stage
        self.detail = detail


def reduce_full(streams, basis, divisor_index, ops, budget=None):
    """Fraction-free normal form.

    streams: list of (shift_key, mult_coeff, keys, coeffs); their signed sum
        seeds the accumulator (coefficients integral).
    basis: list of (lead_key, lead_exp, lead_int, tail_keys, tail_coeffs)
        where lead_int is the positive integer lead and tails are integral.
    divisor_index: callable(key) -> basis position or -1.
    Returns (keys, coeffs, scale_q, alg_divisor): the exact reduced value is
    (packed ints) / scale_q / alg_divisor, with alg_divisor an integral
    field element (or None when no algebraic content was removed).
    """
    acc = {}
    for shift, mult, keys, coeffs in streams:
        for k, c in zip(keys, coeffs):
            kk = k + shift
            cur = acc.get(kk)
            v = ops.mul(mult, c)
            cur = v if cur is None else ops.add(cur, v)
            if ops.is_zero(cur):
                acc.pop(kk, None)
            else:
                acc[kk] = cur
    scale = mpq(1)
    alg_parts = []
    has_alg = getattr(ops, "alg_content_many", None) is not None \
        and getattr(ops, "_quad_s", None) is not None

    def sweep(dicts):
        nonlocal scale
        values = [v for d in dicts for v in d.values()]
        if not values:
            return
        cont = ops.content_many(values)
        if cont > 1:
            for d in dicts:
                for k2 in d:
                    d[k2] = ops.div_int(d[k2], cont)
            scale /= cont
        if has_alg:
            g = ops.alg_content_many([v for d in dicts for v in d.values()])
            if g is not None:
                for d in dicts:
                    for k2 in d:
                        d[k2] = ops.alg_divexact(d[k2], g)
                alg_parts.append(g)

    sweep([acc])
    heap = [-k for k in acc]
    heapq.heapify(heap)
    out = {}
    steps = 0
    scale_bits = 0
    max_heap = budget.max_heap if budget is not None else None
    while heap:
        key = -heapq.heappop(heap)
        c = acc.pop(key, None)
        if c is None:
            continue
        gi = divisor_index(key)
        if gi < 0:
            out[key] = c
            continue
        _lk, _le, lead_int, tkeys, tcoeffs = basis[gi]
        d = _gcd(ops.content(c), lead_int)
        a = lead_int // d
        if a != 1:
            for k2 in acc:
                acc[k2] = ops.scale_int(acc[k2], a)
            for k2 in out:
                out[k2] = ops.scale_int(out[k2], a)
            scale *= a
            scale_bits += a.bit_length()
        b = ops.div_int(c, d) if d > 1 else c
        shift = key - _lk
        for tk, tc in zip(tkeys, tcoeffs):
            kk = tk + shift
            cur = acc.get(kk)
            v = ops.mul(b, tc)
            if cur is None:
                acc[kk] = ops.neg(v)
                heapq.heappush(heap, -kk)
            else:
                cur = ops.sub(cur, v)
                if ops.is_zero(cur):
                    del acc[kk]
                else:
                    acc[kk] = cur
        steps += 1
        scale_bits += 8
        if scale_bits >= _SWEEP_SCALE_BITS:
            scale_bits = 0
            sweep([acc, out])
            if budget is not None:
                budget.check("reduction")
                if max_heap is not None and len(heap) > max_heap:
                    raise BudgetExceeded("reduction", f"heap grew past {max_heap}")
    keys = sorted(out, reverse=True)
    sweep([out])
    alg = None
    if alg_parts:
        alg = alg_parts[0]
        for g in alg_parts[1:]:
            s = ops._quad_s
            alg = (alg[0] * g[0] + s * alg[1] * g[1], alg[0] * g[1] + alg[1] * g[0])
    return keys, [out[k] for k in keys], scale, alg
