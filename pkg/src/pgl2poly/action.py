"""The Moebius action of GL2/PGL2 on polynomials over GF(q).

For A = [[a, b], [c, d]] and f of degree k the raw action is
(bx+d)^k f((ax+c)/(bx+d)); the class action rescales the result monic.
Fixed points of the class action are characterized by divisibility into
the criterion polynomials b*x^(q^r + 1) - a*x^(q^r) + d*x - c.
"""

from __future__ import annotations

import functools
from math import gcd as int_gcd

from .fields import FieldSpec
from .polynomials import (Poly, divides, divrem, enumerate_monic_irreducibles,
                          is_irreducible, monicize)
from .projective import Mat2, ProjMat


def act(m: Mat2, f: Poly) -> Poly:
    """Raw action: sum of f_i (ax+c)^i (bx+d)^(k-i) for k = deg f."""
    if not f:
        raise ValueError("the action is undefined on the zero polynomial")
    spec = m.spec
    k = f.degree
    u = Poly(spec, (m.c, m.a))
    v = Poly(spec, (m.d, m.b))
    upow = [Poly.one(spec)]
    vpow = [Poly.one(spec)]
    for _ in range(k):
        upow.append(upow[-1] * u)
        vpow.append(vpow[-1] * v)
    out = Poly.zero(spec)
    for i, fi in enumerate(f.coeffs):
        if fi:
            out = out + (upow[i] * vpow[k - i]).scale(fi)
    return out


def star_act(m: Mat2, f: Poly) -> Poly:
    """The transposed-matrix variant of the action."""
    return act(m.transpose(), f)


def _check_actable(f: Poly):
    if f.degree < 2:
        raise ValueError("class action requires degree >= 2")
    if not f.is_monic:
        raise ValueError("class action requires a monic polynomial")
    if not is_irreducible(f):
        raise ValueError("class action requires an irreducible polynomial")


def proj_act(cls: ProjMat, f: Poly) -> Poly:
    """Class action: the monic rescaling of the raw action.  Maps monic
    irreducibles of degree >= 2 to monic irreducibles of the same degree."""
    _check_actable(f)
    g = act(cls.rep, f)
    assert g.degree == f.degree, "degree drop on an irreducible input"
    return monicize(g)[1]


def is_invariant(cls: ProjMat, f: Poly) -> bool:
    return proj_act(cls, f) == f


def F_poly(m: Mat2, r: int) -> Poly:
    """The criterion polynomial b*x^(q^r+1) - a*x^(q^r) + d*x - c."""
    if r < 0:
        raise ValueError("r must be >= 0")
    spec = m.spec
    qr = spec.order**r
    coeffs = {qr + 1: m.b, 0: -m.c}
    coeffs[qr] = coeffs.get(qr, spec.zero) - m.a
    coeffs[1] = coeffs.get(1, spec.zero) + m.d
    out = [spec.zero] * (qr + 2)
    for e, v in coeffs.items():
        out[e] = v
    return Poly(spec, out)


def criterion_invariant(m: Mat2, f: Poly) -> bool:
    """Invariance decided through the criterion polynomials: for deg f = Dm > 2
    it is enough to test divisibility into F at the exponents l*m with
    l in [1, D-1] prime to D; degree-2 inputs fall back to the direct test."""
    _check_actable(f)
    n = f.degree
    cls = ProjMat(m)
    D = cls.order()
    if D == 1:
        return True
    if n == 2:
        return is_invariant(cls, f)
    if n % D:
        return False
    mm = n // D
    return any(divides(f, F_poly(m, ell * mm))
               for ell in range(1, D) if int_gcd(ell, D) == 1)


def subgroup_closure(generators) -> frozenset[ProjMat]:
    """Closure of the generated subgroup under multiplication (BFS)."""
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    spec = gens[0].spec
    bound = spec.order**3 - spec.order
    identity = ProjMat(Mat2.identity(spec))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
        assert len(seen) <= bound
    return frozenset(seen)


def is_cyclic(group) -> bool:
    """True iff some member generates the whole set."""
    members = list(group)
    n = len(members)
    return any(g.order() == n for g in members)


def group_invariant(generators, f: Poly) -> bool:
    """True iff every generator (hence the whole closure) fixes f."""
    return all(is_invariant(g, f) for g in generators)


def quadratic_invariants(spec: FieldSpec, generators) -> list[Poly]:
    """All monic irreducible quadratics fixed by every generator, found by
    scanning the q^2 monic quadratics."""
    gens = list(generators)
    out = []
    for f in enumerate_monic_irreducibles(spec, 2):
        if all(is_invariant(g, f) for g in gens):
            out.append(f)
    return out


@functools.lru_cache(maxsize=4096)
def invariant_set(cls: ProjMat, n: int) -> tuple[Poly, ...]:
    """Brute-force oracle: every monic irreducible of degree n fixed by cls."""
    if n < 2:
        raise ValueError("invariants are defined for degree >= 2")
    return tuple(f for f in enumerate_monic_irreducibles(cls.spec, n)
                 if is_invariant(cls, f))
