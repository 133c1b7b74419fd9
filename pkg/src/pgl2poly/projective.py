"""GL2/PGL2 over GF(q): arithmetic, orders, type classification, reduction
to canonical form, the sigma product and closed-form powers.

Every non-identity class is conjugate to exactly one kind of reduced matrix:
diag(a, 1) when the eigenvalues are distinct in GF(q) (type 1), the unipotent
[[1,0],[1,1]] when they coincide (type 2), [[0,1],[b,0]] with b a non-square
when they are opposite elements of GF(q^2) \\ GF(q) (type 3), and
[[0,1],[c,1]] with x^2 - x - c irreducible otherwise (type 4).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator, Optional

from . import linalg
from .fields import (ExtElt, Felt, FieldSpec, element_of_mult_order, embed,
                     frobenius_q, make_ext, try_descend)
from .numutil import divisors
from .polynomials import Poly

IDENTITY, TYPE1, TYPE2, TYPE3, TYPE4 = 0, 1, 2, 3, 4


class Mat2:
    """An invertible 2x2 matrix [[a, b], [c, d]] over GF(q)."""

    __slots__ = ("spec", "a", "b", "c", "d", "det")

    def __init__(self, a: Felt, b: Felt, c: Felt, d: Felt):
        self.spec = a.spec
        self.a, self.b, self.c, self.d = a, b, c, d
        self.det = a * d - b * c
        if not self.det:
            raise ValueError("matrix is singular")

    @classmethod
    def from_encodings(cls, spec: FieldSpec, entries) -> "Mat2":
        a, b, c, d = (spec.from_encoding(e) for e in entries)
        return cls(a, b, c, d)

    @classmethod
    def identity(cls, spec: FieldSpec) -> "Mat2":
        return cls(spec.one, spec.zero, spec.zero, spec.one)

    def entries(self) -> tuple[Felt, Felt, Felt, Felt]:
        return (self.a, self.b, self.c, self.d)

    @property
    def trace(self) -> Felt:
        return self.a + self.d

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.a * other.a + self.b * other.c,
                    self.a * other.b + self.b * other.d,
                    self.c * other.a + self.d * other.c,
                    self.c * other.b + self.d * other.d)

    def inverse(self) -> "Mat2":
        f = self.det.inverse()
        return Mat2(self.d * f, -self.b * f, -self.c * f, self.a * f)

    def __pow__(self, j: int) -> "Mat2":
        if j < 0:
            return self.inverse() ** (-j)
        result = Mat2.identity(self.spec)
        base = self
        while j:
            if j & 1:
                result = result * base
            base = base * base
            j >>= 1
        return result

    def transpose(self) -> "Mat2":
        return Mat2(self.a, self.c, self.b, self.d)

    def scale(self, t: Felt) -> "Mat2":
        return Mat2(self.a * t, self.b * t, self.c * t, self.d * t)

    def char_poly(self) -> Poly:
        """x^2 - trace*x + det."""
        return Poly(self.spec, (self.det, -self.trace, self.spec.one))

    def is_scalar(self) -> bool:
        return not self.b and not self.c and self.a == self.d

    def encode(self) -> int:
        q = self.spec.order
        return (self.a.encode() + q * self.b.encode()
                + q * q * self.c.encode() + q**3 * self.d.encode())

    def __eq__(self, other):
        return (isinstance(other, Mat2) and self.spec == other.spec
                and self.entries() == other.entries())

    def __hash__(self):
        return hash((self.spec, self.entries()))

    def __repr__(self):
        return "[" + ",".join(str(x.encode()) for x in self.entries()) + "]"


def reduced_type1(spec: FieldSpec, a: Felt) -> Mat2:
    """diag(a, 1) for a outside {0, 1}."""
    if not a or a == spec.one:
        raise ValueError("type-1 parameter must avoid 0 and 1")
    return Mat2(a, spec.zero, spec.zero, spec.one)

def reduced_type2(spec: FieldSpec) -> Mat2:
    """The unipotent [[1, 0], [1, 1]]."""
    return Mat2(spec.one, spec.zero, spec.one, spec.one)

def reduced_type3(spec: FieldSpec, b: Felt) -> Mat2:
    """[[0, 1], [b, 0]] for a non-square b."""
    return Mat2(spec.zero, spec.one, b, spec.zero)

def reduced_type4(spec: FieldSpec, c: Felt) -> Mat2:
    """[[0, 1], [c, 1]] for c with x^2 - x - c irreducible."""
    return Mat2(spec.zero, spec.one, c, spec.one)


class ProjMat:
    """A class in PGL2(GF(q)), stored as the representative scaled so the
    first nonzero entry in (a, b, c, d) order equals 1."""

    __slots__ = ("rep",)

    def __init__(self, m: Mat2):
        lead = next(x for x in m.entries() if x)
        self.rep = m if lead == m.spec.one else m.scale(lead.inverse())

    @property
    def spec(self) -> FieldSpec:
        return self.rep.spec

    def __mul__(self, other: "ProjMat") -> "ProjMat":
        return ProjMat(self.rep * other.rep)

    def inverse(self) -> "ProjMat":
        return ProjMat(self.rep.inverse())

    def is_identity(self) -> bool:
        return self.rep.is_scalar()

    def order(self) -> int:
        """Least D >= 1 with the D-th power scalar; always lands in
        {1} | divisors(q-1) | {p} | divisors(q+1)."""
        q = self.spec.order
        d = 1
        cur = self.rep
        while not cur.is_scalar():
            cur = cur * self.rep
            d += 1
            if d > q + 1:
                raise AssertionError("projective order exceeded q+1")
        allowed = {1, self.spec.p} | set(divisors(q - 1)) | set(divisors(q + 1))
        assert d in allowed, f"order {d} outside the admissible divisor set"
        return d

    def encode(self) -> int:
        return self.rep.encode()

    def __eq__(self, other):
        return isinstance(other, ProjMat) and self.rep == other.rep

    def __hash__(self):
        return hash(("proj", self.rep))

    def __repr__(self):
        return f"[{self.rep!r}]"


def proj_canonical(m: Mat2) -> ProjMat:
    return ProjMat(m)

def proj_eq(m1: Mat2, m2: Mat2) -> bool:
    return ProjMat(m1) == ProjMat(m2)


def all_classes(spec: FieldSpec) -> list[ProjMat]:
    """All of PGL2(GF(q)) via canonical representatives; |result| = q^3 - q."""
    out = []
    one, zero = spec.one, spec.zero
    for b in spec.elements():
        for c in spec.elements():
            for d in spec.elements():
                if one * d != b * c:
                    out.append(ProjMat(Mat2(one, b, c, d)))
    for c in spec.elements():
        if c:
            for d in spec.elements():
                out.append(ProjMat(Mat2(zero, one, c, d)))
    q = spec.order
    assert len(out) == q**3 - q
    return out


@dataclass(frozen=True)
class TypeInfo:
    """Classification of a non-identity class: kind 1..4 plus its parameter
    (a for type 1, b for type 3, c for type 4); kind 0 is the identity."""
    kind: int
    param: Optional[Felt] = None


@dataclass(frozen=True)
class ReducedForm:
    info: TypeInfo
    reduced: Mat2
    conjugator: Mat2
    eigenvalue: ExtElt


def _roots_in_field(f: Poly) -> list[Felt]:
    zero = f.ring.zero
    return [x for x in f.ring.elements() if f(x) == zero]


def classify(m: Mat2) -> TypeInfo:
    """Type of [m] from the eigenvalue layout of its characteristic polynomial."""
    if m.is_scalar():
        return TypeInfo(IDENTITY)
    spec = m.spec
    roots = _roots_in_field(m.char_poly())
    if len(roots) == 2:
        r1, r2 = roots
        ratio1, ratio2 = r1 / r2, r2 / r1
        a = ratio1 if ratio1.encode() <= ratio2.encode() else ratio2
        return TypeInfo(TYPE1, a)
    if len(roots) == 1:
        return TypeInfo(TYPE2)
    if not m.trace:
        return TypeInfo(TYPE3, -m.det)
    tr = m.trace
    return TypeInfo(TYPE4, -m.det / (tr * tr))


def _eigenvector(m: Mat2, lam: Felt) -> tuple[Felt, Felt]:
    # kernel of (m - lam*I), which has rank 1 off the identity class
    v = (m.b, lam - m.a)
    if not v[0] and not v[1]:
        v = (lam - m.d, m.c)
    assert v[0] or v[1]
    return v


def _min_encoding_conjugator(scaled: Mat2, target: Mat2) -> Mat2:
    """Minimal-encoding invertible P with scaled*P = P*target; the two
    matrices share an irreducible characteristic polynomial, so the kernel
    of the matching system has dimension 2."""
    spec = scaled.spec
    s_a, s_b, s_c, s_d = scaled.entries()
    r_a, r_b, r_c, r_d = target.entries()
    zero = spec.zero
    rows = [
        [s_a - r_a, -r_c, s_b, zero],
        [-r_b, s_a - r_d, zero, s_b],
        [s_c, zero, s_d - r_a, -r_c],
        [zero, s_c, -r_b, s_d - r_d],
    ]
    basis = linalg.nullspace(spec, rows)
    assert len(basis) == 2, "conjugator system must have a 2-dimensional kernel"
    best = None
    best_enc = None
    q = spec.order
    for t1 in spec.elements():
        for t2 in spec.elements():
            w = [t1 * basis[0][i] + t2 * basis[1][i] for i in range(4)]
            if w[0] * w[3] == w[1] * w[2]:
                continue
            enc = (w[0].encode() + q * w[1].encode()
                   + q * q * w[2].encode() + q**3 * w[3].encode())
            if best_enc is None or enc < best_enc:
                best, best_enc = w, enc
    assert best is not None, "no invertible conjugator found"
    return Mat2(*best)


def _ext_quadratic_root(spec: FieldSpec, c0: Felt, c1: Felt) -> ExtElt:
    """First root of x^2 + c1*x + c0 in GF(q^2), in encoding order."""
    ext = make_ext(spec)
    e0, e1 = embed(c0), embed(c1)
    for z in ext.elements():
        if z * z + e1 * z + e0 == ext.zero:
            return z
    raise AssertionError("quadratic has no root in GF(q^2)")


def reduce(m: Mat2) -> ReducedForm:
    """Type info, reduced matrix R, conjugator P with [m] = [P][R][P]^-1,
    and the distinguished eigenvalue in GF(q^2)."""
    info = classify(m)
    if info.kind == IDENTITY:
        raise ValueError("the identity class has no reduced form")
    spec = m.spec

    if info.kind == TYPE1:
        roots = _roots_in_field(m.char_poly())
        alpha, beta = roots
        if alpha / beta != info.param:
            alpha, beta = beta, alpha
        red = reduced_type1(spec, info.param)
        va = _eigenvector(m, alpha)
        vb = _eigenvector(m, beta)
        conj = Mat2(va[0], vb[0], va[1], vb[1])
        eig = embed(alpha)
    elif info.kind == TYPE2:
        lam = _roots_in_field(m.char_poly())[0]
        red = reduced_type2(spec)
        if proj_eq(m, red):
            conj = Mat2.identity(spec)
        else:
            nil = m.scale(lam.inverse())
            n_a, n_b = nil.a - spec.one, nil.b
            n_c, n_d = nil.c, nil.d - spec.one
            u = (spec.one, spec.zero) if (n_a or n_c) else (spec.zero, spec.one)
            nu = (n_a * u[0] + n_b * u[1], n_c * u[0] + n_d * u[1])
            conj = Mat2(u[0], nu[0], u[1], nu[1])
        eig = embed(lam)
    elif info.kind == TYPE3:
        red = reduced_type3(spec, info.param)
        if proj_eq(m, red):
            conj = Mat2.identity(spec)
        else:
            conj = _min_encoding_conjugator(m, red)
        eig = _ext_quadratic_root(spec, -info.param, spec.zero)
    else:
        red = reduced_type4(spec, info.param)
        if proj_eq(m, red):
            conj = Mat2.identity(spec)
        else:
            conj = _min_encoding_conjugator(m.scale(m.trace.inverse()), red)
        eig = _ext_quadratic_root(spec, -info.param, -spec.one)

    assert ProjMat(conj * red * conj.inverse()) == ProjMat(m), \
        "conjugation identity failed"
    return ReducedForm(info, red, conj, eig)


def sigma_product(m: Mat2, m0: Mat2) -> Mat2:
    """The bilinear product carrying the action of m0 on the criterion
    polynomials of m; det comes out as det(m) * det(m0)^2."""
    a, b, c, d = m.entries()
    a0, b0, c0, d0 = m0.entries()
    s1 = -(b * a0 * c0 - a * a0 * d0 + d * c0 * b0 - c * b0 * d0)
    s2 = b * a0 * a0 - a * a0 * b0 + d * a0 * b0 - c * b0 * b0
    s3 = -(b * c0 * c0 - a * c0 * d0 + d * d0 * c0 - c * d0 * d0)
    s4 = b * a0 * c0 - a * c0 * b0 + d * d0 * a0 - c * b0 * d0
    out = Mat2(s1, s2, s3, s4)
    assert out.det == m.det * m0.det * m0.det
    return out


def power_closed_form(c: Felt, j: int) -> Mat2:
    """[[0,1],[c,1]]^j through the eigenvalue alpha of x^2 - x - c in GF(q^2),
    descended back to GF(q)."""
    if j < 0:
        raise ValueError("j must be >= 0")
    spec = c.spec
    base = reduced_type4(spec, c)       # validates invertibility (c != 0)
    if _roots_in_field(base.char_poly()):
        raise ValueError("x^2 - x - c must be irreducible")
    alpha = _ext_quadratic_root(spec, -c, -spec.one)
    aq = frobenius_q(alpha)
    delta = (aq - alpha).inverse()
    powers = {e: alpha**e for e in {j, j + 1}}
    qpowers = {e: aq**e for e in {j, j + 1}}
    ent_a = (powers[j] * aq - qpowers[j] * alpha) * delta
    ent_b = (qpowers[j] - powers[j]) * delta
    ent_c = (powers[j + 1] * aq - qpowers[j + 1] * alpha) * delta
    ent_d = (qpowers[j + 1] - powers[j + 1]) * delta
    descended = [try_descend(z) for z in (ent_a, ent_b, ent_c, ent_d)]
    assert all(x is not None for x in descended), "entries must lie in GF(q)"
    a, b, cc, d = descended
    if not (a or b or cc or d):
        raise AssertionError("zero matrix from closed form")
    result = Mat2(a, b, cc, d)
    D = ProjMat(base).order()
    if j % D:
        assert result.c, "lower-left entry must be nonzero off multiples of D"
    else:
        assert result.is_scalar()
    return result


def element_of_order(spec: FieldSpec, D: int) -> ProjMat:
    """A class of order exactly D, in reduced form: diag(a,1) with ord(a)=D
    when D | q-1, the unipotent when D = p, and [[0,1],[c,1]] built from a
    primitive element of GF(q^2) when D | q+1 with D > 2."""
    q = spec.order
    if D <= 1:
        raise ValueError("order must be > 1")
    if D == spec.p:
        out = ProjMat(reduced_type2(spec))
    elif (q - 1) % D == 0:
        out = ProjMat(reduced_type1(spec, element_of_mult_order(spec, D)))
    elif D > 2 and (q + 1) % D == 0:
        ext = make_ext(spec)
        beta = element_of_mult_order(ext, (q - 1) * D)
        tr = try_descend(beta + frobenius_q(beta))
        assert tr is not None and tr, "trace of beta must be a nonzero scalar"
        alpha = beta * embed(tr).inverse()
        c = try_descend(alpha * alpha - alpha)
        assert c is not None, "c must land in GF(q)"
        out = ProjMat(reduced_type4(spec, c))
    else:
        raise ValueError(f"no class of order {D} exists in PGL2(GF({q}))")
    assert out.order() == D
    return out
