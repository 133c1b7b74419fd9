"""Executable property suites: every theorem-shaped claim as a pass/fail row.

Each suite takes a field spec plus a seed and returns CheckRow records; the
CLI renders them and exits nonzero when any row fails.  Exhaustive sweeps
are used wherever the group and the polynomial pools are small (q <= 3 in
most suites), seeded sampling otherwise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd as int_gcd

from .fields import FieldSpec, smallest_nonsquare
from .numutil import divisors
from .polynomials import (Poly, divides, enumerate_monic_irreducibles,
                          gcd as poly_gcd, is_irreducible)
from .projective import (Mat2, ProjMat, all_classes, element_of_order,
                         reduced_type2, reduced_type3, reduced_type4,
                         sigma_product)
from .action import (F_poly, act, criterion_invariant, group_invariant,
                     invariant_set, is_cyclic, is_invariant, proj_act,
                     quadratic_invariants, subgroup_closure)
from .rational import generate_invariants, q_map, substitute_mobius
from .counting import (count_factors_of_degree, count_invariants_bruteforce,
                       count_invariants_formula, count_via_criterion,
                       mobius_inversion, principal_character)


@dataclass
class CheckRow:
    suite: str
    name: str
    passed: bool
    detail: str = ""


def _row(suite, name, passed, detail=""):
    return CheckRow(suite, name, bool(passed), detail)


def _random_matrix(spec: FieldSpec, rng: random.Random) -> Mat2:
    q = spec.order
    while True:
        a, b, c, d = (spec.from_encoding(rng.randrange(q)) for _ in range(4))
        if a * d != b * c:
            return Mat2(a, b, c, d)

def _random_class(spec, rng) -> ProjMat:
    return ProjMat(_random_matrix(spec, rng))

def _random_irreducible(spec, n, rng) -> Poly:
    return rng.choice(enumerate_monic_irreducibles(spec, n))

def _random_nonzero_poly(spec, max_deg, rng) -> Poly:
    q = spec.order
    while True:
        deg = rng.randrange(max_deg + 1)
        f = Poly(spec, tuple(spec.from_encoding(rng.randrange(q))
                             for _ in range(deg + 1)))
        if f:
            return f

def _all_gl2(spec):
    out = []
    for a in spec.elements():
        for b in spec.elements():
            for c in spec.elements():
                for d in spec.elements():
                    if a * d != b * c:
                        out.append(Mat2(a, b, c, d))
    return out


def type_representatives(spec: FieldSpec) -> list[tuple[str, Mat2]]:
    """One reduced-form representative per available (type, order) pair."""
    q = spec.order
    reps = []
    for D in divisors(q - 1):
        if D > 1:
            reps.append((f"type1-D{D}", element_of_order(spec, D).rep))
    reps.append((f"type2-D{spec.p}", reduced_type2(spec)))
    if spec.p != 2:
        reps.append(("type3-D2", reduced_type3(spec, smallest_nonsquare(spec))))
    for D in divisors(q + 1):
        if D > 2:
            reps.append((f"type4-D{D}", element_of_order(spec, D).rep))
    return reps


# ---------------------------------------------------------------------------
# action laws

def suite_action_laws(spec: FieldSpec, seed: int = 12345, samples: int = 1000):
    rng = random.Random(seed)
    q = spec.order
    rows = []
    exhaustive = q == 2
    degrees = range(2, 6) if q <= 5 else range(2, 5)

    if exhaustive:
        classes = all_classes(spec)
        triples = [(A, B, f) for A in classes for B in classes
                   for n in degrees for f in enumerate_monic_irreducibles(spec, n)]
    else:
        triples = []
        for _ in range(samples):
            n = rng.choice(list(degrees))
            triples.append((_random_class(spec, rng), _random_class(spec, rng),
                            _random_irreducible(spec, n, rng)))

    ident = ProjMat(Mat2.identity(spec))
    ok_id = all(proj_act(ident, f) == f for _, _, f in triples)
    rows.append(_row("action-laws", "identity", ok_id, f"{len(triples)} cases"))

    ok_comp = all(proj_act(A, proj_act(B, f)) == proj_act(A * B, f)
                  for A, B, f in triples)
    rows.append(_row("action-laws", "compatibility", ok_comp, f"{len(triples)} cases"))

    ok_deg = ok_irr = True
    for A, _, f in triples:
        g = proj_act(A, f)
        ok_deg = ok_deg and g.degree == f.degree
        ok_irr = ok_irr and is_irreducible(g)
    rows.append(_row("action-laws", "degree-preservation", ok_deg, f"{len(triples)} cases"))
    rows.append(_row("action-laws", "irreducibility-preservation", ok_irr, f"{len(triples)} cases"))

    ok_mult = True
    for _ in range(200):
        A = _random_matrix(spec, rng)
        f = _random_nonzero_poly(spec, 4, rng)
        g = _random_nonzero_poly(spec, 4, rng)
        ok_mult = ok_mult and act(A, f * g) == act(A, f) * act(A, g)
    rows.append(_row("action-laws", "multiplicativity", ok_mult, "200 cases"))
    return rows


# ---------------------------------------------------------------------------
# criterion equivalence and the degree theorem

def suite_criterion(spec: FieldSpec, seed: int = 12345, samples: int = 300):
    rng = random.Random(seed)
    q = spec.order
    rows = []
    if q <= 3:
        classes = all_classes(spec)
        degree_range = range(2, 7)
        pairs = [(cls, f) for cls in classes for n in degree_range
                 for f in enumerate_monic_irreducibles(spec, n)]
    else:
        degree_range = range(2, 7) if q <= 5 else range(2, 5)
        pairs = [(_random_class(spec, rng),
                  _random_irreducible(spec, rng.choice(list(degree_range)), rng))
                 for _ in range(samples)]

    mismatches = 0
    degree_theorem_ok = True
    for cls, f in pairs:
        direct = is_invariant(cls, f)
        viacrit = criterion_invariant(cls.rep, f)
        if direct != viacrit:
            mismatches += 1
        if direct and f.degree > 2 and f.degree % cls.order():
            degree_theorem_ok = False
    rows.append(_row("criterion", "agreement-with-direct-test", mismatches == 0,
                     f"{len(pairs)} pairs, {mismatches} mismatches"))
    rows.append(_row("criterion", "degree-theorem", degree_theorem_ok,
                     f"{len(pairs)} pairs"))
    return rows


# ---------------------------------------------------------------------------
# conjugation correspondence

def suite_conjugation(spec: FieldSpec, seed: int = 12345, samples: int = 6):
    rng = random.Random(seed)
    q = spec.order
    degree_range = range(2, 7) if q <= 3 else range(2, 5)
    rows = []
    checked = 0
    ok = True
    for _ in range(samples):
        P = _random_matrix(spec, rng)
        A = _random_matrix(spec, rng)
        B = P * A * P.inverse()
        pinv = ProjMat(P).inverse()
        for n in degree_range:
            inv_a = set(invariant_set(ProjMat(A), n))
            inv_b = invariant_set(ProjMat(B), n)
            mapped = {proj_act(pinv, f) for f in inv_b}
            ok = ok and mapped == inv_a and len(mapped) == len(inv_b)
            checked += 1
    rows.append(_row("conjugation", "invariant-set-bijection", ok,
                     f"{checked} (matrix, degree) pairs"))
    return rows


# ---------------------------------------------------------------------------
# counting: formula vs both oracles

def suite_counting(spec: FieldSpec, seed: int = 12345, max_n: int | None = None):
    q = spec.order
    if max_n is None:
        max_n = 8 if q <= 3 else 6
    rows = []
    for label, rep in type_representatives(spec):
        cls = ProjMat(rep)
        D = cls.order()
        mm = 1
        while D * mm <= max_n:
            n = D * mm
            if n > 2:
                nf = count_invariants_formula(rep, n)
                nb = count_invariants_bruteforce(cls, n)
                nc = count_via_criterion(rep, mm)
                rows.append(_row("counting", f"{label}-n{n}", nf == nb == nc,
                                 f"formula={nf} brute={nb} criterion={nc}"))
            mm += 1
        off = [n for n in range(3, max_n + 1) if n % D]
        zeros_ok = all(count_invariants_bruteforce(cls, n) == 0 for n in off)
        if off:
            rows.append(_row("counting", f"{label}-off-multiples", zeros_ok,
                             f"degrees {off} all zero"))

    # the reciprocal-flip matrix lands in type 1 (odd q) or type 2 (q even);
    # the dispatched formula must match brute force at every even degree
    E = Mat2(spec.zero, spec.one, spec.one, spec.zero)
    flip_ok = True
    detail = []
    for mm in range(2, 5):
        n = 2 * mm
        if n > max_n:
            break
        nf = count_invariants_formula(E, n)
        nb = count_invariants_bruteforce(ProjMat(E), n)
        flip_ok = flip_ok and nf == nb
        detail.append(f"n{n}:{nf}/{nb}")
    rows.append(_row("counting", "reciprocal-flip-dispatch", flip_ok, " ".join(detail)))
    return rows


def inversion_consistency(spec: FieldSpec, c, max_m: int = 4):
    """Criterion-side factor counts against the generalized inversion of
    L(t) = q^t + (-1)^(t+1), for the order-(q+1)-family element [[0,1],[c,1]]."""
    base = reduced_type4(spec, c)
    D = ProjMat(base).order()
    q = spec.order
    results = []
    for mm in range(1, max_m + 1):
        if D * mm <= 2:
            continue
        expect = mobius_inversion(lambda d: principal_character(D, d),
                                  lambda t: q**t + (1 if t % 2 else -1), mm)
        assert expect % (D * mm) == 0
        expect //= D * mm
        for j in range(1, D):
            if int_gcd(j, D) == 1:
                got = count_factors_of_degree(F_poly(base**j, mm), D * mm)
                results.append((mm, j, expect, got))
    return results


# ---------------------------------------------------------------------------
# rational maps

def suite_qmap_fixed_point(spec: FieldSpec, seed: int = 12345, samples: int = 200):
    rng = random.Random(seed)
    q = spec.order
    rows = []
    if q <= 5:
        classes = [cls for cls in all_classes(spec) if not cls.is_identity()]
    else:
        seen = set()
        while len(seen) < samples:
            cls = _random_class(spec, rng)
            if not cls.is_identity():
                seen.add(cls)
        classes = sorted(seen, key=lambda cls: cls.encode())
    fixed_ok = shape_ok = True
    for cls in classes:
        qc = q_map(cls.rep)
        Q = qc.map
        fixed_ok = fixed_ok and substitute_mobius(Q, cls.rep) == Q.normalized()
        shape_ok = (shape_ok and Q.degree == cls.order()
                    and poly_gcd(Q.num, Q.den) == Poly.one(spec))
    rows.append(_row("qmap-fixed-point", "fixed-point", fixed_ok,
                     f"{len(classes)} classes"))
    rows.append(_row("qmap-fixed-point", "coprime-and-degree", shape_ok,
                     f"{len(classes)} classes"))
    return rows


def suite_generation(spec: FieldSpec, seed: int = 12345, max_n: int | None = None):
    """Set equality of generated invariants against the brute-force sets."""
    q = spec.order
    if max_n is None:
        max_n = 8 if q <= 3 else 6
    rows = []
    for label, rep in type_representatives(spec):
        cls = ProjMat(rep)
        D = cls.order()
        mm = 1
        while D * mm <= max_n:
            n = D * mm
            if n > 2:
                got = generate_invariants(rep, mm)
                want = sorted(invariant_set(cls, n), key=lambda f: f.encode())
                rows.append(_row("generation", f"{label}-n{n}", got == want,
                                 f"{len(got)} generated, {len(want)} brute"))
            mm += 1
    return rows


# ---------------------------------------------------------------------------
# noncyclic and p-group nonexistence

def _group_invariants_of_degree(spec, gens, n: int) -> list[Poly]:
    # brute scan where the pool is small, generate-then-filter otherwise:
    # every joint invariant is an invariant of each generator alone, so the
    # complete per-class generation bounds the search
    if spec.order <= 3:
        return [f for f in enumerate_monic_irreducibles(spec, n)
                if group_invariant(gens, f)]
    with_div = [g for g in gens if g.order() > 1 and n % g.order() == 0]
    if not with_div:
        assert count_invariants_formula(gens[0].rep, n) == 0
        return []
    anchor = with_div[0]
    candidates = generate_invariants(anchor.rep, n // anchor.order())
    return [f for f in candidates if group_invariant(gens, f)]


def _sample_noncyclic_subgroups(spec, rng, want: int, max_size: int = 60):
    classes = [cls for cls in all_classes(spec) if not cls.is_identity()]
    small = [cls for cls in classes if cls.order() <= 4]
    found = []
    attempts = 0
    while len(found) < want and attempts < 5000:
        attempts += 1
        g1, g2 = rng.choice(small), rng.choice(small)
        if g1 == g2:
            continue
        group = subgroup_closure([g1, g2])
        if len(group) <= max_size and not is_cyclic(group):
            found.append(((g1, g2), group))
    return found


def suite_noncyclic(spec: FieldSpec, seed: int = 12345, want: int = 20):
    rng = random.Random(seed)
    q = spec.order
    rows = []
    if q == 2:
        classes = all_classes(spec)
        subgroups = {subgroup_closure([a, b]) for a in classes for b in classes}
        noncyc = [g for g in subgroups if not is_cyclic(g)]
        ok = all(not _group_invariants_of_degree(spec, sorted(g, key=lambda x: x.encode()), n)
                 for g in noncyc for n in range(3, 7))
        rows.append(_row("noncyclic", "exhaustive-subgroups", ok,
                         f"{len(noncyc)} noncyclic subgroups, degrees 3..6"))
        whole = sorted(subgroup_closure(classes), key=lambda x: x.encode())
        quads = quadratic_invariants(spec, whole)
        expected = [Poly.of(spec, 1, 1, 1)]
        rows.append(_row("noncyclic", "full-group-quadratics", quads == expected,
                         f"{[str(f) for f in quads]}"))
        return rows

    sampled = _sample_noncyclic_subgroups(spec, rng, want)
    distinct = len({g for _, g in sampled})
    ok = True
    for (g1, g2), _group in sampled:
        for n in range(3, 7):
            if _group_invariants_of_degree(spec, [g1, g2], n):
                ok = False
    rows.append(_row("noncyclic", "sampled-subgroups", ok and len(sampled) >= want,
                     f"{len(sampled)} sampled ({distinct} distinct), degrees 3..6"))
    return rows


def suite_pgroup(spec: FieldSpec, seed: int = 12345, want: int = 5):
    rng = random.Random(seed)
    rows = []
    if spec.s == 1:
        rows.append(_row("pgroup", "vacuous", True,
                         "no subgroup of order p^2 exists when q = p"))
        return rows
    p, q = spec.p, spec.order

    def unipotent(a):
        return ProjMat(Mat2(spec.one, spec.zero, a, spec.one))

    seen_spans = set()
    pairs = []
    attempts = 0
    while len(pairs) < want and attempts < 1000:
        attempts += 1
        a = spec.from_encoding(rng.randrange(1, q))
        span_a = {spec.zero}
        cur = spec.zero
        for _ in range(p - 1):
            cur = cur + a
            span_a.add(cur)
        b = spec.from_encoding(rng.randrange(1, q))
        if b in span_a:
            continue
        span = set()
        cur = spec.zero
        for _ in range(p):
            span |= {x + cur for x in span_a}
            cur = cur + b
        pairs.append((a, b))
        seen_spans.add(frozenset(x.encode() for x in span))

    ok = True
    details = []
    for a, b in pairs:
        gens = [unipotent(a), unipotent(b)]
        group = subgroup_closure(gens)
        assert len(group) == p * p
        for n in range(2, 7):
            hits = (quadratic_invariants(spec, gens) if n == 2
                    else _group_invariants_of_degree(spec, gens, n))
            if hits:
                ok = False
                details.append(f"degree {n} invariant under T({a.encode()}),T({b.encode()})")
    rows.append(_row("pgroup", "order-p2-no-invariants", ok,
                     "; ".join(details)
                     or f"{len(pairs)} generator pairs ({len(seen_spans)} spans), degrees 2..6"))
    return rows


# ---------------------------------------------------------------------------
# sigma product

def suite_sigma(spec: FieldSpec, seed: int = 12345, triples: int = 500):
    rng = random.Random(seed)
    q = spec.order
    rows = []
    if q <= 3:
        mats = _all_gl2(spec)
        det_pairs = [(A, B) for A in mats for B in mats]
    else:
        det_pairs = [(_random_matrix(spec, rng), _random_matrix(spec, rng))
                     for _ in range(500)]
    det_ok = all(sigma_product(A, B).det == A.det * B.det * B.det
                 for A, B in det_pairs)
    rows.append(_row("sigma", "determinant-identity", det_ok,
                     f"{len(det_pairs)} pairs"))

    div_ok = True
    done = 0
    while done < triples:
        A = _random_matrix(spec, rng)
        if A.is_scalar():
            continue
        A0 = _random_matrix(spec, rng)
        r = rng.randrange(0, 3)
        F = F_poly(A, r)
        lhs = act(A0, F)
        rhs = F_poly(sigma_product(A, A0), r)
        if not divides(lhs, rhs):
            div_ok = False
        done += 1
    rows.append(_row("sigma", "criterion-divisibility", div_ok,
                     f"{triples} triples, r <= 2"))
    return rows


SUITES = {
    "action-laws": suite_action_laws,
    "criterion": suite_criterion,
    "conjugation": suite_conjugation,
    "counting": suite_counting,
    "generation": suite_generation,
    "qmap-fixed-point": suite_qmap_fixed_point,
    "noncyclic": suite_noncyclic,
    "pgroup": suite_pgroup,
    "sigma": suite_sigma,
}
