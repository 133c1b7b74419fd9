import random

import pytest

from pgl2poly import (F_poly, Mat2, Poly, ProjMat, act, criterion_invariant,
                      enumerate_monic_irreducibles, group_invariant,
                      is_cyclic, is_invariant, make_field, proj_act,
                      quadratic_invariants, reciprocal, reduced_type2,
                      reduced_type3, reduced_type4, star_act,
                      subgroup_closure)


def _rand_matrix(spec, rng):
    while True:
        a, b, c, d = (spec.from_encoding(rng.randrange(spec.order)) for _ in range(4))
        if a * d != b * c:
            return Mat2(a, b, c, d)


def test_act_by_swap_is_reciprocal(F3):
    E = Mat2.from_encodings(F3, (0, 1, 1, 0))
    f = Poly.of(F3, 2, 1, 1)
    assert act(E, f) == reciprocal(f) == Poly.of(F3, 1, 1, 2)

def test_act_by_identity(F5):
    f = Poly.of(F5, 3, 1, 1)
    assert act(Mat2.identity(F5), f) == f

def test_act_translation_char2(F2):
    T = Mat2.from_encodings(F2, (1, 0, 1, 1))
    f = Poly.of(F2, 1, 1, 1)
    assert act(T, f) == f                 # (x+1)^2 + (x+1) + 1 = x^2 + x + 1

def test_act_rejects_zero(F2):
    with pytest.raises(ValueError):
        act(Mat2.identity(F2), Poly.zero(F2))


def test_proj_act_monic_reciprocal(F3):
    E = ProjMat(Mat2.from_encodings(F3, (0, 1, 1, 0)))
    assert proj_act(E, Poly.of(F3, 2, 1, 1)) == Poly.of(F3, 2, 2, 1)

def test_proj_act_identity_class(F3):
    I = ProjMat(Mat2.identity(F3))
    for f in enumerate_monic_irreducibles(F3, 3):
        assert proj_act(I, f) == f

def test_proj_act_action_law_random(F5):
    rng = random.Random(23)
    cubics = enumerate_monic_irreducibles(F5, 3)
    for _ in range(200):
        A = ProjMat(_rand_matrix(F5, rng))
        B = ProjMat(_rand_matrix(F5, rng))
        f = rng.choice(cubics)
        assert proj_act(A, proj_act(B, f)) == proj_act(A * B, f)

def test_proj_act_rejects_bad_inputs(F2):
    cls = ProjMat(Mat2.identity(F2))
    with pytest.raises(ValueError):
        proj_act(cls, Poly.of(F2, 1, 1))            # degree 1
    with pytest.raises(ValueError):
        proj_act(cls, Poly.of(F2, 1, 0, 1))         # reducible


def test_whole_group_fixes_the_f2_quadratic(F2):
    f = Poly.of(F2, 1, 1, 1)
    for cls in subgroup_closure([ProjMat(reduced_type2(F2)),
                                 ProjMat(reduced_type4(F2, F2.one))]):
        assert is_invariant(cls, f)

def test_d1_fixes_both_cubics(F2):
    cls = ProjMat(reduced_type4(F2, F2.one))
    assert is_invariant(cls, Poly.of(F2, 1, 1, 0, 1))
    assert is_invariant(cls, Poly.of(F2, 1, 0, 1, 1))


def test_f_poly_of_d1(F2):
    D1 = reduced_type4(F2, F2.one)
    assert F_poly(D1, 1) == Poly.of(F2, 1, 1, 0, 1)
    assert F_poly(D1 ** 2, 1) == Poly.of(F2, 1, 0, 1, 1)

def test_f_poly_identity_r0_vanishes(F3):
    assert not F_poly(Mat2.identity(F3), 0)

def test_f_poly_degree(F5):
    A = reduced_type4(F5, F5.from_encoding(4))
    assert F_poly(A, 2).degree == 5 ** 2 + 1


def test_criterion_on_d1_cubics(F2):
    D1 = reduced_type4(F2, F2.one)
    assert criterion_invariant(D1, Poly.of(F2, 1, 1, 0, 1))
    assert criterion_invariant(D1, Poly.of(F2, 1, 0, 1, 1))

def test_criterion_rejects_off_multiple_degrees(F2):
    D1 = reduced_type4(F2, F2.one)
    for f in enumerate_monic_irreducibles(F2, 4):
        assert not criterion_invariant(D1, f)
        assert not is_invariant(ProjMat(D1), f)

def test_criterion_equals_direct_for_identity(F3):
    I = Mat2.identity(F3)
    for f in enumerate_monic_irreducibles(F3, 4):
        assert criterion_invariant(I, f)

def test_criterion_agreement_sampled(F5):
    rng = random.Random(31)
    for n, samples in ((2, 60), (3, 60), (4, 60), (5, 25), (6, 25)):
        pool = enumerate_monic_irreducibles(F5, n)
        for _ in range(samples):
            A = _rand_matrix(F5, rng)
            f = rng.choice(pool)
            assert criterion_invariant(A, f) == is_invariant(ProjMat(A), f)


def test_closure_of_swap(F3):
    E = ProjMat(Mat2.from_encodings(F3, (0, 1, 1, 0)))
    group = subgroup_closure([E])
    assert len(group) == 2 and is_cyclic(group)

def test_closure_klein_four(F3):
    g1 = ProjMat(Mat2.from_encodings(F3, (2, 0, 0, 1)))     # diag(-1, 1)
    g2 = ProjMat(reduced_type3(F3, F3.from_encoding(2)))
    group = subgroup_closure([g1, g2])
    assert len(group) == 4 and not is_cyclic(group)

def test_closure_full_group_f2(F2):
    gens = [ProjMat(reduced_type2(F2)), ProjMat(reduced_type4(F2, F2.one))]
    assert len(subgroup_closure(gens)) == 2 ** 3 - 2


def test_group_invariant_full_f2(F2):
    gens = [ProjMat(reduced_type2(F2)), ProjMat(reduced_type4(F2, F2.one))]
    assert group_invariant(gens, Poly.of(F2, 1, 1, 1))

def test_group_invariant_equals_full_closure_check(F3):
    g1 = ProjMat(Mat2.from_encodings(F3, (2, 0, 0, 1)))
    g2 = ProjMat(reduced_type3(F3, F3.from_encoding(2)))
    closure = subgroup_closure([g1, g2])
    for f in enumerate_monic_irreducibles(F3, 4):
        assert group_invariant([g1, g2], f) == all(is_invariant(g, f) for g in closure)


def test_group_invariant_cyclic_matches_single(F2):
    cls = ProjMat(reduced_type4(F2, F2.one))
    for n in (2, 3, 4):
        for f in enumerate_monic_irreducibles(F2, n):
            assert group_invariant([cls], f) == is_invariant(cls, f)


def test_quadratic_invariants_full_group_f2(F2):
    gens = [ProjMat(reduced_type2(F2)), ProjMat(reduced_type4(F2, F2.one))]
    assert quadratic_invariants(F2, gens) == [Poly.of(F2, 1, 1, 1)]

def test_quadratic_invariants_translation_f3_empty(F3):
    # oracle: scan all monic irreducible quadratics for f(x+1) = f(x)
    T = reduced_type2(F3)
    oracle = [f for f in enumerate_monic_irreducibles(F3, 2)
              if act(T, f) == f]
    assert oracle == []
    assert quadratic_invariants(F3, [ProjMat(T)]) == []

def test_quadratic_invariants_no_generators(F3):
    assert quadratic_invariants(F3, []) == list(enumerate_monic_irreducibles(F3, 2))


def test_star_act_is_transposed_action(F3):
    A = Mat2.from_encodings(F3, (1, 1, 0, 1))
    f = Poly.of(F3, 1, 0, 1)
    assert star_act(A, f) == act(A.transpose(), f)
    assert star_act(A, f) == act(Mat2.from_encodings(F3, (1, 0, 1, 1)), f)

def test_star_act_diagonal_agrees_with_act(F5):
    A = Mat2.from_encodings(F5, (3, 0, 0, 1))
    f = Poly.of(F5, 1, 2, 1)
    assert star_act(A, f) == act(A, f)

@pytest.mark.parametrize("p", [2, 3])
def test_conjugation_correspondence_suite(p):
    from pgl2poly.verify import suite_conjugation
    rows = suite_conjugation(make_field(p, 1), seed=19)
    assert rows and all(r.passed for r in rows)


def test_act_multiplicativity(F3):
    rng = random.Random(41)
    for _ in range(200):
        A = _rand_matrix(F3, rng)
        f = Poly(F3, [F3.from_encoding(rng.randrange(3)) for _ in range(rng.randrange(1, 5))])
        g = Poly(F3, [F3.from_encoding(rng.randrange(3)) for _ in range(rng.randrange(1, 5))])
        if f and g:
            assert act(A, f * g) == act(A, f) * act(A, g)
