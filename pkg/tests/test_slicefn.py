import math

import numpy as np
import pytest

from conftest import (generic_poly, poly_convolve, poly_eval_direct, rand_poly,
                      rand_quat, rand_unit_axis)
from slicestar import (Domain, I_UNIT, ImagUnit, J_UNIT, Quaternion,
                       constant, idempotent_minus, idempotent_plus, identity,
                       orth_decompose, polynomial, quat_exp, quat_mul,
                       representation_formula, slice_preserving,
                       star_decompose, star_exp, stem_symmetry_defect,
                       unit_vector_part)
from slicestar.errors import (DegenerateUnits, DomainMismatch, JNotDefined,
                              NearBoundary, OutOfDomain, RealAxis,
                              VanishingVectorPart)

DOM = Domain(0.0, 3.0)
DOM_OFF = Domain(1.5j, 0.8)


def test_domain_validation_and_json():
    with pytest.raises(ValueError):
        Domain(0.0, -1.0)
    with pytest.raises(ValueError):
        Domain(0.5j, 0.8)              # pair of disks must clear the axis
    d = Domain(-1.5j, 0.7)             # normalized to the upper center
    assert d.center == 1.5j
    assert not d.real_intersecting

    d2 = Domain.from_json(d.to_json())
    assert d2.matches(d)
    with pytest.raises(ValueError):
        Domain.from_json({"center": [0, 0], "radius": 1.0, "realIntersecting": False})

    assert DOM.contains(1 + 2j)
    assert not DOM.contains(3.5 + 0j)
    assert d.contains(-1.4j) and d.contains(1.4j) and not d.contains(0.0j)
    assert DOM.boundary_distance(0.0) == pytest.approx(3.0)


def test_identity_and_square():
    f = identity(DOM)
    q = Quaternion(1, 2, -1, 0)
    assert (f(q) - q).norm() < 1e-15

    sq = polynomial([Quaternion.zero(), Quaternion.zero(), Quaternion.one()], DOM)
    qj = Quaternion(0.7, 0, 1.1, 0)     # point of the slice C_j
    w = complex(0.7, 1.1) ** 2
    expected = Quaternion(w.real, 0, w.imag, 0)
    assert (sq(qj) - expected).norm() < 1e-14


def test_polynomial_vs_direct_oracle(rng):
    for _ in range(40):
        coeffs = [rand_quat(rng) for _ in range(4)]
        f = polynomial(coeffs, DOM)
        for _ in range(10):
            q = rand_quat(rng, 0.9)
            if not DOM.contains(f.slice_point(q)):
                continue
            expected = poly_eval_direct(coeffs, q)
            assert (f(q) - expected).norm() <= 1e-12 * max(1.0, expected.norm())


def test_eval_at_real_points_uses_even_part():
    f = polynomial([rand_quat(np.random.default_rng(5)) for _ in range(3)], DOM)
    x = Quaternion(0.8, 0, 0, 0)
    got = f(x)
    expected = poly_eval_direct(f.node and
                                [Quaternion(*c) for c in f.node["coeffs"]], x)
    assert (got - expected).norm() < 1e-14


def test_out_of_domain():
    f = identity(Domain(0.0, 1.0))
    with pytest.raises(OutOfDomain):
        f(Quaternion(2, 0, 0, 0))
    g = identity(DOM_OFF)
    with pytest.raises(OutOfDomain):
        g(Quaternion(0.5, 0, 0, 0))     # real point, domain off the axis


def test_representation_formula(rng):
    J = ImagUnit(1, 0, 0)
    K = ImagUnit(0, 1, 0)
    vJ = rand_quat(rng)
    # I = J returns vJ exactly
    out = representation_formula(vJ, rand_quat(rng), J, K, J)
    assert (out - vJ).norm() < 1e-13

    c = rand_quat(rng)
    f = constant(c, DOM)
    alpha, beta = 0.3, 1.1
    vJ = f(Quaternion.from_slice_coords(alpha, beta, J))
    vK = f(Quaternion.from_slice_coords(alpha, beta, K))
    I = rand_unit_axis(rng)
    out = representation_formula(vJ, vK, J, K, I)
    assert (out - c).norm() < 1e-13

    for _ in range(30):
        coeffs = [rand_quat(rng) for _ in range(4)]
        f = polynomial(coeffs, DOM)
        alpha = rng.uniform(-1, 1)
        beta = rng.uniform(0.05, 1.5)
        I = rand_unit_axis(rng)
        vJ = f(Quaternion.from_slice_coords(alpha, beta, J))
        vK = f(Quaternion.from_slice_coords(alpha, beta, K))
        out = representation_formula(vJ, vK, J, K, I)
        direct = f(Quaternion.from_slice_coords(alpha, beta, I))
        assert (out - direct).norm() <= 1e-12 * max(1.0, direct.norm())

    with pytest.raises(DegenerateUnits):
        representation_formula(vJ, vK, J, J, I)


def test_star_product_slice_preserving_commutes(rng):
    sp = polynomial([Quaternion(0.4, 0, 0, 0), Quaternion(1.0, 0, 0, 0)], DOM)
    g = rand_poly(rng, DOM, deg=2)
    fg = sp.star(g)
    gf = g.star(sp)
    for _ in range(20):
        q = rand_quat(rng, 0.8)
        a, b = fg(q), gf(q)
        assert (a - b).norm() < 1e-13 * max(1.0, a.norm())
        # and equals the pointwise product
        pw = quat_mul(sp(q), g(q))
        assert (a - pw).norm() < 1e-12 * max(1.0, a.norm())


def test_star_product_symmetrizes_linear_factor(rng):
    # (q - i) * (q + i) = q^2 + 1
    lin1 = polynomial([-1 * I_UNIT, Quaternion.one()], DOM)
    lin2 = polynomial([I_UNIT, Quaternion.one()], DOM)
    prod = lin1.star(lin2)
    conv = poly_convolve([-1 * I_UNIT, Quaternion.one()],
                         [I_UNIT, Quaternion.one()])
    assert (conv[0] - Quaternion.one()).norm() < 1e-15
    for _ in range(20):
        q = rand_quat(rng)
        expected = quat_mul(q, q) + Quaternion.one()
        assert (prod(q) - expected).norm() < 1e-13 * max(1.0, expected.norm())


def test_star_product_convolution_oracle(rng):
    for _ in range(20):
        a = [rand_quat(rng) for _ in range(3)]
        b = [rand_quat(rng) for _ in range(3)]
        f, g = polynomial(a, DOM), polynomial(b, DOM)
        prod = f.star(g)
        conv = polynomial(poly_convolve(a, b), DOM)
        for _ in range(5):
            q = rand_quat(rng, 0.8)
            if not DOM.contains(f.slice_point(q)):
                continue
            assert (prod(q) - conv(q)).norm() <= 1e-12 * max(1.0, conv(q).norm())


def test_star_product_algebraic_laws(rng):
    f, g, h = (rand_poly(rng, DOM, deg=2) for _ in range(3))
    pts = DOM.sample_points(rng, 24)
    for z in pts:
        a = f.star(g.star(h)).stem_at(z)
        b = f.star(g).star(h).stem_at(z)
        assert (a - b).norm() <= 1e-11 * max(1.0, a.norm())
        c = f.star(g + h).stem_at(z)
        d = (f.star(g) + f.star(h)).stem_at(z)
        assert (c - d).norm() <= 1e-11 * max(1.0, c.norm())

    with pytest.raises(DomainMismatch):
        f.star(identity(Domain(0.0, 1.0)))


def test_symmetrization_multiplicative(rng):
    f, g = rand_poly(rng, DOM, deg=2), rand_poly(rng, DOM, deg=2)
    fg_s = f.star(g).sym()
    prod = f.sym().star(g.sym())
    for z in DOM.sample_points(rng, 30):
        a, b = fg_s.stem_at(z), prod.stem_at(z)
        assert (a - b).norm() <= 1e-10 * max(1.0, b.norm())


def test_conjugate_and_symmetrization(rng):
    f = rand_poly(rng, DOM, deg=2)
    fs = f.star(f.conj())
    sym = f.sym()
    for z in DOM.sample_points(rng, 20):
        v = fs.stem_at(z)
        assert abs(v.z1) + abs(v.z2) + abs(v.z3) < 1e-12   # slice preserving
        assert (v - sym.stem_at(z)).norm() < 1e-12


def test_star_decompose():
    f = constant(J_UNIT, DOM)
    f0, fv, fc, fs, fvs = star_decompose(f)
    q = Quaternion(0.5, 0.5, 0, 0)
    assert f0(q).norm() < 1e-15
    assert (fv(q) - J_UNIT).norm() < 1e-15
    assert (fs(q) - Quaternion.one()).norm() < 1e-15

    # f = q - i: f^s(2) = (q^2 + 1)(2) = 5
    f = polynomial([-1 * I_UNIT, Quaternion.one()], DOM)
    assert (f.sym()(Quaternion(2, 0, 0, 0)) - Quaternion(5, 0, 0, 0)).norm() < 1e-13


def test_vsym_plus_scalar_square_is_sym(rng):
    f = rand_poly(rng, DOM, deg=3)
    for z in DOM.sample_points(rng, 40):
        v = f.stem_at(z)
        assert abs(v.z0 ** 2 + v.vec_norm2() - v.csym()) < 1e-13


def test_star_dot_wedge_intrinsic(rng):
    f, g = rand_poly(rng, DOM, deg=2), rand_poly(rng, DOM, deg=2)
    dot = f.star_dot(g)
    wedge = f.star_wedge(g)
    for z in DOM.sample_points(rng, 20):
        fz, gz = f.stem_at(z), g.stem_at(z)
        from slicestar import cq_mul
        # <f_v, g_v>_* = (f_v * g_v^c + g_v * f_v^c)/2
        fv, gv = fz.vec(), gz.vec()
        d2 = (cq_mul(fv, gv.conj()) + cq_mul(gv, fv.conj())) * 0.5
        assert abs(dot.stem_at(z).z0 - d2.z0) < 1e-12
        assert abs(d2.z1) + abs(d2.z2) + abs(d2.z3) < 1e-12
        # f ^ g = [f, g]/2, insensitive to the scalar parts
        w2 = (cq_mul(fz, gz) - cq_mul(gz, fz)) * 0.5
        assert (wedge.stem_at(z) - w2).norm() < 1e-12


def test_parallel_vectors_commute(rng):
    gamma = slice_preserving(lambda z: z * z + 0.5, DOM)
    f = rand_poly(rng, DOM, deg=1)
    g = gamma.star(f.vector_part()) + constant(Quaternion(0.3, 0, 0, 0), DOM)
    comm = f.star(g) - g.star(f)
    for z in DOM.sample_points(rng, 20):
        assert comm.stem_at(z).norm() < 1e-12


def test_slice_derivative_polynomial():
    sq = polynomial([Quaternion.zero(), Quaternion.zero(), Quaternion.one()], DOM)
    q = Quaternion(1, 1, 0, 0)
    expected = Quaternion(2, 2, 0, 0)
    assert (sq.derivative_at(q) - expected).norm() < 1e-11


def test_slice_derivative_exp_fixed_point(rng):
    f = star_exp(identity(Domain(0.0, 2.0)))
    for _ in range(10):
        q = rand_quat(rng, 0.5)
        assert (f.derivative_at(q) - quat_exp(q)).norm() \
            <= 1e-10 * max(1.0, quat_exp(q).norm())


def test_slice_derivative_degree6_oracle(rng):
    coeffs = [rand_quat(rng) for _ in range(7)]
    f = polynomial(coeffs, DOM)
    dcoeffs = [coeffs[n] * float(n) for n in range(1, 7)]
    exact = polynomial(dcoeffs, DOM)
    for z in DOM.sample_points(rng, 30, margin_frac=0.2):
        got = f.stem_derivative_at(z)
        want = exact.stem_at(z)
        assert (got - want).norm() <= 1e-10 * max(1.0, want.norm())


def test_quadrature_self_check(rng):
    f = star_exp(rand_poly(rng, DOM, deg=3))
    for z in DOM.sample_points(rng, 10, margin_frac=0.2):
        a = f.stem_derivative_at(z)
        b = f.stem_derivative_at(z, npts=64)
        assert (a - b).norm() < 1e-9 * max(1.0, b.norm())


def test_derivative_near_boundary():
    f = identity(Domain(0.0, 1.0))
    with pytest.raises(NearBoundary):
        f.stem_derivative_at(1.0 - 1e-9 + 0j)


def test_spherical_derivative():
    f = identity(DOM)
    q = Quaternion(0.3, 1.2, 0.4, -0.2)
    assert (f.spherical_derivative_at(q) - Quaternion.one()).norm() < 1e-14

    g = star_exp(identity(Domain(0.0, 2.5)))
    alpha, beta = 0.4, 1.3
    q = Quaternion(alpha, beta, 0, 0)
    expected = math.exp(alpha) * math.sin(beta) / beta
    got = g.spherical_derivative_at(q)
    assert abs(got.q0 - expected) < 1e-13 and got.vec().norm() < 1e-13

    assert constant(J_UNIT, DOM).spherical_derivative_at(q).norm() < 1e-15
    with pytest.raises(RealAxis):
        f.spherical_derivative_at(Quaternion(1, 0, 0, 0))


def test_unit_vector_function_and_idempotents(rng):
    with pytest.raises(JNotDefined):
        unit_vector_part(DOM)
    J = unit_vector_part(DOM_OFF)
    q = Quaternion(0.1, 0, 1.5, 0)
    assert (J(q) - J_UNIT).norm() < 1e-15

    JJ = J.star(J)
    lp = idempotent_plus(DOM_OFF)
    lm = idempotent_minus(DOM_OFF)
    for z in DOM_OFF.sample_points(rng, 30):
        assert (JJ.stem_at(z) + type(JJ.stem_at(z)).one()).norm() < 1e-15
        assert (lp.star(lp).stem_at(z) - lp.stem_at(z)).norm() < 1e-15
        assert (lm.star(lm).stem_at(z) - lm.stem_at(z)).norm() < 1e-15
        assert lp.star(lm).stem_at(z).norm() < 1e-15


def test_stem_symmetry_of_constructions(rng):
    pts = DOM.sample_points(rng, 64)
    f = rand_poly(rng, DOM, deg=3)
    g = rand_poly(rng, DOM, deg=2)
    for fn in (f, g, f.star(g), f.conj(), f.sym(), f.vsym(), star_exp(f),
               f.derivative(), f + g, f.vector_part(), f.star_wedge(g)):
        assert stem_symmetry_defect(fn, pts) < 1e-10

    pts_off = DOM_OFF.sample_points(rng, 64)
    for fn in (unit_vector_part(DOM_OFF), idempotent_plus(DOM_OFF)):
        assert stem_symmetry_defect(fn, pts_off) < 1e-15


def test_orth_decompose_parallel_case(rng):
    f = rand_poly(rng, DOM, deg=1)
    g = f.vector_part() * 3.0
    g1, g_perp = orth_decompose(f, g)
    for z in DOM.sample_points(rng, 20):
        assert abs(g1.scalar_value(z) - 3.0) < 1e-10
        assert g_perp.stem_at(z).norm() < 1e-9


def test_orth_decompose_orthogonal_units():
    f = constant(I_UNIT, DOM)
    g = constant(J_UNIT, DOM)
    g1, g_perp = orth_decompose(f, g)
    q = Quaternion(0.2, 0.7, 0, 0)
    assert g1(q).norm() < 1e-13
    assert (g_perp(q) - J_UNIT).norm() < 1e-13


def test_orth_decompose_reconstruction(rng):
    for _ in range(10):
        f = generic_poly(rng, DOM, deg=1)
        g = rand_poly(rng, DOM, deg=2)
        g1, g_perp = orth_decompose(f, g)
        fv = f.vector_part()
        dot = fv.star_dot(g_perp)
        wedge_s = fv.star_wedge(g_perp).vsym()
        target = f.vsym().star(g_perp.vsym())
        for z in DOM.sample_points(rng, 15):
            gv = g.stem_at(z).vec()
            recon = g1.scalar_value(z) * f.stem_at(z).vec() \
                + g_perp.stem_at(z).vec()
            assert (gv - recon).norm() <= 1e-10 * max(1.0, gv.norm())
            assert abs(dot.stem_at(z).z0) < 1e-10
            # wedge identity needs only the vector part of g_perp
            pv = g_perp.stem_at(z).vec()
            lhs = f.stem_at(z).vec_norm2() * pv.vec_norm2()
            from slicestar import cq_wedge
            got = cq_wedge(f.stem_at(z), g_perp.stem_at(z)).vec_norm2()
            assert abs(got - lhs) <= 1e-10 * max(1.0, abs(lhs))


def test_orth_decompose_cauchy_extension():
    # f_v = q i has vsym z^2 with an isolated zero at 0; a parallel g with
    # polynomial ratio gamma must be recovered, including at the zero
    dom = Domain(0.0, 1.5)
    fv = polynomial([Quaternion.zero(), I_UNIT], dom)          # z in the i slot
    f = fv + constant(Quaternion(0.2, 0, 0, 0), dom)
    gamma = polynomial([Quaternion(0.7, 0, 0, 0), Quaternion(0.3, 0, 0, 0)], dom)
    g = gamma.star(fv) + constant(Quaternion(0, 0, 0.5, 0), dom)
    g1, g_perp = orth_decompose(f, g)
    assert abs(g1.scalar_value(0j) - 0.7) < 1e-8
    for z in (0.001 + 0.001j, 0.3 - 0.2j, -0.9 + 0.1j):
        assert abs(g1.scalar_value(z) - gamma.scalar_value(z)) < 1e-8


def test_orth_decompose_vanishing():
    f = constant(Quaternion(1.0, 0, 0, 0), DOM)   # no vector part at all
    g = constant(J_UNIT, DOM)
    with pytest.raises(VanishingVectorPart):
        orth_decompose(f, g)
