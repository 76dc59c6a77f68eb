import random
from dataclasses import replace

import pytest
from hypothesis import given, strategies as st

from bundlecensus.abelian import IntMatrix
from bundlecensus.cohomology import (
    CohomologyClass,
    GradedGroupZ,
    MissingOperationError,
    apply_op,
    cup,
    pair_top,
    validate_manifold,
)
from bundlecensus.fixtures import BUILTIN_NAMES, builtin

from conftest import graded_pair


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_builtins_pass_strict_validation(name):
    report = validate_manifold(builtin(name), strict=True)
    assert report.ok, str(report)


def test_wrong_spinc_class_is_caught(cp4):
    # rho2(4t) = 0, whereas w2(cp4) = t mod 2
    corrupted = replace(cp4, spinc_class=cp4.zclass(2, (4,)))
    report = validate_manifold(corrupted)
    assert not report.law("spinc_reduction").passed
    assert report.ok is False


def test_non_torsion_bockstein_is_caught(torsion_demo):
    # make H^6 infinite cyclic so beta(x5) has infinite order
    groups = list(torsion_demo.integral.groups)
    groups[6] = groups[6].canonical((0,))
    corrupted = replace(
        torsion_demo,
        integral=GradedGroupZ(tuple(groups), torsion_demo.integral.names),
    )
    report = validate_manifold(corrupted)
    law = report.law("beta_torsion")
    assert not law.passed
    assert "x5" in law.witness


def test_dimension_mismatch_is_caught(cp4):
    corrupted = replace(cp4, rho2={**cp4.rho2, 2: IntMatrix(1, 3, (1, 0, 0))})
    report = validate_manifold(corrupted)
    law = report.law("shape")
    assert not law.passed
    assert "rho2 at degree 2" in law.witness


def test_strict_mode_catches_broken_exactness(torsion_demo):
    # drop the rho2 matrix hitting H^6(Z/2): its image no longer fills ker beta
    rho2 = {n: M for n, M in torsion_demo.rho2.items() if n != 6}
    corrupted = replace(torsion_demo, rho2={**rho2, 6: IntMatrix.zeros(1, 1)})
    report = validate_manifold(corrupted, strict=True)
    assert not report.law("bockstein_exact_deg6").passed


def test_cup_examples(cp4, hp2):
    t = cp4.zclass(2, (1,))
    assert cup(cp4, t, t) == cp4.zclass(4, (1,))
    assert cup(cp4, t, cp4.zclass(4, (5,))) == cp4.zclass(6, (5,))
    u = hp2.zclass(4, (1,))
    assert cup(hp2, u, u) == hp2.zclass(8, (1,))


def test_cup_with_zero_and_unit(cp4):
    t = cp4.zclass(2, (1,))
    assert cup(cp4, t, cp4.zero(4)).is_zero
    one = cp4.zclass(0, (3,))
    assert cup(cp4, one, t) == cp4.zclass(2, (3,))


def test_cup_missing_table(cp4):
    stripped = replace(cp4, cup_z={})
    t = stripped.zclass(2, (1,))
    with pytest.raises(MissingOperationError, match=r"\(2, 2\)"):
        cup(stripped, t, t)


def test_cup_degree_overflow(cp4):
    t4 = cp4.zclass(8, (1,))
    with pytest.raises(ValueError, match="exceeds"):
        cup(cp4, t4, cp4.zclass(2, (1,)))


def test_cup_ring_mismatch(cp4):
    with pytest.raises(ValueError, match="ring"):
        cup(cp4, cp4.zclass(2, (1,)), cp4.m2class(2, (1,)))


coords2 = st.tuples(st.integers(-9, 9), st.integers(-9, 9))
coords3 = st.tuples(st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9))


@given(coords2, coords2, coords3)
def test_cup_bilinear(x1, x2, y):
    data = builtin("cp2xcp2")
    a1, a2 = data.zclass(2, x1), data.zclass(2, x2)
    b = data.zclass(4, y)
    lhs = cup(data, data.add(a1, a2), b)
    rhs = data.add(cup(data, a1, b), cup(data, a2, b))
    assert lhs == rhs
    assert cup(data, data.scale(3, a1), b) == data.scale(3, cup(data, a1, b))


@given(coords2, st.tuples(st.integers(-9, 9), st.integers(-9, 9)))
def test_cup_commutes_in_even_degrees(x, y):
    data = builtin("cp2xcp2")
    a = data.zclass(2, x)
    b = data.zclass(6, y)
    assert cup(data, a, b) == cup(data, b, a)
    assert pair_top(data, cup(data, a, b)) == pair_top(data, cup(data, b, a))


def test_cup_swapped_odd_degrees_picks_up_sign():
    # only one orientation of a (3, 5) table is stored; the swapped lookup
    # must apply the graded sign (-1)^{3*5}
    integral, mod2 = graded_pair(
        {0: ((0,), ("1",)), 3: ((0,), ("x",)), 5: ((0,), ("y",)), 8: ((0,), ("v",))},
        {},
    )
    from bundlecensus.cohomology import ManifoldData

    data = ManifoldData(
        name="odd-sign",
        integral=integral,
        mod2=mod2,
        cup_z={(3, 5): {(0, 0): (1,)}},
        rho2={},
        beta={},
        sq2={},
        pairing=(1,),
        p1=CohomologyClass(4, "Z", ()),
        spinc_class=CohomologyClass(2, "Z", ()),
    )
    x = data.zclass(3, (1,))
    y = data.zclass(5, (1,))
    assert cup(data, x, y) == data.zclass(8, (1,))
    assert cup(data, y, x) == data.zclass(8, (-1,))


def test_pair_top_examples(cp4, cp2xcp2):
    assert pair_top(cp4, cp4.zclass(8, (1,))) == 1
    assert pair_top(cp4, cp4.zero(8)) == 0
    # a^2 b^2 is the top monomial of cp2xcp2
    a = cp2xcp2.zclass(2, (1, 0))
    b = cp2xcp2.zclass(2, (0, 1))
    ab = cup(cp2xcp2, a, b)
    assert pair_top(cp2xcp2, cup(cp2xcp2, ab, ab)) == 1


def test_pair_top_linear(cp4):
    x = cp4.zclass(8, (3,))
    y = cp4.zclass(8, (-5,))
    assert pair_top(cp4, cp4.add(x, y)) == pair_top(cp4, x) + pair_top(cp4, y)


def test_pair_top_degree_check(cp4):
    with pytest.raises(ValueError):
        pair_top(cp4, cp4.zclass(4, (1,)))


def test_apply_op_examples(cp4, torsion_demo):
    assert apply_op(cp4, "rho2", cp4.zclass(2, (5,))) == cp4.m2class(2, (1,))
    x5 = torsion_demo.m2class(5, (1,))
    assert apply_op(torsion_demo, "beta", x5) == torsion_demo.zclass(6, (1,))
    # Sq^2 t = t^2, Sq^2 t^2 = 0, Sq^2 t^3 = t^4
    assert apply_op(cp4, "sq2", cp4.m2class(2, (1,))) == cp4.m2class(4, (1,))
    assert apply_op(cp4, "sq2", cp4.m2class(4, (1,))).is_zero
    assert apply_op(cp4, "sq2", cp4.m2class(6, (1,))) == cp4.m2class(8, (1,))


def test_sq2_on_products(cp1xcp3):
    # Sq^2(a) = a^2 = 0 and Sq^2(b) = b^2 on cp1 x cp3
    a = cp1xcp3.m2class(2, (1, 0))
    b = cp1xcp3.m2class(2, (0, 1))
    assert apply_op(cp1xcp3, "sq2", a).is_zero
    assert apply_op(cp1xcp3, "sq2", b) == cp1xcp3.m2class(4, (0, 1))


def test_beta_rho2_vanishes_on_random_classes():
    rng = random.Random(7)
    for name in BUILTIN_NAMES:
        data = builtin(name)
        for degree in range(8):
            for _ in range(5):
                x = data.zclass(degree, [rng.randint(-9, 9) for _ in range(data.ngens(degree))])
                image = apply_op(data, "beta", apply_op(data, "rho2", x))
                assert image.is_zero


def test_apply_op_ring_and_range_errors(cp4):
    with pytest.raises(ValueError, match="expects"):
        apply_op(cp4, "rho2", cp4.m2class(2, (1,)))
    with pytest.raises(ValueError, match="expects"):
        apply_op(cp4, "beta", cp4.zclass(2, (1,)))
    with pytest.raises(ValueError, match="beyond"):
        apply_op(cp4, "sq2", cp4.m2class(8, (1,)))
    with pytest.raises(ValueError, match="unknown"):
        apply_op(cp4, "sq3", cp4.m2class(2, (1,)))


def test_apply_op_missing_matrix(cp4):
    stripped = replace(cp4, sq2={})
    with pytest.raises(MissingOperationError, match="sq2"):
        apply_op(stripped, "sq2", stripped.m2class(4, (1,)))


def test_classes_stored_reduced(torsion_demo):
    # H^6 = Z/2: coordinates are canonical representatives
    assert torsion_demo.zclass(6, (7,)) == torsion_demo.zclass(6, (1,))
    assert torsion_demo.zclass(6, (-4,)).is_zero
    assert torsion_demo.m2class(5, (3,)) == torsion_demo.m2class(5, (1,))


def test_chern_tuple_degree_checks(cp4):
    with pytest.raises(ValueError, match="coordinates"):
        cp4.chern_tuple((1, 2), (0,), (0,), (0,))


def test_validation_report_rendering(cp4):
    report = validate_manifold(cp4)
    text = str(report)
    assert "PASS  shape" in text
    assert report.law("h0_is_Z").passed
    with pytest.raises(KeyError):
        report.law("nonexistent")


def test_graded_shapes_must_cover_all_degrees():
    integral, _ = graded_pair({0: ((0,), ("1",))}, {})
    with pytest.raises(ValueError):
        GradedGroupZ(integral.groups[:5], integral.names[:5])
