
import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from equitri import (
    Classification,
    DiscriminantPositive,
    NotACubic,
    centered_invariants,
    depress,
    discriminant,
    reference_roots,
    solve_cubic,
    trig_roots,
)
from equitri.cubic import solve_depressed

from conftest import random_triples

# x**3 + x + 1, 40-digit mpmath root
PLASTIC_ROOT = -0.6823278038280193274

coef = st.floats(min_value=-100, max_value=100, allow_nan=False)


def three_real(p, q):
    return (q / 2) ** 2 + (p / 3) ** 3 <= -1e-6


@st.composite
def three_real_pq(draw):
    """(p, q) with three real roots: q drawn inside (-q_max, q_max)."""
    p = draw(st.floats(min_value=-100, max_value=-1e-2))
    frac = draw(st.floats(min_value=-0.999, max_value=0.999))
    q = frac * 2 * (-p / 3) ** 1.5
    assume(three_real(p, q))
    return p, q


@st.composite
def cubic_from_roots(draw):
    root = st.floats(min_value=-20, max_value=20)
    a = draw(st.floats(min_value=0.1, max_value=10) | st.floats(min_value=-10, max_value=-0.1))
    r = draw(st.tuples(root, root, root))
    return tuple(a * c for c in np.poly(r))


@pytest.mark.parametrize(
    "cc, p, q, shift",
    [((1, -6, 11, -6), -1, 0, 2), ((1, 0, -7, 6), -7, 6, 0), ((2, 0, -14, 12), -7, 6, 0)],
)
def test_depress_examples(cc, p, q, shift):
    dc, s = depress(cc)
    assert dc.p == pytest.approx(p, abs=1e-14)
    assert dc.q == pytest.approx(q, abs=1e-14)
    assert s == pytest.approx(shift, abs=1e-15)


def test_depress_agrees_with_expansion():
    # roots 1, 2, 3 shifted by -2 are -1, 0, 1
    assert tuple(np.poly([1, 2, 3])) == (1, -6, 11, -6)
    _, _, p, q = np.poly([-1, 0, 1])
    dc, _ = depress((1, -6, 11, -6))
    assert (dc.p, dc.q) == pytest.approx((p, q), abs=1e-14)


def test_not_a_cubic():
    with pytest.raises(NotACubic):
        depress((0, 1, 2, 3))
    with pytest.raises(NotACubic):
        solve_cubic((0.0, 1, 2, 3))


@given(coef.filter(lambda a: abs(a) > 1e-2), coef, coef, coef)
def test_depressed_roots_map_back(a, b, c, d):
    dc, shift = depress((a, b, c, d))
    rs = solve_depressed(dc)
    for x in rs.roots:
        X = x + shift
        # the shift enters every term, so measure terms at max(|X|, |shift|)
        m = max(abs(X), abs(shift), 1.0)
        size = max(abs(a) * m**3, abs(b) * m * m, abs(c) * m, abs(d))
        assert abs(((a * X + b) * X + c) * X + d) <= 1e-9 * size


@pytest.mark.parametrize(
    "dc, delta, kind",
    [
        ((-1, 0), -1 / 27, Classification.THREE_DISTINCT),
        ((-3, 2), 0.0, Classification.ONE_DOUBLE_ONE_SIMPLE),
        ((1, 1), 1 / 4 + 1 / 27, Classification.ONE_REAL),
        ((0, 0), 0.0, Classification.TRIPLE),
    ],
)
def test_discriminant_examples(dc, delta, kind):
    d, k = discriminant(dc)
    assert d == pytest.approx(delta, abs=1e-15)
    assert k is kind


def test_double_root_oracle():
    assert tuple(np.poly([1, 1, -2])) == (1, 0, -3, 2)


@pytest.mark.parametrize(
    "dc, roots, kind",
    [
        ((-1, 0), (-1, 0, 1), Classification.THREE_DISTINCT),
        ((-7, 6), (-3, 1, 2), Classification.THREE_DISTINCT),
        ((-3, 2), (-2, 1, 1), Classification.ONE_DOUBLE_ONE_SIMPLE),
        ((0, 0), (0, 0, 0), Classification.TRIPLE),
    ],
)
def test_trig_roots_examples(dc, roots, kind):
    rs = trig_roots(dc)
    assert rs.classification is kind
    np.testing.assert_allclose(rs.roots, roots, atol=1e-12)
    assert list(rs.roots) == sorted(rs.roots)


def test_factorizations():
    for roots in [(-1, 0, 1), (-3, 1, 2), (-2, 1, 1)]:
        _, x2, p, q = np.poly(roots)
        assert x2 == 0
        np.testing.assert_allclose(trig_roots((p, q)).roots, roots, atol=1e-12)


@pytest.mark.parametrize("dc", [(1, 1), (0, 1), (0, -1e-300), (-3, 2.1), (5, 0)])
def test_trig_roots_rejects_single_real_root(dc):
    with pytest.raises(DiscriminantPositive):
        trig_roots(dc)


@pytest.mark.parametrize(
    "cc, roots",
    [((1, -6, 11, -6), (1, 2, 3)), ((1, 0, -1, 0), (-1, 0, 1))],
)
def test_solve_cubic_examples(cc, roots):
    np.testing.assert_allclose(solve_cubic(cc).roots, roots, atol=1e-12)


def test_solve_cubic_single_root():
    rs = solve_cubic((1, 0, 1, 1))
    assert rs.classification is Classification.ONE_REAL
    assert rs.roots == pytest.approx((PLASTIC_ROOT,), abs=1e-14)
    assert rs.delta > 0


@pytest.mark.parametrize(
    "dc, roots",
    [((-1, 0), (-1, 0, 1)), ((-7, 6), (-3, 1, 2)), ((1, 1), (PLASTIC_ROOT,))],
)
def test_reference_roots_examples(dc, roots):
    np.testing.assert_allclose(reference_roots(dc).roots, roots, atol=1e-13)


def test_reference_roots_repeated():
    assert reference_roots((0, 0)).roots == (0.0, 0.0, 0.0)
    rs = reference_roots((-3, 2))
    np.testing.assert_allclose(rs.roots, (-2, 1, 1), atol=1e-12)
    assert rs.classification is Classification.ONE_DOUBLE_ONE_SIMPLE


@given(coef, coef)
def test_reference_matches_numpy(p, q):
    # numpy.roots uses companion-matrix eigenvalues: a third, unrelated route
    assume(abs((q / 2) ** 2 + (p / 3) ** 3) > 1e-6)
    expected = np.roots([1, 0, p, q])
    real = np.sort(expected[np.abs(expected.imag) < 1e-7].real)
    got = reference_roots((p, q)).roots
    assert len(got) == len(real)
    np.testing.assert_allclose(got, real, atol=1e-7 * max(1, abs(p), abs(q)))


@given(three_real_pq())
def test_vieta_closure(pq):
    p, q = pq
    y1, y2, y3 = trig_roots((p, q)).roots
    tol = 1e-9 * max(1, abs(p), abs(q))
    assert abs(y1 + y2 + y3) <= tol
    assert abs(y1 * y2 + y1 * y3 + y2 * y3 - p) <= tol
    assert abs(-y1 * y2 * y3 - q) <= tol


@given(three_real_pq())
def test_root_residuals(pq):
    p, q = pq
    for y in trig_roots((p, q)).roots:
        assert abs(y**3 + p * y + q) <= 1e-10 * max(1, abs(y) ** 3)


@given(three_real_pq())
def test_polish_does_not_hurt(pq):
    p, q = pq
    plain = trig_roots((p, q)).roots
    polished = trig_roots((p, q), polish=True).roots
    np.testing.assert_allclose(polished, plain, atol=1e-9 * max(1, abs(p), abs(q)))


@given(cubic_from_roots())
def test_depression_correctness(cc):
    dc, shift = depress(cc)
    assume(three_real(*dc))
    direct = solve_cubic(cc).roots
    via = [y + shift for y in trig_roots(dc).roots]
    assert direct == pytest.approx(via, abs=1e-12)


@given(st.floats(min_value=0.01, max_value=100) | st.floats(min_value=-100, max_value=-0.01))
def test_scale_invariance(lam):
    for cc in [(1, -6, 11, -6), (1, 0, -7, 6), (2, 3, -5, -1), (1, 0, 1, 1)]:
        base = solve_cubic(cc)
        scaled = solve_cubic([lam * v for v in cc])
        assert scaled.classification is base.classification
        np.testing.assert_allclose(scaled.roots, base.roots, atol=1e-11)


def test_reconstruction_duality(rng):
    for t in random_triples(rng, 500):
        o, dc = centered_invariants(t)
        roots = trig_roots(dc).roots
        np.testing.assert_allclose(
            [r + o for r in roots], sorted(t), atol=1e-9 * max(1, *map(abs, t))
        )
