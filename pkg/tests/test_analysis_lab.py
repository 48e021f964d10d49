import math
import random

import pytest

from zetawz.analysis_lab import (
    DEFAULT_SEED,
    KernelIntegrand,
    alternating_relation_check,
    alternating_report,
    cauchy_repeated_check,
    cauchy_report,
    decomposition_check,
    telescoping_identities_check,
    lemma3_check,
    lemma3_report,
    lemma4_integral,
    lemma5_bound,
    lemma5_integral,
    lemma5_report,
    linearity_check,
    partial_sum_H,
    repeated_integral_op,
)
from zetawz.quadrature import adaptive_quad
from zetawz.zeta_core import ZetaCoefficient, zeta_table


def test_kernel_continuity_values():
    assert KernelIntegrand(7)(0.0) == 15.0
    assert KernelIntegrand(7, 1.0)(0.0) == 0.0
    assert KernelIntegrand(3, 2.5)(0.0) == 0.0
    # the patched value matches the limit from the right
    assert abs(KernelIntegrand(7)(1e-9) - 15.0) < 1e-6
    with pytest.raises(ValueError):
        KernelIntegrand(-1)


def test_kernel_is_cosine_sum():
    for n in (0, 1, 6, 40):
        for t in (0.3, 1.7, 3.1):
            direct = 1 + 2 * math.fsum(math.cos(k * t) for k in range(1, n + 1))
            assert abs(KernelIntegrand(n)(t) - direct) < 1e-12 * (n + 1)


def test_lemma3_examples():
    assert lemma3_check(1, math.pi) < 1e-15
    assert lemma3_check(7, 1.3) <= 1e-12
    assert lemma3_check(50, 2 * math.pi) == 0.0
    assert lemma3_check(50, 4 * math.pi) == 0.0


def test_lemma3_sweep():
    r = lemma3_report(200, 64, DEFAULT_SEED)
    assert r.passed
    assert len(r.cases) == 200 * 64
    assert all(0 < c.inputs["x"] < 2 * math.pi for c in r.cases)


def test_lemma3_sweep_is_seeded():
    a = lemma3_report(5, 4, 123)
    b = lemma3_report(5, 4, 123)
    c = lemma3_report(5, 4, 124)
    assert a == b
    assert a != c


@pytest.mark.parametrize("n", [0, 5, 30])
def test_lemma4_examples(n):
    assert abs(lemma4_integral(n, 1e-9).value - math.pi) <= 1e-8


def test_lemma4_all():
    for n in range(31):
        assert abs(lemma4_integral(n, 1e-9).value - math.pi) <= 1e-8


def test_lemma5_examples():
    value, bound = lemma5_integral(1, 10)
    assert bound == pytest.approx(4 * math.pi / 21, rel=1e-15)
    assert abs(value) < bound
    value, bound = lemma5_integral(2, 0)
    # n = 0: the kernel is identically 1, so the integral is pi^3 / 3
    assert value == pytest.approx(math.pi**3 / 3, abs=1e-10)
    assert bound == pytest.approx(16 * (math.pi / 2) ** 2, rel=1e-15)
    assert abs(value) <= 2 * math.pi**2


def test_lemma5_decay():
    values = [abs(lemma5_integral(1, n)[0]) for n in (10, 20, 40)]
    assert values[0] > values[1] > values[2]
    scaled = [v * (2 * n + 1) for v, n in zip(values, (10, 20, 40))]
    assert max(scaled) / min(scaled) < 1.2


def test_lemma5_bound_grid():
    r = lemma5_report()
    assert r.passed and len(r.cases) == 24


def test_lemma5_rejects_small_s():
    with pytest.raises(ValueError):
        lemma5_integral(0.5, 3)


@pytest.mark.parametrize(
    "m, k, x, closed",
    [(0, 2, 1.0, 1 / 2), (1, 2, 1.0, 1 / 6), (3, 4, 2.0, 128 / 840)],
)
def test_cauchy_examples(m, k, x, closed):
    assert x ** (m + k) * math.factorial(m) / math.factorial(m + k) == pytest.approx(closed, rel=1e-15)
    assert cauchy_repeated_check(m, k, x) <= 1e-12


def nested_iterated(f, k, x):
    """k-fold iterated integral by literally nesting the quadrature."""
    if k == 0:
        return f(x)
    return adaptive_quad(lambda t: nested_iterated(f, k - 1, t), 0.0, x, 1e-11).value


@pytest.mark.parametrize("m, k", [(0, 1), (2, 2), (1, 3)])
def test_iterated_integral_oracle(m, k):
    x = 1.3
    closed = x ** (m + k) * math.factorial(m) / math.factorial(m + k)
    assert abs(nested_iterated(lambda t: t**m, k, x) - closed) < 1e-10


def test_cauchy_grid():
    r = cauchy_report()
    assert r.passed and len(r.cases) == 75


def test_partial_sum_examples():
    assert partial_sum_H(1, 2, 0.0).value == 1.0
    assert partial_sum_H(2, 2, math.pi).value == pytest.approx(-0.75, abs=1e-15)
    assert partial_sum_H(3, 2, 0.0).value == pytest.approx(49 / 36, abs=1e-15)


def test_repeated_integral_examples():
    assert repeated_integral_op(lambda t: 1.0, 2, math.pi) == pytest.approx(math.pi**2 / 2, abs=1e-12)
    assert repeated_integral_op(lambda t: 1.0, 1, 1.0) == pytest.approx(1.0, abs=1e-14)
    assert repeated_integral_op(math.exp, 0, 0.3) == math.exp(0.3)
    with pytest.raises(ValueError):
        repeated_integral_op(math.exp, -1, 0.3)


def test_repeated_integral_matches_closed_form():
    for m in range(5):
        for j in range(1, 6):
            for x in (0.5, 1.0, 2.0):
                closed = x ** (m + j) * math.factorial(m) / math.factorial(m + j)
                assert abs(repeated_integral_op(lambda t: t**m, j, x) - closed) <= 1e-9


def test_linearity_examples():
    r = linearity_check(2, 1.0)
    assert r.passed and r.max_residual <= 1e-9
    assert linearity_check(1, math.pi).max_residual <= 1e-9
    zero = linearity_check(3, 0.0)
    assert zero.max_residual == 0.0


def test_telescoping_examples():
    r = telescoping_identities_check(4, 0.0)
    assert r.max_residual == 0.0
    assert telescoping_identities_check(4, math.pi, 1e-8).passed
    assert telescoping_identities_check(20, 1.0, 1e-8).passed


def closed_I2l_f(l, n, x):
    """I_2l applied to f = sum_{k<=n} cos(kt), integrated term by term."""
    total = []
    for k in range(1, n + 1):
        taylor = math.fsum((-1) ** j * (k * x) ** (2 * j) / math.factorial(2 * j) for j in range(l))
        total.append((-1) ** l * (math.cos(k * x) - taylor) / k ** (2 * l))
    return math.fsum(total)


@pytest.mark.parametrize("l, n, x", [(1, 5, 1.0), (2, 10, 2.0), (3, 20, math.pi)])
def test_I2l_against_term_by_term(l, n, x):
    kernel = KernelIntegrand(n)
    f = lambda t: -0.5 + 0.5 * kernel(t)  # noqa: E731
    assert abs(repeated_integral_op(f, 2 * l, x, 1e-12) - closed_I2l_f(l, n, x)) < 1e-10


def test_decomposition_examples():
    assert decomposition_check(1, 5, math.pi, 1e-7) <= 1e-7
    assert decomposition_check(2, 10, 2.0, 1e-6) <= 1e-6
    assert decomposition_check(1, 3, 0.0) == 0.0


def test_decomposition_l1_is_composed_telescoping():
    # for l = 1 the identity reads H(x) - H(0) = -I_2(f)(x), the two telescoped identities composed
    n, x = 5, math.pi
    lhs = partial_sum_H(n, 2, x).value - partial_sum_H(n, 2, 0.0).value
    direct = closed_I2l_f(1, n, x)
    assert abs(lhs + direct) < 1e-13


def test_decomposition_grid():
    for l in (1, 2, 3):
        for n in (5, 10, 20):
            for x in (1.0, 2.0, math.pi):
                assert decomposition_check(l, n, x, 1e-6) <= 1e-6


def test_alternating_examples():
    z = zeta_table(2)
    assert alternating_relation_check(1, 10**4, z[0]) <= 1e-3
    assert alternating_relation_check(2, 10**3, z[1]) <= 1e-8
    assert (-2 + 2 ** (1 - 2)) * float(z[0].q) * math.pi**2 == pytest.approx(-(math.pi**2) / 4, rel=1e-15)
    assert alternating_report(z).passed


def test_alternating_rejects_mismatch():
    with pytest.raises(ValueError):
        alternating_relation_check(2, 100, ZetaCoefficient(1, 1))
    with pytest.raises(ValueError):
        alternating_relation_check(1, 1, ZetaCoefficient(1, 1))


def test_alternating_wrong_value_detected():
    wrong = ZetaCoefficient(1, 1 / 7)
    assert alternating_relation_check(1, 10**4, wrong) > 0.1


def test_lemma5_bound_formula():
    assert lemma5_bound(1, 0) == pytest.approx(4 * math.pi)
    rng = random.Random(1)
    for _ in range(20):
        s, n = rng.uniform(1, 4), rng.randrange(0, 300)
        assert lemma5_bound(s, n) == pytest.approx(2 ** (s + 1) * (math.pi / 2) ** s * 2 / (2 * n + 1))
