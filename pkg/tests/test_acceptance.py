"""Acceptance criteria: one test per criterion, each printing PASS/FAIL.

Run with  pytest tests/test_acceptance.py -v -s  to see the per-criterion
lines. Every tolerance is pinned here; nothing is calibrated at runtime.
"""

from mpmath import mp, mpf

from regsum import (DEFAULT_CONFIG, SeriesSpec, abel_oracle, digamma,
                    direct_oracle, euler_gamma, gamma_fn,
                    hurwitz_zeta_deriv, integer_sin_series,
                    laurent_coefficients, closed_form_series,
                    regularized_limit, verify_identity,
                    workprec, zeta_sderiv_at_negatives)
from regsum.identities import _log_cos_s1_closed, _log_sin_s1_closed

from refs import catalan, seeded_uniforms

CFG = DEFAULT_CONFIG
GRID = [mpf(i) / 10 for i in range(1, 10)]


def _report(num: int, desc: str, ok: bool):
    print(f"criterion {num:2d} {'PASS' if ok else 'FAIL'}: {desc}")
    assert ok, f"criterion {num}: {desc}"


def _cot(x):
    return mp.cospi(x) / mp.sinpi(x)


def test_criterion_01_cot_limit():
    with workprec(CFG):
        ok = True
        for x in GRID:
            closed = regularized_limit(SeriesSpec("sin", x, 0), CFG).value
            ok &= abs(closed - _cot(x) / 2) <= mpf("1e-10")
            abel = abel_oracle(SeriesSpec("sin", x, 0), CFG).value
            ok &= abs(abel - _cot(x) / 2) <= mpf("1e-6")
    _report(1, "regularized sine limit equals cot(pi x)/2 "
               "(series route 1e-10, Abel oracle 1e-6)", bool(ok))


def test_criterion_02_constant_limits():
    with workprec(CFG):
        ok = True
        for x in GRID:
            r = verify_identity("cos_limit", x, CFG)
            ok &= r.passed and r.abs_residual <= mpf("1e-10")
            r = verify_identity("alt_cos_limit", x, CFG)
            ok &= r.passed and r.abs_residual <= mpf("1e-10")
            a = abel_oracle(SeriesSpec("cos", x, 0), CFG).value
            ok &= abs(a + mpf(1) / 2) <= mpf("1e-6")
            if x != mpf("0.5"):
                # at x = 1/2 the alternating-cosine terms are all -1 and the
                # Abel sums diverge; only the exponent regularization exists
                a = abel_oracle(SeriesSpec("cos", x, 0, alternating=True),
                                CFG).value
                ok &= abs(a - mpf(1) / 2) <= mpf("1e-6")
    _report(2, "cosine limits are -1/2 and +1/2 at every grid x "
               "(closed 1e-10, Abel 1e-6 off the Abel-divergent x=1/2)",
            bool(ok))


def test_criterion_03_entry17v():
    with workprec(CFG):
        ok = True
        for x in GRID:
            r = verify_identity("entry17v", x, CFG)
            ok &= r.passed and r.abs_residual <= mpf("1e-8")
    _report(3, "gamma1(1-x) - gamma1(x) matches the cot + zeta'(-odd) "
               "closed form to 1e-8 (limit-formula oracle vs series)",
            bool(ok))


def test_criterion_04_half_point_value():
    with workprec(CFG):
        r = verify_identity("half_point_value", None, CFG)
        ok = r.passed and r.abs_residual <= mpf("1e-10")
        for j in (1, 3, 5, 7, 9):
            a = zeta_sderiv_at_negatives(j, CFG)
            b = hurwitz_zeta_deriv(1, -j, 1, CFG)
            ok &= abs(a - b) <= mpf("1e-10")
    _report(4, "half-point zeta'(-odd) series equals (gamma+log pi)/pi "
               "to 1e-10; substitution and Hurwitz routes agree to 1e-10",
            bool(ok))


def test_criterion_05_deninger_and_kummer():
    with workprec(CFG):
        ok = True
        c = euler_gamma(CFG) + mp.log(2 * mp.pi)
        for t in GRID:
            rd = verify_identity("deninger_log_cos", t, CFG)
            rk = verify_identity("kummer_log_sin", t, CFG)
            ok &= rd.passed and rd.abs_residual <= mpf("1e-8")
            ok &= rk.passed and rk.abs_residual <= mpf("1e-8")
            a_cos = abel_oracle(SeriesSpec("cos", t, 1, weight="log"),
                                CFG).value
            a_sin = abel_oracle(SeriesSpec("sin", t, 1, weight="log"),
                                CFG).value
            ok &= abs(a_cos - _log_cos_s1_closed(t, CFG)) <= mpf("1e-5")
            ok &= abs(a_sin - _log_sin_s1_closed(t, CFG)) <= mpf("1e-5")
        half = mpf("0.5")
        ref = euler_gamma(CFG) * mp.log(2) - mp.log(2) ** 2 / 2
        ok &= abs(_log_cos_s1_closed(half, CFG) - ref) <= mpf("1e-10")
    _report(5, "log-weighted cosine/sine series match their closed forms "
               "(closed routes 1e-8, Abel oracle 1e-5, half-point exact "
               "reduction)", bool(ok))


def test_criterion_06_bernoulli_identity_exact():
    with workprec(CFG):
        r = verify_identity("bernoulli_odd", None, CFG)
        ok = r.passed and r.abs_residual == 0
    _report(6, "odd-index Bernoulli expansion and its derivative version "
               "exact (rational) for all m <= 20", bool(ok))


def test_criterion_07_integer_exponent_series():
    with workprec(CFG):
        x = mpf("0.25")
        saw = integer_sin_series(x, 1, CFG).value
        ok = abs(saw - mp.pi / 4) <= mpf("1e-10")
        # Leibniz partial sums (averaged pairs) as an independent check
        s, parts = mpf(0), []
        for k in range(0, 4001):
            s += mpf((-1) ** k) / (2 * k + 1)
            parts.append(s)
        leib = (parts[-1] + parts[-2]) / 2
        ok &= abs(saw - leib) <= mpf("1e-7")
        cubic = integer_sin_series(x, 3, CFG).value
        ok &= abs(cubic - mp.pi ** 3 / 32) <= mpf("1e-10")
        dr = direct_oracle(SeriesSpec("sin", x, 3), 10 ** 5, CFG).value
        ok &= abs(cubic - dr) <= mpf("1e-8")
        even = integer_sin_series(x, 2, CFG).value
        ok &= abs(even - catalan()) <= mpf("1e-8")
        dr = direct_oracle(SeriesSpec("sin", x, 2), 10 ** 5, CFG).value
        ok &= abs(even - dr) <= mpf("1e-8")
    _report(7, "sawtooth pi/4, cubic pi^3/32, and the even-exponent "
               "closed form at Catalan's constant (1e-8 vs direct sums)",
            bool(ok))


def test_criterion_08_reflection_formulas():
    with workprec(CFG):
        ok = True
        for x in (mpf("0.25"), mpf(1) / 3):
            r = verify_identity("adamchik_reflection", x, CFG)
            ok &= r.passed and r.abs_residual <= mpf("1e-8")
            for mt in (1, 2):
                S = integer_sin_series(x, 2 * mt, CFG).value
                lhs = ((-1) ** mt * mp.factorial(2 * mt - 1)
                       / (2 * mp.pi) ** (2 * mt - 1) * S)
                rhs = (x ** (2 * mt - 1) * mp.log(x)
                       + hurwitz_zeta_deriv(1, 1 - 2 * mt, 1 - x, CFG)
                       - hurwitz_zeta_deriv(1, 1 - 2 * mt, 1 + x, CFG))
                ok &= abs(lhs - rhs) <= mpf("1e-8")
    _report(8, "polylogarithm and Hurwitz-derivative reflection forms "
               "agree (m in 1..3, x in {1/4, 1/3}, real and imaginary "
               "parts, 1e-8)", bool(ok))


def test_criterion_09_cross_structure_invariants():
    with workprec(CFG):
        ok = True
        x = mpf("0.3")
        w = 2 * mp.pi * x
        for s in seeded_uniforms(77, 10, 0.05, 3.95):
            if min(abs(s - mp.floor(s)), abs(mp.ceil(s) - s)) < mpf("1e-3"):
                s += mpf("0.01")
            sin_a = mp.pi * w ** (s - 1) / (2 * gamma_fn(s, CFG)
                                            * mp.sin(mp.pi * s / 2))
            sin_b = (w ** (s - 1) * gamma_fn(1 + s / 2, CFG)
                     * gamma_fn(1 - s / 2, CFG) / gamma_fn(1 + s, CFG))
            ok &= abs(sin_a - sin_b) <= mpf("1e-20") * max(1, abs(sin_a))
            cos_a = mp.pi * w ** (s - 1) / (2 * gamma_fn(s, CFG)
                                            * mp.cos(mp.pi * s / 2))
            cos_b = (w ** (s - 1) * gamma_fn((1 + s) / 2, CFG)
                     * gamma_fn((1 - s) / 2, CFG) / (2 * gamma_fn(s, CFG)))
            ok &= abs(cos_a - cos_b) <= mpf("1e-20") * max(1, abs(cos_a))
        h = mpf("1e-12")
        for s in (mpf("2.5"), mpf("3.5")):
            up = closed_form_series(SeriesSpec("sin", x + h, s), CFG).value
            dn = closed_form_series(SeriesSpec("sin", x - h, s), CFG).value
            cos_v = closed_form_series(SeriesSpec("cos", x, s - 1), CFG).value
            ok &= abs((up - dn) / (2 * h) - 2 * mp.pi * cos_v) <= mpf("1e-6")
        for xx in GRID:
            lc = laurent_coefficients(xx, CFG)
            ok &= abs(lc.gamma0 + digamma(xx, CFG)) <= mpf("1e-10")
    _report(9, "prefactor equivalences at random s (abs_tol), d/dx link "
               "sin->cos (1e-6), gamma0 = -digamma on the grid (1e-10)",
            bool(ok))


def test_criterion_10_zeta_dd_fourier_flagged():
    with workprec(CFG):
        ok = True
        for t in (mpf("0.25"), mpf("0.5"), mpf("0.75")):
            r = verify_identity("zeta_dd_fourier", t, CFG)
            if r.passed:
                ok &= r.abs_residual <= mpf("1e-5")
            else:
                # never a silent failure: the suspect-constant flag must be up
                ok &= "SUSPECT CONSTANT" in r.method_notes
    _report(10, "zeta''(0,t) Fourier form within 1e-5 or flagged: the "
                "printed (1/4)zeta(2) constant is marked suspect, never "
                "silently adjusted", bool(ok))
