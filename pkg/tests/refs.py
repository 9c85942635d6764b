"""Shared test helpers: independent oracles and frozen reference constants.

Everything here stays independent of the library code paths it is used to
check: the Bernoulli oracle is a different algorithm (Akiyama-Tanigawa),
quadrature is a self-contained Romberg tableau, and the constants are
well-known published decimal expansions.
"""

from __future__ import annotations

import random
from fractions import Fraction

from mpmath import mp, mpf

# Published decimal expansions (90 digits).  Kept as strings: mpf parsing
# happens at the caller's working precision, never at import time.
CATALAN_STR = ("0.91596559417721901505460351493238411077414937428167"
               "2134266498119621763019776254769479356513")
EULER_GAMMA_STR = ("0.57721566490153286060651209008240243104215933593992"
                   "3598805767234884867726777664670936947063")
GAMMA1_STR = ("-0.0728158454836767248605863758749013191377363383343"
              "379525990065597414014335715114848780869282")
ZETA3_STR = ("1.20205690315959428539973816151144999076498629234049"
             "888179227155534183820578631309018645587")


def catalan() -> mpf:
    return mpf(CATALAN_STR)


def euler_gamma_ref() -> mpf:
    return mpf(EULER_GAMMA_STR)


def gamma1_ref() -> mpf:
    return mpf(GAMMA1_STR)


def zeta3_ref() -> mpf:
    return mpf(ZETA3_STR)


def akiyama_tanigawa(n: int) -> list[Fraction]:
    """B_0..B_n via the Akiyama-Tanigawa triangle; independent oracle.

    The triangle produces the B1 = +1/2 convention; the sign is flipped to
    match the library's B1 = -1/2.
    """
    A = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        A[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            A[j - 1] = j * (A[j - 1] - A[j])
        out.append(A[0])
    if n >= 1:
        out[1] = -out[1]
    return out


def romberg(f, a, b, levels: int = 11) -> mpf:
    """Self-contained Romberg quadrature (trapezoid + h^2 Neville tableau)."""
    a, b = mpf(a), mpf(b)
    h = b - a
    rows = [[h * (f(a) + f(b)) / 2]]
    n = 1
    for i in range(1, levels + 1):
        h /= 2
        n *= 2
        s = mpf(0)
        for k in range(1, n, 2):
            s += f(a + k * h)
        row = [rows[-1][0] / 2 + h * s]
        f4 = mpf(1)
        for j in range(1, i + 1):
            f4 *= 4
            row.append(row[j - 1] + (row[j - 1] - rows[-1][j - 1]) / (f4 - 1))
        rows.append(row)
    return rows[-1][-1]


def central_diff(f, x, h):
    """First derivative by the centered two-point stencil."""
    return (f(x + h) - f(x - h)) / (2 * h)


def seeded_uniforms(seed: int, n: int, lo: float, hi: float) -> list[mpf]:
    rng = random.Random(seed)
    return [mpf(lo) + (mpf(hi) - mpf(lo)) * mpf(rng.random()) for _ in range(n)]
