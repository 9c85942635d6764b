"""Elementary power-series kernels and generic summation utilities.

Contains the cotangent/tangent Bernoulli series, a stopping-rule driven
summer for rapidly decaying tails, polynomial Richardson extrapolation,
and a series transform for slowly convergent oscillatory sums
sum_n g(n) z^n with |z| <= 1, z != 1.
"""

from __future__ import annotations

from typing import Callable, Sequence

from mpmath import mp, mpf

from .bernoulli import bernoulli_number
from .config import DEFAULT_CONFIG, EvalConfig, tolerance, workprec, xreal
from .errors import ArityError, ConvergenceError, DomainError


def cot_via_series(x, cfg: EvalConfig | None = None) -> mpf:
    """cot x from its Bernoulli power series, 0 < |x| < 0.9*pi.

    cot x = 1/x + sum_{n>=1} (-1)^n 2^{2n} B_{2n} x^{2n-1} / (2n)!
    """
    cfg = cfg or DEFAULT_CONFIG
    with workprec(cfg):
        x = xreal(x)
        if x == 0 or abs(x) >= mpf("0.9") * mp.pi:
            raise DomainError("cot series requires 0 < |x| < 0.9*pi")
        stop = tolerance(cfg) / 100
        acc = 1 / x
        x2 = x * x
        pw = x  # x^{2n-1}
        fact = mpf(1)  # (2n)!
        four = mpf(1)  # 2^{2n}
        small = 0
        n = 0
        while small < 3:
            n += 1
            fact *= (2 * n - 1) * (2 * n)
            four *= 4
            term = (-1) ** n * four * xreal(bernoulli_number(2 * n)) / fact * pw
            acc += term
            pw *= x2
            small = small + 1 if abs(term) < stop else 0
        return +acc


def tan_via_series(x, cfg: EvalConfig | None = None) -> mpf:
    """tan x from tan x = cot x - 2 cot 2x expanded termwise, |x| < 0.45*pi.

    tan x = sum_{m>=1} (-1)^{m+1} (2^{2m}-1) 2^{2m} B_{2m} x^{2m-1} / (2m)!
    """
    cfg = cfg or DEFAULT_CONFIG
    with workprec(cfg):
        x = xreal(x)
        if abs(x) >= mpf("0.45") * mp.pi:
            raise DomainError("tan series requires |x| < 0.45*pi")
        if x == 0:
            return mpf(0)
        stop = tolerance(cfg) / 100
        acc = mpf(0)
        x2 = x * x
        pw = x
        fact = mpf(1)
        four = mpf(1)
        small = 0
        m = 0
        while small < 3:
            m += 1
            fact *= (2 * m - 1) * (2 * m)
            four *= 4
            term = ((-1) ** (m + 1) * (four - 1) * four
                    * xreal(bernoulli_number(2 * m)) / fact * pw)
            acc += term
            pw *= x2
            small = small + 1 if abs(term) < stop else 0
        return +acc


def sum_entire(term: Callable[[int], mpf], cfg: EvalConfig | None = None):
    """Sum term(0) + term(1) + ... for rapidly decaying tails.

    Stops once three consecutive terms fall below abs_tol/100 in magnitude
    (parity-masked zero terms from sin/cos must not halt summation early).
    Returns (compensated sum, terms_used).
    """
    cfg = cfg or DEFAULT_CONFIG
    with workprec(cfg):
        stop = tolerance(cfg) / 100
        acc = mpf(0)
        comp = mpf(0)  # Kahan compensation
        small = 0
        n = 0
        while small < 3:
            if n >= cfg.max_terms:
                raise ConvergenceError(
                    f"series did not decay within {cfg.max_terms} terms")
            t = term(n)
            y = t - comp
            s = acc + y
            comp = (s - acc) - y
            acc = s
            small = small + 1 if abs(t) < stop else 0
            n += 1
        return +acc, n


def richardson_extrapolate(samples: Sequence[tuple], order: int):
    """Polynomial (Neville) extrapolation of (h, value) samples to h = 0.

    Needs at least order+1 samples with h strictly decreasing toward 0.
    Returns (value, error_estimate); the estimate is the difference between
    the last entries of the final two extrapolation columns.
    """
    n = len(samples)
    if n < order + 1:
        raise ArityError(
            f"richardson order {order} needs {order + 1} samples, got {n}")
    hs = [xreal(h) for h, _ in samples]
    if hs[-1] <= 0:
        raise DomainError("h values must stay positive")
    for a, b in zip(hs, hs[1:]):
        if not b < a:
            raise DomainError("h values must be strictly decreasing")
    col = [xreal(v) for _, v in samples]
    depth = min(order, n - 1)
    prev_last = col[-1]
    for j in range(1, depth + 1):
        prev_last = col[-1]
        col = [(hs[i + j] * col[i] - hs[i] * col[i + 1]) / (hs[i + j] - hs[i])
               for i in range(n - j)]
    value = col[-1]
    return +value, abs(value - prev_last)


def sum_oscillatory(g: Callable[[int], mpf], z, tol, start: int = 1,
                    max_terms: int = 10**6):
    """sum_{n>=start} g(n) z^n for |z| <= 1, z != 1, g smooth and slowly varying.

    Direct head summation up to a split point N, then the forward-difference
    (Euler) transform of the tail,

        sum_{n>=N} g(n) z^n = z^N/(1-z) * sum_k (z/(1-z))^k D^k g(N),

    which converges geometrically once N is large relative to |z/(1-z)|.
    The split point is advanced adaptively when the transform stalls.
    Returns (value, terms_used); the value is complex when z is.
    """
    one_minus = 1 - z
    if one_minus == 0:
        raise DomainError("z = 1 is outside the transform's domain")
    u = z / one_minus
    max_diffs = 200
    # Digits lost to difference-table cancellation grow like k*log10(2).
    extra_dps = int(max_diffs * 0.35) + 10

    head = z * 0
    zpow = z ** start  # z^n for the next head term
    n = start
    terms_used = 0
    headlen = max(48, int(8 * abs(u)))

    while True:
        split = n + headlen
        if terms_used + headlen + max_diffs > max_terms:
            raise ConvergenceError("oscillatory sum exceeded max_terms")
        while n < split:
            head += g(n) * zpow
            zpow *= z
            n += 1
            terms_used += 1
        with mp.extradps(extra_dps):
            pref = zpow / one_minus  # z^split / (1-z)
            acc = z * 0
            upow = pref
            row: list = []  # row[i] = D^i g at sliding offsets; row[-1] = D^j g(split)
            small = 0
            best = mpf("inf")
            for j in range(max_diffs + 1):
                v = g(split + j)
                terms_used += 1
                new = [v]
                for i in range(len(row)):
                    new.append(new[i] - row[i])
                row = new
                term = row[-1] * upow
                acc += term
                upow *= u
                mag = abs(term)
                small = small + 1 if mag < tol else 0
                if small >= 3:
                    return +(head + acc), terms_used
                if mag < best:
                    best = mag
                elif j > 24 and mag > best * 10**6:
                    break
        # Transform stalled (or ran out of difference orders): grow the head.
        headlen *= 2
