#!/usr/bin/env python3
"""Derives the Riemann-Siegel remainder coefficients numerically.

The remainder after the main sum is modeled as

    R(t) = (-1)^(N-1) * (t/2pi)^(-1/4) * sum_k C_k(p) (t/2pi)^(-k/2)

with C_k a linear combination of derivatives of
Psi(p) = cos(2pi(p^2 - p - 1/16)) / cos(2pi p), derivative orders 3k-4j.
The lambda coefficients are recovered by weighted least squares against
mpmath's siegelz at 60 digits, then matched to rational multiples of
negative powers of pi.  Run once; the snapped constants are frozen in
include/critline/riemann_siegel.hpp.
"""

from fractions import Fraction

import mpmath as mp

mp.mp.dps = 60

ORDERS = [[0], [3], [6, 2], [9, 5, 1], [12, 8, 4, 0],
          [15, 11, 7, 3], [18, 14, 10, 6, 2],
          [21, 17, 13, 9, 5, 1],
          [24, 20, 16, 12, 8, 4, 0]]  # C5..C8 are nuisance terms
N_FIT = 5  # report C0..C4


def psi(p):
    return mp.cos(2 * mp.pi * (p * p - p - mp.mpf(1) / 16)) / mp.cos(2 * mp.pi * p)


def main_sum(t):
    a = mp.sqrt(t / (2 * mp.pi))
    N = int(mp.floor(a))
    th = mp.siegeltheta(t)
    return 2 * mp.fsum([mp.cos(th - t * mp.log(n)) / mp.sqrt(n)
                        for n in range(1, N + 1)]), N, a - N


rows, rhs, wts = [], [], []
a_val = mp.mpf("2.53")
while a_val < 14:
    t = 2 * mp.pi * a_val ** 2
    ms, N, p = main_sum(t)
    if min(abs(p - mp.mpf(1) / 4), abs(p - mp.mpf(3) / 4)) > mp.mpf("0.03"):
        derivs = mp.taylor(psi, p, 25)
        derivs = [derivs[k] * mp.factorial(k) for k in range(25)]
        x = 1 / (N + p)  # x = (t/2pi)^(-1/2)
        row = []
        for k, orders in enumerate(ORDERS):
            for d in orders:
                row.append(derivs[d] * x ** k)
        R = (mp.siegelz(t) - ms) * (-1) ** (N - 1) * mp.power(N + p, mp.mpf("0.5"))
        w = (N + p) ** 4  # weight so that C4-scale info is not drowned
        rows.append([w * v for v in row])
        rhs.append(w * R)
    a_val += mp.mpf("0.037")

nvar = len(rows[0])
print(f"{len(rows)} samples, {nvar} unknowns")
AtA = mp.zeros(nvar, nvar)
Atb = mp.zeros(nvar, 1)
for row, b in zip(rows, rhs):
    for i in range(nvar):
        for j in range(nvar):
            AtA[i, j] += row[i] * row[j]
        Atb[i] += row[i] * b
sol = mp.lu_solve(AtA, Atb)


def snap(value):
    """Match value against a/(b*pi^(2m)) for small rationals a/b."""
    best = None
    for m in range(0, 5):
        scaled = value * mp.pi ** (2 * m)
        fr = Fraction(float(scaled)).limit_denominator(10 ** 8)
        if fr.numerator == 0 or abs(fr.numerator) > 10 ** 4:
            continue
        err = abs(scaled - mp.mpf(fr.numerator) / fr.denominator) / abs(scaled)
        if err < mp.mpf("1e-7") and (best is None or err < best[1]):
            best = (f"{fr.numerator}/{fr.denominator} / pi^{2*m}", err)
    return best if best else (None, None)


idx = 0
for k, orders in enumerate(ORDERS):
    for d in orders:
        val = sol[idx]
        tag = ""
        if k < N_FIT:
            match, err = snap(val)
            tag = f"   -> {match} (resid {mp.nstr(err, 3)})" if match else "   -> NO MATCH"
        print(f"C{k} lambda on Psi^({d}): {mp.nstr(val, 20)}{tag}")
        idx += 1
