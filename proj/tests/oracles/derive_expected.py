#!/usr/bin/env python3
"""Brute-force oracles for the frozen expected values in the C++ tests.

Everything here uses Python's Fraction / mpmath directly and never calls the
C++ library. Run it to regenerate the constants quoted in tests/*.cpp.
"""
from fractions import Fraction as F
from math import comb
import itertools

from mpmath import mp, mpf, zeta, log, pi


def gamma(b, j):
    return sum(d ** j for d in range(1, b))


def moments(b, M):
    v = [F(b)]
    for m in range(1, M + 1):
        s = F(b ** (m + 1)) + sum(comb(m, j) * gamma(b, j) * v[m - j] for j in range(1, m + 1))
        v.append(s / (b ** (m + 1) - b + 1))
    return v


def deviation(b, m, v):
    c = F(1, b)
    return v[m] - F(b, m + 1) - 1 - c - c * c / 2 - F(m - 2, 4) * c ** 3


def truncation_order(b, P):
    # exact rational tail bound, linear search
    if b == 2:
        return 0
    target = F(1, 10 ** (P + 2))
    M = 0
    while sum(F(b, d * (d + 1) ** (M + 1)) for d in range(1, b - 1)) > target:
        M += 1
    return M


def deviation_sweep():
    best = (F(0), None)
    for b in range(2, 65):
        v = moments(b, 80)
        for m in range(4, 81):
            r = abs(deviation(b, m, v)) * b ** 4 / (m * m)
            if r > best[0]:
                best = (r, (b, m))
    return best


def enumerate_partial(b, L):
    total = F(0)
    counts = []
    for level in range(1, L + 1):
        cnt = 0
        for n in range(b ** (level - 1), b ** level):
            x, ok = n, True
            while x:
                if x % b == b - 1:
                    ok = False
                    break
                x //= b
            if ok:
                cnt += 1
                total += F(1, n)
        counts.append(cnt)
    return total, counts


def kempner(b, P):
    mp.dps = P + 30
    M = truncation_order(b, P) + 5
    v = moments(b, M)
    return sum(mpf(v[m].numerator) / v[m].denominator / mpf(d + 1) ** (m + 1)
               for d in range(1, b - 1) for m in range(0, M + 1))


if __name__ == "__main__":
    v10 = moments(10, 4)
    print("v_1(10) =", v10[1])
    print("v_4(10) =", v10[4])
    print("z_4(10) =", deviation(10, 4, v10))
    print("z_5(2)  =", deviation(2, 5, moments(2, 5)))
    print("M(10,9) =", truncation_order(10, 9), " M(10,10) =", truncation_order(10, 10))
    print("M(3,12) =", truncation_order(3, 12), " M(1000,12) =", truncation_order(1000, 12))
    r, where = deviation_sweep()
    mp.dps = 30
    print("deviation sweep sup =", mpf(r.numerator) / r.denominator, "at (b,m) =", where)
    for b in (3, 4, 5):
        print("kempner", b, kempner(b, 20))
    print("kempner 10", kempner(10, 30))
    for b, L in ((3, 3), (5, 4)):
        s, cnt = enumerate_partial(b, L)
        print("partial", b, L, s, cnt)
    mp.dps = 40
    print("zeta(3) =", zeta(3))
    print("pi^2/6 =", pi ** 2 / 6, " pi^4/90 =", pi ** 4 / 90)
    mp.dps = 30
    for b in (10, 20, 50, 100, 200, 500, 1000):
        z2, z3, z4 = zeta(2), zeta(3), zeta(4)
        A, B, C = z2 / 2, (3 * z2 + z3) / 3, (2 * z2 + 4 * z3 + z4) / 4
        exp3 = b * log(b) - A / b - B / b ** 2 - C / b ** 3
        if b <= 100:
            print("ratio", b, (exp3 - kempner(b, 24)) * b ** 4)
