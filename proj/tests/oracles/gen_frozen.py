"""Reference values for the frozen-oracle tests, computed in 40-digit
arithmetic directly from the product and quotient definitions.

    python3 tests/oracles/gen_frozen.py > tests/oracles/frozen.txt
"""

import mpmath as mp

mp.mp.dps = 40


def theta(z, p):
    out = mp.mpc(1)
    j = 0
    while True:
        pj = p ** j
        out *= (1 - pj * z) * (1 - pj * p / z)
        if abs(pj) * max(abs(z), 1 / abs(z)) < mp.mpf("1e-45"):
            return out
        j += 1


def thetas(args, p):
    out = mp.mpc(1)
    for z in args:
        out *= theta(z, p)
    return out


def qp(a, n, q, p):
    out = mp.mpc(1)
    if n >= 0:
        for j in range(n):
            out *= theta(a * q ** j, p)
        return out
    for j in range(1, -n + 1):
        out /= theta(a * q ** (-j), p)
    return out


def small_w(a, b, q, p, s, t):
    num = thetas([a * q ** (s + 2 * t), b * q ** (2 * s + t - 2), a * q ** (t - s - 1) / b], p)
    den = thetas([a * q ** (s + 2 * t - 2), b * q ** (2 * s + t), a * q ** (t - s + 1) / b], p)
    return num / den * q


def ellbin(a, b, q, p, n, k):
    if k < 0 or k > n:
        return mp.mpc(0)
    m = n - k
    num = qp(q ** (1 + k), m, q, p) * qp(a * q ** (1 + k), m, q, p) * qp(b * q ** (1 + k), m, q, p) \
        * qp(a * q ** (1 - k) / b, m, q, p)
    den = qp(q, m, q, p) * qp(a * q, m, q, p) * qp(b * q ** (1 + 2 * k), m, q, p) * qp(a * q / b, m, q, p)
    return num / den


def show(label, v):
    v = mp.mpc(v)
    print(f"{label} {mp.nstr(v.real, 20)} {mp.nstr(v.imag, 20)}")


A = mp.mpc("0.5", "0.1")
B = mp.mpc("0.7", "-0.2")
Q = mp.mpc("0.9", "0.15")
P = mp.mpc("0.2", "0")

show("theta(0.7+0.2i;0.25)", theta(mp.mpc("0.7", "0.2"), mp.mpf("0.25")))
show("theta(1.5-0.5i;0.3+0.1i)", theta(mp.mpc("1.5", "-0.5"), mp.mpc("0.3", "0.1")))
show("theta(-2+1i;0.45i)", theta(mp.mpc("-2", "1"), mp.mpc("0", "0.45")))
show("qp(0.3+0.4i,3)", qp(mp.mpc("0.3", "0.4"), 3, Q, P))
show("qp(0.3+0.4i,-2)", qp(mp.mpc("0.3", "0.4"), -2, Q, P))
show("w(1,1)", small_w(A, B, Q, P, 1, 1))
show("w(-2,3)", small_w(A, B, Q, P, -2, 3))
show("W(2,3)", small_w(A, B, Q, P, 2, 1) * small_w(A, B, Q, P, 2, 2) * small_w(A, B, Q, P, 2, 3))
show("ellbin(4,2)", ellbin(A, B, Q, P, 4, 2))
show("ellbin(6,1)", ellbin(A, B, Q, P, 6, 1))
show("ellint(5,2)", ellbin(A * Q ** 2, B * Q ** 4, Q, P, 5, 4))
