#!/usr/bin/env python3
"""Generate frozen reference values for the C++ unit tests.

Every value printed here is computed independently of the C++ code, at
50-digit precision with mpmath, from the defining formulas.  The numbers
are pasted into the test sources; rerun this script if a tolerance or a
parameter point changes.
"""

import mpmath as mp

mp.mp.dps = 50

I = mp.mpc(0, 1)


def g1(eps):
    return mp.sqrt(eps / mp.pi)


def beta0(dk, delta, eps, l):
    return g1(eps) * mp.e**(I * dk * l) / (dk - delta + I * eps)


def g2_norm(d1, d2, eps, l1, l2):
    bracket = 1 + 4 * eps**2 * mp.e**(-2 * eps * (l1 - l2)) / ((d1 - d2)**2 + 4 * eps**2)
    return (eps / mp.pi) / mp.sqrt(bracket)


def d0(dp, dq, d1, d2, eps, l1, l2):
    G2 = g2_norm(d1, d2, eps, l1, l2)
    t1 = mp.e**(I * dp * l1) / (dp - d1 + I * eps) * mp.e**(I * dq * l2) / (dq - d2 + I * eps)
    t2 = mp.e**(I * dq * l1) / (dq - d1 + I * eps) * mp.e**(I * dp * l2) / (dp - d2 + I * eps)
    return G2 * (t1 + t2)


def T(z, gamma):
    return z / (z + I * gamma)


def R(z, gamma):
    return -I * gamma / (z + I * gamma)


def phi_rr(x, d1, d2, xi, gamma, eps):
    E = d1 + d2
    delta = (d1 - d2) / 2
    corr = mp.mpf(1) / 2 * R(d1 - I * eps, gamma) * R(d2 - I * eps, gamma) \
        * (E - 2 * xi - 2 * I * eps) / (E - xi - 2 * I * eps + I * gamma) \
        * mp.e**(I * (E / 2 - I * eps + I * gamma) * abs(x))
    return T(d1 - I * eps, gamma) * T(d2 - I * eps, gamma) * mp.cos(delta * x) - corr


def cfmt(z):
    return f"{{{mp.nstr(mp.re(z), 20)}, {mp.nstr(mp.im(z), 20)}}}"


print("== beta0 at delta_c=0, eps=0.01, l=5, Delta=0.02 ==")
v = beta0(mp.mpf("0.02"), 0, mp.mpf("0.01"), 5)
print("  ", cfmt(v))

print("== d0 at (dp,dq)=(0.1,-0.2), d1=d2=0, eps=0.01, l1=l2=0 ==")
v = d0(mp.mpf("0.1"), mp.mpf("-0.2"), 0, 0, mp.mpf("0.01"), 0, 0)
print("  ", cfmt(v))

print("== |T(d-ie)|^2+|R(d-ie)|^2 at d=2, eps=0.01, gamma=1 ==")
z = mp.mpf(2) - I * mp.mpf("0.01")
print("  ", mp.nstr(abs(T(z, 1))**2 + abs(R(z, 1))**2, 20))

print("== single-photon output ratio |R/T|^2 at delta=2, eps=0.01, gamma=1 ==")
print("  ", mp.nstr(abs(R(z, 1) / T(z, 1))**2, 20))

print("== phi_rr(0) at E=0, delta=0, xi=1e6, eps=0.01, gamma=1 ==")
v = phi_rr(0, 0, 0, mp.mpf(1e6), 1, mp.mpf("0.01"))
print("  |phi|^2 =", mp.nstr(abs(v)**2, 20))
print("  analytic limit ((g+e)/(g-e))^2 =", mp.nstr(((1 + mp.mpf("0.01")) / (1 - mp.mpf("0.01")))**2, 20))

print("== phi_rr max |phi|^2 at xi=0, E=0, delta=0, eps=0.01 (value at x=0) ==")
v = phi_rr(0, 0, 0, 0, 1, mp.mpf("0.01"))
print("  ", mp.nstr(abs(v)**2, 20))

print("== phi_ll(0)|^2 at E=0, xi=20, eps=0.01 ==")


def phi_ll(x, d1, d2, xi, gamma, eps):
    E = d1 + d2
    delta = (d1 - d2) / 2
    br = mp.cos(delta * x) - mp.mpf(1) / 2 * (E - 2 * I * eps - 2 * xi) / (E - 2 * I * eps - xi + I * gamma) \
        * mp.e**(I * (E / 2 - I * eps + I * gamma) * abs(x))
    return R(d1 - I * eps, gamma) * R(d2 - I * eps, gamma) * br


v = phi_ll(0, 0, 0, 20, 1, mp.mpf("0.01"))
print("  ", mp.nstr(abs(v)**2, 20))

print("== phi_ll(0)|^2 at E=4 (d1=d2=2), xi=4, eps=0.01 ==")
v = phi_ll(0, 2, 2, 4, 1, mp.mpf("0.01"))
print("  ", mp.nstr(abs(v)**2, 20))

print("== tail integral of phi_rr: E=0, delta=0, xi=1, eps=0.01, lower=0 ==")
f = lambda x: abs(phi_rr(x, 0, 0, 1, 1, mp.mpf("0.01")))**2 * mp.e**(-2 * mp.mpf("0.01") * x)
# split: quadrature over [0, 40] plus analytic constant tail
head = mp.quad(f, [0, 5, 10, 20, 40])
a = abs(T(-I * mp.mpf("0.01"), 1))**4  # |T1 T2|^2, cos=1
tail = a * mp.e**(-2 * mp.mpf("0.01") * 40) / (2 * mp.mpf("0.01"))
print("  ", mp.nstr(head + tail, 20))

print("== laplace of exp(-a t): a=0.7, s=0.5+0.3i ==")
print("  ", cfmt(1 / (mp.mpf("0.5") + I * mp.mpf("0.3") + mp.mpf("0.7"))))

print("== single-photon norm partition at complex arg: deviation 2*g*e/(d^2+(g-e)^2), d=0, e=0.05 ==")
print("  ", mp.nstr(2 * mp.mpf("0.05") / (1 - mp.mpf("0.05"))**2, 20))
