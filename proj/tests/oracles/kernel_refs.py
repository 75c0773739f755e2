"""Reference values for the characteristic function, its zero, the spectral
kernel and the symmetrized derivative, computed with routines that share no
code with the C++ library.

  - zener ratio at s=i: polar form at 50 digits
  - zero of Psi at alpha=.25, tau=.1, theta=1: bisection on winding numbers
    counted by dense boundary sampling (1e4 nodes per rectangle)
  - S(rho,t): trapezoid Bromwich inversion with scipy, independent of the
    residue/branch-cut assembly
  - symmetrized derivative of exp(-x^2) at beta=.5: direct quadrature of the
    singular integral with mpmath
"""
import numpy as np
import mpmath as mp
from scipy import integrate

A, TAU = 0.25, 0.1


def zener(s, a=A, tau=TAU):
    z = s**a
    return (1 + z) / (1 + tau * z)


def psi(s, th, a=A, tau=TAU):
    return s * s + th * zener(s, a, tau)


def winding(x0, x1, y0, y1, th, n=10000):
    m = n // 4
    xs = np.linspace(x0, x1, m, endpoint=False)
    ys = np.linspace(y0, y1, m, endpoint=False)
    path = np.concatenate([xs + 1j * y0, x1 + 1j * ys, xs[::-1] + (x1 - x0) / m + 1j * y1,
                           x0 + 1j * (ys[::-1] + (y1 - y0) / m)])
    v = psi(path.astype(complex), th)
    d = np.angle(np.roll(v, -1) / v)
    return int(round(d.sum() / (2 * np.pi)))


def bisect_zero(th, depth=50):
    box = [-2.0, -1e-3, 1e-3, 2.0]
    assert winding(*box, th) == 1
    for k in range(depth):
        x0, x1, y0, y1 = box
        if x1 - x0 >= y1 - y0:
            xm = 0.5 * (x0 + x1)
            box = [x0, xm, y0, y1] if winding(x0, xm, y0, y1, th) == 1 else [xm, x1, y0, y1]
        else:
            ym = 0.5 * (y0 + y1)
            box = [x0, x1, y0, ym] if winding(x0, x1, y0, ym, th) == 1 else [x0, x1, ym, y1]
    return complex(0.5 * (box[0] + box[1]), 0.5 * (box[2] + box[3]))


def bromwich(rho, t, beta=0.45, s0=1.0, h=0.05, pmax=1e4):
    th = rho ** (1 + beta) * np.sin(beta * np.pi / 2)
    p = np.arange(-pmax, pmax + h / 2, h)
    s = s0 + 1j * p
    F = zener(s)
    Q = F * th / (s**3 + s * F * th)
    return 1 - (np.exp(s0 * t) / (2 * np.pi) * np.trapz(Q * np.exp(1j * p * t), p)).real


def symmetrized_gauss(x, beta=0.5):
    mp.mp.dps = 30
    du = lambda y: -2 * y * mp.exp(-y * y)
    f = lambda y: du(y) * abs(x - y) ** (-beta)
    val = mp.quad(f, [-mp.inf, x - 1, x, x + 1, mp.inf])
    return val / (2 * mp.gamma(1 - beta))


def main():
    mp.mp.dps = 50
    a, tau = mp.mpf(1) / 4, mp.mpf(1) / 10
    ia = mp.cos(a * mp.pi / 2) + 1j * mp.sin(a * mp.pi / 2)
    r = (1 + ia) / (1 + tau * ia)
    print("zener(i)", mp.nstr(r.real, 20), mp.nstr(r.imag, 20))

    sz = bisect_zero(1.0)
    print("zero(theta=1) %.15f %.15f" % (sz.real, sz.imag))

    for rho in (0.5, 1.0, 2.0):
        for t in (0.5, 1.0, 2.0):
            print("S(%g,%g) bromwich %.12f" % (rho, t, bromwich(rho, t)))

    for x in (0.0, 0.5, 1.0, 2.0):
        print("E^0.5 gauss(%g) %s" % (x, mp.nstr(symmetrized_gauss(x), 18)))


if __name__ == "__main__":
    main()
