"""Extended-precision reference values for the Mittag-Leffler routines.

Terms of E_{1/m,b}(z) are generated by the exact recurrence
t_{k+m} = t_k * z^m / (k/m + b), so no Gamma evaluations are needed past the
first m terms. Working precision is raised until the largest term fits.
"""
import sys
import mpmath as mp


def ml_recip(m, b, z, dps):
    mp.mp.dps = dps
    a = mp.mpf(1) / m
    b = mp.mpf(b)
    z = mp.mpf(z)
    terms = [z**k / mp.gamma(a * k + b) for k in range(m)]
    s = mp.fsum(terms)
    zm = z**m
    k = 0
    tiny = mp.mpf(10) ** (-80)
    quiet = 0
    while quiet < 4:
        terms = [terms[j] * zm / (a * (k + j) + b) for j in range(m)]
        s += mp.fsum(terms)
        k += m
        if max(abs(t) for t in terms) < tiny:
            quiet += 1
    return s


def dps_for(z, m):
    # log10 of max term ~ |z|^m / ln(10)
    return int(abs(float(z)) ** m / 2.302585 + 120)


def show(label, v):
    print(label, mp.nstr(v, 25, strip_zeros=False), flush=True)


def main():
    tau = mp.mpf("0.1")
    show("E_{1/2}(-1)", ml_recip(2, 1, -1, 60))
    mp.mp.dps = 60
    show("e*erfc(1)", mp.e * mp.erfc(1))

    z = -1 / tau
    show("e_alpha(1; .25, .1)", ml_recip(4, 1, z, dps_for(z, 4)))

    mp.mp.dps = 60
    z = -(mp.mpf(2) ** mp.mpf("0.25")) / tau
    v = ml_recip(4, mp.mpf("0.25"), z, dps_for(z, 4))
    mp.mp.dps = 60
    show("e_alpha_prime(2; .25, .1)", -(mp.mpf(2) ** mp.mpf("-0.75")) / tau * v)

    # L applied to f(t)=t reduces to t + (1/tau - 1) * t * E_{a,2}(-t^a/tau)
    for t in ["0.5", "1", "2"]:
        mp.mp.dps = 60
        tt = mp.mpf(t)
        z = -(tt ** mp.mpf("0.25")) / tau
        v = ml_recip(4, 2, z, dps_for(z, 4))
        mp.mp.dps = 60
        show(f"L[t]({t}; .25, .1)", tt + (1 / tau - 1) * tt * v)


if __name__ == "__main__":
    sys.exit(main())
