"""High-precision reference values frozen into the C++ test suites.

Independent of the C++ code paths: everything here is computed with mpmath
quadrature or closed forms at 40 digits. Re-run to regenerate.
"""
from mpmath import mp, mpf, quad, exp, cosh, sqrt, pi, gamma, log, besselk, erfc, inf, nstr, diff, sinh, cos, sin

mp.dps = 40


def show(name, value):
    print(f"{name:40s} {nstr(value, 20)}")


# Special functions via integral representations.
for x in [mpf("0.1"), mpf("0.5"), 1, 2, 5, 10]:
    show(f"K0({x}) quadrature", quad(lambda t: exp(-x * cosh(t)), [0, 1, 3, 8]))
show("erfc(1) quadrature", 2 / sqrt(pi) * quad(lambda t: exp(-t * t), [1, 4, 30]))
g34 = quad(lambda t: t ** mpf(-0.25) * exp(-t), [0, 1, 10, 120])  # Gamma(3/4)
show("Gamma(3/4) quadrature", g34)
show("|Gamma(-1/4)| = 4 Gamma(3/4)", 4 * g34)
show("int_0^1 K0", quad(lambda t: besselk(0, t), [0, mpf("1e-8"), 1]))

# Curve constants from closed forms.
aP = gamma(mpf(-1) / 4) ** 4 / (32 * pi ** 3)
bP = 2 * gamma(mpf(3) / 4) ** 4 / pi ** 2
B = 2 * (sqrt(2) - log(1 + sqrt(2))) / (sqrt(pi) * (sqrt(2) - 1))
aU, bU, gU = B ** 2 / (2 * (sqrt(2) - 1)), B ** 2 / 4, B / sqrt(2)
for n, v in [("GPOE alpha", aP), ("GPOE beta", bP), ("GPUE B", B), ("GPUE alpha", aU), ("GPUE beta", bU), ("GPUE gamma", gU)]:
    show(n, v)

pdf = {
    "GOE": lambda x: pi / 2 * x * exp(-pi * x * x / 4),
    "GUE": lambda x: 32 / pi ** 2 * x * x * exp(-4 * x * x / pi),
    "GSE": lambda x: mpf(2) ** 18 / (3 ** 6 * pi ** 3) * x ** 4 * exp(-64 / (9 * pi) * x * x),
    "GPOE": lambda x: aP * x * besselk(0, bP * x * x) if x > 0 else mpf(0),
    "GPUE": lambda x: aU * x * exp(bU * x * x) * erfc(gU * x),
}
show("GUE pdf(1)", pdf["GUE"](1))
show("GPUE pdf(1)", pdf["GPUE"](1))
show("GPOE pdf(1)", pdf["GPOE"](1))
for k in pdf:
    show(f"{k} cdf(1)", quad(pdf[k], [0, 1]))
    show(f"{k} cdf(2.5)", quad(pdf[k], [0, 1, 2.5]))
    show(f"{k} moment 2", quad(lambda x: x * x * pdf[k](x), [0, 1, 4, 12]))


# Small-x approximant deviation maxima over [0.1, 0.5] on a dense grid.
def max_rel_dev(f, g):
    m = mpf(0)
    for i in range(4001):
        x = mpf("0.1") + mpf("0.4") * i / 4000
        m = max(m, abs(f(x) - g(x)) / f(x))
    return m


mp.dps = 20  # grid scan only
show("GPOE approximant max rel dev", max_rel_dev(pdf["GPOE"], lambda x: (mpf("0.5") - mpf("1.2") * log(x)) * x))
show("GPUE approximant max rel dev", max_rel_dev(pdf["GPUE"], lambda x: mpf("2.5") * x * (1 - mpf("0.95") * x)))
