"""Independent numpy oracle for the frozen expected values used in the C++ tests.

Run: python3 tests/oracle/derive_values.py
Nothing here shares code with the library; matrices are built by hand and
functions of operators go through numpy.linalg.eigh.
"""
import numpy as np


def fA(A, f):
    w, U = np.linalg.eigh(A)
    return U @ np.diag(f(w)) @ U.conj().T


def ex(A, f, x):
    return float(np.real(np.vdot(x, fA(A, f) @ x)))


A12 = np.diag([1.0, 2.0])
xe = np.array([1, 1]) / np.sqrt(2)
one = lambda s: np.ones_like(s)
idf = lambda s: s

print("eig [[2,1],[1,2]]", np.linalg.eigvalsh(np.array([[2.0, 1], [1, 2]])))
print("inv eig", np.linalg.eigvalsh(fA(np.array([[2.0, 1], [1, 2]]), lambda s: 1 / s)))
print("<A^-1> equal", ex(A12, lambda s: 1 / s, xe))
print("cebysev id,id", ex(A12, lambda s: s * s, xe) - ex(A12, idf, xe) ** 2)
print("cebysev id,inv", ex(A12, one, xe) - ex(A12, idf, xe) * ex(A12, lambda s: 1 / s, xe))
h2 = ex(A12, lambda s: s**2, xe)
fg = ex(A12, lambda s: s**4, xe)
hf = ex(A12, lambda s: s**3, xe)
print("pompeiu s2 s2 id", h2 * fg - hf * hf, h2, fg, hf)
lhs = ex(A12, lambda s: s**1.5, xe) ** 2
print("weighted cauchy", lhs, ex(A12, lambda s: s**2, xe) * ex(A12, idf, xe))
print("kantorovich", ex(A12, idf, xe) * ex(A12, lambda s: 1 / s, xe), (1 + 2) ** 2 / (4 * 1 * 2))
a, b = ex(A12, idf, xe), ex(A12, lambda s: 1 / s, xe)
print("inverse pair", b * b + a * a, 2 * a * b)
# two operator, f=g=s^2, h=s, B=diag(1,1.5)
B = np.diag([1.0, 1.5])
L = ex(B, lambda s: s**2, xe) * ex(A12, lambda s: s**4, xe) + ex(A12, lambda s: s**2, xe) * ex(B, lambda s: s**4, xe)
R = ex(B, lambda s: s**3, xe) * ex(A12, lambda s: s**3, xe) + ex(A12, lambda s: s**3, xe) * ex(B, lambda s: s**3, xe)
print("two operator", L, R, L - R)
# exp case r=-1
L = ex(B, lambda s: s**-2, xe) * ex(A12, lambda s: np.exp(2 * s), xe) + ex(A12, lambda s: s**-2, xe) * ex(B, lambda s: np.exp(2 * s), xe)
R = 2 * ex(A12, lambda s: s**-1 * np.exp(s), xe) * ex(B, lambda s: s**-1 * np.exp(s), xe)
print("two operator exp", L, R, L - R)
# ensemble two diag(1,2) blocks with x_j=(1/2,1/2)
xj = np.array([0.5, 0.5])
s_h2 = 2 * ex(A12, lambda s: s**2, xj)
s_fg = 2 * ex(A12, lambda s: s**4, xj)
s_hf = 2 * ex(A12, lambda s: s**3, xj)
print("ensemble sums", s_h2, s_fg, s_hf, s_h2 * s_fg - s_hf**2)
print("discrete chebyshev", np.mean([1, 4, 9]) - 4)
A13 = np.diag([1.0, 3.0])
a2, b2 = ex(A13, idf, xe), ex(A13, lambda s: 1 / s, xe)
print("ensemble chain", a, b, a2, b2, a * b, a2 * b2, (a + a2) / 2 * (b + b2) / 2, (a * b + a2 * b2) / 2)
print("K diag(1,3)", (1 + 3) ** 2 / (12), "typo", (3 - 1) ** 2 / 12)
print("sync_product", (2 - 1) * (2 * 1 - 1 * 4))
print("mono_defect", 0.25 * 0.75 * 0.25 - 0.75 * 0.25 * 0.75)
# falsify seed: f=1,g=id,h=sqrt on [1,4]; diag(1,4), x real equal weights
A14 = np.diag([1.0, 4.0])
P = ex(A14, idf, xe) * ex(A14, idf, xe) - ex(A14, lambda s: np.sqrt(s) * s, xe) * ex(A14, np.sqrt, xe)
print("falsify seed pompeiu", P)
# g = 1, h = s, f = s^2 (asynchronous)
print("g=1 h=s f=s^2", ex(A12, lambda s: s**2, xe) * ex(A12, lambda s: s**2, xe), ex(A12, idf, xe) * ex(A12, lambda s: s**3, xe))


def refined(A, x, f, g, h):
    a = ex(A, idf, x)
    h2 = ex(A, lambda s: h(s) ** 2, x)
    fg = ex(A, lambda s: f(s) * g(s), x)
    hf = ex(A, lambda s: h(s) * f(s), x)
    hg = ex(A, lambda s: h(s) * g(s), x)
    lhs = h(a) ** 2 * fg - hf * hg
    rhs = (h(a) * hf - h2 * f(a)) * g(a) + (h(a) * f(a) - hf) * hg
    return lhs, rhs


print("refined h=s f=s2 g=s3", refined(A12, xe, lambda s: s**2, lambda s: s**3, idf))
print("refined self h=s f=s2", refined(A12, xe, lambda s: s**2, lambda s: s**2, idf))
print("refined async id inv h=1 (lhs,rhs)", refined(A12, xe, idf, lambda s: 1 / s, lambda s: 1.0 + 0 * s))
h = lambda s: s**-2.0
f = lambda s: s**-1.0
print("g_one h=s^-2 f=s^-1", ex(A12, lambda s: h(s) ** 2, xe) * ex(A12, f, xe), ex(A12, h, xe) * ex(A12, lambda s: h(s) * f(s), xe))
print("pc_sign_h_identity s2 s3", ex(A12, lambda s: s**2, xe) * ex(A12, lambda s: s**5, xe), ex(A12, lambda s: s**4, xe) * ex(A12, lambda s: s**3, xe))
print("g_one h=s f=s^.5", ex(A12, lambda s: s**2, xe) * ex(A12, np.sqrt, xe), ex(A12, idf, xe) * ex(A12, lambda s: s**1.5, xe))
a, b = ex(A12, idf, xe), ex(A12, lambda s: 1 / s, xe)
print("inverse pair self f=s2 h=s", (a * b**2 - b * a**2) ** 2, a, b)
