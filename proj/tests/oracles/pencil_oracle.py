"""Independent oracle for skew-pencil block types (sympy, brute force).

Nullity sequence of the block convolution matrices gives the minimal indices;
the determinant-free Jordan part is read off from ranks of (lambda A + B)^j
style Weyr characteristics at each eigenvalue via sympy's jordan_form on the
regular part is avoided: we only use nullities, which suffices for the
catalog pencils used in the tests.
"""
import sympy as sp
import sys

def conv(A, B, d):
    n = A.shape[0]
    T = sp.zeros((d + 2) * n, (d + 1) * n)
    for i in range(d + 1):
        T[i * n:(i + 1) * n, i * n:(i + 1) * n] = B
        T[(i + 1) * n:(i + 2) * n, i * n:(i + 1) * n] = A
    return T

def minimal_indices(A, B):
    n = A.shape[0]
    nu = []
    for d in range(n + 1):
        nu.append(conv(A, B, d).shape[1] - conv(A, B, d).rank())
    get = lambda i: nu[i] if i >= 0 else 0
    out = []
    for e in range(n + 1):
        c = (get(e) - get(e - 1)) - (get(e - 1) - get(e - 2))
        out += [e] * c
    return out

def eps_example(eps, where):
    n = 6
    A = sp.zeros(n); B = sp.zeros(n)
    def put(M, i, j, v):
        M[i, j] += v; M[j, i] -= v
    for l in range(2):
        put(A, 2 * l, 2 * l + 1, 1)
        put(B, 2 * l + 1, 2 * l + 2, 1)
    M = A if where == 1 else B
    put(M, 5, 1, eps); put(M, 5, 3, eps)
    return A, B

for where in (1, 2):
    for eps in (1, 0, sp.Rational(1, 2), 2, -1):
        A, B = eps_example(eps, where)
        lam = sp.symbols('lam')
        det = sp.factor((lam * A + B).det())
        print("eps in pairing", where, "eps=", eps, "minimal indices", minimal_indices(A, B), "det", det)
