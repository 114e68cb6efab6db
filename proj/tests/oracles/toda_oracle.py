"""Independent oracle for the open/periodic Toda structures (sympy)."""
import sympy as sp

def open_toda(k):
    n = 2 * k + 1
    v = sp.symbols(f'v0:{n}')
    P1 = sp.zeros(n); P2 = sp.zeros(n)
    def put(M, i, j, c):
        M[i, j] += c; M[j, i] -= c
    for l in range(k + 1):
        e = 2 * l
        if e + 1 < n:
            put(P1, e, e + 1, -v[e + 1]); put(P2, e, e + 1, -v[e] * v[e + 1])
        if e - 1 >= 0:
            put(P1, e, e - 1, v[e - 1]); put(P2, e, e - 1, v[e] * v[e - 1])
        if e + 2 < n:
            put(P2, e, e + 2, -2 * v[e + 1] ** 2)
    for l in range(1, k):
        put(P2, 2 * l - 1, 2 * l + 1, -sp.Rational(1, 2) * v[2 * l - 1] * v[2 * l + 1])
    lam = sp.symbols('lam')
    I = sp.zeros(k + 1)
    for l in range(k + 1):
        I[l, l] = v[2 * l]
        if l < k:
            I[l, l + 1] = I[l + 1, l] = v[2 * l + 1]
    F = sp.expand((I + lam * sp.eye(k + 1)).det() - lam ** (k + 1))
    return v, P1, P2, lam, F

def family_ok(v, P1, P2, lam, F):
    g = sp.Matrix([sp.diff(F, x) for x in v])
    return sp.expand((lam * P1 + P2) * g) == sp.zeros(len(v), 1)

for k in (1, 2, 3):
    v, P1, P2, lam, F = open_toda(k)
    print("open toda k=%d family ok:" % k, family_ok(v, P1, P2, lam, F))

v, P1, P2, lam, F = open_toda(2)
coeffs = sp.Poly(F, lam).all_coeffs()
pt = {v[0]: 2, v[1]: 0, v[2]: 3, v[3]: 0, v[4]: 5}
G = sp.Matrix([[sp.diff(c, x).subs(pt) for x in v] for c in coeffs])
print("V5 w1 at (2,0,3,0,5):", G.rank())
pt = {v[0]: 1, v[1]: 0, v[2]: -2, v[3]: 0, v[4]: 7}
G = sp.Matrix([[sp.diff(c, x).subs(pt) for x in v] for c in coeffs])
print("V5 w1 at (1,0,-2,0,7):", G.rank())

def periodic(k, s):
    n = 2 * k
    v = sp.symbols(f'v0:{n}')
    P1 = sp.zeros(n); P2 = sp.zeros(n)
    def put(M, i, j, c):
        M[i % n, j % n] += c; M[j % n, i % n] -= c
    V = lambda i: v[i % n]
    for l in range(k):
        e = 2 * l
        put(P1, e, e + 1, -V(e + 1)); put(P2, e, e + 1, -V(e) * V(e + 1))
        put(P1, e, e - 1, V(e - 1)); put(P2, e, e - 1, V(e) * V(e - 1))
        put(P2, e, e + 2, -2 * V(e + 1) ** 2)
        put(P2, e - 1, e + 1, -sp.Rational(1, 2) * V(e - 1) * V(e + 1))
    lam = sp.symbols('lam')
    w = [V(i) + (s * lam if i % 2 == 0 else 0) for i in range(n)]
    W = lambda i: w[i % n]
    M = sp.eye(2)
    for l in range(1, k + 1):
        m = sp.Matrix([[0, W(2 * l + 1)], [-W(2 * l - 1), -W(2 * l)]])
        M = m * M
    T = sp.expand(M.trace())
    lead = sp.Poly(T, lam).LC()
    Gf = sp.expand(T - lead * lam ** k)
    return v, P1, P2, lam, Gf, lead

for s in (1, -1):
    v, P1, P2, lam, Gf, lead = periodic(3, s)
    N = v[1] * v[3] * v[5]
    g = sp.Matrix([sp.diff(Gf, x) for x in v])
    ok = sp.expand((lam * P1 + P2) * g) == sp.zeros(6, 1)
    okr = sp.expand(((-lam) * P1 + P2) * g) == sp.zeros(6, 1)
    gN = sp.Matrix([sp.diff(N, x) for x in v])
    print("periodic shift", s, "lead", lead, "family(lam) ok", ok, "family(-lam) ok", okr,
          "N casimir", sp.expand(P1 * gN) == sp.zeros(6, 1) and sp.expand(P2 * gN) == sp.zeros(6, 1))
    print(" degree", sp.Poly(Gf, lam).degree())

for pt in [(1, 0, 1, 0, 2), (1, 0, 1, 0, 1), (3, 0, -1, 0, 3)]:
    sub = dict(zip(v5 := open_toda(2)[0], pt))
    G = sp.Matrix([[sp.diff(c, x).subs(sub) for x in v5] for c in coeffs])
    print("V5 w1 at", pt, ":", G.rank())
