"""Independent oracle for the two_family and sl2 argument-shift models (sympy)."""
import sympy as sp

L, Y, Z, t, lam = sp.symbols('L y z t lam')

def two_family(eta):
    zeta = sp.integrate(-t * sp.diff(eta, t), (t, 0, L))
    X = L**2 * Y + zeta
    F = (L - 1)**2 * Y + zeta + eta.subs(t, L)
    XL, XY = sp.diff(X, L), sp.diff(X, Y)
    FL, FY = sp.diff(F, L), sp.diff(F, Y)
    fx = sp.simplify(FL / XL)
    fy = sp.simplify(FY - FL * XY / XL)
    Lx, Ly = 1 / XL, -XY / XL
    # (x,y,z) brackets: {x,z}1 = fy, {y,z}2 = -fx ; transport to (L,y,z)
    P1 = sp.zeros(3); P2 = sp.zeros(3)
    P1[0, 2] = sp.simplify(Lx * fy); P1[2, 0] = -P1[0, 2]
    P2[0, 2] = sp.simplify(Ly * (-fx)); P2[2, 0] = -P2[0, 2]
    P2[1, 2] = sp.simplify(-fx); P2[2, 1] = -P2[1, 2]
    fam = sp.expand((lam - L)**2 * Y + zeta + lam * eta.subs(t, L))
    g = sp.Matrix([sp.diff(fam, s) for s in (L, Y, Z)])
    res = sp.simplify((lam * P1 + P2) * g)
    return zeta, P1, P2, fam, res

for eta in (t**2, t, t**3):
    zeta, P1, P2, fam, res = two_family(eta)
    print("eta", eta, "zeta", zeta, "P1", list(P1[0, :]), "P2", list(P2[0, :]), list(P2[1, :]),
          "family residual", list(res))

e, h, f = sp.symbols('e h f')
a = sp.symbols('ae ah af')
Q = lambda E, H, F_: H**2 + 4 * E * F_
P2 = sp.Matrix([[0, -2 * e, h], [2 * e, 0, -2 * f], [-h, 2 * f, 0]])
P1 = P2.subs({e: a[0], h: a[1], f: a[2]})
fam = sp.expand(Q(e + lam * a[0], h + lam * a[1], f + lam * a[2]) - lam**2 * Q(*a))
g = sp.Matrix([sp.diff(fam, s) for s in (e, h, f)])
print("sl2 family residual", list(sp.expand((lam * P1 + P2) * g)))
gQ = sp.Matrix([sp.diff(Q(e, h, f), s) for s in (e, h, f)])
print("sl2 Q casimir", list(sp.expand(P2 * gQ)))
