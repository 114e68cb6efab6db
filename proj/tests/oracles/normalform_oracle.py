"""Independent oracle for the flatness normal form of M_f (sympy series).

phi(x,y) = gamma(f(a(x), b(y))) with a(0)=b(0)=0, a'(0)=1, chosen so that
phi(x,0)=x and phi(0,y)=y after reparametrisation; we simply check whether
f is (locally) of the form G(A(x)+B(y)), i.e. whether the leaves-to-levels
cross ratio obstruction vanishes: f_x f_y (log(f_x/f_y))_xy == 0.
"""
import sympy as sp
x, y = sp.symbols('x y')

def flat(f):
    fx, fy = sp.diff(f, x), sp.diff(f, y)
    return sp.simplify(sp.diff(sp.log(fx / fy), x, y)) == 0

for f in [x + y, x + y + x*y, x + y + x**2*y, x + y + x*y**2, 2*x + 3*y + x**2 + y**2]:
    print(f, "flat" if flat(f) else "non-flat")

# two_family: f = (L-1)^2 y + zeta(L) + eta(L), x = L^2 y + zeta(L), zeta' = -t eta'
L, Y, t = sp.symbols('L Y t')
for eta in [t, 3*t, t**2, t**3]:
    zeta = sp.integrate(-t * sp.diff(eta, t), (t, 0, L))
    X = L**2 * Y + zeta
    F = (L - 1)**2 * Y + zeta + eta.subs(t, L)
    XL, XY = sp.diff(X, L), sp.diff(X, Y)
    FL, FY = sp.diff(F, L), sp.diff(F, Y)
    fx = FL / XL
    fy = sp.simplify(FY - FL * XY / XL)
    # obstruction in (L,Y) chart: d/dx d/dy of log(fx/fy) with chain rule
    g = sp.log(sp.simplify(fx / fy))
    def dx(h): return sp.diff(h, L) / XL
    def dy(h): return sp.diff(h, Y) - sp.diff(h, L) * XY / XL
    obs = sp.simplify(dy(dx(g)))
    print("eta =", eta, "fx =", sp.simplify(fx), "fy =", fy, "obstruction =", obs)
