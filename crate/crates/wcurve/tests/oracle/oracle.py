"""Independent sympy oracle for the frozen values in tests/fixtures.rs.

Builds the multiplication matrices of the three fixtures (default parameters
b = 1..n, a = 1) directly from their defining relations and prints:
characteristic polynomial of the first generator, std traces, det of the
trace form, and the minimal-weight polynomial solution of M_a H = H M_a^T.
"""
import itertools
import sympy as sp

x = sp.symbols("x")


def k(*roots):
    return sp.expand(sp.prod([x - b for b in roots]))


def trigonal():
    k2, k3, kt2 = k(1, 2), k(3, 4, 5), k(6, 7)
    a1 = a2 = 1
    # basis 1, y, w; y^2 = -a2 k2 kt2 - a1 k2 y - k2 w; yw = k2 k3; w^2 = -a1 k2 k3 - k3 y - a2 kt2 w
    tab = {
        (1, 1): [-a2 * k2 * kt2, -a1 * k2, -k2],
        (1, 2): [k2 * k3, 0, 0],
        (2, 2): [-a1 * k2 * k3, -k3, -a2 * kt2],
    }
    return [0, 7, 8], 3, tab


def pentagonal():
    k2, k3 = k(1, 2), k(3, 4, 5)
    e = lambda i, p: [p if j == i else 0 for j in range(5)]
    # basis 1, y, w, y^2, yw
    tab = {
        (1, 1): e(3, 1), (1, 2): e(4, 1), (1, 3): e(2, k2), (1, 4): e(0, k2 * k3),
        (2, 2): e(1, k3), (2, 3): e(0, k2 * k3), (2, 4): e(3, k3),
        (3, 3): e(4, k2), (3, 4): e(1, k2 * k3), (4, 4): e(2, k2 * k3),
    }
    return [0, 7, 11, 14, 18], 5, tab


def sextic():
    k3, k2, kh2 = k(1, 2, 3), k(4, 5), k(6, 7)
    e = lambda i, p: [p if j == i else 0 for j in range(6)]
    # basis 1, y13, y14, y15, y16, y13 y16
    tab = {
        (1, 1): e(2, kh2), (1, 2): e(3, k2), (1, 3): e(4, kh2), (1, 4): e(5, 1),
        (1, 5): e(0, kh2 * k2 * k3), (2, 2): e(4, k2), (2, 3): e(5, 1), (2, 4): e(0, k2 * k3),
        (2, 5): e(1, k2 * k3), (3, 3): e(0, kh2 * k3), (3, 4): e(1, k3), (3, 5): e(2, k3 * kh2),
        (4, 4): e(2, k3), (4, 5): e(3, k3 * k2), (5, 5): e(4, kh2 * k3 * k2),
    }
    return [0, 13, 14, 15, 16, 29], 6, tab


def mult_matrices(e, tab):
    n = len(e)
    prod = {}
    for i in range(n):
        for j in range(n):
            if i == 0 or j == 0:
                prod[(i, j)] = [1 if l == i + j else 0 for l in range(n)]
            else:
                prod[(i, j)] = tab[(min(i, j), max(i, j))]
    # column j of M_i = y_i * y_j
    return [sp.Matrix(n, n, lambda p, j: prod[(i, j)][p]) for i in range(n)]


def annihilator(e, r, mats, gens):
    n = len(e)
    for d in range(0, 60):
        unknowns, H = [], sp.zeros(n, n)
        for i in range(n):
            for j in range(i, n):
                top = d - e[i] - e[j]
                if top < 0:
                    continue
                terms = 0
                for kk in range(top // r + 1):
                    c = sp.Symbol(f"c_{i}_{j}_{kk}")
                    unknowns.append(c)
                    terms += c * x**kk
                H[i, j] = H[j, i] = terms
        if not unknowns:
            continue
        eqs = []
        for g in gens:
            m = mats[g]
            for entry in m * H - H * m.T:
                eqs.extend(sp.Poly(sp.expand(entry), x).all_coeffs())
        sol = sp.linsolve(eqs, unknowns)
        (vals,) = sol
        free = set().union(*[sp.sympify(v).free_symbols for v in vals])
        if not free:
            continue
        # pick one free parameter set to 1, others 0, keep first with a top-weight part
        for f in sorted(free, key=str):
            sub = {s: (1 if s == f else 0) for s in free}
            Hs = H.subs(dict(zip(unknowns, [sp.sympify(v).subs(sub) for v in vals])))
            top = any(sp.Poly(Hs[i, j], x).degree() * r + e[i] + e[j] == d
                      for i in range(n) for j in range(n) if Hs[i, j] != 0)
            if top:
                return d, Hs.applyfunc(sp.expand)
    return None


def report(name, e, r, tab, gens, solve=True):
    mats = mult_matrices(e, tab)
    y = mats[gens[0]]
    print(f"== {name}")
    print("charpoly first generator:", sp.factor(y.charpoly(sp.Symbol("T")).as_expr()))
    print("std traces:", [sp.expand(m.trace()) for m in mats])
    T = sp.Matrix(len(e), len(e), lambda i, j: sp.expand((mats[i] * mats[j]).trace()))
    dT = sp.factor(T.det())
    print("det trace form:", dT, "degree", sp.Poly(dT, x).degree())
    if solve:
        d, H = annihilator(e, r, mats, gens)
        # h_X = mu(H) = sum H_ij y_i y_j, expressed in the basis
        hx = sp.zeros(len(e), 1)
        for i in range(len(e)):
            for j in range(len(e)):
                hx += H[i, j] * mats[i][:, j]
        lead = H[0, len(e) - 1]
        print("d_h:", d)
        print("h_X coefficients (unnormalized, H[0][r-1] =", sp.factor(lead), "):",
              [sp.factor(sp.expand(c)) for c in hx])


report("trigonal378", *trigonal(), gens=[1, 2])
report("pentagonal", *pentagonal(), gens=[1, 2])
report("sextic", *sextic(), gens=[1, 2, 3, 4], solve=False)
