"""Independent derivation of expected values frozen into the C++ unit tests.

Uses sympy exact arithmetic only; none of the C++ code paths are involved.
Run: python3 tests/oracles/derive_values.py
"""
from itertools import combinations
from sympy import Matrix, Rational, GF, eye, zeros
from sympy.polys.matrices import DomainMatrix


def matsuo3(eta):
    """3C(eta) on basis a,b,c: a.b = eta/2 (a+b-c) and cyclic."""
    n = 3
    table = {}
    for i in range(n):
        v = [0] * n
        v[i] = 1
        table[(i, i)] = Matrix(v)
    for i, j in combinations(range(n), 2):
        k = 3 - i - j
        v = [0] * n
        v[i] = eta / 2
        v[j] = eta / 2
        v[k] = -eta / 2
        table[(i, j)] = table[(j, i)] = Matrix(v)
    return table


def mult(table, u, v):
    n = len(u)
    out = zeros(n, 1)
    for i in range(n):
        for j in range(n):
            out += u[i] * v[j] * table[(i, j)]
    return out


def ad(table, u):
    n = len(u)
    cols = [mult(table, u, Matrix([1 if k == j else 0 for k in range(n)])) for j in range(n)]
    return Matrix.hstack(*cols)


def main():
    half = Rational(1, 2)
    t = matsuo3(half)
    a, b, c = (Matrix([1, 0, 0]), Matrix([0, 1, 0]), Matrix([0, 0, 1]))
    print("3C(1/2) a.b =", list(mult(t, a, b)))
    print("3C(1/2) ad_a =", ad(t, a).tolist())
    A = ad(t, a)
    for lam in (1, half, 0):
        print(f"eigenspace({lam}) =", [list(v) for v in (A - lam * eye(3)).nullspace()])
    # components of b w.r.t. a
    e1 = a
    ehalf = b - c
    e0 = b + c - half * a
    coeffs = Matrix.hstack(e1, ehalf, e0).solve(b)
    print("components of b: u1 =", list(coeffs[0] * e1), "u1/2 =", list(coeffs[1] * ehalf), "u0 =", list(coeffs[2] * e0))

    # Gram matrices and determinants
    for eta in (half, Rational(-1), Rational(2), Rational(1, 3)):
        g = Matrix(3, 3, lambda i, j: 1 if i == j else eta / 2)
        print(f"3C({eta}) gram det =", g.det(), "nullspace =", [list(v) for v in g.nullspace()])

    # Frobenius-space dimension for 3C(1/2): unknowns g_ij, i<=j
    def frob_space(table, n):
        idx = {}
        for i in range(n):
            for j in range(i, n):
                idx[(i, j)] = len(idx)
        def var(i, j):
            return idx[(min(i, j), max(i, j))]
        rows = []
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    row = [0] * len(idx)
                    pij = table[(i, j)]
                    pjk = table[(j, k)]
                    for l in range(n):
                        row[var(l, k)] += pij[l]
                        row[var(i, l)] -= pjk[l]
                    rows.append(row)
        return Matrix(rows).nullspace(), idx
    ns, idx = frob_space(t, 3)
    print("3C(1/2) frobenius space dim =", len(ns))
    v = ns[0] / ns[0][idx[(0, 0)]]
    print("normalized: (a,a) =", v[idx[(0, 0)]], "(a,b) =", v[idx[(0, 1)]])

    # GF(3) rref example
    m = DomainMatrix([[GF(3)(0), GF(3)(1), GF(3)(2)], [GF(3)(1), GF(3)(0), GF(3)(1)]], (2, 3), GF(3))
    print("GF(3) rref =", m.rref()[0].to_Matrix().tolist())

    # largest ideal within span{b-c} in 3C(1/2): b.(b-c)
    print("3C(1/2) b.(b-c) =", list(mult(t, b, b - c)))
    # 3C(-1): products of a,b,c with a+b+c and b-c
    tm = matsuo3(Rational(-1))
    s = a + b + c
    for name, x in (("a", a), ("b", b), ("c", c)):
        print(f"3C(-1) {name}.(a+b+c) =", list(mult(tm, x, s)), f"{name}.(b-c) =", list(mult(tm, x, b - c)))
    # quotient 3C(-1)/<a+b+c>: images of a.b with c = -a-b
    ab = mult(tm, a, b)
    print("3C(-1) a.b =", list(ab), "-> in quotient basis (a,b):", [ab[0] - ab[2], ab[1] - ab[2]])
    aa = mult(tm, a, a)
    print("3C(-1)/R: a.a ->", [aa[0] - aa[2], aa[1] - aa[2]])
    bb = mult(tm, b, b)
    print("3C(-1)/R: b.b ->", [bb[0] - bb[2], bb[1] - bb[2]])


if __name__ == "__main__":
    main()
