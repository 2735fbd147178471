"""Independent brute-force oracles. Nothing here uses the package's kernel:
inputs are plain lists of ints and every answer comes from direct enumeration
or a textbook formula."""

import itertools
from fractions import Fraction
from math import gcd


def det(rows):
    """Exact determinant by fraction Gaussian elimination."""
    a = [[Fraction(x) for x in r] for r in rows]
    n = len(a)
    out = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            out = -out
        out *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return int(out)


def determinantal_invariants(rows, ncols):
    """Invariant factors d_k = D_k / D_{k-1}, D_k the gcd of all k x k minors."""
    m = len(rows)
    prev, out = 1, []
    for k in range(1, min(m, ncols) + 1):
        g = 0
        for rs in itertools.combinations(range(m), k):
            for cs in itertools.combinations(range(ncols), k):
                g = gcd(g, det([[rows[i][j] for j in cs] for i in rs]))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def solutions_mod(B, A, n, k):
    """All W (k x cols, entries mod n) with B W = A mod n, by enumeration."""
    m = len(B)
    cols = len(A[0]) if A else 0
    sols = []
    for flat in itertools.product(range(n), repeat=k * cols):
        W = [list(flat[i * cols:(i + 1) * cols]) for i in range(k)]
        if all(sum(B[i][t] * W[t][j] for t in range(k)) % n == A[i][j] % n
               for i in range(m) for j in range(cols)):
            sols.append(W)
    return sols


def span(rows, p, ncols):
    """Every F_p-linear combination of the rows."""
    out = set()
    for coeffs in itertools.product(range(p), repeat=len(rows)):
        out.add(tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % p for j in range(ncols)))
    if not rows:
        out.add((0,) * ncols)
    return frozenset(out)


def gaussian_binomial(n, k, q):
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def subspace_count(q, n):
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def ev_by_definition(B, A, orders, k, n):
    """{ a in M^n : exists c in M^k with B c = A a }, M = (+) Z/orders, by double enumeration."""
    elems = list(itertools.product(*(range(d) for d in orders)))
    m = len(A)

    def lin(row, vec):
        return tuple(sum(r * v[s] for r, v in zip(row, vec)) % d for s, d in enumerate(orders))

    images = {tuple(lin(B[i], c) for i in range(m)) for c in itertools.product(elems, repeat=k)}
    return frozenset(a for a in itertools.product(elems, repeat=n)
                     if tuple(lin(A[i], a) for i in range(m)) in images)


def h1_order(q):
    return (q - 1) // gcd(2, q - 1)


def matmul(X, Y, n, inner, cols):
    rows = len(X)
    return [[sum(X[i][t] * Y[t][j] for t in range(inner)) % n for j in range(cols)] for i in range(rows)]


def certificate_exists(B, A, k, B2, A2, k2, n, arity):
    """Exhaustive search for (U, V, G) over Z/n with U B = B' V and U A = A' + B' G."""
    m, m2 = len(A), len(A2)
    sizes = (m2 * m, k2 * k, k2 * arity)

    def shape(flat, r, c):
        return [list(flat[i * c:(i + 1) * c]) for i in range(r)]

    for flat in itertools.product(range(n), repeat=sum(sizes)):
        U = shape(flat[:sizes[0]], m2, m)
        V = shape(flat[sizes[0]:sizes[0] + sizes[1]], k2, k)
        G = shape(flat[sizes[0] + sizes[1]:], k2, arity)
        if matmul(U, B, n, m, k) != matmul(B2, V, n, k2, k):
            continue
        UA = matmul(U, A, n, m, arity)
        BG = matmul(B2, G, n, k2, arity)
        if all((UA[i][j] - A2[i][j] - BG[i][j]) % n == 0 for i in range(m2) for j in range(arity)):
            return True
    return False
