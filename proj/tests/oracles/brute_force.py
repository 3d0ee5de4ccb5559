"""Independent brute-force oracle for the frozen values in the unit tests.

Exact rational arithmetic only. Membership in a simplex is decided from
barycentric coordinates; the unit square by its bounds. Nothing here shares
code with the C++ library.

    python3 tests/oracles/brute_force.py
"""
from fractions import Fraction
from itertools import combinations_with_replacement, product


def solve(a, b):
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    for c in range(n):
        p = next(r for r in range(c, n) if m[r][c] != 0)
        m[c], m[p] = m[p], m[c]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c] / m[c][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [m[i][n] / m[i][i] for i in range(n)]


def simplex_bary(verts, x):
    n = len(x)
    a = [[verts[j][i] for j in range(n + 1)] for i in range(n)] + [[1] * (n + 1)]
    return solve(a, list(x) + [1])


def simplex_member(verts, k, x, interior=False):
    lam = simplex_bary([[k * c for c in v] for v in verts], x)
    return all(l > 0 for l in lam) if interior else all(l >= 0 for l in lam)


def box_points(verts, k):
    n = len(verts[0])
    lo = [min(v[i] for v in verts) * k for i in range(n)]
    hi = [max(v[i] for v in verts) * k for i in range(n)]
    return product(*[range(l, h + 1) for l, h in zip(lo, hi)])


def simplex_points(verts, k, interior=False):
    return sorted(p for p in box_points(verts, k) if simplex_member(verts, k, p, interior))


def square_points(k, interior=False):
    r = range(1, k) if interior else range(0, k + 1)
    return sorted(product(r, r))


def interpolate(values):
    n = len(values)
    coeffs = solve([[Fraction(k) ** i for i in range(n)] for k in range(n)], values)
    return coeffs


def evaluate(coeffs, t):
    return sum(c * Fraction(t) ** i for i, c in enumerate(coeffs))


def sumset(points, m):
    return sorted({tuple(map(sum, zip(*c))) for c in combinations_with_replacement(points, m)})


def fiber(config, target):
    d = target[0]
    return [c for c in combinations_with_replacement(range(len(config)), d)
            if tuple(map(sum, zip(*[config[i] for i in c]))) == tuple(target)]


def quad_move(a, b):
    from collections import Counter
    return sum((Counter(a) - Counter(b)).values()) == 2


def connected(elements):
    if len(elements) <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        a = stack.pop()
        for b in range(len(elements)):
            if b not in seen and quad_move(elements[a], elements[b]):
                seen.add(b)
                stack.append(b)
    return len(seen) == len(elements)


def probe(points, cap):
    config = sorted((1,) + tuple(p) for p in points)
    checked = []
    for d in range(2, cap + 1):
        targets = sumset(config, d)
        checked.append(len(targets))
        for b in targets:
            if not connected(fiber(config, b)):
                return False, b, checked
    return True, None, checked


def reeve(q):
    return [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, q)]


def simplex(n):
    return [tuple(0 for _ in range(n))] + [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]


def main():
    t2 = reeve(2)
    print("T2 closed points:", simplex_points(t2, 1))
    print("2T2 interior points:", simplex_points(t2, 2, True))
    counts = [1] + [len(simplex_points(t2, k)) for k in range(1, 4)]
    ehr = interpolate(counts)
    print("T2 counts k=0..3:", counts, "Ehrhart:", [str(c) for c in ehr])
    for n in (2, 3):
        s = simplex(n)
        counts = [1] + [len(simplex_points(s, k)) for k in range(1, n + 1)]
        print(f"Delta_{n} Ehrhart:", [str(c) for c in interpolate(counts)])
        first = next(k for k in range(1, n + 2) if simplex_points(s, k, True))
        print(f"Delta_{n} d(P) =", first - 1, "first interior point:", simplex_points(s, first, True)[0])
    for q in range(2, 6):
        t = reeve(q)
        first = next(k for k in range(1, 5) if simplex_points(t, k, True))
        pts = simplex_points(t, 1)
        missing = [z for z in simplex_points(t, 2) if z not in set(sumset(pts, 2))]
        print(f"T{q}: d =", first - 1, "lattice points", len(pts), "first missing at level 2:", missing[:1])
    print("square d(P):", next(k for k in range(1, 4) if square_points(k, True)) - 1)
    print("square sumset level 2:", len(sumset(square_points(1), 2)))
    sums = sumset(t2, 2)
    print("T2 vertex sumset level 2:", len(sums), "(1,1,1) in it:", (1, 1, 1) in sums)
    two_t2 = simplex_points(t2, 2)
    for m in (2,):
        z = [p for p in simplex_points(t2, 2 * m) if p not in set(sumset(two_t2, m))]
        print(f"2T2 level {m} missing:", z[:1])
    ehr_sq = interpolate([1, 4, 9])
    print("square L(-1), L(-2):", evaluate(ehr_sq, -1), evaluate(ehr_sq, -2))
    ehr_d3 = interpolate([1] + [len(simplex_points(simplex(3), k)) for k in range(1, 4)])
    print("Delta_3 reciprocity t=1..4:",
          [(str(evaluate(ehr_d3, -t)), len(simplex_points(simplex(3), t, True))) for t in range(1, 5)])
    ehr_t2 = interpolate([1] + [len(simplex_points(t2, k)) for k in range(1, 4)])
    print("T2 reciprocity t=1..3:",
          [(str(evaluate(ehr_t2, -t)), len(simplex_points(t2, t, True))) for t in range(1, 4)])
    print("T2 interior counts k=1..4:", [len(simplex_points(t2, k, True)) for k in range(1, 5)])
    sq_config = sorted((1,) + p for p in square_points(1))
    print("square fiber (2,1,1):", [[sq_config[i] for i in e] for e in fiber(sq_config, (2, 1, 1))])
    d2_config = sorted((1,) + p for p in simplex(2))
    print("Delta_2 fiber (2,1,0):", [[d2_config[i] for i in e] for e in fiber(d2_config, (2, 1, 0))])
    print("probe square l=1 cap 4:", probe(square_points(1), 4))
    print("probe square l=2 cap 4:", probe(square_points(2), 4))
    print("probe Delta_2 cap 3:", probe(simplex(2), 3))
    tri = [(1, 0), (0, 1), (-1, -1)]
    print("probe triangle with one interior point cap 4:", probe(simplex_points(tri, 1), 4))
    print("probe T2 l=2 cap 3:", probe(simplex_points(t2, 2), 3))


if __name__ == "__main__":
    main()
