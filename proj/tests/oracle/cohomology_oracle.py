"""Independent rank oracle for the golden cohomology reports.

Cochains are stored as dense tensors over index tuples and the differentials
are evaluated by multilinear expansion; ranks come from sympy.  Only the
regular-pair and pre-Lie (regular coefficients) complexes are covered.
"""
import itertools
import json
import re
import sys
from fractions import Fraction

import sympy


def rat(s):
    return Fraction(s)


def load_pair(path):
    doc = json.load(open(path))
    n = doc["dim_g"]
    prod = [[[rat(c) for c in doc["product"][i][j]] for j in range(n)] for i in range(n)]
    der = [[rat(c) for c in row] for row in doc["derivation"]]
    return n, prod, der


def perm_sign(seq):
    s, seq = 1, list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                s = -s
    return s


class Space:
    """Hom(wedge^{a} g (x) g, g) with a basis of (sorted wedge, tail, out)."""

    def __init__(self, n, arity):
        self.n, self.arity = n, arity
        self.basis = [(c, t, o) for c in itertools.combinations(range(n), arity - 1)
                      for t in range(n) for o in range(n)]
        self.index = {b: k for k, b in enumerate(self.basis)}

    def value(self, coords, idx):
        """f(e_idx) as a vector, from coordinates."""
        wedge, tail = idx[:-1], idx[-1]
        if len(set(wedge)) < len(wedge):
            return [Fraction(0)] * self.n
        s = perm_sign(wedge)
        key = tuple(sorted(wedge))
        return [s * coords[self.index[(key, tail, o)]] for o in range(self.n)]

    def evaluate(self, coords, vecs):
        out = [Fraction(0)] * self.n
        supports = [[(i, x) for i, x in enumerate(v) if x != 0] for v in vecs]
        for combo in itertools.product(*supports):
            c = Fraction(1)
            for _, x in combo:
                c *= x
            val = self.value(coords, tuple(i for i, _ in combo))
            for o in range(self.n):
                out[o] += c * val[o]
        return out


def unit(n, i):
    return [Fraction(int(k == i)) for k in range(n)]


def mul(prod, x, y):
    n = len(x)
    out = [Fraction(0)] * n
    for i in range(n):
        for j in range(n):
            if x[i] and y[j]:
                for k in range(n):
                    out[k] += x[i] * y[j] * prod[i][j][k]
    return out


def matvec(m, v):
    return [sum(m[r][c] * v[c] for c in range(len(v))) for r in range(len(m))]


def add(a, b, s=1):
    return [x + s * y for x, y in zip(a, b)]


def d_prelie(space, coords, prod, xs):
    """Pre-Lie coboundary with coefficients in the regular representation."""
    m = len(xs) - 1
    n = space.n
    out = [Fraction(0)] * n
    last = xs[-1]
    for i in range(m):
        sgn = (-1) ** i
        rest = xs[:i] + xs[i + 1:m]
        out = add(out, mul(prod, xs[i], space.evaluate(coords, rest + [last])), sgn)
        out = add(out, mul(prod, space.evaluate(coords, rest + [xs[i]]), last), -sgn)
        out = add(out, space.evaluate(coords, rest + [mul(prod, xs[i], last)]), -sgn)
    for i in range(m):
        for j in range(i + 1, m):
            br = add(mul(prod, xs[i], xs[j]), mul(prod, xs[j], xs[i]), -1)
            rest = [x for k, x in enumerate(xs) if k not in (i, j)]
            out = add(out, space.evaluate(coords, [br] + rest), (-1) ** (i + j))
    return out


def omega(space, coords, der, xs):
    s = (-1) ** (len(xs) - 2)
    out = [Fraction(0)] * space.n
    for i in range(len(xs)):
        ys = list(xs)
        ys[i] = matvec(der, xs[i])
        out = add(out, space.evaluate(coords, ys), s)
    return add(out, matvec(der, space.evaluate(coords, xs)), -s)


def regular_matrix(n, prod, der, deg):
    """Differential C^deg -> C^{deg+1} of the regular-pair complex."""
    src = [Space(n, deg)] + ([Space(n, deg - 1)] if deg >= 2 else [])
    dst = [Space(n, deg + 1), Space(n, deg)]
    cols = []
    for block, sp in enumerate(src):
        for k in range(len(sp.basis)):
            f = [Fraction(int(j == k)) for j in range(len(sp.basis))]
            col = []
            for dblock, dsp in enumerate(dst):
                for (c, t, o) in dsp.basis:
                    xs = [unit(n, i) for i in c] + [unit(n, t)]
                    if block == 0 and dblock == 0:
                        v = d_prelie(sp, f, prod, xs)
                    elif block == 0 and dblock == 1:
                        v = omega(sp, f, der, xs)
                    elif block == 1 and dblock == 1:
                        v = d_prelie(sp, f, prod, xs)
                    else:
                        v = [0] * n
                    col.append(v[o])
            cols.append(col)
    return sympy.Matrix(cols).T if cols else sympy.zeros(0, 0)


def prelie_matrix(n, prod, deg):
    sp, dsp = Space(n, deg), Space(n, deg + 1)
    cols = []
    for k in range(len(sp.basis)):
        f = [Fraction(int(j == k)) for j in range(len(sp.basis))]
        cols.append([d_prelie(sp, f, prod, [unit(n, i) for i in c] + [unit(n, t)])[o] for (c, t, o) in dsp.basis])
    return sympy.Matrix(cols).T


def dims(kind, n, prod, der, deg):
    build = (lambda d: regular_matrix(n, prod, der, d)) if kind == "regular" else (lambda d: prelie_matrix(n, prod, d))
    here = build(deg)
    cochains = here.shape[1]
    z = cochains - here.rank()
    b = build(deg - 1).rank() if deg >= 2 else 0
    return cochains, z, b, z - b


def main():
    pair_file, golden_dir = sys.argv[1], sys.argv[2]
    n, prod, der = load_pair(pair_file)
    failures = 0
    # (golden case, complex, degree)
    cases = [("cohomology_regular_1", "regular", 1), ("cohomology_regular_2", "regular", 2),
             ("cohomology_regular_3_json", "regular", 3), ("cohomology_prelie_2", "prelie", 2)]
    for name, kind, deg in cases:
        text = open(f"{golden_dir}/{name}.out").read()
        got = tuple(int(re.search(rf'"?{key}"?: (\d+)', text).group(1))
                    for key in ("cochains", "(?:z|cocycles)", "(?:b|coboundaries)", "(?:h|cohomology)"))
        want = dims(kind, n, prod, der, deg)
        ok = got == want
        failures += not ok
        print(f"{'ok  ' if ok else 'FAIL'} {name}: golden {got}, oracle {want}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
