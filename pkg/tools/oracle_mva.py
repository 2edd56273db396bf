"""Independent multivariable Alexander polynomial from a group presentation.

Uses sympy only (no splitbound code).  Input is the JSON written by
dump_presentations.py: SnapPy relators (capital letter = inverse) and the
meridian words.  Prints the normalized polynomial per link.
"""
import json
import sys

import sympy as sp


def word_vec(w, gens):
    v = [0] * len(gens)
    for ch in w:
        i = gens.index(ch.lower())
        v[i] += 1 if ch.islower() else -1
    return v


def abelianization_map(pres):
    gens = pres["generators"]
    g = len(gens)
    R = sp.Matrix([word_vec(r, gens) for r in pres["relators"]])
    Mer = sp.Matrix([word_vec(m, gens) for m in pres["meridians"]])
    k = Mer.rows
    P = sp.Matrix(k, g, lambda i, j: sp.Symbol(f"p{i}_{j}"))
    eqs = list(P * R.T) + list(P * Mer.T - sp.eye(k))
    sol = sp.solve(eqs, list(P), dict=True)
    assert len(sol) == 1, "abelianization not determined"
    return P.subs(sol[0])


def mva(pres):
    gens = pres["generators"]
    P = abelianization_map(pres)
    k = P.rows
    ts = sp.symbols(f"t0:{k}")

    def image(vec):
        return sp.Mul(*[ts[i] ** sum(P[i, j] * vec[j] for j in range(len(gens))) for i in range(k)])

    def fox(w, j):
        total = 0
        prefix = [0] * len(gens)
        for ch in w:
            i = gens.index(ch.lower())
            if i == j:
                if ch.islower():
                    total += image(prefix)
                else:
                    pre = list(prefix)
                    pre[i] -= 1
                    total -= image(pre)
            prefix[i] += 1 if ch.islower() else -1
        return total

    J = sp.Matrix([[fox(r, j) for j in range(len(gens))] for r in pres["relators"]])
    unit = [0] * len(gens)
    for col in range(len(gens)):
        e = list(unit)
        e[col] = 1
        img = image(e)
        if sp.simplify(img - 1) == 0:
            continue
        minor = J[:, [c for c in range(len(gens)) if c != col]]
        det = sp.cancel(sp.together(minor.det()))
        if k == 1:
            return normal_form(det, ts)
        return normal_form(sp.cancel(det / (img - 1)), ts)
    raise RuntimeError("no usable column")


def normal_form(expr, ts):
    num, den = sp.fraction(sp.cancel(sp.together(expr)))
    poly = sp.Poly(sp.expand(num), *ts)
    terms = poly.terms()
    if not terms:
        return {}
    mins = [min(m[i] for m, _ in terms) for i in range(len(ts))]
    out = {tuple(m[i] - mins[i] for i in range(len(ts))): int(c) for m, c in terms}
    lead = max(out)
    if out[lead] < 0:
        out = {e: -c for e, c in out.items()}
    return out


if __name__ == "__main__":
    data = json.load(open(sys.argv[1]))
    res = {}
    for pres in data:
        res[pres["name"]] = sorted([list(e) + [c] for e, c in mva(pres).items()])
    json.dump(res, sys.stdout)
