"""Independent reference values for the C++ test suite.

Pure Python: brute-force covers, group closure by explicit element products,
LP optima from scipy rounded to fractions and then certified exactly, and
high-precision signs of a + b*sqrt(2) from mpmath. Run from the repository
root; the printed values are frozen into tests/*.cpp.
"""
import itertools
import json
import sys
from fractions import Fraction

import mpmath
from scipy.optimize import linprog


def load(name):
    with open(f"fixtures/{name}.json") as f:
        doc = json.load(f)
    vertices = sorted(doc["vertices"])
    edges = sorted({tuple(sorted(e)) for e in doc["edges"]})
    gens = []
    for g in doc.get("group", {}).get("generators", []):
        gens.append({v: g.get(v, v) for v in vertices})
    return vertices, edges, gens


def group(vertices, gens):
    ident = tuple(vertices)
    index = {v: i for i, v in enumerate(vertices)}
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for el in frontier:
            for g in gens:
                prod = tuple(g[el[index[v]]] for v in vertices)
                if prod not in elems:
                    elems.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return [dict(zip(vertices, el)) for el in elems]


def orbits(vertices, elems):
    seen, out = set(), []
    for v in vertices:
        if v in seen:
            continue
        orb = frozenset(g[v] for g in elems)
        seen |= orb
        out.append(orb)
    return out


def closure(edges, elems):
    # Distinct-image selections {g_1 v_1, ..., g_l v_l}, one group element per vertex.
    out = set()
    for e in edges:
        for choice in itertools.product(elems, repeat=len(e)):
            image = [g[v] for g, v in zip(choice, e)]
            if len(set(image)) == len(image):
                out.add(tuple(sorted(image)))
    return sorted(out)


def is_cover(edges, s):
    return all(any(v in s for v in e) for e in edges)


def tau(vertices, edges):
    for k in range(len(vertices) + 1):
        for s in itertools.combinations(vertices, k):
            if is_cover(edges, set(s)):
                return k


def tau_g(vertices, edges, orbs):
    best = None
    for mask in range(1 << len(orbs)):
        s = set().union(*[o for i, o in enumerate(orbs) if mask >> i & 1])
        if is_cover(edges, s) and (best is None or len(s) < best):
            best = len(s)
    return best


def tau_star(vertices, edges):
    n, m = len(vertices), len(edges)
    idx = {v: i for i, v in enumerate(vertices)}
    a = [[-1.0 if v in e else 0.0 for v in vertices] for e in edges]
    primal = linprog([1.0] * n, A_ub=a, b_ub=[-1.0] * m, bounds=[(0, 1)] * n, method="highs")
    at = [[1.0 if v in e else 0.0 for e in edges] for v in vertices]
    dual = linprog([-1.0] * m, A_ub=at, b_ub=[1.0] * n, bounds=[(0, None)] * m, method="highs")
    t = [Fraction(x).limit_denominator(1000) for x in primal.x]
    y = [Fraction(x).limit_denominator(1000) for x in dual.x]
    assert all(sum(t[idx[v]] for v in e) >= 1 for e in edges)
    assert all(sum(y[j] for j, e in enumerate(edges) if v in e) <= 1 for v in vertices)
    assert sum(t) == sum(y), (sum(t), sum(y))
    return sum(t)


def tau_g_star(vertices, edges, orbs):
    # Orbit-constant covers: variable x_O, size sum |O| x_O.
    k, m = len(orbs), len(edges)
    a = [[-float(len(set(e) & o)) for o in orbs] for e in edges]
    res = linprog([float(len(o)) for o in orbs], A_ub=a, b_ub=[-1.0] * m,
                  bounds=[(0, 1)] * k, method="highs")
    x = [Fraction(v).limit_denominator(1000) for v in res.x]
    assert all(sum(len(set(e) & o) * x[i] for i, o in enumerate(orbs)) >= 1 for e in edges)
    value = sum(len(o) * x[i] for i, o in enumerate(orbs))
    assert abs(float(value) - res.fun) < 1e-9
    return value


def d_coeff(edges, orbs):
    return max(Fraction(len(o), len(o - set(e)) + 1) for e in edges for o in orbs)


def fixture_report(name):
    vertices, edges, gens = load(name)
    elems = group(vertices, gens)
    orbs = orbits(vertices, elems)
    closed = closure(edges, elems)
    print(f"[{name}] |V|={len(vertices)} |E|={len(edges)} |G|={len(elems)}"
          f" orbit sizes={sorted(len(o) for o in orbs)}")
    print(f"  tau={tau(vertices, edges)} tau_g={tau_g(vertices, edges, orbs)}"
          f" tau*={tau_star(vertices, edges)} tau_g*={tau_g_star(vertices, edges, orbs)}"
          f" d={d_coeff(edges, orbs)}")
    print(f"  closure |E|={len(closed)} tau={tau(vertices, closed)}"
          f" tau_g={tau_g(vertices, closed, orbs)} tau*={tau_star(vertices, closed)}"
          f" tau_g*={tau_g_star(vertices, closed, orbs)}")


def k3():
    vertices = ["a", "b", "c"]
    edges = [("a", "b"), ("a", "c"), ("b", "c")]
    print(f"[K3] tau={tau(vertices, edges)} tau*={tau_star(vertices, edges)}")


SURD_CASES = [
    # (a, b) meaning a + b*sqrt(2)
    ("0", "0"), ("1", "0"), ("-1", "0"), ("0", "1"), ("0", "-1"),
    ("3", "-2"), ("-3", "2"), ("3/2", "-1"), ("-7", "5"), ("7", "-5"),
    ("17", "-12"), ("-17", "12"), ("99", "-70"), ("-99", "70"),
    ("9/2", "-2"), ("3/2", "0"), ("577", "-408"), ("-577", "408"),
    ("1/3", "-1/4"), ("-239/169", "1"),
]


def surd_signs():
    mpmath.mp.dps = 80
    for a, b in SURD_CASES:
        value = mpmath.mpf(Fraction(a).numerator) / Fraction(a).denominator + \
            mpmath.mpf(Fraction(b).numerator) / Fraction(b).denominator * mpmath.sqrt(2)
        sign = 0 if value == 0 else (1 if value > 0 else -1)
        print(f'  {{"{a}", "{b}", {sign}}},  // {mpmath.nstr(value, 12)}')


if __name__ == "__main__":
    for name in sys.argv[1:] or ["fig1", "cube_faces", "cube_edges"]:
        fixture_report(name)
    k3()
    print("[surd signs]")
    surd_signs()
