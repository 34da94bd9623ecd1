"""Raw pairing entries chi_lambda(phi(S(y) x)) by naive word rewriting.

Prints C++ initializer rows {"x", "y", {c0, c1, ...}} for the unit tests.
Words are normal ordered with n_- < g_0 < n_+ by repeated adjacent swaps.
"""

import itertools
import sys
from functools import lru_cache

import sympy as sp

lam = sp.Symbol("lambda")


class Algebra:
    def __init__(self, degrees, bracket, chi):
        self.degrees = degrees  # name -> degree
        self.bracket = bracket  # (a, b) -> {name: coeff}
        self.chi = chi  # name -> value on g_0

    def rank(self, g):
        d = self.degrees[g]
        return (0 if d < 0 else 1 if d == 0 else 2, d, g)


def virasoro(delta, c, top):
    names = {f"L{n}": n for n in range(-2 * top, 2 * top + 1)}
    names["C"] = 0

    def br(a, b):
        if a == "C" or b == "C":
            return {}
        n, m = names[a], names[b]
        out = {}
        if n != m:
            out[f"L{n + m}"] = sp.Integer(n - m)
        if n + m == 0 and n != 0:
            out["C"] = sp.Rational(n**3 - n, 12)
        return out

    return Algebra(names, br, {"L0": delta, "C": c})


def sl2(z):
    br_table = {("e", "f"): {"h": 1}, ("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}}

    def br(a, b):
        if (a, b) in br_table:
            return dict(br_table[(a, b)])
        if (b, a) in br_table:
            return {k: -v for k, v in br_table[(b, a)].items()}
        return {}

    return Algebra({"f": -1, "h": 0, "e": 1}, br, {"h": z})


def heisenberg(n, w):
    degrees = {"c": 0}
    for i in range(1, n + 1):
        degrees[f"q{i}"] = -1
        degrees[f"p{i}"] = 1

    def br(a, b):
        if a.startswith("p") and b.startswith("q") and a[1:] == b[1:]:
            return {"c": 1}
        if a.startswith("q") and b.startswith("p") and a[1:] == b[1:]:
            return {"c": -1}
        return {}

    return Algebra(degrees, br, {"c": w})


def pairing(alg, x, y):
    @lru_cache(maxsize=None)
    def value(word):
        # chi_lambda of the U g_0 part of the normal form of `word`
        for i in range(len(word) - 1):
            a, b = word[i], word[i + 1]
            if alg.rank(a) > alg.rank(b):
                total = value(word[:i] + (b, a) + word[i + 2 :])
                for g, k in alg.bracket(a, b).items():
                    total += k * value(word[:i] + (g,) + word[i + 2 :])
                return sp.expand(total)
        if any(alg.degrees[g] != 0 for g in word):
            return sp.Integer(0)
        out = sp.Integer(1)
        for g in word:
            out *= lam * alg.chi.get(g, 0)
        return out

    sign = (-1) ** len(y)
    return sp.expand(sign * value(tuple(reversed(y)) + tuple(x)))


def monomial_text(word):
    groups = [(g, len(list(it))) for g, it in itertools.groupby(word)]
    return "*".join(g if k == 1 else f"{g}^{k}" for g, k in groups) or "1"


def rows(alg, pairs):
    for x, y in pairs:
        p = sp.Poly(pairing(alg, x, y), lam)
        coeffs = list(reversed(p.all_coeffs())) if not p.is_zero else []
        text = ", ".join(f'"{sp.nsimplify(c)}"' for c in coeffs)
        print(f'    {{"{monomial_text(x)}", "{monomial_text(y)}", {{{text}}}}},')


def partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def virasoro_pairs(n):
    # x ordered most negative first, y ordered L1 < L2 < ...
    out = []
    for px in partitions(n):
        for py in partitions(n):
            out.append(([f"L{-k}" for k in px], [f"L{k}" for k in sorted(py)]))
    return out


def main():
    which = sys.argv[1]
    if which == "sl2":
        for z in (sp.Integer(1), sp.Integer(2), sp.Rational(5, 3)):
            print(f"  // z = {z}")
            rows(sl2(z), [(["f"] * n, ["e"] * n) for n in range(1, 5)] + [(["f", "f"], ["e"])])
    elif which == "virasoro":
        for delta, c in ((1, 1), (2, sp.Rational(-1, 2))):
            print(f"  // delta = {delta}, c = {c}")
            for n in range(1, 4):
                rows(virasoro(sp.sympify(delta), sp.sympify(c), 3), virasoro_pairs(n))
    elif which == "heisenberg":
        alg = heisenberg(2, sp.Rational(3, 2))
        rows(alg, [(["q1", "q2"], ["p1", "p2"]), (["q1", "q1"], ["p1", "p1"]), (["q1"], ["p2"]),
                   (["q1", "q1", "q2"], ["p1", "p1", "p2"])])


if __name__ == "__main__":
    main()
