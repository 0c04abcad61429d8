#!/usr/bin/env python3
"""Graded dimensions of U(sl2)/Ann(M_0) at q = 1.

U(sl2) is filtered by PBW degree (deg e = deg f = deg h = 1). Its image in
End(M_0), M_0 the Verma module of highest weight 0, is U/Ann(M_0). We act on
the span of f^n v (n < N) with exact rational arithmetic and record the rank
of the image of F_j U for each j; mu_j = rank_j - rank_{j-1}.

Writes mu_reference_a1.json next to this script.
"""

import json
import os
import sys
from fractions import Fraction


def act(letter, vec, lam):
    """Apply e, f or h to a vector {n: coeff} in M_lam (basis f^n v)."""
    out = {}
    for n, c in vec.items():
        if letter == "f":
            key, val = n + 1, c
        elif letter == "h":
            key, val = n, c * (lam - 2 * n)
        else:  # e f^n v = n (lam - n + 1) f^{n-1} v
            if n == 0:
                continue
            key, val = n - 1, c * n * (lam - n + 1)
        if val:
            out[key] = out.get(key, 0) + val
    return {k: v for k, v in out.items() if v}


def pbw_monomials(deg):
    for a in range(deg + 1):
        for b in range(deg + 1 - a):
            yield a, b, deg - a - b


def operator_vector(a, b, c, lam, n_cols):
    """f^a h^b e^c on f^n v for n < n_cols, flattened into one sparse row."""
    row = {}
    for n in range(n_cols):
        vec = {n: Fraction(1)}
        for letter, k in (("e", c), ("h", b), ("f", a)):
            for _ in range(k):
                vec = act(letter, vec, lam)
        for m, x in vec.items():
            row[(n, m)] = x
    return row


def rank(rows):
    pivots = {}
    r = 0
    for row in rows:
        row = dict(row)
        while row:
            key = min(row)
            if key in pivots:
                p = pivots[key]
                f = row[key]
                for k, v in p.items():
                    row[k] = row.get(k, 0) - f * v
                    if row[k] == 0:
                        del row[k]
            else:
                lead = row[key]
                pivots[key] = {k: v / lead for k, v in row.items()}
                r += 1
                break
    return r


def mu(j_max, lam=0):
    n_cols = 3 * j_max + 4
    rows = []
    ranks = []
    for j in range(j_max + 1):
        rows.extend(operator_vector(a, b, c, lam, n_cols) for a, b, c in pbw_monomials(j))
        ranks.append(rank(rows))
    return [ranks[0]] + [ranks[j] - ranks[j - 1] for j in range(1, j_max + 1)]


def main():
    j_max = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    values = mu(j_max)
    out = {"datum": "A1", "lambda": 0, "mu": values}
    path = os.path.join(os.path.dirname(os.path.abspath(__file__)), "mu_reference_a1.json")
    with open(path, "w") as fh:
        json.dump(out, fh, indent=2)
        fh.write("\n")
    print(values)


if __name__ == "__main__":
    main()
