#!/usr/bin/env python3
"""Dense-rank oracle for the Rota-Baxter family and combined complexes.

Works on fixtures carrying a "rota_baxter" family, over the regular bimodule
with T = R.  The star structures, Phi and the combined differential are built
here from their defining formulas; only the raw coboundary and the exact rank
come from hochschild.py.

    python3 tools/oracle/rbfa.py fixtures --max-degree 3 [--write OUT | --check OUT]
"""

import argparse
import itertools
import json
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent))
from hochschild import (  # noqa: E402
    Structure,
    constraints,
    delta,
    family,
    identity_batch,
    on_slot,
    rank,
    rat,
    raw_dim,
)

CASES = ["e0_rbfa", "e1", "zero2_rbf", "c2_example", "idempotent_example"]


def star(s, R, lam):
    """A-star with M-star over it, for M = A and T = R."""
    t = Structure.__new__(Structure)
    t.__dict__.update(s.__dict__)
    t.mu, t.left, t.right = {}, {}, {}
    for (a, b), mu in s.mu.items():
        ab = s.table[a][b]
        t.mu[a, b] = np.einsum("irk,rj->ijk", mu, R[b]) + np.einsum("rjk,ri->ijk", mu, R[a]) + lam * mu
        t.left[a, b] = np.einsum("rjk,ri->ijk", s.left[a, b], R[a]) - np.einsum("ijr,kr->ijk", s.left[a, b], R[ab])
        t.right[a, b] = np.einsum("jrk,ri->jik", s.right[a, b], R[b]) - np.einsum("jir,kr->jik", s.right[a, b], R[ab])
    return t


def phi(s, R, lam, F, n):
    """f(R, ..., R) minus the lambda-weighted T f over proper subsets of R-slots."""
    if n == 0:
        return F.copy()
    out = np.zeros_like(F)
    for ws in itertools.product(range(s.W), repeat=n):
        f = F[(slice(None),) + ws]
        T = R[s.prod(ws)]
        acc = np.zeros_like(f)
        for mask in range(1 << n):
            h = f
            for slot in range(n):
                if mask >> slot & 1:
                    h = on_slot(h, slot, R[ws[slot]])
            k = bin(mask).count("1")
            if k == n:
                acc = acc + h
            else:
                acc = acc - lam ** (n - k - 1) * h.dot(T.T)
        out[(slice(None),) + ws] = acc
    return out


def flat(x):
    return x.reshape(x.shape[0], -1)


def combined(s, st, R, lam, max_degree):
    cochains, ranks = [], []
    for n in range(max_degree + 1):
        if n == 0:
            E = constraints(s, 0)
            F = identity_batch(s, 0)
            D = np.hstack([flat(delta(s, F, 0)), -flat(F)]).T
        else:
            Ea, Er = constraints(s, n), constraints(st, n - 1)
            E = np.block([
                [Ea, np.zeros((Ea.shape[0], Er.shape[1]), dtype=object)],
                [np.zeros((Er.shape[0], Ea.shape[1]), dtype=object), Er],
            ])
            F = identity_batch(s, n)
            G = identity_batch(st, n - 1)
            top = np.hstack([flat(delta(s, F, n)), -flat(phi(s, R, lam, F, n))])
            bot = np.hstack([np.zeros((G.shape[0], raw_dim(s, n + 1)), dtype=object), -flat(delta(st, G, n - 1))])
            D = np.vstack([top, bot]).T
        re = rank(E)
        cochains.append(E.shape[1] - re)
        ranks.append(rank(np.vstack([E, D])) - re)
    return cochains, ranks


def plain(s, max_degree):
    cochains, ranks = [], []
    for n in range(max_degree + 1):
        E = constraints(s, n)
        D = flat(delta(s, identity_batch(s, n), n)).T
        re = rank(E)
        cochains.append(E.shape[1] - re)
        ranks.append(rank(np.vstack([E, D])) - re)
    return cochains, ranks


def table(cochains, ranks):
    h = [cochains[n] - ranks[n] - (ranks[n - 1] if n else 0) for n in range(len(cochains))]
    return {"cochains": cochains, "h": h}


def case(doc, max_degree):
    s = Structure(doc)
    rb = doc["rota_baxter"]
    R = family(rb["r"], s.W)
    lam = rat(rb["weight"])
    st = star(s, R, lam)
    return {
        "rbf": table(*plain(st, max_degree)),
        "rbfa": table(*combined(s, st, R, lam, max_degree)),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("fixtures")
    ap.add_argument("--max-degree", type=int, default=3)
    ap.add_argument("--write")
    ap.add_argument("--check")
    ap.add_argument("cases", nargs="*")
    args = ap.parse_args()
    out = {}
    for name in args.cases or CASES:
        doc = json.loads((Path(args.fixtures) / (name + ".json")).read_text())
        out[name] = case(doc, args.max_degree)
        print(name, out[name], file=sys.stderr)
    text = json.dumps({"cases": out, "max_degree": args.max_degree}, indent=2, sort_keys=True) + "\n"
    if args.write:
        Path(args.write).write_text(text)
    if args.check:
        frozen = json.loads(Path(args.check).read_text())
        if frozen["cases"] != out:
            print("MISMATCH against", args.check, file=sys.stderr)
            return 1
        print("oracle agrees with", args.check, file=sys.stderr)
    if not args.write and not args.check:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
