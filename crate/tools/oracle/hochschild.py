#!/usr/bin/env python3
"""Dense-rank oracle for BiHom-Omega Hochschild cohomology dimensions.

Reads workbench fixture files directly, builds the coboundary on the raw
cochain spaces with numpy integer tensors, and computes ranks exactly with
Fractions.  Shares no code with the Rust workbench.

    python3 tools/oracle/hochschild.py fixtures --max-degree 3 [--write OUT]

With --check OUT the computed table must equal the frozen file.
"""

import argparse
import itertools
import json
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

CASES = [
    "e0",
    "zero1",
    "e1",
    "e1_module",
    "zero2_rbf",
    "c2_example",
    "idempotent_example",
    "dual_twist",
]


def rat(s):
    f = Fraction(s)
    return int(f) if f.denominator == 1 else f


def mat(rows):
    return np.array([[rat(x) for x in r] for r in rows], dtype=object)


def family(block, size):
    return [mat(block[str(w)]) for w in range(size)]


def products(block, size):
    out = {}
    for a in range(size):
        for b in range(size):
            t = block["%d,%d" % (a, b)]
            out[a, b] = np.array([[[rat(x) for x in v] for v in row] for row in t], dtype=object)
    return out


class Structure:
    def __init__(self, doc):
        mon = doc["monoid"]
        self.table = mon["table"]
        self.unit = mon["unit"]
        self.W = len(self.table)
        alg = doc["algebra"]
        self.d = alg["dim"]
        self.mu = products(alg["mu"], self.W)
        self.p = family(alg["p"], self.W)
        self.q = family(alg["q"], self.W)
        bm = doc.get("bimodule")
        if bm is None:
            self.m = self.d
            self.left = self.mu
            self.right = self.mu
            self.pm = self.p
            self.qm = self.q
        else:
            self.m = bm["dim"]
            self.left = products(bm["left"], self.W)
            self.right = products(bm["right"], self.W)
            self.pm = family(bm["p"], self.W)
            self.qm = family(bm["q"], self.W)

    def prod(self, ws):
        acc = self.unit
        for w in ws:
            acc = self.table[acc][w]
        return acc


def power(m, k):
    out = np.identity(m.shape[0], dtype=object)
    for _ in range(k):
        out = m.dot(out)
    return out


def on_slot(t, slot, m):
    """Substitutes x -> m x into argument `slot` (axis slot+1; axis 0 is the batch)."""
    # new[..., a, ...] = sum_r m[r, a] t[..., r, ...]
    moved = np.moveaxis(t, slot + 1, -1)
    return np.moveaxis(moved.dot(m), -1, slot + 1)


def raw_shape(s, n):
    return (s.W,) * n + (s.d,) * n + (s.m,)


def raw_dim(s, n):
    return s.W ** n * s.d ** n * s.m


def identity_batch(s, n):
    r = raw_dim(s, n)
    return np.identity(r, dtype=object).reshape((r,) + raw_shape(s, n))


def delta(s, F, n):
    """Coboundary of a batch F of shape (R, W^n, d^n, m)."""
    R = F.shape[0]
    out = np.zeros((R,) + raw_shape(s, n + 1), dtype=object)
    if n == 0:
        for a in range(s.W):
            g = F  # (R, m)
            lt = np.einsum("ijk,bj->bik", s.left[a, s.unit], g)
            rt = np.einsum("jik,bj->bik", s.right[s.unit, a], g)
            out[(slice(None), a)] = lt - rt
        return out
    for ws in itertools.product(range(s.W), repeat=n + 1):
        acc = np.zeros((R,) + (s.d,) * (n + 1) + (s.m,), dtype=object)
        # first term
        g = F[(slice(None),) + ws[1:]]
        P = power(s.p[ws[0]], n - 1)
        L = s.left[ws[0], s.prod(ws[1:])]
        PL = np.tensordot(P, L, axes=([0], [0]))  # (a1, j, k)
        gm = np.moveaxis(g, -1, 1)  # (R, j, a2..)
        t = np.tensordot(gm, PL, axes=([1], [1]))  # (R, a2.., a1, k)
        acc += np.moveaxis(t, -2, 1)
        # middle terms
        for i in range(1, n + 1):
            merged = ws[: i - 1] + (s.table[ws[i - 1]][ws[i]],) + ws[i + 1:]
            h = F[(slice(None),) + merged]
            for slot in range(n):
                if slot < i - 1:
                    h = on_slot(h, slot, s.p[ws[slot]])
                elif slot > i - 1:
                    h = on_slot(h, slot, s.q[ws[slot + 1]])
            mu = s.mu[ws[i - 1], ws[i]]  # (a, b, r)
            moved = np.moveaxis(h, i, -1)  # (R, ..., k, r)
            t = moved.dot(mu.transpose(2, 0, 1).reshape(s.d, s.d * s.d))
            t = t.reshape(t.shape[:-1] + (s.d, s.d))  # (R, others.., k, a, b)
            t = np.moveaxis(t, (-2, -1), (i, i + 1))
            sign = -1 if i % 2 else 1
            acc += sign * t
        # last term
        g = F[(slice(None),) + ws[:n]]
        Q = power(s.q[ws[n]], n - 1)
        Rt = s.right[s.prod(ws[:n]), ws[n]]  # (j, r, k)
        RQ = np.tensordot(Rt, Q, axes=([1], [0]))  # (j, k, a)
        t = np.tensordot(g, RQ, axes=([-1], [0]))  # (R, a1..an, k, a)
        t = np.swapaxes(t, -1, -2)
        sign = -1 if (n + 1) % 2 else 1
        acc += sign * t
        out[(slice(None),) + ws] = acc
    return out


def constraints(s, n):
    """Rows whose kernel is the equivariant subspace of the raw degree-n space."""
    F = identity_batch(s, n)
    R = F.shape[0]
    res = []
    for struct, mod in ((s.p, s.pm), (s.q, s.qm)):
        E = np.zeros_like(F)
        for ws in itertools.product(range(s.W), repeat=n):
            f = F[(slice(None),) + ws]
            lhs = f.dot(mod[s.prod(ws)].T)
            rhs = f
            for slot in range(n):
                rhs = on_slot(rhs, slot, struct[ws[slot]])
            E[(slice(None),) + ws] = lhs - rhs
        res.append(E.reshape(R, -1).T)
    return np.vstack(res)


def rank(rows):
    """Exact rank by Fraction elimination on sparse rows."""
    pivots = {}
    r = 0
    for row in rows:
        v = {j: Fraction(x) for j, x in enumerate(row) if x != 0}
        while v:
            j = min(v)
            if j in pivots:
                pv = pivots[j]
                c = v[j]
                for k, x in pv.items():
                    y = v.get(k, 0) - c * x
                    if y:
                        v[k] = y
                    else:
                        v.pop(k, None)
            else:
                c = v[j]
                pivots[j] = {k: x / c for k, x in v.items()}
                r += 1
                break
    return r


def cohomology(s, max_degree):
    cochains, ranks = [], []
    for n in range(max_degree + 1):
        E = constraints(s, n)
        D = delta(s, identity_batch(s, n), n).reshape(raw_dim(s, n), -1).T
        re = rank(E)
        red = rank(np.vstack([E, D]))
        cochains.append(raw_dim(s, n) - re)
        ranks.append(red - re)
    h = []
    for n in range(max_degree + 1):
        z = cochains[n] - ranks[n]
        b = ranks[n - 1] if n else 0
        h.append(z - b)
    return {"cochains": cochains, "h": h}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("fixtures")
    ap.add_argument("--max-degree", type=int, default=3)
    ap.add_argument("--write")
    ap.add_argument("--check")
    ap.add_argument("cases", nargs="*")
    args = ap.parse_args()
    names = args.cases or CASES
    table = {}
    for name in names:
        doc = json.loads((Path(args.fixtures) / (name + ".json")).read_text())
        table[name] = cohomology(Structure(doc), args.max_degree)
        print(name, table[name], file=sys.stderr)
    out = json.dumps({"cases": table, "max_degree": args.max_degree}, indent=2, sort_keys=True) + "\n"
    if args.write:
        Path(args.write).write_text(out)
    if args.check:
        frozen = json.loads(Path(args.check).read_text())
        if frozen["cases"] != table:
            print("MISMATCH against", args.check, file=sys.stderr)
            return 1
        print("oracle agrees with", args.check, file=sys.stderr)
    if not args.write and not args.check:
        sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
