#!/usr/bin/env python3
"""Generate the embedded LDPC parity-address tables in src/dvbs2_tables.cpp.

Produces IRA parity-check codes with the DVB-S2 64800-bit frame structure:

  rate 3/4: K=48600, P=16200, q=45, 135 groups of 360 bits,
            15 groups of degree 12 + 120 groups of degree 3, check degree 14
  rate 4/5: K=51840, P=12960, q=36, 144 groups of 360 bits,
            18 groups of degree 11 + 126 groups of degree 3, check degree 18

Bit m of group i connects to checks (x + m*q) mod P for each table entry x
of row i; parity bits form the usual accumulator chain.  Entries are drawn
pseudo-randomly (fixed seed) subject to:
  * each residue class r = x mod q is used exactly (dc-2) times overall,
    which makes every check degree uniform;
  * no 4-cycles anywhere in the resulting H (verified exhaustively below);
  * no info bit touches two consecutive checks (would form a 4-cycle
    through an accumulator bit).

Run from the repository root:  python3 scripts/gen_parity_tables.py
"""

import random
import sys
from collections import defaultdict

CONFIGS = [
    # (name, K, P, q, high_rows, high_deg, seed)
    ("r34", 48600, 16200, 45, 15, 12, 0x75A35901),
    ("r45", 51840, 12960, 36, 18, 11, 0x75A35902),
]


def gen_table(K, P, q, high_rows, high_deg, seed):
    rows = K // 360
    degs = [high_deg] * high_rows + [3] * (rows - high_rows)
    total = sum(degs)
    assert total % q == 0
    quota_per_r = total // q  # = check degree - 2

    rng = random.Random(seed)
    quota = [quota_per_r] * q
    per_r = defaultdict(list)       # r -> list of (row, a)
    self_delta = [set() for _ in range(rows)]   # per-row deltas of same-r pairs
    cross_delta = defaultdict(set)  # (i,j) i<j -> set of oriented deltas
    table = [[] for _ in range(rows)]

    def ok(i, r, a):
        # duplicate / same-row constraints
        new_self = []
        for (j, aj) in per_r[r]:
            if j == i:
                d1 = (a - aj) % 360
                d2 = (aj - a) % 360
                if d1 in (0, 180) or d1 in self_delta[i] or d2 in self_delta[i]:
                    return None
                new_self += [d1, d2]
        # accumulator adjacency: two entries of one row must not address
        # consecutive checks c, c+1 for any bit of the group
        for (rr, aa) in table[i]:
            if (rr == r + 1 and aa == a) or (rr == r - 1 and aa == a):
                return None
            if r == q - 1 and rr == 0 and aa == (a + 1) % 360:
                return None
            if rr == q - 1 and r == 0 and a == (aa + 1) % 360:
                return None
        # cross-row 4-cycles
        new_cross = []
        for (j, aj) in per_r[r]:
            if j == i:
                continue
            if i < j:
                key, d = (i, j), (a - aj) % 360
            else:
                key, d = (j, i), (aj - a) % 360
            if d in cross_delta[key] or d in [x[1] for x in new_cross if x[0] == key]:
                return None
            new_cross.append((key, d))
        return new_self, new_cross

    for i in range(rows):
        for _ in range(degs[i]):
            for attempt in range(20000):
                r = rng.choices(range(q), weights=quota)[0]
                a = rng.randrange(360)
                res = ok(i, r, a)
                if res is not None:
                    break
            else:
                raise RuntimeError("generation stuck; change seed")
            new_self, new_cross = res
            self_delta[i].update(new_self)
            for key, d in new_cross:
                cross_delta[key].add(d)
            per_r[r].append((i, a))
            quota[r] -= 1
            table[i].append((r, a))
    assert all(x == 0 for x in quota)
    return [[a * q + r for (r, a) in row] for row in table], degs


def verify(name, K, P, q, table, degs):
    # build full H (as check -> bit lists) and count 4-cycles exhaustively
    checks = [[] for _ in range(P)]
    for i, row in enumerate(table):
        assert len(row) == degs[i]
        assert len(set(row)) == len(row)
        for x in row:
            assert 0 <= x < P
            for m in range(360):
                checks[(x + m * q) % P].append(i * 360 + m)
    for j in range(P):
        checks[j].append(K + j)
        if j + 1 < P:
            checks[j + 1].append(K + j)
    degset = sorted(set(len(c) for c in checks))
    pairs = set()
    for c in checks:
        c = sorted(c)
        for u in range(len(c)):
            for v in range(u + 1, len(c)):
                key = c[u] * (K + P) + c[v]
                if key in pairs:
                    raise RuntimeError(f"{name}: 4-cycle at bits {c[u]},{c[v]}")
                pairs.add(key)
    print(f"{name}: rows={len(table)} entries={sum(degs)} check degrees={degset} "
          f"edges={len(pairs)} no 4-cycles")


def emit(results):
    out = ["// Parity-address tables for the 64800-bit IRA LDPC codes.",
           "// Generated by scripts/gen_parity_tables.py (fixed seeds); do not hand-edit.",
           "",
           '#include "dvbs2_tables.h"',
           "",
           "namespace pas::dvbs2 {",
           ""]
    for name, table, degs, q in results:
        flat = [str(x) for row in table for x in row]
        out.append(f"const int k_{name}_degrees[{len(degs)}] = {{")
        for i in range(0, len(degs), 30):
            out.append("    " + ", ".join(str(d) for d in degs[i:i + 30]) + ",")
        out.append("};")
        out.append(f"const int k_{name}_entries[{len(flat)}] = {{")
        for i in range(0, len(flat), 14):
            out.append("    " + ", ".join(flat[i:i + 14]) + ",")
        out.append("};")
        out.append(f"const int k_{name}_rows = {len(degs)};")
        out.append(f"const int k_{name}_q = {q};")
        out.append("")
    out.append("}  // namespace pas::dvbs2")
    out.append("")
    return "\n".join(out)


def main():
    results = []
    for name, K, P, q, hr, hd, seed in CONFIGS:
        table, degs = gen_table(K, P, q, hr, hd, seed)
        verify(name, K, P, q, table, degs)
        results.append((name, table, degs, q))
    with open("src/dvbs2_tables.cpp", "w") as f:
        f.write(emit(results))
    print("wrote src/dvbs2_tables.cpp")


if __name__ == "__main__":
    sys.exit(main())
