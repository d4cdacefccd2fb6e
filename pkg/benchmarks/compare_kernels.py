#!/usr/bin/env python3
"""Compare the compiled and pure-Python search kernels.

Two views: end-to-end solves through the public API, and raw infeasibility
proofs (searching one class below the true value), which is where the
backtracking kernel spends its time.

Run: python3 benchmarks/compare_kernels.py
"""

from __future__ import annotations

import random
import time

import domchrom as dc
from domchrom import solver
from domchrom.graph import bits, make_graph

SOLVE_SUITE = [
    "path:14",
    "cycle:14",
    "circulant:14:1,3",
    "circulant:16:1,3",
    "ladder:7",
    "prism:8",
    "grid:4x5",
    "grid:4x6",
    "tchain:7",
    "parahex:3",
    "metahex:3",
]

UNSAT_SUITE = [
    "circulant:13:1,3",
    "ladder:7",
    "prism:7",
    "grid:3x5",
    "parahex:3",
]


def local_masks(g):
    order = solver._degeneracy_order(list(g.adj))
    pos = {v: i for i, v in enumerate(order)}
    out = []
    for v in order:
        mask = 0
        for u in bits(g.adj[v]):
            mask |= 1 << pos[u]
        out.append(mask)
    return out


def time_call(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t)
    return best, result


def random_suite(seed=99, count=4):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(13, 16)
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.25
        ]
        g = make_graph(n, edges)
        if not g.isolated_vertices():
            out.append((f"random(n={n})", g))
    return out


def main() -> None:
    backends = dc.available_backends()
    print(f"available backends: {', '.join(backends)}")
    if "compiled" not in backends:
        print("compiled kernel not built; timing the python kernel only")

    print("\nend-to-end dom_chromatic")
    header = f"{'instance':<20}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for text in SOLVE_SUITE + [name for name, _ in random_suite()]:
        if text.startswith("random"):
            g = dict(random_suite())[text]
        else:
            g = dc.generate(dc.parse_family(text))
        times = {}
        values = set()
        for b in backends:
            dt, (k, _) = time_call(lambda b=b: dc.dom_chromatic(g, backend=b))
            times[b] = dt
            values.add(k)
        assert len(values) == 1, f"backends disagree on {text}"
        row = f"{text:<20}" + "".join(f"{times[b] * 1e3:>10.2f}ms" for b in backends)
        if "compiled" in times and times["compiled"] > 0:
            row += f"{times['python'] / times['compiled']:>9.1f}x"
        print(row)

    print("\nraw infeasibility proofs (k = value - 1)")
    print(header)
    print("-" * len(header))
    for text in UNSAT_SUITE:
        g = dc.generate(dc.parse_family(text))
        k = dc.dom_chromatic(g)[0] - 1
        masks = local_masks(g)
        times = {}
        for b in backends:
            mod = solver._BACKENDS[b]
            dt, res = time_call(lambda mod=mod: mod.find_coloring(masks, k))
            assert res is None
            times[b] = dt
        row = f"{text:<20}" + "".join(f"{times[b] * 1e3:>10.2f}ms" for b in backends)
        if "compiled" in times and times["compiled"] > 0:
            row += f"{times['python'] / times['compiled']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
