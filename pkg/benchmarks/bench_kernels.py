"""Compare the compiled and pure-Python search kernels on hard decision instances.

All instances fit the compiled kernel (at most 64 edges and 64 pairs). Both
kernels must return the same answer and node count; the script exits 1 if not.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]
"""

import argparse
import sys
import time

from sgeodetic import verifier
from sgeodetic.families import complete_bipartite, path_times_complete
from sgeodetic.verifier import decide


def instances(quick):
    # (label, graph, set); the "no" rows sit below the optimum and need a full search
    yield "K_{6,6}, one side + 1 (opt)", complete_bipartite(6, 6), range(7)
    yield "P_4 x K_3, columns 1, 4 (opt)", path_times_complete(4, 3), [0, 1, 2, 9, 10, 11]
    yield "K_{5,5}, one side + 1", complete_bipartite(5, 5), range(6)
    yield "K_{7,6}, the 7-side", complete_bipartite(7, 6), range(7)
    if not quick:
        yield "K_{7,7}, one side + 1", complete_bipartite(7, 7), range(8)


def timed(g, xs, kernel, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        g.__dict__.pop("_geodesic_cache", None)
        start = time.perf_counter()
        w, nodes = decide(g, xs, budget=float("inf"), kernel=kernel)
        best = min(best, time.perf_counter() - start)
        result = (w is not None, nodes)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="skip the slowest instance")
    args = ap.parse_args(argv)
    if verifier.kernel_name() != "compiled":
        print("compiled kernel not available; build with pip install -e . --no-build-isolation")
        return 1
    print(f"{'instance':32} {'m':>3} {'answer':>6} {'nodes':>9} {'python s':>9} {'compiled s':>10} {'speedup':>8}")
    ok = True
    for label, g, xs in instances(args.quick):
        tp, rp = timed(g, xs, "python", args.repeat)
        tc, rc = timed(g, xs, "compiled", args.repeat)
        ok &= rp == rc
        answer = "yes" if rc[0] else "no"
        print(f"{label:32} {g.m:>3} {answer:>6} {rc[1]:>9} {tp:>9.3f} {tc:>10.3f} {tp / tc:>7.1f}x")
    if not ok:
        print("kernels disagree")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
