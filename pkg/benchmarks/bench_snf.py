"""Compare the compiled and pure-Python Smith normal form kernels.

Runs the same workload in-process (compiled kernel, if built) and in a
subprocess with MOMENTANGLE_PURE=1 (pure kernel), then prints timings.
Workloads are the boundary matrices the library actually produces:
simplicial skeleta and Koszul complexes.  Unstructured dense random
matrices are deliberately absent; on those, any transform-tracking
elimination suffers intermediate coefficient swell (see README).

Usage: python3 benchmarks/bench_snf.py [--repeat N]
"""

import argparse
import json
import os
import random
import subprocess
import sys
import time


def _workloads():
    from momentangle import complexes as cx
    from momentangle.fixtures import (sphere_with_diameter,
                                      unrealizable_complex)
    from momentangle.homology import simplicial_chain_complex
    from momentangle.koszul import koszul_complex

    jobs = []

    K = cx.skeleton(cx.simplex(tuple(range(1, 10))), 4)
    C = simplicial_chain_complex(K)
    jobs.append(("skeleton of simplex, 9 vertices",
                 [(C.boundary_matrix(d), C.dim(d - 1), C.dim(d))
                  for d in (2, 3, 4)]))

    mats = []
    for K in (sphere_with_diameter(), unrealizable_complex()):
        C = koszul_complex(K)
        mats.extend((C.boundary_matrix(d), C.dim(d - 1), C.dim(d))
                    for d in C.degrees())
    jobs.append(("Koszul matrices, two fixtures", mats))

    rng = random.Random(20240817)
    mats = []
    for _ in range(8):
        C = koszul_complex(cx.random_complex(6, rng))
        mats.extend((C.boundary_matrix(d), C.dim(d - 1), C.dim(d))
                    for d in C.degrees())
    jobs.append(("Koszul matrices, 8 random m=6", mats))
    return jobs


def bench_kernel(repeat):
    from momentangle.snf import KERNEL, smith_normal_form_ext

    results = {"kernel": KERNEL, "times": {}}
    for label, mats in _workloads():
        t0 = time.perf_counter()
        for _ in range(repeat):
            for a, m, n in mats:
                smith_normal_form_ext(a, m, n)
        results["times"][label] = time.perf_counter() - t0
    return results


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--emit-json", action="store_true",
                    help="internal: print one kernel's timings as JSON")
    args = ap.parse_args()

    if args.emit_json:
        print(json.dumps(bench_kernel(args.repeat)))
        return

    here = bench_kernel(args.repeat)
    env = dict(os.environ, MOMENTANGLE_PURE="1")
    out = subprocess.run(
        [sys.executable, __file__, "--repeat", str(args.repeat),
         "--emit-json"],
        env=env, capture_output=True, text=True, check=True)
    pure = json.loads(out.stdout)

    width = max(len(k) for k in here["times"])
    print(f"{'workload':<{width}} {'kernel':>9} {'seconds':>9}")
    for label in here["times"]:
        for run in (here, pure):
            print(f"{label:<{width}} {run['kernel']:>9} "
                  f"{run['times'][label]:>9.3f}")
        if here["kernel"] != pure["kernel"] and here["times"][label]:
            ratio = pure["times"][label] / here["times"][label]
            print(f"{'':{width}} {'speedup':>9} {ratio:>8.2f}x")


if __name__ == "__main__":
    main()
