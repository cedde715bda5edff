"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--sizes 6 8 10] [--repeat 3]

Each row is one kernel on one n-Queens instance: exact rank of ``A + 4I``
(Bareiss) and the full Jacobi spectrum of ``A``.  Both backends must return
the same answer; the script exits non-zero if they disagree.
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from trispectra._backend import compiled_available, load
from trispectra.graphs import build_queens


def best_of(fn, repeat: int) -> tuple[float, object]:
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[6, 8, 10])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    backends = {"python": load("python")}
    if compiled_available():
        backends["cython"] = load("cython")
    else:
        print("compiled kernels not built; timing the fallback only", file=sys.stderr)

    print(f"{'kernel':<8} {'n':>3} {'dim':>5} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    ok = True
    for n in args.sizes:
        q = build_queens(n)
        shifted = q.int_matrix(shift=-4)
        dense = q.adjacency.astype(np.float64)
        for kernel in ("bareiss", "jacobi"):
            times, answers = {}, {}
            for name, mod in backends.items():
                if kernel == "bareiss":
                    fn = lambda mod=mod: mod.bareiss_rank([row[:] for row in shifted])
                else:
                    fn = lambda mod=mod: np.sort(mod.jacobi_eigen(dense, 1e-12, 100, False)[0])
                times[name], answers[name] = best_of(fn, args.repeat)
            ref = answers["python"]
            for name, ans in answers.items():
                same = ans == ref if kernel == "bareiss" else np.allclose(ans, ref, atol=1e-9)
                ok &= bool(same)
            speed = times["python"] / times["cython"] if "cython" in times else float("nan")
            cols = " ".join(f"{times[b]:>9.4f}s" for b in backends)
            print(f"{kernel:<8} {n:>3} {n * n:>5} {cols}   {speed:6.1f}x")
    if not ok:
        print("backends disagree", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
