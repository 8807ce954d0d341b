"""Compare the numba and pure-numpy backends on the same instances.

Each backend runs in its own interpreter because the choice is read from
DIGICONVEX_BACKEND at import time.  Prints one CSV row per (backend, case).

    python benchmarks/backend_compare.py [--sizes 1000 100000 1000000]
"""
import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time, statistics
from digiconvex import BACKEND, is_digital_convex_2d, is_digital_convex_nd
from digiconvex.bench import ball3_for, disk_for

sizes, nd_sizes, repeats = json.loads(sys.argv[1])

def med(fn):
    fn()
    ts = []
    for _ in range(repeats):
        t = time.perf_counter_ns(); fn(); ts.append(time.perf_counter_ns() - t)
    return int(statistics.median(ts))

out = []
for n in sizes:
    S = disk_for(n)
    out.append([BACKEND, "disk-2d", S.n, med(lambda: is_digital_convex_2d(S))])
for n in nd_sizes:
    S = ball3_for(n)
    out.append([BACKEND, "ball-3d", S.n, med(lambda: is_digital_convex_nd(S, "count"))])
print(json.dumps(out))
"""


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[10**3, 10**4, 10**5, 10**6])
    ap.add_argument("--nd-sizes", type=int, nargs="+", default=[100, 500])
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args(argv)
    payload = json.dumps([args.sizes, args.nd_sizes, args.repeats])
    results = {}
    for backend in ("numba", "numpy"):
        env = dict(os.environ, DIGICONVEX_BACKEND=backend)
        proc = subprocess.run([sys.executable, "-c", WORKER, payload], env=env,
                              capture_output=True, text=True, check=True)
        results[backend] = json.loads(proc.stdout.strip().splitlines()[-1])
    print("backend,case,n,wall_ns,speedup_vs_numpy")
    base = {(c, n): t for _, c, n, t in results["numpy"]}
    for backend in ("numba", "numpy"):
        for name, case, n, t in results[backend]:
            print(f"{name},{case},{n},{t},{base[(case, n)] / t:.2f}")


if __name__ == "__main__":
    main()
