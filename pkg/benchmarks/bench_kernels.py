"""Time the hot kernels with numba and with the plain-Python fallback.

Each backend runs in its own interpreter, because the switch is read once at
import time (``GERMCODIM_NO_NUMBA``).  Numba compile time is excluded by a
warm-up pass; the on-disk cache makes later runs start fast anyway.

    python benchmarks/bench_kernels.py [--repeat N] [--json]
"""
import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
import numpy as np
from germcodim import MapGerm, PolyRing, WeightedDegRevLex, ae_codim, backend, groebner, vdim
from germcodim import kernels

repeat = int(sys.argv[1])
R = PolyRing(["x", "y", "z"], WeightedDegRevLex((1, 2, 3)))
rng = np.random.default_rng(0)


def rand_poly(nterms, maxe):
    d = {tuple(int(v) for v in rng.integers(0, maxe, 3)): int(rng.integers(1, R.p))
         for _ in range(nterms)}
    return R.from_dict(d)


f, g = rand_poly(300, 20), rand_poly(300, 20)
enc = R.encoding()
fk, fc = R.pack(f, enc)
gk, gc = R.pack(g, enc)
ideal = [R("x^5+y*z+x*y^2"), R("y^2+x*z"), R("x^6+y^3+z^2")]
germ = MapGerm.from_strings(["x", "y"], ["X", "Y", "Z"], (7, 1), (7, 8, 3),
                            ["x", "x*y+y^8", "y^3"])

cases = {
    "mul 300x300 terms": lambda: kernels.mul(fk, fc, gk, gc, enc.K0, R.p),
    "sort_combine 90k": lambda: kernels.sort_combine(
        np.concatenate([fk] * 300), np.concatenate([fc] * 300), R.p),
    "groebner (3 gens, wp(1,2,3))": lambda: groebner(ideal),
    "vdim staircase": lambda: vdim(groebner(ideal + [R("z^4")])),
    "ae_codim H3": lambda: ae_codim(germ),
}
out = {"backend": backend(), "seconds": {}}
for name, fn in cases.items():
    fn()  # warm-up (JIT compile or cache load)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    out["seconds"][name] = best
print(json.dumps(out))
"""


def run(no_numba: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("GERMCODIM_NO_NUMBA", None)
    if no_numba:
        env["GERMCODIM_NO_NUMBA"] = "1"
    res = subprocess.run([sys.executable, "-c", WORKER, str(repeat)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    fast = run(False, args.repeat)
    slow = run(True, args.repeat)
    if args.json:
        print(json.dumps({"numba": fast, "fallback": slow}, indent=2))
        return
    print(f"{'case':32s} {fast['backend']:>10s} {slow['backend']:>10s} {'speedup':>8s}")
    for name, a in fast["seconds"].items():
        b = slow["seconds"][name]
        print(f"{name:32s} {a * 1000:9.1f}ms {b * 1000:9.1f}ms {b / a:7.1f}x")


if __name__ == "__main__":
    main()
