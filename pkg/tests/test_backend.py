"""The numba kernels and the plain-Python fallback must agree exactly."""
import json
import os
import subprocess
import sys

import germcodim

SCRIPT = r"""
import json, random
from germcodim import MapGerm, PolyRing, ae_codim, backend, groebner, vdim
out = {"backend": backend()}
g = MapGerm.from_strings(["x", "y"], ["X", "Y", "Z"], (2, 3), (2, 6, 9),
                         ["x", "y^2", "y^3+x^3*y"])
out["S2"] = ae_codim(g)
r = random.Random(5)
R = PolyRing(["x", "y", "z"])
bases = []
for _ in range(15):
    gens = [R.from_dict({tuple(r.randint(0, 3) for _ in range(3)): r.randint(1, 100)
                         for _ in range(3)}) for _ in range(3)]
    G = groebner(gens)
    bases.append([str(b) for b in G])
out["bases"] = bases
out["vdim"] = vdim(groebner([R("x^3+y*z"), R("y^4-x"), R("z^3+x*y")]))
print(json.dumps(out))
"""


def _run(no_numba):
    env = dict(os.environ)
    env.pop("GERMCODIM_NO_NUMBA", None)
    if no_numba:
        env["GERMCODIM_NO_NUMBA"] = "1"
    res = subprocess.run([sys.executable, "-c", SCRIPT], capture_output=True, text=True,
                         env=env, check=True)
    return json.loads(res.stdout)


def test_fallback_matches_numba():
    fast, slow = _run(False), _run(True)
    assert slow["backend"] == "numpy"
    assert fast["backend"] == ("numba" if germcodim.HAVE_NUMBA else "numpy")
    fast.pop("backend"), slow.pop("backend")
    assert fast == slow
    assert fast["S2"] == 2
