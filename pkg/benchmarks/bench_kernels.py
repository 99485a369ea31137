"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

import numpy as np

from twoonemaps import _kernels
from twoonemaps.belyi import solve_canonical
from twoonemaps.maps import enumerate_21maps
from twoonemaps.passport import Passport
from twoonemaps.render import _kernel_args, active_attractors, default_viewport


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    maps = enumerate_21maps(9)
    model = solve_canonical(Passport.parse("a1^2 a4 b1 b2 b3"), starts=500)[0]
    view = default_viewport(model, 600, 400)
    re, im = view.grid()
    use0, use1 = active_attractors(model, 0.05)
    kargs = _kernel_args(model)

    print(f"{'kernel':<34}{'backend':<10}{'seconds':>10}{'speedup':>10}")
    for name, job in [
        (f"canonical_code x {len(maps)} maps (E=9)",
         lambda k: [k.canonical_code(m.sigma, m.color)[0] for m in maps]),
        ("escape_steps 600x400, 512 iter",
         lambda k: k.escape_steps(*kargs, re, im, 0.05, 1e3, 512, use0, use1)),
    ]:
        results = {}
        base = None
        for kern in _kernels.backends():
            secs, out = best_of(args.repeat, lambda: job(kern))
            results[kern.BACKEND] = out
            base = base or secs
            print(f"{name:<34}{kern.BACKEND:<10}{secs:>10.4f}{base / secs:>9.1f}x")
        outs = list(results.values())
        same = all(
            np.array_equal(o, outs[0]) if isinstance(o, np.ndarray) else o == outs[0] for o in outs
        )
        print(f"{'':<34}{'identical output: ' + str(same)}")


if __name__ == "__main__":
    main()
