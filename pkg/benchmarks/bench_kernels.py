"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py --repeat 3
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from extmds import _pykernels, kernels
from extmds.claims import table1_code
from extmds.family import bch_narrow, code_Cu

CASES = [
    # (label, kernel, code builder)
    ("weight_counts ext(C_3) GF(16) [18,5]", "weights", lambda: code_Cu(16, 3).extend()),
    ("weight_counts BCH(17,4) dual [18,6]", "weights", lambda: bch_narrow(17, 4).dual()),
    ("gray binary trace code m=5 u=4 [34,21]", "binary", lambda: table1_code(5, 4)),
    ("gray binary trace code m=6 u=4 [66,25]", "binary", lambda: table1_code(6, 4)),
    ("rank_profile ext(C_4) GF(13) [15,7]", "rank", lambda: code_Cu(13, 4).extend()),
    ("min_circuits BCH(13,4) [14,8]", "circuits", lambda: bch_narrow(13, 4)),
]


def run_case(be, kind, C):
    F = C.field
    G = np.ascontiguousarray(C.generator, dtype=np.int32)
    if kind == "weights":
        return be.weight_counts(G, F.add_table, F.mul_table, np.zeros(C.n, dtype=np.int32))
    if kind == "binary":
        return be.weight_counts_binary(G.astype(np.uint8), np.zeros(C.n, dtype=np.uint8))
    cols = np.ascontiguousarray(G.T)
    if kind == "rank":
        return be.rank_profile(cols, F.add_table, F.mul_table, F.inv_table, 10 ** 9)[0]
    return be.min_circuits(cols, F.add_table, F.mul_table, F.inv_table, 10 ** 9)[0]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-python", action="store_true",
                    help="time only the compiled kernels")
    args = ap.parse_args(argv)
    backends = [("python", _pykernels)]
    if "compiled" in kernels.available_backends():
        backends.insert(0, ("compiled", kernels.get_backend("compiled")))
    if args.skip_python:
        backends = [b for b in backends if b[0] != "python"]
    print(f"{'case':44s}" + "".join(f"{name:>12s}" for name, _ in backends) + "   speedup")
    for label, kind, build in CASES:
        C = build()
        row, outs, secs = f"{label:44s}", [], []
        for _, be in backends:
            t, out = best_of(lambda: run_case(be, kind, C), args.repeat)
            row += f"{t:11.4f}s"
            outs.append(np.asarray(out))
            secs.append(t)
        if len(outs) == 2:
            assert np.array_equal(outs[0], outs[1]), f"backends disagree on {label}"
            row += f"   {secs[1] / secs[0]:7.1f}x"
        print(row, flush=True)


if __name__ == "__main__":
    main()
