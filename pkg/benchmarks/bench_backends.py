#!/usr/bin/env python3
"""Compare the pure-Python and compiled kernel backends.

Three views of the same question, smallest scope first:

  scalar     raw rational arithmetic on the backend's scalar type
  roots      the simultaneous root iteration on random monic polynomials
  pipeline   end-to-end classification in a subprocess per backend
             (HYPERINV_BACKEND decides which scalar the package binds)

The first two run both backends in one process through load_backend and
also cross-check that results agree.  Usage:

  python3 benchmarks/bench_backends.py [--repeat N] [--skip-pipeline]
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from hyperinv._kernel import available_backends, load_backend  # noqa: E402


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_scalar(repeat):
    print("scalar arithmetic (20000 mixed ops in short chains, best of %d)"
          % repeat)
    rng = random.Random(5)
    pairs = [(rng.randint(-99, 99), rng.randint(1, 99)) for _ in range(5000)]
    results = {}
    times = {}
    for name in available_backends():
        Rat, _ = load_backend(name)
        vals = [Rat(p, q) for p, q in pairs]

        def work(vals=vals, Rat=Rat):
            # chains reset every 16 values so magnitudes stay realistic
            checksum = 0
            acc = Rat(0)
            for i, v in enumerate(vals):
                acc = acc + v * v - v / (v * v + 1)
                if i % 16 == 15:
                    checksum ^= hash(acc)
                    acc = Rat(0)
            return checksum

        times[name] = _time(work, repeat)
        results[name] = work()
        print(f"  {name:7s} {times[name] * 1e3:9.2f} ms")
    _report(times, results)


def bench_roots(repeat):
    print("root iteration (120 random monic polynomials, best of %d)" % repeat)
    rng = random.Random(9)
    polys = []
    for _ in range(120):
        n = rng.randint(3, 11)
        coeffs = [complex(rng.uniform(-8, 8), rng.uniform(-8, 8)) for _ in range(n)]
        coeffs.append(1)
        polys.append(coeffs)
    results = {}
    times = {}
    for name in available_backends():
        _, dk = load_backend(name)

        def work(dk=dk):
            out = []
            for coeffs in polys:
                try:
                    out.append(tuple(dk(coeffs)))
                except RuntimeError:
                    out.append(None)
            return out

        times[name] = _time(work, repeat)
        results[name] = work()
        print(f"  {name:7s} {times[name] * 1e3:9.2f} ms")
    _report(times, results)


_PIPELINE_SNIPPET = """
import random
from hyperinv.curve import HyperellipticCurve
from hyperinv.invariants import classify
from hyperinv.moduli import round_trip_check
from hyperinv.errors import HyperinvError

rng = random.Random(3)
labels = []
for _ in range(40):
    g = rng.randint(2, 4)
    mid = [rng.randint(-6, 6) for _ in range(g)]
    coeffs = [1] + mid + mid[::-1] + [1]
    try:
        res = classify(HyperellipticCurve(coeffs))
    except HyperinvError:
        continue
    labels.append(res.label.name)
ok = 0
for t in (2, 5, 7):
    try:
        ok += bool(round_trip_check((2 * t ** 3, 2 * t ** 2)))
    except HyperinvError:
        pass
print(len(labels), ok)
"""


def bench_pipeline(repeat):
    print("end-to-end classification (40 curves per run, best of %d, " % repeat
          + "subprocess incl. startup)")
    times = {}
    results = {}
    for name in available_backends():
        env = dict(os.environ, HYPERINV_BACKEND=name)

        def work(env=env):
            proc = subprocess.run(
                [sys.executable, "-c", _PIPELINE_SNIPPET],
                capture_output=True, text=True, env=env, check=True)
            return proc.stdout.strip()

        times[name] = _time(work, repeat)
        results[name] = work()
        print(f"  {name:7s} {times[name] * 1e3:9.2f} ms")
    _report(times, results)


def _report(times, results):
    vals = set(repr(v) for v in results.values())
    agree = "agree" if len(vals) == 1 else "DISAGREE"
    if "cython" in times and "python" in times:
        ratio = times["python"] / times["cython"]
        print(f"  results {agree}; cython speedup x{ratio:.2f}")
    else:
        print(f"  results {agree}; only one backend available")
    print()


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3,
                    help="timing repetitions, best run counts (default 3)")
    ap.add_argument("--skip-pipeline", action="store_true",
                    help="skip the subprocess end-to-end benchmark")
    args = ap.parse_args(argv)
    print("backends available:", ", ".join(available_backends()))
    print()
    bench_scalar(args.repeat)
    bench_roots(args.repeat)
    if not args.skip_pipeline:
        bench_pipeline(args.repeat)
    return 0


if __name__ == "__main__":
    sys.exit(main())
