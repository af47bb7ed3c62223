"""Compare the compiled polynomial kernel against the pure-Python fallback.

Runs the same workload twice in subprocesses (so each one selects its
backend at import) and reports wall times:

    python3 benchmarks/bench_kernel.py
"""

import json
import os
import subprocess
import sys
import time

WORKLOAD = r"""
import json, random, sys, time
from qdops import kernel
from qdops.exactscalar import ExactScalar, q_number
from qdops.opsym import generator, twisted_bracket, equals
from qdops.rings import POLY_X
from qdops.algorithms import verify_integration

def bench(label, fn, repeat=3):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return label, best

rng = random.Random(0)

def poly_ops():
    a = [rng.randint(-9, 9) for _ in range(60)]
    b = [rng.randint(-9, 9) for _ in range(45)]
    for _ in range(400):
        kernel.pgcd(kernel.pmul(a, b), kernel.pmul(b, b))

def scalar_field():
    acc = ExactScalar.from_int(1)
    for m in range(1, 40):
        acc = acc * q_number(m) / q_number(m + 1)
    for _ in range(200):
        acc + acc.inverse()

def operator_algebra():
    d = generator("dbeta", POLY_X, 2)
    x = generator("x", POLY_X)
    w = d
    for _ in range(6):
        w = twisted_bracket(w, x, 1) * ExactScalar.q_power(-1) + d * w

def integration():
    for word, b in [((1, -1, 2), 1), ((0, 2, -2), -1), ((2, 1, 1), 0)]:
        _, ok = verify_integration(word, b)
        assert ok

rows = [
    bench("dense gcd/mul 60x45", poly_ops),
    bench("field arithmetic in Q(q)", scalar_field),
    bench("bracket/compose tower", operator_algebra),
    bench("integrate length-3 words", integration),
]
print(json.dumps({"backend": kernel.BACKEND, "rows": rows}))
"""


def run(pure):
    env = dict(os.environ)
    if pure:
        env["QDOPS_PURE"] = "1"
    else:
        env.pop("QDOPS_PURE", None)
    out = subprocess.run([sys.executable, "-c", WORKLOAD], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main():
    compiled = run(pure=False)
    pure = run(pure=True)
    if compiled["backend"] == pure["backend"]:
        print(f"only the {pure['backend']} backend is available; "
              "build the extension to compare")
    print(f"{'case':<28} {'compiled':>10} {'pure':>10} {'speedup':>8}")
    for (label, tc), (_, tp) in zip(compiled["rows"], pure["rows"]):
        print(f"{label:<28} {tc * 1e3:>8.1f}ms {tp * 1e3:>8.1f}ms "
              f"{tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
