"""Compare the compiled and pure-Python search kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Times full count-vector enumeration (every defect level) and power-automaton
closure on a few automata, once per available backend.
"""
import argparse
import time

from crautomata import families, kernels
from crautomata.enumeration import EnumerationIndex
from crautomata.gamma import decide
from crautomata.oracle import reachable_family

CASES = [
    ("enumerate", "E_{10,4}", lambda: families.e_nk(10, 4)),
    ("enumerate", "E_{12,6}", lambda: families.e_nk(12, 6)),
    ("enumerate", "random n=12 m=3", lambda: families.random(12, 3, seed=1)),
    ("decide", "E_{11,5}", lambda: families.e_nk(11, 5)),
    ("oracle", "Cerny n=16", lambda: families.cerny(16)),
    ("oracle", "Cerny n=18", lambda: families.cerny(18)),
]


def run(kind, dfa):
    if kind == "enumerate":
        return len(EnumerationIndex(dfa).enumerate_to(dfa.n - 1))
    if kind == "decide":
        return decide(dfa).k
    return reachable_family(dfa).count


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    names = sorted(kernels.BACKENDS)
    print(f"{'task':<10} {'automaton':<18} " + " ".join(f"{n:>10}" for n in names) + "   speedup")
    for kind, label, make in CASES:
        dfa = make()
        row = {}
        results = set()
        for name in names:
            kernels.use_backend(name)
            row[name], result = best_of(args.repeat, lambda: run(kind, dfa))
            results.add(result)
        assert len(results) == 1, f"backends disagree on {label}"
        speed = f"{row['python'] / row['cython']:8.1f}x" if "cython" in row else "       -"
        print(f"{kind:<10} {label:<18} " + " ".join(f"{row[n]:9.3f}s" for n in names) + "  " + speed)


if __name__ == "__main__":
    main()
