"""Smoke test for the hardbench Python extension.

Build and install first:  pip install --no-build-isolation ./crates/py
"""

import math
import tempfile
from pathlib import Path

import hardbench as hb


def check(label, condition):
    print(("ok   " if condition else "FAIL ") + label)
    return condition


def main():
    results = []

    names = hb.list_functions()
    results.append(check("catalog has 21 functions", len(names) == 21 and names[-1] == "crosslegtable"))

    info = hb.describe("layeb03")
    results.append(check("layeb03 flagged inconsistent", info.consistency == "inconsistent-as-printed"))

    v = hb.evaluate("crosslegtable", [math.pi, math.pi])
    results.append(check("crosslegtable radians at (pi, pi)", abs(v + 0.079592386218981) <= 1e-12))
    v = hb.evaluate("crosslegtable", [math.pi, math.pi], mode="degrees")
    results.append(check("crosslegtable degrees at (pi, pi) is -1", v == -1.0))

    x = hb.optimum_point("layeb12", 30)
    results.append(check("layeb12 n=30 optimum", abs(hb.evaluate("layeb12", x) - hb.stated_optimum("layeb12", 30)) < 1e-9))
    results.append(check("to_degrees", hb.to_degrees([math.pi]) == [180.0]))

    run = hb.minimize("layeb02", 5, algorithm="mtsa", max_fes=5000, seed=3, params={"population_size": 20})
    results.append(check("mtsa respects budget", run.evaluations_used <= 5000 and len(run.best_point) == 5))
    again = hb.minimize("layeb02", 5, algorithm="mtsa", max_fes=5000, seed=3, params={"population_size": 20})
    results.append(check("mtsa deterministic per seed", again.best_value == run.best_value))

    try:
        hb.evaluate("crosslegtable", [1.0, 2.0, 3.0])
        results.append(check("dimension error raised", False))
    except ValueError:
        results.append(check("dimension error raised", True))

    results.append(check("mte at optimum is zero", hb.mte([0.0, 0.0], [[1.0, 1.0]] * 2, 0.0, [1.0, 1.0]) == 0.0))
    results.append(check("bte is gap plus distance", hb.bte(0.25, [0.3, 0.4], 0.0, [0.0, 0.0]) == 0.75))
    _, avg, chi2 = hb.friedman([[1, 2, 3], [1, 3, 2], [2, 1, 3], [1, 2, 3]])
    results.append(check("friedman fixture", avg == [1.25, 2.0, 2.75] and chi2 == 4.5))

    rows = hb.verify_catalog(1e-9, 51)
    results.append(check("verification has no failures", len(rows) == 63 and all(r.status != "fail" for r in rows)))

    with tempfile.TemporaryDirectory() as d:
        runs = hb.run_experiment("functions = layeb02, layeb11\ndimensions = 4\nruns = 2\nmax_fes = 1000\n", d)
        results.append(check("experiment returns every run", len(runs) == 2 * 2 * 2))
        results.append(check("runs.csv written", (Path(d) / "runs.csv").exists()))
        tables = hb.rerank(str(Path(d) / "runs.csv"), d, "raw")
        results.append(check("raw re-ranking", tables[0][0] == 4 and len(tables[0][1]) == 2))

    print(f"{sum(results)}/{len(results)} checks passed")
    raise SystemExit(0 if all(results) else 1)


if __name__ == "__main__":
    main()
