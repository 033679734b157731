#!/usr/bin/env python3
"""Minimal HiGHS command-line front end.

Mirrors the subset of the upstream `highs` executable's CLI that the solver
adapter uses, so a real HiGHS binary can be substituted without code changes:

    highs_solve.py [--options_file OPTS] --solution_file SOL MODEL

The HiGHS library is taken from `highspy` when installed, otherwise from the
build that ships inside SciPy. The solution is written in HiGHS raw style;
an additional `SOL.info.json` sidecar carries the achieved MIP gap.
"""

import argparse
import json
import re
import sys


def load_highs_class():
    try:
        from highspy import Highs  # type: ignore
        return Highs
    except ImportError:
        pass
    try:
        from scipy.optimize._highspy._core import _Highs  # type: ignore
        return _Highs
    except ImportError:
        return None


def coerce(value):
    v = value.strip()
    if v.lower() in ("true", "false"):
        return v.lower() == "true"
    if re.fullmatch(r"[+-]?\d+", v):
        return int(v)
    try:
        return float(v)
    except ValueError:
        return v


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("model")
    ap.add_argument("--options_file", default=None)
    ap.add_argument("--solution_file", required=True)
    args = ap.parse_args()

    highs_class = load_highs_class()
    if highs_class is None:
        print("no HiGHS backend found (need highspy or scipy)", file=sys.stderr)
        return 3

    h = highs_class()
    h.setOptionValue("output_flag", False)
    if args.options_file:
        with open(args.options_file) as f:
            for line in f:
                line = line.split("#", 1)[0].strip()
                if not line or "=" not in line:
                    continue
                key, _, raw = line.partition("=")
                h.setOptionValue(key.strip(), coerce(raw))

    status = h.readModel(args.model)
    if "kOk" not in str(status):
        print(f"failed to read model {args.model}: {status}", file=sys.stderr)
        return 2

    h.run()
    h.writeSolution(args.solution_file, 0)  # raw style

    info = h.getInfo()
    sidecar = {
        "status": str(h.getModelStatus()).split(".")[-1],
        "objective": info.objective_function_value,
        "mip_gap": info.mip_gap if info.mip_gap >= 0 else None,
    }
    with open(args.solution_file + ".info.json", "w") as f:
        json.dump(sidecar, f)
    return 0


if __name__ == "__main__":
    sys.exit(main())
