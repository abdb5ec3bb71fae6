#!/usr/bin/env python3
"""
🔁 Determinantal e-sweep

Runs the finite-generation ladder on the 2x2 minors of [[x, y, z], [u, v, w]]
one level at a time and prints a line per level as soon as it finishes.
A "no" in the mod I^[q] column at every level is the evidence that the
algebra of Frobenius maps is not finitely generated.

Uso:
    python scripts/sweep_determinantal.py --p 2 --e-max 3
    python scripts/sweep_determinantal.py --e-max 2 --max-basis-size 50000
"""

import argparse
import logging
import os
import sys
import time
from pathlib import Path

# Ensure we're in the right directory
script_dir = Path(__file__).resolve().parent
project_root = script_dir.parent
os.chdir(project_root)
sys.path.insert(0, str(project_root))

from algebra.polynomial import render_polynomial
from cli.parser import parse_problem
from config import Config
from core.error_handling import COMPUTATION_ERRORS, ErrorContext
from frobenius.ladder import FrobeniusConfig, FrobeniusEngine


def print_section(title: str):
    """Print a section header."""
    print("\n" + "=" * 80)
    print(f"  {title}")
    print("=" * 80)


def sweep(p: int, e_max: int) -> bool:
    """True when every level finished with contained_mod_bracket = false."""
    problem = parse_problem(f"preset = paper-determinantal\np = {p}\n")
    ideal = problem.ideal()
    print_section(f"📐 I = ({', '.join(problem.generators)}) over GF({p})")

    engine = FrobeniusEngine(FrobeniusConfig(ideal=ideal, e_max=e_max))
    all_escape = True
    for e in range(1, e_max + 1):
        start = time.perf_counter()
        with ErrorContext(f"sweep level e={e}", reraise=False, exceptions=COMPUTATION_ERRORS) as ctx:
            record = engine.finite_generation_step(e)
        elapsed = time.perf_counter() - start

        if ctx.error is not None:
            print(f"❌ e={e} q={p**e}: {ctx.error} ({elapsed:.1f}s)")
            return False

        escaped = record.contained_mod_bracket is False
        all_escape = all_escape and escaped
        status = "✅" if escaped else "⚠️ "
        first = render_polynomial(record.witnesses[0]) if record.witnesses else "-"
        print(
            f"{status} e={e} q={record.q}: |K_e|={len(record.K.canonical_generators())} "
            f"mod I^[q]={'no' if escaped else 'yes'} raw={'yes' if record.contained_raw else 'no'} "
            f"witness={first} ({elapsed:.1f}s)"
        )
        sys.stdout.flush()
    return all_escape


def main():
    parser = argparse.ArgumentParser(description="determinantal finite-generation sweep")
    parser.add_argument("--p", type=int, default=2)
    parser.add_argument("--e-max", type=int, default=2)
    parser.add_argument("--max-basis-size", type=int)
    args = parser.parse_args()

    logging.basicConfig(level=logging.WARNING, format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    if args.max_basis_size:
        Config.MAX_BASIS_SIZE = args.max_basis_size

    ok = sweep(args.p, args.e_max)
    print("\n" + ("✅ every level escapes L_e + I^[q]" if ok else "⚠️  sweep incomplete or a level was generated below"))
    sys.exit(0 if ok else 2)


if __name__ == "__main__":
    main()
