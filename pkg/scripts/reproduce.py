"""Run every worked-example check and write the table and a JSON record.

    python3 scripts/reproduce.py --out results/
"""

import argparse
import json
from dataclasses import asdict
from pathlib import Path

from tomofix.golden import render_table, run_checks


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--threads", type=int, default=4)
    args = ap.parse_args()
    results = run_checks(threads=args.threads)
    args.out.mkdir(parents=True, exist_ok=True)
    table = render_table(results)
    (args.out / "checks.txt").write_text(table + "\n")
    (args.out / "checks.json").write_text(json.dumps([asdict(r) for r in results], indent=2) + "\n")
    print(table)
    return 0 if all(r.ok for r in results) else 1


if __name__ == "__main__":
    raise SystemExit(main())
