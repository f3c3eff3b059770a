"""Tabulate weight-graded HH of L(E) for the standard quiver families.

    python scripts/hh_sweep.py --max-n 4 --max-weight 8 --char 0 --out hh_sweep.json
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass

from quiverhh import hh, standard_quiver
from quiverhh.hochschild import table_to_json
from quiverhh.ktheory import k_groups


@dataclass
class SweepConfig:
    families: tuple[str, ...] = ("rose", "e_n", "cycle", "line")
    max_n: int = 4
    max_weight: int = 8
    char: int = 0
    out: str | None = None


def sweep(cfg: SweepConfig) -> list[dict]:
    rows = []
    for fam in cfg.families:
        for n in range(1, cfg.max_n + 1):
            q = standard_quiver(fam, n)
            t0 = time.perf_counter()
            table = table_to_json(hh(q, cfg.max_weight, cfg.char))
            rows.append(
                {
                    "quiver": f"{fam}({n})",
                    "table": table,
                    "k": k_groups(q).to_json(),
                    "seconds": round(time.perf_counter() - t0, 4),
                }
            )
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--families", default="rose,e_n,cycle,line")
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--max-weight", type=int, default=8)
    ap.add_argument("--char", type=int, default=0)
    ap.add_argument("--out")
    a = ap.parse_args()
    cfg = SweepConfig(tuple(a.families.split(",")), a.max_n, a.max_weight, a.char, a.out)
    rows = sweep(cfg)
    for r in rows:
        layers = " ".join(f"{w['hh0']}" for w in r["table"]["weights"])
        w0 = r["table"]["weights"][0]
        print(f"{r['quiver']:>9}  weight0=({w0['hh0']},{w0['hh1']})  HH0 for m=0..: {layers}  K0={r['k']['k0']}")
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            json.dump({"config": asdict(cfg), "rows": rows}, fh, indent=2, sort_keys=True)


if __name__ == "__main__":
    main()
