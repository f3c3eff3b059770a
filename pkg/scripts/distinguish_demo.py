"""Separate tensor products of Leavitt algebras by the degrees where HH vanishes.

Prints the HH profile of L2^(x)k for k = 1..K, of L_inf (x) L2 and of the
countable tensor power of L2, then the pairwise verdicts.
"""

from __future__ import annotations

import argparse
import itertools
from dataclasses import dataclass

from quiverhh import LINF, TensorSpec, distinguish, rose
from quiverhh.kunneth import spec_profile


@dataclass
class DemoConfig:
    max_power: int = 4
    char: int = 0


def _fmt(p) -> str:
    dims = ", ".join(str(d) for d in p.dims)
    return f"[{dims}, nonzero ...]" if p.all_degrees_nonzero else f"[{dims}, 0, ...]"


def specs(cfg: DemoConfig) -> dict[str, TensorSpec]:
    L2 = rose(2)
    out = {f"L2^{k}": TensorSpec((L2,) * k) for k in range(1, cfg.max_power + 1)}
    out["Linf(x)L2"] = TensorSpec((LINF, L2))
    out["L2^inf"] = TensorSpec((), infinite_repeat=L2)
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-power", type=int, default=4)
    ap.add_argument("--char", type=int, default=0)
    a = ap.parse_args()
    cfg = DemoConfig(a.max_power, a.char)
    table = specs(cfg)
    for name, s in table.items():
        print(f"{name:>10}: {_fmt(spec_profile(s, cfg.char))}")
    print()
    for (na, sa), (nb, sb) in itertools.combinations(table.items(), 2):
        r = distinguish(sa, sb, cfg.char)
        where = f" (degree {r.witness_degree})" if r.witness_degree is not None else ""
        print(f"{na:>10} vs {nb:<10} {r.verdict.value}{where}")


if __name__ == "__main__":
    main()
