"""Command line entry point: ``motsp run`` and ``motsp compare``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .config import RunConfig
from .runner import compare_variants, run

VARIANT_NAMES = {"off": "off", "method-a": "method_a_only", "method-b": "method_b_only",
                 "modified": "modified"}
MODE_NAMES = {"one-pass": "one_pass", "local-opt": "to_local_optimum"}
ROUNDING_NAMES = {"raw": "raw", "nint": "tsplib_nint"}

DEFAULT_TSP = ["kroA100", "kroB100"]


def _floats(text: str) -> tuple[float, ...]:
    return tuple(float(v) for v in text.split(","))


def _ints(text: str) -> list[int]:
    return [int(v) for v in text.split(",")]


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    # Defaults are None so that an explicit flag can be told apart from a
    # config-file value.
    p.add_argument("--config", type=Path, help="JSON file with RunConfig fields")
    p.add_argument("--tsp", action="append", dest="instance_paths",
                   help="TSPLIB file, one per objective in objective order (default: kroA100, kroB100)")
    p.add_argument("--rounding", choices=ROUNDING_NAMES)
    p.add_argument("--pop", type=int, dest="population")
    p.add_argument("--gens", type=int, dest="generations")
    p.add_argument("--pc", type=float, dest="p_crossover")
    p.add_argument("--pjg", type=float, dest="p_jg")
    p.add_argument("--pls", type=float, dest="p_local_search")
    p.add_argument("--ls-variant", choices=VARIANT_NAMES, dest="local_search_variant")
    p.add_argument("--ls-mode", choices=MODE_NAMES, dest="local_search_mode")
    p.add_argument("--seed", type=int)
    p.add_argument("--hv-ref", type=_floats, dest="hv_reference")
    p.add_argument("--out", dest="output_dir", required=True)
    p.add_argument("-v", "--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="motsp", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    p_run = sub.add_parser("run", help="one seeded NSGA-II run")
    _add_run_flags(p_run)
    p_cmp = sub.add_parser("compare", help="compare local-search variants over several seeds")
    _add_run_flags(p_cmp)
    p_cmp.add_argument("--variants", default="method-a,modified",
                       help="comma-separated local-search variants")
    p_cmp.add_argument("--seeds", type=_ints, default=[1, 2, 3, 4, 5])
    p_cmp.add_argument("--workers", type=int, default=1)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    values: dict = {}
    if args.config is not None:
        values.update(json.loads(args.config.read_text()))
    flags = {
        "instance_paths": args.instance_paths,
        "rounding": ROUNDING_NAMES.get(args.rounding),
        "population": args.population,
        "generations": args.generations,
        "p_crossover": args.p_crossover,
        "p_jg": args.p_jg,
        "p_local_search": args.p_local_search,
        "local_search_variant": VARIANT_NAMES.get(args.local_search_variant),
        "local_search_mode": MODE_NAMES.get(args.local_search_mode),
        "seed": args.seed,
        "hv_reference": args.hv_reference,
        "output_dir": args.output_dir,
    }
    values.update({k: v for k, v in flags.items() if v is not None})
    values.setdefault("instance_paths", list(DEFAULT_TSP))
    return RunConfig(**values)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = config_from_args(args)
        if args.command == "run":
            record = run(cfg)
            final = record.series[-1]
            print(f"front size {final.size}  hypervolume {final.hypervolume}  "
                  f"spacing {final.spacing:.3f}  ({record.duration:.1f} s)")
            print(f"wrote {cfg.output_dir}/front.csv, run.json"
                  + (", front.svg" if len(cfg.instance_paths) == 2 else ""))
        else:
            variants = []
            for name in args.variants.split(","):
                if name not in VARIANT_NAMES:
                    raise ValueError(f"unknown variant {name!r}; choose from {', '.join(VARIANT_NAMES)}")
                variants.append(VARIANT_NAMES[name])
            rows = compare_variants(cfg, variants, args.seeds, out_dir=cfg.output_dir,
                                    workers=args.workers)
            keys = [k for k in rows[0] if k.endswith("_mean")]
            print("variant".ljust(16) + "".join(k.removesuffix("_mean").rjust(16) for k in keys))
            for r in rows:
                print(r["variant"].ljust(16) + "".join(f"{r[k]:16.4g}" for k in keys))
            print(f"wrote {cfg.output_dir}/comparison.csv")
    except (OSError, ValueError) as exc:
        print(f"motsp: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
