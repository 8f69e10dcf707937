"""Command-line front end.

Verbs: ``augment`` (batch-augment a directory tree), ``preview`` (contact
sheet for one image), ``metrics`` (mPC report from a results CSV), and
``synthesize`` (reference fog/low-light corruption corpus).

Exit codes: 0 success, 1 fatal configuration or I/O error, 2 batch
completed with per-file failures.  ``PHYSAUG_LOG`` selects log verbosity
(debug, info, warning, error; default warning).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import os
import sys
from pathlib import Path

from .config import MODES, PipelineConfig, load_config
from .metrics import DATASET_GRIDS, format_report, mpc, parse_results, summarize
from .pipeline import run_augment, run_preview, run_synthesize

__all__ = ["main", "build_parser"]

logger = logging.getLogger(__name__)


def _configure_logging() -> None:
    name = os.environ.get("PHYSAUG_LOG", "warning").strip().upper()
    level = getattr(logging, name, None)
    if not isinstance(level, int):
        level = logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def _add_common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", type=Path, help="YAML config file (defaults apply when omitted)")
    sub.add_argument("--seed", type=int, help="global seed (unsigned 64-bit)")
    sub.add_argument("--workers", type=int, help="parallel worker count")
    sub.add_argument("--input", type=Path, help="input directory")
    sub.add_argument("--output", type=Path, help="output directory")
    sub.add_argument("--mode", choices=MODES, help="augmentation mode")


def _effective_config(args: argparse.Namespace) -> PipelineConfig:
    cfg = load_config(args.config) if args.config else PipelineConfig()
    overrides = {}
    if getattr(args, "seed", None) is not None:
        overrides["global_seed"] = args.seed
    if getattr(args, "workers", None) is not None:
        overrides["workers"] = args.workers
    if getattr(args, "mode", None) is not None:
        overrides["mode"] = args.mode
    if getattr(args, "input", None) is not None:
        overrides["input_dir"] = str(args.input)
    if getattr(args, "output", None) is not None:
        overrides["output_dir"] = str(args.output)
    if getattr(args, "samples_per_image", None) is not None:
        overrides["samples_per_image"] = args.samples_per_image
    return dataclasses.replace(cfg, **overrides) if overrides else cfg


def _cmd_augment(args: argparse.Namespace) -> int:
    cfg = _effective_config(args)
    summary = run_augment(cfg)
    print(f"augment[{cfg.mode}]: {summary.describe()}")
    return 2 if summary.failed else 0


def _cmd_preview(args: argparse.Namespace) -> int:
    cfg = _effective_config(args)
    try:
        rows, cols = (int(v) for v in args.grid.lower().split("x"))
    except ValueError:
        raise ValueError(f"--grid must look like 2x3, got {args.grid!r}") from None
    out = args.out or Path(f"{Path(args.image).stem}__preview.png")
    path = run_preview(cfg, args.image, rows, cols, out)
    print(f"preview[{cfg.mode}]: wrote {path}")
    return 0


def _cmd_metrics(args: argparse.Namespace) -> int:
    table = parse_results(Path(args.results).read_text(encoding="utf-8"))
    if args.dataset != "custom":
        expected = DATASET_GRIDS[args.dataset]
        found = (table.num_corruptions, table.num_severities)
        if found != expected:
            raise ValueError(
                f"results grid does not match dataset {args.dataset!r}: "
                f"expected {expected[0]} corruptions x {expected[1]} severities, "
                f"found {found[0]} x {found[1]}"
            )
    if args.json:
        print(json.dumps(summarize(table, args.clean), indent=2))
    else:
        print(format_report(table, args.clean))
    logger.info("mpc=%.4f", mpc(table))
    return 0


def _cmd_synthesize(args: argparse.Namespace) -> int:
    cfg = _effective_config(args)
    if not cfg.input_dir or not cfg.output_dir:
        raise ValueError("synthesize requires --input and --output (or config values)")
    summary = run_synthesize(cfg, cfg.input_dir, cfg.output_dir)
    print(f"synthesize: {summary.describe()}")
    return 2 if summary.failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="physaug",
        description="Physics-based image augmentation and corruption-robustness tooling.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_aug = sub.add_parser("augment", help="augment every image under a directory")
    _add_common_flags(p_aug)
    p_aug.add_argument("--samples-per-image", type=int, help="augmented samples per input image")
    p_aug.set_defaults(func=_cmd_augment)

    p_prev = sub.add_parser("preview", help="contact sheet of augmentations for one image")
    _add_common_flags(p_prev)
    p_prev.add_argument("image", type=Path, help="image file to preview")
    p_prev.add_argument("--grid", default="2x2", help="ROWSxCOLS, e.g. 2x3 (default 2x2)")
    p_prev.add_argument("--out", type=Path, help="output PNG path (default <stem>__preview.png)")
    p_prev.set_defaults(func=_cmd_preview)

    p_met = sub.add_parser("metrics", help="mPC report from a results CSV")
    p_met.add_argument("--results", type=Path, required=True, help="CSV: corruption,severity,map")
    p_met.add_argument(
        "--dataset",
        choices=sorted(DATASET_GRIDS) + ["custom"],
        default="custom",
        help="validate the grid shape against a named dataset",
    )
    p_met.add_argument("--clean", type=float, help="optional clean-domain mAP column")
    p_met.add_argument("--json", action="store_true", help="machine-readable output")
    p_met.set_defaults(func=_cmd_metrics)

    p_syn = sub.add_parser("synthesize", help="fog/low-light corruption corpus from clean images")
    _add_common_flags(p_syn)
    p_syn.set_defaults(func=_cmd_synthesize)

    return parser


def main(argv: list[str] | None = None) -> int:
    _configure_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
