"""Batch file pipeline: deterministic parallel augmentation of image trees.

Work is split into independent (image, sample) tasks; each task derives
its own seed from (global seed, relative path, sample index), so output
bytes are a pure function of (config, corpus) regardless of scheduling,
worker count, or directory scan order.  Outputs are lossless PNG; JPEG
would break the byte-exactness contract.

Per-file failures (undecodable inputs, write errors) are isolated and
reported in the run summary instead of aborting the batch.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from PIL import Image

from .config import PipelineConfig
from .image import quantize_to_u8, u8_to_unit
from .perturbation import (
    FogParams,
    NpmConfig,
    PhysAugConfig,
    RetinexParams,
    npm1,
    npm2,
    physaug,
    synthesize_fog,
    synthesize_illumination,
)
from .seeding import derive_item_seed, derive_sample_seed

__all__ = [
    "IMAGE_EXTENSIONS",
    "RunSummary",
    "find_images",
    "load_image",
    "save_image",
    "augment_array",
    "run_augment",
    "run_preview",
    "run_synthesize",
]

logger = logging.getLogger(__name__)

IMAGE_EXTENSIONS = (".png", ".jpg", ".jpeg")


@dataclass(frozen=True)
class RunSummary:
    """Outcome of one batch run."""

    written: int
    failed: int
    elapsed: float
    failures: tuple[tuple[str, str], ...] = ()

    def describe(self) -> str:
        msg = f"{self.written} written, {self.failed} failed in {self.elapsed:.2f}s"
        if self.failures:
            details = "; ".join(f"{path}: {err}" for path, err in self.failures)
            msg += f" ({details})"
        return msg


def find_images(input_dir: str | Path) -> list[str]:
    """Relative forward-slash paths of candidate images under a directory,
    sorted for a stable summary order (seeds do not depend on order)."""
    root = Path(input_dir)
    if not root.is_dir():
        raise ValueError(f"input directory does not exist: {root}")
    rels = [
        p.relative_to(root).as_posix()
        for p in root.rglob("*")
        if p.is_file() and p.suffix.lower() in IMAGE_EXTENSIONS
    ]
    return sorted(rels)


def load_image(path: str | Path) -> np.ndarray:
    """Decode a PNG/JPEG file into an (H, W, 3) float64 unit-range array."""
    with Image.open(path) as im:
        rgb = im.convert("RGB")
        return u8_to_unit(np.asarray(rgb, dtype=np.uint8))


def save_image(img: np.ndarray, path: str | Path) -> None:
    """Quantize a unit-range image to 8 bits and write a lossless PNG."""
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    Image.fromarray(quantize_to_u8(img), mode="RGB").save(out, format="PNG")


def augment_array(
    img: np.ndarray,
    mode: str,
    seed: int,
    physaug_cfg: PhysAugConfig,
    npm_cfg: NpmConfig,
    fog_params: FogParams,
    lowlight_params: RetinexParams,
) -> np.ndarray:
    """Apply one augmentation mode to an in-memory image."""
    if mode == "physaug":
        return physaug(img, physaug_cfg, seed)
    if mode == "npm1":
        return npm1(img, physaug_cfg, seed)
    if mode == "npm2":
        return npm2(img, physaug_cfg, npm_cfg, seed)
    if mode == "fog":
        return synthesize_fog(img, fog_params)
    if mode == "lowlight":
        return synthesize_illumination(img, lowlight_params)
    raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class _Task:
    input_path: str
    output_path: str
    mode: str
    seed: int
    physaug_cfg: PhysAugConfig
    npm_cfg: NpmConfig
    fog_params: FogParams
    lowlight_params: RetinexParams


def _execute_task(task: _Task) -> tuple[str, str | None]:
    """Run one task; returns (output_path, error message or None)."""
    try:
        img = load_image(task.input_path)
        out = augment_array(
            img,
            task.mode,
            task.seed,
            task.physaug_cfg,
            task.npm_cfg,
            task.fog_params,
            task.lowlight_params,
        )
        save_image(out, task.output_path)
        return task.output_path, None
    except Exception as exc:  # per-file isolation: report, don't abort
        return task.input_path, f"{type(exc).__name__}: {exc}"


def _run_tasks(tasks: list[_Task], workers: int) -> RunSummary:
    start = time.perf_counter()
    if workers <= 1 or len(tasks) <= 1:
        results = [_execute_task(t) for t in tasks]
    else:
        chunksize = max(1, len(tasks) // (workers * 4))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_execute_task, tasks, chunksize=chunksize))
    elapsed = time.perf_counter() - start
    failures = tuple((path, err) for path, err in results if err is not None)
    for path, err in failures:
        logger.warning("failed: %s (%s)", path, err)
    return RunSummary(
        written=len(results) - len(failures),
        failed=len(failures),
        elapsed=elapsed,
        failures=failures,
    )


def _check_dirs(input_dir: str | Path, output_dir: str | Path) -> tuple[Path, Path]:
    in_root = Path(input_dir)
    out_root = Path(output_dir)
    if in_root.resolve() == out_root.resolve():
        raise ValueError("output directory must be distinct from input directory")
    out_root.mkdir(parents=True, exist_ok=True)
    return in_root, out_root


def run_augment(cfg: PipelineConfig) -> RunSummary:
    """Augment every image under ``cfg.input_dir``.

    For input ``rel`` and sample index ``k`` the seed is
    ``derive_sample_seed(derive_item_seed(global_seed, rel), k)`` and the
    output is ``<output_dir>/<reldir>/<stem>__<mode>__s<k>.png``.
    """
    if not cfg.input_dir or not cfg.output_dir:
        raise ValueError("augment requires input_dir and output_dir")
    in_root, out_root = _check_dirs(cfg.input_dir, cfg.output_dir)
    rels = find_images(in_root)
    if not rels:
        raise ValueError(f"no images (PNG/JPEG) found under {in_root}")
    logger.info("augment: %d images x %d samples, mode=%s, workers=%d",
                len(rels), cfg.samples_per_image, cfg.mode, cfg.workers)

    tasks = []
    for rel in rels:
        item_seed = derive_item_seed(cfg.global_seed, rel)
        rel_path = Path(rel)
        for k in range(cfg.samples_per_image):
            out_name = f"{rel_path.stem}__{cfg.mode}__s{k}.png"
            tasks.append(
                _Task(
                    input_path=str(in_root / rel_path),
                    output_path=str(out_root / rel_path.parent / out_name),
                    mode=cfg.mode,
                    seed=derive_sample_seed(item_seed, k),
                    physaug_cfg=cfg.physaug,
                    npm_cfg=cfg.npm,
                    fog_params=cfg.fog,
                    lowlight_params=cfg.lowlight,
                )
            )
    return _run_tasks(tasks, cfg.workers)


def run_preview(
    cfg: PipelineConfig,
    image_path: str | Path,
    rows: int,
    cols: int,
    output_path: str | Path,
) -> Path:
    """Write a rows x cols contact sheet for one image.

    The top-left cell is the unmodified input; each remaining cell i is
    an independent augmentation seeded from (global_seed, file name,
    ``p<i>``), so the sheet is reproducible for a fixed seed.
    """
    if rows < 1 or cols < 1:
        raise ValueError(f"grid must be at least 1x1, got {rows}x{cols}")
    img = load_image(image_path)
    item_seed = derive_item_seed(cfg.global_seed, Path(image_path).name)
    height, width = img.shape[:2]
    sheet = np.zeros((rows * height, cols * width, 3))
    for i in range(rows * cols):
        if i == 0:
            cell = img
        else:
            seed = derive_item_seed(item_seed, f"p{i}")
            cell = augment_array(img, cfg.mode, seed, cfg.physaug, cfg.npm, cfg.fog, cfg.lowlight)
        r, c = divmod(i, cols)
        sheet[r * height : (r + 1) * height, c * width : (c + 1) * width] = cell
    save_image(sheet, output_path)
    return Path(output_path)


def run_synthesize(cfg: PipelineConfig, input_dir: str | Path, output_dir: str | Path) -> RunSummary:
    """Emit fog and low-light variants of a clean corpus at the configured
    severity ladders, laid out ``<output_dir>/<corruption>/<severity>/<file>``.

    Fully deterministic: no randomness is involved, so reruns are
    byte-identical.
    """
    in_root, out_root = _check_dirs(input_dir, output_dir)
    rels = find_images(in_root)
    if not rels:
        raise ValueError(f"no images (PNG/JPEG) found under {in_root}")

    ladders = {
        "fog": [
            FogParams(transmission=t, atmospheric_light=cfg.fog.atmospheric_light)
            for t in cfg.synthesize.fog_transmissions
        ],
        "lowlight": [RetinexParams(light=l) for l in cfg.synthesize.lowlight_lights],
    }
    logger.info("synthesize: %d images x %d corruptions, workers=%d",
                len(rels), sum(len(v) for v in ladders.values()), cfg.workers)

    tasks = []
    for corruption, params_ladder in ladders.items():
        for severity, params in enumerate(params_ladder, start=1):
            fog_params = params if corruption == "fog" else cfg.fog
            lowlight_params = params if corruption == "lowlight" else cfg.lowlight
            for rel in rels:
                rel_path = Path(rel)
                out_path = (
                    out_root / corruption / str(severity) / rel_path.parent / f"{rel_path.stem}.png"
                )
                tasks.append(
                    _Task(
                        input_path=str(in_root / rel_path),
                        output_path=str(out_path),
                        mode=corruption,
                        seed=0,  # synthesizers are deterministic
                        physaug_cfg=cfg.physaug,
                        npm_cfg=cfg.npm,
                        fog_params=fog_params,
                        lowlight_params=lowlight_params,
                    )
                )
    return _run_tasks(tasks, cfg.workers)
