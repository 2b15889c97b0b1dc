"""Named filter chains: validate fully up front, then run stage by stage.

A pipeline spec is an ordered list of stages, each an op name plus its
parameters, mirroring the CLI subcommands. Every op name and parameter is
checked (and every referenced file loaded) before the first stage executes,
so a bad spec never half-processes an image. Running a spec is bit-identical
to composing the corresponding library calls by hand.
"""

from __future__ import annotations

import json
import math

from .convolution import clamp_to_display, convolve, laplacian
from .core import Image
from .edges import binarize, bits_to_image, edge_points, image_add, shadow_invert, shadow_ne
from .enhance import laplacian_sharpen, unsharp_mask
from .errors import DomainError, FormatError
from .imgio import load_pgm, load_text, parse_kernel, parse_lut
from .point_ops import apply_lut, gray_stretch, negate

_REQUIRED = object()


def _check_gamma(v):
    if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v) or v <= 0:
        raise FormatError(f"gamma must be a finite positive number, got {v!r}")
    return float(v)


def _check_radius(v):
    if isinstance(v, bool) or not isinstance(v, int) or v < 1:
        raise FormatError(f"radius must be a positive integer, got {v!r}")
    return v


def _check_threshold(v):
    if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v <= 255:
        raise FormatError(f"threshold must be an integer in [0, 255], got {v!r}")
    return v


def _check_bool(v):
    if not isinstance(v, bool):
        raise FormatError(f"expected true or false, got {v!r}")
    return v


def _check_path(v):
    if not isinstance(v, str) or not v:
        raise FormatError(f"expected a file path, got {v!r}")
    return v


def _choice(*options):
    def check(v):
        if v not in options:
            raise FormatError(f"expected one of {options}, got {v!r}")
        return v
    return check


#: op name -> {param name: (validator, default or _REQUIRED)}
_SCHEMAS = {
    "negate": {},
    "stretch": {"gamma": (_check_gamma, 2.0)},
    "lut": {"table": (_check_path, _REQUIRED)},
    "laplacian": {"variant": (_choice("four", "eight"), "four"),
                  "display": (_choice("clamp", "rescale"), "clamp")},
    "sharpen": {"variant": (_choice("four", "eight"), "four")},
    "unsharp": {"radius": (_check_radius, 1),
                "display": (_choice("clamp", "rescale"), "clamp")},
    "convolve": {"kernel": (_check_path, _REQUIRED),
                 "border": (_choice("replicate", "zero"), "replicate"),
                 "display": (_choice("clamp", "rescale"), "clamp")},
    "binarize": {"threshold": (_check_threshold, 128)},
    "edges": {"threshold": (_check_threshold, 128)},
    "add": {"image": (_check_path, _REQUIRED)},
    "shadow": {"invert": (_check_bool, False)},
}


class PipelineStage:
    """One validated stage: an op name and its canonical parameters."""

    __slots__ = ("op", "params")

    def __init__(self, op, params):
        if op not in _SCHEMAS:
            raise FormatError(f"unknown op {op!r}; known ops: {', '.join(sorted(_SCHEMAS))}")
        schema = _SCHEMAS[op]
        unknown = set(params) - set(schema)
        if unknown:
            raise FormatError(f"op {op!r} does not take parameter(s) {sorted(unknown)}")
        canonical = {}
        for name, (check, default) in schema.items():
            if name in params:
                canonical[name] = check(params[name])
            elif default is _REQUIRED:
                raise FormatError(f"op {op!r} requires parameter {name!r}")
            else:
                canonical[name] = default
        self.op = op
        self.params = canonical

    def __repr__(self):
        return f"PipelineStage({self.op!r}, {self.params!r})"


class PipelineSpec:
    """An ordered, non-empty list of stages built from stage mappings of the
    form {"op": name, <param>: <value>, ...}."""

    __slots__ = ("stages",)

    def __init__(self, stages):
        built = []
        for idx, raw in enumerate(stages, start=1):
            if not isinstance(raw, dict):
                raise FormatError(f"stage {idx}: expected an object, got {type(raw).__name__}")
            raw = dict(raw)
            op = raw.pop("op", None)
            if not isinstance(op, str):
                raise FormatError(f"stage {idx}: missing or non-string 'op'")
            try:
                built.append(PipelineStage(op, raw))
            except FormatError as exc:
                raise FormatError(f"stage {idx}: {exc}") from None
        if not built:
            raise FormatError("pipeline must have at least one stage")
        self.stages = tuple(built)

    def __len__(self):
        return len(self.stages)

    def __repr__(self):
        return f"PipelineSpec({[s.op for s in self.stages]})"


def parse_pipeline(text: str) -> PipelineSpec:
    """Parse the JSON spec format: {"stages": [{"op": ..., ...}, ...]}."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"pipeline spec is not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("stages"), list):
        raise FormatError('pipeline spec must be an object with a "stages" list')
    return PipelineSpec(doc["stages"])


def _compile_stage(stage: PipelineStage):
    op, p = stage.op, stage.params
    if op == "negate":
        return negate
    if op == "stretch":
        return lambda img: gray_stretch(img, p["gamma"])
    if op == "lut":
        table = parse_lut(load_text(p["table"]))
        return lambda img: apply_lut(img, table)
    if op == "laplacian":
        return lambda img: clamp_to_display(laplacian(img, p["variant"]), p["display"])
    if op == "sharpen":
        return lambda img: laplacian_sharpen(img, p["variant"])
    if op == "unsharp":
        return lambda img: unsharp_mask(img, p["radius"], p["display"])
    if op == "convolve":
        kern = parse_kernel(load_text(p["kernel"]))
        return lambda img: clamp_to_display(convolve(img, kern, p["border"]), p["display"])
    if op == "binarize":
        return lambda img: bits_to_image(binarize(img, p["threshold"]))
    if op == "edges":
        return lambda img: bits_to_image(edge_points(binarize(img, p["threshold"])))
    if op == "add":
        second = load_pgm(p["image"])
        return lambda img: image_add(img, second)
    if op == "shadow":
        return shadow_invert if p["invert"] else shadow_ne
    raise AssertionError(f"unhandled op {op!r}")


def run_pipeline(spec: PipelineSpec, img: Image) -> Image:
    """Apply every stage in order. All stages are compiled (including any
    referenced files being loaded and parsed) before stage 1 runs; a domain
    error during execution is re-raised with its 1-based stage index."""
    compiled = []
    for idx, stage in enumerate(spec.stages, start=1):
        try:
            compiled.append(_compile_stage(stage))
        except FormatError as exc:
            raise FormatError(f"stage {idx} ({stage.op}): {exc}") from None
    current = img
    for idx, (stage, fn) in enumerate(zip(spec.stages, compiled), start=1):
        try:
            current = fn(current)
        except DomainError as exc:
            raise DomainError(f"stage {idx} ({stage.op}): {exc}") from None
    return current
