"""
Module: input_document.py
Part of the Restriction Stability Toolkit.

Parse the single JSON input document every CLI subcommand reads.

Document shape::

    {
      "surface": {"kind": "p2"}
               | {"kind": "hirzebruch", "m": 1}
               | {"kind": "custom", "matrix": [[1]],
                  "canonical": ["-3"], "chiO": 1},
      "polarization": ["1"],            # optional on P2
      "twist": ["0"] | "auto",          # optional, default zero
      "character": {"ch0": 2, "ch1": ["1"], "ch2": "-3/2"},
      "curve": ["4"] | {"dH": 4},       # optional
      "options": {"depth": 12, "d_max": 100, "output": "table"}
    }

Rationals are JSON integers or strings "p" / "p/q"; floats are rejected.
Every problem raises ``ValidationError`` with the offending location.
"""

from __future__ import annotations

import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional, TextIO, Tuple

from src.lattice.chern import ChernCharacter, TwistContext, minimizing_twist
from src.lattice.surface import DivisorClass, SurfaceKind, SurfaceModel, is_ample
from src.utils import messages
from src.utils.errors import RestrictionError, ValidationError
from src.utils.rationals import parse_integer, parse_rational

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("table", "csv", "svg", "json")
OPTION_KEYS = ("depth", "d_max", "max_depth", "max_peel", "output", "picard_rank_policy")
PICARD_RANK_POLICIES = ("enforce", "report")


@dataclass(frozen=True)
class InputDocument:
    surface: SurfaceModel
    polarization: DivisorClass
    twist: DivisorClass
    character: ChernCharacter
    curve: Optional[DivisorClass] = None
    curve_degree: Optional[int] = None
    twist_auto: bool = False
    options: Dict[str, Any] = field(default_factory=dict)

    @property
    def context(self) -> TwistContext:
        return TwistContext.build(self.surface, self.polarization, self.twist)

    def require_curve(self) -> DivisorClass:
        if self.curve is None:
            raise ValidationError(messages.DocumentMessages.missing_key.format(key="curve", section="document"))
        return self.curve

    def header(self) -> Dict[str, str]:
        """Echo of the parsed input for report headers."""
        data = {
            "surface": self.surface.label,
            "polarization": str(self.polarization),
            "twist": "auto " + str(self.twist) if self.twist_auto else str(self.twist),
            "character": str(self.character),
        }
        if self.curve is not None:
            data["curve"] = f"{self.curve_degree}H" if self.curve_degree is not None else str(self.curve)
        return data


def _require(data: Dict[str, Any], key: str, section: str) -> Any:
    if not isinstance(data, dict) or key not in data:
        raise ValidationError(messages.DocumentMessages.missing_key.format(key=key, section=section))
    return data[key]


def _require_any(data: Dict[str, Any], keys: Tuple[str, ...], section: str) -> Tuple[str, Any]:
    """First of ``keys`` present in ``data``; the error names the first key."""
    if isinstance(data, dict):
        for key in keys:
            if key in data:
                return key, data[key]
    raise ValidationError(messages.DocumentMessages.missing_key.format(key=keys[0], section=section))


def _divisor(value: Any, surface: SurfaceModel, location: str) -> DivisorClass:
    if not isinstance(value, list):
        raise ValidationError(messages.DocumentMessages.bad_rational.format(
            text=value, location=location, reason="expected a list of coefficients"))
    coefficients = [parse_rational(c, f"{location}[{i}]") for i, c in enumerate(value)]
    try:
        return surface.divisor(*coefficients)
    except RestrictionError as exc:
        raise ValidationError(f"{location}: {exc}") from exc


def parse_surface(spec: Any) -> SurfaceModel:
    kind = _require(spec, "kind", "surface")
    try:
        if kind == SurfaceKind.PROJECTIVE_PLANE.value:
            return SurfaceModel.projective_plane()
        if kind == SurfaceKind.HIRZEBRUCH.value:
            return SurfaceModel.hirzebruch(parse_integer(_require(spec, "m", "surface"), "surface.m"))
        if kind == SurfaceKind.CUSTOM.value:
            matrix_key, matrix = _require_any(spec, ("matrix", "intersection_matrix"), "surface")
            if not isinstance(matrix, list) or not all(isinstance(row, list) for row in matrix):
                raise ValidationError(messages.DocumentMessages.bad_integer.format(
                    location=f"surface.{matrix_key}", value=matrix))
            rows = [
                [parse_integer(x, f"surface.{matrix_key}[{i}][{j}]") for j, x in enumerate(row)]
                for i, row in enumerate(matrix)
            ]
            canonical_key, raw_canonical = _require_any(spec, ("canonical", "canonical_class"), "surface")
            if not isinstance(raw_canonical, list):
                raise ValidationError(messages.DocumentMessages.bad_rational.format(
                    text=raw_canonical, location=f"surface.{canonical_key}", reason="expected a list of coefficients"))
            canonical = [
                parse_rational(c, f"surface.{canonical_key}[{i}]") for i, c in enumerate(raw_canonical)
            ]
            chi_key, raw_chi = _require_any(spec, ("chiO", "chi_structure_sheaf"), "surface")
            chi = parse_integer(raw_chi, f"surface.{chi_key}")
            return SurfaceModel.custom(rows, canonical, chi)
    except ValidationError:
        raise
    except RestrictionError as exc:
        raise ValidationError(f"surface: {exc}") from exc
    raise ValidationError(messages.DocumentMessages.unknown_surface.format(kind=kind))


def parse_character(spec: Any, surface: SurfaceModel) -> ChernCharacter:
    ch0 = parse_integer(_require(spec, "ch0", "character"), "character.ch0")
    ch1 = _divisor(_require(spec, "ch1", "character"), surface, "character.ch1")
    ch2 = parse_rational(_require(spec, "ch2", "character"), "character.ch2")
    return ChernCharacter(ch0, ch1, ch2)


def parse_options(spec: Any) -> Dict[str, Any]:
    if spec is None:
        return {}
    if not isinstance(spec, dict):
        raise ValidationError(messages.DocumentMessages.bad_option.format(value=spec, key="options"))
    options: Dict[str, Any] = {}
    for key, value in spec.items():
        if key not in OPTION_KEYS:
            raise ValidationError(messages.DocumentMessages.bad_option.format(value=value, key=key))
        if key in ("depth", "d_max", "max_depth", "max_peel"):
            parsed = parse_integer(value, f"options.{key}")
            if parsed < 0:
                raise ValidationError(messages.DocumentMessages.bad_option.format(value=value, key=key))
            options[key] = parsed
        elif key == "output":
            if value not in OUTPUT_FORMATS:
                raise ValidationError(messages.DocumentMessages.bad_option.format(value=value, key=key))
            options[key] = value
        else:
            if value not in PICARD_RANK_POLICIES:
                raise ValidationError(messages.DocumentMessages.bad_option.format(value=value, key=key))
            options[key] = value
    return options


def parse_document(data: Any) -> InputDocument:
    """Validate a decoded JSON object into an ``InputDocument``."""
    if not isinstance(data, dict):
        raise ValidationError(messages.DocumentMessages.missing_key.format(key="surface", section="document"))
    surface = parse_surface(_require(data, "surface", "document"))

    if "polarization" in data:
        H = _divisor(data["polarization"], surface, "polarization")
    elif surface.kind is SurfaceKind.PROJECTIVE_PLANE:
        H = surface.divisor(1)
    else:
        raise ValidationError(messages.DocumentMessages.missing_key.format(key="polarization", section="document"))
    if surface.kind is SurfaceKind.CUSTOM:
        logger.warning(messages.LatticeMessages.custom_no_ampleness)
    elif not is_ample(surface, H):
        raise ValidationError(messages.DocumentMessages.not_ample.format(polarization=H, surface=surface.label))

    character = parse_character(_require(data, "character", "document"), surface)

    raw_twist = data.get("twist")
    twist_auto = raw_twist == "auto"
    try:
        if twist_auto:
            D = minimizing_twist(character, H, surface)
        elif raw_twist is None:
            D = surface.zero()
        else:
            D = _divisor(raw_twist, surface, "twist")
        TwistContext.build(surface, H, D)
    except ValidationError:
        raise
    except RestrictionError as exc:
        raise ValidationError(f"twist: {exc}") from exc

    curve, degree = None, None
    if "curve" in data:
        raw_curve = data["curve"]
        if isinstance(raw_curve, dict):
            if set(raw_curve) != {"dH"}:
                raise ValidationError(messages.DocumentMessages.bad_curve.format(location="curve"))
            degree = parse_integer(raw_curve["dH"], "curve.dH")
            curve = H * degree
        elif isinstance(raw_curve, list):
            curve = _divisor(raw_curve, surface, "curve")
        else:
            raise ValidationError(messages.DocumentMessages.bad_curve.format(location="curve"))

    return InputDocument(
        surface=surface,
        polarization=H,
        twist=D,
        character=character,
        curve=curve,
        curve_degree=degree,
        twist_auto=twist_auto,
        options=parse_options(data.get("options")),
    )


def loads(text: str) -> InputDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(messages.DocumentMessages.bad_json.format(
            line=exc.lineno, column=exc.colno, error=exc.msg)) from exc
    return parse_document(data)


def read_document(source: str, stdin: Optional[TextIO] = None) -> InputDocument:
    """Read from a file path, or from stdin when ``source`` is ``-``."""
    if source == "-":
        return loads((stdin or sys.stdin).read())
    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"Cannot read input document {path}: {exc}") from exc
    return loads(text)

