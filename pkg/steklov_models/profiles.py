"""
Curvature profile files.

A profile file is TOML or JSON (UTF-8, decimal numbers) with a schema version
and a list of pieces::

    schema_version = 1

    [[pieces]]
    t_from = 0.0
    t_to = 0.7853981633974483
    kind = "cosine_rational"
    params = { a = 4.0, b = 1.5707963267948966, c = -2.0, d = 2.0, e = 1.0 }

    [[pieces]]
    t_from = 0.7853981633974483
    t_to = 1.5
    kind = "constant"
    params = { value = 1.3333333333333333 }

Piece kinds are ``constant``, ``cosine_rational`` and ``table``; a
``table`` piece carries ``params = { t = [...], k = [...] }``. An optional
top-level ``continuous = false`` allows jump discontinuities at breakpoints.
Profiles are written as JSON only.
"""

import json
import logging
import math
import tomllib
from pathlib import Path

from .core import ConfigError
from .warping import CurvatureProfile, ProfilePiece

logger = logging.getLogger("steklov_models.profiles")

SCHEMA_VERSION = 1

REQUIRED_PARAMS = {
    "constant": ("value",),
    "cosine_rational": ("a", "b", "c", "d", "e"),
    "table": ("t", "k"),
}


class ProfileConfigError(ConfigError):
    """
    Raised when a profile file is malformed or uses an unsupported schema.
    """
    pass


def _number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ProfileConfigError(f"{where}: expected a number, got {value!r}.")
    if not math.isfinite(value):
        raise ProfileConfigError(f"{where}: {value} is not finite.")
    return float(value)


def _piece_from_dict(data: dict, index: int) -> ProfilePiece:
    where = f"pieces[{index}]"
    try:
        kind = data["kind"]
        raw = data.get("params", {})
        t_from = _number(data["t_from"], f"{where}.t_from")
        t_to = _number(data["t_to"], f"{where}.t_to")
    except KeyError as e:
        raise ProfileConfigError(f"{where}: missing field {e}.") from e
    if kind not in REQUIRED_PARAMS:
        raise ProfileConfigError(f"{where}: unknown kind {kind!r}.")
    missing = [name for name in REQUIRED_PARAMS[kind] if name not in raw]
    if missing:
        raise ProfileConfigError(f"{where}: {kind} needs params {missing}.")
    if kind == "table":
        params = {
            name: [_number(v, f"{where}.params.{name}") for v in raw[name]]
            for name in ("t", "k")
        }
        if len(params["t"]) != len(params["k"]):
            raise ProfileConfigError(f"{where}: t and k differ in length.")
    else:
        params = {
            name: _number(raw[name], f"{where}.params.{name}")
            for name in REQUIRED_PARAMS[kind]
        }
    try:
        return ProfilePiece(t_from, t_to, kind, params)
    except ValueError as e:
        raise ProfileConfigError(f"{where}: {e}") from e


def profile_from_dict(data: dict) -> CurvatureProfile:
    """
    Builds a :py:class:`CurvatureProfile` from the parsed file contents.

    Raises:
        ProfileConfigError: On a wrong schema version, unknown kind, missing
            or non-finite numbers, or pieces that do not tile ``[0, t_max]``.
    """
    version = data.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ProfileConfigError(
            f"Unsupported schema_version {version!r}, expected {SCHEMA_VERSION}."
        )
    raw_pieces = data.get("pieces")
    if not isinstance(raw_pieces, list) or not raw_pieces:
        raise ProfileConfigError("A profile needs a non-empty list of pieces.")
    pieces = tuple(_piece_from_dict(p, i) for i, p in enumerate(raw_pieces))
    try:
        return CurvatureProfile(pieces, continuous=bool(data.get("continuous", True)))
    except ValueError as e:
        raise ProfileConfigError(str(e)) from e


def profile_to_dict(profile: CurvatureProfile) -> dict:
    """
    Serialises a profile to the file schema.

    Raises:
        ProfileConfigError: If a piece wraps an arbitrary callable.
    """
    pieces = []
    for piece in profile.pieces:
        if piece.kind == "callable":
            raise ProfileConfigError("Callable pieces cannot be exported.")
        pieces.append(
            {
                "t_from": piece.t_from,
                "t_to": piece.t_to,
                "kind": piece.kind,
                "params": dict(piece.params),
            }
        )
    data = {"schema_version": SCHEMA_VERSION, "pieces": pieces}
    if not profile.continuous:
        data["continuous"] = False
    return data


def load_profile(path) -> CurvatureProfile:
    """
    Reads a profile file. ``.toml`` files are parsed as TOML, everything
    else as JSON.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ProfileConfigError(f"Cannot read profile {path}: {e}") from e
    try:
        if path.suffix == ".toml":
            data = tomllib.loads(text)
        else:
            data = json.loads(text)
    except (tomllib.TOMLDecodeError, json.JSONDecodeError) as e:
        raise ProfileConfigError(f"Cannot parse profile {path}: {e}") from e
    profile = profile_from_dict(data)
    logger.debug(f"Loaded {len(profile.pieces)} pieces from {path}.")
    return profile


def dump_profile(profile: CurvatureProfile, path) -> None:
    """Writes a profile as JSON."""
    Path(path).write_text(
        json.dumps(profile_to_dict(profile), indent=2) + "\n", encoding="utf-8"
    )
