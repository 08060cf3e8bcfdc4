"""
Settings, run configuration and command dispatch.

The :py:class:`Toolkit` object holds the settings, the registry of commands
and the map from exception classes to process exit codes. Commands are
registered with the :py:meth:`Toolkit.command` decorator and run through
:py:meth:`Toolkit.run`, which turns failures into exit codes::

    toolkit = Toolkit(load_settings())

    @toolkit.command
    def warp(config, out):
        ...

    status = toolkit.run(config)
"""

import logging
import math
from dataclasses import dataclass, field
from os import environ as env

from .warping import DEFAULT_TOL, GeometryError, SolverError

logger = logging.getLogger("steklov_models")

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_SOLVER = 3
EXIT_GEOMETRY = 4
EXIT_BOUNDS = 5

FORMATS = ("csv", "json", "plot-data")


class ConfigError(ValueError):
    """
    Raised for invalid or incomplete run configuration.
    """
    pass


def load_settings(environ=None) -> dict:
    """
    Reads the settings from the environment, falling back to defaults.

        - ``STEKLOV_MODELS_TOL``: default relative tolerance (1e-10)
        - ``STEKLOV_MODELS_MAX_MODE``: default mode sweep cap (8)
        - ``STEKLOV_MODELS_LOG_LEVEL``: default log level (WARNING)

    Args:
        environ (dict, optional): Mapping to read from. Defaults to ``os.environ``.

    Returns:
        dict: The settings.

    Raises:
        ConfigError: If a value cannot be parsed.
    """
    environ = env if environ is None else environ
    try:
        settings = {
            "TOL": float(environ.get("STEKLOV_MODELS_TOL", DEFAULT_TOL)),
            "MAX_MODE": int(environ.get("STEKLOV_MODELS_MAX_MODE", 8)),
            "LOG_LEVEL": environ.get("STEKLOV_MODELS_LOG_LEVEL", "WARNING").upper(),
        }
    except ValueError as e:
        raise ConfigError(f"Bad environment setting: {e}") from e
    if settings["LOG_LEVEL"] not in logging.getLevelNamesMapping():
        raise ConfigError(f"Unknown log level {settings['LOG_LEVEL']!r}.")
    return settings


@dataclass
class RunConfig:
    """
    One command-line invocation, after flags have been merged with settings.

    Exactly one profile source (``constant``, ``profile`` or ``case``) is
    needed by ``warp`` and ``steklov``; ``torus`` needs ``case``; ``wentzell``
    needs either ``batch`` or all of ``n``, ``c``, ``K``, ``beta`` and
    ``lambda1c``.
    """

    command: str
    constant: float | None = None
    profile: str | None = None
    case: int | None = None
    alpha: float | None = None
    t_max: float | None = None
    n: int | None = None
    r: float | None = None
    format: str = "json"
    tol: float = DEFAULT_TOL
    seed: int = 0
    max_mode: int = 8
    trace_trials: int = 0
    r_grid: list[float] = field(default_factory=list)
    c: float | None = None
    K: float | None = None
    beta: float | None = None
    lambda1c: float | None = None
    batch: str | None = None
    output: str | None = None
    verbose: bool = False

    def validate(self) -> "RunConfig":
        """
        Checks the configuration against what the command needs.

        Returns:
            RunConfig: ``self``, for chaining.

        Raises:
            ConfigError: On the first problem found.
        """
        if self.format not in FORMATS:
            raise ConfigError(f"Unknown format {self.format!r}.")
        if not 1e-14 < self.tol < 1e-2:
            raise ConfigError(f"Tolerance {self.tol} is outside (1e-14, 1e-2).")
        if self.max_mode < 1:
            raise ConfigError("max_mode must be at least 1.")
        if self.trace_trials < 0:
            raise ConfigError("trace_trials cannot be negative.")
        if self.case is not None and self.case not in (1, 2, 3):
            raise ConfigError(f"Unknown torus case {self.case}.")
        if self.case == 3 and not (self.alpha is not None and 0 < self.alpha < math.pi):
            raise ConfigError("Case 3 needs --alpha in (0, pi).")
        match self.command:
            case "warp" | "steklov":
                sources = [self.constant, self.profile, self.case]
                if sum(s is not None for s in sources) != 1:
                    raise ConfigError(
                        "Give exactly one of --constant, --profile or --case."
                    )
                if self.command == "warp" and self.t_max is not None and self.t_max <= 0:
                    raise ConfigError("--tmax must be positive.")
                if self.command == "steklov":
                    self._check_ball()
            case "torus":
                if self.case is None:
                    raise ConfigError("torus needs --case.")
                if not self.r_grid:
                    raise ConfigError("torus needs an r-grid.")
                if not all(0 < r < math.pi / 2 for r in self.r_grid):
                    raise ConfigError("Torus radii must lie in (0, pi/2).")
            case "wentzell":
                if self.batch is None:
                    missing = [
                        name
                        for name in ("n", "c", "K", "beta", "lambda1c")
                        if getattr(self, name) is None
                    ]
                    if missing:
                        raise ConfigError(f"wentzell needs {missing} or --batch.")
            case _:
                raise ConfigError(f"Unknown command {self.command!r}.")
        return self

    def _check_ball(self):
        if self.n is None or self.n < 2:
            raise ConfigError("--n must be an integer >= 2.")
        if self.r is None or not self.r > 0:
            raise ConfigError("--r must be positive.")


class Toolkit:
    """
    Registry of commands plus the exception to exit-code map.

    Args:
        settings (dict, optional): As returned by :py:func:`load_settings`.
    """

    def __init__(self, settings=None):
        self.configure(settings)
        self.commands = {}
        # Most specific class wins, see exit_code().
        self.exit_codes = {
            ConfigError: EXIT_CONFIG,
            ValueError: EXIT_CONFIG,
            SolverError: EXIT_SOLVER,
            GeometryError: EXIT_GEOMETRY,
        }

    def configure(self, settings=None):
        settings = settings or {}
        self.tol = settings.get("TOL", DEFAULT_TOL)
        self.max_mode = settings.get("MAX_MODE", 8)
        self.log_level = settings.get("LOG_LEVEL", "WARNING")

    def command(self, name=None):
        def command_decorator(func):
            _name = name or func.__name__
            self.commands[_name] = func
            return func

        if callable(name):
            # Used as @toolkit.command
            func = name
            name = None
            return command_decorator(func)
        # Used as @toolkit.command("some-name")
        return command_decorator

    def handle(self, exc_class, code: int):
        """Maps an exception class to an exit code."""
        self.exit_codes[exc_class] = code

    def exit_code(self, exc: BaseException) -> int | None:
        for cls in type(exc).__mro__:
            if cls in self.exit_codes:
                return self.exit_codes[cls]
        return None

    def run(self, config: RunConfig, out=None) -> int:
        """
        Validates ``config`` and runs its command, writing data to ``out``.

        Returns:
            int: The exit code. Exceptions without a mapped code propagate.
        """
        try:
            config.validate()
            func = self.commands.get(config.command)
            if func is None:
                raise ConfigError(f"Unknown command {config.command!r}.")
            status = func(config, out)
        except Exception as e:
            code = self.exit_code(e)
            if code is None:
                raise
            logger.error(f"{type(e).__name__}: {e}")
            return code
        return EXIT_OK if status is None else status
