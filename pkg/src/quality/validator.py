"""
Run configuration validation
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Mapping, Optional, Tuple

from ..coxeter.signed_permutation import DEFAULT_MAX_N
from ..exceptions import ConfigError

FORMATS = ("json", "csv", "dot", "text")
MODES = ("C", "A")
MAX_N_ENV = "BORBITS_MAX_N"


@dataclass(frozen=True)
class VerificationSettings:
    random_samples: int = 100
    action_triples: int = 200
    xi_values: Tuple[Fraction, ...] = (Fraction(1), Fraction(2), Fraction(-1))
    geometric_max_n: int = 3
    dimension_max_n: int = 4
    unipotent_values: Tuple[Fraction, ...] = (Fraction(-2), Fraction(-1), Fraction(-1, 2), Fraction(0),
                                              Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3))
    max_workers: int = 4


@dataclass(frozen=True)
class RunConfig:
    n: int = 2
    mode: str = "C"
    seed: int = 0
    max_n: int = DEFAULT_MAX_N
    output: Optional[str] = None
    format: Optional[str] = None
    verification: VerificationSettings = field(default_factory=VerificationSettings)


class ConfigValidator:
    def __init__(self, config: dict = None):
        self.config = config or {}
        self.required_sections = ['run', 'verification', 'logging']

    def _check_sections(self) -> None:
        missing = [s for s in self.required_sections if s not in self.config]
        if missing:
            logging.warning(f"Config sections missing, using defaults: {missing}")

    @staticmethod
    def _as_int(name: str, value: Any) -> int:
        if isinstance(value, bool):
            raise ConfigError(f"{name} must be an integer, got {value!r}")
        try:
            return int(value)
        except (TypeError, ValueError):
            raise ConfigError(f"{name} must be an integer, got {value!r}")

    @staticmethod
    def _as_fractions(name: str, values: Any) -> Tuple[Fraction, ...]:
        try:
            return tuple(Fraction(str(v)) for v in values)
        except (TypeError, ValueError, ZeroDivisionError):
            raise ConfigError(f"{name} must be a list of rationals, got {values!r}")

    def _verification(self) -> VerificationSettings:
        section = self.config.get('verification') or {}
        defaults = VerificationSettings()
        settings = VerificationSettings(
            random_samples=self._as_int('random_samples', section.get('random_samples', defaults.random_samples)),
            action_triples=self._as_int('action_triples', section.get('action_triples', defaults.action_triples)),
            xi_values=self._as_fractions('xi_values', section.get('xi_values', defaults.xi_values)),
            geometric_max_n=self._as_int('geometric_max_n',
                                         section.get('geometric_max_n', defaults.geometric_max_n)),
            dimension_max_n=self._as_int('dimension_max_n',
                                         section.get('dimension_max_n', defaults.dimension_max_n)),
            unipotent_values=self._as_fractions('unipotent_values',
                                               section.get('unipotent_values', defaults.unipotent_values)),
            max_workers=self._as_int('max_workers', section.get('max_workers', defaults.max_workers)),
        )
        if settings.random_samples < 0 or settings.action_triples < 0:
            raise ConfigError("Sample counts cannot be negative")
        if settings.max_workers < 1:
            raise ConfigError(f"max_workers must be at least 1, got {settings.max_workers}")
        if not settings.xi_values or any(v == 0 for v in settings.xi_values):
            raise ConfigError("xi_values must be nonzero")
        if not settings.unipotent_values:
            raise ConfigError("unipotent_values cannot be empty")
        return settings

    def validate(self, flags: Optional[Mapping[str, Any]] = None,
                 environ: Optional[Mapping[str, str]] = None) -> RunConfig:
        """Merge flags > environment > YAML > defaults and check the result"""
        self._check_sections()
        run: Dict[str, Any] = dict(self.config.get('run') or {})
        if environ and environ.get(MAX_N_ENV):
            run['max_n'] = environ[MAX_N_ENV]
        for key, value in (flags or {}).items():
            if value is not None:
                run[key] = value

        defaults = RunConfig()
        n = self._as_int('n', run.get('n', defaults.n))
        max_n = self._as_int('max_n', run.get('max_n', defaults.max_n))
        seed = self._as_int('seed', run.get('seed', defaults.seed))
        mode = str(run.get('mode', defaults.mode)).upper()
        fmt = run.get('format', defaults.format)
        fmt = str(fmt).lower() if fmt is not None else None
        output = run.get('output', defaults.output)

        if n < 1:
            raise ConfigError(f"n must be positive, got {n}")
        if n > max_n:
            raise ConfigError(f"n={n} exceeds max_n={max_n}")
        if mode not in MODES:
            raise ConfigError(f"Unknown mode {mode!r}; expected one of {', '.join(MODES)}")
        if fmt is not None and fmt not in FORMATS:
            raise ConfigError(f"Unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
        if not 0 <= seed < 2 ** 64:
            raise ConfigError(f"seed must fit in 64 bits, got {seed}")

        config = RunConfig(n=n, mode=mode, seed=seed, max_n=max_n,
                           output=str(output) if output else None, format=fmt,
                           verification=self._verification())
        logging.info(f"Run config: n={n} mode={mode} seed={seed} max_n={max_n} format={fmt}")
        return config
