"""Scenario configuration for the IRS-aided full-duplex link.

All powers and noise variances are stored in linear units (watts).  JSON
configuration files carry ``p1``, ``p2``, ``sigma1_sq`` and ``sigma2_sq``
in dBW instead; :func:`load_config` converts them exactly once at load
time so that every downstream computation stays in linear scale.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

__all__ = [
    "PhaseConstraint",
    "SystemConfig",
    "load_config",
    "dbw_to_watts",
    "watts_to_dbw",
    "UNIT_MODULUS",
    "AMPLITUDE_BOUNDED",
    "DISCRETE",
]

UNIT_MODULUS = "unit_modulus"
AMPLITUDE_BOUNDED = "amplitude_bounded"
DISCRETE = "discrete"


def dbw_to_watts(x_dbw: float) -> float:
    return 10.0 ** (x_dbw / 10.0)


def watts_to_dbw(x_w: float) -> float:
    return 10.0 * math.log10(x_w)


@dataclass(frozen=True)
class PhaseConstraint:
    """Per-element constraint on the IRS reflection coefficients.

    kind:
        ``unit_modulus``      every coefficient satisfies ``|theta_n| = 1``
        ``amplitude_bounded`` coefficients satisfy ``|theta_n| <= 1``
        ``discrete``          unit modulus with phases on a uniform grid of
                              ``2**bits`` levels
    """

    kind: str = UNIT_MODULUS
    bits: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in (UNIT_MODULUS, AMPLITUDE_BOUNDED, DISCRETE):
            raise ValueError(f"unknown phase constraint kind: {self.kind!r}")
        if self.kind == DISCRETE:
            if self.bits is None or self.bits < 1:
                raise ValueError("discrete phase constraint requires bits >= 1")
        elif self.bits is not None:
            raise ValueError("bits is only meaningful for the discrete constraint")

    @classmethod
    def unit_modulus(cls) -> "PhaseConstraint":
        return cls(UNIT_MODULUS)

    @classmethod
    def amplitude_bounded(cls) -> "PhaseConstraint":
        return cls(AMPLITUDE_BOUNDED)

    @classmethod
    def discrete(cls, bits: int) -> "PhaseConstraint":
        return cls(DISCRETE, bits)

    @classmethod
    def parse(cls, value) -> "PhaseConstraint":
        """Accept ``"unit_modulus"``, ``"discrete:2"`` or a ``{"kind", "bits"}`` mapping."""
        if isinstance(value, PhaseConstraint):
            return value
        if isinstance(value, dict):
            return cls(value["kind"], value.get("bits"))
        if isinstance(value, str):
            if value.startswith(f"{DISCRETE}:"):
                return cls.discrete(int(value.split(":", 1)[1]))
            return cls(value)
        raise ValueError(f"cannot parse phase constraint from {value!r}")

    @property
    def label(self) -> str:
        if self.kind == DISCRETE:
            return f"{DISCRETE}_b{self.bits}"
        return self.kind


@dataclass(frozen=True)
class SystemConfig:
    """Full scenario description.

    Geometry: node S1 sits at the origin, node S2 at ``(d_s1s2, 0)``, and
    the IRS at ``(d_s1i_h, d_v)``, i.e. on a line parallel to the S1-S2
    axis at vertical offset ``d_v``.
    """

    m_antennas: int = 4
    n_elements: int = 40
    p1: float = dbw_to_watts(15.0)          # transmit power budgets, watts
    p2: float = dbw_to_watts(15.0)
    sigma1_sq: float = dbw_to_watts(-80.0)  # receiver noise variances, watts
    sigma2_sq: float = dbw_to_watts(-80.0)
    d_s1s2: float = 50.0                    # node separation, m
    d_s1i_h: float = 45.0                   # horizontal S1-to-IRS offset, m
    d_v: float = 2.0                        # vertical IRS offset, m
    pl_ref_db: float = -30.0                # path loss at the reference distance, dB
    d_ref: float = 1.0                      # reference distance, m
    ple_s1i: float = 2.5                    # path loss exponents per link
    ple_is2: float = 2.5
    ple_s2i: float = 2.5
    ple_is1: float = 2.5
    ple_direct: float = 3.5
    li_pl_db: float = -90.0                 # residual loop-interference path loss, dB
    rician_k_db: float = 5.0                # Rician factor of the LI channels, dB
    phase_constraint: PhaseConstraint = field(default_factory=PhaseConstraint.unit_modulus)
    epsilon: float = 1e-3                   # relative sum-rate change at convergence
    max_iters: int = 500
    seed: int = 20240

    def __post_init__(self) -> None:
        if self.m_antennas < 1:
            raise ValueError("m_antennas must be >= 1")
        if self.n_elements < 1:
            raise ValueError("n_elements must be >= 1")
        for name in ("p1", "p2", "sigma1_sq", "sigma2_sq"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"{name} must be positive (watts)")
        if self.d_s1s2 <= 0.0:
            raise ValueError("d_s1s2 must be positive")
        if not 0.0 <= self.d_s1i_h <= self.d_s1s2:
            raise ValueError("d_s1i_h must lie within [0, d_s1s2]")
        if self.d_v < 0.0:
            raise ValueError("d_v must be nonnegative")
        if self.d_ref <= 0.0:
            raise ValueError("d_ref must be positive")
        if self.epsilon <= 0.0:
            raise ValueError("epsilon must be positive")
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be nonnegative")

    @classmethod
    def from_dict(cls, data: dict) -> "SystemConfig":
        """Build a config from a JSON-style dict; powers and noise are dBW."""
        known = set(cls.__dataclass_fields__)
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        kwargs = dict(data)
        for name in ("p1", "p2", "sigma1_sq", "sigma2_sq"):
            if name in kwargs:
                kwargs[name] = dbw_to_watts(float(kwargs[name]))
        if "phase_constraint" in kwargs:
            kwargs["phase_constraint"] = PhaseConstraint.parse(kwargs["phase_constraint"])
        return cls(**kwargs)


def load_config(path: str | Path) -> SystemConfig:
    """Read a JSON scenario file (powers and noise variances in dBW)."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return SystemConfig.from_dict(data)
