"""
Symbolic description of an almost-periodic diagonal sequence d_n.

A PotentialSpec is immutable and validated on construction. The module
also holds the codec between specs and the `[potential]` block of a run
configuration (string keys and values).
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

import numpy as np

from src.errors import PotentialSpecError
from src.potentials.config import MAX_POLY_DEGREE


class PotentialKind(str, Enum):
    COSINE_COMPOSED = "cosine"
    TRIG_POLYNOMIAL = "trig"
    CONSTANT = "constant"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class TrigTerm:
    """One real character amplitude * cos(n * frequency + phase)."""

    amplitude: float
    frequency: float
    phase: float = 0.0


@dataclass(frozen=True)
class PotentialSpec:
    """
    Generator of a bounded real bilateral sequence d = {d_n : n in Z}.

    Only the fields belonging to `kind` are meaningful:
        cosine   -> coeffs (ascending degree) and theta or theta_over_pi
        trig     -> terms
        constant -> value
        explicit -> samples, origin (index of samples[0])
    """

    kind: PotentialKind
    coeffs: Tuple[float, ...] = ()
    theta: float = 0.0
    theta_over_pi: Optional[float] = None
    terms: Tuple[TrigTerm, ...] = ()
    value: float = 0.0
    samples: Tuple[float, ...] = field(default=(), repr=False)
    origin: int = 0

    def __post_init__(self):
        try:
            kind = PotentialKind(self.kind)
        except ValueError:
            raise PotentialSpecError(f"Unknown potential kind {self.kind!r}", key="kind")
        object.__setattr__(self, "kind", kind)

        if kind is PotentialKind.COSINE_COMPOSED:
            if not self.coeffs:
                raise PotentialSpecError("cosine potential needs at least one coefficient", key="coeffs")
            if len(self.coeffs) - 1 > MAX_POLY_DEGREE:
                raise PotentialSpecError(
                    f"polynomial degree {len(self.coeffs) - 1} exceeds {MAX_POLY_DEGREE}", key="coeffs"
                )
            _require_finite(self.coeffs, "coeffs")
            angle = self.theta if self.theta_over_pi is None else self.theta_over_pi
            _require_finite((angle,), "theta" if self.theta_over_pi is None else "theta_over_pi")
            if self.theta_over_pi is not None:
                object.__setattr__(self, "theta", float(self.theta_over_pi) * np.pi)
        elif kind is PotentialKind.TRIG_POLYNOMIAL:
            if not self.terms:
                raise PotentialSpecError("trig potential needs at least one term", key="terms")
            for term in self.terms:
                _require_finite((term.amplitude, term.frequency, term.phase), "terms")
        elif kind is PotentialKind.CONSTANT:
            _require_finite((self.value,), "value")
        else:
            if not self.samples:
                raise PotentialSpecError("explicit potential needs samples", key="samples")
            _require_finite(self.samples, "samples")

        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))
        object.__setattr__(self, "samples", tuple(float(s) for s in self.samples))
        object.__setattr__(self, "origin", int(self.origin))

    # -- convenience constructors -------------------------------------------

    @classmethod
    def constant(cls, value: float) -> "PotentialSpec":
        return cls(kind=PotentialKind.CONSTANT, value=float(value))

    @classmethod
    def cosine(cls, coeffs, theta: Optional[float] = None,
               theta_over_pi: Optional[float] = None) -> "PotentialSpec":
        if (theta is None) == (theta_over_pi is None):
            raise PotentialSpecError("give exactly one of theta, theta_over_pi", key="theta")
        return cls(kind=PotentialKind.COSINE_COMPOSED, coeffs=tuple(coeffs),
                   theta=0.0 if theta is None else float(theta),
                   theta_over_pi=None if theta_over_pi is None else float(theta_over_pi))

    @classmethod
    def almost_mathieu(cls, theta: float, coupling: float = 1.0) -> "PotentialSpec":
        """d_n = 2 * coupling * cos(n * theta)."""
        return cls.cosine((0.0, 2.0 * coupling), theta=theta)

    @classmethod
    def trig(cls, terms) -> "PotentialSpec":
        return cls(kind=PotentialKind.TRIG_POLYNOMIAL,
                   terms=tuple(t if isinstance(t, TrigTerm) else TrigTerm(*t) for t in terms))

    @classmethod
    def explicit(cls, samples, origin: int = 0) -> "PotentialSpec":
        return cls(kind=PotentialKind.EXPLICIT, samples=tuple(samples), origin=origin)

    def with_angle(self, theta: Optional[float] = None,
                   theta_over_pi: Optional[float] = None) -> "PotentialSpec":
        """Copy of a cosine spec with the same v and another angle."""
        return PotentialSpec.cosine(self.coeffs, theta=theta, theta_over_pi=theta_over_pi)

    @property
    def stored_range(self) -> Tuple[int, int]:
        """Inclusive index range covered by Explicit samples."""
        return self.origin, self.origin + len(self.samples) - 1


def _require_finite(values, key: str) -> None:
    if not np.all(np.isfinite(np.asarray(values, dtype=float))):
        raise PotentialSpecError(f"non-finite entry in {key}", key=key)


def potential_bound(spec: PotentialSpec) -> float:
    """
    Computable bound B(spec) with sup_n |d_n| <= B.

    For cosine potentials this is the sum of |coefficients|, which bounds
    |v| on [-1, 1].
    """
    if spec.kind is PotentialKind.COSINE_COMPOSED:
        return float(np.sum(np.abs(spec.coeffs)))
    if spec.kind is PotentialKind.TRIG_POLYNOMIAL:
        return float(sum(abs(t.amplitude) for t in spec.terms))
    if spec.kind is PotentialKind.CONSTANT:
        return abs(spec.value)
    return float(np.max(np.abs(spec.samples)))


# ---------------------------------------------------------------------------
# Config-block codec
# ---------------------------------------------------------------------------

def _parse_floats(raw: str, key: str) -> Tuple[float, ...]:
    try:
        return tuple(float(tok) for tok in raw.replace(",", " ").split())
    except ValueError:
        raise PotentialSpecError(f"could not parse numbers from {raw!r}", key=key)


def _parse_ratio(raw: str, key: str) -> float:
    try:
        return float(Fraction(raw.strip()))
    except (ValueError, ZeroDivisionError):
        raise PotentialSpecError(f"could not parse {raw!r} as a number or p/q", key=key)


def potential_from_mapping(block: Mapping[str, str]) -> PotentialSpec:
    """
    Build a PotentialSpec from the string keys of a `[potential]` block.

    Keys: kind, coeffs (ascending degree, comma separated), theta,
    theta_over_pi (float or p/q), terms ("amp freq phase" groups separated
    by ';'), value, samples (comma separated), origin.

    Raises:
        PotentialSpecError: naming the offending key.
    """
    block = {k.strip().lower(): str(v).strip() for k, v in block.items()}
    if "kind" not in block:
        raise PotentialSpecError("missing potential kind", key="kind")
    kind_raw = block["kind"].lower()
    try:
        kind = PotentialKind(kind_raw)
    except ValueError:
        raise PotentialSpecError(f"unknown kind {kind_raw!r}", key="kind")

    if kind is PotentialKind.COSINE_COMPOSED:
        coeffs = _parse_floats(block.get("coeffs", ""), "coeffs")
        if "theta_over_pi" in block:
            return PotentialSpec(kind=kind, coeffs=coeffs,
                                 theta_over_pi=_parse_ratio(block["theta_over_pi"], "theta_over_pi"))
        if "theta" not in block:
            raise PotentialSpecError("cosine potential needs theta or theta_over_pi", key="theta")
        return PotentialSpec(kind=kind, coeffs=coeffs, theta=_parse_ratio(block["theta"], "theta"))

    if kind is PotentialKind.TRIG_POLYNOMIAL:
        terms = []
        for group in filter(None, (g.strip() for g in block.get("terms", "").split(";"))):
            numbers = _parse_floats(group, "terms")
            if len(numbers) not in (2, 3):
                raise PotentialSpecError(f"term {group!r} needs 'amp freq [phase]'", key="terms")
            terms.append(TrigTerm(*numbers))
        return PotentialSpec(kind=kind, terms=tuple(terms))

    if kind is PotentialKind.CONSTANT:
        if "value" not in block:
            raise PotentialSpecError("constant potential needs value", key="value")
        return PotentialSpec(kind=kind, value=_parse_ratio(block["value"], "value"))

    try:
        origin = int(block.get("origin", "0"))
    except ValueError:
        raise PotentialSpecError(f"origin must be an integer, got {block['origin']!r}", key="origin")
    return PotentialSpec(kind=kind, samples=_parse_floats(block.get("samples", ""), "samples"),
                         origin=origin)


def potential_to_mapping(spec: PotentialSpec) -> Dict[str, str]:
    """Inverse of `potential_from_mapping` (17 significant digits)."""
    fmt = "{:.17g}".format
    out = {"kind": spec.kind.value}
    if spec.kind is PotentialKind.COSINE_COMPOSED:
        out["coeffs"] = ", ".join(fmt(c) for c in spec.coeffs)
        if spec.theta_over_pi is not None:
            out["theta_over_pi"] = fmt(spec.theta_over_pi)
        else:
            out["theta"] = fmt(spec.theta)
    elif spec.kind is PotentialKind.TRIG_POLYNOMIAL:
        out["terms"] = "; ".join(
            f"{fmt(t.amplitude)} {fmt(t.frequency)} {fmt(t.phase)}" for t in spec.terms
        )
    elif spec.kind is PotentialKind.CONSTANT:
        out["value"] = fmt(spec.value)
    else:
        out["samples"] = ", ".join(fmt(s) for s in spec.samples)
        out["origin"] = str(spec.origin)
    return out
