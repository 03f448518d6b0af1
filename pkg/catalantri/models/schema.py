"""
Pydantic models shared across catalantri.
These models define the records passed between the triangle, path,
identity and CLI layers.
"""

from enum import Enum
from typing import Any, Callable, Dict, Mapping, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from catalantri.core.exact import Scalar

Evaluator = Callable[[Mapping[str, Scalar]], Scalar]
Constraint = Callable[[Mapping[str, Scalar]], bool]


class TriangleKind(str, Enum):
    """Generator kinds of the base and derived triangles."""

    BALLOT = "C"
    SHAPIRO = "B"
    ADMISSIBLE = "A"
    MOTZKIN = "M"
    X = "X"
    Y = "Y"
    Z = "Z"
    W = "W"

    @property
    def is_derived(self) -> bool:
        """Whether the triangle is a 2x2 transform of the ballot triangle."""
        return self in (TriangleKind.X, TriangleKind.Y, TriangleKind.Z, TriangleKind.W)


class OutputFormat(str, Enum):
    """Output formats understood by the CLI."""

    ASCII = "ascii"
    CSV = "csv"
    JSON = "json"


class ParamSpec(BaseModel):
    """One named parameter of an identity, with its declared domain."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str = Field(description="Parameter name (n, m, l, p, r, k, x, y, ...)")
    minimum: Optional[int] = Field(
        default=0, description="Smallest admissible integer value (None = unbounded)"
    )
    maximum: Optional[int] = Field(
        default=None, description="Largest admissible integer value (None = unbounded)"
    )
    default: Tuple[Any, ...] = Field(
        description="Values checked when the caller does not give a range"
    )
    rational: bool = Field(
        default=False, description="Whether the parameter ranges over rationals"
    )

    def admits(self, value: Scalar) -> bool:
        """Check a single value against the declared bounds."""
        if not self.rational and int(value) != value:
            return False
        if self.minimum is not None and value < self.minimum:
            return False
        if self.maximum is not None and value > self.maximum:
            return False
        return True


class IdentityDescriptor(BaseModel):
    """
    An entry of the identity registry.
    Both sides are pure functions of a parameter assignment; the optional
    tail evaluates the terms a sum would add beyond its stated upper limit
    and must vanish.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    id: str
    title: str = Field(description="Short human-readable name")
    statement: str = Field(description="The identity written out in plain text")
    params: Tuple[ParamSpec, ...]
    lhs: Evaluator
    rhs: Evaluator
    constraint: Optional[Constraint] = Field(
        default=None, description="Cross-parameter domain condition, e.g. m >= l"
    )
    tail: Optional[Evaluator] = Field(
        default=None, description="Terms past the printed summation limit (must be 0)"
    )
    degree_bound: Optional[Evaluator] = Field(
        default=None,
        description="Bound on the degree of both sides in each rational parameter",
    )

    def param(self, name: str) -> ParamSpec:
        """Look up a parameter spec by name."""
        for spec in self.params:
            if spec.name == name:
                return spec
        raise KeyError(name)

    @property
    def param_names(self) -> Tuple[str, ...]:
        return tuple(spec.name for spec in self.params)

    @property
    def rational_names(self) -> Tuple[str, ...]:
        return tuple(spec.name for spec in self.params if spec.rational)


class Counterexample(BaseModel):
    """The first parameter assignment where an identity failed."""

    params: Dict[str, str]
    lhs: str
    rhs: str
    note: Optional[str] = None


class VerificationReport(BaseModel):
    """Outcome of checking one identity (or oracle) over a parameter box."""

    model_config = ConfigDict(populate_by_name=True)

    id: str
    domain: Dict[str, str] = Field(default_factory=dict)
    passed: bool = Field(alias="pass")
    cases: int = 0
    counterexample: Optional[Counterexample] = None
    statement: str = ""

    @model_validator(mode="after")
    def _pass_iff_no_counterexample(self) -> "VerificationReport":
        if self.passed == (self.counterexample is not None):
            raise ValueError("pass must be true exactly when there is no counterexample")
        return self

    def summary(self) -> str:
        """One-line description used by the ascii renderer."""
        if self.passed:
            return f"{self.id}: {self.cases} cases, pass"
        ce = self.counterexample
        params = ", ".join(f"{k}={v}" for k, v in ce.params.items())
        line = f"{self.id}: {self.cases} cases, FAIL at {params}: lhs={ce.lhs} rhs={ce.rhs}"
        if ce.note:
            line += f" ({ce.note})"
        return line
