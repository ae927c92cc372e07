from pydantic import BaseModel, Field, field_validator, model_validator

from expgroups.freeword.alphabet import validate_generator_names
from expgroups.models.enums import ObfuscationStep, RingKind

DEFAULT_POINTS: list[int] = [-2, -1, 0, 1, 2, 3]
DEFAULT_SELFTEST_CASES: int = 25


class EngineConfigs(BaseModel):
    """
    Configs for an engine session.

    Args:
        - `generators` (list[str]): The free generator names, in declaration order.
        - `ring` (RingKind): The exponent ring. Default is `RingKind.POLYNOMIAL`.
        - `seed` (int): Seed for random generation and obfuscation. Default is 0.
        - `points` (list[int]): Integer points used by `eval` and `probe`. Default is `[-2, -1, 0, 1, 2, 3]`.
        - `selftest_cases` (int): Number of random cases per `selftest` audit. Default is 25.

    Notes:
        - Generator names must be identifiers, unique, distinct from `t` and from the command words.

    Examples:
        ```Python
        configs = EngineConfigs(generators=["a", "b"], ring=RingKind.POLYNOMIAL, seed=7)
        ```
    """

    generators: list[str]
    ring: RingKind = RingKind.POLYNOMIAL
    seed: int = 0
    points: list[int] = Field(default_factory=lambda: list(DEFAULT_POINTS))
    selftest_cases: int = Field(default=DEFAULT_SELFTEST_CASES, ge=1)

    @field_validator("points")
    def _check_points(cls, value: list[int]) -> list[int]:
        """Validates that at least one evaluation point is given."""
        if not value:
            raise ValueError("At least one evaluation point is required")
        return value

    @model_validator(mode="after")
    def _check_generators(self) -> "EngineConfigs":
        """Validates the generator names against the ring indeterminate."""
        validate_generator_names(
            self.generators, "t" if self.ring == RingKind.POLYNOMIAL else None
        )
        return self


class GenParams(BaseModel):
    """
    Parameters of the random element generator.

    Args:
        - `alphabet_size` (int): Number of generators to draw from. Default is 2.
        - `max_level` (int): Highest tower level of a generated element. Default is 2.
        - `max_syllables` (int): Most pieces in a product at each level. Default is 3.
        - `max_degree` (int): Highest degree of a generated exponent. Default is 2.
        - `max_coefficient` (int): Largest absolute coefficient of a generated exponent. Default is 3.
        - `seed` (int): The seed; generation is deterministic per seed. Default is 0.

    Examples:
        ```Python
        params = GenParams(max_level=1, seed=11)
        ```
    """

    alphabet_size: int = Field(default=2, ge=1)
    max_level: int = Field(default=2, ge=0)
    max_syllables: int = Field(default=3, ge=1)
    max_degree: int = Field(default=2, ge=0)
    max_coefficient: int = Field(default=3, ge=1)
    seed: int = 0


class ObfuscationConfigs(BaseModel):
    """
    Configs for the obfuscation step catalog.

    Args:
        - `catalog_version` (int): Version of the step catalog. Only version 1 exists.
        - `weights` (dict[ObfuscationStep, int]): Relative weight of each step. Default is 1 for every step.
        - `max_degree` (int): Highest degree of the random exponents the steps introduce. Default is 1.
        - `max_coefficient` (int): Largest coefficient of those exponents. Default is 2.
    """

    catalog_version: int = 1
    weights: dict[ObfuscationStep, int] = Field(
        default_factory=lambda: {step: 1 for step in ObfuscationStep}
    )
    max_degree: int = Field(default=1, ge=0)
    max_coefficient: int = Field(default=2, ge=1)

    @field_validator("catalog_version")
    def _check_catalog_version(cls, value: int) -> int:
        """Validates the catalog version."""
        if value != 1:
            raise ValueError(f"Unknown obfuscation catalog version {value}")
        return value

    @field_validator("weights")
    def _check_weights(cls, value: dict[ObfuscationStep, int]) -> dict[ObfuscationStep, int]:
        """Validates that weights are non-negative and not all zero."""
        if any(weight < 0 for weight in value.values()) or not any(value.values()):
            raise ValueError("Step weights must be non-negative with at least one positive")
        return value
