"""The complete regulator: fuzzify, infer, defuzzify, and response sweeps."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .defuzz import defuzz_cog
from .errors import NonFiniteInput, ValidationError, ZeroMass
from .inference import Rule, RuleBase, infer
from .membership import (
    FuzzySet,
    LinguisticTerm,
    LinguisticVariable,
    SShoulder,
    Triangular,
    Universe,
    ZShoulder,
    _readonly,
    discretize,
    singleton_fuzzify,
)


class DefuzzPolicy(Enum):
    CENTER_OF_GRAVITY = "cog"


class ZeroMassPolicy(Enum):
    """What to do when no rule fires: fail loudly, or emit the output
    universe's midpoint and flag the trace."""

    ERROR = "error"
    MIDPOINT = "midpoint"


@dataclass(frozen=True, eq=False)
class EvalTrace:
    """Every intermediate stage of one evaluation, for inspection and audit."""

    input: float
    clamped_input: float
    activations: np.ndarray
    aggregated: FuzzySet
    output: float
    zero_mass_fallback: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "activations", _readonly(self.activations))


@dataclass(frozen=True)
class Regulator:
    """Immutable single-input single-output Mamdani controller.

    The consequent term sets are discretized once, on construction, over an
    output universe resampled at ``output_resolution`` points (defaulting to
    the output variable's own sample count). Evaluation is pure, so one
    regulator may serve any number of threads.
    """

    rulebase: RuleBase
    output_resolution: int | None = None
    defuzz_policy: DefuzzPolicy = DefuzzPolicy.CENTER_OF_GRAVITY
    zero_mass_policy: ZeroMassPolicy = ZeroMassPolicy.ERROR

    def __post_init__(self) -> None:
        out_var = self.rulebase.output_var
        if self.output_resolution is None:
            object.__setattr__(self, "output_resolution", out_var.universe.n)
        res = self.output_resolution
        if isinstance(res, bool) or res != int(res):
            raise ValidationError(f"output_resolution must be an integer, got {res!r}")
        object.__setattr__(self, "output_resolution", int(res))
        if self.output_resolution < 2:
            raise ValidationError(
                f"output_resolution must be at least 2, got {self.output_resolution}"
            )
        if not isinstance(self.defuzz_policy, DefuzzPolicy):
            raise ValidationError(f"unknown defuzzification policy {self.defuzz_policy!r}")
        if not isinstance(self.zero_mass_policy, ZeroMassPolicy):
            raise ValidationError(f"unknown zero-mass policy {self.zero_mass_policy!r}")

        universe = Universe(out_var.universe.min, out_var.universe.max, self.output_resolution)
        consequents = tuple(discretize(term.mf, universe) for term in out_var.terms)
        object.__setattr__(self, "_output_universe", universe)
        object.__setattr__(self, "_consequents", consequents)

    @property
    def input_var(self) -> LinguisticVariable:
        return self.rulebase.input_var

    @property
    def output_var(self) -> LinguisticVariable:
        return self.rulebase.output_var

    @property
    def output_universe(self) -> Universe:
        return self._output_universe

    @property
    def consequent_sets(self) -> tuple[FuzzySet, ...]:
        """Cached discretization of each output term, in term order."""
        return self._consequents

    def evaluate(self, x0: float) -> EvalTrace:
        """Run the full pipeline for one crisp input and keep every stage.

        Out-of-range inputs are clamped to the input universe. When no rule
        fires, the behavior follows the zero-mass policy.
        """
        x = float(x0)
        if not math.isfinite(x):
            raise NonFiniteInput(f"crisp input must be finite, got {x0!r}")
        clamped = self.input_var.universe.clamp(x)
        activations = singleton_fuzzify(clamped, self.input_var)
        aggregated = infer(self.rulebase, activations, self._consequents)
        fallback = False
        try:
            output = defuzz_cog(aggregated)
        except ZeroMass:
            if self.zero_mass_policy is ZeroMassPolicy.ERROR:
                raise
            output = self._output_universe.midpoint
            fallback = True
        return EvalTrace(
            input=x,
            clamped_input=clamped,
            activations=activations,
            aggregated=aggregated,
            output=output,
            zero_mass_fallback=fallback,
        )

    def sweep(self, steps: int) -> list[tuple[float, float]]:
        """Response curve: evaluate ``steps`` evenly spaced inputs spanning
        the input universe and return (input, output) pairs in input order."""
        if isinstance(steps, bool) or steps != int(steps) or int(steps) < 2:
            raise ValidationError(f"sweep needs at least 2 steps, got {steps!r}")
        u = self.input_var.universe
        pairs = []
        for x in np.linspace(u.min, u.max, int(steps)):
            x = float(x)
            try:
                trace = self.evaluate(x)
            except ZeroMass as exc:
                raise ZeroMass(f"at input {x}: {exc}") from exc
            pairs.append((x, trace.output))
        return pairs


def reference_regulator() -> Regulator:
    """The built-in five-term temperature controller.

    Temperature runs over [0, 100] with terms TFJ (very low), TJ (low),
    TM (medium), TI (high) and TFI (very high); the normalized command over
    [0, 1] with terms CVS (very small) through CVB (very big). Adjacent
    terms cross at grade 0.5 and each input term drives exactly one rule:
    the colder the reading, the bigger the command.
    """
    temperature = LinguisticVariable(
        "Temperature",
        Universe(0.0, 100.0, 101),
        (
            LinguisticTerm("TFJ", ZShoulder(0.0, 25.0)),
            LinguisticTerm("TJ", Triangular(0.0, 25.0, 50.0)),
            LinguisticTerm("TM", Triangular(25.0, 50.0, 75.0)),
            LinguisticTerm("TI", Triangular(50.0, 75.0, 100.0)),
            LinguisticTerm("TFI", SShoulder(75.0, 100.0)),
        ),
    )
    command = LinguisticVariable(
        "Command",
        Universe(0.0, 1.0, 101),
        (
            LinguisticTerm("CVS", ZShoulder(0.0, 0.25)),
            LinguisticTerm("CS", Triangular(0.0, 0.25, 0.5)),
            LinguisticTerm("CM", Triangular(0.25, 0.5, 0.75)),
            LinguisticTerm("CB", Triangular(0.5, 0.75, 1.0)),
            LinguisticTerm("CVB", SShoulder(0.75, 1.0)),
        ),
    )
    rules = tuple(Rule(i, 4 - i) for i in range(5))
    return Regulator(RuleBase(temperature, command, rules))
