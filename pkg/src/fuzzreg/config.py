"""Declarative controller definitions.

A controller is a single YAML document with three required sections and
three optional ones::

    input:                  # the measured variable
      name: Temperature
      range: [0.0, 100.0]   # universe bounds, min < max
      samples: 101          # universe sample count, >= 2
      terms:
        - name: TFJ
          type: zshoulder   # triangular | trapezoidal | gaussian
          params: [0.0, 25.0]  #   | zshoulder | sshoulder
    output:                 # the commanded variable, same layout
      ...
    rules:                  # one entry per rule; 'if' names an input term,
      - {if: TFJ, then: CVB}   # 'then' an output term; no input term twice
    defuzzification: cog    # optional; 'cog' is the only method
    zero_mass: error        # optional; 'error' or 'midpoint'
    output_resolution: 101  # optional; defaults to the output samples

Parameter counts per shape: triangular 3 (a <= b <= c), trapezoidal 4
(a <= b <= c <= d), gaussian 2 (center, sigma > 0), zshoulder/sshoulder 2
(a < b). Every structural problem is reported with the path of the
offending field.
"""

from __future__ import annotations

from dataclasses import fields
from pathlib import Path

import yaml

from .errors import InvalidUniverse, ParseError, ValidationError
from .inference import Rule, RuleBase
from .membership import (
    Gaussian,
    LinguisticTerm,
    LinguisticVariable,
    MembershipFunction,
    SShoulder,
    Trapezoidal,
    Triangular,
    Universe,
    ZShoulder,
    mf_parameters,
)
from .regulator import DefuzzPolicy, Regulator, ZeroMassPolicy

MF_TYPES: dict[str, type[MembershipFunction]] = {
    "triangular": Triangular,
    "trapezoidal": Trapezoidal,
    "gaussian": Gaussian,
    "zshoulder": ZShoulder,
    "sshoulder": SShoulder,
}

_MF_NAMES = {cls: name for name, cls in MF_TYPES.items()}


def _require(mapping: dict, key: str, path: str):
    if key not in mapping:
        raise ValidationError(f"{path}: missing required key {key!r}")
    return mapping[key]


def _check_mapping(value, path: str, allowed: set[str]) -> dict:
    if not isinstance(value, dict):
        raise ValidationError(f"{path}: expected a mapping, got {type(value).__name__}")
    for key in value:
        if key not in allowed:
            raise ValidationError(f"{path}: unknown key {key!r}")
    return value


def _number(value, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"{path}: expected a number, got {value!r}")
    return float(value)


def _integer(value, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{path}: expected an integer, got {value!r}")
    return value


def _string(value, path: str) -> str:
    if not isinstance(value, str) or not value:
        raise ValidationError(f"{path}: expected a non-empty string, got {value!r}")
    return value


def _parse_term(doc, path: str) -> LinguisticTerm:
    term = _check_mapping(doc, path, {"name", "type", "params"})
    name = _string(_require(term, "name", path), f"{path}.name")
    type_name = _string(_require(term, "type", path), f"{path}.type")
    if type_name not in MF_TYPES:
        raise ValidationError(
            f"{path}.type: unknown membership type {type_name!r}; "
            f"expected one of {sorted(MF_TYPES)}"
        )
    cls = MF_TYPES[type_name]
    raw = _require(term, "params", path)
    if not isinstance(raw, list):
        raise ValidationError(f"{path}.params: expected a list of numbers")
    arity = len(fields(cls))
    if len(raw) != arity:
        raise ValidationError(
            f"{path}.params: {type_name} takes {arity} parameters, got {len(raw)}"
        )
    params = [_number(p, f"{path}.params[{i}]") for i, p in enumerate(raw)]
    try:
        mf = cls(*params)
    except ValidationError as exc:
        raise ValidationError(f"{path}.params: {exc}") from None
    return LinguisticTerm(name, mf)


def _parse_variable(doc, path: str) -> LinguisticVariable:
    var = _check_mapping(doc, path, {"name", "range", "samples", "terms"})
    name = _string(_require(var, "name", path), f"{path}.name")
    rng = _require(var, "range", path)
    if not isinstance(rng, list) or len(rng) != 2:
        raise ValidationError(f"{path}.range: expected [min, max]")
    lo = _number(rng[0], f"{path}.range[0]")
    hi = _number(rng[1], f"{path}.range[1]")
    samples = _integer(_require(var, "samples", path), f"{path}.samples")
    terms_doc = _require(var, "terms", path)
    if not isinstance(terms_doc, list) or not terms_doc:
        raise ValidationError(f"{path}.terms: expected a non-empty list")
    terms = tuple(
        _parse_term(t, f"{path}.terms[{i}]") for i, t in enumerate(terms_doc)
    )
    try:
        universe = Universe(lo, hi, samples)
        return LinguisticVariable(name, universe, terms)
    except (InvalidUniverse, ValidationError) as exc:
        raise ValidationError(f"{path}: {exc}") from None


def _parse_rules(doc, path: str, input_var, output_var) -> tuple[Rule, ...]:
    if not isinstance(doc, list) or not doc:
        raise ValidationError(f"{path}: expected a non-empty list of rules")
    rules = []
    for i, entry in enumerate(doc):
        rule_path = f"{path}[{i}]"
        rule = _check_mapping(entry, rule_path, {"if", "then"})
        ant_name = _string(_require(rule, "if", rule_path), f"{rule_path}.if")
        cons_name = _string(_require(rule, "then", rule_path), f"{rule_path}.then")
        try:
            ant = input_var.term_index(ant_name)
        except ValidationError:
            raise ValidationError(
                f"{rule_path}.if: unknown input term {ant_name!r}"
            ) from None
        try:
            cons = output_var.term_index(cons_name)
        except ValidationError:
            raise ValidationError(
                f"{rule_path}.then: unknown output term {cons_name!r}"
            ) from None
        rules.append(Rule(ant, cons))
    return tuple(rules)


_TOP_KEYS = {"input", "output", "rules", "defuzzification", "zero_mass", "output_resolution"}


def parse_config(document: str) -> Regulator:
    """Build a fully validated regulator from a controller document.

    Raises :class:`ParseError` when the document is not valid YAML and
    :class:`ValidationError` (naming the offending path) when it is
    well-formed but violates an invariant.
    """
    try:
        doc = yaml.safe_load(document)
    except yaml.YAMLError as exc:
        raise ParseError(f"not a valid controller document: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError(
            f"controller document must be a mapping, got {type(doc).__name__}"
        )
    _check_mapping(doc, "document", _TOP_KEYS)

    input_var = _parse_variable(_require(doc, "input", "document"), "input")
    output_var = _parse_variable(_require(doc, "output", "document"), "output")
    rules = _parse_rules(_require(doc, "rules", "document"), "rules", input_var, output_var)

    defuzz_name = doc.get("defuzzification", DefuzzPolicy.CENTER_OF_GRAVITY.value)
    try:
        defuzz = DefuzzPolicy(_string(defuzz_name, "defuzzification"))
    except ValueError:
        raise ValidationError(
            f"defuzzification: unknown method {defuzz_name!r}; expected "
            f"{sorted(p.value for p in DefuzzPolicy)}"
        ) from None

    zero_mass_name = doc.get("zero_mass", ZeroMassPolicy.ERROR.value)
    try:
        zero_mass = ZeroMassPolicy(_string(zero_mass_name, "zero_mass"))
    except ValueError:
        raise ValidationError(
            f"zero_mass: unknown policy {zero_mass_name!r}; expected "
            f"{sorted(p.value for p in ZeroMassPolicy)}"
        ) from None

    resolution = doc.get("output_resolution")
    if resolution is not None:
        resolution = _integer(resolution, "output_resolution")

    try:
        rulebase = RuleBase(input_var, output_var, rules)
    except ValidationError as exc:
        raise ValidationError(f"rules: {exc}") from None
    try:
        return Regulator(
            rulebase,
            output_resolution=resolution,
            defuzz_policy=defuzz,
            zero_mass_policy=zero_mass,
        )
    except ValidationError as exc:
        raise ValidationError(f"output_resolution: {exc}") from None


def load_config(path) -> Regulator:
    """Read and parse a controller file."""
    return parse_config(Path(path).read_text(encoding="utf-8"))


def _variable_doc(var: LinguisticVariable) -> dict:
    return {
        "name": var.name,
        "range": [var.universe.min, var.universe.max],
        "samples": var.universe.n,
        "terms": [
            {
                "name": term.name,
                "type": _MF_NAMES[type(term.mf)],
                "params": mf_parameters(term.mf),
            }
            for term in var.terms
        ],
    }


def serialize_config(reg: Regulator) -> str:
    """Render a regulator back to its controller document.

    Round-trips: parsing the output yields a structurally equal regulator.
    """
    in_names = reg.rulebase.input_var.term_names
    out_names = reg.rulebase.output_var.term_names
    doc = {
        "input": _variable_doc(reg.rulebase.input_var),
        "output": _variable_doc(reg.rulebase.output_var),
        "rules": [
            {"if": in_names[rule.antecedent], "then": out_names[rule.consequent]}
            for rule in reg.rulebase.rules
        ],
        "defuzzification": reg.defuzz_policy.value,
        "zero_mass": reg.zero_mass_policy.value,
        "output_resolution": reg.output_resolution,
    }
    return yaml.safe_dump(doc, sort_keys=False, default_flow_style=False)


def reference_config_path() -> Path:
    """Location of the shipped reference controller file."""
    return Path(__file__).parent / "data" / "reference.yaml"
