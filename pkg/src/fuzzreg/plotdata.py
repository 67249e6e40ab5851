"""Plain-text plot data: membership curves and response sweeps as CSV."""

from __future__ import annotations

import numpy as np

from .errors import ValidationError
from .membership import LinguisticVariable


def format_value(v: float) -> str:
    """Six significant digits, locale-independent, '.' decimal separator."""
    return f"{float(v):.6g}"


def emit_mf_plot_data(var: LinguisticVariable, samples: int) -> str:
    """CSV of every term's membership curve sampled across the universe.

    Header is ``x,<term1>,...,<termk>``; one row per sample point.
    """
    if isinstance(samples, bool) or samples != int(samples) or int(samples) < 2:
        raise ValidationError(f"need at least 2 samples, got {samples!r}")
    xs = np.linspace(var.universe.min, var.universe.max, int(samples))
    lines = [",".join(["x"] + [term.name for term in var.terms])]
    for x in xs:
        x = float(x)
        row = [format_value(x)] + [format_value(term.mf(x)) for term in var.terms]
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def emit_sweep_data(pairs) -> str:
    """CSV of (input, output) response pairs with an ``input,output`` header."""
    lines = ["input,output"]
    for x, y in pairs:
        lines.append(f"{format_value(x)},{format_value(y)}")
    return "\n".join(lines) + "\n"
