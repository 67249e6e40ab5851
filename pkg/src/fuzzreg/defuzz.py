"""Center-of-gravity defuzzification."""

from __future__ import annotations

import numpy as np

from .errors import ZeroMass
from .membership import FuzzySet


def defuzz_cog(fset: FuzzySet) -> float:
    """Crisp value of a fuzzy set: sum(x[i] * mu[i]) / sum(mu[i]).

    The discrete sums run over the universe's sample points, so resolution
    is controlled by the universe's sample count. Raises :class:`ZeroMass`
    when every grade is zero rather than silently inventing an answer.
    """
    mass = float(np.sum(fset.grades))
    if mass == 0.0:
        raise ZeroMass("all grades are zero; no rule fired")
    y = float(np.dot(fset.universe.points, fset.grades)) / mass
    # dot-product rounding must not push the result past the end samples
    return fset.universe.clamp(y)
