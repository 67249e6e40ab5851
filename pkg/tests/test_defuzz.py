"""Center-of-gravity defuzzification and its algebraic properties."""

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from fuzzreg import FuzzySet, Universe, ZeroMass, defuzz_cog


def cog_oracle(points, grades):
    """The weighted-average loop, written out longhand."""
    s1 = 0.0
    s2 = 0.0
    for p, g in zip(points, grades):
        s1 += g
        s2 += p * g
    return s2 / s1


def _set(lo, hi, grades):
    return FuzzySet(Universe(lo, hi, len(grades)), grades)


class TestExamples:
    def test_uniform_grades_give_mean_of_points(self):
        assert defuzz_cog(_set(0, 2, [1.0, 1.0, 1.0])) == 1.0

    def test_all_mass_at_one_point(self):
        assert defuzz_cog(_set(0, 10, [1.0, 0.0])) == 0.0

    def test_skewed_mass(self):
        # (3*0.1 + 4*0.5 + 5*1.0) / (0.1 + 0.5 + 1.0) = 7.3 / 1.6
        fs = _set(1, 5, [0.0, 0.0, 0.1, 0.5, 1.0])
        assert defuzz_cog(fs) == pytest.approx(4.5625, rel=1e-12)

    def test_zero_mass_raises(self):
        with pytest.raises(ZeroMass):
            defuzz_cog(_set(0, 1, [0.0, 0.0, 0.0]))


@st.composite
def massive_sets(draw):
    n = draw(st.integers(2, 300))
    lo = draw(st.floats(-100, 100, allow_nan=False))
    span = draw(st.floats(0.5, 200, allow_nan=False))
    grades = draw(
        st.lists(st.floats(0, 1), min_size=n, max_size=n).map(np.array)
    )
    assume(grades.sum() > 1e-6)
    return FuzzySet(Universe(lo, lo + span, n), grades)


class TestProperties:
    @given(fs=massive_sets())
    def test_matches_longhand_loop(self, fs):
        y = defuzz_cog(fs)
        assert y == pytest.approx(cog_oracle(fs.universe.points, fs.grades), rel=1e-12)

    @given(fs=massive_sets())
    def test_output_bounded_by_universe(self, fs):
        y = defuzz_cog(fs)
        assert fs.universe.min <= y <= fs.universe.max

    @given(fs=massive_sets(), c=st.floats(1e-3, 1.0, allow_nan=False))
    def test_scaling_grades_leaves_output_unchanged(self, fs, c):
        scaled = FuzzySet(fs.universe, fs.grades * c)
        assert defuzz_cog(scaled) == pytest.approx(defuzz_cog(fs), rel=1e-12)

    @given(fs=massive_sets(), d=st.floats(-100, 100, allow_nan=False))
    def test_shifting_points_shifts_output(self, fs, d):
        try:
            shifted_u = Universe(fs.universe.min + d, fs.universe.max + d, fs.universe.n)
        except Exception:
            assume(False)
        shifted = FuzzySet(shifted_u, fs.grades)
        y = defuzz_cog(fs) + d
        scale = max(1.0, abs(d), abs(fs.universe.min), abs(fs.universe.max))
        assert defuzz_cog(shifted) == pytest.approx(y, abs=1e-11 * scale)

    @given(fs=massive_sets())
    def test_symmetric_grades_give_midpoint(self, fs):
        sym = 0.5 * (fs.grades + fs.grades[::-1])
        if sym.sum() == 0.0:
            assume(False)
        y = defuzz_cog(FuzzySet(fs.universe, sym))
        span = fs.universe.max - fs.universe.min
        assert abs(y - fs.universe.midpoint) <= 1e-12 * span
