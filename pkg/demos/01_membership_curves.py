"""
The five membership shapes
==========================

Builds one term of each shape family over a shared universe, grades a few
crisp values against them, and emits the CSV that a plotting tool would
consume (x in the first column, one grade column per term).
"""

from fuzzreg import (
    Gaussian,
    LinguisticTerm,
    LinguisticVariable,
    SShoulder,
    Trapezoidal,
    Triangular,
    Universe,
    ZShoulder,
    discretize,
    emit_mf_plot_data,
    singleton_fuzzify,
)

universe = Universe(0.0, 100.0, 101)

shapes = LinguisticVariable(
    "Showcase",
    universe,
    (
        LinguisticTerm("falling", ZShoulder(0.0, 30.0)),
        LinguisticTerm("narrow", Triangular(10.0, 30.0, 50.0)),
        LinguisticTerm("plateau", Trapezoidal(30.0, 45.0, 60.0, 75.0)),
        LinguisticTerm("bell", Gaussian(60.0, 8.0)),
        LinguisticTerm("rising", SShoulder(70.0, 100.0)),
    ),
)

# grade a handful of crisp readings against every term
for x in (0.0, 20.0, 45.0, 60.0, 85.0, 100.0):
    grades = singleton_fuzzify(x, shapes)
    row = ", ".join(f"{t.name}={g:.3f}" for t, g in zip(shapes.terms, grades))
    print(f"x = {x:5.1f} -> {row}")

# a discretized term is just the shape sampled at the universe points
bell = discretize(shapes.terms[3].mf, universe)
print("\nbell grades around the center:", bell.grades[58:63].round(4).tolist())

# CSV for plotting; feed it to any tool that reads comma-separated columns
csv = emit_mf_plot_data(shapes, samples=11)
print("\nplot data at 11 samples:")
print(csv)
