"""
Defining a controller declaratively
===================================

Controllers load from a YAML document: two variables (each a universe plus
a list of typed, parameterized terms) and a rule list. The document below
regulates fan speed from CPU load and deliberately leaves part of the
input range uncovered to show the two zero-mass policies.
"""

from fuzzreg import ZeroMass, parse_config, serialize_config

DOCUMENT = """
input:
  name: Load
  range: [0.0, 1.0]
  samples: 101
  terms:
    - {name: idle,   type: zshoulder,  params: [0.1, 0.3]}
    - {name: busy,   type: gaussian,   params: [0.6, 0.08]}
    - {name: pegged, type: sshoulder,  params: [0.8, 0.95]}
output:
  name: Fan
  range: [0.0, 3000.0]
  samples: 121
  terms:
    - {name: slow, type: triangular,   params: [0.0, 500.0, 1200.0]}
    - {name: fast, type: trapezoidal,  params: [1000.0, 1800.0, 2600.0, 3000.0]}
rules:
  - {if: idle,   then: slow}
  - {if: busy,   then: fast}
  - {if: pegged, then: fast}
zero_mass: error
"""

reg = parse_config(DOCUMENT)
print("input terms: ", reg.input_var.term_names)
print("output terms:", reg.output_var.term_names)

# note load 0.30: only the gaussian's far tail fires there, and a clipped
# set's centroid ignores the clip height, so the fan still runs fast
for load in (0.05, 0.3, 0.6, 0.9):
    print(f"load {load:.2f} -> fan {reg.evaluate(load).output:7.1f} rpm")

# the gaussian never quite reaches zero, so nothing is truly uncovered
# here; swap it for a triangle to force a dead zone
dead = parse_config(DOCUMENT.replace(
    "{name: busy,   type: gaussian,   params: [0.6, 0.08]}",
    "{name: busy,   type: triangular,  params: [0.5, 0.6, 0.7]}",
))
try:
    dead.evaluate(0.4)
except ZeroMass as exc:
    print("\nstrict policy at load 0.40:", exc)

relaxed = parse_config(serialize_config(dead).replace("zero_mass: error",
                                                      "zero_mass: midpoint"))
trace = relaxed.evaluate(0.4)
print(f"midpoint policy at load 0.40: fan {trace.output:.1f} rpm "
      f"(fallback={trace.zero_mass_fallback})")

# a regulator serializes back to an equivalent document
assert parse_config(serialize_config(relaxed)) == relaxed
print("\nserialized form round-trips cleanly")
