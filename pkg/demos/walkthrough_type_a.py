"""Type A walk-through: count orbits, build tableau words, check the codimension formula.

Run with ``python demos/walkthrough_type_a.py``.
"""

from flagorbits.orbits import count_orbits, hook_component_count, hook_factor
from flagorbits.resolve import dim_orbit_oracle, fix_representative, formula_codim
from flagorbits.tableaux import enumerate_tableaux, tableau_to_w
from flagorbits.weyl import ModelSpec, type_length, weyl_group

spec = ModelSpec("A", 5, 2)
print(f"model {spec}: {count_orbits(spec)} orbits = "
      f"{hook_component_count(5, 2)} components x {hook_factor(5, 2)}")

print("\ntableaux and their words")
for t in enumerate_tableaux(5, 2):
    w = tableau_to_w(t).w
    print(t.render().replace("\n", " / "), "->", w, " length", type_length(w, spec))

print("\ncorrected representatives (first five v)")
for v in weyl_group(spec)[:5]:
    _, w = fix_representative(v, spec)
    dz, dzb, codim = dim_orbit_oracle(w, spec)
    print(f"v={v}  w={w}  codim={codim}  formula={formula_codim(w, spec)}")
