"""
The hexagonal wheel, step by step
=================================

Builds the wheel complex on the seven-ray hexagonal fan, checks that it is a
complex, and walks through the filtration of its middle cohomology.
"""
from wheelcoh import build_complex, class_group, validate_wheel
from wheelcoh.cohomology import cohomology_report, components_str
from wheelcoh.fixtures import hex_fan, hex_wheel
from wheelcoh.syzygy import beta_generators

fan = hex_fan()
wheel = hex_wheel()

# the class group of the toric threefold: free of rank 4
cg = class_group(fan)
print("Cl(X) free rank", cg.free_rank, "torsion", cg.torsion)

# the rhombus relations and class consistency
print(validate_wheel(wheel, fan, cg).messages() or "wheel is valid")
complex_ = build_complex(wheel)
print("maps:", [len(complex_.phi1[0]), len(complex_.phi2), len(complex_.phi3)])

# the syzygy generators of the six spokes, in transposition order
for j, beta in enumerate(beta_generators(wheel.f_out), start=1):
    print(f"beta_{j:<2} = {beta}")

# H^-1 is filtered by the ideals I_k; most steps are the unit ideal
report = cohomology_report(wheel, fan)
for step in report.h1_steps:
    if not step.vanishes:
        z = step.subscheme
        print(f"k={step.filtration.k:>2}  I_k={step.filtration.ideal}  "
              f"support {components_str(z.components) or 'empty'}")
print("vanishing steps:", report.vanishing_steps())
print("H^0 zero:", report.h0.empty, " H^-2 zero:", report.h2.zero)
