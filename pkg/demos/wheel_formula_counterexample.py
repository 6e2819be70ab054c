"""
Two closed forms for the first m filtration steps
=================================================

The lcm of all spokes and rim gcds is not the right numerator for I_k when
k <= m; the lcm of spoke pairs around the cycle is.  This script shows a small
wheel on affine 3-space where the two disagree, and asks the oracle which one
is correct.
"""
from wheelcoh import Wheel, validate_wheel
from wheelcoh.monomial import Monomial
from wheelcoh.oracle import oracle_wheel_ideal
from wheelcoh.syzygy import wheel_filtration_ideal
from wheelcoh.toric import Fan

P = lambda text: Monomial.parse(text, 3)
wheel = Wheel.create(
    f_out=[P("x_2"), P("x_1*x_2*x_3"), P("x_1^2*x_2")],
    f_in=[P("x_1^2"), P("1"), P("x_3")],
    rim_fwd=[P("x_2"), P("x_1*x_2*x_3"), P("x_1^3*x_2")],
    rim_bwd=[P("x_1*x_2*x_3"), P("x_1^2*x_2"), P("x_1*x_2")],
)
print(validate_wheel(wheel, Fan.affine_space(3)).messages() or "wheel is valid")

# compare the two closed forms with the fine-graded linear algebra oracle
for k in range(1, 4):
    cycle = wheel_filtration_ideal(wheel, k, formula="cycle").ideal
    spokes = wheel_filtration_ideal(wheel, k, formula="spokes").ideal
    truth = oracle_wheel_ideal(wheel, k)
    print(f"k={k}  cycle {cycle}  all-spokes {spokes}  oracle {truth}")
