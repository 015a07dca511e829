"""Closure gaps of two small ideals in k[x, y].

For I = (x^2, y^2) the integral closure of I^n is m^(2n) and the gap
lambda(closure(I^n) / I^n) grows linearly. For I = (x^3, x^2 y, y^3) the
closure is m^(3n) but the gap stays at 1 forever: a nonzero gap of degree
below d - 1, which rules out G_I(A) being unmixed and equidimensional.
"""
from monofilt import Filtration, format_ideal, gap_function, integral_closure_power, parse_ideal, power
from monofilt.theorems import check_dichotomy, unmixedness_counterwitness

for text in ("(x^2, y^2)", "(x^3, x^2*y, y^3)"):
    I = parse_ideal(text, "xy")
    print(f"I = {format_ideal(I)}")
    for n in (1, 2, 3):
        print(f"  n={n}  I^n = {format_ideal(power(I, n))}")
        print(f"       closure = {format_ideal(integral_closure_power(I, n))}")

    gap = gap_function(Filtration("integral_closure", I), Filtration("adic", I))
    print(f"  gap values n=1..{gap.fit.last_n}: {list(gap.values)}")
    print(f"  verdict: {gap.verdict}")

    # the dichotomy is only asserted for complete intersections; otherwise it is reported as inapplicable
    for rep in (check_dichotomy(I), unmixedness_counterwitness(I)):
        print(f"  {rep.theorem}: {rep.status.value}")
    print()
