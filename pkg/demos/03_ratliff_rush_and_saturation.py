"""Ratliff-Rush closures and saturations of powers.

(x^4, x^3 y, x y^3, y^4) misses x^2 y^2, which its Ratliff-Rush closure
picks up since x^2 y^2 I lies in I^2. The stop rule for the colon chain is a
heuristic, which every result records.
"""
from monofilt import Filtration, format_ideal, parse_ideal, power, ratliff_rush, saturation
from monofilt.filtration import stability_index

I = parse_ideal("(x^4, x^3*y, x*y^3, y^4)", "xy")
res = ratliff_rush(I)
print("I                =", format_ideal(I))
print("RR closure       =", format_ideal(res.closure))
print("chain            =", [format_ideal(c) for c in res.chain])
print("stable from step =", res.stable_from, "(heuristic)" if res.heuristic else "")

for n in range(1, 5):
    J = power(I, n)
    same = ratliff_rush(J).closure == J
    print(f"  RR(I^{n}) == I^{n}: {same}")

print()
for text in ("(x^2, y^2)", "(x^2*y, x*y^2)", "(x^3*y^3)"):
    J = parse_ideal(text, "xy")
    sat = Filtration("saturation", J)
    print(f"{text:16s} sat(I^n), n=1..3: {[format_ideal(sat.term(n)) for n in (1, 2, 3)]}"
          f"  stability index {stability_index(sat, 6)}")
print("\nsat of (x^2*y, x*y^2) =", format_ideal(saturation(parse_ideal("(x^2*y, x*y^2)", "xy"))))
