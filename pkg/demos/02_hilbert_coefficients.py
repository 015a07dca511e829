"""Hilbert-Samuel coefficients of the I-adic and integral closure filtrations.

e_0 agrees across the two filtrations, and the closure gap has leading
coefficient ebar_1 - e_1 in the basis C(n + d - 1, d - 1).
"""
from monofilt import Filtration, gap_function, hilbert_profile, parse_ideal

cases = [
    ("(x^2, y^2)", "xy"),
    ("(x^3, y^4)", "xy"),
    ("(x^4, x*y, y^4)", "xy"),
    ("(x^2, y^3, z^2)", "xyz"),
]

print(f"{'ideal':22s} {'e':18s} {'ebar':18s} lead  window")
for text, vars in cases:
    I = parse_ideal(text, vars)
    adic = hilbert_profile(Filtration("adic", I))
    clos = hilbert_profile(Filtration("integral_closure", I))
    gap = gap_function(Filtration("integral_closure", I), Filtration("adic", I))
    lead = gap.fit.coefficient_in_degree(I.dim - 1)
    e, ebar = list(adic.hilbert_coeffs), list(clos.hilbert_coeffs)
    assert e[0] == ebar[0] and lead == ebar[1] - e[1]
    print(f"{text:22s} {str(e):18s} {str(ebar):18s} {lead:4d}  n<={adic.fit.last_n}")

# the raw sequence behind one fit, for inspection
prof = hilbert_profile(Filtration("integral_closure", parse_ideal("(x^2, y^2)", "xy")))
print("\nlambda(A / closure(I^(n+1))) for (x^2, y^2):", list(prof.values))
print("fit:", prof.fit.as_dict())
