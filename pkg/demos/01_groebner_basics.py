"""
Groebner bases, dimension and regular sequences
===============================================

Polynomials live in a fixed ring: a number of variables and an exact field.
"""
from quadsub import GF32003, Ideal, buchberger, dimension, height, is_regular_sequence
from quadsub.io import parse_polynomial

names = ["x", "y", "z"]


def P(text):
    return parse_polynomial(text, names, GF32003, max_degree=None)


# A reduced Groebner basis in graded reverse lexicographic order
I = Ideal([P("x^2 - y*z"), P("x*y - z^2")])
G = buchberger(I)
for g in G:
    print("  ", g.to_str(names))

# Membership is a normal form computation
print("x^3*y - x*y^2*z in I:", I.contains(P("x^3*y - x*y^2*z")))
print("x*z in I:", I.contains(P("x*z")))

# Dimension comes from the leading monomials; height is the codimension
print("dim R/I =", dimension(I), " height I =", height(I))

# Two forms are a regular sequence exactly when their height is 2
print("regular:", is_regular_sequence(I.generators).verdict)
print("x*y, x*z regular:", is_regular_sequence([P("x*y"), P("x*z")]).verdict)
