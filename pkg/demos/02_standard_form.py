"""
Putting forms in standard form
==============================

A list of quadrics and linear forms is normalized by changes of
coordinates. The variables split into leading, front, primary,
secondary and tail blocks, and each quadric decomposes into a front part,
a middle part and a tail part.
"""
from quadsub import GF32003, achieve_standard_form, check_standard_form, key_lemma_check
from quadsub.io import parse_polynomial

names = "x1 x2 x3 x4 x5".split()
F = [parse_polynomial(t, names, GF32003) for t in
     ["-14556*x1^2 + 13437*x2*x4",
      "12160*x2*x3 + 4745*x3^2 + 12117*x1*x4 + 15345*x5^2",
      "7102*x1*x5",
      "15558*x4"]]

st = achieve_standard_form(F, seed=0)
print(f"m={st.m} n={st.n} h={st.h} d={st.d} r={st.r} s={st.s}")
print("leading", st.leading, "front", st.front, "primary", st.primary,
      "secondary", st.secondary, "tail", st.tail)
print("front polynomials:", [str(f) for f in st.front_polys])
print("tail polynomials: ", [str(g) for g in st.tail_polys])
print("front relations:  ", [str(H) for H in st.P.generators])

# Every condition is re-checked; an empty list means all hold
print("failed conditions:", check_standard_form(st))

rep = key_lemma_check(st)
print("key lemma parts ok:", rep.ok, " P height:", rep.P_height, "= n - h =", st.n - st.h)
