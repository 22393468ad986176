"""
Small subalgebras generated by regular sequences
================================================

For each input list we find linear forms y and quadrics G in the ideal
such that y, G is a regular sequence and every input lies in K[y, G].
The verifier recomputes everything from scratch.
"""
from quadsub import GF32003, small_subalgebra, verify_certificate, pd_bound_check
from quadsub.io import parse_polynomial

names = "x v a b c".split()


def forms(*texts):
    return [parse_polynomial(t, names, GF32003) for t in texts]


examples = {
    "already regular": forms("x", "a^2 + b*c"),
    "h = 0": forms("x*v", "x*a", "x"),
    "case 1": forms("x*v + a*b + c^2", "x*a", "x"),
    "case 2a": forms("a^2 + b^2 + c^2 + x*v", "x*a", "x"),
    "case 2b": forms("a^2 + b^2 + c^2 + x*v", "x*v", "x"),
}

for label, F in examples.items():
    cert = small_subalgebra(F, seed=1)
    ver = verify_certificate(F, cert)
    pd = pd_bound_check(F, cert)
    print(f"{label:16s} trace={cert.cases} (m,n,h)=({cert.m},{cert.n},{cert.h}) "
          f"b={cert.b} <= B={cert.bound_B}  c={cert.c}  verified={ver.ok}  pd={pd.pd}")
    for y in cert.variables:
        print("    y:", y.to_str(names))
    for q in cert.quadrics:
        print("    G:", q.to_str(names))
