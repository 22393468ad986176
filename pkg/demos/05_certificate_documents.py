"""
Problem files and certificate documents
=======================================

The command line tool reads a problem file and writes a certificate
document. The same steps are available from Python; documents can be
parsed back and re-verified without any pipeline state.
"""
from quadsub.io import parse_document, parse_problem
from quadsub.pipeline import run_pipeline, verify_document

problem = parse_problem("""\
field 32003
vars x y z w
seed 7
form x^2 + 2*x*y + z      # inhomogeneous: split into x^2 + 2*x*y and z
form x*w - y^2
""")

doc = run_pipeline(problem, verify_level=3)
text = doc.to_text()
print(text)

again = parse_document(text)
print("round trip exact:", again.to_text() == text)
print("re-verification problems:", verify_document(again))
