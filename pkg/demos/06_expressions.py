"""The text syntax used by the command line.

Expressions are parsed into trees, printed back canonically, and evaluated
with a derivation spec and a truncation depth.
"""

from hahnseries.frontend import ParseError, evaluate_text, parse, parse_spec, unparse

src = "D(log(1 + t)) * (1 + t)"
tree = parse(src)
print(unparse(tree))
print(evaluate_text(src, parse_spec("case1:shift=1"), depth=6).render())

print(evaluate_text("t^{tau(0)} * t^{-e(1)}", parse_spec("el:shift=1")).render())

try:
    parse("exp(t +")
except ParseError as err:
    print(err)  # the message starts with line:column
