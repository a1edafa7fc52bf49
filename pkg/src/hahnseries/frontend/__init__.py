"""Text syntax for series expressions: parsing, printing and evaluation."""

from .evaluate import EvalContext, evaluate, evaluate_text, parse_spec
from .parser import ParseError, parse, tokenize, unparse

__all__ = ["EvalContext", "ParseError", "evaluate", "evaluate_text", "parse", "parse_spec", "tokenize", "unparse"]
