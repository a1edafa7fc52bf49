"""Evaluation of expression trees and parsing of derivation spec strings."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from ..deriv import EL, Affine, Case1, Case2Cofinal, Case2Max, CofinalSequence, Table, d_series
from ..errors import ConfigurationError, DomainError, HahnError, UsageError
from ..exponents import Exponent, ShiftMap
from ..series import Series, s_inv
from ..translog import s_exp, s_log
from .parser import Apply, BinOp, Mono, Neg, Pow, Rat, parse

__all__ = ["EvalContext", "evaluate", "evaluate_text", "parse_spec", "exponent_from_terms"]

DEFAULT_DEPTH = 8


@dataclass(frozen=True)
class EvalContext:
    spec: object = None
    depth: int = DEFAULT_DEPTH

    @property
    def shift(self) -> int | None:
        if isinstance(self.spec, (Case1, EL)):
            return self.spec.shift.offset
        return None


def exponent_from_terms(terms, shift: int | None) -> Exponent:
    atoms, tails = {}, {}
    for kind, coeff, index in terms:
        target = atoms if kind == "e" else tails
        target[index] = target.get(index, 0) + coeff
    if any(tails.values()) and shift is None:
        raise DomainError("tau(...) needs a shift-based derivation spec (case1 or el)")
    return Exponent(atoms, tails, shift)


def _eval(node, ctx: EvalContext) -> Series:
    if isinstance(node, Rat):
        return Series.constant(node.value)
    if isinstance(node, Mono):
        return Series.monomial(exponent_from_terms(node.terms, ctx.shift))
    if isinstance(node, Neg):
        return -evaluate(node.operand, ctx)
    if isinstance(node, BinOp):
        left = evaluate(node.left, ctx)
        right = evaluate(node.right, ctx)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        return left * s_inv(right, ctx.depth)
    if isinstance(node, Pow):
        base = evaluate(node.base, ctx)
        if node.exponent < 0:
            base = s_inv(base, ctx.depth)
        out = Series.one()
        for _ in range(abs(node.exponent)):
            out = out * base
        return out
    if isinstance(node, Apply):
        arg = evaluate(node.arg, ctx)
        if node.func == "exp":
            return s_exp(arg, ctx.depth)
        if node.func == "log":
            el = ctx.spec.shift if isinstance(ctx.spec, EL) else None
            return s_log(arg, ctx.depth, el)
        if node.func == "inv":
            return s_inv(arg, ctx.depth)
        if ctx.spec is None:
            raise DomainError("D(...) needs a derivation spec")
        return d_series(ctx.spec, arg, ctx.depth)
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(node, ctx: EvalContext | None = None) -> Series:
    """Evaluate bottom-up; engine errors get the position of the failing node."""
    ctx = ctx or EvalContext()
    try:
        return _eval(node, ctx)
    except HahnError as err:
        if err.position is None:
            err.position = node.pos
        raise


def evaluate_text(text: str, spec=None, depth: int = DEFAULT_DEPTH) -> Series:
    return evaluate(parse(text), EvalContext(spec, depth))


# -- spec strings -------------------------------------------------------------

_CALL = re.compile(r"^(\w+)\((.*)\)$")


def _split_top(text: str) -> list[str]:
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur += ch
    parts.append(cur)
    return [p.strip() for p in parts if p.strip()]


def _embedding(text: str):
    m = _CALL.match(text)
    if not m:
        raise UsageError(f"bad embedding {text!r}; use affine(q,r) or table(i:v,...)")
    name, args = m.group(1), _split_top(m.group(2))
    if name == "affine" and len(args) == 2:
        return Affine(Fraction(args[0]), Fraction(args[1]))
    if name == "table":
        return Table({Fraction(k): Fraction(v) for k, v in (a.split(":") for a in args)})
    raise UsageError(f"bad embedding {text!r}")


def _sequence(text: str) -> CofinalSequence:
    if text == "powers2":
        return CofinalSequence.powers2()
    if text == "naturals":
        return CofinalSequence.naturals()
    m = _CALL.match(text)
    if m and m.group(1) == "arith":
        a, d = _split_top(m.group(2))
        return CofinalSequence.arithmetic(Fraction(a), Fraction(d))
    raise UsageError(f"bad cofinal sequence {text!r}; use powers2, naturals or arith(a,d)")


def parse_spec(text: str):
    """Parse ``case1:shift=1``, ``case2max:f=affine(1,0),phiM=10``,
    ``case2cof:f=affine(1,1),seq=powers2`` or ``el:shift=1``."""
    mode, _, rest = text.partition(":")
    try:
        params = dict(p.split("=", 1) for p in _split_top(rest))
    except ValueError:
        raise UsageError(f"bad spec parameters in {text!r}") from None
    try:
        if mode in ("case1", "el"):
            shift = ShiftMap(int(params.get("shift", "1")))
            return Case1(shift) if mode == "case1" else EL(shift)
        if mode == "case2max":
            return Case2Max(_embedding(params["f"]), Fraction(params["phiM"]))
        if mode == "case2cof":
            return Case2Cofinal(_embedding(params["f"]), _sequence(params.get("seq", "powers2")))
    except KeyError as err:
        raise UsageError(f"spec {text!r} is missing parameter {err.args[0]}") from None
    except (ValueError, ZeroDivisionError, ConfigurationError) as err:
        raise UsageError(f"bad spec {text!r}: {err}") from None
    raise UsageError(f"unknown spec mode {mode!r}; use case1, case2max, case2cof or el")
