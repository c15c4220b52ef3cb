"""Tiny evaluator for constant expressions such as ``cos(pi/20)`` or ``-sqrt(2)/2``."""

from __future__ import annotations

import ast
import math
import operator

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
}
_UNARY = {ast.UAdd: operator.pos, ast.USub: operator.neg}
_FUNCS = {"cos": math.cos, "sin": math.sin, "sqrt": math.sqrt}
_CONSTS = {"pi": math.pi}


def evaluate(text: str) -> float:
    """Evaluate ``text`` built from numbers, ``pi``, ``+ - * /``, ``cos``, ``sin`` and ``sqrt``."""
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse expression {text!r}") from exc
    return float(_eval(tree.body, text))


def _eval(node, text):
    if isinstance(node, ast.Constant) and type(node.value) in (int, float):
        return node.value
    if isinstance(node, ast.Name) and node.id in _CONSTS:
        return _CONSTS[node.id]
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        return _BINOPS[type(node.op)](_eval(node.left, text), _eval(node.right, text))
    if isinstance(node, ast.UnaryOp) and type(node.op) in _UNARY:
        return _UNARY[type(node.op)](_eval(node.operand, text))
    if (
        isinstance(node, ast.Call)
        and isinstance(node.func, ast.Name)
        and node.func.id in _FUNCS
        and len(node.args) == 1
        and not node.keywords
    ):
        return _FUNCS[node.func.id](_eval(node.args[0], text))
    raise ValueError(f"unsupported element in expression {text!r}: {ast.dump(node)}")


def parse_number(text: str) -> float:
    """A plain float literal, falling back to :func:`evaluate`."""
    try:
        return float(text)
    except ValueError:
        return evaluate(text)
