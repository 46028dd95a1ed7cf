"""Terms and identities over the signature (join, meet, comp, 0, 1).

Grammar (lowest precedence first):

    identity := expr '=' expr | expr '<=' expr
    expr     := term (('|' | '+1' | '+2') term)*      left associative
    term     := factor ('&' factor)*                  left associative
    factor   := atom "'"*                             postfix complement
    atom     := '0' | '1' | VAR | '(' expr ')'
    VAR      := 'x' | 'y' | 'z' | 'x0'..'x9'

`a +1 b` and `a +2 b` are the two symmetric differences; they expand at
parse time into the signature, so no derived symbols survive in a Term:

    a +1 b  ->  (a' & b) | (a & b')
    a +2 b  ->  (a | b) & (a' | b')

`lhs <= rhs` is sugar for the identity `lhs & rhs = lhs`.

A Term is a nested tuple: ('var', i), ('bot',), ('top',), ('comp', t),
('join', s, t), ('meet', s, t).
"""

from __future__ import annotations

from typing import NamedTuple, Optional, Sequence, Union

import numpy as np

from . import kernels
from .clattice import CLattice
from .errors import TermSyntaxError, UnboundVariable, UnknownIdentity

Term = tuple


def var(i: int) -> Term:
    return ("var", i)


BOT: Term = ("bot",)
TOP: Term = ("top",)


def join(a: Term, b: Term) -> Term:
    return ("join", a, b)


def meet(a: Term, b: Term) -> Term:
    return ("meet", a, b)


def comp(a: Term) -> Term:
    return ("comp", a)


def sd1(a: Term, b: Term) -> Term:
    """First symmetric difference (a' & b) | (a & b')."""
    return join(meet(comp(a), b), meet(a, comp(b)))


def sd2(a: Term, b: Term) -> Term:
    """Second symmetric difference (a | b) & (a' | b')."""
    return meet(join(a, b), join(comp(a), comp(b)))


class Identity(NamedTuple):
    lhs: Term
    rhs: Term
    nvars: int


def var_count(t: Term) -> int:
    """1 + highest variable index occurring in t (0 for closed terms)."""
    if t[0] == "var":
        return t[1] + 1
    if t[0] in ("bot", "top"):
        return 0
    return max(var_count(s) for s in t[1:])


def term_to_str(t: Term) -> str:
    """Parseable rendering; parenthesizes joins inside meets and comps."""
    op = t[0]
    if op == "var":
        return "xyz"[t[1]] if t[1] < 3 else f"x{t[1]}"
    if op == "bot":
        return "0"
    if op == "top":
        return "1"
    if op == "comp":
        inner = term_to_str(t[1])
        if t[1][0] in ("join", "meet"):
            inner = f"({inner})"
        return inner + "'"
    sym = "|" if op == "join" else "&"
    left, right = t[1], t[2]
    lt = term_to_str(left)
    if op == "meet" and left[0] == "join":
        lt = f"({lt})"
    rt = term_to_str(right)
    # parsing is left-associative, so right-nested same-op needs parens
    if right[0] == op or (op == "meet" and right[0] == "join"):
        rt = f"({rt})"
    return f"{lt}{sym}{rt}"


# --- tokenizer / parser ---------------------------------------------------

_VARS = {"x": 0, "y": 1, "z": 2}


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "|&'()=":
            toks.append((ch, None, i))
            i += 1
        elif ch == "<":
            if i + 1 < n and text[i + 1] == "=":
                toks.append(("<=", None, i))
                i += 2
            else:
                raise TermSyntaxError("expected '<='", i)
        elif ch == "+":
            if i + 1 < n and text[i + 1] in "12":
                toks.append(("+" + text[i + 1], None, i))
                i += 2
            else:
                raise TermSyntaxError("expected '+1' or '+2'", i)
        elif ch == "0":
            toks.append(("const", 0, i))
            i += 1
        elif ch == "1":
            toks.append(("const", 1, i))
            i += 1
        elif ch == "x" and i + 1 < n and text[i + 1].isdigit():
            toks.append(("varname", int(text[i + 1]), i))
            i += 2
        elif ch in _VARS:
            toks.append(("varname", _VARS[ch], i))
            i += 1
        else:
            raise TermSyntaxError(f"unexpected character {ch!r}", i)
    toks.append(("end", None, n))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def take(self):
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.take()
        if tok[0] != kind:
            raise TermSyntaxError(f"expected {kind!r}, found {tok[0]!r}", tok[2])
        return tok

    def expr(self) -> Term:
        t = self.term()
        while self.peek()[0] in ("|", "+1", "+2"):
            op = self.take()[0]
            rhs = self.term()
            if op == "|":
                t = join(t, rhs)
            elif op == "+1":
                t = sd1(t, rhs)
            else:
                t = sd2(t, rhs)
        return t

    def term(self) -> Term:
        t = self.factor()
        while self.peek()[0] == "&":
            self.take()
            t = meet(t, self.factor())
        return t

    def factor(self) -> Term:
        t = self.atom()
        while self.peek()[0] == "'":
            self.take()
            t = comp(t)
        return t

    def atom(self) -> Term:
        kind, val, at = self.take()
        if kind == "const":
            return BOT if val == 0 else TOP
        if kind == "varname":
            return var(val)
        if kind == "(":
            t = self.expr()
            self.expect(")")
            return t
        raise TermSyntaxError(f"unexpected token {kind!r}", at)


def parse_term(text: str) -> Term:
    """Parse a single term; identities are rejected here."""
    p = _Parser(text)
    t = p.expr()
    kind, _, at = p.peek()
    if kind in ("=", "<="):
        raise TermSyntaxError("identity syntax not allowed in a term", at)
    p.expect("end")
    return t


def parse_identity(text: str) -> Identity:
    """Parse `lhs = rhs` or the sugar `lhs <= rhs` (meaning lhs & rhs = lhs)."""
    p = _Parser(text)
    lhs = p.expr()
    kind, _, at = p.take()
    if kind == "=":
        rhs = p.expr()
    elif kind == "<=":
        rhs = p.expr()
        lhs, rhs = meet(lhs, rhs), lhs
    else:
        raise TermSyntaxError("expected '=' or '<='", at)
    p.expect("end")
    return Identity(lhs, rhs, max(var_count(lhs), var_count(rhs)))


# --- builtin identity registry --------------------------------------------

BUILTIN_SOURCES = {
    "coincidence": "(x'&y)|(x&y') = (x|y)&(x'|y')",
    "sd-partition-join": "(x&y)|(x&y')|(x'&y)|(x'&y') = 1",
    "sd-partition-meet": "(x|y)&(x|y')&(x'|y)&(x'|y') = 0",
    "involution": "x'' = x",
    "abs-i": "x&y = x&(x'|y)",
    "abs-ii": "x|y = x|(x'&y)",
    "lemma-unit": "x'|(x&x'') = 1",
    "demorgan-join": "(x|y)' = x'&y'",
    "demorgan-meet": "(x&y)' = x'|y'",
    "th4-aux-join": "(x|y)'&x' = x'&y'",
    "th4-aux-meet": "(x&y)'|x' = x'|y'",
    "distributive": "x&(y|z) = (x&y)|(x&z)",
    "modular": "x&(y|(x&z)) = (x&y)|(x&z)",
    "sd1-assoc": "(x+1y)+1z = x+1(y+1z)",
    "sd2-assoc": "(x+2y)+2z = x+2(y+2z)",
    "sd1-rollback": "(x+1y)+1y = x",
    "sd2-rollback": "(x+2y)+2y = x",
    "cp-join": "x'|(x&y) = x'|y",
    "cp-meet": "x'&(x|y) = x'&y",
    "pr-identity": "(x&y)|(x&y') = (x|y)&(x|y')",
    "ord-lt": "x'' <= x",
    "ord-gt": "x <= x''",
    "triple": "x''' = x'",
}

_BUILTIN_CACHE: dict[str, Identity] = {}


def builtin(name: str) -> Identity:
    if name not in BUILTIN_SOURCES:
        raise UnknownIdentity(f"no builtin identity named {name!r}")
    if name not in _BUILTIN_CACHE:
        _BUILTIN_CACHE[name] = parse_identity(BUILTIN_SOURCES[name])
    return _BUILTIN_CACHE[name]


def builtin_names() -> list[str]:
    return list(BUILTIN_SOURCES)


# --- evaluation -----------------------------------------------------------

def eval_term(t: Term, A: CLattice, assignment: Sequence[int]) -> int:
    """Value of t in A under the assignment (indexed by variable number)."""
    op = t[0]
    if op == "var":
        if t[1] >= len(assignment):
            raise UnboundVariable(f"variable index {t[1]} not assigned")
        return int(assignment[t[1]])
    if op == "bot":
        return 0
    if op == "top":
        return A.lattice.top
    if op == "comp":
        return int(A.unary[eval_term(t[1], A, assignment)])
    a = eval_term(t[1], A, assignment)
    b = eval_term(t[2], A, assignment)
    table = A.lattice.join if op == "join" else A.lattice.meet
    return int(table[a, b])


def compile_term(t: Term) -> tuple[np.ndarray, int]:
    """Postfix program for the kernel interpreters, plus its stack need."""
    code: list[tuple[int, int]] = []

    def emit(node: Term):
        op = node[0]
        if op == "var":
            code.append((kernels.OP_VAR, node[1]))
        elif op == "bot":
            code.append((kernels.OP_BOT, 0))
        elif op == "top":
            code.append((kernels.OP_TOP, 0))
        elif op == "comp":
            emit(node[1])
            code.append((kernels.OP_COMP, 0))
        else:
            emit(node[1])
            emit(node[2])
            code.append((kernels.OP_JOIN if op == "join" else kernels.OP_MEET, 0))

    emit(t)
    depth = 0
    max_depth = 0
    for op, _ in code:
        depth += 1 if op in (kernels.OP_VAR, kernels.OP_BOT, kernels.OP_TOP) else \
            (0 if op == kernels.OP_COMP else -1)
        max_depth = max(max_depth, depth)
    return np.array(code, dtype=np.int64).reshape(-1, 2), max_depth


_PROGRAM_CACHE: dict[Term, tuple[np.ndarray, int]] = {}


def _program(t: Term) -> tuple[np.ndarray, int]:
    if t not in _PROGRAM_CACHE:
        _PROGRAM_CACHE[t] = compile_term(t)
    return _PROGRAM_CACHE[t]


class Witness(NamedTuple):
    assignment: tuple[int, ...]
    lhs_value: int
    rhs_value: int


def check_identity(A: CLattice, ident: Union[Identity, str]) -> Optional[Witness]:
    """Exhaustive scan over all size**nvars assignments in row-major order.

    Returns None when the identity holds, else the first failing assignment
    (variable 0 varying slowest) with both side values.
    """
    if isinstance(ident, str):
        ident = builtin(ident)
    prog_l, depth_l = _program(ident.lhs)
    prog_r, depth_r = _program(ident.rhs)
    size = A.size
    idx, lv, rv = kernels.scan_identity(
        prog_l, prog_r, A.lattice.join, A.lattice.meet, A.unary,
        size, ident.nvars, max(depth_l, depth_r))
    if idx < 0:
        return None
    assignment = []
    rem = idx
    for v in range(ident.nvars - 1, -1, -1):
        assignment.append(rem % size)
        rem //= size
    return Witness(tuple(reversed(assignment)), lv, rv)


def holds(A: CLattice, ident: Union[Identity, str]) -> bool:
    return check_identity(A, ident) is None


def sd_tables(A: CLattice) -> tuple[np.ndarray, np.ndarray]:
    """Materialized binary tables of the two symmetric differences."""
    L, u = A.lattice, A.unary
    n = L.size
    x = np.arange(n)[:, None]
    y = np.arange(n)[None, :]
    plus1 = L.join[L.meet[u[x], y], L.meet[x, u[y]]]
    plus2 = L.meet[L.join[x, y], L.join[u[x], u[y]]]
    return plus1, plus2


def is_associative(table: np.ndarray) -> tuple[bool, Optional[tuple[int, int, int]]]:
    """Exhaustive triple check of a binary operation table; first witness."""
    n = table.shape[0]
    a = np.arange(n)[:, None, None]
    b = np.arange(n)[None, :, None]
    c = np.arange(n)[None, None, :]
    bad = table[table[a, b], c] != table[a, table[b, c]]
    if not bad.any():
        return True, None
    flat = int(np.flatnonzero(bad.reshape(-1))[0])
    return False, (flat // (n * n), (flat // n) % n, flat % n)


def format_assignment(assignment: Sequence[int], names: Sequence[str]) -> str:
    """Render an assignment as `x=a y=b ...` using element names."""
    parts = []
    for i, val in enumerate(assignment):
        vname = "xyz"[i] if i < 3 else f"x{i}"
        parts.append(f"{vname}={names[val]}")
    return " ".join(parts)
