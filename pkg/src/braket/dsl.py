"""Expression language for bra-ket calculations over one environment.

Grammar (ASCII):

    expr   := term { ("+" | "-") term }
    term   := juxt { "*" juxt }            * is scalar scaling
    juxt   := atom { atom }                juxtaposition composes/pairs
    atom   := "kd:NAME" | "ku:NAME" | "bd:NAME" | "bu:NAME"
            | "eta" | "etainv" | "idk" | "idku"
            | NAME                         a bound operator
            | NUMBER | "(" a "+-" b "i" ")"  complex literal
            | "adj(" expr ")" | "bar(" expr ")" | "tr(" expr ")"
            | "(" expr ")"

A vector binding names a plain component tuple; the token prefix fixes
the space it is read in, exactly as index decorations do in component
notation. Crossing from kets to bras conjugates the components (bras are
stored conjugated); the up/down character is taken from the prefix as
written. Bindings whose declared variance is a bra are un-conjugated
first, so the same rule applies in reverse.

Juxtaposition is variance-checked left to right. A bra meeting a ket of
the same up/down character silently inserts the metric (or its inverse):
"bd:x kd:y" is a scalar product, "bu:x kd:y" a plain dual form. A ket
meeting a bra builds the rank-1 operator between the right spaces, and
operator chains must have matching kinds.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionMismatch,
    DslSyntaxError,
    KindMismatch,
    UnboundName,
    UnknownToken,
    VarianceError,
)
from .operators import (
    KindedOperator,
    OperatorKind,
    hermitian_adjoint,
    identity_down,
    identity_up,
    metric_inv_op,
    metric_op,
)
from .operators import add as op_add
from .operators import compose as op_compose
from .operators import dirac_adjoint
from .operators import scale as op_scale
from .operators import trace as op_trace
from .spaces import MetricOperator, Variance, VarVector, dual_form, relate_bra, relate_ket

__all__ = ["Environment", "parse", "evaluate", "eval_source"]


@dataclass
class Environment:
    """Named vectors and operators over one metric of fixed dimension."""

    dimension: int
    metric: MetricOperator
    vectors: dict[str, VarVector] = field(default_factory=dict)
    operators: dict[str, KindedOperator] = field(default_factory=dict)

    def __post_init__(self):
        if self.metric.dim != self.dimension:
            raise DimensionMismatch(
                f"metric dim {self.metric.dim} != environment dim {self.dimension}"
            )
        for name, v in self.vectors.items():
            if v.dim != self.dimension:
                raise DimensionMismatch(f"vector {name!r} has dim {v.dim}")
        for name, x in self.operators.items():
            if x.dim != self.dimension:
                raise DimensionMismatch(f"operator {name!r} has dim {x.dim}")


# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Ket:
    pos: int
    name: str
    up: bool


@dataclass(frozen=True)
class Bra:
    pos: int
    name: str
    up: bool


@dataclass(frozen=True)
class OpRef:
    pos: int
    name: str


@dataclass(frozen=True)
class Metric:
    pos: int


@dataclass(frozen=True)
class MetricInv:
    pos: int


@dataclass(frozen=True)
class IdDown:
    pos: int


@dataclass(frozen=True)
class IdUp:
    pos: int


@dataclass(frozen=True)
class Literal:
    pos: int
    value: complex


@dataclass(frozen=True)
class Juxt:
    pos: int
    items: tuple


@dataclass(frozen=True)
class Sum:
    pos: int
    terms: tuple  # (sign, node) pairs, sign is +1 or -1


@dataclass(frozen=True)
class Scale:
    pos: int
    factor: object
    operand: object


@dataclass(frozen=True)
class Adj:
    pos: int
    operand: object


@dataclass(frozen=True)
class Bar:
    pos: int
    operand: object


@dataclass(frozen=True)
class Trace:
    pos: int
    operand: object


# ---------------------------------------------------------------------------
# Tokenizer

_NUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_TOKEN_RE = re.compile(
    rf"""
      (?P<ws>\s+)
    | (?P<cplx>\(\s*(?P<re>[+-]?{_NUM})\s*(?P<imsign>[+-])\s*(?P<im>{_NUM})i\s*\))
    | (?P<prefixed>(?:kd|ku|bd|bu):[A-Za-z_]\w*)
    | (?P<badprefix>(?:kd|ku|bd|bu):)
    | (?P<name>[A-Za-z_]\w*)
    | (?P<number>{_NUM})
    | (?P<op>[+\-*()])
    """,
    re.VERBOSE,
)

_KEYWORDS = {"eta", "etainv", "idk", "idku", "adj", "bar", "tr"}


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int
    value: complex = 0j


def _tokenize(src: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            raise UnknownToken(f"unexpected character {src[pos]!r}", pos)
        if m.lastgroup != "ws":
            kind = m.lastgroup
            if kind == "badprefix":
                raise DslSyntaxError(f"{m.group(0)!r} is missing a name", pos)
            if kind == "cplx":
                re_part = float(m.group("re"))
                im_part = float(m.group("im"))
                if m.group("imsign") == "-":
                    im_part = -im_part
                tokens.append(_Token("literal", m.group(0), pos, complex(re_part, im_part)))
            elif kind == "number":
                tokens.append(_Token("literal", m.group(0), pos, complex(float(m.group(0)))))
            else:
                tokens.append(_Token(kind, m.group(0), pos))
        pos = m.end()
    tokens.append(_Token("eof", "", len(src)))
    return tokens


# ---------------------------------------------------------------------------
# Parser

_ATOM_STARTERS = {"prefixed", "name", "literal"}


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        t = self.tok
        self.i += 1
        return t

    def expect(self, text: str):
        if self.tok.kind != "op" or self.tok.text != text:
            raise DslSyntaxError(f"expected {text!r}", self.tok.pos)
        return self.advance()

    def at_op(self, text: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == text

    def parse(self):
        node = self.expr()
        if self.tok.kind != "eof":
            raise DslSyntaxError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return node

    def expr(self):
        pos = self.tok.pos
        terms = [(1, self.term())]
        while self.at_op("+") or self.at_op("-"):
            sign = 1 if self.advance().text == "+" else -1
            terms.append((sign, self.term()))
        if len(terms) == 1:
            return terms[0][1]
        return Sum(pos, tuple(terms))

    def term(self):
        node = self.juxt()
        while self.at_op("*"):
            pos = self.advance().pos
            node = Scale(pos, node, self.juxt())
        return node

    def juxt(self):
        pos = self.tok.pos
        items = [self.atom()]
        while self.tok.kind in _ATOM_STARTERS or self.at_op("("):
            items.append(self.atom())
        if len(items) == 1:
            return items[0]
        return Juxt(pos, tuple(items))

    def atom(self):
        t = self.tok
        if t.kind == "literal":
            self.advance()
            return Literal(t.pos, t.value)
        if t.kind == "prefixed":
            self.advance()
            prefix, name = t.text.split(":", 1)
            if prefix in ("kd", "ku"):
                return Ket(t.pos, name, up=prefix == "ku")
            return Bra(t.pos, name, up=prefix == "bu")
        if t.kind == "name":
            self.advance()
            if t.text == "eta":
                return Metric(t.pos)
            if t.text == "etainv":
                return MetricInv(t.pos)
            if t.text == "idk":
                return IdDown(t.pos)
            if t.text == "idku":
                return IdUp(t.pos)
            if t.text in ("adj", "bar", "tr"):
                self.expect("(")
                inner = self.expr()
                self.expect(")")
                node_cls = {"adj": Adj, "bar": Bar, "tr": Trace}[t.text]
                return node_cls(t.pos, inner)
            return OpRef(t.pos, t.text)
        if self.at_op("("):
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        raise DslSyntaxError(f"unexpected {t.text or 'end of input'!r}", t.pos)


def parse(src: str):
    """Parse expression source into an AST; malformed input raises
    DslSyntaxError (or its UnknownToken refinement) with a position."""
    return _Parser(_tokenize(src)).parse()


# ---------------------------------------------------------------------------
# Evaluator

_SCALAR = (complex, float, int)


def _describe(value) -> str:
    if isinstance(value, _SCALAR):
        return "scalar"
    if isinstance(value, VarVector):
        return {"kd": "ket-down", "ku": "ket-up", "bd": "bra-down", "bu": "bra-up"}[
            value.variance.value
        ]
    return f"operator[{value.kind.value}]"


def _lookup_components(env: Environment, name: str, as_bra: bool) -> np.ndarray:
    stored = env.vectors.get(name)
    if stored is None:
        raise UnboundName(f"vector {name!r} is not bound")
    comps = stored.components
    if stored.variance.is_bra != as_bra:
        comps = comps.conj()
    return comps


def _bracket(env: Environment, b: VarVector, k: VarVector) -> complex:
    """Bra-ket adjacency: parallel characters contract directly, equal
    characters insert the metric (down) or its inverse (up)."""
    if (b.variance, k.variance) == (Variance.BRA_DOWN, Variance.KET_DOWN):
        return complex(b.components @ env.metric.eta @ k.components)
    if (b.variance, k.variance) == (Variance.BRA_UP, Variance.KET_UP):
        return complex(b.components @ env.metric.eta_inv @ k.components)
    return dual_form(b, k)


def _combine(env: Environment, left, right, pos: int):
    if isinstance(left, _SCALAR) or isinstance(right, _SCALAR):
        if isinstance(left, _SCALAR) and isinstance(right, _SCALAR):
            return complex(left) * complex(right)
        scalar, other = (left, right) if isinstance(left, _SCALAR) else (right, left)
        if isinstance(other, VarVector):
            return VarVector(complex(scalar) * other.components, other.variance)
        return op_scale(complex(scalar), other)

    if isinstance(left, VarVector) and isinstance(right, VarVector):
        if left.variance.is_bra and right.variance.is_ket:
            return _bracket(env, left, right)
        if left.variance.is_ket and right.variance.is_bra:
            kind = OperatorKind.from_variances(
                domain_up=right.variance == Variance.BRA_DOWN,
                codomain_up=left.variance == Variance.KET_UP,
            )
            return KindedOperator(np.outer(left.components, right.components), kind)
        raise VarianceError(
            f"cannot juxtapose {_describe(left)} with {_describe(right)} "
            f"(at position {pos})"
        )

    if isinstance(left, KindedOperator) and isinstance(right, VarVector):
        if not right.variance.is_ket:
            raise VarianceError(
                f"operator cannot act on {_describe(right)} (at position {pos})"
            )
        if left.kind.domain_up != (right.variance == Variance.KET_UP):
            raise VarianceError(
                f"operator[{left.kind.value}] cannot act on {_describe(right)} "
                f"(at position {pos})"
            )
        variance = Variance.KET_UP if left.kind.codomain_up else Variance.KET_DOWN
        return VarVector(left.mat @ right.components, variance)

    if isinstance(left, VarVector) and isinstance(right, KindedOperator):
        if not left.variance.is_bra:
            raise VarianceError(
                f"{_describe(left)} cannot absorb an operator (at position {pos})"
            )
        consumes_up = left.variance == Variance.BRA_DOWN
        if right.kind.codomain_up != consumes_up:
            raise VarianceError(
                f"{_describe(left)} cannot absorb operator[{right.kind.value}] "
                f"(at position {pos})"
            )
        variance = Variance.BRA_DOWN if right.kind.domain_up else Variance.BRA_UP
        return VarVector(left.components @ right.mat, variance)

    try:
        return op_compose(left, right)
    except KindMismatch as exc:
        raise VarianceError(f"{exc} (at position {pos})") from exc


def evaluate(node, env: Environment):
    """Evaluate an AST to a complex scalar, a VarVector or a KindedOperator."""
    if isinstance(node, Literal):
        return node.value
    if isinstance(node, Ket):
        comps = _lookup_components(env, node.name, as_bra=False)
        return VarVector(comps, Variance.KET_UP if node.up else Variance.KET_DOWN)
    if isinstance(node, Bra):
        comps = _lookup_components(env, node.name, as_bra=True)
        return VarVector(comps, Variance.BRA_UP if node.up else Variance.BRA_DOWN)
    if isinstance(node, OpRef):
        op = env.operators.get(node.name)
        if op is None:
            raise UnboundName(f"operator {node.name!r} is not bound")
        return op
    if isinstance(node, Metric):
        return metric_op(env.metric)
    if isinstance(node, MetricInv):
        return metric_inv_op(env.metric)
    if isinstance(node, IdDown):
        return identity_down(env.dimension)
    if isinstance(node, IdUp):
        return identity_up(env.dimension)
    if isinstance(node, Juxt):
        values = [(item, evaluate(item, env)) for item in node.items]
        result = values[0][1]
        for item, value in values[1:]:
            result = _combine(env, result, value, item.pos)
        return result
    if isinstance(node, Sum):
        total = None
        for sign, term in node.terms:
            value = evaluate(term, env)
            signed = _combine(env, complex(sign), value, term.pos) if sign < 0 else value
            if total is None:
                total = signed
                continue
            total = _sum_pair(total, signed, term.pos)
        return total
    if isinstance(node, Scale):
        factor = evaluate(node.factor, env)
        operand = evaluate(node.operand, env)
        if isinstance(factor, _SCALAR):
            return _combine(env, factor, operand, node.pos)
        if isinstance(operand, _SCALAR):
            return _combine(env, operand, factor, node.pos)
        raise VarianceError(f"'*' requires a scalar operand (at position {node.pos})")
    if isinstance(node, Adj):
        value = evaluate(node.operand, env)
        if isinstance(value, _SCALAR):
            return complex(value).conjugate()
        if isinstance(value, VarVector):
            return relate_bra(value) if value.variance.is_ket else relate_ket(value)
        return hermitian_adjoint(value)
    if isinstance(node, Bar):
        value = evaluate(node.operand, env)
        if isinstance(value, _SCALAR):
            return complex(value).conjugate()
        if isinstance(value, KindedOperator):
            return dirac_adjoint(value, env.metric)
        raise VarianceError(
            f"bar() applies to operators and scalars, not {_describe(value)} "
            f"(at position {node.pos})"
        )
    if isinstance(node, Trace):
        value = evaluate(node.operand, env)
        if isinstance(value, KindedOperator):
            return op_trace(value)
        raise VarianceError(
            f"tr() applies to operators, not {_describe(value)} "
            f"(at position {node.pos})"
        )
    raise TypeError(f"not an AST node: {node!r}")


def _sum_pair(a, b, pos: int):
    if isinstance(a, _SCALAR) and isinstance(b, _SCALAR):
        return complex(a) + complex(b)
    if isinstance(a, VarVector) and isinstance(b, VarVector):
        if a.variance != b.variance:
            raise VarianceError(
                f"cannot add {_describe(a)} and {_describe(b)} (at position {pos})"
            )
        if a.dim != b.dim:
            raise DimensionMismatch(f"dimensions differ: {a.dim} vs {b.dim}")
        return VarVector(a.components + b.components, a.variance)
    if isinstance(a, KindedOperator) and isinstance(b, KindedOperator):
        return op_add(a, b)
    raise VarianceError(
        f"cannot add {_describe(a)} and {_describe(b)} (at position {pos})"
    )


def eval_source(src: str, env: Environment):
    """Parse and evaluate in one step."""
    return evaluate(parse(src), env)
