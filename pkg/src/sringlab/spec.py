"""Text specs for rings, multiplicative sets and ideals.

Ring grammar::

    ring := "Z" INT | ring "x" ring | ring "/" "(" INT {"," INT} ")"
          | ring "(+)" ("self" | "Z" INT)

Products associate to the left.  Quotient and idealization are postfix and
bind tighter than ``x``; there are no grouping parentheses, so a product can
never be quotiented.  Integers inside ``/( … )`` are element indices of the
ring being quotiented.  Blanks between tokens are ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DisjointnessError, RingSpecSyntaxError
from .ideals import Ideal, MultSet, generated_ideal, mult_closure
from .ring import DEFAULT_MAX_ORDER, FiniteRing, direct_product, idealization, make_zn, quotient_ring


@dataclass(frozen=True)
class Zn:
    n: int


@dataclass(frozen=True)
class Product:
    left: "RingSpecAst"
    right: "RingSpecAst"


@dataclass(frozen=True)
class Quotient:
    base: "RingSpecAst"
    generators: tuple[int, ...]


@dataclass(frozen=True)
class Idealization:
    base: "RingSpecAst"
    module: str | int  # "self" or the modulus m of Z_m


RingSpecAst = Zn | Product | Quotient | Idealization

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<sym>\(\+\)|self|[Zx/(),]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise RingSpecSyntaxError(f"unexpected character {text[start]!r}", start)
        kind = "int" if m.group("int") is not None else "sym"
        value = m.group(kind)
        tokens.append((kind, value, m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self, value: str | None = None, kind: str = "sym") -> str:
        k, v, pos = self.peek()
        if k != kind or (value is not None and v != value):
            want = value if value is not None else kind
            got = v if k != "end" else "end of input"
            raise RingSpecSyntaxError(f"expected {want!r}, found {got!r}", pos)
        self.i += 1
        return v

    def integer(self) -> int:
        return int(self.take(kind="int"))

    def ring(self) -> RingSpecAst:
        node = self.postfix()
        while self.peek()[:2] == ("sym", "x"):
            self.take("x")
            node = Product(node, self.postfix())
        return node

    def postfix(self) -> RingSpecAst:
        self.take("Z")
        node: RingSpecAst = Zn(self.integer())
        while True:
            k, v, _ = self.peek()
            if (k, v) == ("sym", "/"):
                self.take("/")
                self.take("(")
                gens = [self.integer()]
                while self.peek()[:2] == ("sym", ","):
                    self.take(",")
                    gens.append(self.integer())
                self.take(")")
                node = Quotient(node, tuple(gens))
            elif (k, v) == ("sym", "(+)"):
                self.take("(+)")
                if self.peek()[:2] == ("sym", "self"):
                    self.take("self")
                    node = Idealization(node, "self")
                else:
                    self.take("Z")
                    node = Idealization(node, self.integer())
            else:
                return node


def parse_ring_spec(text: str) -> RingSpecAst:
    p = _Parser(text)
    node = p.ring()
    k, v, pos = p.peek()
    if k != "end":
        raise RingSpecSyntaxError(f"unexpected {v!r} after a complete ring", pos)
    return node


def render(node: RingSpecAst) -> str:
    """Canonical text for ``node``; raises if the tree has no spelling in the grammar."""
    if isinstance(node, Zn):
        return f"Z{node.n}"
    if isinstance(node, Product):
        if isinstance(node.right, Product):
            raise ValueError("a right-nested product has no spelling without parentheses")
        return f"{render(node.left)}x{render(node.right)}"
    base = render(node.base)
    if isinstance(node.base, Product):
        raise ValueError("a quotient or idealization of a product has no spelling without parentheses")
    if isinstance(node, Quotient):
        return f"{base}/({','.join(str(g) for g in node.generators)})"
    if isinstance(node, Idealization):
        return f"{base}(+){'self' if node.module == 'self' else f'Z{node.module}'}"
    raise TypeError(f"not a ring spec node: {node!r}")


def _check_elements(R: FiniteRing, elems, what: str) -> None:
    for g in elems:
        if not 0 <= g < R.order:
            raise ValueError(f"{what} element {g} is out of range for {R.recipe} (order {R.order})")


def evaluate(node: RingSpecAst, max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    if isinstance(node, Zn):
        return make_zn(node.n, max_order)
    if isinstance(node, Product):
        return direct_product(evaluate(node.left, max_order), evaluate(node.right, max_order), max_order)
    if isinstance(node, Quotient):
        R = evaluate(node.base, max_order)
        _check_elements(R, node.generators, "quotient generator")
        Q, _ = quotient_ring(R, generated_ideal(R, node.generators))
        return Q
    if isinstance(node, Idealization):
        return idealization(evaluate(node.base, max_order), node.module, max_order)
    raise TypeError(f"not a ring spec node: {node!r}")


def build_ring(text: str, max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    return evaluate(parse_ring_spec(text), max_order)


def _int_list(text: str, what: str) -> list[int]:
    parts = [p.strip() for p in text.strip().strip("{}").split(",")]
    if not parts or any(not p.isdigit() for p in parts):
        raise ValueError(f"{what} must be a comma-separated list of element indices, got {text!r}")
    return [int(p) for p in parts]


def parse_mult_set(R: FiniteRing, text: str, strict: bool = False) -> MultSet:
    """Multiplicative closure of the listed elements; ``strict`` rejects a closure containing 0."""
    gens = _int_list(text, "mult set")
    _check_elements(R, gens, "mult set")
    S = mult_closure(R, gens)
    if strict and S.contains_zero:
        raise DisjointnessError(f"mult set generated by {gens} contains 0")
    return S


def parse_ideal(R: FiniteRing, text: str) -> Ideal:
    gens = _int_list(text, "ideal")
    _check_elements(R, gens, "ideal")
    return generated_ideal(R, gens)
