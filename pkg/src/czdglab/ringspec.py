"""The ring-spec mini-language.

Grammar (whitespace-insensitive except for the product separator, which
must be a lone ``x`` with whitespace on both sides)::

    spec     := product
    product  := atom (" x " atom)*
    atom     := base [ "[" vars "]" "/" "(" polyitems ")" ] | "(" spec ")"
    base     := "Z" INT | "GF(" INT ")"
    vars     := VAR ("," VAR)*            # single lowercase letters
    polyitem := poly | "(" vars ")" "^" INT      # ideal-power sugar
    poly     := ["-"] term (("+"|"-") term)*
    term     := INT [monomial] | monomial
    monomial := (VARS ["^" INT])+         # juxtaposition, e.g. 2xy^2

Example specs: ``Z16``, ``GF(8)``, ``Z4[x]/(2x,x^2-2)``, ``Z2 x Z8``,
``Z3[x,y]/((x,y)^2)``, ``GF(4)[x]/(x^2) x Z9``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .errors import NonPrimePowerGF, SpecSyntaxError, UnknownVariable
from .quotient import RingPresentation, _grlex_key
from .rings import (
    FiniteRing,
    _resolve_cap,
    build_gf,
    build_product,
    build_zn,
    prime_power,
)

# -- AST -----------------------------------------------------------------------


@dataclass(frozen=True)
class ZnNode:
    n: int


@dataclass(frozen=True)
class GFNode:
    q: int
    p: int
    k: int


@dataclass(frozen=True)
class QuotientNode:
    base: object  # ZnNode | GFNode
    variables: tuple[str, ...]
    polys: tuple[tuple[tuple[int, tuple[int, ...]], ...], ...]


@dataclass(frozen=True)
class ProductNode:
    factors: tuple


def _mono_str(mono, names) -> str:
    parts = []
    for v, e in zip(names, mono):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "".join(parts)


def _poly_str(poly, names) -> str:
    terms = []
    for coeff, mono in poly:
        ms = _mono_str(mono, names)
        if not ms:
            terms.append(str(coeff))
        else:
            terms.append(ms if coeff == 1 else f"{coeff}{ms}")
    return "+".join(terms) if terms else "0"


def render(node) -> str:
    """Canonical text for an AST node; re-parsing it yields an equal node."""
    if isinstance(node, ZnNode):
        return f"Z{node.n}"
    if isinstance(node, GFNode):
        return f"GF({node.q})"
    if isinstance(node, QuotientNode):
        vs = ",".join(node.variables)
        ps = ",".join(_poly_str(p, node.variables) for p in node.polys)
        return f"{render(node.base)}[{vs}]/({ps})"
    if isinstance(node, ProductNode):
        return " x ".join(render(f) for f in node.factors)
    raise TypeError(f"not an AST node: {node!r}")


# -- lexer ---------------------------------------------------------------------


@dataclass(frozen=True)
class _Token:
    kind: str  # NAME | INT | PUNCT | END
    text: str
    pos: int
    ws_before: bool


_PUNCT = set("()[]/+-^,")


def _lex(text: str) -> list[_Token]:
    toks = []
    i = 0
    ws = False
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            ws = True
            i += 1
            continue
        if ch.isalpha():
            j = i
            while j < len(text) and text[j].isalpha():
                j += 1
            toks.append(_Token("NAME", text[i:j], i, ws))
            i = j
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(_Token("INT", text[i:j], i, ws))
            i = j
        elif ch in _PUNCT:
            toks.append(_Token("PUNCT", ch, i, ws))
            i += 1
        else:
            raise SpecSyntaxError(f"unexpected character {ch!r}", i)
        ws = False
    toks.append(_Token("END", "", len(text), ws))
    return toks


# -- parser --------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _lex(text)
        self.i = 0

    def peek(self, k: int = 0) -> _Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def advance(self) -> _Token:
        tok = self.toks[self.i]
        if tok.kind != "END":
            self.i += 1
        return tok

    def fail(self, message: str, tok: _Token | None = None):
        tok = tok or self.peek()
        raise SpecSyntaxError(message, tok.pos)

    def expect_punct(self, ch: str) -> _Token:
        tok = self.peek()
        if tok.kind != "PUNCT" or tok.text != ch:
            self.fail(f"expected {ch!r}")
        return self.advance()

    def expect_int(self) -> int:
        tok = self.peek()
        if tok.kind != "INT":
            self.fail("expected an integer")
        self.advance()
        return int(tok.text)

    # spec := product END
    def parse_spec(self):
        node = self.parse_product()
        if self.peek().kind != "END":
            self.fail("unexpected trailing input")
        return node

    def _at_separator(self) -> bool:
        tok = self.peek()
        return (
            tok.kind == "NAME"
            and tok.text == "x"
            and tok.ws_before
            and self.peek(1).ws_before
        )

    def parse_product(self):
        factors = [self.parse_atom()]
        while self._at_separator():
            self.advance()
            factors.append(self.parse_atom())
        if len(factors) == 1:
            return factors[0]
        flat = []
        for f in factors:
            flat.extend(f.factors if isinstance(f, ProductNode) else [f])
        return ProductNode(tuple(flat))

    def parse_atom(self):
        tok = self.peek()
        if tok.kind == "PUNCT" and tok.text == "(":
            self.advance()
            node = self.parse_product()
            self.expect_punct(")")
            return node
        base = self.parse_base()
        if self.peek().kind == "PUNCT" and self.peek().text == "[":
            return self.parse_quotient(base)
        return base

    def parse_base(self):
        tok = self.peek()
        if tok.kind != "NAME":
            self.fail("expected Z<n>, GF(q), a quotient, or '('")
        if tok.text == "Z":
            self.advance()
            ntok = self.peek()
            if ntok.kind != "INT" or ntok.ws_before:
                self.fail("expected an integer right after Z")
            self.advance()
            return ZnNode(int(ntok.text))
        if tok.text == "GF":
            self.advance()
            self.expect_punct("(")
            q = self.expect_int()
            self.expect_punct(")")
            pk = prime_power(q)
            if pk is None:
                raise NonPrimePowerGF(f"GF({q}) needs a prime power, got {q}")
            return GFNode(q, pk[0], pk[1])
        self.fail(f"unknown ring family {tok.text!r}", tok)

    def parse_quotient(self, base):
        self.expect_punct("[")
        variables = [self.parse_variable_name()]
        while self.peek().text == ",":
            self.advance()
            name = self.parse_variable_name()
            if name in variables:
                self.fail(f"duplicate variable {name!r}")
            variables.append(name)
        self.expect_punct("]")
        self.expect_punct("/")
        self.expect_punct("(")
        modulus = base.n if isinstance(base, ZnNode) else base.p
        polys = []
        polys.extend(self.parse_polyitem(variables, modulus))
        while self.peek().text == ",":
            self.advance()
            polys.extend(self.parse_polyitem(variables, modulus))
        self.expect_punct(")")
        return QuotientNode(base, tuple(variables), tuple(polys))

    def parse_variable_name(self) -> str:
        tok = self.peek()
        if tok.kind != "NAME" or len(tok.text) != 1 or not tok.text.islower():
            self.fail("variable names must be single lowercase letters")
        self.advance()
        return tok.text

    def parse_polyitem(self, variables, modulus):
        """One relation, or an ideal power like (x,y)^2 expanded to all
        monomials of that exact degree."""
        tok = self.peek()
        if tok.kind == "PUNCT" and tok.text == "(":
            self.advance()
            idxs = [self.parse_sugar_var(variables)]
            while self.peek().text == ",":
                self.advance()
                idxs.append(self.parse_sugar_var(variables))
            self.expect_punct(")")
            self.expect_punct("^")
            power = self.expect_int()
            if power < 1:
                self.fail("ideal power must be >= 1")
            nv = len(variables)
            out = []
            for combo in combinations_with_replacement(sorted(set(idxs)), power):
                exps = [0] * nv
                for ix in combo:
                    exps[ix] += 1
                out.append(((1 % modulus, tuple(exps)),))
            return [p for p in out if p[0][0]]
        return [self.parse_poly(variables, modulus)]

    def parse_sugar_var(self, variables) -> int:
        tok = self.peek()
        if tok.kind != "NAME" or len(tok.text) != 1:
            self.fail("only a plain variable list may be raised to a power")
        if tok.text not in variables:
            raise UnknownVariable(f"unknown variable {tok.text!r}")
        self.advance()
        return variables.index(tok.text)

    def parse_poly(self, variables, modulus):
        acc: dict[tuple, int] = {}
        sign = 1
        if self.peek().text == "-":
            self.advance()
            sign = -1
        while True:
            coeff, mono = self.parse_term(variables)
            c = (acc.get(mono, 0) + sign * coeff) % modulus
            if c:
                acc[mono] = c
            else:
                acc.pop(mono, None)
            nxt = self.peek()
            if nxt.kind == "PUNCT" and nxt.text in "+-":
                sign = 1 if nxt.text == "+" else -1
                self.advance()
                continue
            break
        terms = sorted(acc.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)
        return tuple((c, mono) for mono, c in terms)

    def parse_term(self, variables):
        tok = self.peek()
        coeff = 1
        saw_coeff = False
        if tok.kind == "INT":
            coeff = int(tok.text)
            saw_coeff = True
            self.advance()
        exps = [0] * len(variables)
        saw_mono = False
        while self.peek().kind == "NAME":
            name_tok = self.advance()
            chars = list(name_tok.text)
            for pos, ch in enumerate(chars):
                if ch not in variables:
                    raise UnknownVariable(f"unknown variable {ch!r}")
                e = 1
                last = pos == len(chars) - 1
                if last and self.peek().text == "^":
                    self.advance()
                    e = self.expect_int()
                exps[variables.index(ch)] += e
            saw_mono = True
        if not (saw_coeff or saw_mono):
            self.fail("expected a polynomial term")
        return coeff, tuple(exps)


def parse_ring_spec(text: str):
    """Parse a ring spec into its AST."""
    return _Parser(text).parse_spec()


def canonical(text: str) -> str:
    return render(parse_ring_spec(text))


# -- elaboration ----------------------------------------------------------------


def elaborate(node, cap: int | None = None) -> FiniteRing:
    cap = _resolve_cap(cap)
    spec = render(node)
    if isinstance(node, ZnNode):
        return build_zn(node.n, cap, source_spec=spec)
    if isinstance(node, GFNode):
        return build_gf(node.p, node.k, cap, source_spec=spec)
    if isinstance(node, QuotientNode):
        if isinstance(node.base, ZnNode):
            base = ("zn", node.base.n)
        else:
            base = ("gf", node.base.p, node.base.k)
        pres = RingPresentation(base, node.variables, node.polys)
        return pres.build(cap, source_spec=spec)
    if isinstance(node, ProductNode):
        ring = elaborate(node.factors[0], cap)
        for factor in node.factors[1:]:
            ring = build_product(ring, elaborate(factor, cap), cap)
        return FiniteRing(
            ring.order, ring.add_table, ring.mul_table,
            ring.zero, ring.one, ring.labels, spec,
        )
    raise TypeError(f"not an AST node: {node!r}")


_CACHE: dict[tuple[str, int], FiniteRing] = {}


def build_ring(text: str, cap: int | None = None) -> FiniteRing:
    """Parse, canonicalize, and build; repeated builds are cached."""
    node = parse_ring_spec(text)
    resolved = _resolve_cap(cap)
    key = (render(node), resolved)
    ring = _CACHE.get(key)
    if ring is None:
        ring = elaborate(node, resolved)
        _CACHE[key] = ring
    return ring
