"""The input DSL: a field declaration plus up to two diagonal forms.

    field F2(t1, t2); p = <1, t1, t2>; q = <<t1, t2>>;

`<...>` lists diagonal coefficients (rational-function expressions in the
declared variables); `<<...>>` is a quasi-Pfister form, expanded left to
right.  `#` starts a comment.  print_dsl emits the canonical spelling, and
parse(print_dsl(spec)) round-trips exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .errors import ParseError
from .forms import QuasilinearForm, form, quasi_pfister
from .gf2poly import _ExprParser, rational_to_str, tokenize
from .towers import Caps, DEFAULT_CAPS, FieldTower, element0, make_base_field


@dataclass
class InstanceSpec:
    """One parsed problem instance: a field, forms p/q, and CLI context."""

    field: FieldTower
    p: Optional[QuasilinearForm] = None
    q: Optional[QuasilinearForm] = None
    command: Optional[str] = None
    options: dict = dc_field(default_factory=dict)


class _DslParser:
    def __init__(self, tokens, caps):
        self.tokens = tokens
        self.pos = 0
        self.caps = caps
        self.tower = None
        self.forms = {}

    def peek(self):
        return self.tokens[self.pos]

    def expect(self, kind):
        tok = self.tokens[self.pos]
        if tok.kind != kind:
            raise ParseError(
                f"expected {kind!r}, got {tok.text or tok.kind!r}", tok.line, tok.col
            )
        self.pos += 1
        return tok

    def run(self):
        while self.peek().kind != "eof":
            self.statement()
            if self.peek().kind == ";":
                self.pos += 1
        if self.tower is None:
            raise ParseError("input declares no field")
        return InstanceSpec(
            field=self.tower, p=self.forms.get("p"), q=self.forms.get("q")
        )

    def statement(self):
        tok = self.peek()
        if tok.kind != "name":
            raise ParseError(f"expected a statement, got {tok.text or tok.kind!r}", tok.line, tok.col)
        if tok.text == "field":
            self.field_statement()
        elif tok.text in ("p", "q"):
            self.form_statement(tok.text)
        else:
            raise ParseError(f"unknown statement {tok.text!r}", tok.line, tok.col)

    def field_statement(self):
        tok = self.expect("name")
        if self.tower is not None:
            raise ParseError("duplicate field statement", tok.line, tok.col)
        head = self.expect("name")
        if head.text != "F2":
            raise ParseError(f"unknown base field {head.text!r}", head.line, head.col)
        self.expect("(")
        names = []
        if self.peek().kind == "name":
            names.append(self.expect("name").text)
            while self.peek().kind == ",":
                self.pos += 1
                names.append(self.expect("name").text)
        self.expect(")")
        try:
            self.tower = make_base_field(names, self.caps)
        except Exception as exc:
            raise ParseError(str(exc), tok.line, tok.col)

    def form_statement(self, label):
        tok = self.expect("name")
        if self.tower is None:
            raise ParseError("field must be declared before forms", tok.line, tok.col)
        if label in self.forms:
            raise ParseError(f"duplicate form {label!r}", tok.line, tok.col)
        self.expect("=")
        opener = self.peek()
        if opener.kind not in ("<", "<<"):
            raise ParseError("expected '<' or '<<'", opener.line, opener.col)
        self.pos += 1
        closer = ">" if opener.kind == "<" else ">>"
        entries = []
        if self.peek().kind != closer:
            entries.append(self.entry())
            while self.peek().kind == ",":
                self.pos += 1
                entries.append(self.entry())
        self.expect(closer)
        if opener.kind == "<<":
            self.forms[label] = quasi_pfister(self.tower, entries).expanded
        else:
            self.forms[label] = form(self.tower, entries)

    def entry(self):
        parser = _ExprParser(self.tokens, self.pos, self.tower.base_vars)
        value = parser.expr()
        self.pos = parser.pos
        return element0(value)


def parse_form_dsl(text: str, caps: Caps = DEFAULT_CAPS) -> InstanceSpec:
    return _DslParser(tokenize(text), caps).run()


def print_dsl(spec: InstanceSpec) -> str:
    names = spec.field.base_vars
    parts = [f"field F2({', '.join(names)});"]
    for label in ("p", "q"):
        q = getattr(spec, label)
        if q is None:
            continue
        coeffs = ", ".join(_entry_str(c, names) for c in q.coeffs)
        parts.append(f"{label} = <{coeffs}>;")
    return "\n".join(parts) + "\n"


def _entry_str(c, names):
    if c.level != 0:
        raise ParseError("DSL forms carry base-field coefficients only")
    return rational_to_str(c.payload, names)
