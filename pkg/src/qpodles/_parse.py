"""Small recursive-descent parser shared by the scalar and algebra grammars.

Values are combined with ordinary Python operators, so the same parser
serves RatFunc text and algebra expressions; callers supply the atoms.
"""

import re

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


class ParseError(SyntaxError):
    """Malformed expression text; ``pos`` is the 0-based character offset."""

    def __init__(self, msg, text="", pos=0):
        super().__init__(f"{msg} at position {pos}")
        self.text = text
        self.pos = pos


def _tokenize(text):
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            toks.append(("num", int(m.group(1)), start))
        elif m.group(2) is not None:
            toks.append(("id", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", text, start)
            toks.append(("op", ch, start))
        pos = m.end()
    toks.append(("end", None, n))
    return toks


class Parser:
    """Parse ``text`` with ``atom(name) -> value`` and ``number(int) -> value``."""

    def __init__(self, text, atom, number):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.atom = atom
        self.number = number

    def parse(self):
        if self.toks[0][0] == "end":
            raise ParseError("empty expression", self.text, 0)
        v = self._expr()
        kind, val, pos = self.toks[self.i]
        if kind != "end":
            raise ParseError(f"unexpected token {val!r}", self.text, pos)
        return v

    def _peek(self):
        return self.toks[self.i]

    def _take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def _expr(self):
        v = self._term()
        while self._peek()[:2] in (("op", "+"), ("op", "-")):
            op = self._take()[1]
            rhs = self._term()
            v = v + rhs if op == "+" else v - rhs
        return v

    def _term(self):
        v = self._unary()
        while self._peek()[:2] in (("op", "*"), ("op", "/")):
            _, op, pos = self._take()
            rhs = self._unary()
            if op == "*":
                v = v * rhs
            else:
                try:
                    v = v / rhs
                except (ZeroDivisionError, TypeError, ValueError) as exc:
                    raise ParseError(f"bad division ({exc})", self.text, pos) from None
        return v

    def _unary(self):
        kind, val, _ = self._peek()
        if kind == "op" and val in "+-":
            self._take()
            v = self._unary()
            return -v if val == "-" else v
        return self._power()

    def _power(self):
        v = self._primary()
        if self._peek()[:2] == ("op", "^"):
            _, _, pos = self._take()
            e = self._exponent()
            try:
                v = v ** e
            except (ZeroDivisionError, ValueError, TypeError) as exc:
                raise ParseError(f"bad power ({exc})", self.text, pos) from None
        return v

    def _exponent(self):
        paren = False
        if self._peek()[:2] == ("op", "("):
            self._take()
            paren = True
        sign = 1
        if self._peek()[:2] == ("op", "-"):
            self._take()
            sign = -1
        kind, val, pos = self._take()
        if kind != "num":
            raise ParseError("expected integer exponent", self.text, pos)
        if paren:
            kind2, val2, pos2 = self._take()
            if (kind2, val2) != ("op", ")"):
                raise ParseError("expected ')'", self.text, pos2)
        return sign * val

    def _primary(self):
        kind, val, pos = self._take()
        if kind == "num":
            return self.number(val)
        if kind == "id":
            try:
                return self.atom(val)
            except KeyError:
                raise ParseError(f"unknown symbol {val!r}", self.text, pos) from None
        if (kind, val) == ("op", "("):
            v = self._expr()
            kind2, val2, pos2 = self._take()
            if (kind2, val2) != ("op", ")"):
                raise ParseError("expected ')'", self.text, pos2)
            return v
        what = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {what}", self.text, pos)
