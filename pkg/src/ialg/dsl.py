"""Line-oriented script DSL: parsing and rendering.

One statement per line; ``#`` starts a comment.  Statements are either
definitions (``NAME = ...``) or commands.

Definitions::

    NAME = semigroup zmod N (add|mul) [interval|plain]
    NAME = groupoid zmod N T U [interval|plain]
    NAME = loop N M [interval|plain]
    NAME = group (zmod N | units N) [interval|plain]
    NAME = sym K (group|monoid) [interval|plain]
    NAME = matrix R C of NAME (entrywise|mul)
    NAME = union NAME+

Commands::

    table NAME [--format csv|json]
    classify NAME
    check NAME IDENTITY
    find NAME (zero-divisors|units|idempotents|nilpotents|cauchy) [--quasi MASK]
    subs NAME [--class C] [--max K]
    ideals NAME [--side left|right|two]
    smarandache NAME
    loopinfo NAME (centers|subloops|normalizers H|isotope A B)
    audit CLAIM [--range SPEC]
    export NAME PATH

Flavor defaults to ``interval`` and is normalized into the parsed tree, so
``render`` always writes it and ``parse_script(render(s)) == s`` holds for
every valid script (statement line numbers are carried for diagnostics but
excluded from equality).  Options are stored sorted by key.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import ParseError

INTERVAL = "interval"
PLAIN = "plain"
_FLAVORS = (INTERVAL, PLAIN)

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_INT_RE = re.compile(r"-?\d+\Z")
_MASK_RE = re.compile(r"[01](,[01])*\Z")
_RANGE_RE = re.compile(r"[A-Za-z_]\w*=\d+\.\.\d+(,[A-Za-z_]\w*=\d+\.\.\d+)*\Z")


# -- syntax tree ------------------------------------------------------------------


@dataclass(frozen=True)
class SemigroupExpr:
    n: int
    op: str
    flavor: str


@dataclass(frozen=True)
class GroupoidExpr:
    n: int
    t: int
    u: int
    flavor: str


@dataclass(frozen=True)
class LoopExpr:
    n: int
    m: int
    flavor: str


@dataclass(frozen=True)
class GroupExpr:
    base: str  # "zmod" | "units"
    n: int
    flavor: str


@dataclass(frozen=True)
class SymExpr:
    k: int
    kind: str  # "group" | "monoid"
    flavor: str


@dataclass(frozen=True)
class MatrixExpr:
    r: int
    c: int
    base: str
    mode: str  # "entrywise" | "mul"


@dataclass(frozen=True)
class UnionExpr:
    names: tuple[str, ...]


@dataclass(frozen=True)
class Let:
    name: str
    expr: object
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Command:
    verb: str
    args: tuple[str, ...]
    opts: tuple[tuple[str, str], ...] = ()
    line: int = field(default=0, compare=False)

    def opt(self, key: str, default: str | None = None) -> str | None:
        for k, v in self.opts:
            if k == key:
                return v
        return default


@dataclass(frozen=True)
class Script:
    statements: tuple


# -- tokenizer --------------------------------------------------------------------


def _tokenize(line: str) -> list[tuple[str, int]]:
    """(token, 1-based column) pairs; text from the first '#' is a comment."""
    hash_at = line.find("#")
    if hash_at >= 0:
        line = line[:hash_at]
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]


class _Cursor:
    def __init__(self, tokens: list[tuple[str, int]], lineno: int, width: int):
        self.tokens = tokens
        self.lineno = lineno
        self.width = width
        self.pos = 0

    def error(self, message: str, at: int | None = None) -> ParseError:
        if at is None:
            if self.pos < len(self.tokens):
                at = self.tokens[self.pos][1]
            elif self.tokens:
                last_tok, last_col = self.tokens[-1]
                at = last_col + len(last_tok)
            else:
                at = 1
        return ParseError(message, self.lineno, at)

    @property
    def exhausted(self) -> bool:
        return self.pos >= len(self.tokens)

    def peek(self) -> str | None:
        return None if self.exhausted else self.tokens[self.pos][0]

    def take(self, what: str) -> tuple[str, int]:
        if self.exhausted:
            raise self.error(f"expected {what}, found end of line")
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def take_word(self, what: str, allowed: tuple[str, ...]) -> str:
        tok, col = self.take(what)
        if tok not in allowed:
            raise self.error(
                f"expected {what} ({'|'.join(allowed)}), got {tok!r}", col
            )
        return tok

    def take_int(self, what: str) -> int:
        tok, col = self.take(what)
        if not _INT_RE.match(tok):
            raise self.error(f"expected integer {what}, got {tok!r}", col)
        return int(tok)

    def take_name(self, what: str) -> str:
        tok, col = self.take(what)
        if not _NAME_RE.match(tok):
            raise self.error(f"expected {what} (identifier), got {tok!r}", col)
        return tok

    def take_flavor(self) -> str:
        if self.exhausted:
            return INTERVAL
        tok, col = self.take("flavor")
        if tok not in _FLAVORS:
            raise self.error(
                f"expected flavor (interval|plain), got {tok!r}", col
            )
        return tok

    def finish(self):
        if not self.exhausted:
            tok, col = self.tokens[self.pos]
            raise self.error(f"unexpected trailing token {tok!r}", col)


# -- definition parsing -------------------------------------------------------------


def _parse_definition(cur: _Cursor, name: str) -> Let:
    kind, col = cur.take("structure kind")
    if kind == "semigroup":
        cur.take_word("carrier", ("zmod",))
        n = cur.take_int("modulus")
        op = cur.take_word("operation", ("add", "mul"))
        expr = SemigroupExpr(n, op, cur.take_flavor())
    elif kind == "groupoid":
        cur.take_word("carrier", ("zmod",))
        n = cur.take_int("modulus")
        t = cur.take_int("t")
        u = cur.take_int("u")
        expr = GroupoidExpr(n, t, u, cur.take_flavor())
    elif kind == "loop":
        n = cur.take_int("n")
        m = cur.take_int("m")
        expr = LoopExpr(n, m, cur.take_flavor())
    elif kind == "group":
        base = cur.take_word("carrier", ("zmod", "units"))
        n = cur.take_int("modulus")
        expr = GroupExpr(base, n, cur.take_flavor())
    elif kind == "sym":
        k = cur.take_int("degree")
        sub = cur.take_word("kind", ("group", "monoid"))
        expr = SymExpr(k, sub, cur.take_flavor())
    elif kind == "matrix":
        r = cur.take_int("rows")
        c = cur.take_int("columns")
        cur.take_word("keyword", ("of",))
        base = cur.take_name("base structure name")
        mode = cur.take_word("mode", ("entrywise", "mul"))
        expr = MatrixExpr(r, c, base, mode)
    elif kind == "union":
        names = [cur.take_name("component name")]
        while not cur.exhausted:
            names.append(cur.take_name("component name"))
        expr = UnionExpr(tuple(names))
    else:
        raise cur.error(
            "expected structure kind (semigroup|groupoid|loop|group|sym|"
            f"matrix|union), got {kind!r}",
            col,
        )
    cur.finish()
    return Let(name, expr, cur.lineno)


# -- command parsing ----------------------------------------------------------------

# verb -> (min positional args, max positional args, {option: allowed values})
_VERB_SPECS: dict[str, tuple[int, int, dict]] = {
    "table": (1, 1, {"format": ("csv", "json")}),
    "classify": (1, 1, {}),
    "check": (2, 2, {}),
    "find": (2, 2, {"quasi": None}),
    "subs": (1, 1, {"class": None, "max": None}),
    "ideals": (1, 1, {"side": ("left", "right", "two")}),
    "smarandache": (1, 1, {}),
    "loopinfo": (2, 4, {}),
    "audit": (1, 1, {"range": None}),
    "export": (2, 2, {}),
}

_FIND_KINDS = ("zero-divisors", "units", "idempotents", "nilpotents", "cauchy")
_LOOPINFO_MODES = {"centers": 2, "subloops": 2, "normalizers": 3, "isotope": 4}


def _parse_command(cur: _Cursor, verb: str) -> Command:
    lo, hi, opt_spec = _VERB_SPECS[verb]
    args: list[str] = []
    opts: dict[str, str] = {}
    while not cur.exhausted:
        tok, col = cur.take("argument")
        if tok.startswith("--"):
            key = tok[2:]
            if key not in opt_spec:
                raise cur.error(
                    f"{verb} takes no option --{key}"
                    + (f" (valid: {', '.join('--' + k for k in sorted(opt_spec))})"
                       if opt_spec else ""),
                    col,
                )
            if key in opts:
                raise cur.error(f"duplicate option --{key}", col)
            val, vcol = cur.take(f"value for --{key}")
            allowed = opt_spec[key]
            if allowed is not None and val not in allowed:
                raise cur.error(
                    f"--{key} must be one of {'|'.join(allowed)}, got {val!r}",
                    vcol,
                )
            opts[key] = val
            _validate_opt_value(cur, verb, key, val, vcol)
        else:
            args.append(tok)
            if len(args) > hi:
                raise cur.error(f"{verb} takes at most {hi} argument(s)", col)
    if len(args) < lo:
        raise cur.error(f"{verb} needs at least {lo} argument(s)")
    _validate_command_args(cur, verb, args)
    return Command(verb, tuple(args), tuple(sorted(opts.items())), cur.lineno)


def _validate_opt_value(cur: _Cursor, verb: str, key: str, val: str, col: int):
    if verb == "find" and key == "quasi" and not _MASK_RE.match(val):
        raise cur.error(
            f"--quasi mask must be comma-separated 0/1 flags, got {val!r}", col
        )
    if verb == "subs" and key == "max" and not val.isdigit():
        raise cur.error(f"--max must be a nonnegative integer, got {val!r}", col)
    if verb == "audit" and key == "range" and not _RANGE_RE.match(val):
        raise cur.error(
            f"--range must be key=lo..hi pairs (comma-separated), got {val!r}",
            col,
        )


def _validate_command_args(cur: _Cursor, verb: str, args: list[str]):
    if verb == "find" and args[1] not in _FIND_KINDS:
        raise cur.error(
            f"find kind must be one of {'|'.join(_FIND_KINDS)}, got {args[1]!r}"
        )
    if verb == "loopinfo":
        mode = args[1]
        want = _LOOPINFO_MODES.get(mode)
        if want is None:
            raise cur.error(
                "loopinfo mode must be one of "
                f"{'|'.join(sorted(_LOOPINFO_MODES))}, got {mode!r}"
            )
        if len(args) != want:
            raise cur.error(
                f"loopinfo {mode} takes {want - 2} extra argument(s), "
                f"got {len(args) - 2}"
            )


# -- entry points ----------------------------------------------------------------


def parse_script(text: str) -> Script:
    """Parse UTF-8 script text; raises ParseError with line and column."""
    statements = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokenize(raw)
        if not tokens:
            continue
        cur = _Cursor(tokens, lineno, len(raw))
        first, col = cur.take("statement")
        if cur.peek() == "=":
            if not _NAME_RE.match(first):
                raise cur.error(
                    f"expected identifier before '=', got {first!r}", col
                )
            cur.take("'='")
            statements.append(_parse_definition(cur, first))
        elif first in _VERB_SPECS:
            statements.append(_parse_command(cur, first))
        else:
            raise cur.error(
                f"expected a definition (NAME = ...) or a command verb "
                f"({'|'.join(sorted(_VERB_SPECS))}), got {first!r}",
                col,
            )
    return Script(tuple(statements))


def _render_expr(name: str, expr) -> str:
    if isinstance(expr, SemigroupExpr):
        return f"{name} = semigroup zmod {expr.n} {expr.op} {expr.flavor}"
    if isinstance(expr, GroupoidExpr):
        return (
            f"{name} = groupoid zmod {expr.n} {expr.t} {expr.u} {expr.flavor}"
        )
    if isinstance(expr, LoopExpr):
        return f"{name} = loop {expr.n} {expr.m} {expr.flavor}"
    if isinstance(expr, GroupExpr):
        return f"{name} = group {expr.base} {expr.n} {expr.flavor}"
    if isinstance(expr, SymExpr):
        return f"{name} = sym {expr.k} {expr.kind} {expr.flavor}"
    if isinstance(expr, MatrixExpr):
        return f"{name} = matrix {expr.r} {expr.c} of {expr.base} {expr.mode}"
    if isinstance(expr, UnionExpr):
        return f"{name} = union {' '.join(expr.names)}"
    raise TypeError(f"unknown expression {expr!r}")


def render(script: Script) -> str:
    """Canonical text; parse_script(render(s)) == s for every valid script."""
    lines = []
    for st in script.statements:
        if isinstance(st, Let):
            lines.append(_render_expr(st.name, st.expr))
        else:
            parts = [st.verb, *st.args]
            for k, v in st.opts:
                parts.append(f"--{k}")
                parts.append(v)
            lines.append(" ".join(parts))
    return "\n".join(lines) + ("\n" if lines else "")
