"""Line-oriented text format for models, relations and raw FuTS.

Example::

    # comments run to the end of the line
    kind pa
    meta source hand-written
    states s t u v
    actions a
    trans s -a-> {u:1}
    trans t -a-> {u:1/2, v:0.5}

Clause forms, by kind:

* ``s -a-> t``                 lts, imc (interactive)
* ``s -RATE-> t``              ctmc, dtmc, imc, ma (RATE: ``3``, ``3/4``, ``0.25``)
* ``s -a-> {t1:p1, t2:p2}``    pa, ma (immediate, masses sum to 1)

``kind futs`` declares its type with one ``component LABELS : SEMIRINGS``
line per component (semirings innermost first, ``bool`` or ``rat``) and
uses ``trans I s -label-> CONT`` where ``I`` is the 1-based component and
``CONT`` a nested literal such as ``{{u:1}:true, {u:1/2, v:1/2}:true}``.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .core import Component, FutsType, build_futs
from .encodings import (
    RESERVED_LABELS,
    CtmcModel,
    ImcModel,
    LtsModel,
    MaModel,
    PaModel,
    encode,
    kind_of,
)
from .errors import (
    FutsError,
    ModelSyntaxError,
    NotStochasticError,
    OverlappingBlocks,
    SemanticError,
    UnknownState,
)
from .lifting import Partition
from .semiring import BOOL, RAT, format_value, parse_rational

__all__ = [
    "KINDS",
    "ModelDocument",
    "parse_model",
    "load_model",
    "serialize_model",
    "serialize_futs",
    "serialize_partition",
    "parse_relation",
    "to_futs",
]

KINDS = ("lts", "ctmc", "dtmc", "imc", "pa", "ma", "futs")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_RATE = re.compile(r"(\d+(/\d+)?|\d*\.\d+)\Z")
_CLAUSE = re.compile(r"(\S+)\s+-(\S+?)->\s*(.*?)\s*\Z")
_SEMIRINGS = {"bool": BOOL, "rat": RAT}
_HAS_ACTIONS = {"lts", "imc", "pa", "ma"}
_TIMED = {"ctmc", "dtmc", "imc", "ma"}
_INTERACTIVE = {"lts", "imc"}
_IMMEDIATE = {"pa", "ma"}


@dataclass
class ModelDocument:
    """A parsed model file: its kind, the model object and ``meta`` lines.

    ``model`` is an :class:`~futs.core.Futs` for ``kind futs`` and one of
    the concrete model classes otherwise.
    """

    kind: str
    model: object
    metadata: tuple = field(default=())

    @property
    def states(self):
        return self.model.states


def to_futs(doc):
    return doc.model if doc.kind == "futs" else encode(doc.model)


class _Parser:
    def __init__(self, text, filename):
        self.filename = filename
        self.lines = text.splitlines()
        self.kind = None
        self.meta = []
        self.states = None
        self.actions = None
        self.components = []
        self.clauses = []

    def syntax(self, msg, line, col=1):
        return ModelSyntaxError(msg, line, col, self.filename)

    def semantic(self, msg, line, col=1, cls=SemanticError):
        return cls(msg, line, col, self.filename)

    def run(self):
        for n, raw in enumerate(self.lines, start=1):
            line = raw.split("#", 1)[0].rstrip()
            stripped = line.lstrip()
            if not stripped:
                continue
            indent = len(line) - len(stripped)
            head, _, rest = stripped.partition(" ")
            rest_col = indent + len(head) + 2
            if self.kind is None and head != "kind":
                raise self.syntax("file must start with 'kind'", n, indent + 1)
            handler = getattr(self, "_on_" + head, None)
            if handler is None:
                raise self.syntax(f"unknown directive {head!r}", n, indent + 1)
            handler(rest, n, rest_col)
        if self.kind is None:
            raise self.syntax("missing 'kind' line", len(self.lines) or 1)
        if self.states is None:
            raise self.syntax("missing 'states' line", len(self.lines) or 1)
        return self.build()

    def _on_kind(self, rest, n, col):
        if self.kind is not None:
            raise self.syntax("duplicate 'kind' line", n)
        if rest.strip() not in KINDS:
            raise self.syntax(f"unknown kind {rest.strip()!r}", n, col)
        self.kind = rest.strip()

    def _on_meta(self, rest, n, col):
        key, _, value = rest.strip().partition(" ")
        if not _IDENT.match(key):
            raise self.syntax(f"bad meta key {key!r}", n, col)
        self.meta.append((key, value.strip()))

    def _names(self, rest, n, col):
        out = []
        pos = 0
        for tok in rest.split():
            pos = rest.index(tok, pos)
            if not _IDENT.match(tok):
                raise self.syntax(f"bad identifier {tok!r}", n, col + pos)
            out.append((tok, col + pos))
            pos += len(tok)
        return out

    def _on_states(self, rest, n, col):
        if self.states is not None:
            raise self.syntax("duplicate 'states' line", n)
        names = self._names(rest, n, col)
        if not names:
            raise self.syntax("no states declared", n, col)
        seen = set()
        for name, c in names:
            if name in seen:
                raise self.semantic(f"state {name!r} declared twice", n, c)
            seen.add(name)
        self.states = [name for name, _ in names]

    def _on_actions(self, rest, n, col):
        if self.kind not in _HAS_ACTIONS:
            raise self.syntax(f"'actions' not allowed for kind {self.kind}", n)
        if self.actions is not None:
            raise self.syntax("duplicate 'actions' line", n)
        names = self._names(rest, n, col)
        if not names:
            raise self.syntax("no actions declared", n, col)
        for name, c in names:
            if name in RESERVED_LABELS:
                raise self.semantic(f"reserved label {name!r} cannot be an action", n, c)
        if len({a for a, _ in names}) != len(names):
            raise self.semantic("action declared twice", n, col)
        self.actions = [name for name, _ in names]

    def _on_component(self, rest, n, col):
        if self.kind != "futs":
            raise self.syntax("'component' is only allowed for kind futs", n)
        labels, sep, rings = rest.partition(":")
        if not sep:
            raise self.syntax("expected 'component LABELS : SEMIRINGS'", n, col)
        names = self._names(labels, n, col)
        ring_col = col + len(labels) + 1
        tokens = rings.split()
        if not names or not tokens:
            raise self.syntax("component needs labels and semirings", n, col)
        for tok in tokens:
            if tok not in _SEMIRINGS:
                raise self.syntax(f"unknown semiring {tok!r}", n, ring_col + rings.index(tok))
        try:
            comp = Component([a for a, _ in names], [_SEMIRINGS[t] for t in tokens])
        except ValueError as exc:
            raise self.semantic(str(exc), n, col) from None
        self.components.append(comp)

    def _on_trans(self, rest, n, col):
        if self.states is None:
            raise self.syntax("'states' must precede transitions", n)
        col += len(rest) - len(rest.lstrip())
        rest = rest.lstrip()
        if self.kind == "futs":
            idx, _, rest2 = rest.partition(" ")
            if not idx.isdigit():
                raise self.syntax("expected a component number", n, col)
            component = int(idx) - 1
            if not 0 <= component < len(self.components):
                raise self.semantic(f"no component {idx}", n, col)
            col += len(idx) + 1 + len(rest2) - len(rest2.lstrip())
            rest = rest2.lstrip()
        else:
            component = None
        m = _CLAUSE.match(rest)
        if not m:
            raise self.syntax("expected 'SOURCE -LABEL-> TARGET'", n, col)
        src, label, target = m.group(1), m.group(2), m.group(3)
        cols = (col + m.start(1), col + m.start(2), col + m.start(3))
        if src not in self.states:
            raise self.semantic(f"unknown state {src!r}", n, cols[0])
        self.clauses.append((n, cols, component, src, label, target))

    # -- clause interpretation -------------------------------------------

    def _state(self, name, n, c):
        if not _IDENT.match(name):
            raise self.syntax(f"bad identifier {name!r}", n, c)
        if name not in self.states:
            raise self.semantic(f"unknown state {name!r}", n, c)
        return name

    def _rate(self, text, n, c):
        if not _RATE.match(text):
            raise self.syntax(f"bad rate literal {text!r}", n, c)
        rate = parse_rational(text)
        if rate <= 0:
            raise self.semantic("rate must be > 0", n, c)
        return rate

    def _action(self, label, n, c):
        if label in RESERVED_LABELS:
            raise self.semantic(f"reserved label {label!r} cannot label an action step", n, c)
        if self.actions is None or label not in self.actions:
            raise self.semantic(f"unknown action {label!r}", n, c)
        return label

    def _distribution(self, text, n, c):
        lit = _Literal(text, n, c, self)
        pairs = lit.parse_top()
        out = []
        seen = set()
        for key, value, kc, vc in pairs:
            if isinstance(key, list):
                raise self.syntax("nested distribution not allowed here", n, kc)
            self._state(key, n, kc)
            if key in seen:
                raise self.semantic(f"state {key!r} listed twice", n, kc)
            seen.add(key)
            if value in ("true", "false"):
                raise self.syntax("probability expected", n, vc)
            out.append((key, parse_rational(value)))
        total = sum((p for _, p in out), Fraction(0))
        if total != 1:
            raise self.semantic(f"distribution mass {format_value(total)} != 1", n, c)
        return out

    def build(self):
        kind = self.kind
        if kind in _HAS_ACTIONS and self.actions is None:
            raise self.syntax(f"kind {kind} needs an 'actions' line", len(self.lines) or 1)
        if kind == "futs":
            return ModelDocument(kind, self._build_futs(), tuple(self.meta))
        triples, rates, steps = [], [], []
        seen = set()
        for n, cols, _, src, label, target in self.clauses:
            if _RATE.match(label) or label[:1].isdigit() or label.startswith("."):
                if kind not in _TIMED:
                    raise self.semantic(f"rate clause not allowed for kind {kind}", n, cols[1])
                rates.append((src, self._rate(label, n, cols[1]), self._state(target, n, cols[2]), n))
                continue
            if target.startswith("{"):
                if kind not in _IMMEDIATE:
                    raise self.semantic(f"distribution clause not allowed for kind {kind}", n, cols[2])
                dist = self._distribution(target, n, cols[2])
                clause = (src, self._action(label, n, cols[1]), dist)
                key = (src, label, frozenset(dist))
            else:
                if kind not in _INTERACTIVE:
                    if kind in _TIMED and label in RESERVED_LABELS:
                        raise self.semantic(f"label {label!r} needs a rate, write -RATE->", n, cols[1])
                    raise self.semantic(f"action clause not allowed for kind {kind}", n, cols[1])
                clause = (src, self._action(label, n, cols[1]), self._state(target, n, cols[2]))
                key = clause
            if key in seen:
                raise self.semantic("duplicate transition", n, cols[0])
            seen.add(key)
            (steps if target.startswith("{") else triples).append(clause)
        if kind == "dtmc":
            self._check_rows(rates)
        rates = [r[:3] for r in rates]
        try:
            model = {
                "lts": lambda: LtsModel(self.states, self.actions, triples),
                "ctmc": lambda: CtmcModel(self.states, rates),
                "dtmc": lambda: CtmcModel(self.states, rates, dtmc=True),
                "imc": lambda: ImcModel(self.states, self.actions, triples, rates),
                "pa": lambda: PaModel(self.states, self.actions, steps),
                "ma": lambda: MaModel(self.states, self.actions, steps, rates),
            }[kind]()
        except FutsError as exc:
            raise self.semantic(str(exc), 1) from None
        return ModelDocument(kind, model, tuple(self.meta))

    def _check_rows(self, rates):
        totals, first = {}, {}
        for src, rate, _, n in rates:
            totals[src] = totals.get(src, Fraction(0)) + rate
            first.setdefault(src, n)
        for src in self.states:
            if src in totals and totals[src] != 1:
                raise self.semantic(
                    f"NotStochastic: outgoing probability of {src!r} is "
                    f"{format_value(totals[src])}, not 1",
                    first[src],
                    cls=NotStochasticError,
                )

    def _build_futs(self):
        if not self.components:
            raise self.syntax("kind futs needs at least one 'component' line", len(self.lines) or 1)
        ftype = FutsType(self.components)
        assignments = []
        seen = set()
        for n, cols, component, src, label, target in self.clauses:
            comp = ftype[component]
            if label not in comp.labels:
                raise self.semantic(f"label {label!r} not in component {component + 1}", n, cols[1])
            if (component, src, label) in seen:
                raise self.semantic("transition assigned twice", n, cols[0])
            seen.add((component, src, label))
            lit = _Literal(target, n, cols[2], self)
            spec = lit.to_spec(lit.parse_top(), comp.semirings)
            assignments.append((component, src, label, spec))
        try:
            futs = build_futs(ftype, self.states, assignments)
        except FutsError as exc:
            raise self.semantic(str(exc), 1) from None
        return futs


class _Literal:
    """Tokenizer/parser for ``{k:v, ...}`` literals with nested keys."""

    _TOKEN = re.compile(r"\s*(?:([{}:,])|([A-Za-z_][A-Za-z0-9_]*|\d*\.?\d+(?:/\d+)?))")

    def __init__(self, text, line, col, parser):
        self.text = text
        self.line = line
        self.col = col
        self.parser = parser
        self.pos = 0

    def error(self, msg):
        return self.parser.syntax(msg, self.line, self.col + self.pos)

    def peek(self):
        m = self._TOKEN.match(self.text, self.pos)
        if not m:
            return None, None
        return m.group(1) or m.group(2), m

    def take(self, expected=None):
        tok, m = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise self.error(f"expected {expected or 'a token'}")
        self.pos = m.end()
        return tok, self.col + m.start(m.lastindex)

    def parse_top(self):
        value = self.parse_map()
        if self.text[self.pos:].strip():
            raise self.error("trailing text")
        return value

    def parse_map(self):
        self.take("{")
        pairs = []
        tok, _ = self.peek()
        if tok == "}":
            self.take("}")
            return pairs
        while True:
            tok, kc = self.peek()
            if tok == "{":
                key = self.parse_map()
            else:
                key, kc = self.take()
                if key in "{}:,":
                    raise self.error("expected a key")
            self.take(":")
            value, vc = self.take()
            if value in "{}:,":
                raise self.error("expected a value")
            pairs.append((key, value, kc, vc))
            tok, _ = self.take()
            if tok == "}":
                return pairs
            if tok != ",":
                raise self.error("expected ',' or '}'")

    def to_spec(self, pairs, semirings):
        top = semirings[-1]
        out = []
        for key, value, kc, vc in pairs:
            if top is BOOL:
                if value not in ("true", "false"):
                    raise self.parser.syntax("expected true or false", self.line, vc)
                v = value == "true"
            else:
                if not _RATE.match(value):
                    raise self.parser.syntax(f"bad rational {value!r}", self.line, vc)
                v = parse_rational(value)
            if len(semirings) == 1:
                if isinstance(key, list):
                    raise self.parser.semantic("nested key at level 1", self.line, vc)
                if key not in self.parser.states:
                    raise self.parser.semantic(f"unknown state {key!r}", self.line, kc)
                out.append((key, v))
            else:
                if not isinstance(key, list):
                    raise self.parser.semantic(
                        f"expected a nested continuation key, got {key!r}", self.line, vc
                    )
                out.append((self.to_spec(key, semirings[:-1]), v))
        return out


def parse_model(text, filename=None):
    """Parse and validate a model file; errors carry ``line:col``."""
    return _Parser(text, filename).run()


def load_model(path):
    with open(path, encoding="utf-8") as fh:
        return parse_model(fh.read(), str(path))


# -- serialization --------------------------------------------------------


def _header(kind, states, actions, metadata):
    lines = [f"kind {kind}"]
    lines += [f"meta {k} {v}".rstrip() for k, v in metadata]
    lines.append("states " + " ".join(states))
    if actions:
        lines.append("actions " + " ".join(actions))
    return lines


def _dist_text(dist):
    return "{" + ", ".join(f"{s}:{format_value(p)}" for s, p in dist) + "}"


def serialize_model(doc):
    """Canonical text of a document; clauses are sorted by declaration order."""
    if doc.kind == "futs":
        return serialize_futs(doc.model, doc.metadata)
    m = doc.model
    kind = kind_of(m)
    pos = {s: i for i, s in enumerate(m.states)}
    actions = getattr(m, "actions", ())
    apos = {a: i for i, a in enumerate(actions)}
    lines = _header(kind, m.states, actions, doc.metadata)
    clauses = []
    for s, a, t in getattr(m, "transitions", ()) + getattr(m, "interactive", ()):
        clauses.append(((pos[s], 0, apos[a], pos[t]), f"trans {s} -{a}-> {t}"))
    for s, a, d in getattr(m, "steps", ()):
        key = (pos[s], 1, apos[a], tuple((pos[x], p) for x, p in d))
        clauses.append((key, f"trans {s} -{a}-> {_dist_text(d)}"))
    for s, rate, t in getattr(m, "rates", ()):
        clauses.append(((pos[s], 2, pos[t], rate), f"trans {s} -{format_value(rate)}-> {t}"))
    lines += [text for _, text in sorted(clauses, key=lambda c: c[0])]
    return "\n".join(lines) + "\n"


def _cont_text(futs, phi):
    if phi.level == 1:
        body = [f"{futs.states[k]}:{format_value(v)}" for k, v in phi.entries]
    else:
        body = sorted(
            f"{_cont_text(futs, futs.registry.get(phi.level - 1, k))}:{format_value(v)}"
            for k, v in phi.entries
        )
    return "{" + ", ".join(body) + "}"


def serialize_futs(futs, metadata=()):
    lines = _header("futs", futs.states, (), metadata)
    for comp in futs.type.components:
        rings = " ".join(r.value for r in comp.semirings)
        lines.append(f"component {' '.join(comp.labels)} : {rings}")
    for i, comp in enumerate(futs.type.components):
        lpos = {a: j for j, a in enumerate(comp.labels)}
        for (x, label), phi in sorted(futs.assigned(i), key=lambda kv: (kv[0][0], lpos[kv[0][1]])):
            lines.append(f"trans {i + 1} {futs.states[x]} -{label}-> {_cont_text(futs, phi)}")
    return "\n".join(lines) + "\n"


def serialize_partition(partition, names=None):
    """One ``{a b c}`` line per block, in declaration order.

    ``names`` optionally fixes the declaration order (default: carrier order).
    """
    order = list(names) if names is not None else list(partition.carrier)
    pos = {s: i for i, s in enumerate(order)}
    missing = [x for x in partition.carrier if x not in pos]
    if missing:
        raise UnknownState(f"no name order for {missing}")
    blocks = sorted((sorted(b, key=pos.__getitem__) for b in partition), key=lambda b: pos[b[0]])
    return "".join("{" + " ".join(b) + "}\n" for b in blocks)


_BLOCK = re.compile(r"\{([^{}]*)\}")


def parse_relation(text, states, filename=None):
    """Parse ``{a b}`` blocks (any whitespace/newlines between them);
    states not mentioned become singletons."""
    states = tuple(states)
    blocks = []
    seen = {}
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        pos = 0
        for m in _BLOCK.finditer(line):
            gap = line[pos:m.start()]
            if gap.strip():
                raise ModelSyntaxError("expected '{'", n, pos + 1, filename)
            pos = m.end()
            block = []
            for tok in m.group(1).replace(",", " ").split():
                c = m.start(1) + m.group(1).index(tok) + 1
                if tok not in states:
                    raise UnknownState(f"{filename or '<input>'}:{n}:{c}: unknown state {tok!r}")
                if tok in seen:
                    raise OverlappingBlocks(
                        f"{filename or '<input>'}:{n}:{c}: {tok!r} already in a block on line {seen[tok]}"
                    )
                seen[tok] = n
                block.append(tok)
            if block:
                blocks.append(block)
        if line[pos:].strip():
            raise ModelSyntaxError("expected '{'", n, pos + 1, filename)
    return Partition.from_blocks(states, blocks)

