"""The line-oriented text format for categories, monoids, actions, and
discrete dynamical systems.

One document kind per file, inferred from the first declaration:

* category: ``objects a b``, ``mor f : a -> b``, ``cmp f g = h`` (the
  composite "f then g"); identities are created automatically as ``id_a``
  and their composites filled in.  Missing composites are not a parse
  error: the category checker reports them, so partial tables can be
  inspected.
* monoid: ``elements e v h t``, ``unit e``, and one Cayley row per element,
  ``row v : v v t t``, listing ``v then x`` for x in element order.  The
  unit's row may be omitted.
* action: ``use pane.mon``, ``carrier A B C D``, ``on v : A->C B->D ...``
  with one line per element (the unit's may be omitted).
* dynsys: one ``point -> image`` line per point.

``#`` starts a comment; tokens are case-sensitive ``\\w+`` names.  Every
declaration keeps its line for diagnostics.
"""

import re
from dataclasses import dataclass, replace
from pathlib import Path

from .actions import FinMonoid, SetAction
from .category import FinCategory, Mor
from .dynsys import DiscreteDynSys
from .errors import ParseError

_CATEGORY_KEYWORDS = {"objects", "mor", "cmp"}
_MONOID_KEYWORDS = {"elements", "unit", "row"}
_ACTION_KEYWORDS = {"use", "carrier", "on"}

_TOKEN = r"\w+"
_MOR_RE = re.compile(rf"^mor\s+({_TOKEN})\s*:\s*({_TOKEN})\s*->\s*({_TOKEN})$")
_CMP_RE = re.compile(rf"^cmp\s+({_TOKEN})\s+({_TOKEN})\s*=\s*({_TOKEN})$")
_UNIT_RE = re.compile(rf"^unit\s+({_TOKEN})$")
_ROW_RE = re.compile(rf"^row\s+({_TOKEN})\s*:\s*(.+)$")
_USE_RE = re.compile(r"^use\s+(\S+)$")
_ON_RE = re.compile(rf"^on\s+({_TOKEN})\s*:\s*(.+)$")
_PAIR_RE = re.compile(rf"^({_TOKEN})->({_TOKEN})$")
_STEP_RE = re.compile(rf"^({_TOKEN})\s*->\s*({_TOKEN})$")
_NAME_RE = re.compile(rf"^{_TOKEN}$")


@dataclass(frozen=True)
class Decl:
    """One parsed declaration; ``args`` is the normalised payload."""

    line: int
    keyword: str
    args: tuple


@dataclass
class Document:
    """A parsed file: its kind, its declarations, and the built value.

    For action documents the referenced monoid lives in another file, so
    ``value`` stays None until :func:`load_document` (or
    :func:`build_action`) resolves ``monoid_ref``.
    """

    kind: str
    decls: tuple
    value: object = None
    monoid_ref: str = None

    def __eq__(self, other):
        if not isinstance(other, Document):
            return NotImplemented
        mine = [(d.keyword, d.args) for d in self.decls]
        theirs = [(d.keyword, d.args) for d in other.decls]
        return self.kind == other.kind and mine == theirs


def _col_of(raw, token):
    at = raw.find(token)
    return at + 1 if at >= 0 else 1


def _lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body


def _names(lineno, raw, blob, what):
    names = blob.split()
    for n in names:
        if not _NAME_RE.match(n):
            raise ParseError(f"bad {what} name {n!r}", line=lineno, col=_col_of(raw, n))
    return tuple(names)


def parse(text):
    """Parse a document from text; the kind is inferred from the first
    declaration line.  Raises ParseError with a 1-based line (and column
    where known) on any malformed or inconsistent input."""
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty document", line=1)
    first = lines[0][1].split(None, 1)[0]
    if first in _CATEGORY_KEYWORDS:
        return _parse_category(lines)
    if first in _MONOID_KEYWORDS:
        return _parse_monoid(lines)
    if first in _ACTION_KEYWORDS:
        return _parse_action(lines)
    if _STEP_RE.match(lines[0][1]):
        return _parse_dynsys(lines)
    raise ParseError(f"unrecognised declaration {first!r}", line=lines[0][0])


# -- category files ---------------------------------------------------------------

def _parse_category(lines):
    decls = []
    objects = []
    obj_lines = {}
    mor_decls = []
    cmp_decls = []
    for lineno, body in lines:
        keyword = body.split(None, 1)[0]
        if keyword == "objects":
            names = _names(lineno, body, body[len("objects"):], "object")
            if not names:
                raise ParseError("objects line declares nothing", line=lineno)
            for n in names:
                if n in obj_lines:
                    raise ParseError(f"duplicate object {n!r}", line=lineno, col=_col_of(body, n))
                obj_lines[n] = lineno
                objects.append(n)
            decls.append(Decl(lineno, "objects", names))
        elif keyword == "mor":
            m = _MOR_RE.match(body)
            if not m:
                raise ParseError("expected 'mor NAME : DOM -> COD'", line=lineno)
            mor_decls.append((lineno, body, m.groups()))
            decls.append(Decl(lineno, "mor", m.groups()))
        elif keyword == "cmp":
            m = _CMP_RE.match(body)
            if not m:
                raise ParseError("expected 'cmp F G = H'", line=lineno)
            cmp_decls.append((lineno, body, m.groups()))
            decls.append(Decl(lineno, "cmp", m.groups()))
        else:
            raise ParseError(f"unexpected {keyword!r} in a category document", line=lineno)

    morphisms = []
    mor_names = {}
    identities = {}
    for obj in objects:
        ident = f"id_{obj}"
        if ident in mor_names:
            raise ParseError(f"identity name {ident!r} collides", line=obj_lines[obj])
        mor_names[ident] = obj_lines[obj]
        morphisms.append(Mor(ident, obj, obj))
        identities[obj] = ident
    for lineno, raw, (name, dom, cod) in mor_decls:
        if name in mor_names:
            raise ParseError(f"duplicate morphism {name!r}", line=lineno, col=_col_of(raw, name))
        for endpoint in (dom, cod):
            if endpoint not in obj_lines:
                raise ParseError(
                    f"undeclared object {endpoint!r}", line=lineno, col=_col_of(raw, endpoint)
                )
        mor_names[name] = lineno
        morphisms.append(Mor(name, dom, cod))

    comp = {}
    for lineno, raw, (f, g, h) in cmp_decls:
        for name in (f, g, h):
            if name not in mor_names:
                raise ParseError(
                    f"undeclared morphism {name!r}", line=lineno, col=_col_of(raw, name)
                )
        if (f, g) in comp:
            raise ParseError(f"composite for ({f}, {g}) already declared", line=lineno)
        comp[(f, g)] = h
    for m in morphisms:
        comp.setdefault((identities[m.dom], m.name), m.name)
        comp.setdefault((m.name, identities[m.cod]), m.name)

    value = FinCategory(tuple(objects), morphisms, identities, comp)
    return Document(kind="category", decls=tuple(decls), value=value)


# -- monoid files -----------------------------------------------------------------

def _parse_monoid(lines):
    decls = []
    elements = []
    element_lines = {}
    unit = None
    rows = {}
    for lineno, body in lines:
        keyword = body.split(None, 1)[0]
        if keyword == "elements":
            names = _names(lineno, body, body[len("elements"):], "element")
            if not names:
                raise ParseError("elements line declares nothing", line=lineno)
            for n in names:
                if n in element_lines:
                    raise ParseError(f"duplicate element {n!r}", line=lineno, col=_col_of(body, n))
                element_lines[n] = lineno
                elements.append(n)
            decls.append(Decl(lineno, "elements", names))
        elif keyword == "unit":
            m = _UNIT_RE.match(body)
            if not m:
                raise ParseError("expected 'unit NAME'", line=lineno)
            if unit is not None:
                raise ParseError("unit already declared", line=lineno)
            unit = m.group(1)
            decls.append(Decl(lineno, "unit", (unit,)))
        elif keyword == "row":
            m = _ROW_RE.match(body)
            if not m:
                raise ParseError("expected 'row ELEM : IMAGES...'", line=lineno)
            e, blob = m.groups()
            images = _names(lineno, body, blob, "element")
            if e in rows:
                raise ParseError(f"duplicate row for {e!r}", line=lineno)
            rows[e] = (lineno, body, images)
            decls.append(Decl(lineno, "row", (e, images)))
        else:
            raise ParseError(f"unexpected {keyword!r} in a monoid document", line=lineno)

    first_line = lines[0][0]
    if unit is None:
        raise ParseError("monoid document has no unit declaration", line=first_line)
    if unit not in element_lines:
        raise ParseError(f"unit {unit!r} is not a declared element", line=first_line)
    for e, (lineno, raw, images) in rows.items():
        if e not in element_lines:
            raise ParseError(f"row for undeclared element {e!r}", line=lineno, col=_col_of(raw, e))
        if len(images) != len(elements):
            raise ParseError(
                f"row for {e!r} lists {len(images)} products, expected {len(elements)}",
                line=lineno,
            )
        for img in images:
            if img not in element_lines:
                raise ParseError(
                    f"undeclared element {img!r}", line=lineno, col=_col_of(raw, img)
                )
    table = {}
    for e in elements:
        if e in rows:
            images = rows[e][2]
        elif e == unit:
            images = tuple(elements)
        else:
            raise ParseError(f"missing row for element {e!r}", line=first_line)
        for x, img in zip(elements, images):
            table[(e, x)] = img

    value = FinMonoid(tuple(elements), unit, table)
    return Document(kind="monoid", decls=tuple(decls), value=value)


# -- action files -----------------------------------------------------------------

def _parse_action(lines):
    decls = []
    use = None
    carrier = None
    carrier_line = None
    on_decls = {}
    for lineno, body in lines:
        keyword = body.split(None, 1)[0]
        if keyword == "use":
            m = _USE_RE.match(body)
            if not m:
                raise ParseError("expected 'use PATH'", line=lineno)
            if use is not None:
                raise ParseError("use already declared", line=lineno)
            use = m.group(1)
            decls.append(Decl(lineno, "use", (use,)))
        elif keyword == "carrier":
            names = _names(lineno, body, body[len("carrier"):], "carrier point")
            if not names:
                raise ParseError("carrier line declares nothing", line=lineno)
            if carrier is not None:
                raise ParseError("carrier already declared", line=lineno)
            if len(set(names)) != len(names):
                raise ParseError("duplicate carrier point", line=lineno)
            carrier = names
            carrier_line = lineno
            decls.append(Decl(lineno, "carrier", names))
        elif keyword == "on":
            m = _ON_RE.match(body)
            if not m:
                raise ParseError("expected 'on ELEM : P->Q ...'", line=lineno)
            e, blob = m.groups()
            pairs = []
            for tok in blob.split():
                pm = _PAIR_RE.match(tok)
                if not pm:
                    raise ParseError(f"expected 'P->Q', got {tok!r}", line=lineno,
                                     col=_col_of(body, tok))
                pairs.append(pm.groups())
            if e in on_decls:
                raise ParseError(f"duplicate 'on' line for {e!r}", line=lineno)
            on_decls[e] = (lineno, body, tuple(pairs))
            decls.append(Decl(lineno, "on", (e, tuple(pairs))))
        else:
            raise ParseError(f"unexpected {keyword!r} in an action document", line=lineno)

    first_line = lines[0][0]
    if use is None:
        raise ParseError("action document has no 'use' declaration", line=first_line)
    if carrier is None:
        raise ParseError("action document has no carrier", line=first_line)
    points = set(carrier)
    for e, (lineno, raw, pairs) in on_decls.items():
        mapped = {}
        for p, q in pairs:
            if p not in points:
                raise ParseError(f"unknown carrier point {p!r}", line=lineno, col=_col_of(raw, p))
            if q not in points:
                raise ParseError(f"unknown carrier point {q!r}", line=lineno, col=_col_of(raw, q))
            if p in mapped:
                raise ParseError(f"point {p!r} mapped twice", line=lineno)
            mapped[p] = q
        missing = [p for p in carrier if p not in mapped]
        if missing:
            raise ParseError(f"no image for carrier point {missing[0]!r}", line=lineno)

    return Document(kind="action", decls=tuple(decls), monoid_ref=use)


def build_action(doc, monoid):
    """Build the SetAction of an action document against its monoid."""
    if doc.kind != "action":
        raise ParseError("not an action document")
    carrier = next(d.args for d in doc.decls if d.keyword == "carrier")
    elements = set(monoid.elements)
    act = {}
    for d in doc.decls:
        if d.keyword != "on":
            continue
        e, pairs = d.args
        if e not in elements:
            raise ParseError(f"{e!r} is not an element of the monoid", line=d.line)
        act[e] = {p: q for p, q in pairs}
    for e in monoid.elements:
        if e in act:
            continue
        if e == monoid.unit:
            act[e] = {p: p for p in carrier}
        else:
            raise ParseError(f"no 'on' line for element {e!r}",
                             line=doc.decls[0].line if doc.decls else 1)
    return SetAction(monoid, carrier, act)


# -- dynsys files -----------------------------------------------------------------

def _parse_dynsys(lines):
    decls = []
    step = {}
    order = []
    targets = []
    for lineno, body in lines:
        m = _STEP_RE.match(body)
        if not m:
            raise ParseError("expected 'POINT -> POINT'", line=lineno)
        p, q = m.groups()
        if p in step:
            raise ParseError(f"duplicate step for point {p!r}", line=lineno, col=_col_of(body, p))
        step[p] = q
        order.append(p)
        targets.append((lineno, body, q))
        decls.append(Decl(lineno, "step", (p, q)))
    for lineno, raw, q in targets:
        if q not in step:
            raise ParseError(
                f"point {q!r} has no outgoing step", line=lineno, col=_col_of(raw, q)
            )
    value = DiscreteDynSys(tuple(order), step)
    return Document(kind="dynsys", decls=tuple(decls), value=value)


# -- files and printing --------------------------------------------------------------

def load_document(path):
    """Read and parse a file; for action documents, also load the monoid named
    by ``use`` (relative to the file) and build the action value."""
    path = Path(path)
    doc = parse(path.read_text(encoding="utf-8"))
    if doc.kind != "action":
        return doc
    monoid_path = Path(doc.monoid_ref)
    if not monoid_path.is_absolute():
        monoid_path = path.parent / monoid_path
    try:
        monoid_doc = load_document(monoid_path)
    except OSError as exc:
        use_line = next(d.line for d in doc.decls if d.keyword == "use")
        raise ParseError(f"cannot read monoid file: {exc}", line=use_line) from exc
    if monoid_doc.kind != "monoid":
        use_line = next(d.line for d in doc.decls if d.keyword == "use")
        raise ParseError(
            f"'use' target is a {monoid_doc.kind} document, expected monoid", line=use_line
        )
    return replace(doc, value=build_action(doc, monoid_doc.value))


def format_document(doc):
    """Render a document back to canonical text; reparsing yields an equal
    Document."""
    out = []
    for d in doc.decls:
        if d.keyword in ("objects", "elements", "carrier"):
            out.append(f"{d.keyword} {' '.join(d.args)}")
        elif d.keyword == "mor":
            name, dom, cod = d.args
            out.append(f"mor {name} : {dom} -> {cod}")
        elif d.keyword == "cmp":
            f, g, h = d.args
            out.append(f"cmp {f} {g} = {h}")
        elif d.keyword == "unit":
            out.append(f"unit {d.args[0]}")
        elif d.keyword == "row":
            e, images = d.args
            out.append(f"row {e} : {' '.join(images)}")
        elif d.keyword == "use":
            out.append(f"use {d.args[0]}")
        elif d.keyword == "on":
            e, pairs = d.args
            out.append(f"on {e} : {' '.join(f'{p}->{q}' for p, q in pairs)}")
        elif d.keyword == "step":
            p, q = d.args
            out.append(f"{p} -> {q}")
        else:
            raise ParseError(f"unknown declaration kind {d.keyword!r}")
    return "\n".join(out) + "\n"
