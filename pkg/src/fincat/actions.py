"""Monoids as Cayley tables, their actions on finite sets, and their matrix
representations.

Two instances ship built in: the order-8 symmetry group of a labelled square
acting on its corners, and the four-element "windowpane" crush monoid
together with its 2-dimensional matrix representation.
"""

from .category import FinCategory, Mor
from .errors import StructuralError
from .functors import SetFunctor
from .matrix import RatMatrix
from .report import Violation, report


class FinMonoid:
    """A monoid given by an ordered element list, a unit, and a total Cayley
    table read as ``table[(e, f)] = "e then f"``.

    Construction checks that the table is total and closed; the unit and
    associativity laws are verified by :func:`check_monoid`.
    """

    def __init__(self, elements, unit, table):
        elements = tuple(elements)
        seen = set()
        for e in elements:
            if not isinstance(e, str) or not e or e.split() != [e]:
                raise StructuralError(f"element name must be a non-empty token, got {e!r}")
            if e in seen:
                raise StructuralError(f"duplicate element name {e!r}")
            seen.add(e)
        if unit not in seen:
            raise StructuralError(f"unit {unit!r} is not a declared element")
        table = dict(table)
        for e in elements:
            for f in elements:
                got = table.get((e, f))
                if got is None:
                    raise StructuralError(f"Cayley table is missing the product ({e}, {f})")
                if got not in seen:
                    raise StructuralError(f"product ({e}, {f}) = {got!r} is not an element")
        if len(table) != len(elements) ** 2:
            extra = next(k for k in table if k[0] not in seen or k[1] not in seen)
            raise StructuralError(f"Cayley table has an entry for undeclared pair {extra}")
        self.elements = elements
        self.unit = unit
        self.table = table

    def mul(self, e, f):
        """The product "e then f"."""
        try:
            return self.table[(e, f)]
        except KeyError:
            raise StructuralError(f"unknown elements in product ({e!r}, {f!r})") from None

    def __eq__(self, other):
        if not isinstance(other, FinMonoid):
            return NotImplemented
        return (
            self.elements == other.elements
            and self.unit == other.unit
            and self.table == other.table
        )

    def __repr__(self):
        return f"FinMonoid({len(self.elements)} elements, unit {self.unit!r})"


def check_monoid(m):
    """Verify the unit laws and associativity of a Cayley table."""
    violations = []
    for e in m.elements:
        if m.mul(m.unit, e) != e or m.mul(e, m.unit) != e:
            violations.append(Violation("unit", (e,)))
    for e in m.elements:
        for f in m.elements:
            ef = m.mul(e, f)
            for g in m.elements:
                if m.mul(ef, g) != m.mul(e, m.mul(f, g)):
                    violations.append(Violation("associativity", (e, f, g)))
    return report(violations)


def monoid_to_category(m, obj="star"):
    """The one-object category whose morphisms are the monoid elements.

    Raises StructuralError when the table breaks a monoid law.
    """
    checked = check_monoid(m)
    if not checked.ok:
        first = checked.violations[0]
        raise StructuralError(
            f"not a monoid: {first} ({len(checked.violations)} violations in total)"
        )
    morphisms = [Mor(e, obj, obj) for e in m.elements]
    comp = {(e, f): m.mul(e, f) for e in m.elements for f in m.elements}
    return FinCategory((obj,), morphisms, {obj: m.unit}, comp)


class SetAction:
    """An action of a monoid on a finite carrier: one endofunction per
    element, composing in diagrammatic order (``act(e then f) = act(f) o act(e)``)."""

    def __init__(self, monoid, carrier, act):
        carrier = tuple(carrier)
        points = set()
        for p in carrier:
            if p in points:
                raise StructuralError(f"duplicate carrier point {p!r}")
            points.add(p)
        act = {e: dict(fn) for e, fn in dict(act).items()}
        for e in monoid.elements:
            fn = act.get(e)
            if fn is None:
                raise StructuralError(f"no action declared for element {e!r}")
            for p in carrier:
                q = fn.get(p)
                if q is None:
                    raise StructuralError(f"action of {e!r} is undefined at {p!r}")
                if q not in points:
                    raise StructuralError(f"action of {e!r} sends {p!r} outside the carrier")
        if set(act) != set(monoid.elements):
            extra = next(e for e in act if e not in set(monoid.elements))
            raise StructuralError(f"action declared for undeclared element {extra!r}")
        self.monoid = monoid
        self.carrier = carrier
        self.act = act

    def apply(self, e, p):
        if p not in self.act[self.monoid.unit]:
            raise StructuralError(f"unknown carrier point {p!r}")
        return self.act[e][p]

    def __eq__(self, other):
        if not isinstance(other, SetAction):
            return NotImplemented
        return (
            self.monoid == other.monoid
            and self.carrier == other.carrier
            and self.act == other.act
        )

    def __repr__(self):
        return f"SetAction({self.monoid!r} on {len(self.carrier)} points)"


def check_action(a):
    """Verify the unit and composition laws of an action over every element
    pair and carrier point."""
    violations = []
    unit = a.monoid.unit
    for p in a.carrier:
        if a.act[unit][p] != p:
            violations.append(Violation("action-unit", (p,)))
    for e in a.monoid.elements:
        for f in a.monoid.elements:
            ef = a.monoid.mul(e, f)
            for p in a.carrier:
                if a.act[ef][p] != a.act[f][a.act[e][p]]:
                    violations.append(Violation("action-composition", (e, f, p)))
    return report(violations)


class MatRepresentation:
    """An assignment of an n x n matrix to each monoid element, multiplying in
    diagrammatic order (``rep(e then f) = rep(e) @ rep(f)``)."""

    def __init__(self, monoid, dim, rep):
        rep = dict(rep)
        for e in monoid.elements:
            mat = rep.get(e)
            if mat is None:
                raise StructuralError(f"no matrix assigned to element {e!r}")
            if mat.dim != (dim, dim):
                raise StructuralError(
                    f"matrix for {e!r} is {mat.rows}x{mat.cols}, expected {dim}x{dim}"
                )
        if set(rep) != set(monoid.elements):
            extra = next(e for e in rep if e not in set(monoid.elements))
            raise StructuralError(f"matrix assigned to undeclared element {extra!r}")
        self.monoid = monoid
        self.dim = dim
        self.rep = rep

    def __eq__(self, other):
        if not isinstance(other, MatRepresentation):
            return NotImplemented
        return self.monoid == other.monoid and self.dim == other.dim and self.rep == other.rep

    def __repr__(self):
        return f"MatRepresentation({self.monoid!r}, dim {self.dim})"


def check_representation(r):
    """Verify that the unit maps to the identity matrix and that the matrix
    of every product is the product of the matrices."""
    violations = []
    if r.rep[r.monoid.unit] != RatMatrix.identity(r.dim):
        violations.append(Violation("representation-unit", (r.monoid.unit,)))
    for e in r.monoid.elements:
        for f in r.monoid.elements:
            if r.rep[r.monoid.mul(e, f)] != r.rep[e] @ r.rep[f]:
                violations.append(Violation("representation-composition", (e, f)))
    return report(violations)


def orbit(a, p):
    """All points reachable from ``p``: ``{act(e)(p) for every element e}``."""
    if p not in set(a.carrier):
        raise StructuralError(f"unknown carrier point {p!r}")
    return frozenset(a.act[e][p] for e in a.monoid.elements)


def as_set_functor(action, obj="star"):
    """The action seen as a set-valued functor on the one-object category of
    its monoid."""
    cat = monoid_to_category(action.monoid, obj=obj)
    return SetFunctor(
        source=cat,
        at_obj={obj: action.carrier},
        at_mor={e: dict(action.act[e]) for e in action.monoid.elements},
    )


# -- built-in instances ----------------------------------------------------------

_CORNERS = ("A", "B", "C", "D")

# Vertex images of the eight symmetries of the square with corners labelled
# A (top left), B (top right), C (bottom left), D (bottom right).  R90 turns
# counterclockwise; FlipV mirrors top-to-bottom; RkF means "rotate by k, then
# flip".
_D8_PERMS = {
    "Id": {"A": "A", "B": "B", "C": "C", "D": "D"},
    "R90": {"A": "C", "B": "A", "C": "D", "D": "B"},
    "R180": {"A": "D", "B": "C", "C": "B", "D": "A"},
    "R270": {"A": "B", "B": "D", "C": "A", "D": "C"},
    "FlipV": {"A": "C", "B": "D", "C": "A", "D": "B"},
    "R90F": {"A": "A", "B": "C", "C": "B", "D": "D"},
    "R180F": {"A": "B", "B": "A", "C": "D", "D": "C"},
    "R270F": {"A": "D", "B": "B", "C": "C", "D": "A"},
}


def builtin_d8():
    """The order-8 square-symmetry group with its action on the corners.

    Returns ``(monoid, vertex_action)``.  The Cayley table is derived from the
    corner permutations, so the action is faithful by construction.
    """
    elements = tuple(_D8_PERMS)
    by_perm = {tuple(sorted(p.items())): name for name, p in _D8_PERMS.items()}
    table = {}
    for e in elements:
        for f in elements:
            composed = {p: _D8_PERMS[f][_D8_PERMS[e][p]] for p in _CORNERS}
            table[(e, f)] = by_perm[tuple(sorted(composed.items()))]
    monoid = FinMonoid(elements, "Id", table)
    action = SetAction(monoid, _CORNERS, {e: dict(p) for e, p in _D8_PERMS.items()})
    return monoid, action


# Corner coordinates of the unit windowpane, with C at the origin.
_PANE_COORDS = {"A": (0, 1), "B": (1, 1), "C": (0, 0), "D": (1, 0)}


def builtin_windowpane():
    """The four-element crush monoid {I, V, H, T} with its matrix
    representation and the derived corner action.

    V and H are idempotent one-axis crushes, T the total crush absorbing
    everything, and V then H (either order) equals T.  The corner action is
    computed by applying each matrix to the corner coordinates as row
    vectors.

    Returns ``(monoid, corner_action, representation)``.
    """
    elements = ("I", "V", "H", "T")
    table = {}
    for e in elements:
        table[("I", e)] = e
        table[(e, "I")] = e
        table[("T", e)] = "T"
        table[(e, "T")] = "T"
    table[("V", "V")] = "V"
    table[("H", "H")] = "H"
    table[("V", "H")] = "T"
    table[("H", "V")] = "T"
    monoid = FinMonoid(elements, "I", table)

    rep = MatRepresentation(
        monoid,
        2,
        {
            "I": RatMatrix.identity(2),
            "V": RatMatrix.from_rows([[1, 0], [0, 0]]),
            "H": RatMatrix.from_rows([[0, 0], [0, 1]]),
            "T": RatMatrix.zero(2, 2),
        },
    )

    corner_of = {v: k for k, v in _PANE_COORDS.items()}
    act = {}
    for e in elements:
        fn = {}
        for p, (x, y) in _PANE_COORDS.items():
            image = RatMatrix(1, 2, (x, y)) @ rep.rep[e]
            fn[p] = corner_of[tuple(image.entries)]
        act[e] = fn
    action = SetAction(monoid, _CORNERS, act)
    return monoid, action, rep
