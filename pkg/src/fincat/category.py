"""Finite categories presented by explicit composition tables.

A category here is desk-scale data: a list of objects, a list of named
morphisms with endpoints, an identity assignment, and a composition table
keyed by pairs ``(g, h)`` in diagrammatic order ("g then h", defined when
``cod(g) == dom(h)``).  Everything is checkable by exhaustive enumeration,
and every enumeration walks declaration order so results are deterministic.
"""

from dataclasses import dataclass
from itertools import product

from .errors import LimitExceededError, NonComposableError, StructuralError
from .report import ValidationReport, Violation, report

# Refusal bound for exhaustive law scans; configurable per call.
MAX_MORPHISMS = 512


@dataclass(frozen=True)
class Mor:
    """A named morphism with the names of its endpoint objects."""

    name: str
    dom: str
    cod: str


def _check_token(name, what):
    if not isinstance(name, str) or not name or name.split() != [name]:
        raise StructuralError(f"{what} name must be a non-empty token, got {name!r}")


class FinCategory:
    """A finite category given by explicit composition data.

    Construction verifies only that names resolve and are unique; the
    categorical laws are the business of :func:`check_category`, which
    reports violations instead of refusing to build, so that partial or
    broken tables can still be inspected.
    """

    def __init__(self, objects, morphisms, identities, comp):
        objects = tuple(objects)
        mors = []
        for m in morphisms:
            if not isinstance(m, Mor):
                m = Mor(*m)
            mors.append(m)
        morphisms = tuple(mors)

        obj_pos = {}
        for a in objects:
            _check_token(a, "object")
            if a in obj_pos:
                raise StructuralError(f"duplicate object name {a!r}")
            obj_pos[a] = len(obj_pos)
        by_name = {}
        for m in morphisms:
            _check_token(m.name, "morphism")
            if m.name in by_name:
                raise StructuralError(f"duplicate morphism name {m.name!r}")
            if m.dom not in obj_pos:
                raise StructuralError(f"morphism {m.name!r} has undeclared domain {m.dom!r}")
            if m.cod not in obj_pos:
                raise StructuralError(f"morphism {m.name!r} has undeclared codomain {m.cod!r}")
            by_name[m.name] = m

        identities = dict(identities)
        for a, i in identities.items():
            if a not in obj_pos:
                raise StructuralError(f"identity declared for undeclared object {a!r}")
            if i not in by_name:
                raise StructuralError(f"identity of {a!r} names undeclared morphism {i!r}")

        table = {}
        for (g, h), k in dict(comp).items():
            for name in (g, h, k):
                if name not in by_name:
                    raise StructuralError(f"composition table names undeclared morphism {name!r}")
            table[(g, h)] = k

        self.objects = objects
        self.morphisms = morphisms
        self.identities = identities
        self.comp = table
        self._by_name = by_name
        self._obj_pos = obj_pos
        self._mor_pos = {m.name: i for i, m in enumerate(morphisms)}

    # -- basic queries -------------------------------------------------

    def mor(self, name):
        try:
            return self._by_name[name]
        except KeyError:
            raise StructuralError(f"unknown morphism {name!r}") from None

    def has_object(self, name):
        return name in self._obj_pos

    def identity(self, obj):
        """Name of the identity morphism of ``obj``, or None if unassigned."""
        if obj not in self._obj_pos:
            raise StructuralError(f"unknown object {obj!r}")
        return self.identities.get(obj)

    def hom(self, a, b):
        """Morphism names a -> b, in declaration order."""
        for x in (a, b):
            if x not in self._obj_pos:
                raise StructuralError(f"unknown object {x!r}")
        return tuple(m.name for m in self.morphisms if m.dom == a and m.cod == b)

    def compose(self, g, h):
        """The composite "g then h". Requires ``cod(g) == dom(h)``."""
        gm, hm = self.mor(g), self.mor(h)
        if gm.cod != hm.dom:
            raise NonComposableError(
                f"cannot compose {g} : {gm.dom}->{gm.cod} with {h} : {hm.dom}->{hm.cod}"
            )
        try:
            return self.comp[(g, h)]
        except KeyError:
            raise StructuralError(f"no composite recorded for ({g}, {h})") from None

    # -- derived structure ----------------------------------------------

    def is_isomorphism(self, m):
        """Whether ``m`` has a two-sided inverse; returns (flag, witness)."""
        mm = self.mor(m)
        id_dom = self.identities.get(mm.dom)
        id_cod = self.identities.get(mm.cod)
        if id_dom is None or id_cod is None:
            return False, None
        for cand in self.morphisms:
            if cand.dom != mm.cod or cand.cod != mm.dom:
                continue
            if self.comp.get((m, cand.name)) == id_dom and self.comp.get((cand.name, m)) == id_cod:
                return True, cand.name
        return False, None

    def automorphism_group(self, a):
        """The one-object category of invertible endomorphisms of ``a``."""
        if a not in self._obj_pos:
            raise StructuralError(f"unknown object {a!r}")
        names = [
            m.name
            for m in self.morphisms
            if m.dom == a and m.cod == a and self.is_isomorphism(m.name)[0]
        ]
        keep = set(names)
        identities = {}
        ident = self.identities.get(a)
        if ident in keep:
            identities[a] = ident
        comp = {
            (g, h): k
            for (g, h), k in self.comp.items()
            if g in keep and h in keep and k in keep
        }
        return FinCategory((a,), [self.mor(n) for n in names], identities, comp)

    def is_monoid(self):
        return len(self.objects) == 1

    def is_group(self):
        return self.is_monoid() and all(
            self.is_isomorphism(m.name)[0] for m in self.morphisms
        )

    # -- misc -------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, FinCategory):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.morphisms == other.morphisms
            and self.identities == other.identities
            and self.comp == other.comp
        )

    def __repr__(self):
        return (
            f"FinCategory({len(self.objects)} objects, "
            f"{len(self.morphisms)} morphisms)"
        )


def check_category(c, max_morphisms=MAX_MORPHISMS):
    """Exhaustively verify the category laws of ``c``.

    The report lists one violation per broken instance:

    * ``non-composable-pair`` / ``missing-composite`` / ``composite-endpoints``
      for composition-table defects,
    * ``identity`` for a missing or mis-assigned identity, or a failed
      identity law,
    * ``associativity`` for each failed composable triple.

    Raises LimitExceededError instead of scanning categories with more than
    ``max_morphisms`` morphisms.
    """
    if len(c.morphisms) > max_morphisms:
        raise LimitExceededError(
            f"category has {len(c.morphisms)} morphisms, bound is {max_morphisms}",
            bound=len(c.morphisms),
            limit=max_morphisms,
        )
    violations = []

    good_identity = {}
    for a in c.objects:
        i = c.identities.get(a)
        if i is None:
            violations.append(Violation("identity", (a,)))
            continue
        im = c.mor(i)
        if im.dom != a or im.cod != a:
            violations.append(Violation("identity", (a,)))
            continue
        good_identity[a] = i

    by_dom = {a: [] for a in c.objects}
    for m in c.morphisms:
        by_dom[m.dom].append(m)

    for g in c.morphisms:
        for h in c.morphisms:
            k = c.comp.get((g.name, h.name))
            if g.cod != h.dom:
                if k is not None:
                    violations.append(Violation("non-composable-pair", (g.name, h.name)))
                continue
            if k is None:
                violations.append(Violation("missing-composite", (g.name, h.name)))
                continue
            km = c.mor(k)
            if km.dom != g.dom or km.cod != h.cod:
                violations.append(Violation("composite-endpoints", (g.name, h.name, k)))

    for g in c.morphisms:
        left = good_identity.get(g.dom)
        if left is not None and c.comp.get((left, g.name)) not in (None, g.name):
            violations.append(Violation("identity", (g.name,)))
        right = good_identity.get(g.cod)
        if right is not None and c.comp.get((g.name, right)) not in (None, g.name):
            violations.append(Violation("identity", (g.name,)))

    for g in c.morphisms:
        for h in by_dom[g.cod]:
            gh = c.comp.get((g.name, h.name))
            if gh is None:
                continue
            for k in by_dom[h.cod]:
                hk = c.comp.get((h.name, k.name))
                if hk is None:
                    continue
                lhs = c.comp.get((gh, k.name))
                rhs = c.comp.get((g.name, hk))
                if lhs is None or rhs is None:
                    continue
                if lhs != rhs:
                    violations.append(Violation("associativity", (g.name, h.name, k.name)))

    return report(violations)


def _cones(c, f, g):
    """All cones over the cospan (f, g), in canonical order."""
    fm, gm = c.mor(f), c.mor(g)
    cones = []
    for p in c.objects:
        for p1 in c.hom(p, fm.dom):
            for p2 in c.hom(p, gm.dom):
                if c.comp.get((p1, f)) is not None and c.comp.get((p1, f)) == c.comp.get((p2, g)):
                    cones.append((p, p1, p2))
    return cones


def find_pullback(c, f, g):
    """Search for a pullback of the cospan ``f : a -> x``, ``g : b -> x``.

    Returns ``(apex, p1, p2)`` for the first cone (in canonical order over
    declared objects and morphisms) through which every other cone factors
    uniquely, or None when no such cone exists.  When several isomorphic
    apexes qualify, the first in declaration order wins.
    """
    fm, gm = c.mor(f), c.mor(g)
    if fm.cod != gm.cod:
        raise NonComposableError(
            f"not a cospan: {f} ends at {fm.cod!r} but {g} ends at {gm.cod!r}"
        )
    cones = _cones(c, f, g)
    for p, p1, p2 in cones:
        universal = True
        for q, q1, q2 in cones:
            factorings = [
                u
                for u in c.hom(q, p)
                if c.comp.get((u, p1)) == q1 and c.comp.get((u, p2)) == q2
            ]
            if len(factorings) != 1:
                universal = False
                break
        if universal:
            return p, p1, p2
    return None
