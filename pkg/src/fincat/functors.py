"""Functors between finite categories, set-valued functors, natural
transformations, and brute-force Yoneda verification.

Enumeration is complete backtracking search: candidate images are tried in
declaration order and pruned on the first violated constraint, so results
come out in lexicographic order over the declared orderings and no candidate
is ever skipped.  Raw search-space bounds are computed up front and refused
when they exceed the caller's limit.
"""

from dataclasses import dataclass

from .category import FinCategory
from .errors import LimitExceededError, StructuralError
from .report import Violation, report

# Refusal bound on raw search-space size for the enumerators.
DEFAULT_LIMIT = 100_000_000


@dataclass
class CatFunctor:
    """A functor: object and morphism assignments between two categories."""

    source: FinCategory
    target: FinCategory
    obj_map: dict
    mor_map: dict


@dataclass
class SetFunctor:
    """A set-valued functor: an ordered token set per object and a function
    table per morphism, composing in diagrammatic order."""

    source: FinCategory
    at_obj: dict
    at_mor: dict


@dataclass
class NatTransf:
    """A family of component functions between two set-valued functors on the
    same source category."""

    source: SetFunctor
    target: SetFunctor
    components: dict


def identity_functor(c):
    return CatFunctor(
        source=c,
        target=c,
        obj_map={a: a for a in c.objects},
        mor_map={m.name: m.name for m in c.morphisms},
    )


def check_functor(f):
    """Verify the functor laws: endpoints respected, identities preserved,
    composition preserved.  Unmapped objects or morphisms are structural."""
    src, dst = f.source, f.target
    for a in src.objects:
        if a not in f.obj_map:
            raise StructuralError(f"functor does not map object {a!r}")
        if f.obj_map[a] not in set(dst.objects):
            raise StructuralError(f"object {a!r} maps to unknown object {f.obj_map[a]!r}")
    for m in src.morphisms:
        if m.name not in f.mor_map:
            raise StructuralError(f"functor does not map morphism {m.name!r}")
        dst.mor(f.mor_map[m.name])

    violations = []
    for m in src.morphisms:
        image = dst.mor(f.mor_map[m.name])
        if image.dom != f.obj_map[m.dom] or image.cod != f.obj_map[m.cod]:
            violations.append(Violation("functor-endpoints", (m.name,)))
    for a in src.objects:
        i = src.identities.get(a)
        if i is None:
            continue
        if f.mor_map[i] != dst.identities.get(f.obj_map[a]):
            violations.append(Violation("functor-identity", (a,)))
    for (g, h), k in src.comp.items():
        expected = dst.comp.get((f.mor_map[g], f.mor_map[h]))
        if expected != f.mor_map[k]:
            violations.append(Violation("functor-composition", (g, h)))
    return report(violations)


def _functor_bound(c, d):
    forced = set(c.identities.values())
    free = sum(1 for m in c.morphisms if m.name not in forced)
    return len(d.objects) ** len(c.objects) * len(d.morphisms) ** free


def enumerate_functors(c, d, limit=DEFAULT_LIMIT):
    """All functors ``c -> d``, in lexicographic order over declaration order.

    Identity images are forced; other morphisms branch over every candidate
    with matching endpoints, pruned against the composition tables as soon as
    a constraint is decidable.  Refuses up front when the raw bound
    ``|Ob d|^|Ob c| * |Mor d|^(free morphisms of c)`` exceeds ``limit``.
    """
    bound = _functor_bound(c, d)
    if bound > limit:
        raise LimitExceededError(
            f"functor search space {bound} exceeds limit {limit}",
            bound=bound,
            limit=limit,
        )

    comp_items = list(c.comp.items())
    results = []

    def assign_morphisms(obj_map):
        mor_map = {}
        names = [m.name for m in c.morphisms]

        def consistent(name):
            # check every composition constraint decided by this assignment
            for (g, h), k in comp_items:
                if name not in (g, h, k):
                    continue
                if g in mor_map and h in mor_map and k in mor_map:
                    if d.comp.get((mor_map[g], mor_map[h])) != mor_map[k]:
                        return False
            return True

        def extend(i):
            if i == len(names):
                results.append(
                    CatFunctor(source=c, target=d, obj_map=dict(obj_map), mor_map=dict(mor_map))
                )
                return
            name = names[i]
            m = c.mor(name)
            want_dom, want_cod = obj_map[m.dom], obj_map[m.cod]
            forced_as = [
                a for a, ident in c.identities.items() if ident == name
            ]
            if forced_as:
                candidates = [d.identities.get(obj_map[forced_as[0]])]
                if candidates[0] is None:
                    return
            else:
                candidates = [
                    t.name for t in d.morphisms if t.dom == want_dom and t.cod == want_cod
                ]
            for cand in candidates:
                tm = d.mor(cand)
                if tm.dom != want_dom or tm.cod != want_cod:
                    continue
                mor_map[name] = cand
                if consistent(name):
                    extend(i + 1)
                del mor_map[name]

        extend(0)

    def assign_objects(i, obj_map):
        if i == len(c.objects):
            assign_morphisms(obj_map)
            return
        a = c.objects[i]
        for b in d.objects:
            obj_map[a] = b
            assign_objects(i + 1, obj_map)
            del obj_map[a]

    assign_objects(0, {})
    return results


def check_set_functor(f):
    """Verify a set-valued functor: total function tables, identities to
    identity functions, composites to composed functions."""
    src = f.source
    for a in src.objects:
        if a not in f.at_obj:
            raise StructuralError(f"set functor has no value at object {a!r}")
    for m in src.morphisms:
        fn = f.at_mor.get(m.name)
        if fn is None:
            raise StructuralError(f"set functor has no function at morphism {m.name!r}")
        dom, cod = set(f.at_obj[m.dom]), set(f.at_obj[m.cod])
        for x in f.at_obj[m.dom]:
            if x not in fn:
                raise StructuralError(f"function at {m.name!r} is undefined on {x!r}")
            if fn[x] not in cod:
                raise StructuralError(
                    f"function at {m.name!r} sends {x!r} outside the target set"
                )
        if set(fn) != set(f.at_obj[m.dom]):
            raise StructuralError(f"function at {m.name!r} is defined off its domain")

    violations = []
    for a in src.objects:
        i = src.identities.get(a)
        if i is None:
            continue
        if any(f.at_mor[i][x] != x for x in f.at_obj[a]):
            violations.append(Violation("set-functor-identity", (a,)))
    for (g, h), k in src.comp.items():
        gm = src.mor(g)
        for x in f.at_obj[gm.dom]:
            if f.at_mor[k][x] != f.at_mor[h][f.at_mor[g][x]]:
                violations.append(Violation("set-functor-composition", (g, h, x)))
    return report(violations)


def hom_functor(c, obj):
    """The covariant hom-functor of ``obj``: at each object the morphisms out
    of ``obj``, with morphisms acting by post-composition."""
    if not c.has_object(obj):
        raise StructuralError(f"unknown object {obj!r}")
    at_obj = {d: c.hom(obj, d) for d in c.objects}
    at_mor = {}
    for m in c.morphisms:
        at_mor[m.name] = {h: c.compose(h, m.name) for h in at_obj[m.dom]}
    return SetFunctor(source=c, at_obj=at_obj, at_mor=at_mor)


def check_nat_transf(t):
    """Verify the naturality square of every source-category morphism."""
    f, g = t.source, t.target
    if f.source is not g.source and f.source != g.source:
        raise StructuralError("natural transformation between functors on different categories")
    src = f.source
    for a in src.objects:
        comp = t.components.get(a)
        if comp is None:
            raise StructuralError(f"no component at object {a!r}")
        target = set(g.at_obj[a])
        for x in f.at_obj[a]:
            if x not in comp:
                raise StructuralError(f"component at {a!r} is undefined on {x!r}")
            if comp[x] not in target:
                raise StructuralError(f"component at {a!r} sends {x!r} outside the target set")

    violations = []
    for m in src.morphisms:
        for x in f.at_obj[m.dom]:
            if t.components[m.cod][f.at_mor[m.name][x]] != g.at_mor[m.name][t.components[m.dom][x]]:
                violations.append(Violation("naturality", (m.name, x)))
    return report(violations)


def _nat_bound(f, g):
    bound = 1
    for a in f.source.objects:
        bound *= len(g.at_obj[a]) ** len(f.at_obj[a])
    return bound


def enumerate_nat_transfs(f, g, limit=DEFAULT_LIMIT):
    """All natural transformations ``f => g``, in lexicographic order over the
    declared object / element orderings.

    Complete backtracking over one image choice per element, failing fast on
    the first naturality square a partial family already violates.  Refuses
    when the raw component space exceeds ``limit``.
    """
    if f.source is not g.source and f.source != g.source:
        raise StructuralError("functors live on different categories")
    src = f.source
    bound = _nat_bound(f, g)
    if bound > limit:
        raise LimitExceededError(
            f"component search space {bound} exceeds limit {limit}",
            bound=bound,
            limit=limit,
        )

    slots = [(a, x) for a in src.objects for x in f.at_obj[a]]
    by_dom = {a: [] for a in src.objects}
    for m in src.morphisms:
        by_dom[m.dom].append(m)
    by_cod = {a: [] for a in src.objects}
    for m in src.morphisms:
        by_cod[m.cod].append(m)

    components = {a: {} for a in src.objects}
    results = []

    def consistent(a, x):
        # squares whose bottom-left corner is the new value
        for m in by_dom[a]:
            fx = f.at_mor[m.name][x]
            known = components[m.cod].get(fx)
            if known is not None and known != g.at_mor[m.name][components[a][x]]:
                return False
        # squares that land on the new value from an earlier slot
        for m in by_cod[a]:
            for x0, y0 in components[m.dom].items():
                if f.at_mor[m.name][x0] == x and components[a][x] != g.at_mor[m.name][y0]:
                    return False
        return True

    def extend(i):
        if i == len(slots):
            results.append(
                NatTransf(
                    source=f,
                    target=g,
                    components={a: dict(comp) for a, comp in components.items()},
                )
            )
            return
        a, x = slots[i]
        for y in g.at_obj[a]:
            components[a][x] = y
            if consistent(a, x):
                extend(i + 1)
            del components[a][x]

    extend(0)
    return results


def yoneda_check(c, obj, f, limit=DEFAULT_LIMIT):
    """Check that transformations out of ``hom(obj, -)`` into ``f`` correspond
    one-to-one with the elements of ``f`` at ``obj``.

    The correspondence evaluates each transformation's component at ``obj``
    on the identity morphism.  The report's ``info`` carries the counts and
    the witness list; violations are ``yoneda-count``, ``yoneda-injective``,
    and ``yoneda-surjective``.
    """
    h = hom_functor(c, obj)
    nats = enumerate_nat_transfs(h, f, limit=limit)
    ident = c.identity(obj)
    if ident is None:
        raise StructuralError(f"object {obj!r} has no identity morphism")
    elements = tuple(f.at_obj[obj])
    evaluated = [t.components[obj][ident] for t in nats]

    violations = []
    if len(nats) != len(elements):
        violations.append(Violation("yoneda-count", (len(nats), len(elements))))
    seen = {}
    for i, val in enumerate(evaluated):
        if val in seen:
            violations.append(Violation("yoneda-injective", (seen[val], i)))
        else:
            seen[val] = i
    for x in elements:
        if x not in seen:
            violations.append(Violation("yoneda-surjective", (x,)))
    return report(
        violations,
        info={
            "nat_count": len(nats),
            "element_count": len(elements),
            "bijection": tuple(evaluated),
        },
    )
