"""The small stock of example categories used throughout the tests and docs:
the one-object/one-morphism category, the walking arrow, the square-symmetry
group, the windowpane monoid, and the divisibility poset of 12.
"""

from .actions import builtin_d8, builtin_windowpane, monoid_to_category
from .category import FinCategory, Mor


def terminal_category(obj="star"):
    """One object, one identity morphism."""
    ident = f"id_{obj}"
    return FinCategory((obj,), [Mor(ident, obj, obj)], {obj: ident}, {(ident, ident): ident})


def arrow_category():
    """Two objects with a single morphism ``f : a -> b`` besides identities."""
    morphisms = [Mor("id_a", "a", "a"), Mor("id_b", "b", "b"), Mor("f", "a", "b")]
    comp = {
        ("id_a", "id_a"): "id_a",
        ("id_b", "id_b"): "id_b",
        ("id_a", "f"): "f",
        ("f", "id_b"): "f",
    }
    return FinCategory(("a", "b"), morphisms, {"a": "id_a", "b": "id_b"}, comp)


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def divisor_poset_category(n=12):
    """Objects are the divisors of ``n``; there is one morphism ``a -> b``
    exactly when a divides b."""
    divs = _divisors(n)
    objects = tuple(str(d) for d in divs)
    morphisms = []
    name = {}
    for a in divs:
        ident = f"id_{a}"
        name[(a, a)] = ident
        morphisms.append(Mor(ident, str(a), str(a)))
    for a in divs:
        for b in divs:
            if a != b and b % a == 0:
                name[(a, b)] = f"d{a}_{b}"
                morphisms.append(Mor(f"d{a}_{b}", str(a), str(b)))
    comp = {}
    for (a, b), g in name.items():
        for (b2, c), h in name.items():
            if b == b2:
                comp[(g, h)] = name[(a, c)]
    identities = {str(a): name[(a, a)] for a in divs}
    return FinCategory(objects, morphisms, identities, comp)


def d8_category(obj="star"):
    """The square-symmetry group as a one-object category."""
    monoid, _ = builtin_d8()
    return monoid_to_category(monoid, obj=obj)


def windowpane_category(obj="star"):
    """The windowpane crush monoid as a one-object category."""
    monoid, _, _ = builtin_windowpane()
    return monoid_to_category(monoid, obj=obj)


def corpus_categories():
    """The named example categories, keyed for iteration in tests."""
    return {
        "terminal": terminal_category(),
        "arrow": arrow_category(),
        "d8": d8_category(),
        "windowpane": windowpane_category(),
        "divisors12": divisor_poset_category(12),
    }
