"""Forward-chaining closure of adjunctibility facts.

Facts are user-supplied axioms about named k-morphisms: declared adjunctions
(left-hand morphism is the left adjoint of the right-hand one) and mixed
adjunctibility class memberships. Saturation closes the base under the
corollaries relating parity classes, n-adjunctibility, ambidexterity, and
adjoints, storing class facts canonically (even^n / odd^n) so that the 2^n
class facts implied by n-adjunctibility never get enumerated.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

from .dexterity import DexterityFunction, canonical, build, l_count
from .errors import DomainError, ParseError


@dataclass(frozen=True)
class ClassFact:
    morphism: str
    function: str  # canonical dexterity string (even^n or odd^n)

    @property
    def n(self) -> int:
        return len(self.function)

    @property
    def parity(self) -> str:
        return "odd" if l_count(DexterityFunction.from_string(self.function)) % 2 else "even"


@dataclass(frozen=True)
class FactBase:
    """Immutable fact base; saturate() returns the closure as a new base."""

    morphisms: frozenset[tuple[str, int]] = frozenset()  # (name, level)
    adjunctions: frozenset[tuple[str, str]] = frozenset()  # (left, right): left -| right
    classes: frozenset[ClassFact] = frozenset()
    n_adjunctible: frozenset[tuple[str, int]] = frozenset()
    ambidextrous: frozenset[tuple[str, int]] = frozenset()

    def morphism_names(self) -> frozenset[str]:
        return frozenset(name for name, _ in self.morphisms)

    def check_well_formed(self) -> None:
        names = self.morphism_names()
        for left, right in self.adjunctions:
            if left not in names or right not in names:
                raise DomainError(f"adjunction ({left}, {right}) references undeclared morphism")
        for fact in self.classes:
            if fact.morphism not in names:
                raise DomainError(f"class fact references undeclared morphism {fact.morphism}")

    def has_class(self, morphism: str, a: DexterityFunction) -> bool:
        """Query a^n-adjunctibility for an arbitrary function, expanding lazily."""
        if (morphism, a.n) in self.n_adjunctible:
            return True
        return ClassFact(morphism, str(canonical(a))) in self.classes


def _canonical_fact(morphism: str, a: DexterityFunction) -> ClassFact:
    return ClassFact(morphism, str(canonical(a)))


def _opposite(fact: ClassFact) -> str:
    """Canonical representative of the nonparity class at the same n."""
    other = "odd" if fact.parity == "even" else "even"
    return str(build(other, fact.n))


def saturate(base: FactBase) -> FactBase:
    """Least fixed point of the adjunctibility inference rules.

    R1  class facts are stored canonically (parity pairs collapse).
    R2  a^n-adjunctible (n>=2) gives ambidextrous (n-1)-adjunctible; both
        parity classes at n give n-adjunctible.
    R3  (n>=2) an adjoint of an a^n-adjunctible morphism is b^n-adjunctible
        for the nonparity class.
    R4  g -| f with f, g both a^n-adjunctible: a member with a(1)=L makes g
        n-adjunctible, a member with a(1)=R makes f n-adjunctible.
    R5  (n>=2) adjoints of n-adjunctible morphisms are n-adjunctible.
    R6  n-adjunctible iff both even^n- and odd^n-adjunctible.
    Definitionally, g -| f gives g a right adjoint (even^1) and f a left
    adjoint (odd^1), and ambidextrous m-adjunctible implies m-adjunctible.
    """
    base.check_well_formed()
    classes = {ClassFact(f.morphism, str(canonical(DexterityFunction.from_string(f.function))))
               for f in base.classes}
    n_adj = set(base.n_adjunctible)
    ambi = set(base.ambidextrous)
    adjacent: dict[str, set[str]] = {}
    for left, right in base.adjunctions:
        adjacent.setdefault(left, set()).add(right)
        adjacent.setdefault(right, set()).add(left)
        # definitional single adjunction facts
        classes.add(ClassFact(right, "L"))  # odd^1: has a left adjoint
        classes.add(ClassFact(left, "R"))  # even^1: has a right adjoint

    changed = True
    while changed:
        changed = False
        before = (len(classes), len(n_adj), len(ambi))

        for m, n in list(n_adj):
            classes.add(ClassFact(m, str(build("even", n))))
            classes.add(ClassFact(m, str(build("odd", n))))
        for m, n in list(ambi):
            n_adj.add((m, n))

        by_morphism_level: dict[tuple[str, int], set[str]] = {}
        for fact in classes:
            by_morphism_level.setdefault((fact.morphism, fact.n), set()).add(fact.parity)

        for (m, n), parities in by_morphism_level.items():
            if {"even", "odd"} <= parities:
                n_adj.add((m, n))  # R6 / both classes
            if n >= 2:
                ambi.add((m, n - 1))  # R2 part (1)

        # R3 / R5 across adjunctions
        for fact in list(classes):
            if fact.n >= 2:
                for g in adjacent.get(fact.morphism, ()):
                    classes.add(ClassFact(g, _opposite(fact)))
        for m, n in list(n_adj):
            if n >= 2:
                for g in adjacent.get(m, ()):
                    n_adj.add((g, n))

        # R4: oriented g -| f sharing a class
        for left, right in base.adjunctions:
            shared = {
                (fact.n, fact.parity)
                for fact in classes if fact.morphism == left
            } & {
                (fact.n, fact.parity)
                for fact in classes if fact.morphism == right
            }
            for n, parity in shared:
                # a(1) = L exists in the class unless n = 1 and the class is even
                if n >= 2 or parity == "odd":
                    n_adj.add((left, n))
                # a(1) = R exists unless n = 1 and the class is odd
                if n >= 2 or parity == "even":
                    n_adj.add((right, n))

        changed = (len(classes), len(n_adj), len(ambi)) != before

    return replace(
        base,
        classes=frozenset(classes),
        n_adjunctible=frozenset(n_adj),
        ambidextrous=frozenset(ambi),
    )


def factbase_from_json(doc: dict) -> FactBase:
    """Parse {morphisms:[{name,level}], adjunctions:[{left,right}], classes:[{morphism,function}]}."""
    try:
        morphisms = frozenset((m["name"], int(m["level"])) for m in doc.get("morphisms", []))
        adjunctions = frozenset((a["left"], a["right"]) for a in doc.get("adjunctions", []))
        # class facts are stored by their canonical parity representative
        classes = frozenset(
            _canonical_fact(c["morphism"], DexterityFunction.from_string(c["function"]))
            for c in doc.get("classes", [])
        )
        n_adj = frozenset((x["morphism"], int(x["n"])) for x in doc.get("n_adjunctible", []))
        ambi = frozenset((x["morphism"], int(x["n"])) for x in doc.get("ambidextrous", []))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed fact base document: {exc}") from exc
    return FactBase(
        morphisms=morphisms,
        adjunctions=adjunctions,
        classes=classes,
        n_adjunctible=n_adj,
        ambidextrous=ambi,
    )


def factbase_to_json(base: FactBase) -> dict:
    return {
        "morphisms": [
            {"name": name, "level": level}
            for name, level in sorted(base.morphisms)
        ],
        "adjunctions": [
            {"left": left, "right": right}
            for left, right in sorted(base.adjunctions)
        ],
        "classes": [
            {"morphism": f.morphism, "function": f.function}
            for f in sorted(base.classes, key=lambda f: (f.morphism, f.n, f.function))
        ],
        "n_adjunctible": [
            {"morphism": m, "n": n} for m, n in sorted(base.n_adjunctible)
        ],
        "ambidextrous": [
            {"morphism": m, "n": n} for m, n in sorted(base.ambidextrous)
        ],
    }
