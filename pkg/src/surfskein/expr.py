"""Arrowed multicurves, formal skein vectors over Q(A), degree/complexity
measures, the H_1(Sigma x S^1, Z/2) grading, and dual graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from .laurent import LaurentPoly, RationalFn
from .surface import (
    CurveCatalogEntry,
    Homology2Class,
    SurfaceSpec,
    intersection_number,
)


@dataclass(frozen=True)
class Component:
    """One curve of a multicurve with its algebraic arrow count.

    Arrow sign convention: positive arrows point in the positive circle
    direction; trivial curves count arrows along the boundary orientation of
    the disk they bound, non-separating curves along their catalog
    orientation."""

    curve: CurveCatalogEntry
    arrows: int = 0

    def sort_key(self):
        return (self.curve.kind, str(self.curve.param), self.arrows)

    def __str__(self) -> str:
        return f"{self.curve}:{self.arrows}"


# optional sausage decoration: (k, a, b, m, side, n1, n2); side in {"l","r",""}
SausageData = Tuple[int, int, int, int, str, int, int]


class ArrowedMulticurve:
    """Multiset of catalog components, optionally decorated as a sausage
    D-family diagram. Equality is structural: catalog identity plus arrow
    counts; stacking order of disjoint components is immaterial."""

    __slots__ = ("components", "sausage_data")

    def __init__(self, components: Iterable[Component] = (),
                 sausage_data: Optional[SausageData] = None):
        comps = tuple(sorted(components, key=Component.sort_key))
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "sausage_data", sausage_data)

    @classmethod
    def empty(cls) -> "ArrowedMulticurve":
        return cls(())

    def is_empty(self) -> bool:
        return not self.components and self.sausage_data is None

    def with_components(self, comps: Iterable[Component]) -> "ArrowedMulticurve":
        return ArrowedMulticurve(comps, self.sausage_data)

    def add(self, comp: Component) -> "ArrowedMulticurve":
        return ArrowedMulticurve(self.components + (comp,), self.sausage_data)

    def remove_at(self, index: int) -> "ArrowedMulticurve":
        comps = self.components[:index] + self.components[index + 1:]
        return ArrowedMulticurve(comps, self.sausage_data)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ArrowedMulticurve)
                and self.components == other.components
                and self.sausage_data == other.sausage_data)

    def __hash__(self) -> int:
        return hash((self.components, self.sausage_data))

    def __str__(self) -> str:
        if self.is_empty():
            return "(empty)"
        parts = [str(c) for c in self.components]
        if self.sausage_data is not None:
            k, a, b, m, side, n1, n2 = self.sausage_data
            parts.append(f"D^{k}[{side or '.'}](a={a},b={b},m={m},n1={n1},n2={n2})")
        return "{" + ", ".join(parts) + "}"

    def __repr__(self) -> str:
        return f"ArrowedMulticurve({self})"

    # -- structure queries ---------------------------------------------------

    def trivial_components(self) -> List[Tuple[int, Component]]:
        return [(i, c) for i, c in enumerate(self.components)
                if c.curve.kind == "trivial"]

    def nonsep_components(self) -> List[Tuple[int, Component]]:
        return [(i, c) for i, c in enumerate(self.components)
                if c.curve.kind != "trivial" and not c.curve.separating]

    def separating_components(self) -> List[Tuple[int, Component]]:
        return [(i, c) for i, c in enumerate(self.components)
                if c.curve.separating]

    def to_json(self):
        data = {"components": [{"curve": {"kind": c.curve.kind,
                                          "param": c.curve.param},
                                "arrows": c.arrows}
                               for c in self.components]}
        if self.sausage_data is not None:
            k, a, b, m, side, n1, n2 = self.sausage_data
            data["sausage_data"] = {"k": k, "a": a, "b": b, "m": m,
                                    "side": side, "n1": n1, "n2": n2}
        return data


def degree(m: ArrowedMulticurve) -> int:
    """deg = (# non-separating) + 2 * (# non-trivial separating); trivial
    components and arrows never count."""
    n = len(m.nonsep_components())
    s = len(m.separating_components())
    d = n + 2 * s
    if m.sausage_data is not None:
        # a sausage diagram carries its travelling separating pair
        d += 2
    return d


def complexity(m: ArrowedMulticurve) -> Tuple[int, int]:
    n = len(m.nonsep_components())
    s = len(m.separating_components())
    if m.sausage_data is not None:
        s += 1
    return (n + 2 * s, n + s)


def grading(m: ArrowedMulticurve, genus: int) -> Tuple[Homology2Class, int]:
    """(sum of component classes in H_1(Sigma, Z/2), arrow parity)."""
    h = Homology2Class.zero(genus)
    arrows = 0
    for c in m.components:
        if c.curve.homology is not None:
            h = h + c.curve.homology
        arrows += c.arrows
    if m.sausage_data is not None:
        _, a, b, _, _, _, _ = m.sausage_data
        arrows += a + b
    return (h, arrows % 2)


def vector_grading(vec: "SkeinVector", genus: int):
    """The common grading of a homogeneous vector, or None for 0; raises on
    mixed gradings."""
    gradings = {grading(m, genus) for m in vec.terms}
    if not gradings:
        return None
    if len(gradings) > 1:
        raise ValueError(f"inhomogeneous skein vector: gradings {gradings}")
    return gradings.pop()


class SkeinVector:
    """Finite formal Q(A)-linear combination of arrowed multicurves."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[ArrowedMulticurve, RationalFn]] = None):
        clean: Dict[ArrowedMulticurve, RationalFn] = {}
        if terms:
            for mono, coeff in terms.items():
                if not coeff.is_zero():
                    clean[mono] = coeff
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls) -> "SkeinVector":
        return cls({})

    @classmethod
    def monomial(cls, m: ArrowedMulticurve, coeff: Optional[RationalFn] = None
                 ) -> "SkeinVector":
        return cls({m: coeff if coeff is not None else RationalFn.one()})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "SkeinVector") -> "SkeinVector":
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            s = out.get(mono, RationalFn.zero()) + coeff
            if s.is_zero():
                out.pop(mono, None)
            else:
                out[mono] = s
        return SkeinVector(out)

    def __sub__(self, other: "SkeinVector") -> "SkeinVector":
        return self + other.scale(RationalFn.monomial(0, -1))

    def scale(self, coeff: RationalFn) -> "SkeinVector":
        if coeff.is_zero():
            return SkeinVector.zero()
        return SkeinVector({m: c * coeff for m, c in self.terms.items()})

    def scale_poly(self, p: LaurentPoly) -> "SkeinVector":
        return self.scale(RationalFn(p))

    def __eq__(self, other) -> bool:
        return isinstance(other, SkeinVector) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def coefficient(self, m: ArrowedMulticurve) -> RationalFn:
        return self.terms.get(m, RationalFn.zero())

    def map_monomials(self, fn) -> "SkeinVector":
        """Replace each monomial by fn(monomial) (a SkeinVector), keeping
        coefficients; the workhorse of linear rule application."""
        out = SkeinVector.zero()
        for mono, coeff in self.terms.items():
            out = out + fn(mono).scale(coeff)
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        keyed = sorted(self.terms.items(), key=lambda kv: str(kv[0]))
        return " + ".join(f"({c})*{m}" for m, c in keyed)

    def __repr__(self) -> str:
        return f"SkeinVector({self})"


@dataclass(frozen=True)
class DualGraph:
    """Tree dual to the separating components of a multicurve.

    vertices[i] = (genus, nonsep_count) for the i-th complementary piece in
    sausage order; edges[j] joins pieces j and j+1 and is labelled by the
    separating position."""

    vertices: Tuple[Tuple[int, int], ...]
    edges: Tuple[int, ...]

    def is_tree(self) -> bool:
        return len(self.edges) == len(self.vertices) - 1

    def is_linear(self) -> bool:
        return True  # sausage positions always produce a path

    def valency(self, i: int) -> int:
        deg = 0
        if i > 0:
            deg += 1
        if i < len(self.vertices) - 1:
            deg += 1
        return deg


def _handle_range(entry: CurveCatalogEntry, genus: int) -> Tuple[int, int]:
    """Handles a non-separating catalog curve runs through."""
    if entry.kind in ("alpha", "beta"):
        i = int(entry.param)
        return (i, i)
    if entry.kind == "gamma":
        i = int(entry.param)
        return (i, i + 1)
    if entry.kind in ("f_word", "auxiliary"):
        support = [i for i in range(1, genus + 1)
                   if entry.homology.eps(i) or entry.homology.delta(i)]
        if entry.kind == "auxiliary":
            # auxiliary words span handles i..i+1 regardless of parity support
            import re as _re
            i = int(_re.match(r"[A-D]'?(\d+)", str(entry.param)).group(1))
            return (i, i + 1)
        if not support:
            raise ValueError(f"non-separating entry {entry} with zero class")
        return (min(support), max(support))
    raise ValueError(f"no handle range for {entry}")


def dual_graph(m: ArrowedMulticurve, spec: SurfaceSpec) -> DualGraph:
    """Dual tree of a catalog multicurve: one vertex per complementary piece
    of the distinct separating positions, in left-to-right sausage order."""
    g = spec.genus
    positions = sorted({c.curve.param for _, c in m.separating_components()})
    for p in positions:
        if not (1 <= int(p) <= g - 1):
            raise ValueError(f"separating component at non-catalog position {p}")
    cuts = [0] + [int(p) for p in positions] + [g]
    genera = [cuts[i + 1] - cuts[i] for i in range(len(cuts) - 1)]
    counts = [0] * len(genera)
    for _, c in m.nonsep_components():
        lo, hi = _handle_range(c.curve, g)
        placed = False
        for v in range(len(genera)):
            if cuts[v] < lo and hi <= cuts[v + 1]:
                counts[v] += 1
                placed = True
                break
        if not placed:
            raise ValueError(
                f"component {c.curve} crosses a separating position of {m}")
    return DualGraph(tuple(zip(genera, counts)), tuple(int(p) for p in positions))


@dataclass(frozen=True)
class RuleHint:
    """Which reduction rule detect_instability points at."""

    rule: str  # 'torus' | 'two_holed_torus' | 'valency2' | 'sphere'
    vertex: int

    def __str__(self) -> str:
        return f"{self.rule}@vertex{self.vertex}"


def detect_instability(m: ArrowedMulticurve, spec: SurfaceSpec
                       ) -> Optional[RuleHint]:
    """Screen a multicurve against the stability obstructions: a vertex with
    two or more non-separating curves calls for the torus or two-holed-torus
    rule; a valency-2 vertex holding one non-separating curve calls for the
    valency-2 rule; a non-linear dual graph would call for the sphere rule."""
    graph = dual_graph(m, spec)
    for i, (genus_v, count) in enumerate(graph.vertices):
        if count >= 3:
            return RuleHint("torus", i)
        if count == 2:
            return RuleHint("two_holed_torus", i)
    for i, (genus_v, count) in enumerate(graph.vertices):
        if graph.valency(i) == 2 and count >= 1:
            return RuleHint("valency2", i)
    if not graph.is_linear():
        return RuleHint("sphere", 0)
    return None


def multicurve_compatible(entries: List[CurveCatalogEntry], genus: int) -> bool:
    """Whether the listed catalog curves admit a disjoint realization.

    Non-separating pairs must have vanishing mod-2 intersection pairing (an
    odd pairing forces a crossing); Lickorish-vs-canonical pairs are checked
    against the tabulated intersection numbers when available."""
    ns = [e for e in entries if e.kind != "trivial" and not e.separating]
    for i in range(len(ns)):
        for j in range(i + 1, len(ns)):
            x, y = ns[i], ns[j]
            if x.homology.pairing(y.homology):
                return False
            try:
                if intersection_number(x, y, genus) > 0:
                    return False
            except ValueError:
                pass
    for e in entries:
        if e.separating:
            for x in ns:
                lo, hi = _handle_range(x, genus)
                if lo <= int(e.param) < hi:
                    return False
    return True
