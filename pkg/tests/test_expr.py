import pytest

from surfskein.expr import (
    ArrowedMulticurve,
    Component,
    SkeinVector,
    complexity,
    degree,
    detect_instability,
    dual_graph,
    grading,
    multicurve_compatible,
    vector_grading,
)
from surfskein.laurent import RationalFn, brace
from surfskein.surface import CurveCatalog, Homology2Class, SurfaceSpec


S2 = SurfaceSpec(genus=2)
S3 = SurfaceSpec(genus=3)
C2 = CurveCatalog(S2)
C3 = CurveCatalog(S3)


def mc(*comps, sausage=None):
    return ArrowedMulticurve(comps, sausage)


def test_degree_nonsep_plus_sep():
    m = mc(Component(C2.alpha(1)), Component(C2.sausage_boundary(1)))
    assert degree(m) == 3


def test_degree_ignores_trivial_and_arrows():
    m = mc(Component(C2.trivial(), 7))
    assert degree(m) == 0
    m2 = mc(Component(C2.alpha(1), 5))
    assert degree(m2) == 1


def test_complexity_examples():
    two_nonsep = mc(Component(C2.alpha(1)), Component(C2.alpha(2)))
    assert complexity(two_nonsep) == (2, 2)
    one_sep = mc(Component(C2.sausage_boundary(1)))
    assert complexity(one_sep) == (2, 1)
    assert complexity(ArrowedMulticurve.empty()) == (0, 0)


def test_complexity_lexicographic_order():
    assert complexity(mc(Component(C2.sausage_boundary(1)))) < \
        complexity(mc(Component(C2.alpha(1)), Component(C2.alpha(2))))


def test_grading_examples():
    m = mc(Component(C2.alpha(1), 3))
    h, par = grading(m, 2)
    assert h.bits == (1, 0, 0, 0) and par == 1
    m2 = mc(Component(C2.trivial(), 2))
    h2, par2 = grading(m2, 2)
    assert h2.is_zero() and par2 == 0
    # two copies of the same class cancel mod 2
    m3 = mc(Component(C2.alpha(1), 1), Component(C2.alpha(1), 0))
    h3, par3 = grading(m3, 2)
    assert h3.is_zero() and par3 == 1


def test_degree_and_complexity_invariant_under_trivial_components():
    base = mc(Component(C2.alpha(1)), Component(C2.sausage_boundary(1)))
    dressed = base.add(Component(C2.trivial(), 4)).add(Component(C2.trivial(), 0))
    assert degree(base) == degree(dressed)
    assert complexity(base) == complexity(dressed)


# -- skein vectors -------------------------------------------------------------

def test_vector_arithmetic_and_zero_pruning():
    m = mc(Component(C2.trivial(), 1))
    v = SkeinVector.monomial(m, RationalFn(brace(2)))
    w = v - v
    assert w.is_zero()
    v2 = v + SkeinVector.monomial(m, RationalFn(brace(1)))
    assert v2.coefficient(m) == RationalFn(brace(2) + brace(1))


def test_vector_grading_homogeneous():
    m1 = mc(Component(C2.alpha(1), 1))
    m2 = mc(Component(C2.f_curve(Homology2Class([1, 0, 0, 0])), 3))
    v = SkeinVector.monomial(m1) + SkeinVector.monomial(m2)
    h, par = vector_grading(v, 2)
    assert h.bits == (1, 0, 0, 0) and par == 1


def test_vector_grading_mixed_raises():
    m1 = mc(Component(C2.alpha(1), 1))
    m2 = mc(Component(C2.alpha(1), 2))
    with pytest.raises(ValueError):
        vector_grading(SkeinVector.monomial(m1) + SkeinVector.monomial(m2), 2)


# -- dual graph -----------------------------------------------------------------

def test_dual_graph_no_separating():
    m = mc(Component(C2.alpha(1)))
    graph = dual_graph(m, S2)
    assert graph.vertices == ((2, 1),)
    assert graph.edges == ()


def test_dual_graph_one_separating_genus2():
    m = mc(Component(C2.sausage_boundary(1)))
    graph = dual_graph(m, S2)
    assert graph.vertices == ((1, 0), (1, 0))
    assert graph.edges == (1,)
    assert graph.is_tree()


def test_dual_graph_places_nonsep_curves():
    m = mc(Component(C3.sausage_boundary(1)), Component(C3.alpha(3)))
    graph = dual_graph(m, S3)
    assert graph.vertices == ((1, 0), (2, 1))


def test_dual_graph_rejects_crossing_component():
    # gamma_1 runs through handles 1 and 2; a separating curve at position 1
    # would have to cross it
    m = mc(Component(C3.sausage_boundary(1)), Component(C3.gamma(1)))
    with pytest.raises(ValueError):
        dual_graph(m, S3)


# -- instability hints ---------------------------------------------------------

def test_hint_two_nonsep_in_a_vertex():
    m = mc(Component(C2.alpha(1)), Component(C2.alpha(2)))
    hint = detect_instability(m, S2)
    assert hint is not None and hint.rule == "two_holed_torus"


def test_hint_three_nonsep_in_a_vertex():
    m = mc(Component(C2.alpha(1), 0), Component(C2.alpha(1), 1),
           Component(C2.alpha(2), 0))
    hint = detect_instability(m, S2)
    assert hint is not None and hint.rule == "torus"


def test_hint_valency2():
    m = mc(Component(C3.sausage_boundary(1)), Component(C3.sausage_boundary(2)),
           Component(C3.alpha(2)))
    hint = detect_instability(m, S3)
    assert hint is not None and hint.rule == "valency2" and hint.vertex == 1


def test_basis_element_is_stable():
    m = mc(Component(C2.alpha(1), 1))
    assert detect_instability(m, S2) is None
    assert detect_instability(mc(Component(C2.trivial(), 3)), S2) is None


# -- compatibility -------------------------------------------------------------

def test_compatible_disjoint_handles():
    assert multicurve_compatible([C2.alpha(1), C2.alpha(2)], 2)


def test_incompatible_dual_pair():
    assert not multicurve_compatible([C2.alpha(1), C2.beta(1)], 2)


def test_incompatible_crossing_f_words():
    a1 = C2.f_curve(Homology2Class([1, 0, 0, 0]))
    b1_f = C2.f_curve(Homology2Class([0, 1, 0, 0]))
    assert not multicurve_compatible([a1, b1_f], 2)


def test_compatible_parallel_copies():
    assert multicurve_compatible([C2.alpha(1), C2.alpha(1)], 2)
