from itertools import combinations

import pytest

from coxlab import model
from coxlab.complexes import build_torus_triangulation, dual_graph, hexagon_links, psi_image
from coxlab.fixtures import load_json
from coxlab.presentation import (EXPECTED_MISSING_ROLES, ax_fixture,
                                 classify_missing, coverage_counts,
                                 cycle_relator, generate, hexagon_graph,
                                 nonrel_fixture, presentation_from_json)
from coxlab.words import canonical_form


def brute_force_pair_split(x0):
    # Count disjoint/adjacent pairs going through the plane boundary lists,
    # independently of the line -> planes map the generator uses.
    at_plane = {}
    for plane in x0.planes:
        for line in plane.lines:
            at_plane.setdefault(line, set()).add(plane.id)
    ids = sorted(l.id for l in x0.lines)
    adjacent = sum(1 for i, j in combinations(ids, 2) if at_plane[i] & at_plane[j])
    return len(ids) * (len(ids) - 1) // 2 - adjacent, adjacent


def test_plain_counts_against_brute_force(paper):
    plain = generate(paper.graph, paper.links, "plain")
    disjoint, adjacent = brute_force_pair_split(paper.x0)
    assert (disjoint, adjacent) == (297, 54)
    counts = plain.counts()
    assert counts["squares"] == 27
    assert counts["commutations"] == disjoint
    assert counts["braids"] == adjacent
    assert counts["forks"] == counts["cycles"] == 0


def test_quotient_adds_nine_cycles(paper):
    quotient = generate(paper.graph, paper.links, "quotient")
    assert len(quotient.cycles) == 9
    assert quotient.counts()["total"] == 27 + 297 + 54 + 54 + 9


def test_fork_adds_three_per_vertex(paper):
    plain = generate(paper.graph, paper.links, "plain")
    fork = generate(paper.graph, paper.links, "fork")
    assert len(fork.relator_words()) - len(plain.relator_words()) == 54
    assert len(fork.forks) == 3 * 18


def test_variants_nest(paper):
    plain = generate(paper.graph, paper.links, "plain")
    fork = generate(paper.graph, paper.links, "fork")
    quotient = generate(paper.graph, paper.links, "quotient")
    c = lambda p: {r.canonical for r in p.relators()}
    assert c(plain) < c(fork) < c(quotient)


def test_fork_variant_needs_three_regular():
    graph, links = hexagon_graph()
    with pytest.raises(ValueError):
        generate(graph, links, "fork")


def test_hexagon_quotient_matches_bundled_fixture():
    graph, links = hexagon_graph()
    pres = generate(graph, links, "quotient")
    bundled = load_json("hexagon_quotient.json")
    assert {canonical_form(w) for w in pres.relator_words()} \
        == {canonical_form(tuple(w)) for w in bundled["relators"]}
    affine = load_json("hexagon_affine.json")
    plain = generate(graph, links, "plain")
    assert {canonical_form(w) for w in plain.relator_words()} \
        == {canonical_form(tuple(w)) for w in affine["relators"]}


def test_every_relator_dies_in_symmetric_group(paper):
    quotient = generate(paper.graph, paper.links, "quotient")
    for w in quotient.relator_words():
        assert psi_image(paper.x0, w).is_identity()


def test_cycle_relator_triangle():
    assert cycle_relator((1, 2, 3)) == (1, 2, 3, 2)


def test_cycle_relator_too_short():
    with pytest.raises(ValueError):
        cycle_relator((1, 2))


def test_cycle_relator_chord_first_structure(paper):
    # Around the point whose hexagon holds the fourth chord (line 17): the
    # relator pins that chord against the transposition product of the rest.
    link = next(l for l in paper.links if 17 in l.cycle and l.point == 8)
    k = link.cycle.index(17)
    ordered = link.cycle[k:] + link.cycle[:k]
    word = cycle_relator(ordered)
    assert word[0] == 17 and len(word) == 10
    v = model.evaluate_word_semidirect(word, paper.span, paper.graph)
    assert v.sigma.is_identity()
    support = {i + 1 for i, u in enumerate(v.tuple_part.coords) if u}
    assert support == {9, 11}
    assert {abs(x) for u in v.tuple_part.coords for x in u} == {4}


def test_cycle_orientations_same_model_value(paper, paper_phi):
    for link in paper.links:
        values = set()
        for k in range(6):
            rot = link.cycle[k:] + link.cycle[:k]
            for orient in (rot, (rot[0],) + rot[:0:-1]):
                v = model.rho_hat(model.evaluate_word_semidirect(
                    cycle_relator(orient), paper.span, paper.graph, paper_phi), paper.span)
                values.add((v.sigma, v.reduced))
        assert len(values) == 1


def test_ax_fixture_shape():
    ax = ax_fixture()
    assert len(ax) == 25
    assert "AX9" not in ax
    lengths = sorted(len(w) for w in ax.values())
    histogram = {n: lengths.count(n) for n in sorted(set(lengths))}
    assert histogram == {10: 4, 12: 13, 14: 2, 18: 2, 24: 3, 30: 1}


def test_nonrel_fixture_shape(paper):
    pairs = nonrel_fixture()
    assert len(pairs) == 43
    # C(27,2) - 308 accounting.
    assert 27 * 26 // 2 - 308 == 43


def test_classify_missing_matches_expected(paper):
    table = classify_missing(nonrel_fixture(), paper.links)
    assert table == EXPECTED_MISSING_ROLES


def test_classify_missing_rows(paper):
    table = classify_missing(nonrel_fixture(), paper.links)
    assert table[1] == {"de", "bd", "ea", "ad", "be"}
    assert table[2] == {"ab", "de", "bd", "ea", "ad", "be"}
    assert all("ad" in roles for roles in table.values())


def test_coverage_counts(paper):
    plain = generate(paper.graph, paper.links, "plain")
    report = coverage_counts(plain, nonrel_fixture(), paper.graph)
    assert report["disjoint_given"] == 264
    assert report["adjacent_given"] == 44
    assert report["missing"] == 43
    assert (report["missing_disjoint"], report["missing_adjacent"]) == (33, 10)
    assert report["consistent"]


def test_coverage_counts_empty_table(paper):
    plain = generate(paper.graph, paper.links, "plain")
    report = coverage_counts(plain, [], paper.graph)
    assert report["missing"] == 0 and report["consistent"]


def test_generated_grid_presentations():
    x0 = build_torus_triangulation(4, 3)
    pres = generate(dual_graph(x0), hexagon_links(x0), "quotient")
    counts = pres.counts()
    assert counts["squares"] == 36
    assert counts["cycles"] == 12
    assert counts["forks"] == 3 * 24
    assert counts["commutations"] + counts["braids"] == 36 * 35 // 2


def test_presentation_json_round_trip(paper):
    quotient = generate(paper.graph, paper.links, "quotient")
    ngens, relators = presentation_from_json(quotient.to_json())
    assert ngens == 27
    assert relators == quotient.relator_words()


def test_presentation_json_validates_letters():
    with pytest.raises(ValueError):
        presentation_from_json({"generators": 2, "relators": [[1, 3]]})
