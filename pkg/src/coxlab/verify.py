"""Named verification suites over a complex.

Each suite produces a Report whose entries carry a stable name, a
pass/fail/inconclusive status, the computed value and a one-line statement
of the property checked.  Reports are deterministic for fixed inputs:
entries are emitted sorted by name and contain no timestamps.

The suites ax, tables, center and structure are pinned to the published
3 x 3 labeling; relators runs on any complex and adds the reduced-model
checks when the complex is the published one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import model, presentation
from .complexes import (DegenerationComplex, dual_graph, hexagon_links,
                        is_paper_labeling, spanning_data)
from .perm import identity, transposition
from .presentation import cycle_relator

SUITES = ("relators", "ax", "tables", "center", "structure", "all")
PAPER_ONLY = ("ax", "tables", "center", "structure")


@dataclass
class Entry:
    name: str
    status: str     # "pass", "fail" or "inconclusive"
    value: object
    detail: str


@dataclass
class Report:
    command: str
    entries: list[Entry] = field(default_factory=list)

    def add(self, name: str, ok: bool, value, detail: str):
        self.entries.append(Entry(name, "pass" if ok else "fail", value, detail))

    def extend(self, other: "Report"):
        self.entries.extend(other.entries)

    def finalize(self) -> "Report":
        self.entries.sort(key=lambda e: e.name)
        return self

    def summary(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "inconclusive": 0}
        for e in self.entries:
            out[e.status] += 1
        return out

    def failed(self) -> bool:
        return any(e.status == "fail" for e in self.entries)

    def exit_code(self) -> int:
        return 1 if self.failed() else 0

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "entries": [
                {"name": e.name, "status": e.status, "value": e.value, "detail": e.detail}
                for e in self.entries
            ],
            "summary": self.summary(),
        }


@dataclass
class _Context:
    x0: DegenerationComplex
    paper: bool

    def __post_init__(self):
        self.graph = dual_graph(self.x0)
        self.links = hexagon_links(self.x0)
        self.span = spanning_data(self.graph, "paper-fixture" if self.paper else "canonical")
        self.table = model.phi_table(self.span, self.graph)
        self.quotient = presentation.generate(self.graph, self.links, "quotient")

    def exact(self, word):
        return model.evaluate_word_semidirect(word, self.span, self.graph, self.table)

    def reduced(self, word):
        return model.rho_hat(self.exact(word), self.span)


def run_suite(x0: DegenerationComplex, suite: str) -> Report:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    paper = is_paper_labeling(x0)
    if suite in PAPER_ONLY and not paper:
        raise ValueError(f"suite {suite!r} is defined only for the published 3 x 3 labeling")
    ctx = _Context(x0, paper)
    report = Report(command=f"verify:{suite}")
    if suite in ("relators", "all"):
        report.extend(_suite_relators(ctx))
    if suite in ("ax", "all"):
        report.extend(_suite_ax(ctx))
    if suite in ("tables", "all"):
        report.extend(_suite_tables(ctx))
    if suite in ("center", "all"):
        report.extend(_suite_center(ctx))
    if suite in ("structure", "all"):
        report.extend(_suite_structure(ctx))
    return report.finalize()


def _suite_relators(ctx: _Context) -> Report:
    rep = Report(command="verify:relators")
    counts = ctx.quotient.counts()
    rep.add("relators.counts", counts["total"] == sum(
        counts[k] for k in ("squares", "commutations", "braids", "forks", "cycles")),
        counts, "relator census of the quotient presentation")

    coxeter = ctx.quotient.squares + ctx.quotient.commutations \
        + ctx.quotient.braids + ctx.quotient.forks
    bad = sum(1 for w in coxeter if not ctx.exact(w).is_identity())
    rep.add("relators.coxeter_identity", bad == 0,
            {"checked": len(coxeter), "failed": bad},
            "square, commutation, braid and fork relators act trivially in the exact model")

    in_kernel = nontrivial = 0
    for w in ctx.quotient.cycles:
        v = ctx.exact(w)
        in_kernel += v.sigma.is_identity()
        nontrivial += not v.tuple_part.is_trivial()
    rep.add("relators.cycles_in_kernel", in_kernel == len(ctx.quotient.cycles),
            in_kernel, "cyclic relators have trivial permutation part")
    rep.add("relators.cycles_nontrivial_before_reduction",
            nontrivial == len(ctx.quotient.cycles), nontrivial,
            "cyclic relators are nontrivial before the reduction collapses them")

    if ctx.paper:
        records = model.relator_report(ctx.quotient.relator_words(),
                                       ctx.span, ctx.graph, ctx.table)
        failed = sum(1 for r in records if r["status"] != "pass")
        rep.add("relators.reduced_identity", failed == 0,
                {"checked": len(records), "failed": failed},
                "every quotient relator maps to the identity of the reduced model")
        ok = True
        for link in ctx.links:
            images = set()
            for k in range(6):
                rot = link.cycle[k:] + link.cycle[:k]
                for orient in (rot, (rot[0],) + rot[:0:-1]):
                    v = ctx.reduced(cycle_relator(orient))
                    images.add((v.sigma.images, v.reduced))
            if len(images) != 1 or not v.is_identity():
                ok = False
        rep.add("relators.cycle_orientations_agree", ok, 12 * len(ctx.links),
                "all 12 numerations of each hexagon give the same reduced value")
    return rep


def _suite_ax(ctx: _Context) -> Report:
    rep = Report(command="verify:ax")
    for label, word in sorted(presentation.ax_fixture().items()):
        value = ctx.reduced(word)
        rep.add(f"ax.{label}", value.is_identity(),
                "identity" if value.is_identity() else value.reduced.to_json(),
                "fixed miscellaneous relator evaluates to the identity")
    return rep


def _suite_tables(ctx: _Context) -> Report:
    rep = Report(command="verify:tables")
    pairs = presentation.nonrel_fixture()
    plain = presentation.generate(ctx.graph, ctx.links, "plain")
    cov = presentation.coverage_counts(plain, pairs, ctx.graph)
    rep.add("tables.pair_split", (cov["pairs_total"], cov["disjoint"], cov["adjacent"]) == (351, 297, 54),
            {k: cov[k] for k in ("pairs_total", "disjoint", "adjacent")},
            "all 351 edge pairs split 297 disjoint and 54 adjacent")
    rep.add("tables.missing_count", cov["missing"] == 43 and cov["pairs_total"] - 308 == 43,
            cov["missing"], "exactly 43 pairs carry no order relation up front")
    rep.add("tables.missing_split",
            (cov["missing_disjoint"], cov["missing_adjacent"]) == (33, 10),
            {k: cov[k] for k in ("missing_disjoint", "missing_adjacent")},
            "the 43 missing pairs split 33 disjoint and 10 adjacent")
    rep.add("tables.given_split",
            (cov["disjoint_given"], cov["adjacent_given"]) == (264, 44),
            {k: cov[k] for k in ("disjoint_given", "adjacent_given")},
            "308 pairs are given: 264 commutations and 44 order-3 pairs")

    table = presentation.classify_missing(pairs, ctx.links)
    expected = presentation.EXPECTED_MISSING_ROLES
    rep.add("tables.role_table", table == expected,
            {str(p): sorted(v) for p, v in sorted(table.items())},
            "role classification of the missing pairs matches the recorded table row for row")
    diagonal_free = all(
        role not in ("c", "f")
        for point, roles in table.items() for pair in roles for role in pair)
    rep.add("tables.no_diagonal_roles", diagonal_free, diagonal_free,
            "no missing pair involves a diagonal role at its shared point")
    return rep


def _suite_center(ctx: _Context) -> Report:
    rep = Report(command="verify:center")
    witness = model.center_witness(ctx.span, ctx.graph)
    rep.add("center.witness_value", witness.zeta in (1, -1),
            {"zeta": witness.zeta}, "the commutator word evaluates to a generator of the centre")
    rep.add("center.witness_permutation", witness.value.sigma.is_identity(), "identity",
            "the centre witness has trivial permutation part")
    expected = {"tau1": {2, 7}, "tau2": {7, 10}, "tau3": {1, 7}, "tau4": {1, 3}}
    got = {k: set(v) for k, v in witness.tau_images.items()}
    rep.add("center.tau_images", got == expected,
            {k: sorted(v) for k, v in sorted(witness.tau_images.items())},
            "the conjugating words land on the recorded transpositions")

    z = model.ModelElement(identity(18), model.ReducedElement.z())
    commuting = sum(
        1 for e in sorted(ctx.graph.edges)
        if z.commutes_with(model.rho_hat(ctx.table[e], ctx.span)))
    rep.add("center.z_commutes", commuting == len(ctx.graph.edges), commuting,
            "z commutes with all 27 generator images")
    return rep


def _suite_structure(ctx: _Context) -> Report:
    rep = Report(command="verify:structure")
    gens = model.kernel_generators()
    rank, torsion = model.abelianization(model.kernel_relation_matrix(), len(gens))
    rep.add("structure.abelianization_rank", rank == 34, rank,
            "the abelianized kernel is free of rank 34")
    rep.add("structure.abelianization_torsion", torsion == [], torsion,
            "the abelianized kernel has no torsion")

    nil = model.nilpotency_class_check(sample_size=120)
    rep.add("structure.nilpotency_class", nil["nilpotency_class"] == 2, nil,
            "sampled kernel triples witness nilpotency class exactly 2")

    rng = random.Random(18)
    samples = 120
    moved = 0
    for _ in range(samples):
        m = model.random_kernel_element(rng)
        if m.is_central_power():
            m = m * model.ReducedElement.p(1) * model.ReducedElement.p(2, -1)
        elem = model.ModelElement(identity(18), m)
        if any(not elem.commutes_with(model.ModelElement(transposition(i, j, 18),
                                                         model.ReducedElement.identity()))
               for i in range(1, 19) for j in range(i + 1, 19)):
            moved += 1
    rep.add("structure.noncentral_kernel_elements", moved == samples,
            {"samples": samples, "moved": moved},
            "every sampled kernel element outside the centre fails to commute with some transposition")
    return rep
