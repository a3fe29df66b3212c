"""Exact isomorphism by backtracking, and the matcher-vs-oracle fuzz harness.

The oracle deliberately uses nothing from the digraph or history modules, so
agreement between it and the matcher is evidence rather than a tautology.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .graph import (
    Graph,
    degree_preserving_shuffle,
    generate_random_graph,
    permute,
    random_permutation,
    render_edge_list,
)
from .fixtures import neighborhood_component_counts, rook_graph, shrikhande_graph
from .matcher import Mode, Status, Verdict, run, verify_mapping

__all__ = [
    "DEFAULT_CAP",
    "OracleCapExceeded",
    "OracleResult",
    "exact_isomorphism",
    "TrialRow",
    "ModeTally",
    "FuzzReport",
    "fuzz_agreement",
    "judge_pair",
    "regular_fixture_report",
]

DEFAULT_CAP = 12


class OracleCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    mapping: Optional[dict[int, int]]
    nodes_explored: int

    @property
    def isomorphic(self) -> bool:
        return self.mapping is not None


def exact_isomorphism(g: Graph, h: Graph, cap: int = DEFAULT_CAP) -> OracleResult:
    """Decide isomorphism exhaustively.

    Vertices of ``g`` are assigned in descending degree order; a candidate
    image must have the same degree and the same adjacency to every vertex
    assigned so far.

    Raises
    ------
    OracleCapExceeded
        If either graph has more than ``cap`` vertices.
    """
    if max(g.n, h.n) > cap:
        raise OracleCapExceeded(f"n={max(g.n, h.n)} exceeds the oracle cap {cap}")
    if g.n != h.n or g.m != h.m:
        return OracleResult(None, 0)
    if sorted(map(g.degree, g.vertices)) != sorted(map(h.degree, h.vertices)):
        return OracleResult(None, 0)

    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    hadj = {u: set(h.neighbors(u)) for u in h.vertices}
    gadj = {v: set(g.neighbors(v)) for v in g.vertices}
    by_degree: dict[int, list[int]] = {}
    for u in h.vertices:
        by_degree.setdefault(h.degree(u), []).append(u)

    assign: dict[int, int] = {}
    used: set[int] = set()
    nodes = 0

    def extend(i: int) -> bool:
        nonlocal nodes
        if i == len(order):
            return True
        v = order[i]
        for u in by_degree[g.degree(v)]:
            if u in used:
                continue
            nodes += 1
            if any((w in gadj[v]) != (assign[w] in hadj[u]) for w in order[:i]):
                continue
            assign[v] = u
            used.add(u)
            if extend(i + 1):
                return True
            del assign[v]
            used.discard(u)
        return False

    if extend(0):
        mapping = dict(sorted(assign.items()))
        assert verify_mapping(g, h, mapping)
        return OracleResult(mapping, nodes)
    return OracleResult(None, nodes)


MODES = (Mode.FAITHFUL, Mode.CAUTIOUS, Mode.RETRY)


@dataclass(frozen=True)
class TrialRow:
    seed: int
    kind: str
    n: int
    m: int
    oracle: Status
    verdicts: tuple[Status, Status, Status]
    verified: bool
    rounds: int

    def cells(self) -> list[str]:
        return [
            str(self.seed),
            self.kind,
            str(self.n),
            str(self.m),
            self.oracle.value,
            *(v.value for v in self.verdicts),
            "yes" if self.verified else "no",
            str(self.rounds),
        ]


@dataclass
class ModeTally:
    true_positives: int = 0
    true_negatives: int = 0
    false_negatives: int = 0
    unknown_on_negatives: int = 0
    soundness_violations: int = 0
    verification_rejections: int = 0


@dataclass
class FuzzReport:
    trials: int
    n: int
    p: float
    seed: int
    rows: list[TrialRow] = field(default_factory=list)
    tallies: dict[Mode, ModeTally] = field(default_factory=lambda: {m: ModeTally() for m in MODES})
    counterexamples: list[tuple[int, str, str]] = field(default_factory=list)

    @property
    def oracle_isomorphic(self) -> int:
        return sum(r.oracle is Status.ISOMORPHIC for r in self.rows)

    @property
    def soundness_violations(self) -> int:
        return sum(t.soundness_violations for t in self.tallies.values())

    def format(self) -> str:
        head = ["seed", "kind", "n", "m", "oracle", "faithful", "cautious", "retry", "verified", "rounds"]
        body = [r.cells() for r in sorted(self.rows, key=lambda r: r.seed)]
        widths = [max(len(c) for c in col) for col in zip(head, *body)]
        out = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in [head, *body]]
        out.append("")
        out.append(
            f"summary: trials={self.trials} n={self.n} p={self.p} seed={self.seed} "
            f"oracle-isomorphic={self.oracle_isomorphic} "
            f"oracle-not-isomorphic={len(self.rows) - self.oracle_isomorphic}"
        )
        for mode, t in self.tallies.items():
            out.append(
                f"  {mode.value:<8} verified-true-positives={t.true_positives} "
                f"true-negatives={t.true_negatives} false-negatives={t.false_negatives} "
                f"unknown-on-negatives={t.unknown_on_negatives} "
                f"verification-rejections={t.verification_rejections} "
                f"soundness-violations={t.soundness_violations}"
            )
        out.append(f"counterexamples: {len(self.counterexamples)}")
        for seed, gpath, hpath in self.counterexamples:
            out.append(f"  seed {seed}: {gpath} {hpath}")
        return "\n".join(out) + "\n"


def _trial_pair(n: int, p: float, trial_seed: int, kind: str) -> tuple[Graph, Graph]:
    rng = random.Random(trial_seed)
    g = generate_random_graph(n, p, rng.getrandbits(32))
    if kind == "iso":
        base = g
    else:
        base = degree_preserving_shuffle(g, max(1, g.m), rng)
    return g, permute(base, random_permutation(base.vertices, rng))


def judge_pair(g: Graph, h: Graph, truth: bool, tally: dict[Mode, ModeTally]) -> tuple[list[Verdict], bool]:
    """Run every mode on one pair and add its outcome to ``tally``.

    Returns the verdicts and whether any mode missed an existing isomorphism.
    """
    verdicts = [run(g, h, mode) for mode in MODES]
    missed = False
    for mode, verdict in zip(MODES, verdicts):
        t = tally[mode]
        if verdict.verification_failed:
            t.verification_rejections += 1
        if verdict.status is Status.ISOMORPHIC:
            if truth and verify_mapping(g, h, verdict.pairs):
                t.true_positives += 1
            else:
                t.soundness_violations += 1
        elif truth:
            t.false_negatives += 1
            missed = True
        elif verdict.status is Status.NOT_ISOMORPHIC:
            t.true_negatives += 1
        else:
            t.unknown_on_negatives += 1
    return verdicts, missed


def fuzz_agreement(
    trials: int,
    n: int,
    p: float,
    seed: int,
    *,
    cap: int = DEFAULT_CAP,
    dump_dir: Optional[Path] = None,
) -> FuzzReport:
    """Compare the matcher in all three modes against the exact oracle.

    Even trials use a randomly relabelled copy of a G(n, p) sample. Odd trials
    first scramble the sample with degree-preserving edge swaps, which keeps
    the precheck passing while usually breaking isomorphism. Pairs where the
    oracle finds an isomorphism that some mode missed are written to
    ``dump_dir`` as edge lists.
    """
    if n > cap:
        raise OracleCapExceeded(f"n={n} exceeds the oracle cap {cap}")
    report = FuzzReport(trials, n, p, seed)
    master = random.Random(seed)
    for i in range(trials):
        trial_seed = master.getrandbits(32)
        kind = "iso" if i % 2 == 0 else "swap"
        g, h = _trial_pair(n, p, trial_seed, kind)
        oracle = exact_isomorphism(g, h, cap)
        _record(report, trial_seed, kind, g, h, oracle.isomorphic, dump_dir)
    return report


def _record(report: FuzzReport, seed: int, kind: str, g: Graph, h: Graph, truth: bool, dump_dir) -> None:
    verdicts, missed = judge_pair(g, h, truth, report.tallies)
    report.rows.append(
        TrialRow(
            seed,
            kind,
            g.n,
            g.m,
            Status.ISOMORPHIC if truth else Status.NOT_ISOMORPHIC,
            tuple(v.status for v in verdicts),
            any(v.status is Status.ISOMORPHIC for v in verdicts),
            verdicts[0].rounds,
        )
    )
    if missed:
        gpath = hpath = "-"
        if dump_dir is not None:
            dump_dir = Path(dump_dir)
            dump_dir.mkdir(parents=True, exist_ok=True)
            gp, hp = dump_dir / f"fn-{kind}-{seed}-g.el", dump_dir / f"fn-{kind}-{seed}-h.el"
            gp.write_text(render_edge_list(g), encoding="utf-8")
            hp.write_text(render_edge_list(h), encoding="utf-8")
            gpath, hpath = str(gp), str(hp)
        report.counterexamples.append((seed, gpath, hpath))


def regular_fixture_report(seed: int, *, dump_dir: Optional[Path] = None) -> FuzzReport:
    """Matcher verdicts on the (16, 6, 2, 2) strongly regular fixtures.

    These exceed the oracle cap. Ground truth comes from construction for the
    relabelled copies and from :func:`neighborhood_component_counts` for the
    rook/Shrikhande pair.
    """
    rook, shri = rook_graph(4), shrikhande_graph()
    rng = random.Random(seed)
    pairs = [
        ("rook-vs-shrikhande", rook, shri,
         neighborhood_component_counts(rook) == neighborhood_component_counts(shri)),
        ("rook-relabelled", rook, permute(rook, random_permutation(rook.vertices, rng)), True),
        ("shrikhande-relabelled", shri, permute(shri, random_permutation(shri.vertices, rng)), True),
    ]
    report = FuzzReport(len(pairs), 16, 0.4, seed)
    for kind, g, h, truth in pairs:
        _record(report, seed, kind, g, h, truth, dump_dir)
    return report
