"""Empirical verification of the structural theorems on graph corpora.

Each trial takes one graph, tests the theorem's hypothesis (class
membership plus existence of an efficient dominating set) and, when it
holds, evaluates the claimed property of the square. Hypothesis filtering
uses the exact-cover oracle, never the pipeline under test. Campaigns are
reproducible: every trial's graph is derived from the master seed by a
fixed splitting function, independent of execution order.
"""

from __future__ import annotations

import hashlib
import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .graph import Graph, from_edge_list, square
from .recognition import (
    PatternWitness,
    class_membership,
    find_all_odd_antiholes,
    find_hole,
    is_chordal,
    is_perfect_desk,
    witness_is_valid,
)
from .solver import efficient_dominating_sets, verify_ed

THEOREM_IDS = ("T1", "T2", "T3", "C4-dom", "T4", "T5", "CONJ")

#: Class hypothesis per theorem id.
_THEOREM_CLASS = {
    "T1": "(P6,HHD)-free",
    "T2": "P6-free",
    "T3": "P6-free",
    "C4-dom": "(P6,house)-free",
    "T4": "(P6,house)-free",
    "T5": "(P6,bull)-free",
    "CONJ": "P6-free",
}

#: Theorems whose conclusion quantifies over every efficient dominating set.
_NEEDS_ALL_EDS = frozenset({"T3", "C4-dom"})

#: Max n for enumerating all efficient dominating sets of a trial graph.
ED_ENUM_CAP = 16

HELD, VACUOUS, COUNTEREXAMPLE, SKIPPED = "held", "vacuous", "counterexample", "skipped"


@dataclass(frozen=True)
class TrialVerdict:
    status: str
    informative: bool = True
    counterexample: dict | None = None
    reason: str | None = None


@dataclass(frozen=True)
class TrialConfig:
    """One campaign: a theorem, a corpus, a master seed and search budgets."""

    theorem: str
    seed: int = 0
    trials: int = 0
    n_range: tuple[int, int] = (7, 14)
    p_range: tuple[float, float] = (0.05, 0.95)
    exhaustive_n: int | None = None
    budget: int = 30

    def __post_init__(self):
        if self.theorem not in THEOREM_IDS:
            raise ValueError(f"unknown theorem id {self.theorem!r}; expected one of {THEOREM_IDS}")
        if self.exhaustive_n is None and self.trials < 1:
            raise ValueError("a campaign needs random trials or an exhaustive bound")
        if self.trials < 0 or (self.exhaustive_n is not None and self.exhaustive_n < 0):
            raise ValueError("corpus sizes must be nonnegative")
        if self.trials and not self.n_range[0] <= self.n_range[1]:
            raise ValueError(f"bad n range {self.n_range}")
        if self.trials and not 0.0 <= self.p_range[0] <= self.p_range[1] <= 1.0:
            raise ValueError(f"bad edge-probability range {self.p_range}")
        if self.trials and self.n_range[1] > self.budget:
            raise ValueError(f"n range {self.n_range} exceeds verification budget {self.budget}")


@dataclass(frozen=True)
class VerificationReport:
    """Campaign outcome; wall-clock stays out of the canonical document."""

    theorem: str
    seed: int
    corpus: dict
    budget: int
    trials: int
    held: int
    held_trivially: int
    vacuous: int
    skipped: int
    counterexamples: tuple[dict, ...]
    wall_clock_s: float = field(compare=False)

    def __post_init__(self):
        total = self.held + self.vacuous + self.skipped + len(self.counterexamples)
        if total != self.trials:
            raise ValueError(f"verdict tallies {total} do not add up to {self.trials} trials")

    def to_document(self) -> dict:
        return {
            "theorem": self.theorem,
            "seed": self.seed,
            "corpus": self.corpus,
            "budget": self.budget,
            "trials": self.trials,
            "held": self.held,
            "held_trivially": self.held_trivially,
            "vacuous": self.vacuous,
            "skipped": self.skipped,
            "counterexamples": list(self.counterexamples),
        }

    def to_text(self) -> str:
        lines = [
            f"theorem {self.theorem}: {len(self.counterexamples)} counterexample(s)",
            f"  seed {self.seed}, corpus {self.corpus}",
            f"  trials {self.trials}: held {self.held} "
            f"(of which trivially {self.held_trivially}), "
            f"vacuous {self.vacuous}, skipped {self.skipped}",
        ]
        for record in self.counterexamples:
            lines.append(f"  COUNTEREXAMPLE: {record}")
        return "\n".join(lines)


# -- corpora -----------------------------------------------------------------

def _random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return from_edge_list(n, edges)


def gen_random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p); identical seed gives an identical edge set."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    return _random_graph(n, p, random.Random(seed))


def gen_random_chordal(n: int, fill: float, seed: int) -> Graph:
    """Random chordal graph; fill=0 gives a random tree.

    Working backward over an elimination order, each vertex gets a random
    later parent plus (with probability fill, per vertex) members of the
    parent's later clique, so every later-neighbor set stays a clique.
    Vertex ids are then shuffled.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not 0.0 <= fill <= 1.0:
        raise ValueError(f"fill must be in [0, 1], got {fill}")
    rng = random.Random(seed)
    later_cliques: list[list[int]] = [[] for _ in range(n)]
    edges = []
    for pos in range(n - 2, -1, -1):
        parent = rng.randint(pos + 1, n - 1)
        clique = [parent] + [x for x in later_cliques[parent] if rng.random() < fill]
        later_cliques[pos] = clique
        edges.extend((pos, x) for x in clique)
    relabel = list(range(n))
    rng.shuffle(relabel)
    return from_edge_list(n, [(relabel[u], relabel[v]) for u, v in edges])


def enumerate_all_graphs(max_n: int) -> Iterator[Graph]:
    """Every graph on 0..max_n vertices, one per edge subset, in fixed order."""
    for n in range(max_n + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            yield from_edge_list(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])


def _split_seed(master: int, index: int) -> int:
    digest = hashlib.sha256(f"{master}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


# -- single-trial checks ------------------------------------------------------

def _find_induced_c4s(g: Graph) -> list[tuple[int, int, int, int]]:
    """All induced 4-cycles, as (a, b, c, d) with edges ab, bc, cd, da."""
    out = []
    for quad in combinations(range(g.n), 4):
        a, b, c, d = quad
        edges = sum(
            g.adjacent(x, y) for x, y in combinations(quad, 2)
        )
        if edges != 4:
            continue
        for order in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            w, x, y, z = order
            if (
                g.adjacent(w, x)
                and g.adjacent(x, y)
                and g.adjacent(y, z)
                and g.adjacent(z, w)
                and not g.adjacent(w, y)
                and not g.adjacent(x, z)
            ):
                out.append(order)
                break
    return out


def _record(g: Graph, theorem: str, detail: dict) -> dict:
    record = {
        "theorem": theorem,
        "n": g.n,
        "edges": [list(e) for e in g.edges()],
    }
    record.update(detail)
    _recheck_counterexample(record)
    return record


def _recheck_counterexample(record: dict) -> None:
    """Re-verify a counterexample record end to end before it is reported."""
    g = from_edge_list(record["n"], [tuple(e) for e in record["edges"]])
    if not class_membership(g, _THEOREM_CLASS[record["theorem"]]).member:
        raise AssertionError(f"counterexample fails its class hypothesis: {record}")
    for key in ("ed", "eds"):
        if key in record:
            sets = [record[key]] if key == "ed" else record[key]
            for d in sets:
                if not verify_ed(g, d):
                    raise AssertionError(f"counterexample carries an invalid e.d.: {record}")
    if "witness" in record:
        kind, vertices = record["witness"]
        if not witness_is_valid(square(g), PatternWitness(kind, tuple(vertices))):
            raise AssertionError(f"counterexample witness does not verify: {record}")


def check_theorem(g: Graph, theorem: str, budget: int = 30) -> TrialVerdict:
    """One trial: vacuous unless the hypothesis holds, else test the square.

    Budget overruns (hole / antihole search on too-large graphs, or
    all-e.d. enumeration beyond the cap) yield an explicit skip verdict.
    """
    if theorem not in THEOREM_IDS:
        raise ValueError(f"unknown theorem id {theorem!r}; expected one of {THEOREM_IDS}")
    if not class_membership(g, _THEOREM_CLASS[theorem]).member:
        return TrialVerdict(VACUOUS, informative=False, reason="class")
    eds_iter = efficient_dominating_sets(g)
    first = next(eds_iter, None)
    if first is None:
        return TrialVerdict(VACUOUS, informative=False, reason="no efficient dominating set")

    if theorem in _NEEDS_ALL_EDS and g.n > ED_ENUM_CAP:
        return TrialVerdict(SKIPPED, informative=False, reason=f"n > {ED_ENUM_CAP}")
    if theorem != "T1" and g.n > budget:
        return TrialVerdict(SKIPPED, informative=False, reason=f"n > budget {budget}")

    sq = square(g)
    if theorem == "T1":
        chordal, cert = is_chordal(sq)
        if chordal:
            return TrialVerdict(HELD)
        detail = {"ed": list(first), "witness": [cert.kind, list(cert.vertices)]}
        return TrialVerdict(COUNTEREXAMPLE, counterexample=_record(g, theorem, detail))

    if theorem == "T2":
        hole = find_hole(sq, min_length=5)
        if hole is None:
            return TrialVerdict(HELD)
        detail = {"ed": list(first), "witness": [hole.kind, list(hole.vertices)]}
        return TrialVerdict(COUNTEREXAMPLE, counterexample=_record(g, theorem, detail))

    if theorem == "T3":
        antiholes = find_all_odd_antiholes(sq)
        if not antiholes:
            return TrialVerdict(HELD, informative=False)
        all_eds = [first, *eds_iter]
        for d in all_eds:
            for witness in antiholes:
                overlap = sorted(set(d) & set(witness.vertices))
                if overlap:
                    detail = {
                        "ed": list(d),
                        "witness": [witness.kind, list(witness.vertices)],
                        "overlap": overlap,
                    }
                    return TrialVerdict(
                        COUNTEREXAMPLE, counterexample=_record(g, theorem, detail)
                    )
        return TrialVerdict(HELD)

    if theorem == "C4-dom":
        c4s = _find_induced_c4s(sq)
        all_eds = [first, *eds_iter]
        informative = False
        for d in all_eds:
            d_set = set(d)
            dominator = {}
            for v in d:
                for u in (v, *g.neighbors(v)):
                    dominator[u] = v
            for cycle in c4s:
                if d_set & set(cycle):
                    continue
                informative = True
                dominators = sorted({dominator[u] for u in cycle})
                if len(dominators) > 2:
                    detail = {
                        "ed": list(d),
                        "witness": ["C4", list(cycle)],
                        "dominators": dominators,
                    }
                    return TrialVerdict(
                        COUNTEREXAMPLE, counterexample=_record(g, theorem, detail)
                    )
        return TrialVerdict(HELD, informative=informative)

    # T4, T5, CONJ: the square must be perfect.
    perfect, witness = is_perfect_desk(sq)
    if perfect:
        return TrialVerdict(HELD)
    detail = {"ed": list(first), "witness": [witness.kind, list(witness.vertices)]}
    return TrialVerdict(COUNTEREXAMPLE, counterexample=_record(g, theorem, detail))


# -- campaigns ---------------------------------------------------------------

def run_campaign(config: TrialConfig) -> VerificationReport:
    """Run every trial of a campaign and aggregate the verdicts.

    The exhaustive corpus (if any) is enumerated first in its fixed order,
    followed by the random trials; trial i's graph depends only on the
    master seed and i. Identical configs produce identical reports apart
    from wall-clock time, which is excluded from the canonical document.
    """
    start = time.perf_counter()
    tallies = {HELD: 0, VACUOUS: 0, SKIPPED: 0}
    held_trivially = 0
    counterexamples: list[dict] = []
    trials = 0

    def absorb(verdict: TrialVerdict, origin: dict) -> None:
        nonlocal held_trivially, trials
        trials += 1
        if verdict.status == COUNTEREXAMPLE:
            record = dict(verdict.counterexample)
            record.update(origin)
            counterexamples.append(record)
            return
        tallies[verdict.status] += 1
        if verdict.status == HELD and not verdict.informative:
            held_trivially += 1

    if config.exhaustive_n is not None:
        for index, g in enumerate(enumerate_all_graphs(config.exhaustive_n)):
            absorb(
                check_theorem(g, config.theorem, config.budget),
                {"corpus": "exhaustive", "index": index},
            )
    for i in range(config.trials):
        rng = random.Random(_split_seed(config.seed, i))
        n = rng.randint(config.n_range[0], config.n_range[1])
        p = rng.uniform(config.p_range[0], config.p_range[1])
        g = _random_graph(n, p, rng)
        absorb(
            check_theorem(g, config.theorem, config.budget),
            {"corpus": "random", "index": i},
        )

    corpus = {
        "exhaustive_n": config.exhaustive_n,
        "random_trials": config.trials,
        "n_range": list(config.n_range),
        "p_range": list(config.p_range),
    }
    return VerificationReport(
        theorem=config.theorem,
        seed=config.seed,
        corpus=corpus,
        budget=config.budget,
        trials=trials,
        held=tallies[HELD],
        held_trivially=held_trivially,
        vacuous=tallies[VACUOUS],
        skipped=tallies[SKIPPED],
        counterexamples=tuple(counterexamples),
        wall_clock_s=time.perf_counter() - start,
    )
