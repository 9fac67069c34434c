"""Empirically stress the structural guarantees behind the solver paths.

Each campaign draws seeded random graphs, keeps those satisfying a
hypothesis (class membership plus an efficient dominating set) and checks
the promised structure of the square:

  T1     (P6,HHD)-free  ->  square is chordal
  T2     P6-free        ->  square has no hole
  T3     P6-free        ->  odd antiholes of the square avoid e.d. vertices
  C4-dom (P6,house)-free -> D-free C4s of the square have two dominators
  T4     (P6,house)-free -> square is perfect
  T5     (P6,bull)-free  -> square is perfect
  CONJ   P6-free         -> square is perfect (open conjecture)

A counterexample to CONJ would be genuinely new, so any hit is re-verified
independently and dumped with a full certificate.
"""

from perfcode import THEOREM_IDS, TrialConfig, run_campaign

for theorem in THEOREM_IDS:
    config = TrialConfig(
        theorem=theorem,
        seed=2024,
        trials=400,
        n_range=(7, 12),
        exhaustive_n=5,
    )
    report = run_campaign(config)
    print(report.to_text())
    print(f"  ({report.wall_clock_s:.2f}s)")
    print()
