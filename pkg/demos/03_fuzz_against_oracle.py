"""Measure the matcher against the exhaustive oracle on small random graphs.

Isomorphic pairs the matcher misses are written to ./counterexamples as edge
lists, so each can be replayed with ``peeliso check``.
"""

from pathlib import Path

from peeliso.oracle import fuzz_agreement, regular_fixture_report

report = fuzz_agreement(400, 8, 0.5, seed=7, dump_dir=Path("counterexamples"))
print(report.format().split("\n\n", 1)[1])

# The strongly regular pair is beyond the oracle; ground truth comes from
# the neighborhood structure instead.
print(regular_fixture_report(seed=7).format())
