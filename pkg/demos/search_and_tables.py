"""Lower bounds by randomized greedy search, exact values by exhaustion,
and the table generator tying everything together."""
from twodist import TwoDistParams
from twodist.search import SearchConfig, exhaustive_maximum, random_greedy
from twodist.tables import CellOptions, TableSpec, cell_text, compute_cell, render_table

# The greedy search fixes the zero word plus one word of weight d, then
# keeps adding random compatible words until the code is maximal.  With
# per-restart PRNG streams the outcome is a pure function of the seed.
params = TwoDistParams(3, 9, 6, 3)
result = random_greedy(params, SearchConfig(seed=1, restarts=5000, stop_at=27))
print(f"greedy on q=3, n=9, {{6, 9}}: found {result.size} words "
      f"(restart {result.restart_index}), two-distance={result.report.ok}")

# On small candidate spaces the exact maximum is a clique number; the
# zero word is free by translation invariance.
for q, n, d, delta in [(2, 4, 2, 2), (2, 5, 2, 2), (2, 7, 2, 2)]:
    value = exhaustive_maximum(TwoDistParams(q, n, d, delta))
    print(f"exact A_{q}({n}, {{{d},{d+delta}}}) = {value}")

# A single table cell aggregates screens, upper bounds, and the best
# catalog construction; the oracle turns small cells into exact values.
cell = compute_cell(TwoDistParams(2, 12, 6, 4))
print(f"\ncell (q=2, n=12, {{6, 10}}): {cell_text(cell)}")
cell = compute_cell(TwoDistParams(2, 7, 2, 2), CellOptions(oracle_max_vertices=100))
print(f"cell (q=2, n=7, {{2, 4}}) with oracle: {cell_text(cell)}")

# And a slice of the full grid (markdown; csv/latex/json also available).
spec = TableSpec(q=2, delta=4, n_min=8, n_max=14, d_min=2, d_max=8, fmt="markdown")
print("\nq=2, delta=4 table slice:\n")
print(render_table(spec))
