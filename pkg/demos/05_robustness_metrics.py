"""Corruption-robustness aggregation from a results CSV.

Detection scores arrive as one mAP percentage per (corruption, severity)
cell; the report reduces them to per-corruption means and the overall
mean performance under corruption (mPC).  Incomplete grids are rejected
rather than silently averaged.
"""

import json

from physaug import format_report, parse_results, summarize

# Four adverse-weather target domains at one severity each.
RESULTS_CSV = """corruption,severity,map
night_sunny,1,44.9
dusk_rainy,1,41.2
night_rainy,1,23.1
daytime_foggy,1,40.8
"""

table = parse_results(RESULTS_CSV)
print(format_report(table, clean_score=60.2))
print()
print(json.dumps(summarize(table, clean_score=60.2), indent=2))

# A complete grid is mandatory: a missing cell is an error, not a gap.
try:
    parse_results(RESULTS_CSV.rsplit("\n", 2)[0] + "\n")
except ValueError as exc:
    print(f"\nincomplete grid rejected as expected: {exc}")
