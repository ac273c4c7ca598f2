"""
Survey of all labeled trees
===========================

Every labeled tree on up to 6 vertices, every r. Each row checks the rooted
shedding test, the brute-force oracle, the constructed certificate and the
sphere counts.
"""

from collections import Counter

from indvd.survey import format_report, run_survey

rows = run_survey(6)
print(len(rows), "rows")
print(Counter(row.ok() for row in rows))

report = format_report(rows, timing=False)
print("\n".join(report.splitlines()[:8]))

# slowest pairs
for row in sorted(rows, key=lambda row: -row.ms)[:3]:
    print(row.tree, row.r, row.ms, "ms")
