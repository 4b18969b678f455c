"""
Sweeping generalized Petersen graphs
====================================

P(n, d) turns out silver exactly when 4 divides n and d is odd. The survey
module runs the sweep and checks each verdict against that rule.
"""

from totsilver.survey import format_tsv, plan_points, run_survey

rows = run_survey(plan_points("petersen", range(4, 13)))
print(format_tsv(rows))
print("all agree:", all(r.agrees for r in rows))
