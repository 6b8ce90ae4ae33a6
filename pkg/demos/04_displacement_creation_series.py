#!/usr/bin/env python3
"""Year-by-year displacement versus job creation in the staged rollout.

The reskilling ramp lags the displacement path, so the uncovered gap
widens first and then narrows every year through 2030.
"""

from robolabor import load_config, run_scenario

cfg = load_config("default")
result = run_scenario(cfg.scenario("staged_adoption"), cfg.params,
                      cfg.initial_state, cfg.baseline)

print(f"{'year':>6} {'displaced':>12} {'created':>12} {'gap':>12}")
peak_year = None
peak_gap = -1.0
for record in result.records:
    gap = record.displaced_cumulative - record.jobs_created_cumulative
    if gap > peak_gap:
        peak_gap, peak_year = gap, record.year
    print(f"{record.year:>6} {record.displaced_cumulative:>12,.0f} "
          f"{record.jobs_created_cumulative:>12,.0f} {gap:>12,.0f}")

print()
print(f"Gap peaks in {peak_year} at {peak_gap:,.0f} workers, then narrows.")
terminal = result.records[-1]
print(f"By 2030: {terminal.displaced_cumulative:,.0f} displaced, "
      f"{terminal.jobs_created_cumulative:,.0f} new roles "
      f"({100 * terminal.jobs_created_cumulative / terminal.displaced_cumulative:.0f}% coverage).")
