#!/usr/bin/env python3
"""Tornado view of the one-at-a-time sensitivity analysis.

Bars are grouped by result metric and scaled within each group, since a
swing in output units and a swing in a displacement fraction are not
comparable lengths.
"""

import math

from robolabor import load_config, one_at_a_time

BAR_WIDTH = 40

cfg = load_config("default")
scenario = cfg.scenario("baseline")
records = one_at_a_time(scenario, cfg.params, cfg.initial_state, cfg.baseline,
                        sectors=cfg.sectors)

print(f"Scenario: {scenario.name}  (each parameter perturbed +-10%)")

groups = {}
for record in records:
    groups.setdefault(record.metric, []).append(record)

for metric, group in groups.items():
    print()
    print(f"metric: {metric}")
    finite = [abs(r.swing) for r in group if not math.isnan(r.swing)]
    largest = max(finite) if finite else 0.0
    for record in group:
        if math.isnan(record.swing):
            print(f"{record.parameter:>16}  [{record.error}]")
            continue
        filled = round(BAR_WIDTH * abs(record.swing) / largest) if largest else 0
        print(f"{record.parameter:>16}  {'#' * filled:<{BAR_WIDTH}}  "
              f"swing {record.swing:+.6g}")

print()
print("A parameter whose perturbation violates a model constraint is")
print("reported in place rather than silently dropped.")
