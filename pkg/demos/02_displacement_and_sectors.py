#!/usr/bin/env python3
"""From a relative cost shift to sector headcounts and remittances."""

from robolabor import (
    disaggregate_displacement,
    displacement_headcounts,
    labor_demand_ratio,
    load_config,
    remittance_impact,
)

cfg = load_config("default")
baseline = cfg.baseline

print("Displacement (%) as robots get relatively cheaper")
sigmas = [0.5, 0.65, 0.8, 1.2]
print(f"{'cost ratio':>10}  " + "  ".join(f"sigma={s:<4}" for s in sigmas))
for ratio in (1.00, 1.02, 1.05, 1.10, 1.25):
    row = "  ".join(f"{100 * (1 - labor_demand_ratio(ratio, s)):>9.3f}"
                    for s in sigmas)
    print(f"{ratio:>10.2f}  {row}")
print()

rate = 0.032
print(f"National displacement rate: {100 * rate:.1f}%")
print()

print("Sector split (weighted mean reproduces the national rate):")
rates = disaggregate_displacement(rate, cfg.sectors)
for sector in cfg.sectors:
    tag = "residual" if sector.residual else f"x{sector.risk_multiplier:g}"
    print(f"  {sector.name:<16} share {sector.employment_share:>5.3f}  "
          f"rate {100 * rates[sector.name]:>6.3f}%  ({tag})")
mean = sum(s.employment_share * rates[s.name] for s in cfg.sectors)
print(f"  weighted mean: {100 * mean:.6f}%")
print()

counts = displacement_headcounts(rate, baseline)
print(f"Workers displaced: {counts.total:,.0f} total, "
      f"{counts.expat:,.0f} expatriate")
print(f"Construction alone: {counts.by_sector['construction']:,.0f}")
print()

low, high = remittance_impact(rate, baseline)
print(f"Annual remittance outflow reduction: QAR {low / 1e9:.2f}b "
      f"to {high / 1e9:.2f}b")
