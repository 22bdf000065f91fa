"""Recompute the published station tables from the published Weibull parameters.

Run:  python demos/05_reproduce_tables.py
Same as `windassess reproduce-paper` plus the table renderings.
"""
from windassess import WeibullModel, analyze_model, report_table, reproduce_paper
from windassess.published import PARAMS, STATION_ORDER
from windassess.stations import builtin_registry

reg = builtin_registry()
reports = [
    analyze_model(reg[key], WeibullModel(*PARAMS[key][:2]), arithmetic_mean=PARAMS[key][3])
    for key in STATION_ORDER
]
for tid in ("params", "speeds", "metrics", "corrected"):
    print(f"[{tid}]")
    print(report_table(reports, tid, fmt="text"))

check = reproduce_paper()
print(check.to_text().splitlines()[-1])
for cell in check.failures:
    print("FAIL", cell)
