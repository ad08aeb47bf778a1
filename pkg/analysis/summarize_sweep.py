import pandas as pd

from addrmap import policy_sort_key

SWEEP_COLUMNS = ["policy", "B", "S", "W", "gbps"]


def summarize_sweep(reports):
    """Uma linha por (política, S, B, W) com GB/s, ordenada por política, B e S."""
    rows = []
    for policy, S, B, report in reports:
        W = report.rst.W if report.rst is not None else None
        rows.append({"policy": str(policy).upper(), "B": int(B), "S": int(S), "W": W, "gbps": float(report.gbps)})
    if not rows:
        return pd.DataFrame(columns=SWEEP_COLUMNS)

    rows.sort(key=lambda r: (policy_sort_key(r["policy"]), r["B"], r["S"], r["W"] or 0))
    return pd.DataFrame(rows, columns=SWEEP_COLUMNS)


def pivot_by_policy(table, B):
    """Tabela S x curva para um burst: uma coluna por política, ou por política e W quando há vários W."""
    subset = table[table["B"] == B]
    if subset["W"].nunique() > 1:
        curve = subset["policy"] + " W=" + subset["W"].astype(str)
    else:
        curve = subset["policy"]
    return subset.assign(curve=curve).pivot_table(index="S", columns="curve", values="gbps", aggfunc="mean", sort=False)
