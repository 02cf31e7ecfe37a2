# %% [markdown]
# # Growth of f(n)/n by residue class
#
# Along each class mod 4, `f(n)/n` appears to settle near `1/8, 0, -1/8, -1/4`.
# The trend table averages the ratio over the top tenth of the range.

# %%
from qfloor.identities import f_series, residue_class_trend

for row in residue_class_trend(10_000):
    print(f"class {row.residue}: mean {row.mean_ratio:+.5f}  target {row.target:+.3f}  deviation {row.deviation:+.5f}")

# %% [markdown]
# The full series is what a scatter plot of `f(n)/n` would use; the CLI
# writes it as CSV (`qfloor figure --max 10000 --out f.csv`).

# %%
rows = f_series(40)
for row in rows[:12]:
    print(row.n, row.f, row.ratio)

# %%
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    data = f_series(3000)
    fig, ax = plt.subplots(figsize=(7, 3))
    for r, color in zip(range(4), ("C0", "C1", "C2", "C3")):
        pts = [(row.n, float(row.f) / row.n) for row in data if row.n % 4 == r]
        ax.scatter(*zip(*pts), s=1, color=color, label=f"n = {r} mod 4")
    ax.legend(markerscale=8)
    fig.savefig("f_ratio.png", dpi=120)
    print("saved f_ratio.png")
except ImportError:
    print("matplotlib not installed; skipping the plot")
