"""rho_alpha of the unicyclic graphs on six vertices as alpha runs over [0, 0.9]."""
import numpy as np

from hyperspec import EnumQuery, enumerate_class, rho
from hyperspec.canonical import canonical_code

if __name__ == "__main__":
    members = enumerate_class(EnumQuery.of("Unicyclic", n=6))
    grid = np.linspace(0, 0.9, 10)
    table = np.array([[rho(h, a) for a in grid] for h in members])
    print(f"{len(members)} unicyclic hypergraphs on 6 vertices")
    for a, col in zip(grid, table.T):
        top = members[int(col.argmax())]
        bottom = members[int(col.argmin())]
        print(f"alpha {a:.1f}: max {col.max():.6f} {top.edges}  min {col.min():.6f} {bottom.edges}")
    # every row is non-decreasing in alpha
    assert (np.diff(table, axis=1) >= -1e-10).all()
    print("distinct classes:", len({canonical_code(h) for h in members}))
