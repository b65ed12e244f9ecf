"""Spectral radii of a few named families across alpha, next to their closed forms."""
from hyperspec import FamilySpec, closed_form_rho, generate, rho

SPECS = [
    FamilySpec.of("S_nk", n=9, k=3),
    FamilySpec.of("P_nk", n=9, k=3),
    FamilySpec.of("K_nk", n=6, k=3),
    FamilySpec.of("C_n", n=7),
    FamilySpec.of("C_nk", n=8, k=3),
    FamilySpec.of("S_m_n", m=1, n=6),
]
ALPHAS = (0.0, 0.25, 0.5, 0.75)

if __name__ == "__main__":
    print(f"{'family':28s}" + "".join(f"{a:>14}" for a in ALPHAS))
    for spec in SPECS:
        hg = generate(spec)
        vals = [rho(hg, a) for a in ALPHAS]
        print(f"{str(spec):28s}" + "".join(f"{v:14.8f}" for v in vals))
        cf = [closed_form_rho(spec, a) for a in ALPHAS]
        if all(c is not None for c in cf):
            print(f"{'  closed form':28s}" + "".join(f"{c:14.8f}" for c in cf))
