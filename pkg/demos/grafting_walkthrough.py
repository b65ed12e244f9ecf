"""Walk a 3-uniform loose path to the hyperstar one rewrite at a time.

Each step moves one edge onto the centre vertex, which carries the largest
Perron entry, so rho goes up at every step.
"""
from hyperspec import generate, spectral_radius
from hyperspec import grafting as gr
from hyperspec.canonical import canonical_code

ALPHA = 0.3

if __name__ == "__main__":
    G = generate("P_nk", n=9, k=3)
    target = canonical_code(generate("S_nk", n=9, k=3))
    step = 0
    while True:
        res = spectral_radius(G, ALPHA)
        print(f"step {step}: rho = {res.rho:.10f}  edges = {G.edges}")
        if canonical_code(G) == target:
            break
        u = int(res.vector.argmax())
        # any edge not at u that touches a neighbour of u
        for e in G.edges:
            if u in e:
                continue
            v = next((w for w in e if any(w in f and u in f for f in G.edges)), None)
            if v is not None:
                G = gr.move_edges(G, v, u, [e])
                break
        step += 1
    print("reached the hyperstar S_9,3")
