"""Locally and absolutely maximally entangled states, stabilizers, graph states.

Checks the LME/AME predicates on named constructions, exercises the GHZ
stabilizer family, and prints the AME existence table with the rule that
decided each cell.
"""

import numpy as np

import entkit as ek
from entkit.special import ghz_stabilizer_elements, stabilizes

print("Locally maximally entangled (every single-party marginal = I/d):")
cases = {
    "Bell": ek.bell_state(2),
    "GHZ(3 qubits)": ek.ghz_state(3, 2),
    "W": ek.w_state(),
    "five-qubit LME": ek.psi25_state(),
}
for name, psi in cases.items():
    print(f"  {name:15s} LME = {ek.is_lme(psi)}")

print()
print("Absolutely maximally entangled (all reductions up to N/2 maximally mixed):")
for name, psi in (
    ("GHZ(3 qubits)", ek.ghz_state(3, 2)),
    ("GHZ(4 qubits)", ek.ghz_state(4, 2)),
    ("Bell", ek.bell_state(2)),
):
    print(f"  {name:15s} AME = {ek.is_ame(psi)}")

print()
print("The GHZ stabilizer family (flip element and a one-parameter phase family):")
ghz = ek.ghz_state(3, 2)
flip, phase = ghz_stabilizer_elements(0.8, -1.3)
print("  sx x sx x sx fixes GHZ:", stabilizes(flip, ghz))
print("  phase element (0.8, -1.3) fixes GHZ:", stabilizes(phase, ghz))
print("  full check over arbitrary phases:", ek.ghz_stabilizer_check(np.pi / 7, 2.1))

print()
print("Ring graph states are LME; the five-qubit ring is even AME:")
for m in (3, 4, 5):
    adj = np.zeros((m, m), dtype=int)
    for i in range(m):
        adj[i, (i + 1) % m] = adj[(i + 1) % m, i] = 1
    g = ek.graph_state(adj)
    print(f"  ring of {m}: LME = {ek.is_lme(g)}, AME = {ek.is_ame(g)}")

print()
print("AME existence facts (verdict and deciding rule):")
for n, d in ((2, 2), (3, 2), (4, 2), (5, 2), (6, 2), (7, 2), (4, 6), (4, 7), (3, 3), (5, 6)):
    v = ek.ame_feasibility(n, d)
    print(f"  n = {n}, d = {d}: {v.feasible.value:10s} [{v.reason}]")
