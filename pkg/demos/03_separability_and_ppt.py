"""Partition lattice, producibility classification and PPT structure.

Classifies pure states by their finest product partition, then walks the two
famous bound-entangled mixed states: the projector complementary to an
unextendible product basis (PPT across every cut yet entangled) and the
four-qubit Smolin state (separable across pair cuts, entangled across
single-party cuts).
"""

import numpy as np

import entkit as ek

print("All partitions of three parties:")
for part in ek.enumerate_partitions(3):
    print("  ", part)

print()
print("Finest product partition and producibility:")
cases = {
    "|000>": ek.basis_state([2, 2, 2], [0, 0, 0]),
    "|a> x Bell": ek.product_state(ek.random_pure_state([2], rng=0), ek.bell_state(2)),
    "GHZ": ek.ghz_state(3, 2),
    "Bell x Bell": ek.product_state(ek.bell_state(2), ek.bell_state(2)),
}
for name, psi in cases.items():
    rep = ek.classify_pure(psi)
    print(f"  {name:12s} finest = {rep.finest_product_partition}  "
          f"M = {rep.producibility_m}  genuine = {rep.genuinely_multipartite}")

print()
print("PPT across each cut (True is necessary for separability):")
upb = ek.upb_state()
print("  UPB complement state:")
for part, flag in ek.ppt_all_bipartitions(upb).items():
    print(f"    {str(part):10s} PPT = {flag}")
print("  ... yet no product vector is orthogonal to the UPB, so it is entangled:")
print("    unextendible:", ek.upb_unextendibility_check(ek.upb_basis(), restarts=100, rng=0))

print()
print("  Smolin state (pair cuts separable, single-party cuts NPT):")
for part, flag in ek.ppt_all_bipartitions(ek.smolin_state()).items():
    _, mineig = ek.ppt_check(ek.smolin_state(), part)
    print(f"    {str(part):10s} PPT = {str(flag):5s} min eig = {mineig:+.4f}")

print()
print("A noisy GHZ family crosses the PPT boundary as noise grows:")
ghz_proj = ek.ghz_state(3, 2).density().matrix
for p in (0.0, 0.2, 0.4, 0.6, 0.8, 1.0):
    rho = ek.DensityMatrix((1 - p) * ghz_proj + p * np.eye(8) / 8, (2, 2, 2))
    flag, mineig = ek.ppt_check(rho, ek.Partition(((0,), (1, 2))))
    print(f"  p = {p:.1f}: PPT = {str(flag):5s} min eig = {mineig:+.4f}")
