"""Schmidt structure, deterministic LOCC conversion and entanglement catalysis.

Shows the Schmidt vector as the shared marginal spectrum, the majorization
rule for deterministic conversion, and the classic four-level pair that only
becomes convertible with a borrowed catalyst pair.
"""

import numpy as np

import entkit as ek


def correlated(lam):
    d = len(lam)
    amp = np.zeros(d * d, dtype=complex)
    for i, x in enumerate(lam):
        amp[i * d + i] = np.sqrt(x)
    return ek.PureState.normalized(amp, (d, d))


print("Schmidt data of a random two-qutrit state:")
psi = ek.random_pure_state([3, 3], rng=1)
sd = ek.schmidt(psi)
print("  lambda          :", np.round(sd.lam, 6))
print("  marginal spectrum:", np.round(np.sort(
    np.linalg.eigvalsh(ek.partial_trace(psi, [0]).matrix))[::-1], 6))
print("  entropy:", round(ek.entanglement_entropy(psi), 6),
      " rank:", ek.schmidt_rank(psi),
      " tangle:", round(ek.tangle_pure(psi), 6))

print()
print("A Bell state converts to anything; nothing converts to it:")
bell = ek.bell_state(2)
prod = ek.basis_state([2, 2], [0, 0])
print("  Bell -> |00>:", ek.nielsen_convertible(bell, prod))
print("  |00> -> Bell:", ek.nielsen_convertible(prod, bell))

print()
print("The classic catalysis pair (Schmidt vectors):")
src = correlated([0.4, 0.4, 0.1, 0.1])
tgt = correlated([0.5, 0.25, 0.25, 0.0])
print("  source (0.4, 0.4, 0.1, 0.1) -> target (0.5, 0.25, 0.25, 0):",
      ek.nielsen_convertible(src, tgt))
eta = ek.find_catalyst(src, tgt, catalyst_dim=2, grid_resolution=100)
print("  first catalyst on the grid:", eta)
cat = correlated(eta)
print("  with catalyst:", ek.catalysis_convertible(src, tgt, cat))
print("  (the partial sums of target x catalyst now dominate source x catalyst)")

print()
print("GHZ-type cuts: any single party vs the rest of a GHZ state is maximal:")
ghz = ek.ghz_state(3, 2)
for k in range(3):
    part = ek.Partition(((k,), tuple(i for i in range(3) if i != k)))
    print(f"  cut {part}: lambda = {np.round(ek.schmidt_vector(ghz, part)[:2], 3)}, "
          f"tangle = {ek.tangle_pure(ghz, part):.3f}")
