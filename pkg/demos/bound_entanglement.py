"""A state every reduction certifies as clean -- that is entangled anyway.

The witness is one-sided: a failed PPT check on any reduction proves
entanglement, but passing all of them proves nothing.  The sharpest
illustration is the normalized projector onto the complement of the
unextendible product basis

    |0,1,+>,  |1,+,0>,  |+,0,1>,  |-,-,->

No product state is orthogonal to all four members, which forces the
complement state to be entangled, yet the state is PPT across every
bipartition: all six reductions sail through the PPT test and the
witness reports INCONCLUSIVE.  This is exactly why INCONCLUSIVE must
never be read as "separable".

Run:  python demos/bound_entanglement.py
"""

import numpy as np

from entcheck import necessary_condition_holds, upb_state, witness_tripartite

rho = upb_state()
print("complement-of-UPB state, diagonal:", np.round(np.diag(rho.mat).real, 4))
print("trace:", round(np.trace(rho.mat).real, 12))

report = witness_tripartite(rho)
print("\nPPT verdicts:")
for v in report.verdicts:
    print(f"  {v.label.text:<6} min PT eigenvalue {v.min_pt_eigenvalue:+.6f}   "
          f"{'separable' if v.separable else 'ENTANGLED'}")

print(f"\nwitness conclusion: {report.conclusion}")
print("necessary condition for separability holds:", necessary_condition_holds(rho))
print()
print("Every reduction passes, so the witness cannot decide -- and indeed it")
print("must not: the state is a known bound entangled state.  Passing every")
print("PPT check is necessary for separability, not sufficient.")
