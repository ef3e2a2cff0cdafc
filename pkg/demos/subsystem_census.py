"""Census of full-rank subsystems and their lattice constants.

For a few small systems, enumerates the reflection-closed full-rank
subsystems, reports each one's type label and coroot-lattice index divisors,
and prints the resulting uniform constant.  Small types are cross-checked
against the brute-force enumeration.

Run:  python3 demos/subsystem_census.py
"""

from rootneg.rootsys import build_root_system
from rootneg.subsystems import (
    full_rank_subsystems,
    n_of_subsystem,
    n_sigma,
)

for name in ("A2", "B2", "G2", "F4"):
    rs = build_root_system(name)
    subs = full_rank_subsystems(rs)
    print(f"{name}: {len(subs)} full-rank subsystems")
    for s in subs:
        n = n_of_subsystem(rs, set(s.roots))
        print(f"  {s.label:8} size {len(s.roots):3}  n = {n}")
    print(f"  uniform constant n_sigma = {n_sigma(rs)}")
    print()

print("cross-check against the exhaustive enumeration:")
for name in ("A2", "B2", "G2", "A1xA1"):
    rs = build_root_system(name)
    fast = sorted(
        (s.label, n_of_subsystem(rs, set(s.roots)))
        for s in full_rank_subsystems(rs, method="bds")
    )
    slow = sorted(
        (s.label, n_of_subsystem(rs, set(s.roots)))
        for s in full_rank_subsystems(rs, method="brute_force")
    )
    verdict = "agree" if fast == slow else "DISAGREE"
    print(f"  {name:6} {verdict}: {fast}")
