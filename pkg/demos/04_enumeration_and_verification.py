# Brute-force enumeration as an oracle, and the identity checker
#
# Compositions are listed in a fixed order: by the sequence of part values,
# then by type indices. Counting them by brute force gives an independent
# check on the recursions; check_identity runs such comparisons over a grid.

from gencomp import (
    applicable_identities,
    check_identity,
    count_by_enumeration,
    count_compositions,
    enumerate_compositions,
    make_weight_vector,
)

b = make_weight_vector([2, 1])
for comp in enumerate_compositions(b, 3):
    print(comp)

print(count_by_enumeration(b, 6, 4), count_compositions(b, 4, 6))

# only the first few of a huge stream are ever built
for comp in enumerate_compositions((3, 3, 3), 30, limit=3):
    print(comp)

w = make_weight_vector([2, 1, 3])
for name in applicable_identities(w):
    print(check_identity(name, w, n_max=20, k_max=8).summary())
