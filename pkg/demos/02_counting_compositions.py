# Counting generalized compositions
#
# C(k, n): compositions of n into exactly k parts, built by dynamic programming
# over the last part. F_n: compositions of n into any number of parts, from a
# linear recurrence with a window of r previous values.

from gencomp import build_count_table, count_all, count_all_via_coefficients, count_compositions

b = (2, 1)

print("C(2, 3) =", count_compositions(b, 2, 3))  # (1a,2) (1b,2) (2,1a) (2,1b)
print("C(3, 3) =", count_compositions(b, 3, 3))  # b_1^3

table = build_count_table(b, 8)
for n in range(1, 9):
    row = [table[k, n] for k in range(1, n + 1)]
    print(f"n={n}: {row}  total={table.total(n)}")

# the same totals from the recurrence and from summing polynomial coefficients
print([count_all(b, n) for n in range(0, 12)])
print([count_all_via_coefficients(b, n) for n in range(1, 12)])

# exact at any size
big = count_all((3, 2, 1), 500)
print(len(str(big)), "digits")
