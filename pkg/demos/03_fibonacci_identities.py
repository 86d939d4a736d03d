# Fibonacci numbers, binomial coefficients and their r-part generalization
#
# With b = (1, 1) the compositions use parts 1 and 2 only; their number is a
# Fibonacci number and the count with a fixed number of parts is a binomial
# coefficient. With b = (1, ..., 1) of length r the totals are the
# r-generalized Fibonacci numbers.

import math

from gencomp import (
    count_compositions,
    fibonacci_via_binomials,
    r_fibonacci,
    r_fibonacci_via_coefficients,
)

for k in range(1, 7):
    print(k, [count_compositions((1, 1), k, k + n) for n in range(k + 1)],
          [math.comb(k, n) for n in range(k + 1)])

print("Fibonacci via binomials:", [fibonacci_via_binomials(n) for n in range(1, 16)])

for r in range(2, 6):
    seq = [r_fibonacci(r, m) for m in range(12)]
    alt = [r_fibonacci_via_coefficients(r, m) for m in range(1, 12)]
    print(f"r={r}:", seq, seq[1:] == alt)
