# Weight vectors and weighted polynomial coefficients
#
# A weight vector b = (b_1, ..., b_r) says how many distinguishable types
# each part value has. Its generating polynomial is b_1 + b_2 x + ... + b_r x^(r-1);
# the k-th power of that polynomial holds the weighted polynomial coefficients.

from gencomp import from_weights, make_weight_vector, poly_pow, weighted_polynomial_coefficient

b = make_weight_vector([2, 1])  # two kinds of 1, one kind of 2
print("r =", b.r, "weights =", b.weights)

base = from_weights(b)
print("base polynomial coefficients:", base.coeffs)  # 2 + x

for k in range(1, 5):
    print(f"(2 + x)^{k} ->", poly_pow(base, k).coeffs)

# a single coefficient; indices past (r-1)k are simply zero
print("coefficient of x^1 in (2+x)^2:", weighted_polynomial_coefficient(b, 2, 1))
print("coefficient of x^5 in (2+x)^2:", weighted_polynomial_coefficient(b, 2, 5))

# trailing zeros stay on the vector (they set r) but vanish from the polynomial
c = make_weight_vector([1, 1, 0])
print(c.r, from_weights(c).coeffs)
