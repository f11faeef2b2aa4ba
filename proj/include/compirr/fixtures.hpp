#pragma once

#include <random>
#include <vector>

#include "compirr/bipoly.hpp"

namespace compirr::fixtures {

/// Coefficients drawn from field->random, degree at most max_deg.
UniPoly random_uni(FieldRef const & field, long max_deg, std::mt19937_64 & rng);
UniPoly random_nonzero_uni(FieldRef const & field, long max_deg, std::mt19937_64 & rng);

/// X^d + 5X + 5 over the given field.
UniPoly eisenstein_p(FieldRef const & field, long d);

/// a_0 + ... + a_{m-1} Y^{m-1} + (X^d + 5X + 5) Y^m over Q with random
/// a_i of degree <= d - 1 and a_0 != 0.
BiPoly eisenstein(long m, long d, std::mt19937_64 & rng);

/// The same shape with a_{m-1} = -(X^d + 5X + 5) - sum of the lower a_i, so
/// that Y - 1 divides the result. `lower` holds a_0..a_{m-2}.
BiPoly sharpness_one(FieldRef const & field, long m, long d, std::vector<UniPoly> const & lower);
/// a_i = 1 for every i <= m - 2.
BiPoly sharpness_one(FieldRef const & field, long m, long d);

/// Squared leading coefficient used by the g-composition examples:
/// X^n + 5X + 5 in general and X^2 + 1 for GF(3) with n = 2.
UniPoly two_factor_base(FieldRef const & field, long n);

struct Composition {
    BiPoly f;
    BiPoly g;
};

/// f = a_0 + ... + a_{m-1} Y^{m-1} + base^2 Y^m with random a_i of degree
/// <= 2n - 1 (a_0 != 0), and monic g = Y^n + b_{n-1} Y^{n-1} + ... + b_0 with
/// random b_i of degree <= max_b_deg.
Composition two_factor(FieldRef const & field, long m, long n, long max_b_deg, std::mt19937_64 & rng);

/// g = Y^2 and a_{m-1} = -base^2 - sum of a_0..a_{m-2}, so that Y^2 - 1
/// divides f(X, Y^2). `lower` holds a_0..a_{m-2}.
Composition sharpness_two(FieldRef const & field, long m, std::vector<UniPoly> const & lower);
/// a_i = 1 for every i <= m - 2.
Composition sharpness_two(FieldRef const & field, long m);

}  // namespace compirr::fixtures
