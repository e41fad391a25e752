#pragma once

#include <vector>

#include "mahonia/bipoly.hpp"
#include "mahonia/exact_int.hpp"
#include "mahonia/unipoly.hpp"

namespace mahonia {

/// q-factorial [n]_q! = (1+q)(1+q+q^2)...(1+q+...+q^(n-1)).
/// [0]_q! = [1]_q! = 1.
UniPoly q_factorial(unsigned n);

/// Gaussian binomial [n m]_q = [n]_q! / ([n-m]_q! [m]_q!), computed by exact
/// polynomial division; a nonzero remainder is impossible and treated as an
/// internal error. Throws std::domain_error when m > n.
UniPoly gaussian_binomial(unsigned n, unsigned m);

/// The full row [n 0]_q .. [n n]_q via the q-Pascal recurrence
/// [i j]_q = [i-1 j]_q + q^(i-j) [i-1 j-1]_q. Same values as
/// gaussian_binomial, much cheaper when a whole row is needed.
std::vector<UniPoly> gaussian_binomial_row(unsigned n);

/// Number of j-element subsets of {1..n} with element sum k, counted by
/// direct backtracking enumeration. This is an oracle, guarded at 2^25
/// enumerated subsets (n <= 25 by default).
ExactInt subset_sum_count(unsigned n, unsigned j, unsigned k);

/// Coefficient of q^(k - j(j+1)/2) in [n j]_q. Out-of-range (j, k) --
/// j < 1, j > n, k < j(j+1)/2 or k > n(n+1)/2 -- returns 0 by convention so
/// that alternating-sum formulas can index k uniformly.
ExactInt gauss_coefficient_C(unsigned n, unsigned j, unsigned k);

/// Q_n(t,q) = prod_{i=1..n} (1 + t q^i), fully expanded. The coefficient of
/// t^j q^k counts j-element subsets of {1..n} with sum k.
BiPoly cauchy_product(unsigned n);

}  // namespace mahonia
