#pragma once

#include "palab/algebra.hpp"

namespace palab::fixtures {

// Two-element algebra with n=2: theta(i,j,k) = k when i != j and 1-k when
// i = j; alpha_1 constantly 0, alpha_2(i,j) = [i == j]; e = (0, 1).
inline FiniteAlgebra e45() {
  return make_algebra(2, 2,
                      {1, 0, 0, 1, 0, 1, 1, 0},
                      {{0, 0, 0, 0}, {1, 0, 0, 1}},
                      {0, 1});
}

// The 2-element group as an n=1 algebra: theta = alpha = XOR, e = 0.
inline FiniteAlgebra g2() {
  return make_algebra(2, 1, {0, 1, 1, 0}, {{0, 1, 1, 0}}, {0});
}

// Three-element left semi-loop, n=1, e=0.  Column b of theta is a
// permutation pi_b with pi_0 = id, pi_1 = (0 1), pi_2 = (0 2); every column
// is an involution, so alpha shares the tables.
inline FiniteAlgebra l3() {
  std::vector<int> t = {0, 1, 2, 1, 0, 1, 2, 2, 0};
  return make_algebra(3, 1, t, {t}, {0});
}

// The one-element algebra for a given n.
inline FiniteAlgebra one(int n) {
  std::vector<std::vector<int>> alphas(n, std::vector<int>{0});
  return make_algebra(1, n, {0}, std::move(alphas), std::vector<int>(n, 0));
}

// Cyclic group of order s as an n=1 algebra: theta(a,b) = a+b, alpha(a,b) =
// a-b, e = 0.
inline FiniteAlgebra cyclic_group(int s) {
  std::vector<int> add(s * s), sub(s * s);
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b) {
      add[a * s + b] = (a + b) % s;
      sub[a * s + b] = ((a - b) % s + s) % s;
    }
  return make_algebra(s, 1, std::move(add), {std::move(sub)}, {0});
}

}  // namespace palab::fixtures
