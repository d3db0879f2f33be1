#pragma once

#include <vector>

namespace lie2 {

/// Degree of each argument slot.
using GradedSignature = std::vector<int>;

/// Bijection on {0,..,n-1}; image[p] is the slot placed at position p, i.e. the
/// reordered list is x_{image[0]}, x_{image[1]}, ...
struct Permutation {
  std::vector<int> image;

  static Permutation identity(int n);
  int size() const { return static_cast<int>(image.size()); }
  int operator()(int p) const { return image[static_cast<std::size_t>(p)]; }
  bool is_bijection() const;
  bool operator==(const Permutation&) const = default;
};

/// (a*b)(p) = a(b(p)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);

int sgn(const Permutation& sigma);

/// epsilon(sigma) with x_1 ^ ... ^ x_n = epsilon * x_{s(1)} ^ ... ^ x_{s(n)} in the free
/// graded-commutative algebra: every adjacent swap of slots with degrees a, b costs (-1)^{ab}.
int koszul_sign(const GradedSignature& degrees, const Permutation& sigma);

/// chi(sigma) = sgn(sigma) * epsilon(sigma).
int chi(const GradedSignature& degrees, const Permutation& sigma);

/// All (j, n-j)-unshuffles (increasing on the first j and on the last n-j positions),
/// in lexicographic order of the chosen first block. j == n yields the identity only.
std::vector<Permutation> unshuffles(int j, int n);

}  // namespace lie2
