#include "lie2/graded.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lie2/error.hpp"

namespace lie2 {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.image.resize(static_cast<std::size_t>(n));
  std::iota(p.image.begin(), p.image.end(), 0);
  return p;
}

bool Permutation::is_bijection() const {
  std::vector<char> hit(image.size(), 0);
  for (int v : image) {
    if (v < 0 || v >= size() || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

namespace {

void require_valid(const Permutation& sigma) {
  if (!sigma.is_bijection()) throw InputError("permutation is not a bijection");
}

void require_valid(const GradedSignature& degrees, const Permutation& sigma) {
  if (degrees.size() != sigma.image.size())
    throw InputError("signature has " + std::to_string(degrees.size()) +
                     " slots but permutation has " + std::to_string(sigma.image.size()));
  require_valid(sigma);
}

}  // namespace

Permutation compose(const Permutation& a, const Permutation& b) {
  require_valid(a);
  require_valid(b);
  if (a.size() != b.size()) throw InputError("composing permutations of different sizes");
  Permutation out;
  out.image.resize(b.image.size());
  for (int p = 0; p < b.size(); ++p) out.image[static_cast<std::size_t>(p)] = a(b(p));
  return out;
}

Permutation inverse(const Permutation& p) {
  require_valid(p);
  Permutation out;
  out.image.resize(p.image.size());
  for (int i = 0; i < p.size(); ++i) out.image[static_cast<std::size_t>(p(i))] = i;
  return out;
}

int sgn(const Permutation& sigma) {
  require_valid(sigma);
  return koszul_sign(GradedSignature(sigma.image.size(), 1), sigma);
}

int koszul_sign(const GradedSignature& degrees, const Permutation& sigma) {
  require_valid(degrees, sigma);
  // bubble the reordered word back to x_1..x_n one adjacent swap at a time
  std::vector<int> word = sigma.image;
  int sign = 1;
  for (std::size_t pass = 0; pass < word.size(); ++pass) {
    for (std::size_t p = 0; p + 1 < word.size(); ++p) {
      if (word[p] > word[p + 1]) {
        if ((degrees[static_cast<std::size_t>(word[p])] * degrees[static_cast<std::size_t>(word[p + 1])]) % 2 != 0)
          sign = -sign;
        std::swap(word[p], word[p + 1]);
      }
    }
  }
  return sign;
}

int chi(const GradedSignature& degrees, const Permutation& sigma) {
  return sgn(sigma) * koszul_sign(degrees, sigma);
}

std::vector<Permutation> unshuffles(int j, int n) {
  if (n < 1 || j < 1 || j > n)
    throw InputError("unshuffles(" + std::to_string(j) + "," + std::to_string(n) + ") out of range");
  std::vector<Permutation> out;
  std::vector<char> pick(static_cast<std::size_t>(n), 0);
  std::fill(pick.begin(), pick.begin() + j, 1);
  // prev_permutation over a 1..10..0 mask enumerates first blocks lexicographically
  do {
    Permutation sigma;
    for (int i = 0; i < n; ++i)
      if (pick[static_cast<std::size_t>(i)]) sigma.image.push_back(i);
    for (int i = 0; i < n; ++i)
      if (!pick[static_cast<std::size_t>(i)]) sigma.image.push_back(i);
    out.push_back(std::move(sigma));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

}  // namespace lie2
