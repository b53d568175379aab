#include "permbox/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace permbox {

Permutation::Permutation(std::vector<unsigned> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (unsigned img : images_) {
    if (img >= images_.size() || seen[img])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[img] = true;
  }
}

Permutation Permutation::identity(unsigned degree) {
  std::vector<unsigned> images(degree);
  for (unsigned i = 0; i < degree; ++i)
    images[i] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(
    unsigned degree, const std::vector<std::vector<unsigned>> &cycles) {
  std::vector<unsigned> images(degree);
  for (unsigned i = 0; i < degree; ++i)
    images[i] = i;
  for (const auto &cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      unsigned from = cycle[k];
      unsigned to = cycle[(k + 1) % cycle.size()];
      if (from >= degree || to >= degree)
        throw std::invalid_argument("cycle point exceeds degree");
      if (images[from] != from)
        throw std::invalid_argument("cycles are not disjoint");
      images[from] = to;
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < degree(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<unsigned> inv(images_.size());
  for (unsigned i = 0; i < degree(); ++i)
    inv[images_[i]] = i;
  Permutation result;
  result.images_ = std::move(inv);
  return result;
}

Permutation Permutation::operator*(const Permutation &other) const {
  if (degree() != other.degree())
    throw std::invalid_argument("degree mismatch in permutation product");
  std::vector<unsigned> images(degree());
  for (unsigned i = 0; i < degree(); ++i)
    images[i] = other.images_[images_[i]];
  Permutation result;
  result.images_ = std::move(images);
  return result;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> done(degree(), false);
  for (unsigned i = 0; i < degree(); ++i) {
    if (done[i] || images_[i] == i)
      continue;
    out += '(';
    unsigned j = i;
    bool first = true;
    do {
      if (!first)
        out += ' ';
      out += std::to_string(j);
      done[j] = true;
      j = images_[j];
      first = false;
    } while (j != i);
    out += ')';
  }
  if (out.empty())
    out = "()";
  return out;
}

} // namespace permbox
