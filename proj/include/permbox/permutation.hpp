#ifndef PERMBOX_PERMUTATION_HPP
#define PERMBOX_PERMUTATION_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace permbox {

/// A permutation of {0, ..., degree-1}, acting from the right: the image of
/// a point p under g is g[p], and p^(g*h) = (p^g)^h.
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<unsigned> images);

  static Permutation identity(unsigned degree);

  // Cycles use 0-based points; points omitted from every cycle are fixed.
  static Permutation from_cycles(unsigned degree,
                                 const std::vector<std::vector<unsigned>> &cycles);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  unsigned operator[](unsigned point) const { return images_[point]; }
  unsigned apply(unsigned point) const { return images_[point]; }

  bool is_identity() const;

  Permutation inverse() const;

  // Right-action composition: (*this) followed by other.
  Permutation operator*(const Permutation &other) const;

  bool operator==(const Permutation &o) const { return images_ == o.images_; }
  bool operator!=(const Permutation &o) const { return images_ != o.images_; }
  bool operator<(const Permutation &o) const { return images_ < o.images_; }

  const std::vector<unsigned> &images() const { return images_; }

  // Disjoint-cycle form, e.g. "(0 1 2)(3 4)"; "()" for the identity.
  std::string cycle_string() const;

private:
  std::vector<unsigned> images_;
};

} // namespace permbox

#endif
