#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace orbitscope {

using VertexId = std::int32_t;

// A bijection on [0, n), stored as its image sequence.
class Permutation {
 public:
  Permutation() = default;
  // Throws InvariantViolation if `image` is not a bijection on [0, size).
  explicit Permutation(std::vector<VertexId> image);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return image_.size(); }
  VertexId operator()(VertexId v) const { return image_[static_cast<std::size_t>(v)]; }
  std::span<const VertexId> image() const { return image_; }

  bool is_identity() const;
  Permutation inverse() const;

  // (p * q)(v) = p(q(v)): q is applied first.
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  // Disjoint-cycle notation with fixed points omitted, e.g. "(0 2)(1 3)".
  // The identity prints as "()".
  std::string cycle_string() const;

 private:
  std::vector<VertexId> image_;
};

}  // namespace orbitscope
