#include "orbitscope/permutation.hpp"

#include <numeric>
#include <sstream>

#include "orbitscope/errors.hpp"

namespace orbitscope {

Permutation::Permutation(std::vector<VertexId> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (VertexId v : image_) {
    if (v < 0 || static_cast<std::size_t>(v) >= image_.size() ||
        seen[static_cast<std::size_t>(v)]) {
      throw InvariantViolation("permutation image is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<VertexId> image(n);
  std::iota(image.begin(), image.end(), 0);
  Permutation p;
  p.image_ = std::move(image);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != static_cast<VertexId>(i)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.image_.resize(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) {
    inv.image_[static_cast<std::size_t>(image_[i])] = static_cast<VertexId>(i);
  }
  return inv;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw SizeMismatch("composing permutations of different degree");
  Permutation r;
  r.image_.resize(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r.image_[i] = p(q.image_[i]);
  return r;
}

std::string Permutation::cycle_string() const {
  std::ostringstream out;
  std::vector<bool> done(image_.size(), false);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (done[start] || image_[start] == static_cast<VertexId>(start)) continue;
    out << '(';
    std::size_t v = start;
    bool first = true;
    while (!done[v]) {
      done[v] = true;
      if (!first) out << ' ';
      out << v;
      first = false;
      v = static_cast<std::size_t>(image_[v]);
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

}  // namespace orbitscope
