#include "orbitscope/refinement.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <map>
#include <memory>

#include "hash.hpp"
#include "orbitscope/errors.hpp"

namespace orbitscope {
namespace {

using detail::hash_combine;
using detail::hash_range;

std::uint64_t key_fingerprint(std::span<const std::uint64_t> parts) {
  std::uint64_t h = 0x13198a2e03707344ULL;
  for (auto part : parts) h = hash_combine(h, part);
  return h;
}

// Canonical ids for arbitrary initial keys: ids follow key order. Keys
// whose parts fit a mixed-radix word are packed first, which keeps the
// order and makes the sort cheap.
template <typename Key>
void compact_keys(const std::vector<Key>& keys, std::vector<ColorId>& colors,
                  std::vector<std::uint64_t>& fingerprints) {
  constexpr std::size_t len = std::tuple_size_v<Key>;
  std::uint64_t base = 1;
  for (const Key& key : keys) {
    for (auto part : key) base = std::max<std::uint64_t>(base, part + 1);
  }
  bool packable = true;
  {
    std::uint64_t span = 1;
    for (std::size_t i = 0; i < len && packable; ++i) {
      packable = span <= std::numeric_limits<std::uint64_t>::max() / base;
      span *= base;
    }
  }
  colors.resize(keys.size());
  if (packable) {
    std::vector<std::uint64_t> packed(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
      std::uint64_t w = 0;
      for (auto part : keys[i]) w = w * base + part;
      packed[i] = w;
    }
    std::vector<std::uint64_t> distinct(packed);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t i = 0; i < keys.size(); ++i) {
      colors[i] = static_cast<ColorId>(
          std::lower_bound(distinct.begin(), distinct.end(), packed[i]) - distinct.begin());
    }
    fingerprints.resize(distinct.size());
    for (std::size_t c = 0; c < distinct.size(); ++c) {
      std::array<std::uint64_t, len> parts{};
      std::uint64_t w = distinct[c];
      for (std::size_t i = len; i-- > 0;) {
        parts[i] = w % base;
        w /= base;
      }
      fingerprints[c] = key_fingerprint(parts);
    }
    return;
  }
  std::vector<Key> distinct(keys);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    colors[i] = static_cast<ColorId>(std::lower_bound(distinct.begin(), distinct.end(), keys[i]) -
                                     distinct.begin());
  }
  fingerprints.resize(distinct.size());
  for (std::size_t c = 0; c < distinct.size(); ++c) fingerprints[c] = key_fingerprint(distinct[c]);
}

// Iterated signature refinement over `cells` cells. Each round the filler
// writes `arity` codes for a cell, built from the current colors; the
// sorted codes form the cell's multiset. New colors are ranked by (old
// color, multiset fingerprint, multiset), so the ranking is a function of
// the multisets only and therefore relabeling-equivariant.
class CellRefiner {
 public:
  using Filler = std::function<void(std::size_t cell, const std::vector<ColorId>& colors,
                                    std::size_t color_count, std::uint64_t* out)>;

  CellRefiner(std::vector<ColorId> colors, std::vector<std::uint64_t> fingerprints,
              std::size_t arity)
      : colors_(std::move(colors)), fingerprints_(std::move(fingerprints)), arity_(arity) {
    trace_ = hash_range(fingerprints_);
  }

  void run(const Filler& fill, std::size_t max_rounds) {
    const std::size_t cells = colors_.size();
    // Every code is written before it is read; skip zero-filling.
    std::unique_ptr<std::uint64_t[]> codes(new std::uint64_t[cells * arity_]);
    std::vector<ColorId> next(cells);

    std::vector<Entry> entries(cells);

    while (true) {
      if (rounds_ >= max_rounds) {
        throw RoundCapExceeded("refinement did not stabilize within " +
                               std::to_string(max_rounds) + " rounds");
      }
      ++rounds_;
      const std::size_t count = fingerprints_.size();
      for (std::size_t c = 0; c < cells; ++c) {
        std::uint64_t* seg = codes.get() + c * arity_;
        fill(c, colors_, count, seg);
        std::sort(seg, seg + arity_);
        entries[c] = {colors_[c], run_length_hash(seg, arity_), c};
      }
      auto segment = [&](std::size_t c) {
        return std::span<const std::uint64_t>(codes.get() + c * arity_, arity_);
      };
      std::sort(entries.begin(), entries.end());
      // Equal hashes are confirmed against the run's first multiset; a
      // collision reorders that run by the multisets themselves.
      for (std::size_t lo = 0; lo < cells;) {
        std::size_t hi = lo + 1;
        bool collision = false;
        while (hi < cells && entries[hi].color == entries[lo].color &&
               entries[hi].hash == entries[lo].hash) {
          collision = collision || !std::ranges::equal(segment(entries[hi].cell),
                                                       segment(entries[lo].cell));
          ++hi;
        }
        if (collision) {
          std::stable_sort(entries.begin() + lo, entries.begin() + hi,
                           [&](const Entry& a, const Entry& b) {
                             auto sa = segment(a.cell);
                             auto sb = segment(b.cell);
                             return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(),
                                                                 sb.end());
                           });
        }
        lo = hi;
      }

      std::vector<std::uint64_t> next_fp;
      next_fp.reserve(count);
      std::uint64_t round_trace = hash_combine(trace_, rounds_);
      std::size_t run_size = 0;
      for (std::size_t i = 0; i < cells; ++i) {
        const Entry& e = entries[i];
        bool fresh = i == 0;
        if (!fresh) {
          const Entry& p = entries[i - 1];
          fresh = p.color != e.color || p.hash != e.hash ||
                  !std::ranges::equal(segment(p.cell), segment(e.cell));
        }
        if (fresh) {
          if (i > 0) round_trace = hash_combine(round_trace, run_size);
          run_size = 0;
          next_fp.push_back(hash_combine(fingerprints_[e.color], e.hash));
          round_trace = hash_combine(round_trace, next_fp.back());
        }
        ++run_size;
        next[e.cell] = static_cast<ColorId>(next_fp.size() - 1);
      }
      round_trace = hash_combine(round_trace, run_size);
      trace_ = round_trace;

      // The new coloring refines the old one; equal counts mean no split,
      // and the ranking keeps every id in place.
      if (next_fp.size() == count) break;
      colors_.swap(next);
      fingerprints_ = std::move(next_fp);
    }
  }

  const std::vector<ColorId>& colors() const { return colors_; }
  const std::vector<std::uint64_t>& fingerprints() const { return fingerprints_; }
  std::size_t rounds() const { return rounds_; }
  std::uint64_t trace() const { return trace_; }

 private:
  struct Entry {
    ColorId color;
    std::uint64_t hash;
    std::size_t cell;
    friend auto operator<=>(const Entry&, const Entry&) = default;
  };

  // Hash of a sorted multiset through its run-length encoding.
  static std::uint64_t run_length_hash(const std::uint64_t* seg, std::size_t len) {
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    for (std::size_t i = 0; i < len;) {
      std::size_t j = i + 1;
      while (j < len && seg[j] == seg[i]) ++j;
      h = hash_combine(h, seg[i] * 0x9e3779b97f4a7c15ULL + (j - i));
      i = j;
    }
    return h;
  }

  std::vector<ColorId> colors_;
  std::vector<std::uint64_t> fingerprints_;
  std::size_t arity_;
  std::size_t rounds_ = 0;
  std::uint64_t trace_ = 0;
};

void validate_config(const Graph& g, const RefinementConfig& cfg) {
  if (cfg.k < 1 || cfg.k > 3) {
    throw RangeError("refinement dimension k must be 1, 2 or 3, got " + std::to_string(cfg.k));
  }
  if (cfg.k == 3 && g.order() > kMaxOrderForK3) {
    throw RangeError("k = 3 refinement is limited to graphs with at most " +
                     std::to_string(kMaxOrderForK3) + " vertices");
  }
}

std::size_t default_round_cap(const Graph& g, int k, std::size_t extra_colors) {
  const std::size_t n = std::max<std::size_t>(g.order(), 1);
  const std::size_t c = g.color_count() + extra_colors;
  return (k == 1 ? n : n * n) * std::max<std::size_t>(c, 1) + 1;
}

// Refines g with `fixes` individualized: the i-th fix gets vertex color
// color_count() + i, exactly what folding individualize() produces up to
// an order-preserving renaming of color ids.
StableColoring refine_impl(const Graph& g, std::span<const VertexId> fixes,
                           const RefinementConfig& cfg) {
  validate_config(g, cfg);
  const std::size_t n = g.order();
  std::vector<std::uint64_t> diag(n);
  for (std::size_t v = 0; v < n; ++v) diag[v] = g.vertex_color(static_cast<VertexId>(v));
  for (std::size_t i = 0; i < fixes.size(); ++i) {
    diag[static_cast<std::size_t>(fixes[i])] = g.color_count() + i;
  }
  auto at = [&](std::size_t u, std::size_t v) -> std::uint64_t {
    return u == v ? diag[u] : g.at(static_cast<VertexId>(u), static_cast<VertexId>(v));
  };
  const std::size_t cap =
      cfg.max_rounds ? cfg.max_rounds : default_round_cap(g, cfg.k, fixes.size());

  StableColoring out;
  if (n == 0) {
    out.trace = detail::splitmix64(0);
    return out;
  }

  if (cfg.k == 1) {
    std::vector<std::array<std::uint64_t, 1>> keys(n);
    for (std::size_t v = 0; v < n; ++v) keys[v] = {diag[v]};
    std::vector<ColorId> colors;
    std::vector<std::uint64_t> fps;
    compact_keys(keys, colors, fps);
    const std::uint64_t palette = g.color_count() + fixes.size();
    CellRefiner refiner(std::move(colors), std::move(fps), n);
    refiner.run(
        [&](std::size_t v, const std::vector<ColorId>& c, std::size_t count, std::uint64_t* out) {
          for (std::size_t w = 0; w < n; ++w) {
            out[w] = (at(v, w) * palette + at(w, v)) * count + c[w];
          }
        },
        cap);
    std::vector<std::int64_t> labels(refiner.colors().begin(), refiner.colors().end());
    out.vertex_partition = OrderedPartition::from_labels(labels);
    out.rounds_used = refiner.rounds();
    out.trace = refiner.trace();
    for (const auto& members : out.vertex_partition.classes()) {
      out.signatures.push_back(
          refiner.fingerprints()[refiner.colors()[static_cast<std::size_t>(members.front())]]);
    }
    return out;
  }

  if (cfg.k == 2) {
    // Key order puts the diagonal first, sorted by vertex color, so vertex
    // classes come out ordered by vertex color.
    std::vector<std::array<std::uint64_t, 5>> keys(n * n);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        keys[u * n + v] = {u == v ? 0u : 1u, diag[u], at(u, v), at(v, u), diag[v]};
      }
    }
    std::vector<ColorId> colors;
    std::vector<std::uint64_t> fps;
    compact_keys(keys, colors, fps);
    std::vector<ColorId> transposed(n * n);
    CellRefiner refiner(std::move(colors), std::move(fps), n);
    refiner.run(
        [&](std::size_t cell, const std::vector<ColorId>& c, std::size_t count,
            std::uint64_t* out) {
          // Cells are visited in index order, so cell 0 opens a round.
          if (cell == 0) {
            for (std::size_t a = 0; a < n; ++a) {
              for (std::size_t b = 0; b < n; ++b) transposed[b * n + a] = c[a * n + b];
            }
          }
          const std::size_t u = cell / n;
          const std::size_t v = cell % n;
          const ColorId* row_u = c.data() + u * n;
          const ColorId* col_v = transposed.data() + v * n;
          for (std::size_t w = 0; w < n; ++w) {
            out[w] = static_cast<std::uint64_t>(row_u[w]) * count + col_v[w];
          }
        },
        cap);
    out.pair_coloring = refiner.colors();
    std::vector<std::int64_t> labels(n);
    for (std::size_t v = 0; v < n; ++v) labels[v] = out.pair_coloring[v * n + v];
    out.vertex_partition = OrderedPartition::from_labels(labels);
    out.rounds_used = refiner.rounds();
    out.trace = refiner.trace();
    for (const auto& members : out.vertex_partition.classes()) {
      const auto v = static_cast<std::size_t>(members.front());
      out.signatures.push_back(refiner.fingerprints()[out.pair_coloring[v * n + v]]);
    }
    return out;
  }

  // k == 3: cells are ordered triples (u, v, w) at index (u * n + v) * n + w.
  const std::size_t n3 = n * n * n;
  std::vector<std::array<std::uint64_t, 10>> keys(n3);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t w = 0; w < n; ++w) {
        const std::uint64_t pattern = 7u - ((u == v ? 1u : 0u) | (u == w ? 2u : 0u) |
                                            (v == w ? 4u : 0u));
        keys[(u * n + v) * n + w] = {pattern,  diag[u],  diag[v],  diag[w],  at(u, v),
                                     at(v, u), at(u, w), at(w, u), at(v, w), at(w, v)};
      }
    }
  }
  std::vector<ColorId> colors;
  std::vector<std::uint64_t> fps;
  compact_keys(keys, colors, fps);
  CellRefiner refiner(std::move(colors), std::move(fps), n);
  refiner.run(
      [&](std::size_t cell, const std::vector<ColorId>& c, std::size_t count,
          std::uint64_t* out) {
        const std::size_t w = cell % n;
        const std::size_t v = (cell / n) % n;
        const std::size_t u = cell / (n * n);
        for (std::size_t x = 0; x < n; ++x) {
          const std::uint64_t a = c[(x * n + v) * n + w];
          const std::uint64_t b = c[(u * n + x) * n + w];
          const std::uint64_t d = c[(u * n + v) * n + x];
          out[x] = (a * count + b) * count + d;
        }
      },
      cap);
  std::vector<std::int64_t> labels(n);
  for (std::size_t v = 0; v < n; ++v) labels[v] = refiner.colors()[(v * n + v) * n + v];
  out.vertex_partition = OrderedPartition::from_labels(labels);
  out.pair_coloring.resize(n * n);
  // Pair colors of a triple coloring: the color of (u, v, v) determines
  // the restriction to pairs.
  {
    std::vector<std::int64_t> pair_labels(n * n);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) pair_labels[u * n + v] = refiner.colors()[(u * n + v) * n + v];
    }
    auto pp = OrderedPartition::from_labels(pair_labels);
    for (std::size_t i = 0; i < n * n; ++i) {
      out.pair_coloring[i] = static_cast<ColorId>(pp.class_of(static_cast<VertexId>(i)));
    }
  }
  out.rounds_used = refiner.rounds();
  out.trace = refiner.trace();
  for (const auto& members : out.vertex_partition.classes()) {
    const auto v = static_cast<std::size_t>(members.front());
    out.signatures.push_back(refiner.fingerprints()[refiner.colors()[(v * n + v) * n + v]]);
  }
  return out;
}

void validate_fixes(const Graph& g, std::span<const VertexId> fixes) {
  std::vector<bool> seen(g.order(), false);
  for (VertexId v : fixes) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.order()) {
      throw RangeError("fix vertex " + std::to_string(v) + " out of range");
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw InvariantViolation("vertex " + std::to_string(v) + " fixed twice");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

}  // namespace

StableColoring refine(const Graph& g, const RefinementConfig& cfg) {
  return refine_impl(g, {}, cfg);
}

Graph individualize(const Graph& g, VertexId v) {
  const std::size_t n = g.order();
  if (v < 0 || static_cast<std::size_t>(v) >= n) {
    throw RangeError("vertex " + std::to_string(v) + " out of range");
  }
  std::vector<std::uint64_t> labels(n * n);
  const auto palette = g.palette();
  for (std::size_t i = 0; i < n * n; ++i) labels[i] = palette[g.matrix()[i]];
  const std::uint64_t fresh = palette.empty() ? 0 : palette.back() + 1;
  labels[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(v)] = fresh;
  return Graph::from_labels(n, labels);
}

StableColoring refine_with_fixes(const Graph& g, std::span<const VertexId> fixes,
                                 const RefinementConfig& cfg) {
  validate_fixes(g, fixes);
  return refine_impl(g, fixes, cfg);
}

// Direct multiset comparison, independent of CellRefiner.
bool is_stable(const Graph& g, const StableColoring& coloring, const RefinementConfig& cfg) {
  if (cfg.k == 3) throw RangeError("stability check is available for k = 1 and k = 2 only");
  const std::size_t n = g.order();
  if (cfg.k == 1) {
    const auto& p = coloring.vertex_partition;
    for (const auto& members : p.classes()) {
      for (VertexId v : members) {
        if (g.vertex_color(v) != g.vertex_color(members.front())) return false;
      }
      std::vector<std::tuple<ColorId, ColorId, ClassId>> first;
      for (VertexId v : members) {
        std::vector<std::tuple<ColorId, ColorId, ClassId>> ms;
        for (std::size_t w = 0; w < n; ++w) {
          if (static_cast<VertexId>(w) == v) continue;
          ms.emplace_back(g.at(v, static_cast<VertexId>(w)), g.at(static_cast<VertexId>(w), v),
                          p.class_of(static_cast<VertexId>(w)));
        }
        std::sort(ms.begin(), ms.end());
        if (v == members.front()) {
          first = std::move(ms);
        } else if (ms != first) {
          return false;
        }
      }
    }
    return true;
  }
  const auto& pc = coloring.pair_coloring;
  if (pc.size() != n * n) return false;
  std::map<ColorId, ColorId> input_color;
  std::map<ColorId, std::vector<std::pair<ColorId, ColorId>>> reference;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const ColorId original = g.at(static_cast<VertexId>(u), static_cast<VertexId>(v));
      if (input_color.try_emplace(pc[u * n + v], original).first->second != original) return false;
      std::vector<std::pair<ColorId, ColorId>> ms;
      for (std::size_t w = 0; w < n; ++w) ms.emplace_back(pc[u * n + w], pc[w * n + v]);
      std::sort(ms.begin(), ms.end());
      auto [it, inserted] = reference.try_emplace(pc[u * n + v], ms);
      if (!inserted && it->second != ms) return false;
    }
  }
  return true;
}

}  // namespace orbitscope
