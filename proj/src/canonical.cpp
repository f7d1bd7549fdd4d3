#include "bentcay/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

#include "bentcay/graph6.hpp"

namespace bentcay {

namespace {

// Ordered partition of the vertex set. Cells are contiguous ranges of `order`,
// identified by their start position.
struct Partition {
  std::vector<std::uint32_t> order;       // position -> vertex
  std::vector<std::uint32_t> position;    // vertex -> position
  std::vector<std::uint32_t> cell_start;  // position -> start of its cell
  std::vector<std::uint32_t> cell_end;    // valid at cell starts: one past the last position
  std::size_t cells = 0;

  std::size_t size() const { return order.size(); }
  bool discrete() const { return cells == order.size(); }
};

// Isomorphism-invariant summary of one search node: cell count first, then the
// hashed refinement trace.
struct NodeInvariant {
  std::size_t cells = 0;
  std::uint64_t trace = 0;
  friend auto operator<=>(const NodeInvariant&, const NodeInvariant&) = default;
};

inline void mix(std::uint64_t& h, std::uint64_t value) {
  h ^= value + 0x9e3779b97f4a7c15ULL + (h << 12) + (h >> 4);
  h *= 0xff51afd7ed558ccdULL;
}

struct Leaf {
  std::vector<NodeInvariant> invariants;
  std::vector<std::uint32_t> path;   // individualized vertices, root to leaf
  std::vector<std::uint32_t> order;  // canonical position -> vertex
  std::vector<BitVector> rows;       // adjacency in canonical order
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

class Canonicalizer {
 public:
  Canonicalizer(const DenseGraph& g, std::span<const Permutation> seeds) : g_(g), v_(g.order()) {
    for (const auto& p : seeds) {
      if (!is_automorphism(g, p)) throw std::invalid_argument("seed permutation is not an automorphism");
      generators_.push_back(p);
    }
  }

  std::vector<std::size_t> run() {
    if (v_ == 0) return {};
    Partition root = initial_partition();
    NodeInvariant inv = refine_from_all(root);
    path_.clear();
    invariants_.assign(1, inv);
    explore(root, 0);
    return {best_->order.begin(), best_->order.end()};
  }

  CanonicalStats stats;

 private:
  Partition initial_partition() const {
    Partition p;
    p.order.resize(v_);
    p.position.resize(v_);
    p.cell_start.resize(v_);
    p.cell_end.assign(v_, 0);
    std::vector<std::size_t> degree(v_);
    for (std::size_t i = 0; i < v_; ++i) degree[i] = g_.degree(i);
    std::iota(p.order.begin(), p.order.end(), 0U);
    std::stable_sort(p.order.begin(), p.order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return degree[a] < degree[b]; });
    std::size_t start = 0;
    for (std::size_t i = 0; i < v_; ++i) {
      p.position[p.order[i]] = static_cast<std::uint32_t>(i);
      if (i > 0 && degree[p.order[i]] != degree[p.order[i - 1]]) {
        p.cell_end[start] = static_cast<std::uint32_t>(i);
        start = i;
        ++p.cells;
      }
      p.cell_start[i] = static_cast<std::uint32_t>(start);
    }
    p.cell_end[start] = static_cast<std::uint32_t>(v_);
    ++p.cells;
    return p;
  }

  NodeInvariant refine_from_all(Partition& p) {
    std::vector<std::uint32_t> queue;
    for (std::uint32_t s = 0; s < v_; s = p.cell_end[s]) queue.push_back(s);
    std::uint64_t h = 0x51ed270b27e1f0c3ULL;
    for (std::uint32_t s = 0; s < v_; s = p.cell_end[s]) {
      mix(h, s);
      mix(h, g_.degree(p.order[s]));
    }
    return refine(p, std::move(queue), h);
  }

  // Refines p to the coarsest equitable partition finer than p, starting from the
  // splitter cells in `queue`.
  NodeInvariant refine(Partition& p, std::vector<std::uint32_t> queue, std::uint64_t h) {
    std::vector<char> queued(v_, 0);
    for (auto s : queue) queued[s] = 1;
    std::vector<std::uint32_t> count(v_);
    BitVector splitter(v_);
    std::size_t head = 0;
    while (head < queue.size() && !p.discrete()) {
      const std::uint32_t ws = queue[head++];
      queued[ws] = 0;
      splitter.clear();
      for (std::uint32_t i = ws; i < p.cell_end[ws]; ++i) splitter.set(p.order[i]);
      mix(h, 0xA000000000000000ULL | ws);

      for (std::uint32_t cs = 0; cs < v_;) {
        const std::uint32_t ce = p.cell_end[cs];
        if (ce - cs == 1) {
          cs = ce;
          continue;
        }
        bool uniform = true;
        for (std::uint32_t i = cs; i < ce; ++i) {
          const auto u = p.order[i];
          count[u] = static_cast<std::uint32_t>(g_.neighbours(u).and_count(splitter));
          if (count[u] != count[p.order[cs]]) uniform = false;
        }
        if (uniform) {
          cs = ce;
          continue;
        }
        std::sort(p.order.begin() + cs, p.order.begin() + ce,
                  [&](std::uint32_t a, std::uint32_t b) { return count[a] < count[b]; });
        mix(h, 0xB000000000000000ULL | cs);
        // Split into fragments of equal count, in increasing count order.
        std::vector<std::uint32_t> starts;
        std::uint32_t largest = cs;
        std::uint32_t largest_size = 0;
        for (std::uint32_t i = cs; i < ce;) {
          std::uint32_t j = i;
          while (j < ce && count[p.order[j]] == count[p.order[i]]) ++j;
          starts.push_back(i);
          p.cell_end[i] = j;
          for (std::uint32_t k = i; k < j; ++k) {
            p.cell_start[k] = i;
            p.position[p.order[k]] = k;
          }
          mix(h, (static_cast<std::uint64_t>(count[p.order[i]]) << 32) | (j - i));
          if (j - i > largest_size) {
            largest_size = j - i;
            largest = i;
          }
          i = j;
        }
        p.cells += starts.size() - 1;
        if (queued[cs]) {
          for (auto s : starts) {
            if (!queued[s]) {
              queued[s] = 1;
              queue.push_back(s);
            }
          }
        } else {
          for (auto s : starts) {
            if (s != largest) {
              queued[s] = 1;
              queue.push_back(s);
            }
          }
        }
        cs = ce;
      }
    }
    mix(h, p.cells);
    return {p.cells, h};
  }

  // Makes `vertex` a singleton cell at the front of its cell and refines.
  NodeInvariant individualize(Partition& p, std::uint32_t vertex) {
    const std::uint32_t pos = p.position[vertex];
    const std::uint32_t s = p.cell_start[pos];
    const std::uint32_t e = p.cell_end[s];
    std::swap(p.order[s], p.order[pos]);
    p.position[p.order[s]] = s;
    p.position[p.order[pos]] = pos;
    p.cell_end[s] = s + 1;
    p.cell_end[s + 1] = e;
    for (std::uint32_t k = s + 1; k < e; ++k) p.cell_start[k] = s + 1;
    ++p.cells;
    std::uint64_t h = 0x2545f4914f6cdd1dULL;
    mix(h, s);
    return refine(p, {s}, h);
  }

  std::vector<BitVector> canonical_rows(const Partition& p) const {
    std::vector<BitVector> rows(v_, BitVector(v_));
    for (std::size_t pos = 0; pos < v_; ++pos) {
      const auto& nb = g_.neighbours(p.order[pos]);
      for (std::size_t w = nb.find_first(); w < v_; w = nb.find_next_from(w + 1)) rows[pos].set(p.position[w]);
    }
    return rows;
  }

  static int compare_rows(const std::vector<BitVector>& a, const std::vector<BitVector>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const int c = a[i].compare(b[i]);
      if (c != 0) return c;
    }
    return 0;
  }

  std::size_t divergence(const Leaf& other) const {
    std::size_t i = 0;
    while (i < path_.size() && i < other.path.size() && path_[i] == other.path[i]) ++i;
    return i;
  }

  void record_automorphism(const Leaf& reference, const Partition& p) {
    Permutation gamma(v_);
    for (std::size_t pos = 0; pos < v_; ++pos) gamma[reference.order[pos]] = p.order[pos];
    generators_.push_back(std::move(gamma));
    ++stats.automorphisms_found;
  }

  Leaf make_leaf(const Partition& p, std::vector<BitVector> rows) const {
    return Leaf{invariants_, path_, p.order, std::move(rows)};
  }

  // Lexicographic comparison of the current invariant path with the prefix of a leaf's.
  int compare_prefix(const Leaf& leaf) const {
    const std::size_t n = std::min(invariants_.size(), leaf.invariants.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (invariants_[i] < leaf.invariants[i]) return -1;
      if (leaf.invariants[i] < invariants_[i]) return 1;
    }
    return 0;
  }

  // Returns the level to resume at; a value below `level` abandons this subtree.
  std::size_t process_leaf(const Partition& p, std::size_t level) {
    ++stats.leaves;
    auto rows = canonical_rows(p);
    if (!first_) {
      first_ = make_leaf(p, std::move(rows));
      best_ = *first_;
      return level;
    }
    if (compare_prefix(*first_) == 0 && compare_rows(rows, first_->rows) == 0) {
      record_automorphism(*first_, p);
      return divergence(*first_);
    }
    int c = compare_prefix(*best_);
    if (c == 0) c = compare_rows(rows, best_->rows);
    if (c < 0) {
      best_ = make_leaf(p, std::move(rows));
    } else if (c == 0) {
      record_automorphism(*best_, p);
      return divergence(*best_);
    }
    return level;
  }

  // Explores the subtree of the node at `level`; path_ has `level` entries and
  // invariants_ has level + 1 entries describing p.
  std::size_t explore(const Partition& p, std::size_t level) {
    ++stats.nodes;
    if (p.discrete()) return process_leaf(p, level);

    // First smallest non-singleton cell.
    std::uint32_t target = 0;
    std::uint32_t target_size = 0;
    for (std::uint32_t s = 0; s < v_; s = p.cell_end[s]) {
      const std::uint32_t size = p.cell_end[s] - s;
      if (size > 1 && (target_size == 0 || size < target_size)) {
        target = s;
        target_size = size;
      }
    }
    std::vector<std::uint32_t> children(p.order.begin() + target, p.order.begin() + target + target_size);
    std::sort(children.begin(), children.end());

    std::vector<std::uint32_t> explored;
    std::size_t orbit_generators = 0;
    std::optional<UnionFind> orbits;
    for (auto child : children) {
      if (!explored.empty()) {
        if (generators_.size() != orbit_generators) {
          orbits.emplace(v_);
          for (const auto& gen : generators_) {
            const bool fixes_path =
                std::all_of(path_.begin(), path_.end(), [&](std::uint32_t u) { return gen[u] == u; });
            if (!fixes_path) continue;
            for (std::size_t x = 0; x < v_; ++x) orbits->unite(x, gen[x]);
          }
          orbit_generators = generators_.size();
        }
        if (orbits) {
          const auto root = orbits->find(child);
          const bool seen = std::any_of(explored.begin(), explored.end(),
                                        [&](std::uint32_t u) { return orbits->find(u) == root; });
          if (seen) continue;
        }
      }
      explored.push_back(child);

      Partition q = p;
      const NodeInvariant inv = individualize(q, child);
      path_.push_back(child);
      invariants_.push_back(inv);
      std::size_t resume = level + 1;
      // Subtrees whose invariant path already exceeds the incumbent cannot hold the minimum.
      if (!best_ || compare_prefix(*best_) <= 0) resume = explore(q, level + 1);
      path_.pop_back();
      invariants_.pop_back();
      if (resume < level) return resume;
    }
    return level;
  }

  const DenseGraph& g_;
  std::size_t v_;
  std::vector<Permutation> generators_;
  std::vector<std::uint32_t> path_;
  std::vector<NodeInvariant> invariants_;
  std::optional<Leaf> first_;
  std::optional<Leaf> best_;
};

}  // namespace

bool is_automorphism(const DenseGraph& g, const Permutation& perm) {
  const std::size_t v = g.order();
  if (perm.size() != v) return false;
  std::vector<char> hit(v, 0);
  for (auto x : perm) {
    if (x >= v || hit[x]) return false;
    hit[x] = 1;
  }
  for (std::size_t i = 0; i < v; ++i) {
    const auto& nb = g.neighbours(i);
    if (g.neighbours(perm[i]).count() != nb.count()) return false;
    for (std::size_t j = nb.find_first(); j < v; j = nb.find_next_from(j + 1)) {
      if (!g.adjacent(perm[i], perm[j])) return false;
    }
  }
  return true;
}

CanonicalForm canonical_form(const DenseGraph& g, std::span<const Permutation> known_automorphisms,
                             CanonicalStats* stats) {
  Canonicalizer engine(g, known_automorphisms);
  auto labeling = engine.run();
  if (stats) *stats = engine.stats;
  DenseGraph canon = g.relabeled(labeling);
  std::string g6 = graph6_encode(canon);
  return {std::move(canon), std::move(g6), std::move(labeling)};
}

CanonicalForm canonical_form(const DenseGraph& g) { return canonical_form(g, {}, nullptr); }

bool is_isomorphic(const DenseGraph& g, const DenseGraph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g).g6 == canonical_form(h).g6;
}

}  // namespace bentcay
