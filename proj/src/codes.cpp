#include "bentcay/codes.hpp"

#include <set>
#include <string>
#include <unordered_set>

#include "bentcay/errors.hpp"

namespace bentcay {

namespace {

// Row b of the returned list is bit b of each point.
std::vector<BitVector> coordinate_rows(int n, const std::vector<Point>& points) {
  std::vector<BitVector> rows(static_cast<std::size_t>(n), BitVector(points.size()));
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (int k = 0; k < n; ++k) {
      if ((points[j] >> k) & 1U) rows[static_cast<std::size_t>(k)].set(j);
    }
  }
  return rows;
}

std::string key_of(const BitVector& v) {
  std::string s(v.size(), '0');
  for (std::size_t i = v.find_first(); i < v.size(); i = v.find_next_from(i + 1)) s[i] = '1';
  return s;
}

}  // namespace

BinaryLinearCode::BinaryLinearCode(std::size_t len, std::vector<BitVector> rows)
    : length(len), gen_rows(std::move(rows)) {
  for (const auto& r : gen_rows) {
    if (r.size() != length) throw DimensionMismatch("generator row length differs from code length");
  }
  dimension = gf2_rank(gen_rows);
}

BinaryLinearCode code_of(const BooleanFunction& f) {
  const auto support = f.support();
  if (support.empty()) throw RangeError("the zero function has no support code");
  return BinaryLinearCode(support.size(), coordinate_rows(f.dimension(), support));
}

WeightDistribution weight_distribution(const BinaryLinearCode& code) {
  if (code.dimension > 24) throw TooLarge("code dimension " + std::to_string(code.dimension) + " exceeds 24");
  WeightDistribution out;
  out[0] = 1;
  if (code.dimension == 0) return out;
  const auto basis = BitMatrix(code.gen_rows).row_echelon_basis();
  // Gray-code walk: each step flips one basis row into the running word.
  BitVector word(code.length);
  const std::uint64_t words = std::uint64_t{1} << basis.size();
  for (std::uint64_t i = 1; i < words; ++i) {
    word ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    ++out[word.count()];
  }
  return out;
}

std::size_t minimum_distance(const WeightDistribution& distribution) {
  for (const auto& [weight, count] : distribution) {
    if (weight != 0 && count != 0) return weight;
  }
  return 0;
}

bool is_projective(const BinaryLinearCode& code) {
  if (code.length == 0) return true;
  if (code.gen_rows.empty()) return false;
  const auto basis = BitMatrix(code.gen_rows).row_echelon_basis();
  const BitMatrix columns = BitMatrix(basis.empty() ? std::vector<BitVector>{BitVector(code.length)} : basis).transpose();
  std::unordered_set<BitVector, BitVectorHash> seen;
  for (const auto& column : columns.row_vectors()) {
    if (column.none()) return false;
    if (!seen.insert(column).second) return false;
  }
  return true;
}

DenseGraph graph_R(const BooleanFunction& f) {
  if (!is_bent(f)) throw NotBent();
  const int m = f.dimension() / 2;
  const std::size_t quarter = std::size_t{1} << (2 * m - 2);
  const std::size_t half_m = m >= 1 ? std::size_t{1} << (m - 1) : 0;
  const std::size_t target = weight_class(f) == 0 ? quarter - half_m : quarter + half_m;

  const auto support = f.support();
  const std::size_t v = f.size();
  std::vector<BitVector> words(v, BitVector(support.size()));
  for (Point x = 0; x < v; ++x) {
    for (std::size_t j = 0; j < support.size(); ++j) {
      if (dot(x, support[j])) words[x].set(j);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = i + 1; j < v; ++j) {
      if ((words[i] ^ words[j]).count() == target) edges.emplace_back(i, j);
    }
  }
  return DenseGraph::from_edges(v, edges);
}

BlockDesign sdp_design(const BooleanFunction& f) {
  const BooleanFunction d = dual(f);
  const std::size_t v = f.size();
  BitMatrix incidence(v, v);
  for (Point c = 0; c < v; ++c) {
    for (Point x = 0; x < v; ++x) incidence.set(c, x, f(x) ^ dot(c, x) ^ d(c));
  }
  return {incidence};
}

bool has_sdp_property(const BlockDesign& d) {
  const std::size_t v = d.incidence.rows();
  if (v > 64) throw TooLarge("symmetric difference check is limited to 64 blocks");
  const auto& rows = d.incidence.row_vectors();
  std::unordered_set<BitVector, BitVectorHash> allowed;
  for (const auto& r : rows) {
    allowed.insert(r);
    allowed.insert(~r);
  }
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = i + 1; j < v; ++j) {
      const BitVector ij = rows[i] ^ rows[j];
      for (std::size_t k = j + 1; k < v; ++k) {
        if (!allowed.contains(ij ^ rows[k])) return false;
      }
    }
  }
  return true;
}

bool min_weight_rows_check(const BooleanFunction& f) {
  const int n = f.dimension();
  if (n > 6) throw TooLarge("minimum-weight check is limited to 6 variables");
  const BlockDesign design = sdp_design(f);

  std::vector<BitVector> generators;
  generators.push_back(f.table());
  BitVector ones(f.size());
  ones.set_all();
  generators.push_back(ones);
  for (int k = 0; k < n; ++k) {
    generators.push_back(BooleanFunction::from_predicate(n, [k](Point x) { return (x >> k) & 1U; }).table());
  }

  std::size_t min_weight = f.size() + 1;
  std::set<std::string> minimal;
  BitVector word(f.size());
  const std::uint64_t count = std::uint64_t{1} << generators.size();
  for (std::uint64_t i = 1; i < count; ++i) {
    word ^= generators[static_cast<std::size_t>(std::countr_zero(i))];
    const std::size_t w = word.count();
    if (w == 0 || w > min_weight) continue;
    if (w < min_weight) {
      min_weight = w;
      minimal.clear();
    }
    minimal.insert(key_of(word));
  }

  std::set<std::string> blocks;
  for (const auto& r : design.incidence.row_vectors()) blocks.insert(key_of(r));
  return blocks == minimal;
}

}  // namespace bentcay
