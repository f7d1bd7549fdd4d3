#include "bentcay/equivalence.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "bentcay/errors.hpp"
#include "bentcay/graph6.hpp"
#include "bentcay/ingest.hpp"

namespace bentcay {

namespace {

// Runs task(i) for i in [0, count) on up to `workers` threads; rethrows the first failure.
template <class Task>
void run_parallel(std::size_t count, unsigned workers, Task&& task) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto loop = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  const unsigned spawned = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  threads.reserve(spawned);
  for (unsigned t = 0; t < spawned; ++t) threads.emplace_back(loop);
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

void check_same_dimension(const BooleanFunction& f, const BitMatrix& a) {
  if (a.rows() != static_cast<std::size_t>(f.dimension()) || a.cols() != a.rows()) {
    throw DimensionMismatch("matrix size differs from the variable count");
  }
}

ClassDescriptor describe(const Classification& cl, std::size_t index) {
  ClassDescriptor d;
  d.index = index;
  d.g6 = cl.graphs[index];
  const DenseGraph g = graph6_decode(d.g6);
  d.params = srg_params(g);
  const std::size_t v = g.order();
  d.complete = v > 1 && g.edge_count() == v * (v - 1) / 2;
  d.rank2 = rank2(g);
  d.clique = clique_polynomial(g);
  d.bent_frequency = static_cast<std::size_t>(std::count(cl.bent_index.values.begin(), cl.bent_index.values.end(), index));
  d.dual_frequency = static_cast<std::size_t>(std::count(cl.dual_index.values.begin(), cl.dual_index.values.end(), index));
  return d;
}

}  // namespace

BooleanFunction et_member(const BooleanFunction& f, Point b, Point c) {
  if (b >= f.size() || c >= f.size()) throw DimensionMismatch("translation vector has too many bits");
  const bool shift = f(b);
  return BooleanFunction::from_predicate(f.dimension(), [&](Point x) { return f(x ^ b) ^ dot(c, x) ^ shift; });
}

std::vector<Permutation> translation_automorphisms(int n) {
  std::vector<Permutation> out;
  const std::size_t v = std::size_t{1} << n;
  for (int k = 0; k < n; ++k) {
    Permutation p(v);
    for (std::size_t x = 0; x < v; ++x) p[x] = x ^ (std::size_t{1} << k);
    out.push_back(std::move(p));
  }
  return out;
}

std::string cayley_certificate(const BooleanFunction& f) {
  const auto seeds = translation_automorphisms(f.dimension());
  return canonical_form(cayley_graph(f), seeds).g6;
}

Classification classify_et_class(const BooleanFunction& f, unsigned workers) {
  if (!is_bent(f)) throw NotBent();
  const int n = f.dimension();
  const std::size_t side = f.size();
  const std::size_t total = side * side;
  const auto seeds = translation_automorphisms(n);

  Classification cl;
  cl.anf = render_anf(f);
  cl.n = n;
  cl.bent_index = IndexMatrix(side);
  cl.dual_index = IndexMatrix(side);
  cl.wc_matrix = IndexMatrix(side);

  std::unordered_map<std::string, std::uint32_t> index_of;
  auto intern = [&](std::string&& g6) {
    const auto [it, inserted] = index_of.try_emplace(g6, static_cast<std::uint32_t>(cl.graphs.size()));
    if (inserted) cl.graphs.push_back(std::move(g6));
    return it->second;
  };

  struct PairResult {
    std::string bent;
    std::string dual;
    bool wc = false;
  };
  // Results are merged block by block so memory stays bounded by the distinct graphs.
  const std::size_t block = std::min<std::size_t>(total, 1024);
  std::vector<PairResult> results(block);
  for (std::size_t start = 0; start < total; start += block) {
    const std::size_t count = std::min(block, total - start);
    run_parallel(count, workers, [&](std::size_t i) {
      const std::size_t pair = start + i;
      const auto c = static_cast<Point>(pair / side);
      const auto b = static_cast<Point>(pair % side);
      const BooleanFunction g = et_member(f, b, c);
      const bool wc = weight_class(g) != 0;
      results[i].wc = wc;
      results[i].bent = canonical_form(cayley_graph(g), seeds).g6;
      results[i].dual = canonical_form(cayley_graph(dual(g).plus_constant(wc)), seeds).g6;
    });
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t pair = start + i;
      cl.bent_index.values[pair] = intern(std::move(results[i].bent));
      cl.dual_index.values[pair] = intern(std::move(results[i].dual));
      cl.wc_matrix.values[pair] = results[i].wc ? 1 : 0;
    }
  }
  return cl;
}

BitMatrix weight_class_matrix(const BooleanFunction& f) {
  if (!is_bent(f)) throw NotBent();
  const std::size_t side = f.size();
  BitMatrix m(side, side);
  for (Point c = 0; c < side; ++c) {
    for (Point b = 0; b < side; ++b) m.set(c, b, weight_class(et_member(f, b, c)) != 0);
  }
  return m;
}

BitMatrix dillon_schatz_matrix(const BooleanFunction& f) {
  const BooleanFunction d = dual(f);
  const std::size_t side = f.size();
  BitMatrix m(side, side);
  for (Point c = 0; c < side; ++c) {
    for (Point b = 0; b < side; ++b) m.set(c, b, f(b) ^ dot(c, b) ^ d(c));
  }
  return m;
}

bool is_cayley_equivalent(const BooleanFunction& f, const BooleanFunction& g) {
  if (f(0) || g(0)) throw NonzeroAtOrigin();
  if (f.dimension() != g.dimension()) return false;
  if (f.weight() != g.weight()) return false;
  return cayley_certificate(f) == cayley_certificate(g);
}

bool is_extended_cayley_equivalent(const BooleanFunction& f, const BooleanFunction& g) {
  return is_cayley_equivalent(f.plus_constant(f(0)), g.plus_constant(g(0)));
}

BooleanFunction apply_linear(const BooleanFunction& f, const BitMatrix& a) {
  check_same_dimension(f, a);
  if (!a.is_invertible()) throw SingularMatrix();
  return BooleanFunction::from_predicate(f.dimension(), [&](Point x) { return f(a.apply(x)); });
}

AffineSplit affine_to_translation(const BooleanFunction& f, const BitMatrix& a, Point b, Point c, bool delta) {
  check_same_dimension(f, a);
  const auto inverse = a.inverse();
  if (!inverse) throw SingularMatrix();
  const Point c2 = inverse->transpose().apply(c);
  return {BooleanFunction::from_predicate(f.dimension(), [&](Point x) { return f(x ^ b) ^ dot(c2, x) ^ delta; }), a};
}

std::size_t bent_class_count(const Classification& cl) {
  std::vector<bool> seen(cl.graphs.size(), false);
  std::size_t count = 0;
  for (auto v : cl.bent_index.values) {
    if (!seen[v]) {
      seen[v] = true;
      ++count;
    }
  }
  return count;
}

bool is_prolific(const Classification& cl) {
  return bent_class_count(cl) == cl.bent_index.values.size() && !cl.bent_index.values.empty();
}

std::vector<ClassDescriptor> bent_class_descriptors(const Classification& cl) {
  std::vector<bool> used(cl.graphs.size(), false);
  for (auto v : cl.bent_index.values) used[v] = true;
  std::vector<ClassDescriptor> out;
  for (std::size_t i = 0; i < cl.graphs.size(); ++i) {
    if (used[i]) out.push_back(describe(cl, i));
  }
  return out;
}

std::vector<ClassDescriptor> dual_only_class_descriptors(const Classification& cl) {
  std::vector<bool> bent(cl.graphs.size(), false);
  for (auto v : cl.bent_index.values) bent[v] = true;
  std::vector<bool> dual(cl.graphs.size(), false);
  for (auto v : cl.dual_index.values) dual[v] = true;
  std::vector<ClassDescriptor> out;
  for (std::size_t i = 0; i < cl.graphs.size(); ++i) {
    if (dual[i] && !bent[i]) out.push_back(describe(cl, i));
  }
  return out;
}

}  // namespace bentcay
