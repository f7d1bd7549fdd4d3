#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bentcay/dense_graph.hpp"

namespace bentcay {

// A vertex permutation given as an image table: vertex i maps to perm[i].
using Permutation = std::vector<std::size_t>;

struct CanonicalForm {
  DenseGraph graph;  // input relabeled into canonical order
  std::string g6;    // graph6 of `graph`
  // labeling[p] is the input vertex placed at canonical position p, so
  // input.relabeled(labeling) == graph.
  std::vector<std::size_t> labeling;
};

struct CanonicalStats {
  std::size_t nodes = 0;
  std::size_t leaves = 0;
  std::size_t automorphisms_found = 0;
};

// Exact canonical form by individualization-refinement. Two graphs are isomorphic
// iff their canonical g6 strings are equal.
CanonicalForm canonical_form(const DenseGraph& g);

// Same result as canonical_form(g); `known_automorphisms` only seed the orbit pruning.
// Each must be an automorphism of g (checked; std::invalid_argument otherwise).
CanonicalForm canonical_form(const DenseGraph& g, std::span<const Permutation> known_automorphisms,
                             CanonicalStats* stats = nullptr);

bool is_isomorphic(const DenseGraph& g, const DenseGraph& h);

bool is_automorphism(const DenseGraph& g, const Permutation& perm);

}  // namespace bentcay
