#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace innerforms {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// 0/1 matrices whose rows each hold at least one 1 and whose columns each hold exactly two:
/// incidence matrices of multigraphs without isolated vertices (rows = vertices, columns = edges).
struct MinorLemmaReport {
  long matrices = 0;
  long counterexamples = 0;
  std::optional<IntMatrix> first_counterexample;
  int counterexample_rank = 0;
  bool holds() const { return counterexamples == 0; }
};

/// Enumerates every such matrix with at most `max_columns` columns, up to a relabelling of rows,
/// and looks for an r×r minor of determinant ±1 where r is the rank. With `bipartite_only`
/// only multigraphs admitting a proper 2-colouring are visited.
MinorLemmaReport check_minor_lemma(int max_columns, bool bipartite_only = false);

/// True iff some r×r minor of `a` (r = rank a) has determinant ±1.
bool has_unimodular_maximal_minor(const IntMatrix& a);

/// Incidence matrix of an edge list on `vertices` vertices.
IntMatrix incidence_matrix(int vertices, const std::vector<std::pair<int, int>>& edges);

/// Block sizes h of a Levi H and two coarsenings H1, H2 (set partitions of the blocks) with
/// a_H^{H1} ∩ a_H^{H2} = 0; checks that k dividing every block of H1 and of H2 forces k | h.
struct DivisibilityReport {
  long instances = 0;
  long counterexamples = 0;
  std::optional<std::vector<int>> witness_blocks;
  bool holds() const { return counterexamples == 0; }
};

DivisibilityReport check_levi_divisibility(int max_blocks, int max_size);

/// All set partitions of {0, ..., n−1} as restricted-growth strings.
std::vector<std::vector<int>> set_partitions(int n);

}  // namespace innerforms
