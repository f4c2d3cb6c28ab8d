#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "innerforms/classes.hpp"

namespace innerforms {

/// Serial loops are the reference; Parallel runs the same per-case kernel under OpenMP and
/// reduces results in case order, so both produce identical reports.
enum class Exec { Serial, Parallel };

struct SweepReport {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string first_failure;  // JSON payload of the first failing case, empty when none
  std::string summary;        // extra facts about the sweep (counts, spot values)
  bool passed() const { return failures == 0 && cases > 0; }
  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

using ClosureFn = std::function<bool(const ConjClass&, const ConjClass&, const IrreducibleRegistry&)>;

/// T, T−1, T²−2 and T⁴−2 with coefficients; splitting data at `base`'s places (inert everywhere,
/// except that at a real place T²−2 and T⁴−2 get local degrees [1,1] and [1,1,2]).
IrreducibleRegistry standard_registry(const FieldSpec& base = FieldSpec::rationals());

/// Every class of split GL_n (n ≤ max_n) over {T, T−1, T²−2}, grouped by characteristic polynomial,
/// compared pairwise against the rank oracle.
SweepReport sweep_closure_oracle(int max_n, Exec exec, const ClosureFn& closure = closure_leq);

/// generic_induction_check over every composition of n ≤ max_n with nilpotent blocks.
SweepReport sweep_induction_oracle(int max_n, int trials, Exec exec, std::uint64_t seed = 7);

/// transfer_to_split(Ind_L c) = Ind_{dL}(transfer_to_split c_i) for local Mat_m(D), md ≤ max_degree, d ∈ indices.
SweepReport sweep_transfer_induction(int max_degree, const std::vector<int>& indices, Exec exec);

/// induced_transfer_check agrees for every split Levi and block data with md ≤ max_degree.
SweepReport sweep_induced_transfer(int max_degree, const std::vector<int>& indices, Exec exec);

/// Random global configurations for local_global_transfer.
SweepReport sweep_local_global(int configs, Exec exec, std::uint64_t seed = 11);

/// γ transitivity for every nested pair of compositions of m ≤ max_m, four field cases.
SweepReport sweep_gamma_transitivity(int max_m, Exec exec);

/// vol(K), self-dual constants and the volume form of γ for m ≤ max_m.
SweepReport sweep_measure_constants(int max_m, Exec exec);

/// Inversion, Langlands partition and value-range checks at `points` regular points per rank.
SweepReport sweep_arthur_identities(int max_m, int points, Exec exec, std::uint64_t seed = 13);

/// compact_support_check for every standard parabolic and sampled Y.
SweepReport sweep_arthur_support(int max_m, int ys, int samples, Exec exec, std::uint64_t seed = 17);

/// Enumeration counts and validity for every (algebra, charpoly) with md ≤ max_degree;
/// split classes also go through realize/class_of.
SweepReport sweep_enumeration(int max_degree, Exec exec);

/// Closure order is a partial order on each fiber, md ≤ max_degree.
SweepReport sweep_closure_order(int max_degree, Exec exec);

/// transpose(dot(e, λ)) = times(e, transpose(λ)) for |λ| ≤ max_size, e ≤ max_e.
SweepReport sweep_partition_lemma(int max_size, int max_e, Exec exec);

/// The 0/1 minor statement on all qualifying matrices with ≤ max_columns columns.
SweepReport sweep_minor_lemma(int max_columns, bool bipartite_only);

/// The Levi divisibility statement for ≤ max_blocks blocks of total size ≤ max_size.
SweepReport sweep_levi_divisibility(int max_blocks, int max_size);

/// All compositions of n, in lexicographic order of the block sequence.
std::vector<std::vector<int>> compositions_of(int n);

}  // namespace innerforms
