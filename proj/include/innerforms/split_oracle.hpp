#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "innerforms/classes.hpp"
#include "innerforms/linalg.hpp"

namespace innerforms {

/// Companion matrix of a monic p: ones on the subdiagonal, −c_i in the last column.
RationalMatrix companion(const IrreducibleSpec& p);

/// Generalized Jordan block: k companion blocks on the diagonal, identity blocks above.
RationalMatrix jordan_block(const IrreducibleSpec& p, int k);

/// Block-diagonal realization of a split class; MissingCoefficients when a support polynomial has none.
RationalMatrix realize(const ConjClass& c, const IrreducibleRegistry& reg);

/// Recovers the class of X from rank jumps of p(X)^k over the registered polynomials with
/// coefficients (restricted to `hints` when nonempty). UnregisteredFactor if they do not account for all of X.
ConjClass class_of(const RationalMatrix& x, const IrreducibleRegistry& reg, const std::vector<std::string>& hints = {},
                   const FieldSpec& base = FieldSpec::rationals());

/// rank p(X)^k.
int rank_pow(const RationalMatrix& x, const IrreducibleSpec& p, int k);

/// Rank comparison of p(X)^k on realizations, for all p in the support and 1 ≤ k ≤ max part.
bool oracle_closure_leq(const ConjClass& lhs, const ConjClass& rhs, const IrreducibleRegistry& reg);

/// dim {M : XM = MX}.
long oracle_centralizer_dim(const RationalMatrix& x);

struct GenericInductionResult {
  bool passed = false;
  ConjClass predicted;
  ConjClass maximal;        // largest class met over all trials
  int trials = 0;
  int hits = 0;             // trials landing exactly on the predicted class
  std::optional<ConjClass> exceeding;  // a trial class not below the prediction, if any
};

/// Fills the strict upper block triangle of diag(realize(blocks)) with entries in {−3..3}
/// and compares the closure-maximal class met against induce(L, blocks).
GenericInductionResult generic_induction_check(const LeviShape& levi, const std::vector<ConjClass>& blocks, int trials,
                                               const IrreducibleRegistry& reg, std::uint64_t seed = 0x1d0c5eedULL);

/// splitmix64 step, used to derive independent per-index seeds.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace innerforms
