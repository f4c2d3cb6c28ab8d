#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "innerforms/brauer.hpp"
#include "innerforms/partition.hpp"

namespace innerforms {

/// Label -> partition; empty partitions are never stored.
using PartitionMap = std::map<std::string, Partition>;

/// A conjugacy class of Mat_m(D) given by its elementary-divisor function λ.
struct ConjClass {
  CentralSimpleAlgebra algebra;
  PartitionMap lambda;

  ConjClass() = default;
  ConjClass(CentralSimpleAlgebra alg, PartitionMap lam);

  const Partition& at(const std::string& label) const;  // ∅ when absent
  friend bool operator==(const ConjClass&, const ConjClass&) = default;
};

/// Characteristic polynomial as multiplicities a_p.
struct CharPoly {
  std::map<std::string, int> factors;
  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

struct CentralizerFactor {
  std::string label;
  int center_degree = 0;   // deg p = [F_p : F]
  long division_index = 0; // δ_p
  int block_size = 0;      // n_{p,i}
  int jordan_size = 0;     // v_{p,i}
  friend bool operator==(const CentralizerFactor&, const CentralizerFactor&) = default;
};

struct CentralizerShape {
  std::vector<CentralizerFactor> factors;
};

/// Block sizes (m_1, ..., m_l) of a standard Levi of GL_m(D).
struct LeviShape {
  std::vector<int> blocks;
  int total() const;
  void validate() const;  // throws InvalidComposition
  friend bool operator==(const LeviShape&, const LeviShape&) = default;
};

/// Σ_p deg(p)·|λ(p)|·δ_p.
long mass(const ConjClass& c, const IrreducibleRegistry& reg);

/// True iff the mass identity holds; unknown labels throw UnknownIrreducible.
bool validate_class(const ConjClass& c, const IrreducibleRegistry& reg);

/// Throws InvalidClass unless validate_class holds.
void require_valid(const ConjClass& c, const IrreducibleRegistry& reg);

/// Degree conditions on a characteristic polynomial; DegreeMismatch when Σ deg·a ≠ md.
bool charpoly_valid(const CentralSimpleAlgebra& alg, const CharPoly& f, const IrreducibleRegistry& reg);

CharPoly charpoly_of(const ConjClass& c, const IrreducibleRegistry& reg);

/// Every class with characteristic polynomial f, ordered by (label, reverse-lex partition).
std::vector<ConjClass> enumerate_classes(const CentralSimpleAlgebra& alg, const CharPoly& f, const IrreducibleRegistry& reg);

/// Every class of `alg` supported on the given labels (all characteristic polynomials).
std::vector<ConjClass> enumerate_all_classes(const CentralSimpleAlgebra& alg, const std::vector<std::string>& labels,
                                             const IrreducibleRegistry& reg);

ConjClass semisimple_part(const ConjClass& c);
bool is_elliptic(const ConjClass& c);

struct EllipticSupport {
  LeviShape levi;
  std::vector<ConjClass> blocks;
};

/// The unique (L, elliptic semisimple class) whose induction is c.
EllipticSupport elliptic_support(const ConjClass& c, const IrreducibleRegistry& reg);

/// Lusztig–Spaltenstein induction from the standard Levi L; AlgebraMismatch on bad blocks.
ConjClass induce(const LeviShape& levi, const std::vector<ConjClass>& blocks);

CentralizerShape centralizer_shape(const ConjClass& c, const IrreducibleRegistry& reg);

/// dim_F of the centralizer: Σ_p deg(p)·δ_p²·Σ_{i,j} min(λ_i, λ_j).
long centralizer_dim(const ConjClass& c, const IrreducibleRegistry& reg);

/// Closure order on one fiber of charpoly_of; CharpolyMismatch across fibers.
bool closure_leq(const ConjClass& lhs, const ConjClass& rhs, const IrreducibleRegistry& reg);

/// λ*(p) = δ_p × λ(p) on Mat_{md}(F).
ConjClass transfer_to_split(const ConjClass& c, const IrreducibleRegistry& reg);

/// The class of `target` whose transfer is `split_class`, if any.
std::optional<ConjClass> transfers_from_split(const ConjClass& split_class, const CentralSimpleAlgebra& target,
                                              const IrreducibleRegistry& reg);

/// d divides every block size of L.
bool levi_transfers(const LeviShape& levi, const CentralSimpleAlgebra& target);

struct InducedTransferResult {
  bool transfers = false;         // does Ind_L(blocks) transfer to target (computed on the induced class)
  bool levi_and_blocks = false;   // levi_transfers(L) and every block transfers
  bool agrees() const { return transfers == levi_and_blocks; }
  std::optional<ConjClass> witness;  // the transferred class on target
};

InducedTransferResult induced_transfer_check(const LeviShape& levi, const std::vector<ConjClass>& split_blocks,
                                             const CentralSimpleAlgebra& target, const IrreducibleRegistry& reg);

struct LocalGlobalResult {
  bool global = false;                      // via global_delta
  std::map<std::string, bool> per_place;    // via local_delta at each completion
  bool local_conjunction() const;
  bool principle_holds() const { return global == local_conjunction(); }
};

/// Keys of per_place: the place label when p has one place above v, else "<label>_<i>" (1-based);
/// with several irreducibles in the support each key is prefixed by "<p>:".
LocalGlobalResult local_global_transfer(const ConjClass& split_class, const CentralSimpleAlgebra& target,
                                        const IrreducibleRegistry& reg);

}  // namespace innerforms
