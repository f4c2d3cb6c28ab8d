#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "innerforms/rational.hpp"

namespace innerforms {

enum class PlaceKind { Real, Complex, Finite };
enum class FieldKind { Local, Global };

struct Place {
  std::string label;
  PlaceKind kind = PlaceKind::Finite;
  long q = 0;                  // residue cardinality, finite places only
  Rational disc_exp = 0;       // N(Δ₁) = p^disc_exp, finite places only

  static Place real(std::string label);
  static Place complex(std::string label);
  static Place finite(std::string label, long q, Rational disc_exp = 0);

  bool archimedean() const noexcept { return kind != PlaceKind::Finite; }
  friend bool operator==(const Place&, const Place&) = default;
};

/// A local field (exactly one place) or a number field given by the finitely
/// many places that matter; unlisted places carry invariant 0.
struct FieldSpec {
  FieldKind kind = FieldKind::Global;
  std::vector<Place> places;

  static FieldSpec local(Place place);
  static FieldSpec global(std::vector<Place> places);
  /// ℚ with its real place labelled "inf".
  static FieldSpec rationals();

  const Place* find(const std::string& label) const;
  void validate() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// An element of ℚ/ℤ, stored reduced in [0, 1).
class LocalBrauerClass {
 public:
  LocalBrauerClass() = default;
  explicit LocalBrauerClass(const Rational& invariant);

  const Rational& invariant() const noexcept { return invariant_; }
  long index() const;  // the denominator
  bool trivial() const { return invariant_ == 0; }

  /// Throws Error(InvalidClass) when the invariant is impossible at `place`.
  void check_at(const Place& place) const;

  friend bool operator==(const LocalBrauerClass&, const LocalBrauerClass&) = default;

 private:
  Rational invariant_ = 0;
};

/// inv(D ⊗ F_p) = [F_p : F]·inv(D).
LocalBrauerClass restrict_invariant(const LocalBrauerClass& inv, long g);

/// Index of D_p over F_p for a local base: d / gcd(d, g).
long local_delta(long d, long g);

/// Capacity of D ⊗ F_p for a local base: gcd(d, g).
long capacity(long d, long g);

/// A Brauer class over a FieldSpec: one invariant per place (zero ones are dropped).
class BrauerClass {
 public:
  BrauerClass() : base_(FieldSpec::rationals()) {}
  BrauerClass(FieldSpec base, std::map<std::string, LocalBrauerClass> invariants);
  BrauerClass(FieldSpec base, const std::map<std::string, Rational>& invariants);

  static BrauerClass trivial(FieldSpec base);

  const FieldSpec& base() const noexcept { return base_; }
  const std::map<std::string, LocalBrauerClass>& invariants() const noexcept { return invariants_; }
  LocalBrauerClass at(const std::string& label) const;
  bool is_local() const noexcept { return base_.kind == FieldKind::Local; }

  /// Throws Error(InvalidClass) on a bad sum, an archimedean violation or an unknown place.
  void validate() const;

  friend bool operator==(const BrauerClass&, const BrauerClass&) = default;

 private:
  FieldSpec base_;
  std::map<std::string, LocalBrauerClass> invariants_;
};

long index(const LocalBrauerClass& inv);
/// lcm of the local indices; validates first.
long index(const BrauerClass& b);

/// An abstract monic irreducible over the base field. Identity is the label.
struct IrreducibleSpec {
  std::string label;
  int degree = 1;
  /// place label -> local degrees [F_{p,w} : F_v] over the places w | v.
  std::map<std::string, std::vector<int>> splitting;
  /// c_0, ..., c_{g-1}, 1 (monic); only needed by the split oracle.
  std::optional<std::vector<Rational>> coeffs;

  /// Builds from coefficients c_0..c_{g-1} (leading 1 implied) or c_0..c_g.
  static IrreducibleSpec with_coeffs(std::string label, std::vector<Rational> coeffs);

  void validate(const FieldSpec* base = nullptr) const;
};

/// Append-only label -> IrreducibleSpec map.
class IrreducibleRegistry {
 public:
  IrreducibleRegistry() = default;
  IrreducibleRegistry(std::initializer_list<IrreducibleSpec> specs);

  /// Adds a spec; re-adding an identical spec is a no-op, a conflicting one throws.
  void add(IrreducibleSpec spec);
  const IrreducibleSpec& get(const std::string& label) const;  // throws UnknownIrreducible
  bool contains(const std::string& label) const { return specs_.count(label) != 0; }
  const std::map<std::string, IrreducibleSpec>& all() const noexcept { return specs_; }

 private:
  std::map<std::string, IrreducibleSpec> specs_;
};

/// lcm over places w of F_p of the local index of restrict_invariant(b_v, [F_{p,w}:F_v]).
long global_delta(const BrauerClass& b, const IrreducibleSpec& p);

/// Mat_m(D) with D described by its Brauer class.
struct CentralSimpleAlgebra {
  int m = 1;
  BrauerClass brauer;

  static CentralSimpleAlgebra split(int n, FieldSpec base = FieldSpec::rationals());

  long index() const { return innerforms::index(brauer); }
  long degree() const { return m * index(); }
  bool is_split() const { return index() == 1; }
  /// Mat_k(D) for the same D.
  CentralSimpleAlgebra with_capacity(int k) const { return {k, brauer}; }
  /// Mat_{md}(F) over the same base.
  CentralSimpleAlgebra split_form() const;

  /// δ_p = deg_{F_p}(D_p), local or global formula per the base field.
  long delta(const IrreducibleSpec& p) const;

  void validate() const;
  friend bool operator==(const CentralSimpleAlgebra&, const CentralSimpleAlgebra&) = default;
};

bool same_division_algebra(const CentralSimpleAlgebra& a, const CentralSimpleAlgebra& b);

}  // namespace innerforms
