#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "innerforms/rational.hpp"

namespace innerforms {

using A0Point = std::vector<Rational>;

/// A standard parabolic of GL_m, stored as the set of cut points in {1, ..., m−1}.
class StdParabolic {
 public:
  StdParabolic() = default;
  StdParabolic(int m, std::uint32_t cuts);

  static StdParabolic from_composition(const std::vector<int>& composition);
  static StdParabolic minimal(int m);
  static StdParabolic group(int m) { return StdParabolic(m, 0); }
  /// Every standard parabolic of GL_m, by increasing cut mask.
  static std::vector<StdParabolic> all(int m);

  int m() const noexcept { return m_; }
  std::uint32_t cuts() const noexcept { return cuts_; }
  int blocks() const noexcept;  // dim a_P
  std::vector<int> composition() const;
  bool has_cut(int c) const noexcept { return (cuts_ >> c) & 1U; }

  /// this ⊆ other.
  bool contained_in(const StdParabolic& other) const noexcept {
    return m_ == other.m_ && (other.cuts_ & ~cuts_) == 0;
  }

  friend bool operator==(const StdParabolic&, const StdParabolic&) = default;

 private:
  int m_ = 1;
  std::uint32_t cuts_ = 0;
};

/// Projection of X onto a_P inside a_0: block averages repeated over each block.
A0Point project(const StdParabolic& p, const A0Point& x);

/// Acute cone of Δ_{P1}^{P2}; NotNested unless P1 ⊆ P2.
int tau(const StdParabolic& p1, const StdParabolic& p2, const A0Point& x);
/// Obtuse cone of the fundamental weights dual to Δ_{P1}^{P2}.
int tau_hat(const StdParabolic& p1, const StdParabolic& p2, const A0Point& x);

/// Σ_{P ⊇ P2} (−1)^{dim a_{P2}^P} τ_{P1}^P(X) τ̂_P^G(X).
int sigma(const StdParabolic& p1, const StdParabolic& p2, const A0Point& x);

/// Γ_P^G(X, Y) = Σ_{Q ⊇ P} (−1)^{dim a_Q^G} τ_P^Q(X) τ̂_Q^G(X − Y_Q).
int gamma_trunc(const StdParabolic& p, const A0Point& x, const A0Point& y);

/// Both sides of τ̂_P^G(X − Y_P) = Σ_{Q ⊇ P} (−1)^{dim a_Q^G} τ̂_P^Q(X) Γ_Q^G(X, Y_Q).
struct InversionSides {
  int lhs = 0;
  int rhs = 0;
  bool holds() const { return lhs == rhs; }
};
InversionSides inversion_sides(const StdParabolic& p, const A0Point& x, const A0Point& y);
bool inversion_check(const StdParabolic& p, const A0Point& x, const A0Point& y);

/// Σ_{P1 ⊆ P ⊆ P2} (−1)^{dim a_P^{P2}} τ_{P1}^P(X) τ̂_P^{P2}(X); equals [P1 = P2] off the walls.
int langlands_sum(const StdParabolic& p1, const StdParabolic& p2, const A0Point& x);

/// True when no root or weight functional of any standard Levi vanishes at X.
bool is_regular(const A0Point& x);
/// is_regular at X and at X − Y_Q for every standard Q.
bool is_regular_pair(const A0Point& x, const A0Point& y);

/// Uniform rational point with numerators in [−range, range] and denominators in [1, max_den].
A0Point random_point(std::mt19937_64& rng, int m, int range = 24, int max_den = 6);

/// The radius m · Σ|Y_i| beyond which Γ_P^G(·, Y) must vanish.
Rational support_radius(const A0Point& y);

/// ℓ∞ norm of the a_P^G component of X.
Rational projection_norm(const StdParabolic& p, const A0Point& x);

struct CompactSupportReport {
  long checked = 0;
  long nonzero = 0;
  Rational radius;
  std::optional<A0Point> witness;
  bool passed() const { return nonzero == 0; }
};

/// Samples points whose a_P^G projection exceeds `radius` (support_radius(Y) when absent) and
/// records any nonzero value of Γ_P^G(·, Y).
CompactSupportReport compact_support_check(const StdParabolic& p, const A0Point& y, long samples, std::uint64_t seed,
                                           std::optional<Rational> radius = std::nullopt);

}  // namespace innerforms
