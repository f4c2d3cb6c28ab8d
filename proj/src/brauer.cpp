#include "innerforms/brauer.hpp"

#include <numeric>
#include <set>

#include "innerforms/error.hpp"

namespace innerforms {

namespace {

bool is_prime_power(long q) {
  if (q < 2) return false;
  long p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) return true;  // q itself is prime
  while (q % p == 0) q /= p;
  return q == 1;
}

}  // namespace

Place Place::real(std::string label) { return {std::move(label), PlaceKind::Real, 0, 0}; }
Place Place::complex(std::string label) { return {std::move(label), PlaceKind::Complex, 0, 0}; }
Place Place::finite(std::string label, long q, Rational disc_exp) {
  return {std::move(label), PlaceKind::Finite, q, std::move(disc_exp)};
}

FieldSpec FieldSpec::local(Place place) { return {FieldKind::Local, {std::move(place)}}; }
FieldSpec FieldSpec::global(std::vector<Place> places) { return {FieldKind::Global, std::move(places)}; }
FieldSpec FieldSpec::rationals() { return global({Place::real("inf")}); }

const Place* FieldSpec::find(const std::string& label) const {
  for (const Place& p : places) {
    if (p.label == label) return &p;
  }
  return nullptr;
}

void FieldSpec::validate() const {
  if (places.empty()) throw Error(ErrorCode::InvalidArgument, "field must list at least one place");
  if (kind == FieldKind::Local && places.size() != 1) {
    throw Error(ErrorCode::InvalidArgument, "a local field has exactly one place");
  }
  std::set<std::string> seen;
  for (const Place& p : places) {
    if (!seen.insert(p.label).second) throw Error(ErrorCode::InvalidArgument, "duplicate place label '" + p.label + "'");
    if (p.kind == PlaceKind::Finite) {
      if (!is_prime_power(p.q)) {
        throw Error(ErrorCode::InvalidArgument, "place '" + p.label + "': q=" + std::to_string(p.q) + " is not a prime power");
      }
      if (p.disc_exp < 0) throw Error(ErrorCode::InvalidArgument, "place '" + p.label + "': negative disc_exp");
    }
  }
}

LocalBrauerClass::LocalBrauerClass(const Rational& invariant) : invariant_(mod_one(invariant)) {}

long LocalBrauerClass::index() const { return to_long(invariant_.get_den()); }

void LocalBrauerClass::check_at(const Place& place) const {
  if (place.kind == PlaceKind::Complex && invariant_ != 0) {
    throw Error(ErrorCode::InvalidClass, "complex place '" + place.label + "' must carry invariant 0");
  }
  if (place.kind == PlaceKind::Real && invariant_ != 0 && invariant_ != Rational(1, 2)) {
    throw Error(ErrorCode::InvalidClass, "real place '" + place.label + "' carries invariant in {0, 1/2}");
  }
}

LocalBrauerClass restrict_invariant(const LocalBrauerClass& inv, long g) {
  if (g < 1) throw Error(ErrorCode::InvalidArgument, "restrict_invariant: degree must be >= 1");
  return LocalBrauerClass(inv.invariant() * Rational(g));
}

long local_delta(long d, long g) {
  if (d < 1 || g < 1) throw Error(ErrorCode::InvalidArgument, "local_delta: arguments must be >= 1");
  return d / std::gcd(d, g);
}

long capacity(long d, long g) {
  if (d < 1 || g < 1) throw Error(ErrorCode::InvalidArgument, "capacity: arguments must be >= 1");
  return std::gcd(d, g);
}

BrauerClass::BrauerClass(FieldSpec base, std::map<std::string, LocalBrauerClass> invariants)
    : base_(std::move(base)) {
  for (auto& [label, inv] : invariants) {
    if (!inv.trivial()) invariants_.emplace(label, inv);
  }
}

BrauerClass::BrauerClass(FieldSpec base, const std::map<std::string, Rational>& invariants)
    : base_(std::move(base)) {
  for (const auto& [label, q] : invariants) {
    LocalBrauerClass inv(q);
    if (!inv.trivial()) invariants_.emplace(label, inv);
  }
}

BrauerClass BrauerClass::trivial(FieldSpec base) { return BrauerClass(std::move(base), std::map<std::string, LocalBrauerClass>{}); }

LocalBrauerClass BrauerClass::at(const std::string& label) const {
  auto it = invariants_.find(label);
  return it == invariants_.end() ? LocalBrauerClass() : it->second;
}

void BrauerClass::validate() const {
  base_.validate();
  Rational sum = 0;
  for (const auto& [label, inv] : invariants_) {
    const Place* place = base_.find(label);
    if (place == nullptr) throw Error(ErrorCode::InvalidClass, "invariant given at unknown place '" + label + "'");
    inv.check_at(*place);
    sum += inv.invariant();
  }
  if (base_.kind == FieldKind::Global && mod_one(sum) != 0) {
    throw Error(ErrorCode::InvalidClass, "local invariants sum to " + to_string(mod_one(sum)) + ", not 0 mod 1");
  }
}

long index(const LocalBrauerClass& inv) { return inv.index(); }

long index(const BrauerClass& b) {
  b.validate();
  long d = 1;
  for (const auto& [label, inv] : b.invariants()) d = std::lcm(d, inv.index());
  return d;
}

IrreducibleSpec IrreducibleSpec::with_coeffs(std::string label, std::vector<Rational> coeffs) {
  IrreducibleSpec spec;
  spec.label = std::move(label);
  if (coeffs.empty()) throw Error(ErrorCode::InvalidArgument, "irreducible needs at least one coefficient");
  if (coeffs.size() >= 2 && coeffs.back() == 1) {
    spec.degree = static_cast<int>(coeffs.size()) - 1;
  } else {
    coeffs.push_back(1);
    spec.degree = static_cast<int>(coeffs.size()) - 1;
  }
  spec.coeffs = std::move(coeffs);
  return spec;
}

void IrreducibleSpec::validate(const FieldSpec* base) const {
  if (degree < 1) throw Error(ErrorCode::InvalidArgument, "irreducible '" + label + "' has degree < 1");
  if (coeffs && (static_cast<int>(coeffs->size()) != degree + 1 || coeffs->back() != 1)) {
    throw Error(ErrorCode::InvalidArgument, "irreducible '" + label + "': coefficients must be monic of degree " + std::to_string(degree));
  }
  for (const auto& [place_label, degrees] : splitting) {
    int sum = 0;
    for (int g : degrees) {
      if (g < 1) throw Error(ErrorCode::InvalidArgument, "irreducible '" + label + "': local degree < 1");
      sum += g;
    }
    if (sum != degree) {
      throw Error(ErrorCode::InvalidArgument, "irreducible '" + label + "': local degrees at '" + place_label + "' sum to " +
                                                  std::to_string(sum) + ", expected " + std::to_string(degree));
    }
    if (base == nullptr) continue;
    const Place* place = base->find(place_label);
    if (place == nullptr) continue;
    for (int g : degrees) {
      if ((place->kind == PlaceKind::Complex && g != 1) || (place->kind == PlaceKind::Real && g > 2)) {
        throw Error(ErrorCode::InvalidArgument, "irreducible '" + label + "': impossible local degree " + std::to_string(g) +
                                                    " at archimedean place '" + place_label + "'");
      }
    }
  }
}

IrreducibleRegistry::IrreducibleRegistry(std::initializer_list<IrreducibleSpec> specs) {
  for (const auto& s : specs) add(s);
}

void IrreducibleRegistry::add(IrreducibleSpec spec) {
  spec.validate();
  auto it = specs_.find(spec.label);
  if (it != specs_.end()) {
    const IrreducibleSpec& old = it->second;
    if (old.degree != spec.degree || old.splitting != spec.splitting || old.coeffs != spec.coeffs) {
      throw Error(ErrorCode::InvalidArgument, "conflicting redefinition of irreducible '" + spec.label + "'");
    }
    return;
  }
  specs_.emplace(spec.label, std::move(spec));
}

const IrreducibleSpec& IrreducibleRegistry::get(const std::string& label) const {
  auto it = specs_.find(label);
  if (it == specs_.end()) throw Error(ErrorCode::UnknownIrreducible, "unknown irreducible '" + label + "'");
  return it->second;
}

long global_delta(const BrauerClass& b, const IrreducibleSpec& p) {
  long delta = 1;
  for (const auto& [label, inv] : b.invariants()) {
    auto it = p.splitting.find(label);
    if (it == p.splitting.end()) {
      throw Error(ErrorCode::MissingSplittingData,
                  "irreducible '" + p.label + "' has no splitting data at place '" + label + "' (invariant " + to_string(inv.invariant()) + ")");
    }
    for (int g : it->second) delta = std::lcm(delta, restrict_invariant(inv, g).index());
  }
  return delta;
}

CentralSimpleAlgebra CentralSimpleAlgebra::split(int n, FieldSpec base) { return {n, BrauerClass::trivial(std::move(base))}; }

CentralSimpleAlgebra CentralSimpleAlgebra::split_form() const {
  return {static_cast<int>(degree()), BrauerClass::trivial(brauer.base())};
}

long CentralSimpleAlgebra::delta(const IrreducibleSpec& p) const {
  if (brauer.is_local()) return local_delta(index(), p.degree);
  return global_delta(brauer, p);
}

void CentralSimpleAlgebra::validate() const {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "capacity m must be >= 1");
  brauer.validate();
}

bool same_division_algebra(const CentralSimpleAlgebra& a, const CentralSimpleAlgebra& b) { return a.brauer == b.brauer; }

}  // namespace innerforms
