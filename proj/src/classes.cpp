#include "innerforms/classes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "innerforms/error.hpp"

namespace innerforms {

namespace {

const Partition kEmpty;

PartitionMap drop_empty(PartitionMap lam) {
  std::erase_if(lam, [](const auto& kv) { return kv.second.empty(); });
  return lam;
}

void require_split_of_degree(const ConjClass& split_class, const CentralSimpleAlgebra& target) {
  if (!split_class.algebra.is_split()) {
    throw Error(ErrorCode::AlgebraMismatch, "expected a class of the split form");
  }
  if (split_class.algebra.m != target.degree()) {
    throw Error(ErrorCode::AlgebraMismatch, "split class lives on Mat_" + std::to_string(split_class.algebra.m) +
                                                " but the target has degree " + std::to_string(target.degree()));
  }
}

}  // namespace

ConjClass::ConjClass(CentralSimpleAlgebra alg, PartitionMap lam) : algebra(std::move(alg)), lambda(drop_empty(std::move(lam))) {}

const Partition& ConjClass::at(const std::string& label) const {
  auto it = lambda.find(label);
  return it == lambda.end() ? kEmpty : it->second;
}

int LeviShape::total() const { return std::accumulate(blocks.begin(), blocks.end(), 0); }

void LeviShape::validate() const {
  if (blocks.empty()) throw Error(ErrorCode::InvalidComposition, "empty Levi composition");
  for (int b : blocks) {
    if (b < 1) throw Error(ErrorCode::InvalidComposition, "Levi blocks must be >= 1");
  }
}

long mass(const ConjClass& c, const IrreducibleRegistry& reg) {
  long total = 0;
  for (const auto& [label, lam] : c.lambda) {
    const IrreducibleSpec& p = reg.get(label);
    total += static_cast<long>(p.degree) * lam.size() * c.algebra.delta(p);
  }
  return total;
}

bool validate_class(const ConjClass& c, const IrreducibleRegistry& reg) {
  return mass(c, reg) == c.algebra.degree();
}

void require_valid(const ConjClass& c, const IrreducibleRegistry& reg) {
  long got = mass(c, reg);
  if (got != c.algebra.degree()) {
    throw Error(ErrorCode::InvalidClass,
                "mass identity fails: Σ deg(p)|λ(p)|δ_p = " + std::to_string(got) + " ≠ " + std::to_string(c.algebra.degree()));
  }
}

bool charpoly_valid(const CentralSimpleAlgebra& alg, const CharPoly& f, const IrreducibleRegistry& reg) {
  const long d = alg.index();
  long total = 0;
  for (const auto& [label, a] : f.factors) total += static_cast<long>(reg.get(label).degree) * a;
  if (total != alg.degree()) {
    throw Error(ErrorCode::DegreeMismatch,
                "characteristic polynomial has degree " + std::to_string(total) + ", algebra degree is " + std::to_string(alg.degree()));
  }
  for (const auto& [label, a] : f.factors) {
    if (a < 0) return false;
    if (a == 0) continue;
    const IrreducibleSpec& p = reg.get(label);
    const long ag = static_cast<long>(a) * p.degree;
    if (ag % d != 0) return false;
    if (alg.brauer.is_local()) continue;
    const long m_p = ag / d;
    const long cap = d / global_delta(alg.brauer, p);
    if ((m_p * cap) % p.degree != 0) return false;
  }
  return true;
}

CharPoly charpoly_of(const ConjClass& c, const IrreducibleRegistry& reg) {
  CharPoly f;
  for (const auto& [label, lam] : c.lambda) {
    f.factors[label] = static_cast<int>(lam.size() * c.algebra.delta(reg.get(label)));
  }
  return f;
}

std::vector<ConjClass> enumerate_classes(const CentralSimpleAlgebra& alg, const CharPoly& f, const IrreducibleRegistry& reg) {
  if (!charpoly_valid(alg, f, reg)) {
    throw Error(ErrorCode::InvalidCharpoly, "not the characteristic polynomial of any element of the algebra");
  }
  std::vector<std::string> labels;
  std::vector<std::vector<Partition>> choices;
  for (const auto& [label, a] : f.factors) {
    if (a == 0) continue;
    const long delta = alg.delta(reg.get(label));
    labels.push_back(label);
    choices.push_back(partitions_of(static_cast<int>(a / delta)));
  }
  std::vector<ConjClass> out;
  std::vector<std::size_t> idx(choices.size(), 0);
  while (true) {
    PartitionMap lam;
    for (std::size_t i = 0; i < labels.size(); ++i) lam.emplace(labels[i], choices[i][idx[i]]);
    out.emplace_back(alg, std::move(lam));
    // odometer with the first label most significant
    std::size_t k = choices.size();
    while (k > 0) {
      --k;
      if (++idx[k] < choices[k].size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
    if (choices.empty()) return out;
  }
}

std::vector<ConjClass> enumerate_all_classes(const CentralSimpleAlgebra& alg, const std::vector<std::string>& labels,
                                             const IrreducibleRegistry& reg) {
  // unit mass per label: deg(p)·δ_p; distribute the degree md among labels.
  std::vector<long> unit;
  for (const auto& l : labels) unit.push_back(reg.get(l).degree * alg.delta(reg.get(l)));
  const long target = alg.degree();
  std::vector<ConjClass> out;
  std::vector<int> sizes(labels.size(), 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long remaining) {
    if (i == labels.size()) {
      if (remaining != 0) return;
      CharPoly f;
      for (std::size_t j = 0; j < labels.size(); ++j) {
        if (sizes[j] > 0) f.factors[labels[j]] = static_cast<int>(sizes[j] * alg.delta(reg.get(labels[j])));
      }
      for (auto& c : enumerate_classes(alg, f, reg)) out.push_back(std::move(c));
      return;
    }
    for (long s = 0; s * unit[i] <= remaining; ++s) {
      sizes[i] = static_cast<int>(s);
      rec(i + 1, remaining - s * unit[i]);
    }
    sizes[i] = 0;
  };
  rec(0, target);
  return out;
}

ConjClass semisimple_part(const ConjClass& c) {
  PartitionMap lam;
  for (const auto& [label, part] : c.lambda) lam.emplace(label, Partition::ones(part.size()));
  return ConjClass(c.algebra, std::move(lam));
}

bool is_elliptic(const ConjClass& c) {
  return c.lambda.size() == 1 && c.lambda.begin()->second.all_ones();
}

EllipticSupport elliptic_support(const ConjClass& c, const IrreducibleRegistry& reg) {
  require_valid(c, reg);
  const long d = c.algebra.index();
  EllipticSupport out;
  for (const auto& [label, lam] : c.lambda) {
    const IrreducibleSpec& p = reg.get(label);
    const long scale_num = static_cast<long>(p.degree) * c.algebra.delta(p);
    if (scale_num % d != 0) throw Error(ErrorCode::InvalidClass, "deg(p)·δ_p is not a multiple of d for '" + label + "'");
    const long scale = scale_num / d;
    const Partition columns = transpose(lam);
    for (int column : columns.parts()) {
      out.levi.blocks.push_back(static_cast<int>(scale * column));
      out.blocks.emplace_back(c.algebra.with_capacity(static_cast<int>(scale * column)), PartitionMap{{label, Partition::ones(column)}});
    }
  }
  return out;
}

ConjClass induce(const LeviShape& levi, const std::vector<ConjClass>& blocks) {
  levi.validate();
  if (levi.blocks.size() != blocks.size()) {
    throw Error(ErrorCode::AlgebraMismatch, "Levi has " + std::to_string(levi.blocks.size()) + " blocks but " +
                                                std::to_string(blocks.size()) + " block classes were given");
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].algebra.m != levi.blocks[i] || !same_division_algebra(blocks[i].algebra, blocks.front().algebra)) {
      throw Error(ErrorCode::AlgebraMismatch, "block " + std::to_string(i) + " does not live on Mat_" +
                                                  std::to_string(levi.blocks[i]) + "(D) for a common D");
    }
  }
  std::map<std::string, std::vector<Partition>> columns;
  for (const auto& b : blocks) {
    for (const auto& [label, lam] : b.lambda) columns[label].push_back(lam);
  }
  PartitionMap lam;
  for (const auto& [label, parts] : columns) lam.emplace(label, concat_transpose(parts));
  return ConjClass(blocks.front().algebra.with_capacity(levi.total()), std::move(lam));
}

CentralizerShape centralizer_shape(const ConjClass& c, const IrreducibleRegistry& reg) {
  CentralizerShape shape;
  for (const auto& [label, lam] : c.lambda) {
    const IrreducibleSpec& p = reg.get(label);
    const long delta = c.algebra.delta(p);
    for (auto [value, mult] : multiplicities(lam)) shape.factors.push_back({label, p.degree, delta, mult, value});
  }
  return shape;
}

long centralizer_dim(const ConjClass& c, const IrreducibleRegistry& reg) {
  long dim = 0;
  for (const auto& [label, lam] : c.lambda) {
    const IrreducibleSpec& p = reg.get(label);
    const long delta = c.algebra.delta(p);
    long pairs = 0;
    for (int a : lam.parts()) {
      for (int b : lam.parts()) pairs += std::min(a, b);
    }
    dim += p.degree * delta * delta * pairs;
  }
  return dim;
}

bool closure_leq(const ConjClass& lhs, const ConjClass& rhs, const IrreducibleRegistry& reg) {
  if (!same_division_algebra(lhs.algebra, rhs.algebra) || lhs.algebra.m != rhs.algebra.m ||
      charpoly_of(lhs, reg) != charpoly_of(rhs, reg)) {
    throw Error(ErrorCode::CharpolyMismatch, "closure order compares classes with one characteristic polynomial");
  }
  for (const auto& [label, lam] : lhs.lambda) {
    if (!dominance_leq(lam, rhs.at(label))) return false;
  }
  return true;
}

ConjClass transfer_to_split(const ConjClass& c, const IrreducibleRegistry& reg) {
  PartitionMap lam;
  for (const auto& [label, part] : c.lambda) {
    lam.emplace(label, times(static_cast<int>(c.algebra.delta(reg.get(label))), part));
  }
  return ConjClass(c.algebra.split_form(), std::move(lam));
}

std::optional<ConjClass> transfers_from_split(const ConjClass& split_class, const CentralSimpleAlgebra& target,
                                              const IrreducibleRegistry& reg) {
  require_split_of_degree(split_class, target);
  PartitionMap lam;
  for (const auto& [label, part] : split_class.lambda) {
    const int delta = static_cast<int>(target.delta(reg.get(label)));
    if (!divides_times(delta, part)) return std::nullopt;
    lam.emplace(label, divide_times(delta, part));
  }
  return ConjClass(target, std::move(lam));
}

bool levi_transfers(const LeviShape& levi, const CentralSimpleAlgebra& target) {
  levi.validate();
  const long d = target.index();
  return std::all_of(levi.blocks.begin(), levi.blocks.end(), [d](int b) { return b % d == 0; });
}

InducedTransferResult induced_transfer_check(const LeviShape& levi, const std::vector<ConjClass>& split_blocks,
                                             const CentralSimpleAlgebra& target, const IrreducibleRegistry& reg) {
  InducedTransferResult result;
  const ConjClass induced = induce(levi, split_blocks);
  result.witness = transfers_from_split(induced, target, reg);
  result.transfers = result.witness.has_value();

  result.levi_and_blocks = levi_transfers(levi, target);
  if (result.levi_and_blocks) {
    const long d = target.index();
    for (std::size_t i = 0; i < split_blocks.size() && result.levi_and_blocks; ++i) {
      const auto block_target = target.with_capacity(static_cast<int>(levi.blocks[i] / d));
      result.levi_and_blocks = transfers_from_split(split_blocks[i], block_target, reg).has_value();
    }
  }
  return result;
}

bool LocalGlobalResult::local_conjunction() const {
  return std::all_of(per_place.begin(), per_place.end(), [](const auto& kv) { return kv.second; });
}

LocalGlobalResult local_global_transfer(const ConjClass& split_class, const CentralSimpleAlgebra& target,
                                        const IrreducibleRegistry& reg) {
  require_split_of_degree(split_class, target);
  if (target.brauer.is_local()) throw Error(ErrorCode::InvalidArgument, "local-global transfer needs a global base field");
  LocalGlobalResult result;

  result.global = true;
  for (const auto& [label, part] : split_class.lambda) {
    const long delta = global_delta(target.brauer, reg.get(label));
    result.global = result.global && divides_times(static_cast<int>(delta), part);
  }

  const bool prefix = split_class.lambda.size() > 1;
  for (const Place& place : target.brauer.base().places) {
    const LocalBrauerClass inv = target.brauer.at(place.label);
    const long d_v = inv.index();
    for (const auto& [label, part] : split_class.lambda) {
      const IrreducibleSpec& p = reg.get(label);
      const std::string head = prefix ? label + ":" : std::string();
      auto it = p.splitting.find(place.label);
      if (it == p.splitting.end()) {
        if (!inv.trivial()) {
          throw Error(ErrorCode::MissingSplittingData, "irreducible '" + label + "' has no splitting data at place '" + place.label + "'");
        }
        result.per_place[head + place.label] = true;
        continue;
      }
      const auto& degrees = it->second;
      for (std::size_t i = 0; i < degrees.size(); ++i) {
        const std::string key = degrees.size() == 1 ? head + place.label : head + place.label + "_" + std::to_string(i + 1);
        const long delta_w = local_delta(d_v, degrees[i]);
        result.per_place[key] = divides_times(static_cast<int>(delta_w), part);
      }
    }
  }
  return result;
}

}  // namespace innerforms
