#include "innerforms/split_oracle.hpp"

#include <algorithm>
#include <random>

#include "innerforms/error.hpp"

namespace innerforms {

namespace {

const std::vector<Rational>& coeffs_of(const IrreducibleSpec& p) {
  if (!p.coeffs) throw Error(ErrorCode::MissingCoefficients, "irreducible '" + p.label + "' has no coefficients");
  return *p.coeffs;
}

void require_split(const ConjClass& c) {
  if (!c.algebra.is_split()) throw Error(ErrorCode::AlgebraMismatch, "the split oracle only handles d = 1");
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RationalMatrix companion(const IrreducibleSpec& p) {
  const auto& c = coeffs_of(p);
  const int g = p.degree;
  RationalMatrix m(g, g);
  for (int i = 0; i + 1 < g; ++i) m(i + 1, i) = 1;
  for (int i = 0; i < g; ++i) m(i, g - 1) = -c[i];
  return m;
}

RationalMatrix jordan_block(const IrreducibleSpec& p, int k) {
  const int g = p.degree;
  const RationalMatrix comp = companion(p);
  RationalMatrix m(g * k, g * k);
  for (int b = 0; b < k; ++b) {
    m.set_block(b * g, b * g, comp);
    if (b + 1 < k) m.set_block(b * g, (b + 1) * g, RationalMatrix::identity(g));
  }
  return m;
}

RationalMatrix realize(const ConjClass& c, const IrreducibleRegistry& reg) {
  require_split(c);
  std::vector<RationalMatrix> blocks;
  for (const auto& [label, lam] : c.lambda) {
    const IrreducibleSpec& p = reg.get(label);
    for (int part : lam.parts()) blocks.push_back(jordan_block(p, part));
  }
  return block_diagonal(blocks);
}

int rank_pow(const RationalMatrix& x, const IrreducibleSpec& p, int k) {
  if (k == 0) return x.rows();
  return rank(power(evaluate_polynomial(coeffs_of(p), x), k));
}

ConjClass class_of(const RationalMatrix& x, const IrreducibleRegistry& reg, const std::vector<std::string>& hints,
                   const FieldSpec& base) {
  if (!x.square()) throw Error(ErrorCode::InvalidArgument, "class_of needs a square matrix");
  const int n = x.rows();
  std::vector<const IrreducibleSpec*> candidates;
  if (hints.empty()) {
    for (const auto& [label, spec] : reg.all()) {
      if (spec.coeffs) candidates.push_back(&spec);
    }
  } else {
    for (const auto& label : hints) candidates.push_back(&reg.get(label));
  }

  PartitionMap lambda;
  int accounted = 0;
  for (const IrreducibleSpec* p : candidates) {
    const RationalMatrix px = evaluate_polynomial(coeffs_of(*p), x);
    std::vector<int> columns;
    int prev_rank = n;
    RationalMatrix acc = RationalMatrix::identity(n);
    while (true) {
      acc = acc * px;
      const int r = rank(acc);
      const int jump = prev_rank - r;
      if (jump == 0) break;
      if (jump % p->degree != 0) {
        throw Error(ErrorCode::UnregisteredFactor, "rank jump of " + p->label + " is not a multiple of its degree");
      }
      columns.push_back(jump / p->degree);
      accounted += jump;
      prev_rank = r;
    }
    if (!columns.empty()) lambda.emplace(p->label, transpose(Partition(columns)));
  }
  if (accounted != n) {
    throw Error(ErrorCode::UnregisteredFactor, "registered irreducibles account for " + std::to_string(accounted) + " of " +
                                                   std::to_string(n) + " dimensions");
  }
  return ConjClass(CentralSimpleAlgebra::split(n, base), std::move(lambda));
}

bool oracle_closure_leq(const ConjClass& lhs, const ConjClass& rhs, const IrreducibleRegistry& reg) {
  require_split(lhs);
  require_split(rhs);
  if (lhs.algebra.m != rhs.algebra.m || charpoly_of(lhs, reg) != charpoly_of(rhs, reg)) {
    throw Error(ErrorCode::CharpolyMismatch, "oracle closure compares classes with one characteristic polynomial");
  }
  const RationalMatrix x1 = realize(lhs, reg);
  const RationalMatrix x2 = realize(rhs, reg);
  for (const auto& [label, lam] : lhs.lambda) {
    const IrreducibleSpec& p = reg.get(label);
    const int top = std::max(lam.largest(), rhs.at(label).largest());
    const RationalMatrix p1 = evaluate_polynomial(coeffs_of(p), x1);
    const RationalMatrix p2 = evaluate_polynomial(coeffs_of(p), x2);
    RationalMatrix a1 = p1;
    RationalMatrix a2 = p2;
    for (int k = 1; k <= top; ++k) {
      if (rank(a1) > rank(a2)) return false;
      a1 = a1 * p1;
      a2 = a2 * p2;
    }
  }
  return true;
}

long oracle_centralizer_dim(const RationalMatrix& x) {
  const int n = x.rows();
  const RationalMatrix id = RationalMatrix::identity(n);
  const RationalMatrix op = kronecker(id, x) - kronecker(x.transposed(), id);
  return static_cast<long>(n) * n - rank(op);
}

GenericInductionResult generic_induction_check(const LeviShape& levi, const std::vector<ConjClass>& blocks, int trials,
                                               const IrreducibleRegistry& reg, std::uint64_t seed) {
  GenericInductionResult result;
  result.predicted = induce(levi, blocks);
  require_split(result.predicted);
  result.trials = trials;

  std::vector<RationalMatrix> realized;
  std::vector<std::string> hints;
  for (const auto& b : blocks) {
    realized.push_back(realize(b, reg));
    for (const auto& [label, lam] : b.lambda) {
      if (std::find(hints.begin(), hints.end(), label) == hints.end()) hints.push_back(label);
    }
  }
  const RationalMatrix base_matrix = block_diagonal(realized);
  const int n = base_matrix.rows();
  std::vector<int> offsets{0};
  for (int b : levi.blocks) offsets.push_back(offsets.back() + b);

  std::optional<ConjClass> maximal;
  bool exceeded = false;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(t))));
    std::uniform_int_distribution<int> entry(-3, 3);
    RationalMatrix x = base_matrix;
    for (std::size_t bi = 0; bi < levi.blocks.size(); ++bi) {
      for (int i = offsets[bi]; i < offsets[bi + 1]; ++i) {
        for (int j = offsets[bi + 1]; j < n; ++j) x(i, j) = entry(rng);
      }
    }
    ConjClass got = class_of(x, reg, hints, result.predicted.algebra.brauer.base());
    got.algebra = result.predicted.algebra;
    if (got == result.predicted) ++result.hits;
    if (!closure_leq(got, result.predicted, reg)) {
      exceeded = true;
      if (!result.exceeding) result.exceeding = got;
    }
    if (!maximal || closure_leq(*maximal, got, reg)) maximal = got;
  }
  result.maximal = maximal.value_or(ConjClass{});
  result.passed = !exceeded && maximal && *maximal == result.predicted;
  return result;
}

}  // namespace innerforms
