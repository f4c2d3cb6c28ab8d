#include "innerforms/arthur.hpp"

#include <bit>

#include "innerforms/error.hpp"
#include "innerforms/split_oracle.hpp"

namespace innerforms {

namespace {

void require_nested(const StdParabolic& p1, const StdParabolic& p2) {
  if (!p1.contained_in(p2)) throw Error(ErrorCode::NotNested, "expected P1 ⊆ P2");
}

void require_dimension(const StdParabolic& p, const A0Point& x) {
  if (static_cast<int>(x.size()) != p.m()) throw Error(ErrorCode::InvalidArgument, "point has the wrong dimension");
}

int sign_of_dim(int dim) { return dim % 2 == 0 ? 1 : -1; }

Rational interval_sum(const A0Point& x, int s, int e) {
  Rational total = 0;
  for (int k = s; k < e; ++k) total += x[k];
  return total;
}

/// Σ_{[s,c)} x − ((c−s)/(e−s)) Σ_{[s,e)} x.
Rational weight(const A0Point& x, int s, int c, int e) {
  return interval_sum(x, s, c) - make_rational(c - s, e - s) * interval_sum(x, s, e);
}

int previous_cut(const StdParabolic& p, int c) {
  for (int k = c - 1; k > 0; --k) {
    if (p.has_cut(k)) return k;
  }
  return 0;
}

int next_cut(const StdParabolic& p, int c) {
  for (int k = c + 1; k < p.m(); ++k) {
    if (p.has_cut(k)) return k;
  }
  return p.m();
}

A0Point minus(const A0Point& a, const A0Point& b) {
  A0Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace

StdParabolic::StdParabolic(int m, std::uint32_t cuts) : m_(m), cuts_(cuts) {
  if (m < 1 || m > 31) throw Error(ErrorCode::InvalidArgument, "rank out of range");
  const std::uint32_t allowed = ((1U << m) - 1U) & ~1U;
  if ((cuts & ~allowed) != 0) throw Error(ErrorCode::InvalidArgument, "cut outside {1, ..., m-1}");
}

StdParabolic StdParabolic::from_composition(const std::vector<int>& composition) {
  if (composition.empty()) throw Error(ErrorCode::InvalidComposition, "empty composition");
  int at = 0;
  std::uint32_t cuts = 0;
  for (std::size_t i = 0; i < composition.size(); ++i) {
    if (composition[i] < 1) throw Error(ErrorCode::InvalidComposition, "composition blocks must be >= 1");
    at += composition[i];
    if (i + 1 < composition.size()) cuts |= 1U << at;
  }
  return StdParabolic(at, cuts);
}

StdParabolic StdParabolic::minimal(int m) { return StdParabolic(m, ((1U << m) - 1U) & ~1U); }

std::vector<StdParabolic> StdParabolic::all(int m) {
  std::vector<StdParabolic> out;
  const std::uint32_t full = minimal(m).cuts();
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if ((mask & ~full) == 0) out.emplace_back(m, mask);
  }
  return out;
}

int StdParabolic::blocks() const noexcept { return std::popcount(cuts_) + 1; }

std::vector<int> StdParabolic::composition() const {
  std::vector<int> out;
  int start = 0;
  for (int c = 1; c <= m_; ++c) {
    if (c == m_ || has_cut(c)) {
      out.push_back(c - start);
      start = c;
    }
  }
  return out;
}

A0Point project(const StdParabolic& p, const A0Point& x) {
  require_dimension(p, x);
  A0Point out(x.size());
  int start = 0;
  for (int c = 1; c <= p.m(); ++c) {
    if (c == p.m() || p.has_cut(c)) {
      Rational avg = interval_sum(x, start, c) / (c - start);
      for (int k = start; k < c; ++k) out[k] = avg;
      start = c;
    }
  }
  return out;
}

int tau(const StdParabolic& p1, const StdParabolic& p2, const A0Point& x) {
  require_nested(p1, p2);
  require_dimension(p1, x);
  for (int c = 1; c < p1.m(); ++c) {
    if (!p1.has_cut(c) || p2.has_cut(c)) continue;
    const int s = previous_cut(p1, c);
    const int e = next_cut(p1, c);
    const Rational left = interval_sum(x, s, c) / (c - s);
    const Rational right = interval_sum(x, c, e) / (e - c);
    if (left - right <= 0) return 0;
  }
  return 1;
}

int tau_hat(const StdParabolic& p1, const StdParabolic& p2, const A0Point& x) {
  require_nested(p1, p2);
  require_dimension(p1, x);
  for (int c = 1; c < p1.m(); ++c) {
    if (!p1.has_cut(c) || p2.has_cut(c)) continue;
    if (weight(x, previous_cut(p2, c), c, next_cut(p2, c)) <= 0) return 0;
  }
  return 1;
}

int sigma(const StdParabolic& p1, const StdParabolic& p2, const A0Point& x) {
  require_nested(p1, p2);
  const StdParabolic g = StdParabolic::group(p1.m());
  int total = 0;
  for (const StdParabolic& p : StdParabolic::all(p1.m())) {
    if (!p2.contained_in(p)) continue;
    total += sign_of_dim(p2.blocks() - p.blocks()) * tau(p1, p, x) * tau_hat(p, g, x);
  }
  return total;
}

int gamma_trunc(const StdParabolic& p, const A0Point& x, const A0Point& y) {
  require_dimension(p, x);
  require_dimension(p, y);
  const StdParabolic g = StdParabolic::group(p.m());
  int total = 0;
  for (const StdParabolic& q : StdParabolic::all(p.m())) {
    if (!p.contained_in(q)) continue;
    const int t = tau(p, q, x);
    if (t == 0) continue;
    total += sign_of_dim(q.blocks() - g.blocks()) * tau_hat(q, g, minus(x, project(q, y)));
  }
  return total;
}

InversionSides inversion_sides(const StdParabolic& p, const A0Point& x, const A0Point& y) {
  const StdParabolic g = StdParabolic::group(p.m());
  InversionSides sides;
  sides.lhs = tau_hat(p, g, minus(x, project(p, y)));
  for (const StdParabolic& q : StdParabolic::all(p.m())) {
    if (!p.contained_in(q)) continue;
    const int t = tau_hat(p, q, x);
    if (t == 0) continue;
    sides.rhs += sign_of_dim(q.blocks() - g.blocks()) * gamma_trunc(q, x, project(q, y));
  }
  return sides;
}

bool inversion_check(const StdParabolic& p, const A0Point& x, const A0Point& y) { return inversion_sides(p, x, y).holds(); }

int langlands_sum(const StdParabolic& p1, const StdParabolic& p2, const A0Point& x) {
  require_nested(p1, p2);
  int total = 0;
  for (const StdParabolic& p : StdParabolic::all(p1.m())) {
    if (!p1.contained_in(p) || !p.contained_in(p2)) continue;
    total += sign_of_dim(p.blocks() - p2.blocks()) * tau(p1, p, x) * tau_hat(p, p2, x);
  }
  return total;
}

bool is_regular(const A0Point& x) {
  const int m = static_cast<int>(x.size());
  for (int s = 0; s < m; ++s) {
    for (int e = s + 2; e <= m; ++e) {
      for (int c = s + 1; c < e; ++c) {
        if (weight(x, s, c, e) == 0) return false;
      }
    }
  }
  return true;
}

bool is_regular_pair(const A0Point& x, const A0Point& y) {
  const int m = static_cast<int>(x.size());
  for (const StdParabolic& q : StdParabolic::all(m)) {
    if (!is_regular(minus(x, project(q, y)))) return false;
  }
  return true;
}

A0Point random_point(std::mt19937_64& rng, int m, int range, int max_den) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, max_den);
  A0Point x;
  for (int i = 0; i < m; ++i) {
    Rational v(num(rng), den(rng));
    v.canonicalize();
    x.push_back(v);
  }
  return x;
}

Rational support_radius(const A0Point& y) {
  Rational total = 0;
  for (const auto& v : y) total += abs(v);
  return total * static_cast<long>(y.size());
}

Rational projection_norm(const StdParabolic& p, const A0Point& x) {
  const A0Point part = minus(project(p, x), project(StdParabolic::group(p.m()), x));
  Rational best = 0;
  for (const auto& v : part) {
    if (abs(v) > best) best = abs(v);
  }
  return best;
}

CompactSupportReport compact_support_check(const StdParabolic& p, const A0Point& y, long samples, std::uint64_t seed,
                                           std::optional<Rational> radius) {
  require_dimension(p, y);
  CompactSupportReport report;
  report.radius = radius.value_or(support_radius(y));
  if (p.blocks() == 1) return report;
  for (long i = 0; i < samples; ++i) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(i))));
    A0Point x;
    do {
      x = random_point(rng, p.m());
      const Rational norm = projection_norm(p, x);
      if (norm == 0) continue;
      // push the a_P^G component beyond the radius
      std::uniform_int_distribution<int> extra(1, 4);
      const Rational scale = (report.radius + extra(rng)) / norm;
      const A0Point center = project(StdParabolic::group(p.m()), x);
      const A0Point proj = project(p, x);
      for (std::size_t k = 0; k < x.size(); ++k) x[k] = center[k] + scale * (proj[k] - center[k]) + (x[k] - proj[k]);
    } while (projection_norm(p, x) <= report.radius || !is_regular_pair(x, y));
    ++report.checked;
    if (gamma_trunc(p, x, y) != 0) {
      ++report.nonzero;
      if (!report.witness) report.witness = x;
    }
  }
  return report;
}

}  // namespace innerforms
