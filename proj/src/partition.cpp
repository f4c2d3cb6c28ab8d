#include "innerforms/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "innerforms/error.hpp"

namespace innerforms {

namespace {

std::vector<int> normalized(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(normalized(std::move(parts))) {
  if (!parts_.empty() && parts_.back() < 0) {
    throw Error(ErrorCode::InvalidArgument, "partition parts must be positive");
  }
}

Partition Partition::from_parts(std::vector<int> parts) { return Partition(std::move(parts)); }

Partition Partition::ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(std::max(n, 0)), 1)); }

int Partition::size() const noexcept {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

bool Partition::all_ones() const noexcept {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1; });
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

Partition transpose(const Partition& lambda) {
  std::vector<int> cols(static_cast<std::size_t>(lambda.largest()), 0);
  for (int part : lambda.parts()) {
    for (int i = 0; i < part; ++i) ++cols[static_cast<std::size_t>(i)];
  }
  return Partition(std::move(cols));
}

Partition times(int e, const Partition& lambda) {
  if (e < 1) throw Error(ErrorCode::InvalidArgument, "times: e must be >= 1");
  std::vector<int> out;
  out.reserve(lambda.parts().size() * static_cast<std::size_t>(e));
  for (int part : lambda.parts()) out.insert(out.end(), static_cast<std::size_t>(e), part);
  return Partition(std::move(out));
}

Partition dot(int e, const Partition& lambda) {
  if (e < 1) throw Error(ErrorCode::InvalidArgument, "dot: e must be >= 1");
  std::vector<int> out = lambda.parts();
  for (int& part : out) part *= e;
  return Partition(std::move(out));
}

std::vector<std::pair<int, int>> multiplicities(const Partition& lambda) {
  std::map<int, int> counts;
  for (int part : lambda.parts()) ++counts[part];
  return {counts.begin(), counts.end()};
}

bool divides_times(int e, const Partition& lambda) {
  if (e < 1) throw Error(ErrorCode::InvalidArgument, "divides_times: e must be >= 1");
  for (auto [value, mult] : multiplicities(lambda)) {
    if (mult % e != 0) return false;
  }
  return true;
}

bool divides_dot(int e, const Partition& lambda) {
  if (e < 1) throw Error(ErrorCode::InvalidArgument, "divides_dot: e must be >= 1");
  return std::all_of(lambda.parts().begin(), lambda.parts().end(), [e](int p) { return p % e == 0; });
}

Partition divide_times(int e, const Partition& lambda) {
  if (!divides_times(e, lambda)) {
    throw Error(ErrorCode::InvalidArgument, "divide_times: " + std::to_string(e) + " does not |x-divide " + lambda.to_string());
  }
  std::vector<int> out;
  for (auto [value, mult] : multiplicities(lambda)) out.insert(out.end(), static_cast<std::size_t>(mult / e), value);
  return Partition(std::move(out));
}

bool dominance_leq(const Partition& lhs, const Partition& rhs) {
  const std::size_t n = std::max(lhs.parts().size(), rhs.parts().size());
  long a = 0, b = 0;
  for (std::size_t s = 0; s < n; ++s) {
    a += s < lhs.parts().size() ? lhs.parts()[s] : 0;
    b += s < rhs.parts().size() ? rhs.parts()[s] : 0;
    if (a > b) return false;
  }
  return true;
}

Partition concat_transpose(std::span<const Partition> lambdas) {
  // Columnwise sum: row i of the result is the sum of the i-th parts.
  std::vector<int> rows;
  for (const Partition& lambda : lambdas) {
    if (lambda.parts().size() > rows.size()) rows.resize(lambda.parts().size(), 0);
    for (std::size_t i = 0; i < lambda.parts().size(); ++i) rows[i] += lambda.parts()[i];
  }
  return Partition(std::move(rows));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

long partition_count(int n) {
  if (n < 0) return 0;
  std::vector<long> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part) {
    for (int total = part; total <= n; ++total) ways[static_cast<std::size_t>(total)] += ways[static_cast<std::size_t>(total - part)];
  }
  return ways[static_cast<std::size_t>(n)];
}

}  // namespace innerforms
