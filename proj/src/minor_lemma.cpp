#include "innerforms/minor_lemma.hpp"

#include <algorithm>
#include <functional>

#include "innerforms/linalg.hpp"

namespace innerforms {

namespace {

bool bipartite(int vertices, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> colour(vertices, -1);
  for (int start = 0; start < vertices; ++start) {
    if (colour[start] != -1) continue;
    colour[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (auto [a, b] : edges) {
        int other = -1;
        if (a == u) other = b;
        else if (b == u) other = a;
        if (other < 0) continue;
        if (colour[other] == -1) {
          colour[other] = 1 - colour[u];
          stack.push_back(other);
        } else if (colour[other] == colour[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

void for_each_subset(int n, int r, const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  if (r > n) return;
  while (true) {
    if (visit(idx)) return;
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

IntMatrix incidence_matrix(int vertices, const std::vector<std::pair<int, int>>& edges) {
  IntMatrix m(vertices, std::vector<std::int64_t>(edges.size(), 0));
  for (std::size_t j = 0; j < edges.size(); ++j) {
    m[edges[j].first][j] = 1;
    m[edges[j].second][j] = 1;
  }
  return m;
}

bool has_unimodular_maximal_minor(const IntMatrix& a) {
  const int r = rank_i64(a);
  if (r == 0) return true;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a.front().size());
  bool found = false;
  for_each_subset(rows, r, [&](const std::vector<int>& rs) {
    for_each_subset(cols, r, [&](const std::vector<int>& cs) {
      IntMatrix minor(r, std::vector<std::int64_t>(r));
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) minor[i][j] = a[rs[i]][cs[j]];
      }
      const auto det = determinant_i64(minor);
      found = det == 1 || det == -1;
      return found;
    });
    return found;
  });
  return found;
}

MinorLemmaReport check_minor_lemma(int max_columns, bool bipartite_only) {
  MinorLemmaReport report;
  for (int k = 1; k <= max_columns; ++k) {
    // endpoint labels in restricted-growth order: each new label is one more than the largest so far
    std::vector<int> labels(2 * k);
    std::function<void(int, int)> rec = [&](int pos, int used) {
      if (pos == 2 * k) {
        std::vector<std::pair<int, int>> edges;
        for (int j = 0; j < k; ++j) edges.emplace_back(labels[2 * j], labels[2 * j + 1]);
        if (bipartite_only && !bipartite(used, edges)) return;
        ++report.matrices;
        IntMatrix a = incidence_matrix(used, edges);
        if (!has_unimodular_maximal_minor(a)) {
          if (report.counterexamples == 0) {
            report.first_counterexample = a;
            report.counterexample_rank = rank_i64(a);
          }
          ++report.counterexamples;
        }
        return;
      }
      for (int v = 0; v <= used; ++v) {
        if (pos % 2 == 1 && v == labels[pos - 1]) continue;
        labels[pos] = v;
        rec(pos + 1, v == used ? used + 1 : used);
      }
    };
    rec(0, 0);
  }
  return report;
}

std::vector<std::vector<int>> set_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int blocks) {
    if (pos == n) {
      out.push_back(rgs);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[pos] = b;
      rec(pos + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  if (n == 0) return {{}};
  rec(0, 0);
  return out;
}

DivisibilityReport check_levi_divisibility(int max_blocks, int max_size) {
  DivisibilityReport report;
  for (int l = 1; l <= max_blocks; ++l) {
    const auto partitions = set_partitions(l);
    // compositions h of n ≤ max_size with l parts
    std::vector<std::vector<int>> compositions;
    std::vector<int> h(l);
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
      if (pos == l) {
        compositions.push_back(h);
        return;
      }
      for (int v = 1; v <= remaining - (l - pos - 1); ++v) {
        h[pos] = v;
        rec(pos + 1, remaining - v);
      }
    };
    rec(0, max_size);

    for (const auto& p1 : partitions) {
      for (const auto& p2 : partitions) {
        const int b1 = 1 + *std::max_element(p1.begin(), p1.end());
        const int b2 = 1 + *std::max_element(p2.begin(), p2.end());
        IntMatrix stacked(b1 + b2, std::vector<std::int64_t>(l, 0));
        for (int j = 0; j < l; ++j) {
          stacked[p1[j]][j] = 1;
          stacked[b1 + p2[j]][j] = 1;
        }
        if (rank_i64(stacked) != l) continue;
        for (const auto& blocks : compositions) {
          int n = 0;
          for (int v : blocks) n += v;
          for (int k = 2; k <= n; ++k) {
            bool divides_both = true;
            for (int row = 0; row < b1 + b2 && divides_both; ++row) {
              long sum = 0;
              for (int j = 0; j < l; ++j) sum += stacked[row][j] * blocks[j];
              divides_both = sum % k == 0;
            }
            if (!divides_both) continue;
            ++report.instances;
            bool all = true;
            for (int v : blocks) all = all && v % k == 0;
            if (!all) {
              ++report.counterexamples;
              if (!report.witness_blocks) report.witness_blocks = blocks;
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace innerforms
