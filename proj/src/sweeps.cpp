#include "innerforms/sweeps.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>

#include "innerforms/arthur.hpp"
#include "innerforms/error.hpp"
#include "innerforms/json_io.hpp"
#include "innerforms/measures.hpp"
#include "innerforms/minor_lemma.hpp"
#include "innerforms/split_oracle.hpp"

namespace innerforms {

namespace {

using Failure = std::optional<std::string>;

template <class Fn>
SweepReport run_cases(std::string name, long count, Fn&& fn, Exec exec) {
  std::vector<Failure> results(static_cast<std::size_t>(count));
  auto guarded = [&](long i) {
    try {
      results[i] = fn(i);
    } catch (const Error& e) {
      results[i] = Json{{"case", i}, {"error", error_code_name(e.code())}, {"message", e.what()}}.dump();
    } catch (const std::exception& e) {
      results[i] = Json{{"case", i}, {"error", "exception"}, {"message", e.what()}}.dump();
    }
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < count; ++i) guarded(i);
  } else {
    for (long i = 0; i < count; ++i) guarded(i);
  }
  SweepReport report;
  report.name = std::move(name);
  report.cases = count;
  for (const auto& r : results) {
    if (!r) continue;
    if (report.failures == 0) report.first_failure = *r;
    ++report.failures;
  }
  return report;
}

std::vector<int> times_each(int d, const std::vector<int>& blocks) {
  std::vector<int> out;
  for (int b : blocks) out.push_back(d * b);
  return out;
}

FieldSpec local_base() { return FieldSpec::local(Place::finite("p", 3)); }

CentralSimpleAlgebra local_algebra(int m, int d) {
  return {m, BrauerClass(local_base(), std::map<std::string, Rational>{{"p", Rational(1, d)}})};
}

const std::vector<std::string>& all_labels() {
  static const std::vector<std::string> labels{"T", "T-1", "T^2-2", "T^4-2"};
  return labels;
}

/// Cartesian product of per-slot choice counts, odometer style.
std::vector<std::vector<int>> product_indices(const std::vector<int>& sizes) {
  std::vector<std::vector<int>> out;
  if (std::any_of(sizes.begin(), sizes.end(), [](int s) { return s == 0; })) return out;
  std::vector<int> idx(sizes.size(), 0);
  while (true) {
    out.push_back(idx);
    std::size_t k = sizes.size();
    while (k > 0) {
      --k;
      if (++idx[k] < sizes[k]) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
    if (sizes.empty()) return out;
  }
}

/// Every charpoly over `labels` of total degree n (zero multiplicities dropped).
std::vector<CharPoly> charpolys_of_degree(int n, const std::vector<std::string>& labels, const IrreducibleRegistry& reg) {
  std::vector<CharPoly> out;
  std::vector<int> a(labels.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i == labels.size()) {
      if (remaining != 0) return;
      CharPoly f;
      for (std::size_t j = 0; j < labels.size(); ++j) {
        if (a[j] > 0) f.factors[labels[j]] = a[j];
      }
      out.push_back(f);
      return;
    }
    const int g = reg.get(labels[i]).degree;
    for (int k = 0; k * g <= remaining; ++k) {
      a[i] = k;
      rec(i + 1, remaining - k * g);
    }
    a[i] = 0;
  };
  rec(0, n);
  return out;
}

std::map<std::map<std::string, int>, std::vector<ConjClass>> fibers(const std::vector<ConjClass>& classes,
                                                                    const IrreducibleRegistry& reg) {
  std::map<std::map<std::string, int>, std::vector<ConjClass>> out;
  for (const auto& c : classes) out[charpoly_of(c, reg).factors].push_back(c);
  return out;
}

/// Algebras used by the enumeration sweeps: local of index 1..4 and three global ones.
std::vector<CentralSimpleAlgebra> test_algebras(int max_degree) {
  std::vector<CentralSimpleAlgebra> out;
  for (int d = 1; d <= 4; ++d) {
    for (int m = 1; m * d <= max_degree; ++m) out.push_back(local_algebra(m, d));
  }
  const FieldSpec q = FieldSpec::global({Place::real("inf"), Place::finite("2", 2), Place::finite("3", 3)});
  const std::vector<std::map<std::string, Rational>> invariants{
      {{"3", Rational(1, 2)}, {"inf", Rational(1, 2)}},
      {{"2", Rational(1, 3)}, {"3", Rational(2, 3)}},
      {{"2", Rational(1, 4)}, {"3", Rational(1, 4)}, {"inf", Rational(1, 2)}},
  };
  for (const auto& inv : invariants) {
    const BrauerClass b(q, inv);
    const int d = static_cast<int>(index(b));
    for (int m = 1; m * d <= max_degree; ++m) out.push_back({m, b});
  }
  return out;
}

const IrreducibleRegistry& registry_for(const FieldSpec& base) {
  static const IrreducibleRegistry local = standard_registry(local_base());
  static const IrreducibleRegistry global =
      standard_registry(FieldSpec::global({Place::real("inf"), Place::finite("2", 2), Place::finite("3", 3)}));
  return base.kind == FieldKind::Local ? local : global;
}

}  // namespace

std::vector<std::vector<int>> compositions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int b = 1; b <= remaining; ++b) {
      current.push_back(b);
      rec(remaining - b);
      current.pop_back();
    }
  };
  if (n > 0) rec(n);
  return out;
}

IrreducibleRegistry standard_registry(const FieldSpec& base) {
  struct Seed {
    const char* label;
    std::vector<Rational> coeffs;
  };
  const std::vector<Seed> seeds{
      {"T", {0}}, {"T-1", {-1}}, {"T^2-2", {-2, 0}}, {"T^4-2", {-2, 0, 0, 0}}};
  IrreducibleRegistry reg;
  for (const auto& s : seeds) {
    IrreducibleSpec p = IrreducibleSpec::with_coeffs(s.label, s.coeffs);
    for (const Place& v : base.places) {
      if (v.kind == PlaceKind::Finite) {
        p.splitting[v.label] = {p.degree};
      } else if (v.kind == PlaceKind::Complex) {
        p.splitting[v.label] = std::vector<int>(p.degree, 1);
      } else if (p.degree == 1) {
        p.splitting[v.label] = {1};
      } else if (p.degree == 2) {
        p.splitting[v.label] = {1, 1};
      } else {
        p.splitting[v.label] = {1, 1, 2};
      }
    }
    reg.add(std::move(p));
  }
  return reg;
}

SweepReport sweep_closure_oracle(int max_n, Exec exec, const ClosureFn& closure) {
  const IrreducibleRegistry reg = standard_registry();
  const std::vector<std::string> labels{"T", "T-1", "T^2-2"};
  std::vector<std::pair<ConjClass, ConjClass>> pairs;
  long fiber_count = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& [key, fiber] : fibers(enumerate_all_classes(CentralSimpleAlgebra::split(n), labels, reg), reg)) {
      ++fiber_count;
      for (const auto& a : fiber) {
        for (const auto& b : fiber) pairs.emplace_back(a, b);
      }
    }
  }
  SweepReport r = run_cases(
      "closure_oracle", static_cast<long>(pairs.size()),
      [&](long i) -> Failure {
        const auto& [a, b] = pairs[i];
        const bool lib = closure(a, b, reg);
        const bool oracle = oracle_closure_leq(a, b, reg);
        if (lib == oracle) return std::nullopt;
        return Json{{"lhs", to_json(a)}, {"rhs", to_json(b)}, {"closure_leq", lib}, {"oracle", oracle}}.dump();
      },
      exec);
  r.summary = std::to_string(pairs.size()) + " ordered pairs in " + std::to_string(fiber_count) + " fibers, n <= " +
              std::to_string(max_n);
  return r;
}

SweepReport sweep_induction_oracle(int max_n, int trials, Exec exec, std::uint64_t seed) {
  const IrreducibleRegistry reg = standard_registry();
  struct Case {
    LeviShape levi;
    std::vector<ConjClass> blocks;
  };
  std::vector<Case> cases;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& comp : compositions_of(n)) {
      std::vector<std::vector<Partition>> choices;
      std::vector<int> sizes;
      for (int b : comp) {
        choices.push_back(partitions_of(b));
        sizes.push_back(static_cast<int>(choices.back().size()));
      }
      for (const auto& idx : product_indices(sizes)) {
        Case c{LeviShape{comp}, {}};
        for (std::size_t k = 0; k < comp.size(); ++k) {
          c.blocks.emplace_back(CentralSimpleAlgebra::split(comp[k]), PartitionMap{{"T", choices[k][idx[k]]}});
        }
        cases.push_back(std::move(c));
      }
    }
  }
  long richardson = 0;
  for (const auto& c : cases) {
    richardson += std::all_of(c.blocks.begin(), c.blocks.end(), [](const ConjClass& b) { return b.at("T").all_ones(); });
  }
  SweepReport r = run_cases(
      "induction_oracle", static_cast<long>(cases.size()),
      [&](long i) -> Failure {
        const Case& c = cases[i];
        const auto result = generic_induction_check(c.levi, c.blocks, trials, reg, splitmix64(seed + static_cast<std::uint64_t>(i)));
        bool ok = result.passed;
        const bool zero_blocks =
            std::all_of(c.blocks.begin(), c.blocks.end(), [](const ConjClass& b) { return b.at("T").all_ones(); });
        if (zero_blocks) ok = ok && result.predicted.at("T") == transpose(Partition(c.levi.blocks));
        if (ok) return std::nullopt;
        Json blocks = Json::array();
        for (const auto& b : c.blocks) blocks.push_back(to_json(b.at("T")));
        return Json{{"levi", c.levi.blocks},
                    {"blocks", blocks},
                    {"predicted", to_json(result.predicted.at("T"))},
                    {"maximal", to_json(result.maximal.at("T"))},
                    {"hits", result.hits}}
            .dump();
      },
      exec);
  r.summary = std::to_string(cases.size()) + " Levi/block configurations (" + std::to_string(richardson) +
              " Richardson), " + std::to_string(trials) + " trials each";
  return r;
}

SweepReport sweep_transfer_induction(int max_degree, const std::vector<int>& indices, Exec exec) {
  const IrreducibleRegistry& reg = registry_for(local_base());
  struct Case {
    int d;
    std::vector<int> comp;
    std::vector<int> choice;
  };
  std::map<std::pair<int, int>, std::vector<ConjClass>> block_classes;
  std::vector<Case> cases;
  for (int d : indices) {
    for (int m = 1; m * d <= max_degree; ++m) {
      for (const auto& comp : compositions_of(m)) {
        std::vector<int> sizes;
        for (int b : comp) {
          auto& list = block_classes[{d, b}];
          if (list.empty()) list = enumerate_all_classes(local_algebra(b, d), all_labels(), reg);
          sizes.push_back(static_cast<int>(list.size()));
        }
        for (auto& idx : product_indices(sizes)) cases.push_back({d, comp, std::move(idx)});
      }
    }
  }
  SweepReport r = run_cases(
      "transfer_induction_commute", static_cast<long>(cases.size()),
      [&](long i) -> Failure {
        const Case& c = cases[i];
        std::vector<ConjClass> blocks;
        std::vector<ConjClass> split_blocks;
        for (std::size_t k = 0; k < c.comp.size(); ++k) {
          blocks.push_back(block_classes.at({c.d, c.comp[k]})[c.choice[k]]);
          split_blocks.push_back(transfer_to_split(blocks.back(), reg));
        }
        const ConjClass lhs = transfer_to_split(induce(LeviShape{c.comp}, blocks), reg);
        const ConjClass rhs = induce(LeviShape{times_each(c.d, c.comp)}, split_blocks);
        if (lhs == rhs) return std::nullopt;
        Json jb = Json::array();
        for (const auto& b : blocks) jb.push_back(to_json(b));
        return Json{{"levi", c.comp}, {"blocks", jb}, {"transfer_of_induced", to_json(lhs)}, {"induced_of_transfers", to_json(rhs)}}
            .dump();
      },
      exec);
  r.summary = std::to_string(cases.size()) + " (Mat_m(D), Levi, blocks) configurations, md <= " + std::to_string(max_degree);
  return r;
}

SweepReport sweep_induced_transfer(int max_degree, const std::vector<int>& indices, Exec exec) {
  const IrreducibleRegistry& reg = registry_for(local_base());
  struct Case {
    int d;
    std::vector<int> comp;
    std::vector<int> choice;
  };
  std::map<int, std::vector<ConjClass>> split_classes;
  std::vector<Case> cases;
  for (int d : indices) {
    for (int n = d; n <= max_degree; n += d) {
      for (const auto& comp : compositions_of(n)) {
        std::vector<int> sizes;
        for (int b : comp) {
          auto& list = split_classes[b];
          if (list.empty()) list = enumerate_all_classes(CentralSimpleAlgebra::split(b, local_base()), all_labels(), reg);
          sizes.push_back(static_cast<int>(list.size()));
        }
        for (auto& idx : product_indices(sizes)) cases.push_back({d, comp, std::move(idx)});
      }
    }
  }
  std::vector<char> transferred(cases.size(), 0);
  SweepReport r = run_cases(
      "induced_transfer_biconditional", static_cast<long>(cases.size()),
      [&](long i) -> Failure {
        const Case& c = cases[i];
        std::vector<ConjClass> blocks;
        int n = 0;
        for (std::size_t k = 0; k < c.comp.size(); ++k) {
          blocks.push_back(split_classes.at(c.comp[k])[c.choice[k]]);
          n += c.comp[k];
        }
        const auto result = induced_transfer_check(LeviShape{c.comp}, blocks, local_algebra(n / c.d, c.d), reg);
        transferred[i] = result.transfers;
        if (result.agrees()) return std::nullopt;
        Json jb = Json::array();
        for (const auto& b : blocks) jb.push_back(to_json(b));
        return Json{{"d", c.d}, {"levi", c.comp}, {"blocks", jb}, {"transfers", result.transfers}, {"levi_and_blocks", result.levi_and_blocks}}
            .dump();
      },
      exec);
  const long yes = std::count(transferred.begin(), transferred.end(), 1);
  r.summary = std::to_string(cases.size()) + " split configurations, " + std::to_string(yes) + " transfer";
  return r;
}

namespace {

struct GlobalConfig {
  CentralSimpleAlgebra target;
  IrreducibleRegistry reg;
  ConjClass split_class;
};

std::vector<int> random_composition(std::mt19937_64& rng, int g) {
  std::vector<int> parts;
  while (g > 0) {
    std::uniform_int_distribution<int> pick(1, g);
    parts.push_back(pick(rng));
    g -= parts.back();
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

GlobalConfig random_global_config(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  const std::vector<std::pair<std::string, long>> primes{{"2", 2}, {"3", 3}, {"5", 5}, {"7", 7}};
  const bool with_real = uniform(0, 1) == 1;
  const int finite_count = uniform(1, with_real ? 3 : 4);
  std::vector<Place> places;
  if (with_real) places.push_back(Place::real("inf"));
  for (int i = 0; i < finite_count; ++i) places.push_back(Place::finite(primes[i].first, primes[i].second));
  const FieldSpec base = FieldSpec::global(places);

  const int d = uniform(1, 4);
  std::map<std::string, Rational> inv;
  Rational sum = 0;
  if (with_real && d % 2 == 0 && uniform(0, 1) == 1) {
    inv["inf"] = Rational(1, 2);
    sum += Rational(1, 2);
  }
  for (int i = 0; i + 1 < finite_count; ++i) {
    Rational r(uniform(0, d - 1), d);
    r.canonicalize();
    inv[primes[i].first] = r;
    sum += r;
  }
  inv[primes[finite_count - 1].first] = mod_one(-sum);
  const BrauerClass brauer(base, inv);
  const int index_d = static_cast<int>(index(brauer));
  const int m = uniform(1, 8 / index_d);
  const int n = m * index_d;

  GlobalConfig cfg{{m, brauer}, {}, {}};
  const int support = uniform(1, 2);
  std::vector<int> degrees;
  for (int k = 0; k < support; ++k) {
    const int choices[] = {1, 2, 4};
    const int g = choices[uniform(0, 2)];
    IrreducibleSpec p;
    p.label = "p" + std::to_string(k) + "_deg" + std::to_string(g);
    p.degree = g;
    for (const Place& v : places) {
      if (v.kind == PlaceKind::Real) {
        const int twos = uniform(0, g / 2);
        std::vector<int> local(g - 2 * twos, 1);
        local.insert(local.begin(), twos, 2);
        p.splitting[v.label] = local;
      } else {
        p.splitting[v.label] = random_composition(rng, g);
      }
    }
    degrees.push_back(g);
    cfg.reg.add(p);
  }

  // distribute the degree n among the support, falling back to a single linear factor
  std::vector<int> sizes(degrees.size(), 0);
  bool placed = false;
  for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
    int remaining = n;
    for (std::size_t k = 0; k + 1 < degrees.size(); ++k) {
      sizes[k] = uniform(0, remaining / degrees[k]);
      remaining -= sizes[k] * degrees[k];
    }
    if (remaining % degrees.back() == 0) {
      sizes.back() = remaining / degrees.back();
      placed = true;
    }
  }
  PartitionMap lam;
  const auto& labels = cfg.reg.all();
  if (placed) {
    std::size_t k = 0;
    for (const auto& [label, spec] : labels) {
      if (sizes[k] > 0) {
        const auto parts = partitions_of(sizes[k]);
        lam.emplace(label, parts[uniform(0, static_cast<int>(parts.size()) - 1)]);
      }
      ++k;
    }
  } else {
    IrreducibleSpec linear{"lin", 1, {}, std::nullopt};
    for (const Place& v : places) linear.splitting[v.label] = {1};
    cfg.reg.add(linear);
    const auto parts = partitions_of(n);
    lam.emplace("lin", parts[uniform(0, static_cast<int>(parts.size()) - 1)]);
  }
  cfg.split_class = ConjClass(cfg.target.split_form(), std::move(lam));
  return cfg;
}

}  // namespace

SweepReport sweep_local_global(int configs, Exec exec, std::uint64_t seed) {
  std::vector<char> global_flags(static_cast<std::size_t>(configs), 0);
  SweepReport r = run_cases(
      "local_global_principle", configs,
      [&](long i) -> Failure {
        const GlobalConfig cfg = random_global_config(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(i))));
        require_valid(cfg.split_class, cfg.reg);
        const auto result = local_global_transfer(cfg.split_class, cfg.target, cfg.reg);
        global_flags[i] = result.global;
        if (result.principle_holds()) return std::nullopt;
        return Json{{"target", to_json(cfg.target)},
                    {"irreducibles", to_json(cfg.reg)},
                    {"class", to_json(cfg.split_class)},
                    {"result", to_json(result)}}
            .dump();
      },
      exec);
  const long yes = std::count(global_flags.begin(), global_flags.end(), 1);
  r.summary = std::to_string(configs) + " random configurations, " + std::to_string(yes) + " transfer globally";
  return r;
}

namespace {

std::vector<std::pair<FieldCase, LocalParams>> gamma_cases() {
  return {{FieldCase::RealSplit, {}},
          {FieldCase::RealQuaternion, {}},
          {FieldCase::Complex, {}},
          {FieldCase::NonArchimedean, {2, 1}},
          {FieldCase::NonArchimedean, {3, 1}},
          {FieldCase::NonArchimedean, {4, 2}},
          {FieldCase::NonArchimedean, {5, 3}}};
}

Json case_json(FieldCase c, const LocalParams& p) {
  Json j{{"case", field_case_name(c)}};
  if (c == FieldCase::NonArchimedean) {
    j["q"] = p.q;
    j["d"] = p.d;
  }
  return j;
}

}  // namespace

SweepReport sweep_gamma_transitivity(int max_m, Exec exec) {
  struct Case {
    std::size_t field;
    std::vector<int> outer;
    std::vector<std::vector<int>> inner;
  };
  const auto fields = gamma_cases();
  std::vector<Case> cases;
  for (std::size_t f = 0; f < fields.size(); ++f) {
    for (int m = 1; m <= max_m; ++m) {
      for (const auto& outer : compositions_of(m)) {
        std::vector<std::vector<std::vector<int>>> refinements;
        std::vector<int> sizes;
        for (int b : outer) {
          refinements.push_back(compositions_of(b));
          sizes.push_back(static_cast<int>(refinements.back().size()));
        }
        for (const auto& idx : product_indices(sizes)) {
          Case c{f, outer, {}};
          for (std::size_t k = 0; k < outer.size(); ++k) c.inner.push_back(refinements[k][idx[k]]);
          cases.push_back(std::move(c));
        }
      }
    }
  }
  SweepReport r = run_cases(
      "gamma_transitivity", static_cast<long>(cases.size()),
      [&](long i) -> Failure {
        const Case& c = cases[i];
        const auto& [field, params] = fields[c.field];
        if (gamma_transitive_check(field, c.outer, c.inner, params)) return std::nullopt;
        Json j = case_json(field, params);
        j["outer"] = c.outer;
        j["inner"] = c.inner;
        return j.dump();
      },
      exec);
  const ExactConstant real_gl2 = gamma(FieldCase::RealSplit, {1, 1});
  const ExactConstant nonarch = gamma(FieldCase::NonArchimedean, {1, 1}, {3, 1});
  r.summary = std::to_string(cases.size()) + " nested pairs; real GL_2 minimal: " + real_gl2.to_string() +
              "; non-archimedean q=3 d=1 GL_2 minimal: " + nonarch.to_string();
  if (!(real_gl2 == ExactConstant{1, 1, 2, 0}) || !(nonarch == ExactConstant{Rational(3, 4), 1, 0, 2})) {
    ++r.failures;
    if (r.first_failure.empty()) r.first_failure = Json{{"spot_values", r.summary}}.dump();
  }
  return r;
}

SweepReport sweep_measure_constants(int max_m, Exec exec) {
  struct Case {
    int kind;  // 0: vol_K and self-dual, 1: γ via volumes, 2: opposite parabolic, 3: coroots and sections
    int m;
    std::vector<int> comp;
  };
  std::vector<Case> cases;
  for (int m = 1; m <= max_m; ++m) {
    cases.push_back({0, m, {}});
    for (const auto& comp : compositions_of(m)) {
      for (int kind = 1; kind <= 3; ++kind) cases.push_back({kind, m, comp});
    }
  }
  const auto fields = gamma_cases();
  SweepReport r = run_cases(
      "measure_constants", static_cast<long>(cases.size()),
      [&](long i) -> Failure {
        const Case& c = cases[i];
        Json fail{{"kind", c.kind}, {"m", c.m}, {"composition", c.comp}};
        switch (c.kind) {
          case 0: {
            BigInt two_pow;
            mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(c.m) * c.m);
            if (!(selfdual_constant(FieldCase::RealSplit, c.m) == ExactConstant::one())) return fail.dump();
            if (!(selfdual_constant(FieldCase::RealQuaternion, c.m) == ExactConstant::one())) return fail.dump();
            if (!(selfdual_constant(FieldCase::Complex, c.m) == ExactConstant::rational(Rational(two_pow)))) return fail.dump();
            if (selfdual_constant(FieldCase::NonArchimedean, c.m).disc_quarter_exp != -2 * c.m * c.m) return fail.dump();
            for (const auto& [field, params] : fields) {
              if (field != FieldCase::NonArchimedean) continue;
              const ExactConstant v = vol_K(params, c.m);
              // |GL_m(F_Q)| / Q^{m²} with Q = q^d
              BigInt big_q;
              mpz_ui_pow_ui(big_q.get_mpz_t(), static_cast<unsigned long>(params.q), static_cast<unsigned long>(params.d));
              BigInt order = 1;
              BigInt qm;
              mpz_pow_ui(qm.get_mpz_t(), big_q.get_mpz_t(), static_cast<unsigned long>(c.m));
              for (int k = 0; k < c.m; ++k) {
                BigInt qk;
                mpz_pow_ui(qk.get_mpz_t(), big_q.get_mpz_t(), static_cast<unsigned long>(k));
                order *= qm - qk;
              }
              BigInt denom;
              mpz_pow_ui(denom.get_mpz_t(), big_q.get_mpz_t(), static_cast<unsigned long>(c.m) * c.m);
              Rational expected(order, denom);
              expected.canonicalize();
              if (v.coeff != expected || v.disc_quarter_exp != -2 * c.m * c.m || v.pi_half_exp != 0) return fail.dump();
            }
            return std::nullopt;
          }
          case 1:
            for (const auto& [field, params] : fields) {
              if (field != FieldCase::NonArchimedean) continue;
              if (!(gamma(field, c.comp, params) == gamma_from_volumes(c.comp, params))) return fail.dump();
            }
            return std::nullopt;
          case 2: {
            std::vector<int> reversed(c.comp.rbegin(), c.comp.rend());
            for (const auto& [field, params] : fields) {
              if (!(gamma(field, c.comp, params) == gamma(field, reversed, params))) return fail.dump();
            }
            return std::nullopt;
          }
          default: {
            const std::size_t l = c.comp.size();
            for (std::size_t a = 0; a < l; ++a) {
              for (std::size_t b = 0; b < l; ++b) {
                if (a == b) continue;
                std::vector<Rational> root(l, Rational(0));
                root[a] = 1;
                root[b] = -1;
                if (pairing(root, coroot(c.comp, root)) != 2) return fail.dump();
              }
            }
            std::vector<Rational> t;
            for (std::size_t k = 0; k < l; ++k) t.push_back(make_rational(static_cast<long>(3 * k + 1), static_cast<long>(k + 2)));
            if (iota(c.comp, phi(c.comp, t)) != t) return fail.dump();
            if (phi_star(c.comp, iota_star(c.comp, t)) != t) return fail.dump();
            return std::nullopt;
          }
        }
      },
      exec);
  r.summary = "vol(K), self-dual constants, γ via volumes, opposite parabolics, coroots for m <= " + std::to_string(max_m);
  return r;
}

SweepReport sweep_arthur_identities(int max_m, int points, Exec exec, std::uint64_t seed) {
  const long count = static_cast<long>(max_m) * points;
  SweepReport r = run_cases(
      "arthur_identities", count,
      [&](long i) -> Failure {
        const int m = static_cast<int>(i / points) + 1;
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(i))));
        A0Point x;
        A0Point y;
        do {
          x = random_point(rng, m);
          y = random_point(rng, m);
        } while (!is_regular_pair(x, y));
        const auto parabolics = StdParabolic::all(m);
        auto fail = [&](const char* what, const StdParabolic& p1, const StdParabolic& p2) {
          return Json{{"identity", what}, {"m", m}, {"P1", p1.composition()}, {"P2", p2.composition()}, {"X", to_json(x)}, {"Y", to_json(y)}}
              .dump();
        };
        for (const auto& p : parabolics) {
          if (!inversion_check(p, x, y)) return fail("inversion", p, p);
          const int g = gamma_trunc(p, x, y);
          if (g < -1 || g > 1) return fail("gamma-range", p, p);
          // translate along a_G and along a_0^P
          A0Point shifted = x;
          const auto comp = p.composition();
          int start = 0;
          for (int b : comp) {
            if (b > 1) {
              shifted[start] += Rational(5, 3);
              shifted[start + 1] -= Rational(5, 3);
            }
            start += b;
          }
          for (auto& v : shifted) v += Rational(7, 2);
          if (gamma_trunc(p, shifted, y) != g) return fail("gamma-projection", p, p);
          for (const auto& q : parabolics) {
            if (!p.contained_in(q)) continue;
            const int expected = p == q ? 1 : 0;
            if (langlands_sum(p, q, x) != expected) return fail("langlands", p, q);
            const int s = sigma(p, q, x);
            if (s < -1 || s > 1) return fail("sigma-range", p, q);
          }
        }
        return std::nullopt;
      },
      exec);
  r.summary = std::to_string(points) + " regular points per m in 1.." + std::to_string(max_m);
  return r;
}

SweepReport sweep_arthur_support(int max_m, int ys, int samples, Exec exec, std::uint64_t seed) {
  struct Case {
    StdParabolic p;
    int y_index;
  };
  std::vector<Case> cases;
  for (int m = 2; m <= max_m; ++m) {
    for (const auto& p : StdParabolic::all(m)) {
      if (p.blocks() == 1) continue;
      for (int k = 0; k < ys; ++k) cases.push_back({p, k});
    }
  }
  std::vector<long> checked(cases.size(), 0);
  SweepReport r = run_cases(
      "arthur_compact_support", static_cast<long>(cases.size()),
      [&](long i) -> Failure {
        const Case& c = cases[i];
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(i))));
        A0Point y = c.y_index == 0 ? A0Point(c.p.m(), Rational(0)) : random_point(rng, c.p.m(), 12, 4);
        const auto report = compact_support_check(c.p, y, samples, splitmix64(seed + static_cast<std::uint64_t>(i)));
        checked[i] = report.checked;
        if (report.passed()) return std::nullopt;
        return Json{{"P", c.p.composition()}, {"Y", to_json(y)}, {"radius", to_json(report.radius)}, {"X", to_json(*report.witness)}}
            .dump();
      },
      exec);
  r.summary = std::to_string(std::accumulate(checked.begin(), checked.end(), 0L)) + " points beyond the radius m·Σ|Y_i|";
  return r;
}

SweepReport sweep_enumeration(int max_degree, Exec exec) {
  struct Case {
    CentralSimpleAlgebra alg;
    CharPoly f;
  };
  std::vector<Case> cases;
  for (const auto& alg : test_algebras(max_degree)) {
    const auto& reg = registry_for(alg.brauer.base());
    for (auto& f : charpolys_of_degree(static_cast<int>(alg.degree()), all_labels(), reg)) cases.push_back({alg, std::move(f)});
  }
  std::vector<long> counts(cases.size(), 0);
  std::vector<char> valid(cases.size(), 0);
  SweepReport r = run_cases(
      "enumeration_counts", static_cast<long>(cases.size()),
      [&](long i) -> Failure {
        const Case& c = cases[i];
        const auto& reg = registry_for(c.alg.brauer.base());
        auto fail = [&](const std::string& what) {
          return Json{{"algebra", to_json(c.alg)}, {"charpoly", to_json(c.f)}, {"problem", what}}.dump();
        };
        if (!charpoly_valid(c.alg, c.f, reg)) {
          try {
            enumerate_classes(c.alg, c.f, reg);
          } catch (const Error& e) {
            if (e.code() == ErrorCode::InvalidCharpoly) return std::nullopt;
          }
          return fail("invalid charpoly was not rejected");
        }
        valid[i] = 1;
        const auto classes = enumerate_classes(c.alg, c.f, reg);
        long expected = 1;
        for (const auto& [label, a] : c.f.factors) {
          const long delta = c.alg.delta(reg.get(label));
          if (a % delta != 0) return fail("a_p not divisible by δ_p");
          expected *= partition_count(static_cast<int>(a / delta));
        }
        counts[i] = static_cast<long>(classes.size());
        if (static_cast<long>(classes.size()) != expected) return fail("count " + std::to_string(classes.size()) + " != " + std::to_string(expected));
        for (std::size_t k = 0; k < classes.size(); ++k) {
          const ConjClass& cl = classes[k];
          if (k > 0 && classes[k - 1] == cl) return fail("duplicate class");
          if (!validate_class(cl, reg)) return fail("class fails the mass identity");
          if (charpoly_of(cl, reg) != c.f) return fail("charpoly_of disagrees");
          const auto back = transfers_from_split(transfer_to_split(cl, reg), c.alg, reg);
          if (!back || !(*back == cl)) return fail("transfer round trip");
          if (c.alg.is_split()) {
            ConjClass recovered = class_of(realize(cl, reg), reg, {}, c.alg.brauer.base());
            if (!(recovered == cl)) return fail("realize/class_of round trip");
          }
        }
        std::set<std::string> distinct;
        for (const auto& cl : classes) distinct.insert(to_json(cl).dump());
        if (distinct.size() != classes.size()) return fail("duplicate class");
        return std::nullopt;
      },
      exec);
  const long total = std::accumulate(counts.begin(), counts.end(), 0L);
  const long valid_count = std::count(valid.begin(), valid.end(), 1);
  r.summary = std::to_string(cases.size()) + " (algebra, charpoly) pairs, " + std::to_string(valid_count) + " valid, " +
              std::to_string(total) + " classes";
  return r;
}

SweepReport sweep_closure_order(int max_degree, Exec exec) {
  std::vector<std::pair<std::vector<ConjClass>, const IrreducibleRegistry*>> fiber_list;
  for (const auto& alg : test_algebras(max_degree)) {
    const auto& reg = registry_for(alg.brauer.base());
    for (auto& [key, fiber] : fibers(enumerate_all_classes(alg, all_labels(), reg), reg)) fiber_list.emplace_back(std::move(fiber), &reg);
  }
  SweepReport r = run_cases(
      "closure_partial_order", static_cast<long>(fiber_list.size()),
      [&](long i) -> Failure {
        const auto& [fiber, reg] = fiber_list[i];
        const std::size_t n = fiber.size();
        std::vector<std::vector<char>> leq(n, std::vector<char>(n));
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) leq[a][b] = closure_leq(fiber[a], fiber[b], *reg);
        }
        for (std::size_t a = 0; a < n; ++a) {
          if (!leq[a][a]) return Json{{"reflexivity", to_json(fiber[a])}}.dump();
          for (std::size_t b = 0; b < n; ++b) {
            if (a != b && leq[a][b] && leq[b][a]) return Json{{"antisymmetry", {to_json(fiber[a]), to_json(fiber[b])}}}.dump();
            for (std::size_t c = 0; c < n; ++c) {
              if (leq[a][b] && leq[b][c] && !leq[a][c]) {
                return Json{{"transitivity", {to_json(fiber[a]), to_json(fiber[b]), to_json(fiber[c])}}}.dump();
              }
            }
          }
        }
        return std::nullopt;
      },
      exec);
  r.summary = std::to_string(fiber_list.size()) + " fibers with md <= " + std::to_string(max_degree);
  return r;
}

SweepReport sweep_partition_lemma(int max_size, int max_e, Exec exec) {
  std::vector<std::pair<Partition, int>> cases;
  for (int n = 0; n <= max_size; ++n) {
    for (const auto& lam : partitions_of(n)) {
      for (int e = 1; e <= max_e; ++e) cases.emplace_back(lam, e);
    }
  }
  SweepReport r = run_cases(
      "partition_lemma", static_cast<long>(cases.size()),
      [&](long i) -> Failure {
        const auto& [lam, e] = cases[i];
        if (transpose(dot(e, lam)) == times(e, transpose(lam)) && transpose(times(e, lam)) == dot(e, transpose(lam))) {
          return std::nullopt;
        }
        return Json{{"lambda", to_json(lam)}, {"e", e}}.dump();
      },
      exec);
  r.summary = std::to_string(cases.size()) + " (λ, e) pairs with |λ| <= " + std::to_string(max_size);
  return r;
}

SweepReport sweep_minor_lemma(int max_columns, bool bipartite_only) {
  const auto result = check_minor_lemma(max_columns, bipartite_only);
  SweepReport r;
  r.name = bipartite_only ? "minor_lemma_bipartite" : "minor_lemma";
  r.cases = result.matrices;
  r.failures = result.counterexamples;
  if (result.first_counterexample) {
    r.first_failure = Json{{"matrix", *result.first_counterexample}, {"rank", result.counterexample_rank}}.dump();
  }
  r.summary = std::to_string(result.matrices) + " matrices with <= " + std::to_string(max_columns) + " columns, " +
              std::to_string(result.counterexamples) + " without a unimodular maximal minor";
  return r;
}

SweepReport sweep_levi_divisibility(int max_blocks, int max_size) {
  const auto result = check_levi_divisibility(max_blocks, max_size);
  SweepReport r;
  r.name = "levi_divisibility";
  r.cases = result.instances;
  r.failures = result.counterexamples;
  if (result.witness_blocks) r.first_failure = Json{{"blocks", *result.witness_blocks}}.dump();
  r.summary = std::to_string(result.instances) + " (H, H1, H2, k) instances";
  return r;
}

}  // namespace innerforms
