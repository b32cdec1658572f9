// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "maninlab/enumerate.hpp"
#include "maninlab/error.hpp"
#include "maninlab/exponents.hpp"
#include "maninlab/fit.hpp"
#include "maninlab/kac.hpp"
#include "maninlab/local_density.hpp"
#include "maninlab/orbit_finiteness.hpp"
#include "maninlab/restricted_sum.hpp"
#include "maninlab/smith.hpp"
#include "support/generators.hpp"

using namespace maninlab;
namespace mt = maninlab::testing;

namespace {

// Pinned limits.
constexpr double kCatalogSeconds = 5.0;
constexpr double kExponentTolerance = 0.15;
constexpr double kPgl2Low = 3.8;
constexpr double kPgl2High = 4.2;
constexpr double kFitRunSeconds = 60.0;
constexpr double kCensusTmax = 500.0;
constexpr double kEngineTmax = 50.0;
constexpr double kBoxScanBudget = 2e10;  // vectors engine A may visit per variety
constexpr double kDensitySeconds = 1.0;
constexpr double kRecoveryTolerance = 1e-6;
constexpr int kSnfTrials = 1000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(4);
  os << x;
  return os.str();
}

std::string list(const std::vector<Rational>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_rational(v[i]);
  return s + "]";
}

Outcome catalog_tables() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t checked = 0, mismatches = 0;
  auto expect = [&](const PairDescriptor& p, bool finite) {
    ++checked;
    if (check_condition_iv(p).finite != finite) {
      ++mismatches;
      o.fail(p.name);
    }
  };
  for (int n = 3; n <= 10; ++n) {
    expect(maninlab::make_pair("AII-adjoint", {n, 0, 0, 0, Twist::inner}), true);
    expect(maninlab::make_pair("AII-adjoint", {n, 0, 0, 0, Twist::outer}), n % 2 == 1);
  }
  for (int l = 3; l <= 10; ++l) {
    expect(maninlab::make_pair("BDI(2l-1,1)-adjoint", {0, l, 0, 0, Twist::outer}), false);
    expect(maninlab::make_pair("BDI(2l,1)-adjoint", {0, l, 0, 0, Twist::inner}), true);
  }
  for (int p = 1; p <= 5; ++p)
    for (int q = p; q <= 5; ++q) expect(maninlab::make_pair("CII-adjoint", {0, 0, p, q, Twist::inner}), true);
  expect(maninlab::make_pair("FII-adjoint", {}), true);
  expect(maninlab::make_pair("EIV-adjoint", {0, 0, 0, 0, Twist::inner}), true);
  expect(maninlab::make_pair("EIV-adjoint", {0, 0, 0, 0, Twist::outer}), true);
  const double secs = seconds_since(t0);
  if (secs >= kCatalogSeconds) o.fail("took " + fmt(secs) + " s");
  if (o.pass) o.detail = std::to_string(checked) + " pairs, 0 mismatches, " + fmt(secs) + " s";
  else o.detail = std::to_string(mismatches) + " mismatches: " + o.detail;
  return o;
}

// Families whose fixed-point group is simply connected, as listed.
bool listed(const SymmetricFamily& f) {
  if (f.series == "A II") return f.p >= 3;
  if (f.series == "C II") return true;
  if (f.series == "BD I") return f.q == 1 && f.p >= 5;
  return f.series == "E IV" || f.series == "F II";
}

struct TypeRank {
  char type;
  int rank;
};

std::vector<TypeRank> all_types() {
  std::vector<TypeRank> out;
  for (int r = 1; r <= 8; ++r) out.push_back({'A', r});
  for (int r = 2; r <= 8; ++r) out.push_back({'B', r});
  for (int r = 2; r <= 8; ++r) out.push_back({'C', r});
  for (int r = 3; r <= 8; ++r) out.push_back({'D', r});
  for (int r = 6; r <= 8; ++r) out.push_back({'E', r});
  out.push_back({'F', 4});
  out.push_back({'G', 2});
  return out;
}

Outcome kac_table() {
  Outcome o;
  std::size_t inner = 0;
  std::set<std::string> families;
  for (auto [t, r] : all_types()) {
    for (const auto& c : inner_choices(t, r)) {
      ++inner;
      auto k = kac_classify(c);
      const bool sc = k.verdict == KacVerdict::simply_connected;
      if (sc != listed(k.family)) o.fail(std::string(1, t) + std::to_string(r) + " v" + std::to_string(c.vertex));
      if (sc) families.insert(k.family.series);
    }
    for (const auto& c : outer_choices(t, r)) {
      auto k = kac_classify(c);
      const bool sc = k.verdict == KacVerdict::simply_connected;
      if (sc != listed(k.family)) o.fail(std::string(1, t) + std::to_string(r) + " outer v" + std::to_string(c.vertex));
      if (sc) families.insert(k.family.series);
    }
  }
  for (const char* f : {"A II", "C II", "BD I", "E IV", "F II"})
    if (!families.count(f)) o.fail(std::string("family ") + f + " never produced");
  std::size_t cross = 0;
  auto cross_check = [&](const AffineDiagramChoice& c) {
    ++cross;
    const bool torsion_free = kac_lattice_torsion(c).factors.empty();
    if (torsion_free != (kac_classify(c).verdict == KacVerdict::simply_connected))
      o.fail("coroot torsion disagrees at " + kac_classify(c).family.label());
  };
  for (int n = 2; n <= 4; ++n)
    for (std::size_t v = 1; v < static_cast<std::size_t>(n); ++v) cross_check(make_choice('C', n, v, Twist::inner));
  bool saw_bd61 = false;
  for (const auto& c : inner_choices('B', 3))
    if (kac_classify(c).family.label() == "BD I(6,1)") {
      saw_bd61 = true;
      cross_check(c);
    }
  if (!saw_bd61) o.fail("BD I(6,1) not found");
  if (o.pass) o.detail = std::to_string(inner) + " inner choices, " + std::to_string(cross) + " cross-checked by coroot torsion";
  return o;
}

Outcome restricted_sum_formula() {
  Outcome o;
  for (int n = 2; n <= 6; ++n) {
    std::vector<Rational> expected;
    for (int i = 1; i < n; ++i) expected.push_back(2 * i * (2 * n - i));
    auto got = restricted_sum_psl2n_psp(n).coefficients;
    if (got != expected) o.fail("n=" + std::to_string(n) + " enumeration " + list(got) + " vs " + list(expected));
  }
  WeightInRootBasis lambda{{Rational(1)}};
  auto e = ab_wonderful_symmetric(restricted_sum_psl2n_psp(2), lambda);
  if (!(e == ExponentPair{7, 1})) o.fail("(a,b) for n=2 is (" + format_rational(e.a) + "," + std::to_string(e.b) + "), want (7,1)");
  if (o.pass) o.detail = "2 <= n <= 6 match; (a,b) = (7,1)";
  return o;
}

Outcome structural_identities() {
  static const std::map<char, std::function<std::size_t(std::size_t)>> counts = {
      {'A', [](std::size_t n) { return n * (n + 1) / 2; }}, {'B', [](std::size_t n) { return n * n; }},
      {'C', [](std::size_t n) { return n * n; }},           {'D', [](std::size_t n) { return n * (n - 1); }},
      {'E', [](std::size_t n) { return n == 6 ? std::size_t{36} : n == 7 ? std::size_t{63} : std::size_t{120}; }},
      {'F', [](std::size_t) { return std::size_t{24}; }},   {'G', [](std::size_t) { return std::size_t{6}; }}};
  Outcome o;
  std::size_t diagrams = 0;
  for (auto [t, r] : all_types()) {
    ++diagrams;
    auto rs = build_root_system(t, r);
    const std::string name = std::string(1, t) + std::to_string(r);
    if (rs.positive_roots().size() != counts.at(t)(static_cast<std::size_t>(r))) o.fail(name + " root count");
    auto alphas = affine_simple_roots(rs);
    auto a = affine_marks(rs);
    auto ad = dual_marks(rs);
    RationalVector s(rs.ambient_dim(), 0), sd(rs.ambient_dim(), 0);
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      auto co = rs.coroot(alphas[i]);
      for (std::size_t k = 0; k < s.size(); ++k) {
        s[k] += Rational(a[i]) * alphas[i][k];
        sd[k] += Rational(ad[i]) * co[k];
      }
    }
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] != 0) o.fail(name + " sum a_i alpha_i");
      if (sd[k] != 0) o.fail(name + " sum a'_i alpha_i^vee");
    }
  }
  if (affine_marks(build_root_system('G', 2), Labeling::long_first) != std::vector<Integer>{1, 2, 3}) o.fail("G2 marks");
  if (o.pass) o.detail = std::to_string(diagrams) + " diagrams; G2 marks (1,2,3)";
  return o;
}

Outcome snf_suite() {
  Outcome o;
  std::mt19937_64 rng(1000003);
  std::size_t square = 0;
  for (int trial = 0; trial < kSnfTrials && o.pass; ++trial) {
    auto a = mt::random_shaped_matrix(rng, 6, 9);
    auto s = smith_normal_form(a);
    if (!(s.U * a * s.V == s.D)) o.fail("UAV != D at trial " + std::to_string(trial));
    auto du = determinant(s.U), dv = determinant(s.V);
    if (!((du == 1 || du == -1) && (dv == 1 || dv == -1))) o.fail("not unimodular at trial " + std::to_string(trial));
    for (std::size_t i = 0; i < s.D.rows(); ++i)
      for (std::size_t j = 0; j < s.D.cols(); ++j)
        if (i != j && s.D(i, j) != 0) o.fail("off-diagonal entry at trial " + std::to_string(trial));
    auto d = s.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      if (d[i] <= 0 || d[i + 1] % d[i] != 0) o.fail("divisibility at trial " + std::to_string(trial));
    if (a.rows() == a.cols()) {
      Integer det = determinant(a);
      if (det != 0) {
        ++square;
        auto order = FinAbGroup(a).order();
        if (!order || *order != abs(det)) o.fail("|coker| != |det| at trial " + std::to_string(trial));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(kSnfTrials) + " matrices, " + std::to_string(square) + " nonsingular square";
  return o;
}

Outcome counting_exponents() {
  Outcome o;
  std::string summary;
  auto run = [&](const VarietySpec& spec, double lo, double hi) {
    const auto t0 = Clock::now();
    auto f = fit_exponents(count_series(spec, kCensusTmax, {Norm::max}, {Engine::pruned, 1}));
    const double secs = seconds_since(t0);
    summary += spec.name + " a=" + fmt(f.a_hat) + " (" + fmt(secs) + " s) ";
    if (f.a_hat < lo || f.a_hat > hi) o.fail(spec.name + " a_hat " + fmt(f.a_hat));
    if (secs >= kFitRunSeconds) o.fail(spec.name + " took " + fmt(secs) + " s");
  };
  for (int d = 1; d <= 3; ++d) run(projective_space(d), d + 1 - kExponentTolerance, d + 1 + kExponentTolerance);
  run(builtin_variety("pgl2"), kPgl2Low, kPgl2High);
  if (o.pass) o.detail = summary;
  return o;
}

Outcome engine_equivalence() {
  Outcome o;
  std::string summary;
  const double t = sample_schedule(kEngineTmax).back();
  for (const auto& spec : builtin_varieties()) {
    const double cost = box_scan_cost(spec, t);
    if (cost > kBoxScanBudget) {
      // Cross-check the largest sampled height engine A can reach, then
      // report the criterion as not met.
      double reach = 0;
      for (double s : sample_schedule(kEngineTmax))
        if (box_scan_cost(spec, s) <= kBoxScanBudget) reach = s;
      if (reach > 0 && !(tally_points(spec, reach, {Norm::max}, {Engine::box_scan, 1}) ==
                         tally_points(spec, reach, {Norm::max}, {Engine::pruned, 1})))
        o.fail(spec.name + " disagrees at T=" + fmt(reach));
      o.fail(spec.name + ": engine A needs " + fmt(cost) + " vectors at T=" + fmt(t) + ", budget " + fmt(kBoxScanBudget) +
             "; agreement checked only up to T=" + fmt(reach));
      continue;
    }
    const auto t0 = Clock::now();
    if (!(tally_points(spec, t, {Norm::max}, {Engine::box_scan, 1}) == tally_points(spec, t, {Norm::max}, {Engine::pruned, 1})))
      o.fail(spec.name + " disagrees");
    summary += spec.name + " (" + fmt(seconds_since(t0)) + " s) ";
  }
  if (o.pass) o.detail = "all sampled T <= " + fmt(kEngineTmax) + ": " + summary;
  return o;
}

Outcome local_densities() {
  Outcome o;
  struct Case {
    const char* variety;
    std::int64_t p;
    Rational want;
  };
  for (const auto& c : {Case{"sl2", 2, Rational(3, 4)}, Case{"sl2", 3, Rational(8, 9)}, Case{"skew4", 2, Rational(7, 8)}}) {
    const auto t0 = Clock::now();
    auto d = local_density(builtin_variety(c.variety), c.p);
    const double secs = seconds_since(t0);
    if (d.density != c.want) o.fail(std::string(c.variety) + " p=" + std::to_string(c.p) + " gave " + format_rational(d.density));
    if (secs >= kDensitySeconds) o.fail(std::string(c.variety) + " took " + fmt(secs) + " s");
  }
  if (o.pass) o.detail = "3/4, 8/9, 7/8";
  return o;
}

Outcome fit_recovery() {
  Outcome o;
  for (auto [a, b] : {std::pair{2.0, 1.0}, std::pair{3.0, 2.0}, std::pair{7.0, 1.0}}) {
    std::vector<FitSample> s;
    for (double t = 3; t < 1e5; t *= 1.3) s.push_back({t, 1.7 * std::pow(t, a) * std::pow(std::log(t), b - 1)});
    auto f = fit_exponents(s);
    if (std::abs(f.a_hat - a) > kRecoveryTolerance || std::abs(f.b_hat - b) > kRecoveryTolerance)
      o.fail("(" + fmt(a) + "," + fmt(b) + ") -> (" + fmt(f.a_hat) + "," + fmt(f.b_hat) + ")");
  }
  if (o.pass) o.detail = "(2,1), (3,2), (7,1) within 1e-6";
  return o;
}

Outcome scaling_law() {
  Outcome o;
  std::mt19937_64 rng(4099);
  int trials = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto count = static_cast<std::size_t>(mt::uniform(rng, 1, 5));
    DivisorData d;
    for (std::size_t i = 0; i < count; ++i) {
      d.m.push_back(static_cast<long>(mt::uniform(rng, 1, 6)));
      d.n.push_back(static_cast<long>(mt::uniform(rng, 1, 9)));
    }
    auto base = ab_from_divisor_data(d);
    for (long k = 1; k <= 3; ++k) {
      DivisorData s = d;
      for (auto& m : s.m) m *= k;
      auto e = ab_from_divisor_data(s);
      if (e.a != base.a / k || e.b != base.b) o.fail("trial " + std::to_string(trial) + " k=" + std::to_string(k));
    }
    ++trials;
  }
  if (o.pass) o.detail = std::to_string(trials) + " random divisor data, k = 1, 2, 3";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"catalog tables", catalog_tables},
      {"Kac classification", kac_table},
      {"restricted-sum formula", restricted_sum_formula},
      {"structural identities", structural_identities},
      {"SNF property suite", snf_suite},
      {"counting exponents", counting_exponents},
      {"engine equivalence", engine_equivalence},
      {"local densities", local_densities},
      {"fit recovery", fit_recovery},
      {"L^k scaling law", scaling_law},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::printf("criterion %2zu %-24s %s  %s\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
