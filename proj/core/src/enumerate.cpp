#include "maninlab/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <exception>
#include <numeric>
#include <thread>

#include "maninlab/error.hpp"

namespace maninlab {
namespace {

__extension__ typedef __int128 i128;

constexpr std::int64_t kEvalLimit = std::int64_t{1} << 62;

std::vector<int> mobius(std::int64_t n) {
  std::vector<int> mu(static_cast<std::size_t>(n + 1), 1);
  std::vector<bool> composite(static_cast<std::size_t>(n + 1), false);
  if (n >= 0) mu[0] = 0;
  for (std::int64_t p = 2; p <= n; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    for (std::int64_t m = p; m <= n; m += p) {
      if (m > p) composite[static_cast<std::size_t>(m)] = true;
      mu[static_cast<std::size_t>(m)] = -mu[static_cast<std::size_t>(m)];
    }
    for (std::int64_t m = p * p; m <= n; m += p * p) mu[static_cast<std::size_t>(m)] = 0;
  }
  return mu;
}

// Polynomial in the prefix coordinates, evaluated through a power table.
struct PrefixPoly {
  struct Term {
    std::int64_t coeff;
    std::vector<std::pair<std::size_t, unsigned>> powers;
  };
  std::vector<Term> terms;
};

// Polynomial written as sum_j c_j(prefix) x_last^j.
struct UniPoly {
  std::vector<PrefixPoly> coeffs;
};

class System {
 public:
  System(const std::vector<Polynomial>& eqs, const std::vector<Polynomial>& ineqs, std::size_t n, std::int64_t radius)
      : n_(n), k_(n - 1), radius_(radius) {
    unsigned maxdeg = 1;
    for (const auto* list : {&eqs, &ineqs})
      for (const auto& p : *list) {
        if (p.magnitude_bound(std::max<std::int64_t>(radius, 1)) >= Integer(static_cast<long>(kEvalLimit))) {
          throw Error(ErrorKind::unsupported, "polynomial values exceed 64-bit evaluation range at this height");
        }
        maxdeg = std::max(maxdeg, p.total_degree());
      }
    stride_ = maxdeg + 1;
    for (const auto& p : eqs) eqs_.push_back(compile(p));
    for (const auto& p : ineqs) ineqs_.push_back(compile(p));
    const std::size_t width = static_cast<std::size_t>(2 * radius_ + 1);
    pw_.assign(k_ * width * stride_, 0);
    for (std::size_t v = 0; v < k_; ++v)
      for (std::int64_t x = -radius_; x <= radius_; ++x) {
        std::int64_t acc = 1;
        for (unsigned e = 0; e < stride_; ++e) {
          pw_[index(v, x, e)] = acc;
          if (e + 1 < stride_) acc = (e + 1 <= maxdeg && std::abs(acc) < kEvalLimit / std::max<std::int64_t>(radius_, 1) + 1) ? acc * x : 0;
        }
      }
    eq_vals_.resize(eqs_.size());
    ineq_vals_.resize(ineqs_.size());
    for (std::size_t i = 0; i < eqs_.size(); ++i) eq_vals_[i].resize(eqs_[i].coeffs.size());
    for (std::size_t i = 0; i < ineqs_.size(); ++i) ineq_vals_[i].resize(ineqs_[i].coeffs.size());
  }

  void set_prefix(const std::int64_t* prefix) {
    for (std::size_t i = 0; i < eqs_.size(); ++i) eval(eqs_[i], prefix, eq_vals_[i]);
    for (std::size_t i = 0; i < ineqs_.size(); ++i) eval(ineqs_[i], prefix, ineq_vals_[i]);
  }

  // Every equation except skip vanishes and every inequation is nonzero.
  bool holds(std::int64_t x, std::size_t skip = static_cast<std::size_t>(-1)) const {
    for (std::size_t i = 0; i < eq_vals_.size(); ++i)
      if (i != skip && horner(eq_vals_[i], x) != 0) return false;
    for (const auto& c : ineq_vals_)
      if (horner(c, x) == 0) return false;
    return true;
  }

  const std::vector<std::int64_t>& eq_values(std::size_t i) const { return eq_vals_[i]; }
  bool trivial() const { return eqs_.empty() && ineqs_.empty(); }

 private:
  std::size_t index(std::size_t v, std::int64_t x, unsigned e) const {
    return (v * static_cast<std::size_t>(2 * radius_ + 1) + static_cast<std::size_t>(x + radius_)) * stride_ + e;
  }

  UniPoly compile(const Polynomial& p) const {
    UniPoly u;
    u.coeffs.resize(p.degree_in(k_) + 1);
    for (const auto& t : p.terms()) {
      PrefixPoly::Term term{t.coeff.get_si(), {}};
      for (std::size_t v = 0; v < k_; ++v)
        if (t.exponents[v]) term.powers.emplace_back(v, t.exponents[v]);
      u.coeffs[t.exponents[k_]].terms.push_back(std::move(term));
    }
    return u;
  }

  void eval(const UniPoly& u, const std::int64_t* prefix, std::vector<std::int64_t>& out) const {
    for (std::size_t j = 0; j < u.coeffs.size(); ++j) {
      std::int64_t acc = 0;
      for (const auto& t : u.coeffs[j].terms) {
        std::int64_t v = t.coeff;
        for (const auto& [var, e] : t.powers) v *= pw_[index(var, prefix[var], e)];
        acc += v;
      }
      out[j] = acc;
    }
  }

  static std::int64_t horner(const std::vector<std::int64_t>& c, std::int64_t x) {
    std::int64_t acc = 0;
    for (std::size_t j = c.size(); j-- > 0;) acc = acc * x + c[j];
    return acc;
  }

  std::size_t n_, k_;
  std::int64_t radius_;
  unsigned stride_ = 2;
  std::vector<UniPoly> eqs_, ineqs_;
  std::vector<std::int64_t> pw_;
  std::vector<std::vector<std::int64_t>> eq_vals_, ineq_vals_;
};

// Prefix (x_0..x_{k-1}) with first nonzero entry at lead and equal to value;
// lead == k stands for the zero prefix.
struct WorkItem {
  std::size_t lead;
  std::int64_t value;
};

std::vector<WorkItem> work_items(std::size_t k, std::int64_t radius) {
  std::vector<WorkItem> items;
  for (std::size_t j = 0; j < k; ++j)
    for (std::int64_t v = 1; v <= radius; ++v) items.push_back({j, v});
  items.push_back({k, 0});
  return items;
}

template <class F>
void for_each_prefix(std::size_t k, std::int64_t radius, const WorkItem& w, std::vector<std::int64_t>& prefix, F&& f) {
  std::fill(prefix.begin(), prefix.end(), 0);
  if (w.lead == k) {
    f(prefix.data(), true);
    return;
  }
  prefix[w.lead] = w.value;
  for (std::size_t i = w.lead + 1; i < k; ++i) prefix[i] = -radius;
  for (;;) {
    f(prefix.data(), false);
    bool done = true;
    for (std::size_t i = k; i > w.lead + 1;) {
      --i;
      if (prefix[i] < radius) {
        ++prefix[i];
        done = false;
        break;
      }
      prefix[i] = -radius;
    }
    if (done) return;
  }
}

struct Geometry {
  std::size_t n;
  std::int64_t radius;
  Norm norm;
  std::uint64_t limit;  // largest admissible level
  std::vector<std::int64_t> weights;
};

// Runs worker(item, local_tally) over all work items on the requested threads
// and sums the per-thread tallies.
template <class MakeWorker>
std::vector<std::uint64_t> run_items(const std::vector<WorkItem>& items, std::size_t levels, unsigned threads,
                                     MakeWorker make_worker) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(items.size())));
  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(levels, 0));
  std::vector<std::exception_ptr> errors(threads);
  std::atomic<std::size_t> next{0};
  auto body = [&](unsigned t) {
    try {
      auto worker = make_worker();
      for (std::size_t i = next++; i < items.size(); i = next++) worker(items[i], partial[t]);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(body, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<std::uint64_t> total(levels, 0);
  for (const auto& p : partial)
    for (std::size_t i = 0; i < levels; ++i) total[i] += p[i];
  return total;
}

std::uint64_t prefix_level(const Geometry& g, const std::int64_t* prefix) {
  std::uint64_t lv = 0;
  if (g.norm == Norm::max) {
    for (std::size_t i = 0; i + 1 < g.n; ++i) lv = std::max<std::uint64_t>(lv, static_cast<std::uint64_t>(std::abs(prefix[i])));
  } else {
    for (std::size_t i = 0; i + 1 < g.n; ++i) lv += static_cast<std::uint64_t>(g.weights[i] * prefix[i] * prefix[i]);
  }
  return lv;
}

std::uint64_t full_level(const Geometry& g, std::uint64_t pl, std::int64_t x) {
  if (g.norm == Norm::max) return std::max<std::uint64_t>(pl, static_cast<std::uint64_t>(std::abs(x)));
  return pl + static_cast<std::uint64_t>(g.weights[g.n - 1] * x * x);
}

std::int64_t prefix_gcd(const std::int64_t* prefix, std::size_t k) {
  std::int64_t g = 0;
  for (std::size_t i = 0; i < k; ++i) g = std::gcd(g, prefix[i]);
  return g;
}

Geometry make_geometry(const VarietySpec& spec, double t_max, Norm norm) {
  Geometry g;
  g.n = spec.coordinates();
  g.radius = box_radius(t_max);
  g.norm = norm;
  g.limit = level_limit(t_max, norm);
  for (std::size_t i = 0; i < g.n; ++i) g.weights.push_back(spec.multiplicity(i));
  return g;
}

std::vector<Polynomial> with_chart(const VarietySpec& spec) {
  std::vector<Polynomial> ineqs = spec.inequations;
  if (spec.affine_chart) ineqs.push_back(variable(spec.coordinates(), *spec.affine_chart));
  return ineqs;
}

std::vector<std::uint64_t> box_scan(const VarietySpec& spec, const Geometry& g, unsigned threads) {
  const std::size_t k = g.n - 1;
  const auto ineqs = with_chart(spec);
  const std::size_t levels = static_cast<std::size_t>(g.limit) + 1;
  return run_items(work_items(k, g.radius), levels, threads, [&] {
    return [&, sys = System(spec.equations, ineqs, g.n, g.radius), prefix = std::vector<std::int64_t>(k)](
               const WorkItem& w, std::vector<std::uint64_t>& tally) mutable {
      for_each_prefix(k, g.radius, w, prefix, [&](const std::int64_t* p, bool zero) {
        const std::uint64_t pl = prefix_level(g, p);
        if (pl > g.limit) return;
        std::int64_t pg = -1;
        sys.set_prefix(p);
        const std::int64_t lo = zero ? 1 : -g.radius;
        for (std::int64_t x = lo; x <= g.radius; ++x) {
          const std::uint64_t lv = full_level(g, pl, x);
          if (lv > g.limit) continue;
          if (!sys.holds(x)) continue;
          if (pg < 0) pg = prefix_gcd(p, k);
          if (std::gcd(pg, x) != 1) continue;
          ++tally[lv];
        }
      });
    };
  });
}

std::int64_t isqrt(i128 d) {
  if (d < 0) return -1;
  auto s = static_cast<i128>(std::sqrt(static_cast<long double>(d)));
  while (s > 0 && s * s > d) --s;
  while ((s + 1) * (s + 1) <= d) ++s;
  return s * s == d ? static_cast<std::int64_t>(s) : -1;
}

struct Pivot {
  std::size_t equation;
  std::size_t variable;
};

std::optional<Pivot> choose_pivot(const std::vector<Polynomial>& eqs, std::size_t n) {
  std::optional<Pivot> best;
  unsigned best_deg = 3;
  for (std::size_t e = 0; e < eqs.size(); ++e)
    for (std::size_t v = n; v-- > 0;) {
      unsigned d = eqs[e].degree_in(v);
      if (d >= 1 && d < best_deg) {
        best = Pivot{e, v};
        best_deg = d;
      }
    }
  return best;
}

// Solves the pivot equation for the last coordinate after moving the pivot
// variable there.
std::vector<std::uint64_t> solve_scan(const VarietySpec& spec, const Geometry& g0, unsigned threads) {
  auto pivot = choose_pivot(spec.equations, g0.n);
  if (!pivot) {
    throw Error(ErrorKind::unsupported, "variety '" + spec.name + "' has no equation of degree <= 2 in some coordinate");
  }
  const std::size_t n = g0.n;
  const std::size_t k = n - 1;
  std::vector<std::size_t> new_index(n);
  std::iota(new_index.begin(), new_index.end(), std::size_t{0});
  std::swap(new_index[pivot->variable], new_index[k]);

  std::vector<Polynomial> eqs, ineqs;
  for (const auto& p : spec.equations) eqs.push_back(p.permuted(new_index));
  for (const auto& p : with_chart(spec)) ineqs.push_back(p.permuted(new_index));
  Geometry g = g0;
  for (std::size_t i = 0; i < n; ++i) g.weights[new_index[i]] = g0.weights[i];

  const std::size_t pe = pivot->equation;
  const std::size_t levels = static_cast<std::size_t>(g.limit) + 1;
  return run_items(work_items(k, g.radius), levels, threads, [&] {
    return [&, sys = System(eqs, ineqs, n, g.radius), prefix = std::vector<std::int64_t>(k)](
               const WorkItem& w, std::vector<std::uint64_t>& tally) mutable {
      for_each_prefix(k, g.radius, w, prefix, [&](const std::int64_t* p, bool zero) {
        const std::uint64_t pl = prefix_level(g, p);
        if (pl > g.limit) return;
        sys.set_prefix(p);
        const auto& c = sys.eq_values(pe);
        const i128 a = c.size() > 2 ? c[2] : 0;
        const i128 b = c.size() > 1 ? c[1] : 0;
        const i128 c0 = c[0];
        const std::int64_t lo = zero ? 1 : -g.radius;
        std::int64_t pg = -1;
        auto accept = [&](std::int64_t x) {
          if (x < lo || x > g.radius) return;
          const std::uint64_t lv = full_level(g, pl, x);
          if (lv > g.limit) return;
          if (!sys.holds(x, pe)) return;
          if (pg < 0) pg = prefix_gcd(p, k);
          if (std::gcd(pg, x) != 1) return;
          ++tally[lv];
        };
        if (a == 0 && b == 0) {
          if (c0 != 0) return;
          for (std::int64_t x = lo; x <= g.radius; ++x) accept(x);
        } else if (a == 0) {
          if (c0 % b == 0) accept(static_cast<std::int64_t>(-c0 / b));
        } else {
          const std::int64_t s = isqrt(b * b - 4 * a * c0);
          if (s < 0) return;
          const i128 two_a = 2 * a;
          const i128 r1 = -b + s;
          const i128 r2 = -b - s;
          if (r1 % two_a == 0) accept(static_cast<std::int64_t>(r1 / two_a));
          if (s != 0 && r2 % two_a == 0) accept(static_cast<std::int64_t>(r2 / two_a));
        }
      });
    };
  });
}

// Primitive points of P^{n-1} by level, from Moebius inversion of box or
// ellipsoid counts.
std::vector<std::int64_t> ambient_levels(const Geometry& g) {
  const std::size_t levels = static_cast<std::size_t>(g.limit) + 1;
  std::vector<std::int64_t> out(levels, 0);
  if (g.norm == Norm::max) {
    const std::int64_t r = g.radius;
    auto mu = mobius(r);
    auto cube = [&](std::int64_t m) {
      i128 v = 1;
      for (std::size_t i = 0; i < g.n; ++i) v *= 2 * m + 1;
      return v - 1;
    };
    i128 prev = 0;
    for (std::int64_t rr = 1; rr <= r; ++rr) {
      i128 sum = 0;
      for (std::int64_t d = 1; d <= rr; ++d)
        if (mu[static_cast<std::size_t>(d)]) sum += mu[static_cast<std::size_t>(d)] * cube(rr / d);
      const i128 p = sum / 2;
      out[static_cast<std::size_t>(rr)] = static_cast<std::int64_t>(p - prev);
      prev = p;
    }
    return out;
  }
  // r[s] = #{x in Z^n : sum w_i x_i^2 = s}
  const std::uint64_t lim = g.limit;
  std::vector<std::int64_t> reps(levels, 0);
  reps[0] = 1;
  for (std::size_t i = 0; i < g.n; ++i) {
    const auto w = static_cast<std::uint64_t>(g.weights[i]);
    std::vector<std::int64_t> next(levels, 0);
    for (std::uint64_t s = 0; s <= lim; ++s) {
      if (!reps[s]) continue;
      next[s] += reps[s];
      for (std::uint64_t x = 1; s + w * x * x <= lim; ++x) next[s + w * x * x] += 2 * reps[s];
    }
    reps.swap(next);
  }
  std::uint64_t dmax = 1;
  while ((dmax + 1) * (dmax + 1) <= lim) ++dmax;
  auto mu = mobius(static_cast<std::int64_t>(dmax));
  for (std::uint64_t s = 1; s <= lim; ++s) {
    std::int64_t prim = 0;
    for (std::uint64_t d = 1; d * d <= s; ++d)
      if (s % (d * d) == 0 && mu[d]) prim += mu[d] * reps[s / (d * d)];
    out[s] = prim / 2;
  }
  return out;
}

std::vector<std::uint64_t> inclusion_exclusion(const VarietySpec& spec, const Geometry& g, unsigned threads) {
  const auto ineqs = with_chart(spec);
  if (ineqs.size() > 16) throw Error(ErrorKind::unsupported, "too many inequations for inclusion-exclusion");
  const std::size_t levels = static_cast<std::size_t>(g.limit) + 1;
  std::vector<std::int64_t> acc = ambient_levels(g);
  for (std::uint32_t mask = 1; mask < (1u << ineqs.size()); ++mask) {
    VarietySpec sub;
    sub.name = spec.name + " boundary";
    sub.ambient_dim = spec.ambient_dim;
    sub.coordinate_multiplicity = spec.coordinate_multiplicity;
    for (std::size_t i = 0; i < ineqs.size(); ++i)
      if (mask & (1u << i)) sub.equations.push_back(ineqs[i]);
    const int sign = (std::popcount(mask) % 2) ? -1 : 1;
    auto part = solve_scan(sub, g, threads);
    for (std::size_t i = 0; i < levels; ++i) acc[i] += sign * static_cast<std::int64_t>(part[i]);
  }
  std::vector<std::uint64_t> out(levels);
  for (std::size_t i = 0; i < levels; ++i) {
    if (acc[i] < 0) throw Error(ErrorKind::invalid_argument, "negative count in inclusion-exclusion");
    out[i] = static_cast<std::uint64_t>(acc[i]);
  }
  return out;
}

bool pfaffian_applicable(const VarietySpec& spec) {
  if (spec.structure != "pfaffian4" || spec.coordinates() != 7) return false;
  if (spec.equations.size() != 1 || !spec.inequations.empty()) return false;
  if (!spec.affine_chart || *spec.affine_chart != 0) return false;
  Polynomial pf = pfaffian4();
  Polynomial x0 = variable(7, 0);
  Polynomial target = pf * pf - x0 * x0 * x0 * x0;
  return spec.equations[0] == target || spec.equations[0] == constant(7, -1) * target;
}

// pf = a12 a34 + (a14 a23 - a13 a24) = +-x0^2 with x0 >= 1: histogram the
// 4-block by its max level, then sweep (x0, a12, a34).
std::vector<std::uint64_t> pfaffian_scan(const Geometry& g) {
  const std::int64_t r = g.radius;
  const std::int64_t off = 2 * r * r;
  const auto width = static_cast<std::size_t>(2 * off + 1);
  std::vector<std::vector<std::int64_t>> by_level(static_cast<std::size_t>(r + 1), std::vector<std::int64_t>(width, 0));
  for (std::int64_t a13 = -r; a13 <= r; ++a13)
    for (std::int64_t a14 = -r; a14 <= r; ++a14)
      for (std::int64_t a23 = -r; a23 <= r; ++a23) {
        const std::int64_t m3 = std::max({std::abs(a13), std::abs(a14), std::abs(a23)});
        const std::int64_t base = a14 * a23;
        for (std::int64_t a24 = -r; a24 <= r; ++a24) {
          const std::int64_t m = std::max(m3, std::abs(a24));
          ++by_level[static_cast<std::size_t>(m)][static_cast<std::size_t>(base - a13 * a24 + off)];
        }
      }
  std::vector<std::int64_t> cum(width, 0);
  std::vector<std::int64_t> all(static_cast<std::size_t>(r + 1), 0);  // A(R'): not necessarily primitive
  for (std::int64_t rr = 0; rr <= r; ++rr) {
    for (std::size_t i = 0; i < width; ++i) cum[i] += by_level[static_cast<std::size_t>(rr)][i];
    std::int64_t total = 0;
    for (std::int64_t x0 = 1; x0 <= rr; ++x0) {
      const std::int64_t sq = x0 * x0;
      for (std::int64_t a12 = -rr; a12 <= rr; ++a12)
        for (std::int64_t a34 = -rr; a34 <= rr; ++a34) {
          const std::int64_t t = a12 * a34;
          for (std::int64_t target : {sq - t, -sq - t})
            if (target >= -off && target <= off) total += cum[static_cast<std::size_t>(target + off)];
        }
    }
    all[static_cast<std::size_t>(rr)] = total;
  }
  auto mu = mobius(r);
  std::vector<std::uint64_t> out(static_cast<std::size_t>(r + 1), 0);
  std::int64_t prev = 0;
  for (std::int64_t rr = 1; rr <= r; ++rr) {
    std::int64_t p = 0;
    for (std::int64_t d = 1; d <= rr; ++d) p += mu[static_cast<std::size_t>(d)] * all[static_cast<std::size_t>(rr / d)];
    out[static_cast<std::size_t>(rr)] = static_cast<std::uint64_t>(p - prev);
    prev = p;
  }
  return out;
}

}  // namespace

std::string_view to_string(Engine e) noexcept { return e == Engine::box_scan ? "A" : "B"; }

Engine parse_engine(std::string_view s) {
  if (s == "A" || s == "a" || s == "box") return Engine::box_scan;
  if (s == "B" || s == "b" || s == "pruned") return Engine::pruned;
  throw Error(ErrorKind::parse_error, "engine must be A or B, got '" + std::string(s) + "'");
}

HeightTally::HeightTally(Norm norm, std::vector<std::uint64_t> by_level) : norm_(norm), by_level_(std::move(by_level)) {}

std::uint64_t HeightTally::count_below(double t) const {
  const std::uint64_t lim = level_limit(t, norm_);
  if (!by_level_.empty() && lim >= by_level_.size()) {
    throw Error(ErrorKind::invalid_argument, "height " + std::to_string(t) + " is beyond the tallied range");
  }
  std::uint64_t total = 0;
  for (std::uint64_t i = 0; i <= lim && i < by_level_.size(); ++i) total += by_level_[i];
  return total;
}

std::uint64_t HeightTally::total() const { return std::accumulate(by_level_.begin(), by_level_.end(), std::uint64_t{0}); }

std::int64_t box_radius(double t) {
  if (!(t > 0) || !std::isfinite(t)) throw Error(ErrorKind::invalid_argument, "height bound must be positive");
  return static_cast<std::int64_t>(std::ceil(t)) - 1;
}

std::uint64_t level_limit(double t, Norm norm) {
  if (norm == Norm::max) return static_cast<std::uint64_t>(box_radius(t));
  const long double sq = static_cast<long double>(t) * static_cast<long double>(t);
  return static_cast<std::uint64_t>(std::ceil(sq)) - 1;
}

double box_scan_cost(const VarietySpec& spec, double t) {
  return std::pow(2.0 * static_cast<double>(box_radius(t)) + 1.0, static_cast<double>(spec.coordinates())) / 2.0;
}

HeightTally tally_points(const VarietySpec& spec, double t_max, const HeightSpec& h, const CensusOptions& opts) {
  validate(spec);
  Geometry g = make_geometry(spec, t_max, h.norm);
  if (g.radius < 1) return HeightTally(h.norm, std::vector<std::uint64_t>(static_cast<std::size_t>(g.limit) + 1, 0));
  std::vector<std::uint64_t> levels;
  if (opts.engine == Engine::box_scan) {
    levels = box_scan(spec, g, opts.threads);
  } else if (h.norm == Norm::max && pfaffian_applicable(spec)) {
    levels = pfaffian_scan(g);
  } else if (spec.equations.empty()) {
    levels = inclusion_exclusion(spec, g, opts.threads);
  } else {
    levels = solve_scan(spec, g, opts.threads);
  }
  return HeightTally(h.norm, std::move(levels));
}

std::uint64_t enumerate_points(const VarietySpec& spec, double t, const HeightSpec& h, const CensusOptions& opts) {
  return tally_points(spec, t, h, opts).count_below(t);
}

}  // namespace maninlab
