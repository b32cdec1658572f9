#include "maninlab/kac.hpp"

#include <algorithm>
#include <optional>

#include "maninlab/error.hpp"
#include "rational_solve.hpp"

namespace maninlab {
namespace {

using Fam = SymmetricFamily;

std::string num(int x) { return std::to_string(x); }

Fam bd(int a, int b) { return Fam{"BD I", std::max(a, b), std::min(a, b)}; }

Fam cii(int a, int b) { return Fam{"C II", std::min(a, b), std::max(a, b)}; }

struct Named {
  Fam family;
  std::string subgroup;
};

Named inner_name(char type, int l, std::size_t k) {
  const int kk = static_cast<int>(k);
  switch (type) {
    case 'B':
      if (kk == l) {
        if (l == 2) return {cii(1, 1), "Sp1 x Sp1"};
        return {bd(2 * l, 1), "Spin" + num(2 * l)};
      }
      return {bd(2 * kk, 2 * (l - kk) + 1), "Spin" + num(2 * kk) + " x Spin" + num(2 * (l - kk) + 1)};
    case 'C':
      return {cii(kk, l - kk), "Sp" + num(kk) + " x Sp" + num(l - kk)};
    case 'D':
      return {bd(2 * kk, 2 * (l - kk)), "Spin" + num(2 * kk) + " x Spin" + num(2 * (l - kk))};
    case 'E':
      if (l == 6) return {Fam{"E II"}, "SL6 x SL2"};
      if (l == 7) return k == 2 ? Named{Fam{"E V"}, "SL8"} : Named{Fam{"E VI"}, "Spin12 x SL2"};
      return k == 1 ? Named{Fam{"E VIII"}, "Spin16"} : Named{Fam{"E IX"}, "E7 x SL2"};
    case 'F':
      return k == 1 ? Named{Fam{"F I"}, "Sp3 x SL2"} : Named{Fam{"F II"}, "Spin9"};
    case 'G':
      return {Fam{"G"}, "SL2 x SL2"};
  }
  throw Error(ErrorKind::invalid_argument, "no inner involution for this type");
}

struct OuterRow {
  std::size_t vertex;
  Fam family;
  std::string subgroup;
  bool double_edge;
  bool short_vertex;
  KacVerdict verdict;
};

constexpr auto SC = KacVerdict::simply_connected;
constexpr auto Z2 = KacVerdict::z2;

std::vector<OuterRow> outer_rows(char type, int r) {
  std::vector<OuterRow> rows;
  auto d_rows = [&rows](int m) {
    const int l = m - 1;
    Fam end = bd(2 * m - 1, 1);
    rows.push_back({0, end, "Spin" + num(2 * m - 1), true, true, SC});
    for (int k = 1; k < l; ++k) {
      rows.push_back({static_cast<std::size_t>(k), bd(2 * k + 1, 2 * (l - k) + 1),
                      "(Spin" + num(2 * k + 1) + " x Spin" + num(2 * (l - k) + 1) + ")/mu2", true, false, Z2});
    }
    rows.push_back({static_cast<std::size_t>(l), end, "Spin" + num(2 * m - 1), true, true, SC});
  };
  switch (type) {
    case 'A':
      if (r == 1) break;
      if (r % 2 == 0) {
        const int l = r / 2;
        rows.push_back({static_cast<std::size_t>(l), Fam{"A I", r + 1}, "SO" + num(r + 1), l >= 2, false, Z2});
      } else if (r == 3) {
        rows.push_back({0, bd(5, 1), "Sp2", true, true, SC});
        rows.push_back({1, bd(5, 1), "Sp2", true, true, SC});
        rows.push_back({2, bd(3, 3), "SO4", true, false, Z2});
      } else {
        const int l = (r + 1) / 2;
        rows.push_back({0, Fam{"A II", l}, "Sp" + num(l), true, true, SC});
        rows.push_back({1, Fam{"A II", l}, "Sp" + num(l), true, true, SC});
        rows.push_back({static_cast<std::size_t>(l), Fam{"A I", r + 1}, "SO" + num(r + 1), true, false, Z2});
      }
      break;
    case 'D':
      d_rows(r);
      break;
    case 'E':
      if (r == 6) {
        rows.push_back({0, Fam{"E IV"}, "F4", true, true, SC});
        rows.push_back({4, Fam{"E I"}, "C4", true, false, Z2});
      }
      break;
    default:
      break;
  }
  return rows;
}

std::optional<OuterRow> find_outer(char type, int rank, std::size_t vertex) {
  for (auto& row : outer_rows(type, rank))
    if (row.vertex == vertex) return row;
  return std::nullopt;
}

int max_bond(const RootSystemData& rs) {
  const auto l = static_cast<std::size_t>(rs.rank());
  int best = l > 1 ? 1 : 0;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      if (i == j) continue;
      Integer b = rs.cartan()(i, j) * rs.cartan()(j, i);
      best = std::max(best, static_cast<int>(b.get_si()));
    }
  return best;
}

}  // namespace

std::string_view to_string(Twist t) noexcept { return t == Twist::inner ? "inner" : "outer"; }

std::string_view to_string(KacVerdict v) noexcept {
  return v == KacVerdict::simply_connected ? "simply_connected" : "Z2";
}

Twist parse_twist(std::string_view s) {
  if (s == "inner") return Twist::inner;
  if (s == "outer") return Twist::outer;
  throw Error(ErrorKind::parse_error, "twist must be inner or outer, got '" + std::string(s) + "'");
}

KacVerdict parse_verdict(std::string_view s) {
  if (s == "simply_connected") return KacVerdict::simply_connected;
  if (s == "Z2") return KacVerdict::z2;
  throw Error(ErrorKind::parse_error, "unknown Kac verdict '" + std::string(s) + "'");
}

std::string SymmetricFamily::label() const {
  if (series == "BD I" || series == "C II") return series + "(" + num(p) + "," + num(q) + ")";
  if (series == "A I" || series == "A II") return series + "(n=" + num(p) + ")";
  return series;
}

bool in_simply_connected_list(const SymmetricFamily& f) {
  if (f.series == "A II") return f.p >= 3;
  if (f.series == "C II") return f.p >= 1 && f.p <= f.q;
  if (f.series == "BD I") return f.q == 1 && f.p >= 5;
  return f.series == "E IV" || f.series == "F II";
}

AffineDiagramChoice make_choice(char type, int rank, std::size_t vertex, Twist twist, Labeling labeling) {
  AffineDiagramChoice c{build_root_system(type, rank), {}, vertex, twist, labeling};
  const std::string where = std::string(1, type) + num(rank) + " vertex " + std::to_string(vertex);
  if (twist == Twist::inner) {
    if (vertex > static_cast<std::size_t>(rank)) throw Error(ErrorKind::invalid_argument, where + " out of range");
    c.marks = affine_marks(c.rs, labeling);
    if (c.marks[vertex] != 2) {
      throw Error(ErrorKind::invalid_argument,
                  where + " has mark " + c.marks[vertex].get_str() + ", an inner involution needs mark 2");
    }
  } else if (!find_outer(type, rank, vertex)) {
    throw Error(ErrorKind::not_found, "no outer involution table entry for " + where);
  }
  return c;
}

std::vector<AffineDiagramChoice> inner_choices(char type, int rank) {
  std::vector<AffineDiagramChoice> out;
  RootSystemData rs = build_root_system(type, rank);
  auto marks = affine_marks(rs);
  for (std::size_t v = 0; v < marks.size(); ++v)
    if (marks[v] == 2) out.push_back(AffineDiagramChoice{rs, marks, v, Twist::inner, Labeling::bourbaki});
  return out;
}

std::vector<AffineDiagramChoice> outer_choices(char type, int rank) {
  std::vector<AffineDiagramChoice> out;
  auto rows = outer_rows(type, rank);
  if (rows.empty()) return out;
  RootSystemData rs = build_root_system(type, rank);
  for (const auto& row : rows) out.push_back(AffineDiagramChoice{rs, {}, row.vertex, Twist::outer, Labeling::bourbaki});
  return out;
}

KacResult kac_classify(const AffineDiagramChoice& choice) {
  const RootSystemData& rs = choice.rs;
  KacResult r;
  if (choice.twist == Twist::outer) {
    auto row = find_outer(rs.type(), rs.rank(), choice.vertex);
    if (!row) {
      throw Error(ErrorKind::not_found, std::string("no outer involution table entry for ") + rs.type() +
                                            num(rs.rank()) + " vertex " + std::to_string(choice.vertex));
    }
    r.verdict = row->verdict;
    r.family = row->family;
    r.subgroup = row->subgroup;
    r.double_edge = row->double_edge;
    r.short_vertex = row->short_vertex;
    return r;
  }

  const std::size_t k = to_internal_vertex(rs, choice.vertex, choice.labeling);
  auto marks = affine_marks(rs);
  if (marks[k] != 2) {
    throw Error(ErrorKind::invalid_argument, "inner involution vertex must carry mark 2");
  }
  const int bond = max_bond(rs);
  r.double_edge = bond == 2;
  r.short_vertex = k != 0 && !rs.is_long(k - 1);
  r.verdict = (r.double_edge && r.short_vertex) ? KacVerdict::simply_connected : KacVerdict::z2;
  Named n = inner_name(rs.type(), rs.rank(), k);
  r.family = n.family;
  r.subgroup = n.subgroup;
  return r;
}

IntMatrix subdiagram_coroot_map(const AffineDiagramChoice& choice) {
  if (choice.twist != Twist::inner) {
    throw Error(ErrorKind::unsupported, "coroot lattice comparison is implemented for inner involutions only");
  }
  const RootSystemData& rs = choice.rs;
  const auto l = static_cast<std::size_t>(rs.rank());
  const std::size_t k = to_internal_vertex(rs, choice.vertex, choice.labeling);
  const std::size_t dim = rs.ambient_dim();

  std::vector<RationalVector> basis;
  for (const auto& s : rs.simple_roots()) basis.push_back(rs.coroot(s));

  detail::QMatrix a(dim, std::vector<mpq_class>(l));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < l; ++j) a[i][j] = basis[j][i];

  auto affine = affine_simple_roots(rs);
  IntMatrix m(l, l);
  std::size_t col = 0;
  for (std::size_t v = 0; v <= l; ++v) {
    if (v == k) continue;
    RationalVector c = rs.coroot(affine[v]);
    auto x = detail::solve_rational(a, c);
    if (!x) throw Error(ErrorKind::invalid_argument, "coroot outside the coroot span");
    for (std::size_t i = 0; i < l; ++i) {
      if ((*x)[i].get_den() != 1) throw Error(ErrorKind::invalid_argument, "non-integral coroot coordinates");
      m(i, col) = (*x)[i].get_num();
    }
    ++col;
  }
  return m;
}

InvariantFactors kac_lattice_torsion(const AffineDiagramChoice& choice) {
  FinAbGroup coker(subdiagram_coroot_map(choice));
  if (!coker.is_finite()) throw Error(ErrorKind::invalid_argument, "coroot sublattice does not have full rank");
  return coker.invariants();
}

}  // namespace maninlab
