#include <string>

#include "maninlab/error.hpp"
#include "maninlab/orbit_finiteness.hpp"

namespace maninlab {
namespace {

IntMatrix scalar(long x) { return IntMatrix::from_rows({{x}}); }

GaloisActor identity_actor(const FinAbGroup& h, const FinAbGroup& g) {
  return {IntMatrix::identity(h.ambient_rank()), IntMatrix::identity(g.ambient_rank())};
}

std::string twist_suffix(Twist t) { return t == Twist::inner ? " inner" : " outer"; }

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::invalid_argument, message);
}

PairDescriptor aii_adjoint(int n, Twist twist) {
  require(n >= 2, "AII-adjoint needs n >= 2");
  PairDescriptor p;
  p.name = "AII-adjoint n=" + std::to_string(n) + twist_suffix(twist);
  p.pi1_H = FinAbGroup::cyclic(2);
  p.pi1_G = FinAbGroup::cyclic(2 * n);
  p.embedding = scalar(n);
  p.galois.push_back(identity_actor(p.pi1_H, p.pi1_G));
  if (twist == Twist::outer) p.galois.push_back({scalar(-1), scalar(-1)});
  p.expected_finite = twist == Twist::inner || n % 2 == 1;
  return p;
}

PairDescriptor cii_adjoint(int a, int b) {
  require(a >= 1 && b >= 1, "CII-adjoint needs p, q >= 1");
  PairDescriptor p;
  p.name = "CII-adjoint p=" + std::to_string(a) + " q=" + std::to_string(b);
  p.pi1_H = FinAbGroup::cyclic(2);
  p.pi1_G = FinAbGroup::cyclic(2);
  p.embedding = scalar(1);
  p.galois.push_back(identity_actor(p.pi1_H, p.pi1_G));
  p.expected_finite = true;
  return p;
}

PairDescriptor bdi_even_adjoint(int l) {
  require(l >= 2, "BDI(2l,1)-adjoint needs l >= 2");
  PairDescriptor p;
  p.name = "BDI(2l,1)-adjoint l=" + std::to_string(l);
  p.pi1_H = FinAbGroup::cyclic(2);
  p.pi1_G = FinAbGroup::cyclic(2);
  p.embedding = scalar(1);
  p.galois.push_back(identity_actor(p.pi1_H, p.pi1_G));
  p.expected_finite = true;
  return p;
}

// PSO_2l has pi_1 = Z/4 for odd l and Z/2 x Z/2 for even l; the outer
// involution acts by -1, resp. swaps the two generators.
PairDescriptor bdi_odd_adjoint(int l, Twist twist) {
  require(l >= 3, "BDI(2l-1,1)-adjoint needs l >= 3");
  PairDescriptor p;
  p.name = "BDI(2l-1,1)-adjoint l=" + std::to_string(l) + twist_suffix(twist);
  p.pi1_H = FinAbGroup::cyclic(2);
  if (l % 2 == 1) {
    p.pi1_G = FinAbGroup::cyclic(4);
    p.embedding = scalar(2);
  } else {
    p.pi1_G = FinAbGroup(IntMatrix::from_rows({{2, 0}, {0, 2}}));
    p.embedding = IntMatrix::from_rows({{1}, {1}});
  }
  p.galois.push_back(identity_actor(p.pi1_H, p.pi1_G));
  if (twist == Twist::outer) {
    p.galois.push_back({scalar(1), l % 2 == 1 ? scalar(-1) : IntMatrix::from_rows({{0, 1}, {1, 0}})});
  }
  p.expected_finite = twist == Twist::inner;
  return p;
}

PairDescriptor eiv_adjoint(Twist twist) {
  PairDescriptor p;
  p.name = std::string("EIV-adjoint") + twist_suffix(twist);
  p.pi1_H = FinAbGroup::trivial();
  p.pi1_G = FinAbGroup::cyclic(3);
  p.embedding = IntMatrix(1, 0);
  p.galois.push_back(identity_actor(p.pi1_H, p.pi1_G));
  if (twist == Twist::outer) p.galois.push_back({IntMatrix(0, 0), scalar(-1)});
  p.expected_finite = true;
  return p;
}

PairDescriptor fii_adjoint() {
  PairDescriptor p;
  p.name = "FII-adjoint";
  p.pi1_H = FinAbGroup::trivial();
  p.pi1_G = FinAbGroup::trivial();
  p.embedding = IntMatrix(0, 0);
  p.galois.push_back(identity_actor(p.pi1_H, p.pi1_G));
  p.expected_finite = true;
  return p;
}

// G = PSL_D(D^m), H = PSU(D^m, Phi) with n = m r. Over the algebraic closure G
// is PGL_n x PGL_n and H sits in it as x -> (x, -x) on pi_1; the involution of
// the second kind swaps the two factors of G and acts by -1 on pi_1(H).
PairDescriptor psld_psu(int n) {
  require(n >= 1 && n % 2 == 1, "PSLD-PSU is defined here for odd n");
  PairDescriptor p;
  p.name = "PSLD-PSU n=" + std::to_string(n);
  p.pi1_H = FinAbGroup::cyclic(n);
  p.pi1_G = FinAbGroup(IntMatrix::from_rows({{n, 0}, {0, n}}));
  p.embedding = IntMatrix::from_rows({{1}, {-1}});
  p.galois.push_back(identity_actor(p.pi1_H, p.pi1_G));
  p.galois.push_back({scalar(-1), IntMatrix::from_rows({{0, 1}, {1, 0}})});
  p.expected_finite = true;
  return p;
}

}  // namespace

PairDescriptor make_pair(const std::string& name, const PairParams& a) {
  auto no_outer = [&](const char* what) {
    require(a.twist == Twist::inner, std::string(what) + " has no outer form in the catalog");
  };
  if (name == "AII-adjoint") return aii_adjoint(a.n, a.twist);
  if (name == "CII-adjoint") {
    no_outer("CII-adjoint");
    return cii_adjoint(a.p, a.q);
  }
  if (name == "BDI(2l,1)-adjoint" || name == "BDI-even-adjoint") {
    no_outer("BDI(2l,1)-adjoint");
    return bdi_even_adjoint(a.l);
  }
  if (name == "BDI(2l-1,1)-adjoint" || name == "BDI-odd-adjoint") return bdi_odd_adjoint(a.l, a.twist);
  if (name == "EIV-adjoint") return eiv_adjoint(a.twist);
  if (name == "FII-adjoint") {
    no_outer("FII-adjoint");
    return fii_adjoint();
  }
  if (name == "PSLD-PSU") return psld_psu(a.n);
  throw Error(ErrorKind::not_found, "unknown pair '" + name + "'");
}

PairDescriptor simply_connected_pair(const AffineDiagramChoice& choice) {
  KacResult k = kac_classify(choice);
  PairDescriptor p;
  p.name = std::string("sc ") + choice.rs.type() + std::to_string(choice.rs.rank()) + " v" +
           std::to_string(choice.vertex) + twist_suffix(choice.twist) + " " + k.family.label();
  p.pi1_H = k.verdict == KacVerdict::simply_connected ? FinAbGroup::trivial() : FinAbGroup::cyclic(2);
  p.pi1_G = FinAbGroup::trivial();
  p.embedding = IntMatrix(0, p.pi1_H.ambient_rank());
  p.galois.push_back(identity_actor(p.pi1_H, p.pi1_G));
  p.expected_finite = in_simply_connected_list(k.family);
  return p;
}

std::vector<PairDescriptor> builtin_catalog() {
  std::vector<PairDescriptor> c;
  for (int n = 3; n <= 10; ++n) {
    c.push_back(aii_adjoint(n, Twist::inner));
    c.push_back(aii_adjoint(n, Twist::outer));
  }
  for (int p = 1; p <= 5; ++p)
    for (int q = p; q <= 5; ++q) c.push_back(cii_adjoint(p, q));
  for (int l = 3; l <= 10; ++l) c.push_back(bdi_even_adjoint(l));
  for (int l = 3; l <= 10; ++l) {
    c.push_back(bdi_odd_adjoint(l, Twist::inner));
    c.push_back(bdi_odd_adjoint(l, Twist::outer));
  }
  c.push_back(eiv_adjoint(Twist::inner));
  c.push_back(eiv_adjoint(Twist::outer));
  c.push_back(fii_adjoint());
  for (int n = 3; n <= 9; n += 2) c.push_back(psld_psu(n));

  struct TR {
    char type;
    int lo, hi;
  };
  for (TR tr : {TR{'A', 1, 8}, TR{'B', 2, 8}, TR{'C', 2, 8}, TR{'D', 3, 8}, TR{'E', 6, 8}, TR{'F', 4, 4},
                TR{'G', 2, 2}}) {
    for (int r = tr.lo; r <= tr.hi; ++r) {
      for (const auto& ch : inner_choices(tr.type, r)) c.push_back(simply_connected_pair(ch));
      for (const auto& ch : outer_choices(tr.type, r)) c.push_back(simply_connected_pair(ch));
    }
  }
  return c;
}

}  // namespace maninlab
