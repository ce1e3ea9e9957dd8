#pragma once

// Ribbon classification for quantum doubles: pivotal grouplikes, directly
// certified ribbon elements, square-root pairs on the base algebra, the
// bijection between the two lists, and the sphericity/modularity verdicts.
//
// Candidate ribbon elements take the form v = u p^{-1} for a pivotal
// grouplike p (p-conjugation = S^2). Pair embedding into the double goes
// through the set identification G(D) = characters x grouplikes of the base;
// the generic grouplike enumeration of D is always run as the oracle for
// that identification and any mismatch is fatal.

#include <optional>
#include <string>
#include <vector>

#include "double.hpp"

namespace hopf {

template <class F>
struct PivotalElement {
  Vec<F> p;            // grouplike coordinates in the ambient algebra
  int grouplike_index; // position in the sorted grouplike list
};

template <class F>
struct RibbonCertificate {
  Vec<F> v;
  PivotalElement<F> pivotal;
  bool central = false, antipode_fixed = false, counit_one = false, square = false,
       comult = false;
  bool certified() const { return central && antipode_fixed && counit_one && square && comult; }
};

struct KRPair {
  int ell = -1, beta = -1;  // indices into G(H) and G(H^*)
};

template <class F>
struct ClassificationReport {
  std::string algebra;
  int dim_double = 0;
  int pivotal_count = 0;
  std::vector<RibbonCertificate<F>> ribbon_certificates;
  std::vector<KRPair> kr_pairs;
  bool bijection_verified = false;
  bool spherical_dsps = false;
  bool factorizable = false;
  bool modular = false;
  std::vector<std::string> warnings;
  std::vector<std::string> notes;
};

// ---------------------------------------------------------------------------

template <class F>
std::vector<PivotalElement<F>> pivotal_grouplikes(const QuasiTriangular<F>& qt,
                                                  const GrouplikeSet<F>& gd) {
  const HopfAlgebra<F>& d = qt.algebra;
  Matrix<F> s2 = d.antipode * d.antipode;
  std::vector<PivotalElement<F>> out;
  for (int i = 0; i < gd.size(); ++i) {
    const Vec<F>& p = gd.elements[i];
    Vec<F> pinv = gd.elements[gd.inverse_idx[i]];
    bool ok = true;
    for (int b = 0; b < d.n && ok; ++b) {
      Vec<F> lhs = d.mul(d.mul(p, d.basis_vector(b)), pinv);
      ok = lhs == d.apply_row_matrix(s2, d.basis_vector(b));
    }
    if (ok) out.push_back({p, i});
  }
  return out;
}

// all five certificate checks, cheap ones first; fills every flag it reaches
template <class F>
RibbonCertificate<F> certify_ribbon(const QuasiTriangular<F>& qt, const PivotalElement<F>& piv,
                                    const Vec<F>& pinv) {
  const HopfAlgebra<F>& d = qt.algebra;
  RibbonCertificate<F> cert;
  cert.pivotal = piv;
  cert.v = d.mul(qt.u, pinv);
  const Vec<F>& v = cert.v;

  cert.counit_one = d.counit_of(v).is_one();
  if (!cert.counit_one) return cert;
  cert.antipode_fixed = d.apply_antipode(v) == v;
  if (!cert.antipode_fixed) return cert;
  cert.square = d.mul(v, v) == d.mul(qt.u, d.apply_antipode(qt.u));
  if (!cert.square) return cert;
  cert.central = true;
  for (int i = 0; i < d.n && cert.central; ++i) {
    auto e = d.basis_vector(i);
    cert.central = d.mul(v, e) == d.mul(e, v);
  }
  if (!cert.central) return cert;
  cert.comult = t2::equal(d, t2::comult_of(d, v), t2::mul_rank1(d, qt.monodromy_inv, v, v));
  return cert;
}

// every pivotal grouplike tried, only fully certified candidates returned;
// order follows the sorted grouplike list
template <class F>
std::vector<RibbonCertificate<F>> ribbon_elements_direct(const QuasiTriangular<F>& qt,
                                                         const GrouplikeSet<F>& gd) {
  std::vector<RibbonCertificate<F>> out;
  for (const auto& piv : pivotal_grouplikes(qt, gd)) {
    Vec<F> pinv = gd.elements[gd.inverse_idx[piv.grouplike_index]];
    auto cert = certify_ribbon(qt, piv, pinv);
    if (cert.certified()) out.push_back(std::move(cert));
  }
  return out;
}

template <class F>
std::vector<RibbonCertificate<F>> ribbon_elements_direct(const QuasiTriangular<F>& qt) {
  auto gd = grouplikes(qt.algebra);
  return ribbon_elements_direct(qt, gd);
}

// ---------------------------------------------------------------------------
// Square-root pairs on the base algebra

template <class F>
std::vector<KRPair> kr_pairs(const HopfAlgebra<F>& h, const RadfordData<F>& rad,
                             const GrouplikeSet<F>& gh, const GrouplikeSet<F>& ch) {
  const int n = h.n;
  Matrix<F> s2 = h.antipode * h.antipode;
  int a_idx = gh.find(rad.a);
  int alpha_idx = ch.find(rad.alpha);
  if (a_idx < 0 || alpha_idx < 0)
    throw theorem_violation(h.name + ": distinguished data missing from grouplike enumeration");
  std::vector<KRPair> out;
  for (int le = 0; le < gh.size(); ++le) {
    if (gh.table[le][le] != a_idx) continue;  // ell^2 = a
    const Vec<F>& ell = gh.elements[le];
    Vec<F> ell_inv = gh.elements[gh.inverse_idx[le]];
    for (int be = 0; be < ch.size(); ++be) {
      if (ch.table[be][be] != alpha_idx) continue;  // beta^2 = alpha
      const Vec<F>& beta = ch.elements[be];
      Vec<F> beta_inv = character_inverse(h, beta);
      bool conj = true;
      for (int i = 0; i < n && conj; ++i) {
        Vec<F> mid = hit_right(h, hit_left(h, beta, h.basis_vector(i)), beta_inv);
        Vec<F> rhs = h.mul(h.mul(ell, mid), ell_inv);
        conj = rhs == h.apply_row_matrix(s2, h.basis_vector(i));
      }
      if (conj) out.push_back({le, be});
    }
  }
  return out;
}

// embedding of a pair as a grouplike of the double: coords (c,k) = beta_c ell_k
template <class F>
Vec<F> embed_pair(const HopfAlgebra<F>& h, const Vec<F>& beta, const Vec<F>& ell) {
  const int n = h.n;
  Vec<F> p((size_t)n * n, h.fld.zero());
  for (int c = 0; c < n; ++c) {
    if (beta[c].is_zero()) continue;
    for (int k = 0; k < n; ++k)
      if (!ell[k].is_zero()) p[(size_t)c * n + k] = beta[c] * ell[k];
  }
  return p;
}

// generic enumeration cross-checked against the product identification;
// the generic list is returned (it is the oracle)
template <class F>
GrouplikeSet<F> double_grouplikes_checked(const QuasiTriangular<F>& qt, const HopfAlgebra<F>& h,
                                          const GrouplikeSet<F>& gh, const GrouplikeSet<F>& ch) {
  auto gd = grouplikes(qt.algebra);
  std::vector<Vec<F>> expect;
  for (const auto& beta : ch.elements)
    for (const auto& ell : gh.elements) expect.push_back(embed_pair(h, beta, ell));
  std::sort(expect.begin(), expect.end(), vec_less<F>);
  if ((int)expect.size() != gd.size())
    throw theorem_violation(h.name + ": double grouplike count mismatch (generic " +
                            std::to_string(gd.size()) + " vs product " +
                            std::to_string(expect.size()) + ")");
  for (int i = 0; i < gd.size(); ++i)
    if (!(expect[i] == gd.elements[i]))
      throw theorem_violation(h.name + ": double grouplike identification mismatch");
  return gd;
}

// pair -> certified ribbon element; certification failure is fatal
template <class F>
RibbonCertificate<F> pair_to_ribbon(const HopfAlgebra<F>& h, const QuasiTriangular<F>& qt,
                                    const GrouplikeSet<F>& gh, const GrouplikeSet<F>& ch,
                                    const GrouplikeSet<F>& gd, const KRPair& pair) {
  Vec<F> p = embed_pair(h, ch.elements[pair.beta], gh.elements[pair.ell]);
  int pi = gd.find(p);
  if (pi < 0) throw theorem_violation(h.name + ": embedded pair is not a grouplike of the double");
  PivotalElement<F> piv{p, pi};
  auto cert = certify_ribbon(qt, piv, gd.elements[gd.inverse_idx[pi]]);
  if (!cert.certified())
    throw theorem_violation(h.name + ": pair fails ribbon certification (convention fault)");
  return cert;
}

// ---------------------------------------------------------------------------
// Verdicts

// DSPS sphericity shadow: alpha = eps and some grouplike p implements S^2
// with p^2 = a.
template <class F>
bool spherical_dsps(const HopfAlgebra<F>& h, const RadfordData<F>& rad, const GrouplikeSet<F>& gh) {
  if (!(rad.alpha == h.counit)) return false;
  int a_idx = gh.find(rad.a);
  if (a_idx < 0) throw theorem_violation(h.name + ": distinguished grouplike missing");
  Matrix<F> s2 = h.antipode * h.antipode;
  for (int i = 0; i < gh.size(); ++i) {
    if (gh.table[i][i] != a_idx) continue;
    const Vec<F>& p = gh.elements[i];
    Vec<F> pinv = gh.elements[gh.inverse_idx[i]];
    bool ok = true;
    for (int b = 0; b < h.n && ok; ++b)
      ok = h.mul(h.mul(p, h.basis_vector(b)), pinv) ==
           h.apply_row_matrix(s2, h.basis_vector(b));
    if (ok) return true;
  }
  return false;
}

template <class F>
ClassificationReport<F> classify(const HopfAlgebra<F>& h) {
  require_validated(h);
  ClassificationReport<F> rep;
  rep.algebra = h.name;

  auto qt = drinfeld_double(h);
  rep.dim_double = qt.algebra.n;

  auto gh = grouplikes(h);
  auto ch = characters(h);
  auto rad = radford_data(h);
  auto gd = double_grouplikes_checked(qt, h, gh, ch);
  if (gh.warnings || ch.warnings || gd.warnings)
    rep.warnings.push_back("grouplike enumeration skipped " +
                           std::to_string(gh.warnings + ch.warnings + gd.warnings) +
                           " out-of-field eigenvalue branch(es)");

  rep.pivotal_count = (int)pivotal_grouplikes(qt, gd).size();
  rep.ribbon_certificates = ribbon_elements_direct(qt, gd);
  rep.kr_pairs = kr_pairs(h, rad, gh, ch);

  // the pair list maps into the direct list bijectively
  {
    std::vector<int> hit(rep.ribbon_certificates.size(), 0);
    bool ok = rep.kr_pairs.size() == rep.ribbon_certificates.size();
    for (const auto& pr : rep.kr_pairs) {
      if (!ok) break;
      auto cert = pair_to_ribbon(h, qt, gh, ch, gd, pr);
      int found = -1;
      for (int i = 0; i < (int)rep.ribbon_certificates.size(); ++i)
        if (rep.ribbon_certificates[i].v == cert.v) { found = i; break; }
      if (found < 0 || hit[found]) { ok = false; break; }
      hit[found] = 1;
    }
    rep.bijection_verified = ok;
    if (!ok)
      throw theorem_violation(h.name +
                              ": pair/ribbon correspondence is not a bijection (theorem violation)");
  }

  rep.factorizable = factorizable(qt);
  rep.spherical_dsps = spherical_dsps(h, rad, gh);
  rep.modular = rep.factorizable && !rep.ribbon_certificates.empty();

  // distinguished data of the double: unimodular, and a_D matches the
  // embedded base data up to the one global convention orientation
  {
    auto rad_d = radford_data(qt.algebra);
    if (!(rad_d.alpha == qt.algebra.counit))
      throw theorem_violation(h.name + ": double is not unimodular (theorem violation)");
    rep.notes.push_back("double unimodular: yes");
    Vec<F> a_inv = h.apply_antipode(rad.a);
    Vec<F> alpha_inv = character_inverse(h, rad.alpha);
    struct Cand {
      const char* tag;
      Vec<F> val;
    };
    std::vector<Cand> cands;
    cands.push_back({"(alpha, a)", embed_pair(h, rad.alpha, rad.a)});
    cands.push_back({"(alpha^-1, a^-1)", embed_pair(h, alpha_inv, a_inv)});
    cands.push_back({"(alpha^-1, a)", embed_pair(h, alpha_inv, rad.a)});
    cands.push_back({"(alpha, a^-1)", embed_pair(h, rad.alpha, a_inv)});
    const char* matched = nullptr;
    for (const auto& c : cands)
      if (c.val == rad_d.a) { matched = c.tag; break; }
    if (matched)
      rep.notes.push_back(std::string("distinguished grouplike of the double = embedded ") + matched);
    else
      rep.warnings.push_back("distinguished grouplike of the double matches no embedding of the base data");
  }
  return rep;
}

template <class F>
bool modular_verdict(const HopfAlgebra<F>& h) {
  auto rep = classify(h);
  return rep.modular;
}

}  // namespace hopf
