#pragma once

// JSON interchange for algebras, quasitriangular data and reports.
//
// Algebra schema (all scalars as exact strings, "n" or "n/d" over Q,
// decimal residues over prime fields):
// {
//   "name": "...",
//   "field": {"kind": "rational"} | {"kind": "prime", "p": 7},
//   "dim": n,
//   "basis": [n names],
//   "mult":    [n][n][n],   coefficient of e_k in e_i e_j
//   "unit":    [n],
//   "comult":  [n][n][n],   coefficient of e_j (x) e_k in Delta(e_i)
//   "counit":  [n],
//   "antipode": [n][n],     row i = coordinates of S(e_i)
// }
// Quasitriangular files carry additionally "r_matrix", "u", "monodromy"
// (lengths n^2, n, n^2). Reports are emitted with insertion-ordered keys to
// keep bytes reproducible.

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "double.hpp"
#include "ribbon.hpp"

namespace hopf {

using ordered_json = nlohmann::ordered_json;

struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& m) : std::runtime_error(m) {}
};

inline FieldSpec field_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("kind")) throw parse_error("field: expected object with 'kind'");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") return FieldSpec::rational();
  if (kind == "prime") {
    if (!j.contains("p") || !(j.at("p").is_number_unsigned() || j.at("p").is_number_integer()) ||
        j.at("p").get<long>() <= 0)
      throw parse_error("field: prime kind needs a positive integer 'p'");
    return FieldSpec::prime(j.at("p").get<uint32_t>());
  }
  throw parse_error("field.kind: expected 'rational' or 'prime', got '" + kind + "'");
}

inline ordered_json field_to_json(const FieldSpec& f) {
  ordered_json j;
  if (f.kind == FieldSpec::Kind::rational) {
    j["kind"] = "rational";
  } else {
    j["kind"] = "prime";
    j["p"] = f.p;
  }
  return j;
}

namespace detail {

template <class F>
typename F::Elem parse_scalar(F fld, const ordered_json& j, const std::string& path) {
  if (!j.is_string()) throw parse_error(path + ": scalar must be a string");
  try {
    return fld.parse(j.get<std::string>());
  } catch (const field_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

template <class F>
Vec<F> parse_vector(F fld, const ordered_json& j, int n, const std::string& path) {
  if (!j.is_array() || (int)j.size() != n)
    throw parse_error(path + ": expected array of length " + std::to_string(n));
  Vec<F> v;
  v.reserve(n);
  for (int i = 0; i < n; ++i) v.push_back(parse_scalar(fld, j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

template <class F>
ordered_json vector_to_json(const Vec<F>& v) {
  ordered_json j = ordered_json::array();
  for (const auto& x : v) j.push_back(x.to_string());
  return j;
}

}  // namespace detail

template <class F>
HopfAlgebra<F> algebra_from_json(F fld, const ordered_json& j) {
  for (const char* key : {"name", "field", "dim", "basis", "mult", "unit", "comult", "counit", "antipode"})
    if (!j.contains(key)) throw parse_error(std::string("missing key '") + key + "'");
  HopfAlgebra<F> h;
  h.fld = fld;
  h.name = j.at("name").get<std::string>();
  if (!j.at("dim").is_number_integer() && !j.at("dim").is_number_unsigned())
    throw parse_error("dim: expected a positive integer");
  h.n = j.at("dim").get<int>();
  if (h.n <= 0) throw parse_error("dim: must be positive");
  const int n = h.n;
  if (!j.at("basis").is_array() || (int)j.at("basis").size() != n)
    throw parse_error("basis: expected array of length dim");
  for (const auto& b : j.at("basis")) h.basis_names.push_back(b.get<std::string>());

  const auto& jm = j.at("mult");
  if (!jm.is_array() || (int)jm.size() != n) throw parse_error("mult: expected dim rows");
  h.mult.assign((size_t)n * n, {});
  for (int i = 0; i < n; ++i) {
    if (!jm[i].is_array() || (int)jm[i].size() != n)
      throw parse_error("mult[" + std::to_string(i) + "]: expected dim rows");
    for (int jj = 0; jj < n; ++jj) {
      auto row = detail::parse_vector(fld, jm[i][jj], n,
                                      "mult[" + std::to_string(i) + "][" + std::to_string(jj) + "]");
      for (int k = 0; k < n; ++k)
        if (!row[k].is_zero()) h.mult_row(i, jj).push_back({k, row[k]});
    }
  }
  h.unit = detail::parse_vector(fld, j.at("unit"), n, "unit");
  const auto& jc = j.at("comult");
  if (!jc.is_array() || (int)jc.size() != n) throw parse_error("comult: expected dim rows");
  h.comult.assign(n, {});
  for (int i = 0; i < n; ++i) {
    if (!jc[i].is_array() || (int)jc[i].size() != n)
      throw parse_error("comult[" + std::to_string(i) + "]: expected dim rows");
    for (int jj = 0; jj < n; ++jj) {
      auto row = detail::parse_vector(fld, jc[i][jj], n,
                                      "comult[" + std::to_string(i) + "][" + std::to_string(jj) + "]");
      for (int k = 0; k < n; ++k)
        if (!row[k].is_zero()) h.comult[i].push_back({jj, k, row[k]});
    }
  }
  h.counit = detail::parse_vector(fld, j.at("counit"), n, "counit");
  const auto& ja = j.at("antipode");
  if (!ja.is_array() || (int)ja.size() != n) throw parse_error("antipode: expected dim rows");
  h.antipode = Matrix<F>(fld, n, n);
  for (int i = 0; i < n; ++i) {
    auto row = detail::parse_vector(fld, ja[i], n, "antipode[" + std::to_string(i) + "]");
    for (int k = 0; k < n; ++k) h.antipode.at(i, k) = row[k];
  }
  try {
    h.finalize();
  } catch (const structure_error& e) {
    throw parse_error(e.what());
  }
  return h;
}

template <class F>
ordered_json algebra_to_json(const HopfAlgebra<F>& h) {
  const int n = h.n;
  ordered_json j;
  j["name"] = h.name;
  j["field"] = field_to_json(h.fld.spec());
  j["dim"] = n;
  j["basis"] = h.basis_names;
  ordered_json mult = ordered_json::array();
  for (int i = 0; i < n; ++i) {
    ordered_json row_i = ordered_json::array();
    for (int jj = 0; jj < n; ++jj) {
      Vec<F> dense = to_dense(h.fld, n, h.mult_row(i, jj));
      row_i.push_back(detail::vector_to_json<F>(dense));
    }
    mult.push_back(std::move(row_i));
  }
  j["mult"] = std::move(mult);
  j["unit"] = detail::vector_to_json<F>(h.unit);
  ordered_json comult = ordered_json::array();
  for (int i = 0; i < n; ++i) {
    Matrix<F> dense(h.fld, n, n);
    for (const auto& [a, b, c] : h.comult[i]) dense.at(a, b) += c;
    ordered_json row_i = ordered_json::array();
    for (int a = 0; a < n; ++a) {
      ordered_json row_a = ordered_json::array();
      for (int b = 0; b < n; ++b) row_a.push_back(dense.at(a, b).to_string());
      row_i.push_back(std::move(row_a));
    }
    comult.push_back(std::move(row_i));
  }
  j["comult"] = std::move(comult);
  j["counit"] = detail::vector_to_json<F>(h.counit);
  ordered_json ant = ordered_json::array();
  for (int i = 0; i < n; ++i) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k < n; ++k) row.push_back(h.antipode.at(i, k).to_string());
    ant.push_back(std::move(row));
  }
  j["antipode"] = std::move(ant);
  return j;
}

// quasitriangular output: the double's algebra plus R, u, Q
template <class F>
ordered_json quasitriangular_to_json(const QuasiTriangular<F>& qt) {
  ordered_json j = algebra_to_json(qt.algebra);
  const int n = qt.algebra.n;
  Vec<F> rdense((size_t)n * n, qt.algebra.fld.zero());
  for (const auto& [x, y, c] : qt.r_matrix) rdense[(size_t)x * n + y] += c;
  Vec<F> qdense((size_t)n * n, qt.algebra.fld.zero());
  for (const auto& [x, y, c] : qt.monodromy) qdense[(size_t)x * n + y] += c;
  j["r_matrix"] = detail::vector_to_json<F>(rdense);
  j["u"] = detail::vector_to_json<F>(qt.u);
  j["monodromy"] = detail::vector_to_json<F>(qdense);
  return j;
}

// load user-supplied quasitriangular data; r required, u/monodromy derived
// and cross-checked against the file when present
template <class F>
QuasiTriangular<F> quasitriangular_from_json(F fld, const ordered_json& j) {
  QuasiTriangular<F> qt;
  qt.provenance = "user-supplied";
  qt.algebra = algebra_from_json(fld, j);
  const HopfAlgebra<F>& d = qt.algebra;
  const int n = d.n;
  if (!j.contains("r_matrix")) throw parse_error("missing key 'r_matrix'");
  Vec<F> rdense = detail::parse_vector(fld, j.at("r_matrix"), n * n, "r_matrix");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!rdense[(size_t)x * n + y].is_zero()) qt.r_matrix.push_back({x, y, rdense[(size_t)x * n + y]});
  {
    auto rep = validate_axioms(d);
    if (!rep.ok()) throw parse_error(d.name + ": quasitriangular input fails Hopf axioms");
  }
  qt.r_inv = t2::apply_left(d, d.antipode, qt.r_matrix);
  qt.monodromy = t2::mul(d, t2::flip(qt.r_matrix), qt.r_matrix);
  qt.monodromy_inv = t2::mul(d, qt.r_inv, t2::flip(qt.r_inv));
  qt.u = drinfeld_element(d, qt.r_matrix);
  if (j.contains("u")) {
    Vec<F> u_file = detail::parse_vector(fld, j.at("u"), n, "u");
    if (!(u_file == qt.u)) throw parse_error("u: inconsistent with r_matrix");
  }
  if (j.contains("monodromy")) {
    Vec<F> q_file = detail::parse_vector(fld, j.at("monodromy"), n * n, "monodromy");
    T2<F> qf;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (!q_file[(size_t)x * n + y].is_zero()) qf.push_back({x, y, q_file[(size_t)x * n + y]});
    if (!t2::equal(d, qf, qt.monodromy)) throw parse_error("monodromy: inconsistent with r_matrix");
  }
  auto [ok, ui] = d.try_inverse(qt.u);
  if (!ok) throw parse_error("u: not invertible");
  qt.u_inv = std::move(ui);
  return qt;
}

// ---------------------------------------------------------------------------
// Report fragments

template <class F>
ordered_json radford_to_json(const HopfAlgebra<F>& h, const RadfordData<F>& rd) {
  ordered_json j;
  j["left_integral"] = detail::vector_to_json<F>(rd.left_integral);
  j["right_integral_dual"] = detail::vector_to_json<F>(rd.right_integral_dual);
  ordered_json alpha;
  for (int i = 0; i < h.n; ++i) alpha[h.basis_names[i]] = rd.alpha[i].to_string();
  j["alpha"] = std::move(alpha);
  j["a"] = detail::vector_to_json<F>(rd.a);
  j["unimodular"] = unimodular(h, rd);
  j["dual_unimodular"] = dual_unimodular(h, rd);
  if (rd.s4_verified) {
    j["s4_formula"] = "verified";
  } else {
    ordered_json w;
    w["witnesses"] = rd.s4_witnesses;
    j["s4_formula"] = std::move(w);
  }
  return j;
}

template <class F>
ordered_json grouplikes_to_json(const GrouplikeSet<F>& g) {
  ordered_json j;
  j["count"] = g.size();
  ordered_json els = ordered_json::array();
  for (const auto& e : g.elements) els.push_back(detail::vector_to_json<F>(e));
  j["elements"] = std::move(els);
  j["table"] = g.table;
  j["identity"] = g.identity;
  j["inverses"] = g.inverse_idx;
  j["warnings"] = g.warnings;
  return j;
}

template <class F>
ordered_json classification_to_json(const ClassificationReport<F>& rep) {
  ordered_json j;
  j["algebra"] = rep.algebra;
  j["dim_double"] = rep.dim_double;
  j["pivotal_count"] = rep.pivotal_count;
  j["ribbon_count"] = (int)rep.ribbon_certificates.size();
  j["kr_pair_count"] = (int)rep.kr_pairs.size();
  j["bijection"] = rep.bijection_verified;
  ordered_json ribbons = ordered_json::array();
  for (const auto& c : rep.ribbon_certificates) ribbons.push_back(detail::vector_to_json<F>(c.v));
  j["ribbon_elements"] = std::move(ribbons);
  ordered_json pairs = ordered_json::array();
  for (const auto& p : rep.kr_pairs) {
    ordered_json pj;
    pj["ell"] = p.ell;
    pj["beta"] = p.beta;
    pairs.push_back(std::move(pj));
  }
  j["kr_pairs"] = std::move(pairs);
  j["spherical_dsps"] = rep.spherical_dsps;
  j["factorizable"] = rep.factorizable;
  j["modular"] = rep.modular;
  j["warnings"] = rep.warnings;
  return j;
}

inline ordered_json validation_to_json(const AxiomReport& rep) {
  ordered_json j;
  j["ok"] = rep.ok();
  j["antipode_invertible"] = rep.antipode_invertible;
  j["failure_count"] = rep.total_failures;
  ordered_json fails = ordered_json::array();
  for (const auto& f : rep.failures) {
    ordered_json fj;
    fj["axiom"] = f.axiom;
    fj["witness"] = f.witness;
    fails.push_back(std::move(fj));
  }
  j["failures"] = std::move(fails);
  return j;
}

}  // namespace hopf
