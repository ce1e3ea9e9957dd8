// Acceptance suite: one line per criterion, exact checks throughout.
// Usage: acceptance <golden-dir>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <hopf/catalog.hpp>
#include <hopf/json_io.hpp>
#include <hopf/ribbon.hpp>

using namespace hopf;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << what;
  if (!detail.empty()) std::cout << " — " << detail;
  std::cout << "\n";
  if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// verdicts computed once per catalog entry and shared by the criteria
struct EntryVerdicts {
  std::string id;
  int dim = 0;
  bool axioms_ok = false;
  double validate_seconds = 0;
  bool double_ok = false;        // double validated + quasitriangular suite
  double double_seconds = 0;
  int dim_double = 0;
  bool factorizable_ok = false;
  bool double_unimodular = false;
  bool s4_entry = false;
  bool s4_double = false;
  bool bijection = false;
  long ribbon_count = -1;
  long kr_count = -1;
  bool spherical = false;
  bool modular = false;
  bool classify_threw = false;
  std::string classify_error;
};

template <class F>
EntryVerdicts run_entry(const std::string& id, const HopfAlgebra<F>& h) {
  EntryVerdicts v;
  v.id = id;
  v.dim = h.n;
  {
    auto t0 = Clock::now();
    auto copy = h;  // defeat validation caching so every entry is timed honestly
    copy.validated = false;
    v.axioms_ok = validate_axioms(copy).ok();
    v.validate_seconds = seconds_since(t0);
  }
  {
    auto t0 = Clock::now();
    auto qt = drinfeld_double(h);  // throws on any axiom/quasitriangularity failure
    auto qrep = verify_quasitriangular(qt);
    Matrix<F> s2 = qt.algebra.antipode * qt.algebra.antipode;
    bool conj = true;
    for (int i = 0; i < qt.algebra.n && conj; ++i)
      conj = qt.algebra.apply_row_matrix(s2, qt.algebra.basis_vector(i)) ==
             qt.algebra.mul(qt.algebra.mul(qt.u, qt.algebra.basis_vector(i)), qt.u_inv);
    v.double_ok = qrep.ok() && conj;
    v.double_seconds = seconds_since(t0);
    v.dim_double = qt.algebra.n;
    v.factorizable_ok = factorizable(qt);
    auto rad_d = radford_data(qt.algebra);
    v.double_unimodular = rad_d.alpha == qt.algebra.counit;
    v.s4_double = rad_d.s4_verified;
  }
  v.s4_entry = radford_data(h).s4_verified;
  try {
    auto rep = classify(h);
    v.bijection = rep.bijection_verified;
    v.ribbon_count = (long)rep.ribbon_certificates.size();
    v.kr_count = (long)rep.kr_pairs.size();
    v.spherical = rep.spherical_dsps;
    v.modular = rep.modular;
  } catch (const theorem_violation& e) {
    v.classify_threw = true;
    v.classify_error = e.what();
  }
  return v;
}

// every single structure constant of k[C2] bumped by +1 must trip a named,
// witnessed axiom failure
bool mutation_sweep(std::string& detail) {
  RatField Q;
  auto base = group_algebra(cyclic_group(2), Q);
  int tried = 0, caught = 0;
  auto check = [&](HopfAlgebra<RatField>& m) {
    m.validated = false;
    ++tried;
    auto rep = validate_axioms(m);
    bool witnessed = !rep.ok();
    if (witnessed && rep.total_failures > 0) {
      bool named = false;
      for (const auto& f : rep.failures)
        if (!f.axiom.empty()) named = true;
      witnessed = named;
    }
    if (!rep.antipode_invertible) witnessed = true;
    if (witnessed) ++caught;
  };
  const int n = 2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        auto m = base;
        Vec<RatField> row = to_dense(Q, n, m.mult_row(i, j));
        row[k] += Q.one();
        m.mult_row(i, j) = to_sparse<RatField>(row);
        check(m);
      }
  for (int i = 0; i < n; ++i) {
    auto m = base;
    m.unit[i] += Q.one();
    check(m);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        auto m = base;
        Matrix<RatField> dense(Q, n, n);
        for (const auto& [a, b, c] : m.comult[i]) dense.at(a, b) += c;
        dense.at(j, k) += Q.one();
        m.comult[i].clear();
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            if (!dense.at(a, b).is_zero()) m.comult[i].push_back({a, b, dense.at(a, b)});
        check(m);
      }
  for (int i = 0; i < n; ++i) {
    auto m = base;
    m.counit[i] += Q.one();
    check(m);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto m = base;
      m.antipode.at(i, j) += Q.one();
      check(m);
    }
  std::ostringstream ss;
  ss << caught << "/" << tried << " single-constant mutations detected";
  detail = ss.str();
  return caught == tried;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return "<missing golden file: " + path + ">";
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  std::string golden_dir = argc > 1 ? argv[1] : "tests/golden";

  std::vector<EntryVerdicts> table;
  std::map<std::string, GroupTable> group_of = {
      {"trivial-Q", cyclic_group(1)},   {"group-C2-Q", cyclic_group(2)},
      {"group-C3-Q", cyclic_group(3)},  {"group-C4-Q", cyclic_group(4)},
      {"group-C5-Q", cyclic_group(5)},  {"group-C6-Q", cyclic_group(6)},
      {"group-S3-Q", symmetric_s3()},   {"group-D4-Q", dihedral_d4()},
      {"group-Q8-Q", quaternion_q8()},
  };

  for (const auto& meta : catalog()) {
    auto any = build_catalog_entry(meta.id);
    std::visit([&](auto& h) { table.push_back(run_entry(meta.id, h)); }, any);
  }

  // 1. axiom suite + mutation detection, < 1 s per entry
  {
    bool ok = true;
    std::string slow;
    for (const auto& v : table) {
      if (!v.axioms_ok) { ok = false; slow += v.id + " fails axioms; "; }
      if (v.validate_seconds >= 1.0) { ok = false; slow += v.id + " too slow; "; }
    }
    std::string mut_detail;
    bool mut_ok = mutation_sweep(mut_detail);
    report(1, "axiom suite on all catalog entries, single-constant mutations detected",
           ok && mut_ok, std::to_string(table.size()) + " entries validated; " + mut_detail + (slow.empty() ? "" : "; " + slow));
  }

  // 2. double correctness with runtime bounds for dim(H) <= 9
  {
    bool ok = true;
    std::string detail;
    for (const auto& v : table) {
      if (v.dim > 9) continue;
      if (!v.double_ok) { ok = false; detail += v.id + " fails; "; }
      double bound = v.dim_double <= 16 ? 30.0 : 300.0;
      if (v.double_seconds >= bound) { ok = false; detail += v.id + " too slow; "; }
    }
    report(2, "doubles validate with all quasitriangular identities (dim <= 9, within time bounds)",
           ok, detail);
  }

  // 3. factorizability, zero exceptions
  {
    bool ok = true;
    std::string detail;
    for (const auto& v : table)
      if (!v.factorizable_ok) { ok = false; detail += v.id + "; "; }
    report(3, "every catalog double is factorizable", ok, detail);
  }

  // 4. unimodularity of the double via the integral solver
  {
    bool ok = true;
    std::string detail;
    for (const auto& v : table)
      if (!v.double_unimodular) { ok = false; detail += v.id + "; "; }
    report(4, "every catalog double is unimodular (alpha = eps, solved from scratch)", ok, detail);
  }

  // 5. fourth-power antipode formula on entries and doubles
  {
    bool ok = true;
    std::string detail;
    for (const auto& v : table)
      if (!v.s4_entry || !v.s4_double) { ok = false; detail += v.id + "; "; }
    report(5, "S^4 conjugation formula verified on every entry and every double", ok, detail);
  }

  // 6. main bijection, no theorem-violation exit on the catalog
  {
    bool ok = true;
    std::string detail;
    for (const auto& v : table) {
      if (v.classify_threw) { ok = false; detail += v.id + " threw: " + v.classify_error + "; "; }
      else if (!v.bijection || v.ribbon_count != v.kr_count) {
        ok = false;
        detail += v.id + " bijection failed; ";
      }
    }
    report(6, "square-root pairs biject onto directly certified ribbon elements, all entries", ok, detail);
  }

  // 7. known verdicts, frozen from the direct-certification route
  {
    bool ok = true;
    std::string detail;
    auto count_of = [&](const std::string& id) -> long {
      for (const auto& v : table)
        if (v.id == id) return v.ribbon_count;
      return -1;
    };
    if (count_of("group-C2-Q") != 4) { ok = false; detail += "group-C2-Q != 4; "; }
    if (count_of("sweedler-Q") != 0) { ok = false; detail += "sweedler-Q != 0; "; }
    if (count_of("sweedler-F5") != 0) { ok = false; detail += "sweedler-F5 != 0; "; }
    if (count_of("taft-3-7-2") < 1) { ok = false; detail += "taft-3-7-2 < 1; "; }
    RatField Q;
    for (const auto& [id, gt] : group_of) {
      int id_elt = gt.identity();
      long invol = 0;
      for (int i = 0; i < gt.size(); ++i) {
        if (gt.table[i][i] != id_elt) continue;
        bool central = true;
        for (int j = 0; j < gt.size() && central; ++j) central = gt.table[i][j] == gt.table[j][i];
        if (central) ++invol;
      }
      auto h = group_algebra(gt, Q);
      auto ch = characters(h);
      long sq_chars = 0;
      for (int b = 0; b < ch.size(); ++b)
        if (ch.table[b][b] == ch.identity) ++sq_chars;
      long expected = invol * sq_chars;
      if (count_of(id) != expected) {
        ok = false;
        detail += id + " != " + std::to_string(expected) + "; ";
      }
    }
    report(7, "frozen ribbon counts and the group-algebra count formula (nine group entries)", ok, detail);
  }

  // 8. sphericity implies modularity; groups spherical, the 4-dim algebra not
  {
    bool ok = true;
    std::string detail;
    for (const auto& v : table) {
      if (v.spherical && !v.modular) { ok = false; detail += v.id + " spherical but not modular; "; }
      if (group_of.count(v.id) && !v.spherical) { ok = false; detail += v.id + " should be spherical; "; }
    }
    for (const auto& v : table)
      if ((v.id == "sweedler-Q" || v.id == "sweedler-F5") && v.spherical) {
        ok = false;
        detail += v.id + " must not be spherical; ";
      }
    report(8, "sphericity implies modularity; group entries spherical, small 4-dim algebra not", ok, detail);
  }

  // 9. determinism: classification bytes match the goldens, twice
  {
    bool ok = true;
    std::string detail;
    for (const std::string id : {"trivial-Q", "group-C2-Q", "sweedler-Q", "taft-3-7-2"}) {
      std::string golden = read_file(golden_dir + "/classify-" + id + ".json");
      std::string run1, run2;
      auto any = build_catalog_entry(id);
      std::visit([&](auto& h) { run1 = classification_to_json(classify(h)).dump(2) + "\n"; }, any);
      auto any2 = build_catalog_entry(id);
      std::visit([&](auto& h) { run2 = classification_to_json(classify(h)).dump(2) + "\n"; }, any2);
      if (run1 != run2) { ok = false; detail += id + " unstable across runs; "; }
      if (run1 != golden) { ok = false; detail += id + " differs from golden; "; }
    }
    report(9, "classification reports are byte-stable and match the goldens", ok, detail);
  }

  std::cout << (g_failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(g_failures) + " criterion(s) failed")
            << "\n";
  return g_failures == 0 ? 0 : 1;
}
