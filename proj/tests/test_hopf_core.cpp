#include <doctest.h>

#include <hopf/algebra.hpp>
#include <hopf/catalog.hpp>
#include <hopf/grouplike.hpp>

using namespace hopf;

namespace {

// Direct quadratic residual Delta(x) - x (x) x, an implementation-independent
// oracle for grouplike verification (the production path goes through dual
// characters and eigensplitting).
template <class F>
bool grouplike_residual_zero(const HopfAlgebra<F>& h, const Vec<F>& x) {
  DenseAccum<F> acc(h.fld, (size_t)h.n * h.n);
  for (int i = 0; i < h.n; ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& [j, k, c] : h.comult[i]) acc.add((size_t)j * h.n + k, x[i] * c);
  }
  for (int a = 0; a < h.n; ++a)
    for (int b = 0; b < h.n; ++b)
      if (!x[a].is_zero() && !x[b].is_zero()) acc.sub((size_t)a * h.n + b, x[a] * x[b]);
  return acc.all_zero() && h.counit_of(x).is_one();
}

// Hopf isomorphism verification: phi given by a row-layout matrix
// (row i = coordinates of phi(e_i) in B).
template <class F>
bool is_hopf_iso(const HopfAlgebra<F>& a, const HopfAlgebra<F>& b, const Matrix<F>& phi) {
  if (a.n != b.n) return false;
  const int n = a.n;
  auto ap = [&](const Vec<F>& x) { return a.apply_row_matrix(phi, x); };
  if (!inverse(phi).first) return false;
  if (!(ap(a.unit) == b.unit)) return false;
  for (int i = 0; i < n; ++i) {
    Vec<F> pi = ap(a.basis_vector(i));
    // counit
    if (!(b.counit_of(pi) == a.counit[i])) return false;
    // antipode
    if (!(ap(a.apply_antipode(a.basis_vector(i))) == b.apply_antipode(pi))) return false;
    // comultiplication
    DenseAccum<F> acc(a.fld, (size_t)n * n);
    for (const auto& [j, k, c] : a.comult[i]) {
      Vec<F> pj = ap(a.basis_vector(j)), pk = ap(a.basis_vector(k));
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
          if (!pj[s].is_zero() && !pk[t].is_zero()) acc.add((size_t)s * n + t, c * pj[s] * pk[t]);
    }
    for (int s = 0; s < n; ++s) {
      if (pi[s].is_zero()) continue;
      for (const auto& [j, k, c] : b.comult[s]) acc.sub((size_t)j * n + k, pi[s] * c);
    }
    if (!acc.all_zero()) return false;
    // multiplication
    for (int j = 0; j < n; ++j) {
      Vec<F> prod_a(n, a.fld.zero());
      for (const auto& [k, c] : a.mult_row(i, j)) prod_a[k] += c;
      Vec<F> lhs = ap(prod_a);
      Vec<F> rhs = b.mul(pi, ap(a.basis_vector(j)));
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("axiom validation on the catalog") {
  for (const auto& meta : catalog()) {
    auto any = build_catalog_entry(meta.id);
    std::visit(
        [&](auto& h) {
          auto rep = validate_axioms(h);
          INFO(meta.id);
          CHECK(rep.ok());
          CHECK(rep.antipode_invertible);
          // dual validates iff the algebra does
          auto drep = validate_axioms(dual(h));
          CHECK(drep.ok());
        },
        any);
  }
}

TEST_CASE("axiom failures carry witnesses") {
  RatField Q;
  auto h = group_algebra(cyclic_group(2), Q);

  SUBCASE("zero antipode breaks the antipode axiom") {
    auto broken = h;
    broken.validated = false;
    broken.antipode = Matrix<RatField>(Q, 2, 2);
    auto rep = validate_axioms(broken);
    CHECK(!rep.ok());
    bool saw_antipode = false;
    for (const auto& f : rep.failures) {
      if (f.axiom.rfind("antipode", 0) == 0) {
        saw_antipode = true;
        CHECK(!f.witness.empty());
      }
    }
    CHECK(saw_antipode);
    CHECK(!rep.antipode_invertible);
  }

  SUBCASE("structure constant mutation is detected") {
    auto broken = h;
    broken.validated = false;
    // g*g = 1 becomes g*g = 2*1
    broken.mult_row(1, 1)[0].c = Q.from_int(2);
    auto rep = validate_axioms(broken);
    CHECK(!rep.ok());
  }

  SUBCASE("shape errors precede axiom checks") {
    auto broken = h;
    broken.validated = false;
    broken.counit.pop_back();
    CHECK_THROWS_AS(validate_axioms(broken), structure_error);
  }
}

TEST_CASE("trivial algebra and duality involution") {
  auto k = trivial_hopf();
  CHECK(validate_axioms(k).ok());
  CHECK(same_structure(dual(k), k));

  for (const auto& id : {"group-C2-Q", "group-S3-Q", "sweedler-Q", "group-Q8-Q"}) {
    auto any = build_catalog_entry(id);
    std::visit(
        [&](auto& h) {
          auto dd = dual(dual(h));
          INFO(id);
          CHECK(same_structure(dd, h));
        },
        any);
  }
}

TEST_CASE("self-duality of k[C2] via grouplike correspondence") {
  RatField Q;
  auto h = group_algebra(cyclic_group(2), Q);
  auto d = dual(h);
  require_validated(d);
  auto gd = grouplikes(d);
  REQUIRE(gd.size() == 2);
  // map 1 -> unit of dual, g -> the nontrivial character; linear extension
  Matrix<RatField> phi(Q, 2, 2);
  int other = gd.identity == 0 ? 1 : 0;
  for (int j = 0; j < 2; ++j) {
    phi.at(0, j) = d.unit[j];
    phi.at(1, j) = gd.elements[other][j];
  }
  CHECK(is_hopf_iso(h, d, phi));
}

TEST_CASE("self-duality of the 4-dim small algebra") {
  RatField Q;
  auto h = sweedler(Q);
  auto d = dual(h);
  require_validated(d);
  auto gd = grouplikes(d);
  REQUIRE(gd.size() == 2);
  int gamma_idx = gd.identity == 0 ? 1 : 0;
  const Vec<RatField>& gamma = gd.elements[gamma_idx];

  // skew-primitive space {y : Delta y = y (x) 1 + gamma (x) y} inside the dual
  const int n = 4;
  Matrix<RatField> constraint(Q, n * n + n, n);
  for (int col = 0; col < n; ++col) {
    // Delta(e_col) contribution
    for (const auto& [j, k, c] : d.comult[col]) constraint.at(j * n + k, col) += c;
    // -(e_col (x) 1)
    for (int t = 0; t < n; ++t)
      if (!d.unit[t].is_zero()) constraint.at(col * n + t, col) -= d.unit[t];
    // -(gamma (x) e_col)
    for (int s = 0; s < n; ++s)
      if (!gamma[s].is_zero()) constraint.at(s * n + col, col) -= gamma[s];
    // and anticommutation with gamma: y gamma + gamma y = 0 appended below
    Vec<RatField> e(n, Q.zero());
    e[col] = Q.one();
    Vec<RatField> anti = vec_add<RatField>(d.mul(e, gamma), d.mul(gamma, e));
    for (int t = 0; t < n; ++t) constraint.at(n * n + t, col) = anti[t];
  }
  auto line = kernel(constraint);
  REQUIRE(line.size() == 1);
  const Vec<RatField>& y0 = line[0];

  // phi: 1 -> 1, g -> gamma, x -> y0, gx -> gamma*y0
  Matrix<RatField> phi(Q, n, n);
  Vec<RatField> images[4] = {d.unit, gamma, y0, d.mul(gamma, y0)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) phi.at(i, j) = images[i][j];
  CHECK(is_hopf_iso(h, d, phi));
}

TEST_CASE("opposite and co-opposite") {
  RatField Q;
  auto k = trivial_hopf();
  CHECK(same_structure(opposite(k), k));

  auto c4 = group_algebra(cyclic_group(4), Q);
  CHECK(same_structure(opposite(c4), c4));  // abelian

  auto h4 = sweedler(Q);
  auto cop = coopposite(h4);
  CHECK(validate_axioms(cop).ok());
  CHECK(validate_axioms(opposite(h4)).ok());
  // S has order 4: the cop antipode S^{-1} equals S^3
  auto s = h4.antipode;
  auto s2 = s * s;
  CHECK(!(s2 == Matrix<RatField>::identity(Q, 4)));
  CHECK(s2 * s2 == Matrix<RatField>::identity(Q, 4));
  CHECK(cop.antipode == s2 * s);
}

TEST_CASE("grouplike enumeration") {
  RatField Q;
  SUBCASE("trivial") {
    auto g = grouplikes(trivial_hopf());
    CHECK(g.size() == 1);
    CHECK(g.warnings == 0);
  }
  SUBCASE("k[C2]: {1, g} forming C2") {
    auto h = group_algebra(cyclic_group(2), Q);
    auto g = grouplikes(h);
    REQUIRE(g.size() == 2);
    CHECK(g.order_of(g.identity == 0 ? 1 : 0) == 2);
    for (const auto& x : g.elements) CHECK(grouplike_residual_zero(h, x));
  }
  SUBCASE("4-dim small algebra: exactly {1, g}") {
    auto h = sweedler(Q);
    auto g = grouplikes(h);
    REQUIRE(g.size() == 2);
    Vec<RatField> one = h.basis_vector(0), gg = h.basis_vector(1);
    CHECK(g.find(one) >= 0);
    CHECK(g.find(gg) >= 0);
    for (const auto& x : g.elements) CHECK(grouplike_residual_zero(h, x));
  }
  SUBCASE("group algebra recovers the whole group, any order") {
    for (auto gt : {symmetric_s3(), dihedral_d4(), quaternion_q8()}) {
      auto h = group_algebra(gt, Q);
      auto g = grouplikes(h);
      INFO(gt.name);
      CHECK(g.size() == gt.size());
      CHECK(g.warnings == 0);
      // linear independence via rank
      CHECK(rank(columns(Q, g.elements, h.n)) == g.size());
      // S(x) is the group inverse, eps(x) = 1
      for (int i = 0; i < g.size(); ++i) {
        CHECK(h.counit_of(g.elements[i]).is_one());
        CHECK(h.apply_antipode(g.elements[i]) == g.elements[g.inverse_idx[i]]);
      }
    }
  }
  SUBCASE("dual of k[C3] over Q: only the trivial character, with warnings") {
    auto d = dual(group_algebra(cyclic_group(3), Q));
    require_validated(d);
    auto g = grouplikes(d);
    CHECK(g.size() == 1);
    CHECK(g.warnings > 0);  // the two complex character branches were skipped
  }
  SUBCASE("taft grouplikes form C_n") {
    auto t = taft(3, 7, 2);
    auto g = grouplikes(t);
    REQUIRE(g.size() == 3);
    int nonid = g.identity == 0 ? 1 : 0;
    CHECK(g.order_of(nonid) == 3);
  }
}

TEST_CASE("characters") {
  RatField Q;
  SUBCASE("characters of k are {eps}") {
    auto c = characters(trivial_hopf());
    CHECK(c.size() == 1);
  }
  SUBCASE("characters of k[C2] are {eps, sign}") {
    auto h = group_algebra(cyclic_group(2), Q);
    auto c = characters(h);
    REQUIRE(c.size() == 2);
    bool saw_sign = false;
    for (const auto& chi : c.elements)
      if (chi[1] == -Q.one()) saw_sign = true;
    CHECK(saw_sign);
  }
  SUBCASE("characters of the 4-dim small algebra: alpha(g) = -1, alpha(x) = 0") {
    auto h = sweedler(Q);
    auto c = characters(h);
    REQUIRE(c.size() == 2);
    // basis order (1, g, x, gx)
    bool saw_alpha = false;
    for (const auto& chi : c.elements) {
      CHECK(chi[0].is_one());
      CHECK(chi[2].is_zero());
      CHECK(chi[3].is_zero());
      if (chi[1] == -Q.one()) saw_alpha = true;
    }
    CHECK(saw_alpha);
  }
  SUBCASE("characters of k[S3] = {eps, sign}") {
    auto h = group_algebra(symmetric_s3(), Q);
    auto c = characters(h);
    CHECK(c.size() == 2);
  }
  SUBCASE("characters agree with grouplikes of the dual") {
    for (const auto& id : {"group-C4-Q", "sweedler-Q"}) {
      auto any = build_catalog_entry(id);
      std::visit(
          [&](auto& h) {
            auto c = characters(h);
            auto gd = grouplikes(dual(h));
            REQUIRE(c.size() == gd.size());
            for (int i = 0; i < c.size(); ++i) CHECK(c.elements[i] == gd.elements[i]);
          },
          any);
    }
  }
}

TEST_CASE("hit actions") {
  RatField Q;
  auto h = sweedler(Q);
  auto chars = characters(h);
  Vec<RatField> eps = h.counit;
  Vec<RatField> alpha;
  for (const auto& chi : chars.elements)
    if (chi[1] == -Q.one()) alpha = chi;
  REQUIRE(!alpha.empty());

  SUBCASE("eps acts as identity on both sides") {
    for (int i = 0; i < h.n; ++i) {
      auto e = h.basis_vector(i);
      CHECK(hit_left(h, eps, e) == e);
      CHECK(hit_right(h, e, eps) == e);
    }
  }
  SUBCASE("alpha -> g = -g and alpha -> x = x") {
    auto g = h.basis_vector(1), x = h.basis_vector(2);
    CHECK(hit_left(h, alpha, g) == vec_scale<RatField>(g, -Q.one()));
    CHECK(hit_left(h, alpha, x) == x);
  }
  SUBCASE("module axioms over all character pairs") {
    for (const auto& f : chars.elements)
      for (const auto& g : chars.elements) {
        auto fg = convolve(h, f, g);
        for (int i = 0; i < h.n; ++i) {
          auto e = h.basis_vector(i);
          CHECK(hit_left(h, fg, e) == hit_left(h, f, hit_left(h, g, e)));
          CHECK(hit_right(h, e, fg) == hit_right(h, hit_right(h, e, f), g));
        }
      }
  }
  SUBCASE("character inverse via the antipode is a convolution inverse") {
    auto ai = character_inverse(h, alpha);
    CHECK(convolve(h, alpha, ai) == eps);
    CHECK(convolve(h, ai, alpha) == eps);
  }
}

TEST_CASE("catalog integrity") {
  auto metas = catalog();
  CHECK(metas.size() >= 14);
  for (const auto& m : metas) {
    auto any = build_catalog_entry(m.id);
    std::visit(
        [&](auto& h) {
          INFO(m.id);
          CHECK(h.n == m.dim);
          CHECK(h.fld.spec() == m.field);
        },
        any);
  }
  CHECK_THROWS_AS(build_catalog_entry("no-such-entry"), structure_error);
}

TEST_CASE("taft comultiplication carries the q-binomial coefficients") {
  // Delta(x^2) = x^2 (x) 1 + (1+q) gx (x) x + g^2 (x) x^2 with q = 2 mod 7
  ZpField F7(7);
  auto h = taft(3, 7, 2);
  // basis 1,g,g^2,x,gx,g^2x,x^2,gx^2,g^2x^2 -> x^2 at 6, gx at 4, x at 3
  Matrix<ZpField> dense(F7, 9, 9);
  for (const auto& [a, b, c] : h.comult[6]) dense.at(a, b) += c;
  CHECK(dense.at(6, 0) == F7.one());
  CHECK(dense.at(4, 3) == F7.from_int(3));  // 1 + q
  CHECK(dense.at(2, 6) == F7.one());
  // no other terms
  int nnz = 0;
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b)
      if (!dense.at(a, b).is_zero()) ++nnz;
  CHECK(nnz == 3);
}

TEST_CASE("constructor preconditions") {
  CHECK_THROWS_AS(sweedler(ZpField(2)), structure_error);
  CHECK_THROWS_AS(taft(3, 5, 2), structure_error);   // 3 does not divide 4
  CHECK_THROWS_AS(taft(4, 5, 4), structure_error);   // 4 has order 2 mod 5
  CHECK_THROWS_AS(taft(1, 5, 1), structure_error);
  // taft(2,5,4) coincides with sweedler over F5 entrywise
  auto t = taft(2, 5, 4);
  auto s = sweedler(ZpField(5));
  CHECK(same_structure(t, s));
  // a non-group table is rejected
  GroupTable bad;
  bad.name = "bad";
  bad.element_names = {"a", "b"};
  bad.table = {{0, 1}, {1, 1}};
  CHECK_THROWS_AS(group_algebra(bad, RatField{}), structure_error);
}
