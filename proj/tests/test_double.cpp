#include <doctest.h>

#include <hopf/catalog.hpp>
#include <future>

#include <hopf/double.hpp>
#include <hopf/ribbon.hpp>

using namespace hopf;

TEST_CASE("double of the trivial algebra") {
  auto k = trivial_hopf();
  auto qt = drinfeld_double(k);
  CHECK(qt.algebra.n == 1);
  CHECK(qt.provenance == "double-of(k)");
  REQUIRE(qt.r_matrix.size() == 1);
  CHECK(qt.r_matrix[0].c.is_one());
  CHECK(qt.u == qt.algebra.unit);
  CHECK(factorizable(qt));
  CHECK(verify_quasitriangular(qt).ok());
}

TEST_CASE("double of k[C2]") {
  RatField Q;
  auto h = group_algebra(cyclic_group(2), Q);
  auto qt = drinfeld_double(h);
  const auto& d = qt.algebra;
  REQUIRE(d.n == 4);

  SUBCASE("commutative, validated, quasitriangular") {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        CHECK(d.mul(d.basis_vector(i), d.basis_vector(j)) ==
              d.mul(d.basis_vector(j), d.basis_vector(i)));
    CHECK(validate_axioms(d).ok());
    CHECK(verify_quasitriangular(qt).ok());
  }
  SUBCASE("R is nontrivial, u = f_1 x e_1 + f_g x g, u^2 = 1") {
    CHECK(qt.r_matrix.size() > 1);
    Vec<RatField> expect_u(4, Q.zero());
    expect_u[0] = Q.one();  // (f_1 x 1)
    expect_u[3] = Q.one();  // (f_g x g)
    CHECK(qt.u == expect_u);
    CHECK(d.mul(qt.u, qt.u) == d.unit);
    // S^2 = id makes u central
    for (int i = 0; i < 4; ++i) {
      auto e = d.basis_vector(i);
      CHECK(d.mul(qt.u, e) == d.mul(e, qt.u));
    }
    CHECK(d.apply_antipode(qt.u) == qt.u);
  }
  SUBCASE("factorizable with Drinfeld map rank 4") {
    Matrix<RatField> m(Q, 4, 4);
    for (const auto& [s, t, c] : qt.monodromy) m.at(t, s) += c;
    CHECK(rank(m) == 4);
    CHECK(factorizable(qt));
  }
  SUBCASE("double is unimodular both ways here") {
    auto rd = radford_data(d);
    CHECK(rd.alpha == d.counit);
    CHECK(rd.s4_verified);
  }
}

TEST_CASE("double of the 4-dim small algebra") {
  RatField Q;
  auto h = sweedler(Q);
  auto qt = drinfeld_double(h);
  const auto& d = qt.algebra;
  REQUIRE(d.n == 16);

  SUBCASE("S_D^2 != id but conjugation by u") {
    auto s2 = d.antipode * d.antipode;
    CHECK(!(s2 == Matrix<RatField>::identity(Q, 16)));
    for (int i = 0; i < 16; ++i) {
      Vec<RatField> lhs = d.apply_row_matrix(s2, d.basis_vector(i));
      Vec<RatField> rhs = d.mul(d.mul(qt.u, d.basis_vector(i)), qt.u_inv);
      CHECK(lhs == rhs);
    }
  }
  SUBCASE("all quasitriangular identities") {
    auto rep = verify_quasitriangular(qt);
    for (const auto& c : rep.checks) {
      INFO(c.name);
      CHECK(c.ok);
    }
  }
  SUBCASE("factorizable with rank 16") { CHECK(factorizable(qt)); }
  SUBCASE("unimodular double") {
    auto rd = radford_data(d);
    CHECK(rd.alpha == d.counit);
    CHECK(rd.s4_verified);
  }
}

TEST_CASE("double of k[C3] and the 9-dim prime-field algebra") {
  RatField Q;
  {
    auto qt = drinfeld_double(group_algebra(cyclic_group(3), Q));
    CHECK(qt.algebra.n == 9);
    CHECK(verify_quasitriangular(qt).ok());
    CHECK(factorizable(qt));
  }
  {
    auto qt = drinfeld_double(taft(3, 7, 2));
    CHECK(qt.algebra.n == 81);
    CHECK(verify_quasitriangular(qt).ok());
    CHECK(factorizable(qt));
    auto rd = radford_data(qt.algebra);
    CHECK(rd.alpha == qt.algebra.counit);  // unimodular
    CHECK(rd.s4_verified);
  }
}

TEST_CASE("centers") {
  RatField Q;
  SUBCASE("trivial algebra: center = everything") {
    CHECK(central_elements(trivial_hopf()).size() == 1);
  }
  SUBCASE("commutative algebra: center = whole algebra") {
    auto h = group_algebra(cyclic_group(2), Q);
    CHECK(central_elements(h).size() == 2);
  }
  SUBCASE("4-dim small algebra: center contains the unit, re-verified") {
    auto h = sweedler(Q);
    auto z = central_elements(h);
    CHECK(z.size() >= 1);
    bool has_unit_dir = false;
    for (const auto& v : z)
      if (v == h.unit) has_unit_dir = true;
    CHECK(has_unit_dir);
  }
  SUBCASE("k[S3]: center = class sums, dimension 3") {
    auto h = group_algebra(symmetric_s3(), Q);
    CHECK(central_elements(h).size() == 3);
  }
}

TEST_CASE("group-algebra doubles match the smash-product table entrywise") {
  // independent oracle: for kG the double is functions(G) # kG with
  //   (d_a x g)(d_b x h) = [a = g b g^{-1}] d_a x gh
  //   Delta(d_c x g)     = sum_{ab=c} (d_b x g) (x) (d_a x g)
  //   eps(d_c x g)       = [c = e]
  //   S(d_c x g)         = d_{g^{-1} c^{-1} g} x g^{-1}
  RatField Q;
  for (auto gt : {cyclic_group(4), symmetric_s3()}) {
    INFO(gt.name);
    auto h = group_algebra(gt, Q);
    auto qt = drinfeld_double(h);
    const auto& d = qt.algebra;
    const int n = gt.size();
    int e = gt.identity();
    auto conj = [&](int g, int b) { return gt.table[gt.table[g][b]][gt.inverse(g)]; };
    for (int c1 = 0; c1 < n; ++c1)
      for (int k1 = 0; k1 < n; ++k1)
        for (int c2 = 0; c2 < n; ++c2)
          for (int k2 = 0; k2 < n; ++k2) {
            const auto& row = d.mult_row(c1 * n + k1, c2 * n + k2);
            if (c1 == conj(k1, c2)) {
              REQUIRE(row.size() == 1);
              CHECK(row[0].idx == c1 * n + gt.table[k1][k2]);
              CHECK(row[0].c.is_one());
            } else {
              CHECK(row.empty());
            }
          }
    for (int c = 0; c < n; ++c)
      for (int k = 0; k < n; ++k) {
        CHECK(d.counit[c * n + k] == (c == e ? Q.one() : Q.zero()));
        const auto& dl = d.comult[c * n + k];
        CHECK((int)dl.size() == n);
        for (const auto& [x, y, v] : dl) {
          CHECK(v.is_one());
          int b = x / n, a = y / n;
          CHECK(x % n == k);
          CHECK(y % n == k);
          CHECK(gt.table[a][b] == c);
        }
        // antipode row
        int ginv = gt.inverse(k);
        int target = gt.table[gt.table[ginv][gt.inverse(c)]][k];
        for (int t = 0; t < n * n; ++t) {
          auto expect = (t == target * n + ginv) ? Q.one() : Q.zero();
          CHECK(d.antipode.at(c * n + k, t) == expect);
        }
      }
  }
}

TEST_CASE("distinguished grouplike of the double is u S(u)^{-1}") {
  // the Radford conjugation data of a double, expressed through the
  // Drinfeld element; the inverse orientation is excluded by the 9- and
  // 16-dimensional prime-field entries below
  RatField Q;
  auto run = [](const auto& h) {
    auto qt = drinfeld_double(h);
    const auto& d = qt.algebra;
    auto rd = radford_data(d);
    Vec<std::decay_t<decltype(h.fld)>> su = d.apply_antipode(qt.u);
    auto [ok, su_inv] = d.try_inverse(su);
    REQUIRE(ok);
    CHECK(rd.a == d.mul(qt.u, su_inv));
    CHECK(rd.a == d.mul(su_inv, qt.u));
  };
  run(sweedler(Q));
  run(group_algebra(symmetric_s3(), Q));
  run(taft(3, 7, 2));
  {
    auto h = taft(3, 7, 2);
    auto qt = drinfeld_double(h);
    const auto& d = qt.algebra;
    auto rd = radford_data(d);
    Vec<ZpField> su = d.apply_antipode(qt.u);
    auto [ok, su_inv] = d.try_inverse(su);
    REQUIRE(ok);
    Vec<ZpField> g = d.mul(qt.u, su_inv);
    auto [ok2, gi] = d.try_inverse(g);
    REQUIRE(ok2);
    CHECK(!(rd.a == gi));  // orientation is sharp
  }
}

TEST_CASE("pure values are safe to share across threads once validated") {
  RatField Q;
  auto h = sweedler(Q);
  require_validated(h);
  auto worker = [&h]() {
    auto rep = classify(h);
    return (int)rep.ribbon_certificates.size();
  };
  auto f1 = std::async(std::launch::async, worker);
  auto f2 = std::async(std::launch::async, worker);
  CHECK(f1.get() == 0);
  CHECK(f2.get() == 0);
}

TEST_CASE("user-supplied quasitriangular data is rechecked") {
  RatField Q;
  auto h = group_algebra(cyclic_group(2), Q);
  auto qt = drinfeld_double(h);

  SUBCASE("dropping a term breaks the suite") {
    auto bad = qt;
    bad.r_matrix.pop_back();
    auto rep = verify_quasitriangular(bad);
    CHECK(!rep.ok());
    CHECK(!rep.first_failure().empty());
  }
  SUBCASE("scaling R keeps invertibility but breaks only the hexagons") {
    auto bad = qt;
    for (auto& t : bad.r_matrix) t.c *= Q.from_int(2);
    for (auto& t : bad.r_inv) t.c *= Rat(1, 2);
    bad.monodromy = t2::mul(bad.algebra, t2::flip(bad.r_matrix), bad.r_matrix);
    bad.monodromy_inv = t2::mul(bad.algebra, bad.r_inv, t2::flip(bad.r_inv));
    auto rep = verify_quasitriangular(bad);
    CHECK(!rep.ok());
    for (const auto& c : rep.checks) {
      INFO(c.name);
      if (c.name == "hexagon-delta-left" || c.name == "hexagon-delta-right")
        CHECK(!c.ok);
      else if (c.name == "r-invertible" || c.name == "braiding-naturality")
        CHECK(c.ok);
    }
  }
}
