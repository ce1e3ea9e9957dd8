#pragma once

// Integrals, distinguished grouplikes and the fourth-power antipode identity.
//
// Convention sheet (see docs/CONVENTIONS.md):
//   Lambda  left integral in H:        h Lambda = eps(h) Lambda
//   lambda  right integral in H^*:     lambda * f = f(1) lambda
//   alpha   modular character:         Lambda h = alpha(h) Lambda
//   a       distinguished grouplike:   f * lambda = f(a) lambda
// With these, S^4(h) = a (alpha -> h <- alpha^{-1}) a^{-1} holds on every
// valid input; the check below is the arbiter for the convention.

#include <string>
#include <vector>

#include "algebra.hpp"
#include "grouplike.hpp"

namespace hopf {

template <class F>
struct RadfordData {
  Vec<F> left_integral;        // Lambda, first nonzero coordinate = 1
  Vec<F> right_integral_dual;  // lambda in H^*, same normalization
  Vec<F> alpha;                // character values on the basis
  Vec<F> a;                    // grouplike coordinates
  bool s4_verified = false;
  std::vector<int> s4_witnesses;  // basis indices violating the identity
};

namespace detail {

template <class F>
void normalize_first_nonzero(F, Vec<F>& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) {
      auto inv = x.inverse();
      for (auto& y : v) y *= inv;
      return;
    }
  }
}

// kernel of a tall stack of sparse rows, echelon-incremental
template <class F>
std::vector<Vec<F>> kernel_of_sparse_rows(F fld, int n, const std::vector<TermVec<F>>& rows) {
  detail::SparseEchelon<F> ech(fld);
  for (const auto& r : rows)
    if (!r.empty()) ech.insert(r);
  Matrix<F> m(fld, ech.rank(), n);
  int i = 0;
  for (const auto& [lead, row] : ech.rows) {
    for (const auto& [j, c] : row) m.at(i, j) = c;
    ++i;
  }
  return kernel(m);
}

}  // namespace detail

// (Lambda, lambda), each spanning an exactly 1-dimensional solution space.
template <class F>
std::pair<Vec<F>, Vec<F>> compute_integrals(const HopfAlgebra<F>& h) {
  require_validated(h);
  F fld = h.fld;
  const int n = h.n;

  // left integral: for all i, k:  sum_j M[i][j][k] v_j - eps_i v_k = 0
  std::vector<TermVec<F>> rows;
  {
    for (int i = 0; i < n; ++i) {
      std::vector<TermVec<F>> byk(n);
      for (int j = 0; j < n; ++j)
        for (const auto& [k, c] : h.mult_row(i, j)) byk[k].push_back({j, c});
      for (int k = 0; k < n; ++k) {
        byk[k].push_back({k, -h.counit[i]});
        DenseAccum<F> acc(fld, n);
        for (const auto& [j, c] : byk[k]) acc.add(j, c);
        TermVec<F> row;
        for (const auto& [j, c] : acc.extract_sorted()) row.push_back({j, c});
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }
  auto lker = detail::kernel_of_sparse_rows(fld, n, rows);
  if (lker.size() != 1)
    throw structure_error(h.name + ": left integral space has dimension " +
                          std::to_string(lker.size()) + " != 1; not a Hopf algebra / invalid input");
  Vec<F> Lambda = lker[0];
  detail::normalize_first_nonzero(fld, Lambda);

  // right integral in H^*: for all i, k:  sum_j D[i][j][k] w_j - unit_k w_i = 0
  rows.clear();
  {
    for (int i = 0; i < n; ++i) {
      std::vector<TermVec<F>> byk(n);
      for (const auto& [j, k, c] : h.comult[i]) byk[k].push_back({j, c});
      for (int k = 0; k < n; ++k) {
        if (!h.unit[k].is_zero()) byk[k].push_back({i, -h.unit[k]});
        if (byk[k].empty()) continue;
        DenseAccum<F> acc(fld, n);
        for (const auto& [j, c] : byk[k]) acc.add(j, c);
        TermVec<F> row;
        for (const auto& [j, c] : acc.extract_sorted()) row.push_back({j, c});
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }
  auto rker = detail::kernel_of_sparse_rows(fld, n, rows);
  if (rker.size() != 1)
    throw structure_error(h.name + ": right dual integral space has dimension " +
                          std::to_string(rker.size()) + " != 1; not a Hopf algebra / invalid input");
  Vec<F> lambda = rker[0];
  detail::normalize_first_nonzero(fld, lambda);
  return {std::move(Lambda), std::move(lambda)};
}

// (a, alpha) extracted from the integrals and re-verified as grouplike /
// character; failure of the re-verification is a convention fault and fatal.
template <class F>
std::pair<Vec<F>, Vec<F>> distinguished_grouplikes(const HopfAlgebra<F>& h, const Vec<F>& Lambda,
                                                   const Vec<F>& lambda) {
  F fld = h.fld;
  const int n = h.n;

  // alpha: Lambda e_i = alpha_i Lambda, coordinatewise solve + verify
  int t = -1;
  for (int i = 0; i < n; ++i)
    if (!Lambda[i].is_zero()) { t = i; break; }
  if (t < 0) throw structure_error(h.name + ": zero integral");
  Vec<F> alpha(n, fld.zero());
  for (int i = 0; i < n; ++i) {
    Vec<F> li = h.mul(Lambda, h.basis_vector(i));
    alpha[i] = li[t] * Lambda[t].inverse();
    if (!(li == vec_scale<F>(Lambda, alpha[i])))
      throw theorem_violation(h.name + ": Lambda h not proportional to Lambda (convention fault)");
  }
  // verify alpha is an algebra character of h
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto lhs = fld.zero();
      for (const auto& [k, c] : h.mult_row(i, j)) lhs += c * alpha[k];
      if (!(lhs == alpha[i] * alpha[j]))
        throw theorem_violation(h.name + ": extracted alpha is not multiplicative (convention fault)");
    }
  {
    auto on_unit = fld.zero();
    for (int i = 0; i < n; ++i) on_unit += h.unit[i] * alpha[i];
    if (!on_unit.is_one())
      throw theorem_violation(h.name + ": extracted alpha not unital (convention fault)");
  }

  // a: sum x_(1) lambda(x_(2)) = a lambda(x) for all x
  int s = -1;
  for (int i = 0; i < n; ++i)
    if (!lambda[i].is_zero()) { s = i; break; }
  if (s < 0) throw structure_error(h.name + ": zero dual integral");
  Vec<F> a(n, fld.zero());
  {
    DenseAccum<F> acc(fld, n);
    for (const auto& [j, k, c] : h.comult[s]) acc.add(j, c * lambda[k]);
    auto inv = lambda[s].inverse();
    for (const auto& [j, c] : acc.extract_sorted()) a[j] = c * inv;
  }
  for (int i = 0; i < n; ++i) {
    Vec<F> lhs(n, fld.zero());
    for (const auto& [j, k, c] : h.comult[i])
      if (!lambda[k].is_zero()) lhs[j] += c * lambda[k];
    if (!(lhs == vec_scale<F>(a, lambda[i])))
      throw theorem_violation(h.name + ": dual integral does not locate a grouplike (convention fault)");
  }
  // verify a is grouplike: Delta a = a (x) a, eps(a) = 1
  {
    DenseAccum<F> acc(fld, (size_t)n * n);
    for (int i = 0; i < n; ++i) {
      if (a[i].is_zero()) continue;
      for (const auto& [j, k, c] : h.comult[i]) acc.add((size_t)j * n + k, a[i] * c);
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (!a[x].is_zero() && !a[y].is_zero()) acc.sub((size_t)x * n + y, a[x] * a[y]);
    if (!acc.all_zero() || !h.counit_of(a).is_one())
      throw theorem_violation(h.name + ": extracted a is not grouplike (convention fault)");
  }
  return {std::move(a), std::move(alpha)};
}

// S^4(h) = a (alpha -> h <- alpha^{-1}) a^{-1} on every basis element;
// failures are reported as witnesses, never thrown.
template <class F>
std::pair<bool, std::vector<int>> radford_s4_check(const HopfAlgebra<F>& h, const Vec<F>& a,
                                                   const Vec<F>& alpha) {
  const int n = h.n;
  Matrix<F> s2 = h.antipode * h.antipode;
  Matrix<F> s4 = s2 * s2;
  Vec<F> alpha_inv = character_inverse(h, alpha);
  auto [ok, a_inv] = h.try_inverse(a);
  if (!ok) return {false, {-1}};
  std::vector<int> witnesses;
  for (int i = 0; i < n; ++i) {
    Vec<F> lhs = h.apply_row_matrix(s4, h.basis_vector(i));
    Vec<F> mid = hit_right(h, hit_left(h, alpha, h.basis_vector(i)), alpha_inv);
    Vec<F> rhs = h.mul(h.mul(a, mid), a_inv);
    if (!(lhs == rhs)) witnesses.push_back(i);
  }
  return {witnesses.empty(), witnesses};
}

template <class F>
RadfordData<F> radford_data(const HopfAlgebra<F>& h) {
  RadfordData<F> rd;
  auto [Lambda, lambda] = compute_integrals(h);
  rd.left_integral = std::move(Lambda);
  rd.right_integral_dual = std::move(lambda);
  auto [a, alpha] = distinguished_grouplikes(h, rd.left_integral, rd.right_integral_dual);
  rd.a = std::move(a);
  rd.alpha = std::move(alpha);
  auto [ok, wit] = radford_s4_check(h, rd.a, rd.alpha);
  rd.s4_verified = ok;
  rd.s4_witnesses = std::move(wit);
  return rd;
}

// alpha = eps
template <class F>
bool unimodular(const HopfAlgebra<F>& h, const RadfordData<F>& rd) {
  (void)h;
  return rd.alpha == h.counit;
}

// a = 1
template <class F>
bool dual_unimodular(const HopfAlgebra<F>& h, const RadfordData<F>& rd) {
  return rd.a == h.unit;
}

}  // namespace hopf
