#pragma once

// Characteristic polynomials and in-field root extraction, dimensioned for
// the eigenvalue work behind grouplike/character enumeration.
//
// charpoly: Hessenberg reduction by similarity (field divisions only), then
// the leading-minor recurrence. Root search is deliberately minimal:
//   over Q    rational-root candidates from divisors of the cleared
//             constant/leading coefficients (square-free part first)
//   over Z/p  exhaustive evaluation, p <= 1000 by policy
// Anything beyond linear factors is reported, never silently dropped.

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "matrix.hpp"

namespace hopf {

// dense polynomial, coefficient of x^i at index i; normalized: no trailing zeros
template <class F>
using Poly = std::vector<typename F::Elem>;

template <class F>
void poly_trim(F, Poly<F>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

template <class F>
int poly_deg(const Poly<F>& p) {
  return (int)p.size() - 1;  // -1 for zero polynomial
}

template <class F>
Poly<F> poly_mul(F fld, const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<F> r(a.size() + b.size() - 1, fld.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

template <class F>
Poly<F> poly_sub(F fld, Poly<F> a, const Poly<F>& b) {
  if (a.size() < b.size()) a.resize(b.size(), fld.zero());
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  poly_trim(fld, a);
  return a;
}

template <class F>
typename F::Elem poly_eval(F fld, const Poly<F>& p, const typename F::Elem& x) {
  auto acc = fld.zero();
  for (int i = (int)p.size() - 1; i >= 0; --i) acc = acc * x + p[i];
  return acc;
}

// quotient of division by (x - r); remainder must vanish if r is a root
template <class F>
Poly<F> poly_deflate(F fld, const Poly<F>& p, const typename F::Elem& r) {
  Poly<F> q(p.size() - 1, fld.zero());
  auto carry = fld.zero();
  for (int i = (int)p.size() - 1; i >= 1; --i) {
    carry = p[i] + carry * r;
    q[i - 1] = carry;
  }
  return q;
}

template <class F>
Poly<F> poly_derivative(F fld, const Poly<F>& p) {
  Poly<F> d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * fld.from_int((long)i));
  poly_trim(fld, d);
  return d;
}

// monic gcd via Euclid
template <class F>
Poly<F> poly_gcd(F fld, Poly<F> a, Poly<F> b) {
  poly_trim(fld, a);
  poly_trim(fld, b);
  while (!b.empty()) {
    // a mod b
    auto lead_inv = b.back().inverse();
    while ((int)a.size() >= (int)b.size() && !a.empty()) {
      auto f = a.back() * lead_inv;
      size_t off = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
      poly_trim(fld, a);
      if (a.size() < b.size()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    auto inv = a.back().inverse();
    for (auto& c : a) c *= inv;
  }
  return a;
}

// Characteristic polynomial det(xI - M), monic of degree n.
template <class F>
Poly<F> charpoly(const Matrix<F>& m0) {
  if (m0.rows != m0.cols) throw field_error("charpoly of non-square matrix");
  const int n = m0.rows;
  F fld = m0.fld;
  Matrix<F> h = m0;
  // Hessenberg reduction by similarity transforms
  for (int c = 0; c + 2 < n; ++c) {
    int pr = -1;
    for (int i = c + 1; i < n; ++i)
      if (!h.at(i, c).is_zero()) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != c + 1) {
      for (int j = 0; j < n; ++j) std::swap(h.at(pr, j), h.at(c + 1, j));
      for (int i = 0; i < n; ++i) std::swap(h.at(i, pr), h.at(i, c + 1));
    }
    auto inv = h.at(c + 1, c).inverse();
    for (int i = c + 2; i < n; ++i) {
      auto f = h.at(i, c) * inv;
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j) h.at(i, j) -= f * h.at(c + 1, j);   // row op
      for (int j = 0; j < n; ++j) h.at(j, c + 1) += f * h.at(j, i);   // inverse col op
    }
  }
  // p_k = charpoly of leading k x k block of the Hessenberg form
  std::vector<Poly<F>> p(n + 1);
  p[0] = {fld.one()};
  for (int k = 1; k <= n; ++k) {
    // (x - h[k-1][k-1]) * p_{k-1}
    Poly<F> t(p[k - 1].size() + 1, fld.zero());
    for (size_t i = 0; i < p[k - 1].size(); ++i) {
      t[i + 1] += p[k - 1][i];
      t[i] -= h.at(k - 1, k - 1) * p[k - 1][i];
    }
    // minus the subdiagonal-product corrections
    auto prod = fld.one();
    for (int i = k - 1; i >= 1; --i) {
      prod *= h.at(i, i - 1);
      if (prod.is_zero()) break;
      auto coeff = h.at(i - 1, k - 1) * prod;
      if (coeff.is_zero()) continue;
      for (size_t j = 0; j < p[i - 1].size(); ++j) t[j] -= coeff * p[i - 1][j];
    }
    p[k] = std::move(t);
  }
  return p[n];
}

struct RootReport {
  bool fully_split = true;  // false: a factor of degree >= 2 remained in-field-unresolved
};

namespace detail {

inline std::vector<mpz_class> divisors_of(const mpz_class& n0, bool& complete) {
  // all positive divisors by trial division; desk-scale constants only
  mpz_class n = abs(n0);
  std::vector<mpz_class> divs;
  if (n == 0) { complete = false; return divs; }
  mpz_class d = 1;
  for (; d * d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      if (d * d != n) divs.push_back(n / d);
    }
    if (d > 2000000) { complete = false; break; }  // huge constant: search truncated
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace detail

// All roots lying in the base field, with multiplicities summing to the
// number of linear factors found. report.fully_split is false when the
// polynomial kept a factor of degree >= 2 (or the divisor search overflowed).
template <class F>
std::vector<std::pair<typename F::Elem, int>> field_roots(F fld, const Poly<F>& p0, RootReport& report) {
  using K = typename F::Elem;
  std::vector<std::pair<K, int>> roots;
  Poly<F> p = p0;
  poly_trim(fld, p);
  if (poly_deg<F>(p) <= 0) return roots;

  std::vector<K> candidates;
  if constexpr (F::is_rational) {
    // strip x^k
    int zmult = 0;
    while (!p.empty() && p.front().is_zero()) {
      p.erase(p.begin());
      ++zmult;
    }
    if (zmult > 0) roots.push_back({fld.zero(), zmult});
    if (poly_deg<F>(p) <= 0) return roots;
    // square-free part bounds the candidate search
    Poly<F> sf = p;
    {
      auto g = poly_gcd(fld, p, poly_derivative(fld, p));
      if (poly_deg<F>(g) > 0) {
        // sf = p / g (exact)
        Poly<F> q(p.size() - g.size() + 1, fld.zero());
        Poly<F> rem = p;
        auto lead_inv = g.back().inverse();
        for (int i = (int)q.size() - 1; i >= 0; --i) {
          auto f = rem[i + g.size() - 1] * lead_inv;
          q[i] = f;
          for (size_t j = 0; j < g.size(); ++j) rem[i + j] -= f * g[j];
        }
        sf = q;
      }
    }
    // integer-clear the square-free part
    mpz_class lcm = 1;
    for (const auto& c : sf) {
      mpz_class d = c.denominator(), g;
      mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
      lcm = lcm / g * d;
    }
    std::vector<mpz_class> ic(sf.size());
    mpz_class content = 0;
    for (size_t i = 0; i < sf.size(); ++i) {
      ic[i] = sf[i].numerator() * (lcm / sf[i].denominator());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ic[i].get_mpz_t());
    }
    if (content > 1)
      for (auto& c : ic) c /= content;
    mpz_class a0 = ic.front(), an = ic.back();
    if (a0 == 0) a0 = 1;  // x factors already stripped; defensive
    bool complete = true;
    auto ds = detail::divisors_of(a0, complete);
    auto ls = detail::divisors_of(an, complete);
    if (!complete) report.fully_split = false;
    for (const auto& c : ds)
      for (const auto& l : ls) {
        candidates.push_back(Rat(mpq_class(c, l)));
        candidates.push_back(Rat(mpq_class(-c, l)));
      }
  } else {
    uint32_t pp = fld.characteristic();
    if (pp > 1000) throw field_error("root search over F_p limited to p <= 1000");
    for (uint32_t v = 0; v < pp; ++v) candidates.push_back(fld.from_int((long)v));
  }

  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  for (const K& cand : candidates) {
    if (poly_deg<F>(p) <= 0) break;
    int mult = 0;
    while (poly_deg<F>(p) >= 1 && poly_eval(fld, p, cand).is_zero()) {
      p = poly_deflate(fld, p, cand);
      ++mult;
    }
    if (mult > 0) roots.push_back({cand, mult});
  }
  if (poly_deg<F>(p) > 0) report.fully_split = false;
  std::sort(roots.begin(), roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return roots;
}

// ---------------------------------------------------------------------------
// Simultaneous eigensystems of commuting matrices by recursive eigenspace
// splitting. Returns one system per eigenvalue tuple realized over the base
// field; branches whose eigenvalues lie outside the field are counted in
// `warnings`, never silently dropped.

template <class F>
struct EigenSystem {
  std::vector<typename F::Elem> eigenvalues;  // one per generator
  std::vector<Vec<F>> basis;                  // common eigenspace basis
};

template <class F>
struct LinearCharacters {
  std::vector<EigenSystem<F>> systems;
  int warnings = 0;
};

namespace detail {

// restriction of op to the invariant subspace spanned by the columns of v
template <class F>
Matrix<F> restrict_to(const Matrix<F>& op, const Matrix<F>& v) {
  Matrix<F> av = op * v;
  // solve v * b = av columnwise
  Matrix<F> aug(v.fld, v.rows, v.cols + av.cols);
  for (int i = 0; i < v.rows; ++i) {
    for (int j = 0; j < v.cols; ++j) aug.at(i, j) = v.at(i, j);
    for (int j = 0; j < av.cols; ++j) aug.at(i, v.cols + j) = av.at(i, j);
  }
  auto e = rref(aug);
  Matrix<F> b(v.fld, v.cols, av.cols);
  for (int pi = 0; pi < e.rank; ++pi) {
    int pc = e.pivots[pi];
    if (pc >= v.cols) throw field_error("restriction to non-invariant subspace");
    for (int j = 0; j < av.cols; ++j) b.at(pc, j) = e.r.at(pi, v.cols + j);
  }
  return b;
}

template <class F>
void eigen_split(const std::vector<Matrix<F>>& gens, size_t t, const Matrix<F>& v,
                 std::vector<typename F::Elem>& evs, LinearCharacters<F>& out) {
  F fld = v.fld;
  if (t == gens.size()) {
    EigenSystem<F> sys;
    sys.eigenvalues = evs;
    for (int j = 0; j < v.cols; ++j) {
      Vec<F> col(v.rows, fld.zero());
      for (int i = 0; i < v.rows; ++i) col[i] = v.at(i, j);
      sys.basis.push_back(std::move(col));
    }
    out.systems.push_back(std::move(sys));
    return;
  }
  Matrix<F> b = restrict_to(gens[t], v);
  RootReport rep;
  auto roots = field_roots(fld, charpoly(b), rep);
  if (!rep.fully_split) out.warnings += 1;
  for (const auto& [lambda, mult] : roots) {
    Matrix<F> shifted = b;
    for (int i = 0; i < b.rows; ++i) shifted.at(i, i) -= lambda;
    auto ker = kernel(shifted);
    if (ker.empty()) continue;
    // lift back to ambient coordinates
    Matrix<F> w = columns(fld, ker, b.rows);
    Matrix<F> lifted = v * w;
    evs.push_back(lambda);
    eigen_split(gens, t + 1, lifted, evs, out);
    evs.pop_back();
  }
}

}  // namespace detail

// Simultaneous eigensystems of pairwise-commuting generators over their base
// field. Non-commuting input is a usage error.
template <class F>
LinearCharacters<F> linear_characters(F fld, const std::vector<Matrix<F>>& gens, int dim) {
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].rows != dim || gens[i].cols != dim)
      throw field_error("linear_characters: generator shape mismatch");
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i]))
        throw field_error("linear_characters: generators do not commute");
  }
  LinearCharacters<F> out;
  Matrix<F> full = Matrix<F>::identity(fld, dim);
  std::vector<typename F::Elem> evs;
  detail::eigen_split(gens, 0, full, evs, out);
  return out;
}

}  // namespace hopf
