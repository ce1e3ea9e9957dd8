#pragma once

// Grouplike and character enumeration.
//
// Grouplikes of A are the algebra characters of A^*. The computation forms
// the dual multiplication, quotients by the two-sided ideal generated by
// commutators, and splits the annihilator subspace of A into common
// eigenspaces of the (provably commuting) transposed left-multiplication
// operators. Every candidate read off an eigenvalue tuple is re-verified by
// direct substitution into Delta and eps before it is accepted; branches
// with eigenvalues outside the base field are counted as warnings.

#include <algorithm>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "poly.hpp"

namespace hopf {

template <class F>
bool vec_less(const Vec<F>& a, const Vec<F>& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

template <class F>
struct GrouplikeSet {
  std::vector<Vec<F>> elements;          // coordinates, sorted, deterministic
  std::vector<std::vector<int>> table;   // table[i][j] = index of elements[i]*elements[j]
  std::vector<int> inverse_idx;
  int identity = -1;
  int warnings = 0;

  int size() const { return (int)elements.size(); }
  int find(const Vec<F>& coords) const {
    for (int i = 0; i < size(); ++i)
      if (elements[i] == coords) return i;
    return -1;
  }
  int mul(int i, int j) const { return table[i][j]; }
  int order_of(int i) const {
    int k = i, ord = 1;
    while (k != identity) {
      k = table[k][i];
      ++ord;
      if (ord > size() + 1) throw theorem_violation("grouplike order exceeds group size");
    }
    return ord;
  }
};

namespace detail {

// sparse echelon over a field: rows normalized to pivot 1, insertion-reduces
template <class F>
struct SparseEchelon {
  using K = typename F::Elem;
  F fld;
  std::map<int, TermVec<F>> rows;  // pivot index -> row

  explicit SparseEchelon(F f) : fld(f) {}

  // reduce v (sorted, nonzero coefficients) against the echelon in place;
  // returns the surviving leading index, or -1 when v lies in the span
  int reduce(TermVec<F>& v) const {
    while (!v.empty()) {
      int lead = v.front().idx;
      auto it = rows.find(lead);
      if (it == rows.end()) return lead;
      K f = v.front().c;
      const TermVec<F>& r = it->second;  // pivot coefficient is 1
      TermVec<F> merged;
      merged.reserve(v.size() + r.size());
      size_t a = 0, b = 0;
      while (a < v.size() || b < r.size()) {
        if (b == r.size() || (a < v.size() && v[a].idx < r[b].idx)) {
          merged.push_back(v[a++]);
        } else if (a == v.size() || r[b].idx < v[a].idx) {
          merged.push_back({r[b].idx, -(f * r[b].c)});
          ++b;
        } else {
          K c = v[a].c - f * r[b].c;
          if (!c.is_zero()) merged.push_back({v[a].idx, c});
          ++a;
          ++b;
        }
      }
      v = std::move(merged);
    }
    return -1;
  }

  // returns the pivot index when v was independent (inserted), -1 otherwise
  int insert(TermVec<F> v) {
    int lead = reduce(v);
    if (lead < 0) return -1;
    K inv = v.front().c.inverse();
    for (auto& t : v) t.c *= inv;
    rows.emplace(lead, std::move(v));
    return lead;
  }

  int rank() const { return (int)rows.size(); }
};

}  // namespace detail

// Internal engine shared by grouplikes(): the dual-side multiplication rows
// are enough; the full dual Hopf structure is not materialized.
template <class F>
GrouplikeSet<F> grouplikes(const HopfAlgebra<F>& h) {
  using K = typename F::Elem;
  require_validated(h);
  F fld = h.fld;
  const int n = h.n;

  // dual algebra rows: f_a f_b = sum_i D[i][a][b] f_i
  std::vector<TermVec<F>> bmult((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (const auto& [a, b, c] : h.comult[i]) bmult[(size_t)a * n + b].push_back({i, c});

  // two-sided ideal generated by commutators of the dual algebra
  detail::SparseEchelon<F> ideal(fld);
  {
    DenseAccum<F> acc(fld, n);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        acc.reset();
        for (const auto& [i, c] : bmult[(size_t)a * n + b]) acc.add(i, c);
        for (const auto& [i, c] : bmult[(size_t)b * n + a]) acc.sub(i, c);
        TermVec<F> v;
        for (const auto& [i, c] : acc.extract_sorted()) v.push_back({i, c});
        if (!v.empty()) ideal.insert(std::move(v));
      }
    // closure under left and right multiplication by all basis functionals
    std::vector<TermVec<F>> queue;
    for (const auto& [lead, row] : ideal.rows) queue.push_back(row);
    while (!queue.empty()) {
      TermVec<F> v = std::move(queue.back());
      queue.pop_back();
      for (int g = 0; g < n; ++g) {
        for (int side = 0; side < 2; ++side) {
          acc.reset();
          for (const auto& [i, c] : v) {
            const auto& row = side == 0 ? bmult[(size_t)g * n + i] : bmult[(size_t)i * n + g];
            for (const auto& [k, d] : row) acc.add(k, c * d);
          }
          TermVec<F> w;
          for (const auto& [i, c] : acc.extract_sorted()) w.push_back({i, c});
          if (!w.empty()) {
            int lead = ideal.insert(std::move(w));
            if (lead >= 0) queue.push_back(ideal.rows.at(lead));
          }
        }
      }
    }
  }

  // annihilator W of the ideal inside A = B^*
  Matrix<F> wmat;
  std::vector<int> free_rows;
  {
    Matrix<F> im(fld, ideal.rank(), n);
    int r = 0;
    for (const auto& [lead, row] : ideal.rows) {
      for (const auto& [i, c] : row) im.at(r, i) = c;
      ++r;
    }
    auto ker = kernel(im);  // kernel pattern: identity at free columns
    std::vector<bool> is_pivot(n, false);
    {
      auto e = rref(im);
      for (int c : e.pivots) is_pivot[c] = true;
    }
    for (int c = 0; c < n; ++c)
      if (!is_pivot[c]) free_rows.push_back(c);
    wmat = columns(fld, ker, n);
  }
  const int q = wmat.cols;

  // transposed left-multiplication operators restricted to W, coordinates
  // read off the kernel pattern rows; they commute on W by construction
  std::vector<Matrix<F>> gens;
  gens.reserve(n);
  {
    // T_a entry (b, k) = D[k][a][b]
    std::vector<std::vector<TermVec<F>>> t(n, std::vector<TermVec<F>>(n));
    for (int k = 0; k < n; ++k)
      for (const auto& [a, b, c] : h.comult[k]) t[a][b].push_back({k, c});
    for (int a = 0; a < n; ++a) {
      Matrix<F> tw(fld, n, q);
      for (int b = 0; b < n; ++b)
        for (const auto& [k, c] : t[a][b])
          for (int col = 0; col < q; ++col)
            if (!wmat.at(k, col).is_zero()) tw.at(b, col) += c * wmat.at(k, col);
      Matrix<F> restr(fld, q, q);
      for (int r = 0; r < q; ++r)
        for (int col = 0; col < q; ++col) restr.at(r, col) = tw.at(free_rows[r], col);
      gens.push_back(std::move(restr));
    }
  }

  LinearCharacters<F> lc;
  {
    Matrix<F> full = Matrix<F>::identity(fld, q);
    std::vector<K> evs;
    detail::eigen_split(gens, 0, full, evs, lc);
  }

  GrouplikeSet<F> out;
  out.warnings = lc.warnings;
  for (const auto& sys : lc.systems) {
    Vec<F> x(n, fld.zero());
    for (int a = 0; a < n; ++a) x[a] = sys.eigenvalues[a];
    // re-verify by substitution: Delta x = x (x) x and eps(x) = 1
    if (!h.counit_of(x).is_one()) continue;
    DenseAccum<F> acc(fld, (size_t)n * n);
    for (int i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (const auto& [j, k, c] : h.comult[i]) acc.add((size_t)j * n + k, x[i] * c);
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (!x[a].is_zero() && !x[b].is_zero()) acc.sub((size_t)a * n + b, x[a] * x[b]);
    if (!acc.all_zero()) continue;
    out.elements.push_back(std::move(x));
  }
  std::sort(out.elements.begin(), out.elements.end(), vec_less<F>);

  // group table with identity and inverses; closure is a theorem given the
  // enumeration is closed under in-field products
  const int m = out.size();
  out.table.assign(m, std::vector<int>(m, -1));
  out.identity = out.find(h.unit);
  if (out.identity < 0) throw theorem_violation(h.name + ": grouplike set misses the unit");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int k = out.find(h.mul(out.elements[i], out.elements[j]));
      if (k < 0) throw theorem_violation(h.name + ": grouplike products escape the set");
      out.table[i][j] = k;
    }
  out.inverse_idx.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j)
      if (out.table[i][j] == out.identity && out.table[j][i] == out.identity) {
        out.inverse_idx[i] = j;
        break;
      }
    if (out.inverse_idx[i] < 0) throw theorem_violation(h.name + ": grouplike without inverse");
  }
  return out;
}

// Characters of h: G(h^*), i.e. algebra maps h -> k, each re-verified
// multiplicatively on all basis pairs of h. Coordinates are the values on
// the basis of h.
template <class F>
GrouplikeSet<F> characters(const HopfAlgebra<F>& h) {
  require_validated(h);
  auto d = dual(h);
  auto set = grouplikes(d);
  for (const auto& chi : set.elements) {
    for (int i = 0; i < h.n; ++i)
      for (int j = 0; j < h.n; ++j) {
        typename F::Elem lhs = h.fld.zero();
        for (const auto& [k, c] : h.mult_row(i, j)) lhs += c * chi[k];
        if (!(lhs == chi[i] * chi[j]))
          throw theorem_violation(h.name + ": character fails multiplicativity");
      }
    typename F::Elem on_unit = h.fld.zero();
    for (int i = 0; i < h.n; ++i) on_unit += h.unit[i] * chi[i];
    if (!on_unit.is_one()) throw theorem_violation(h.name + ": character not unital");
  }
  return set;
}

// ---------------------------------------------------------------------------
// Hit actions of the dual on the algebra and convolution on the dual.
// f is given by its values on the basis (coordinates in the dual basis).

// f -> x = x_(1) f(x_(2))
template <class F>
Vec<F> hit_left(const HopfAlgebra<F>& h, const Vec<F>& f, const Vec<F>& x) {
  Vec<F> r(h.n, h.fld.zero());
  for (int i = 0; i < h.n; ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& [j, k, c] : h.comult[i])
      if (!f[k].is_zero()) r[j] += x[i] * c * f[k];
  }
  return r;
}

// x <- f = f(x_(1)) x_(2)
template <class F>
Vec<F> hit_right(const HopfAlgebra<F>& h, const Vec<F>& x, const Vec<F>& f) {
  Vec<F> r(h.n, h.fld.zero());
  for (int i = 0; i < h.n; ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& [j, k, c] : h.comult[i])
      if (!f[j].is_zero()) r[k] += x[i] * c * f[j];
  }
  return r;
}

// convolution on the dual: (f * g)(e_i) = sum D[i][j][k] f_j g_k
template <class F>
Vec<F> convolve(const HopfAlgebra<F>& h, const Vec<F>& f, const Vec<F>& g) {
  Vec<F> r(h.n, h.fld.zero());
  for (int i = 0; i < h.n; ++i)
    for (const auto& [j, k, c] : h.comult[i])
      if (!f[j].is_zero() && !g[k].is_zero()) r[i] += c * f[j] * g[k];
  return r;
}

// convolution inverse of a character: f o S
template <class F>
Vec<F> character_inverse(const HopfAlgebra<F>& h, const Vec<F>& f) {
  Vec<F> r(h.n, h.fld.zero());
  for (int i = 0; i < h.n; ++i)
    for (int j = 0; j < h.n; ++j)
      if (!h.antipode.at(i, j).is_zero() && !f[j].is_zero()) r[i] += h.antipode.at(i, j) * f[j];
  return r;
}

}  // namespace hopf
