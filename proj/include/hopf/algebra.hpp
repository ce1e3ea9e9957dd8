#pragma once

// Hopf algebras as structure-constant data over an exact field.
//
// Conventions, fixed once for the whole library:
//   mult    e_i * e_j = sum_k  M[i][j][k] e_k        (rows stored sparse)
//   comult  Delta(e_i) = sum   D[i][j][k] e_j (x) e_k
//   antipode matrix row i = coordinates of S(e_i); elements apply as x^T S
//
// Tensors are stored as sparse term lists keyed by basis index; doubles of
// catalog algebras reach dimension 256 where dense n^3 storage is not an
// option. Everything is immutable after construction apart from a cached
// validation marker.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "matrix.hpp"

namespace hopf {

struct structure_error : std::runtime_error {
  explicit structure_error(const std::string& m) : std::runtime_error(m) {}
};

// Raised when a mathematically guaranteed identity fails at runtime: either
// a construction bug or a genuine counterexample to the classification.
struct theorem_violation : std::runtime_error {
  explicit theorem_violation(const std::string& m) : std::runtime_error(m) {}
};

template <class F>
struct Term {
  int idx;
  typename F::Elem c;
};

template <class F>
using TermVec = std::vector<Term<F>>;

template <class F>
struct PairTerm {
  int j, k;
  typename F::Elem c;
};

template <class F>
using PairTermVec = std::vector<PairTerm<F>>;

template <class F>
TermVec<F> to_sparse(const Vec<F>& v) {
  TermVec<F> t;
  for (int i = 0; i < (int)v.size(); ++i)
    if (!v[i].is_zero()) t.push_back({i, v[i]});
  return t;
}

template <class F>
Vec<F> to_dense(F fld, int n, const TermVec<F>& t) {
  Vec<F> v(n, fld.zero());
  for (const auto& [i, c] : t) v[i] += c;
  return v;
}

// Dense accumulator with sparse reset; the workhorse of the axiom checks.
template <class F>
struct DenseAccum {
  using K = typename F::Elem;
  std::vector<K> vals;
  std::vector<int> touched;
  K zero;

  DenseAccum(F fld, size_t n) : vals(n, fld.zero()), zero(fld.zero()) {}
  void add(size_t i, const K& c) {
    if (vals[i].is_zero() && !c.is_zero()) touched.push_back((int)i);
    vals[i] += c;
  }
  void sub(size_t i, const K& c) {
    if (vals[i].is_zero() && !c.is_zero()) touched.push_back((int)i);
    vals[i] -= c;
  }
  void reset() {
    for (int i : touched) vals[i] = zero;
    touched.clear();
  }
  bool all_zero() const {
    for (int i : touched)
      if (!vals[i].is_zero()) return false;
    return true;
  }
  // sorted nonzero entries; touched may hold duplicates after 0-crossings
  std::vector<std::pair<int, K>> extract_sorted() {
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    std::vector<std::pair<int, K>> out;
    for (int i : touched)
      if (!vals[i].is_zero()) out.push_back({i, vals[i]});
    return out;
  }
};

template <class F>
struct HopfAlgebra {
  using K = typename F::Elem;

  F fld{};
  std::string name;
  int n = 0;
  std::vector<std::string> basis_names;
  std::vector<TermVec<F>> mult;      // n*n rows, index i*n+j
  Vec<F> unit;
  std::vector<PairTermVec<F>> comult;  // n rows
  Vec<F> counit;
  Matrix<F> antipode;
  mutable Matrix<F> antipode_inv;  // cached by finalize()/validate_axioms
  mutable bool validated = false;

  const TermVec<F>& mult_row(int i, int j) const { return mult[(size_t)i * n + j]; }
  TermVec<F>& mult_row(int i, int j) { return mult[(size_t)i * n + j]; }

  // x * y in coordinates
  Vec<F> mul(const Vec<F>& x, const Vec<F>& y) const {
    Vec<F> r(n, fld.zero());
    for (int i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (y[j].is_zero()) continue;
        K f = x[i] * y[j];
        for (const auto& [k, c] : mult_row(i, j)) r[k] += f * c;
      }
    }
    return r;
  }

  K counit_of(const Vec<F>& x) const {
    K r = fld.zero();
    for (int i = 0; i < n; ++i)
      if (!x[i].is_zero()) r += x[i] * counit[i];
    return r;
  }

  Vec<F> apply_antipode(const Vec<F>& x) const { return apply_row_matrix(antipode, x); }
  Vec<F> apply_antipode_inv(const Vec<F>& x) const { return apply_row_matrix(antipode_inv, x); }

  Vec<F> apply_row_matrix(const Matrix<F>& m, const Vec<F>& x) const {
    Vec<F> r(n, fld.zero());
    for (int i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < n; ++j)
        if (!m.at(i, j).is_zero()) r[j] += x[i] * m.at(i, j);
    }
    return r;
  }

  bool is_unit(const Vec<F>& x) const { return x == unit; }

  Vec<F> basis_vector(int i) const {
    Vec<F> v(n, fld.zero());
    v[i] = fld.one();
    return v;
  }

  // left/right multiplication operators as column-acting matrices:
  // (L_x) coords(y) = coords(x*y)
  Matrix<F> left_mult_matrix(const Vec<F>& x) const {
    Matrix<F> m(fld, n, n);
    for (int j = 0; j < n; ++j) {
      Vec<F> col = mul(x, basis_vector(j));
      for (int i = 0; i < n; ++i) m.at(i, j) = col[i];
    }
    return m;
  }
  Matrix<F> right_mult_matrix(const Vec<F>& x) const {
    Matrix<F> m(fld, n, n);
    for (int j = 0; j < n; ++j) {
      Vec<F> col = mul(basis_vector(j), x);
      for (int i = 0; i < n; ++i) m.at(i, j) = col[i];
    }
    return m;
  }

  // Solve x * y = 1 exactly; {false, _} when x is not invertible.
  std::pair<bool, Vec<F>> try_inverse(const Vec<F>& x) const {
    auto [ok, y] = solve(left_mult_matrix(x), unit);
    if (!ok) return {false, {}};
    if (!(mul(y, x) == unit)) return {false, {}};  // two-sided in our finite-dim setting, checked anyway
    return {true, std::move(y)};
  }

  void check_shapes() const {
    if (n <= 0) throw structure_error(name + ": dimension must be positive");
    if ((int)basis_names.size() != n) throw structure_error(name + ": basis name count != dim");
    if ((int)mult.size() != n * n) throw structure_error(name + ": mult tensor shape");
    if ((int)comult.size() != n) throw structure_error(name + ": comult tensor shape");
    if ((int)unit.size() != n || (int)counit.size() != n)
      throw structure_error(name + ": unit/counit length");
    if (antipode.rows != n || antipode.cols != n)
      throw structure_error(name + ": antipode shape");
    for (const auto& row : mult)
      for (const auto& t : row)
        if (t.idx < 0 || t.idx >= n) throw structure_error(name + ": mult index out of range");
    for (const auto& row : comult)
      for (const auto& t : row)
        if (t.j < 0 || t.j >= n || t.k < 0 || t.k >= n)
          throw structure_error(name + ": comult index out of range");
  }

  // Computes the antipode inverse; throws when S is singular (never for a
  // genuine finite-dimensional Hopf algebra).
  void finalize() {
    check_shapes();
    auto [ok, inv] = inverse(antipode);
    if (!ok) throw structure_error(name + ": antipode matrix is singular");
    antipode_inv = std::move(inv);
  }
};

// ---------------------------------------------------------------------------
// Axiom validation

struct AxiomFailure {
  std::string axiom;
  std::vector<int> witness;
};

struct AxiomReport {
  std::vector<AxiomFailure> failures;  // capped per axiom
  long total_failures = 0;
  bool antipode_invertible = true;
  bool ok() const { return total_failures == 0 && antipode_invertible; }
};

namespace detail {

constexpr int kMaxWitnessesPerAxiom = 8;

inline void record(AxiomReport& rep, std::map<std::string, int>& counts, const std::string& axiom,
                   std::vector<int> witness) {
  rep.total_failures += 1;
  if (counts[axiom]++ < kMaxWitnessesPerAxiom) rep.failures.push_back({axiom, std::move(witness)});
}

}  // namespace detail

// Exact verification of all Hopf axioms by tensor contraction on basis
// tuples: associativity, two-sided unit, coassociativity, two-sided counit,
// Delta/eps algebra maps, and both antipode identities. Every failure is
// reported with witness indices.
template <class F>
AxiomReport validate_axioms(const HopfAlgebra<F>& h) {
  using K = typename F::Elem;
  h.check_shapes();
  F fld = h.fld;
  const int n = h.n;

  AxiomReport rep;
  std::map<std::string, int> counts;

  {  // antipode invertibility, recomputed so stale caches cannot mask mutations
    auto [ok, inv] = inverse(h.antipode);
    rep.antipode_invertible = ok;
    h.antipode_inv = ok ? std::move(inv) : Matrix<F>();
  }

  // two-sided unit: 1 * e_j = e_j = e_j * 1
  {
    DenseAccum<F> acc(fld, n);
    for (int j = 0; j < n; ++j) {
      for (int side = 0; side < 2; ++side) {
        acc.reset();
        for (int i = 0; i < n; ++i) {
          if (h.unit[i].is_zero()) continue;
          const auto& row = side == 0 ? h.mult_row(i, j) : h.mult_row(j, i);
          for (const auto& [k, c] : row) acc.add(k, h.unit[i] * c);
        }
        acc.sub(j, fld.one());
        if (!acc.all_zero())
          detail::record(rep, counts, side == 0 ? "unit-left" : "unit-right", {j});
      }
    }
    acc.reset();
  }

  // associativity: (e_i e_j) e_k = e_i (e_j e_k)
  {
    DenseAccum<F> acc(fld, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto& rij = h.mult_row(i, j);
        for (int k = 0; k < n; ++k) {
          acc.reset();
          for (const auto& [s, c] : rij)
            for (const auto& [t, d] : h.mult_row(s, k)) acc.add(t, c * d);
          for (const auto& [s, c] : h.mult_row(j, k))
            for (const auto& [t, d] : h.mult_row(i, s)) acc.sub(t, c * d);
          if (!acc.all_zero()) detail::record(rep, counts, "associativity", {i, j, k});
        }
      }
  }

  // coassociativity: (Delta x id) Delta = (id x Delta) Delta, sparse triples
  {
    std::map<std::tuple<int, int, int>, K> acc;
    auto bump = [&acc](std::tuple<int, int, int> key, const K& v) {
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(key, v);
      else
        it->second += v;
    };
    for (int i = 0; i < n; ++i) {
      acc.clear();
      for (const auto& [j, k, c] : h.comult[i]) {
        for (const auto& [a, b, d] : h.comult[j]) bump({a, b, k}, c * d);
        for (const auto& [a, b, d] : h.comult[k]) bump({j, a, b}, -(c * d));
      }
      for (const auto& [key, v] : acc)
        if (!v.is_zero()) {
          detail::record(rep, counts, "coassociativity", {i});
          break;
        }
    }
  }

  // two-sided counit: (eps x id) Delta = id = (id x eps) Delta
  {
    DenseAccum<F> acc(fld, n);
    for (int i = 0; i < n; ++i) {
      for (int side = 0; side < 2; ++side) {
        acc.reset();
        for (const auto& [j, k, c] : h.comult[i]) {
          if (side == 0)
            acc.add(k, c * h.counit[j]);
          else
            acc.add(j, c * h.counit[k]);
        }
        acc.sub(i, fld.one());
        if (!acc.all_zero())
          detail::record(rep, counts, side == 0 ? "counit-left" : "counit-right", {i});
      }
    }
  }

  // bialgebra: Delta and eps are algebra maps; Delta(1) = 1 x 1, eps(1) = 1
  {
    DenseAccum<F> acc(fld, (size_t)n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        acc.reset();
        for (const auto& [k, c] : h.mult_row(i, j))
          for (const auto& [a, b, d] : h.comult[k]) acc.add((size_t)a * n + b, c * d);
        for (const auto& [a, b, ca] : h.comult[i])
          for (const auto& [s, t, cb] : h.comult[j]) {
            K f = ca * cb;
            for (const auto& [x, va] : h.mult_row(a, s))
              for (const auto& [y, vb] : h.mult_row(b, t)) acc.sub((size_t)x * n + y, f * va * vb);
          }
        if (!acc.all_zero()) detail::record(rep, counts, "comult-multiplicative", {i, j});

        K e = fld.zero();
        for (const auto& [k, c] : h.mult_row(i, j)) e += c * h.counit[k];
        if (!(e == h.counit[i] * h.counit[j]))
          detail::record(rep, counts, "counit-multiplicative", {i, j});
      }
    acc.reset();
    for (int i = 0; i < n; ++i) {
      if (h.unit[i].is_zero()) continue;
      for (const auto& [a, b, d] : h.comult[i]) acc.add((size_t)a * n + b, h.unit[i] * d);
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (!h.unit[a].is_zero() && !h.unit[b].is_zero())
          acc.sub((size_t)a * n + b, h.unit[a] * h.unit[b]);
    if (!acc.all_zero()) detail::record(rep, counts, "comult-unital", {});
    if (!h.counit_of(h.unit).is_one()) detail::record(rep, counts, "counit-unital", {});
  }

  // antipode: m (S x id) Delta = unit . eps = m (id x S) Delta
  {
    DenseAccum<F> acc(fld, n);
    std::vector<TermVec<F>> srows(n);
    for (int i = 0; i < n; ++i) {
      Vec<F> row(n, fld.zero());
      for (int j = 0; j < n; ++j) row[j] = h.antipode.at(i, j);
      srows[i] = to_sparse<F>(row);
    }
    for (int i = 0; i < n; ++i) {
      for (int side = 0; side < 2; ++side) {
        acc.reset();
        for (const auto& [j, k, c] : h.comult[i]) {
          const auto& srow = side == 0 ? srows[j] : srows[k];
          int other = side == 0 ? k : j;
          for (const auto& [s, d] : srow) {
            const auto& prow = side == 0 ? h.mult_row(s, other) : h.mult_row(other, s);
            for (const auto& [t, v] : prow) acc.add(t, c * d * v);
          }
        }
        for (int t = 0; t < n; ++t)
          if (!h.unit[t].is_zero()) acc.sub(t, h.counit[i] * h.unit[t]);
        if (!acc.all_zero())
          detail::record(rep, counts, side == 0 ? "antipode-left" : "antipode-right", {i});
      }
    }
  }

  if (rep.ok()) h.validated = true;
  return rep;
}

template <class F>
void require_validated(const HopfAlgebra<F>& h) {
  if (h.validated) return;
  auto rep = validate_axioms(h);
  if (!rep.ok())
    throw structure_error(h.name + ": Hopf axioms fail (" + std::to_string(rep.total_failures) +
                          " failures, first: " + (rep.failures.empty() ? "antipode singular" : rep.failures[0].axiom) + ")");
}

// ---------------------------------------------------------------------------
// Dual and op/cop constructions

// H^* with multiplication dual to comultiplication and vice versa; antipode
// is the transpose. dual(dual(h)) = h entrywise.
template <class F>
HopfAlgebra<F> dual(const HopfAlgebra<F>& h) {
  const int n = h.n;
  HopfAlgebra<F> d;
  d.fld = h.fld;
  d.name = "dual(" + h.name + ")";
  d.n = n;
  d.basis_names.reserve(n);
  for (const auto& b : h.basis_names) d.basis_names.push_back(b + "^*");
  d.mult.assign((size_t)n * n, {});
  for (int i = 0; i < n; ++i)
    for (const auto& [j, k, c] : h.comult[i]) d.mult_row(j, k).push_back({i, c});
  d.comult.assign(n, {});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (const auto& [c, v] : h.mult_row(a, b)) d.comult[c].push_back({a, b, v});
  d.unit = h.counit;
  d.counit = h.unit;
  d.antipode = h.antipode.transpose();
  d.finalize();
  return d;
}

// Opposite multiplication; antipode becomes S^{-1}.
template <class F>
HopfAlgebra<F> opposite(const HopfAlgebra<F>& h) {
  HopfAlgebra<F> o = h;
  o.name = "op(" + h.name + ")";
  o.validated = false;
  for (int i = 0; i < h.n; ++i)
    for (int j = 0; j < h.n; ++j) o.mult_row(i, j) = h.mult_row(j, i);
  o.antipode = h.antipode_inv.rows == h.n ? h.antipode_inv : inverse(h.antipode).second;
  o.finalize();
  return o;
}

// Co-opposite comultiplication; antipode becomes S^{-1}.
template <class F>
HopfAlgebra<F> coopposite(const HopfAlgebra<F>& h) {
  HopfAlgebra<F> o = h;
  o.name = "cop(" + h.name + ")";
  o.validated = false;
  for (int i = 0; i < h.n; ++i) {
    o.comult[i].clear();
    for (const auto& [j, k, c] : h.comult[i]) o.comult[i].push_back({k, j, c});
  }
  o.antipode = h.antipode_inv.rows == h.n ? h.antipode_inv : inverse(h.antipode).second;
  o.finalize();
  return o;
}

// Entrywise equality of all structure data (same basis order).
template <class F>
bool same_structure(const HopfAlgebra<F>& a, const HopfAlgebra<F>& b) {
  if (a.n != b.n) return false;
  const int n = a.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec<F> ra = to_dense(a.fld, n, a.mult_row(i, j));
      Vec<F> rb = to_dense(b.fld, n, b.mult_row(i, j));
      if (!(ra == rb)) return false;
    }
  for (int i = 0; i < n; ++i) {
    DenseAccum<F> acc(a.fld, (size_t)n * n);
    for (const auto& [j, k, c] : a.comult[i]) acc.add((size_t)j * n + k, c);
    for (const auto& [j, k, c] : b.comult[i]) acc.sub((size_t)j * n + k, c);
    if (!acc.all_zero()) return false;
  }
  return a.unit == b.unit && a.counit == b.counit && a.antipode == b.antipode;
}

}  // namespace hopf
