#pragma once

// Slow, direct reference computations. None of these call into the library
// algorithms they are used to check; they only read group multiplication.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "mackey/groups.hpp"
#include "mackey/integer.hpp"

namespace oracle {

using mackey::Elem;
using mackey::FiniteGroup;
using mackey::Int;

/// Every subset of G closed under multiplication (finite, so a subgroup).
inline std::set<std::vector<Elem>> subgroups_by_subsets(const FiniteGroup& G) {
  const std::size_t n = G.order();
  std::set<std::vector<Elem>> out;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    if (!(mask & 1ul)) continue;  // must contain the identity
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a)
      if (mask >> a & 1ul)
        for (std::size_t b = 0; b < n && closed; ++b)
          if (mask >> b & 1ul) closed = mask >> G.mul(static_cast<Elem>(a), static_cast<Elem>(b)) & 1ul;
    if (!closed) continue;
    std::vector<Elem> s;
    for (std::size_t a = 0; a < n; ++a)
      if (mask >> a & 1ul) s.push_back(static_cast<Elem>(a));
    out.insert(s);
  }
  return out;
}

/// Left cosets xI inside J, each as a sorted set.
inline std::set<std::set<Elem>> left_cosets(const FiniteGroup& G, const std::vector<Elem>& J, const std::vector<Elem>& I) {
  std::set<std::set<Elem>> out;
  for (Elem x : J) {
    std::set<Elem> c;
    for (Elem i : I) c.insert(G.mul(x, i));
    out.insert(c);
  }
  return out;
}

/// Double cosets J x I inside K.
inline std::set<std::set<Elem>> double_cosets(const FiniteGroup& G, const std::vector<Elem>& K, const std::vector<Elem>& J,
                                              const std::vector<Elem>& I) {
  std::set<std::set<Elem>> out;
  for (Elem x : K) {
    std::set<Elem> c;
    for (Elem j : J)
      for (Elem i : I) c.insert(G.mul(G.mul(j, x), i));
    out.insert(c);
  }
  return out;
}

/// Number of cosets gH fixed by every element of K (K gH = gH).
inline std::size_t fixed_cosets(const FiniteGroup& G, const std::vector<Elem>& H, const std::vector<Elem>& K) {
  std::size_t count = 0;
  for (const auto& coset : left_cosets(G, [&] {
         std::vector<Elem> all(G.order());
         for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Elem>(i);
         return all;
       }(), H)) {
    bool fixed = true;
    for (Elem k : K)
      for (Elem x : coset) fixed = fixed && coset.count(G.mul(k, x));
    count += fixed;
  }
  return count;
}

/// Ring element in Z^d with a structure-constant table: e_i e_j = sum_k c[i][j][k] e_k.
using Coeffs = std::vector<Int>;
using Structure = std::vector<std::vector<Coeffs>>;

inline Coeffs ring_mul(const Structure& c, const Coeffs& x, const Coeffs& y) {
  const std::size_t d = x.size();
  Coeffs out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (x[i] != 0 && y[j] != 0)
        for (std::size_t k = 0; k < d; ++k) out[k] += x[i] * y[j] * c[i][j][k];
  return out;
}

/// Element of R[G]: group element -> coefficient in R.
using GroupRingElem = std::map<Elem, Coeffs>;
/// Matrix over R[G], rows x cols.
using GroupRingMatrix = std::vector<std::vector<GroupRingElem>>;

inline void accumulate(GroupRingElem& into, Elem g, const Coeffs& v) {
  auto& slot = into[g];
  if (slot.empty()) slot.assign(v.size(), Int(0));
  for (std::size_t k = 0; k < v.size(); ++k) slot[k] += v[k];
}

/// Ordinary matrix product over the (untwisted) group ring: (a g)(b h) = ab gh.
inline GroupRingMatrix group_ring_matmul(const FiniteGroup& G, const Structure& c, const GroupRingMatrix& A, const GroupRingMatrix& B) {
  const std::size_t n = A.size(), m = B.empty() ? 0 : B[0].size(), inner = B.size();
  GroupRingMatrix out(n, std::vector<GroupRingElem>(m));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t l = 0; l < inner; ++l)
        for (const auto& [g, a] : A[r][l])
          for (const auto& [h, b] : B[l][s]) accumulate(out[r][s], G.mul(g, h), ring_mul(c, a, b));
  for (auto& row : out)
    for (auto& e : row)
      for (auto it = e.begin(); it != e.end();)
        it = std::all_of(it->second.begin(), it->second.end(), [](const Int& x) { return x == 0; }) ? e.erase(it) : std::next(it);
  return out;
}

/// gcd by subtraction-free Euclid on long long, independent of the library's Int gcd.
inline long long gcd_ll(long long a, long long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Determinant by cofactor expansion (small matrices only).
inline long long det_cofactor(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<long long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    total += (c % 2 ? -1 : 1) * m[0][c] * det_cofactor(minor);
  }
  return total;
}

/// gcd of all k x k minors (the k-th determinantal divisor).
inline long long determinantal_divisor(const std::vector<std::vector<long long>>& A, std::size_t k) {
  const std::size_t rows = A.size(), cols = A.empty() ? 0 : A[0].size();
  long long g = 0;
  std::vector<bool> rsel(rows), csel(cols);
  std::fill(rsel.begin(), rsel.begin() + static_cast<long>(std::min(k, rows)), true);
  if (k > rows || k > cols) return 0;
  do {
    std::fill(csel.begin(), csel.end(), false);
    std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
    do {
      std::vector<std::vector<long long>> sub;
      for (std::size_t r = 0; r < rows; ++r)
        if (rsel[r]) {
          std::vector<long long> row;
          for (std::size_t c = 0; c < cols; ++c)
            if (csel[c]) row.push_back(A[r][c]);
          sub.push_back(row);
        }
      g = gcd_ll(g, det_cofactor(sub));
    } while (std::prev_permutation(csel.begin(), csel.end()));
  } while (std::prev_permutation(rsel.begin(), rsel.end()));
  return g;
}

/// Conjugacy class of g as a set.
inline std::set<Elem> conjugacy_class(const FiniteGroup& G, Elem g) {
  std::set<Elem> out;
  for (Elem f = 0; f < G.order(); ++f) out.insert(G.mul(G.mul(f, g), G.inv(f)));
  return out;
}

}  // namespace oracle
