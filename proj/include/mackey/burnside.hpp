#pragma once

#include <map>
#include <memory>
#include <set>
#include <vector>

#include "mackey/mackey.hpp"

namespace mackey {

/// Subgroup classes of G (lattice indices of their minimal members, sorted)
/// and marks m[H][K] = number of K-fixed points on G/H.
struct TableOfMarks {
  LatticePtr lattice;
  std::vector<std::size_t> classes;
  IntMatrix marks;

  std::size_t size() const noexcept { return classes.size(); }

  /// Position of the class containing lattice subgroup s.
  std::size_t class_of(std::size_t s) const {
    const std::size_t rep = lattice->class_rep(s, lattice->whole());
    auto it = std::lower_bound(classes.begin(), classes.end(), rep);
    return static_cast<std::size_t>(it - classes.begin());
  }

  /// Mark vector of x = sum_H x_H [G/H].
  IntVector marks_of(const IntVector& x) const { return marks.transpose().apply(x); }
};

/// Number of cosets gH fixed by every element of K, i.e. with g^-1 K g <= H.
inline Int fixed_cosets(const SubgroupRef& H, const SubgroupRef& K) {
  const auto& G = *H.parent();
  std::size_t count = 0;
  for (Elem g = 0; g < G.order(); ++g) {
    bool in = true;
    for (Elem k : K.members())
      if (!H.contains(G.conjugate(G.inv(g), k))) {
        in = false;
        break;
      }
    count += in;
  }
  return static_cast<long long>(count / H.order());
}

inline TableOfMarks table_of_marks(const LatticePtr& L) {
  TableOfMarks T;
  T.lattice = L;
  std::set<std::size_t> reps;
  for (std::size_t s = 0; s < L->size(); ++s) reps.insert(L->class_rep(s, L->whole()));
  T.classes.assign(reps.begin(), reps.end());
  const std::size_t n = T.classes.size();
  T.marks = IntMatrix(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) T.marks(a, b) = fixed_cosets((*L)[T.classes[a]], (*L)[T.classes[b]]);
  for (std::size_t a = 0; a < n; ++a) {
    if (T.marks(a, a) <= 0) throw Error(ErrorCode::IntegralityViolation, "table of marks has a non-positive diagonal entry");
    for (std::size_t b = a + 1; b < n; ++b)
      if (T.marks(a, b) != 0) throw Error(ErrorCode::IntegralityViolation, "table of marks is not lower triangular");
  }
  return T;
}

/// Solves marks^T z = w exactly; throws if z is not integral.
inline IntVector burnside_from_marks(const TableOfMarks& T, const IntVector& w) {
  const std::size_t n = T.size();
  std::vector<Rational> z(n);
  // marks^T is upper triangular: (marks^T)(b, a) = marks(a, b), nonzero only for a >= b
  for (std::size_t b = n; b-- > 0;) {
    Rational acc = Rational(w[b]);
    for (std::size_t a = b + 1; a < n; ++a) acc -= Rational(T.marks(a, b)) * z[a];
    z[b] = acc / Rational(T.marks(b, b));
  }
  IntVector out(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (boost::multiprecision::denominator(z[k]) != 1)
      throw Error(ErrorCode::IntegralityViolation, "Burnside product is not integral");
    out[k] = boost::multiprecision::numerator(z[k]);
  }
  return out;
}

/// Pointwise product of mark vectors, pulled back through the table.
inline IntVector burnside_product(const TableOfMarks& T, const IntVector& x, const IntVector& y) {
  IntVector mx = T.marks_of(x), my = T.marks_of(y);
  for (std::size_t k = 0; k < mx.size(); ++k) mx[k] *= my[k];
  return burnside_from_marks(T, mx);
}

/// Burnside ring basis of each subgroup H: H-classes of subgroups of H,
/// indexed by their minimal lattice member.
struct BurnsideBases {
  std::vector<std::vector<std::size_t>> basis;

  std::size_t position(std::size_t H, std::size_t rep) const {
    const auto& b = basis[H];
    auto it = std::lower_bound(b.begin(), b.end(), rep);
    if (it == b.end() || *it != rep) throw Error(ErrorCode::PreconditionViolated, "not a class representative");
    return static_cast<std::size_t>(it - b.begin());
  }
};

inline BurnsideBases burnside_bases(const SubgroupLattice& L) {
  BurnsideBases B;
  for (std::size_t H = 0; H < L.size(); ++H) {
    std::set<std::size_t> reps;
    for (std::size_t s : L.subgroups_of(H)) reps.insert(L.class_rep(s, H));
    B.basis.emplace_back(reps.begin(), reps.end());
  }
  return B;
}

/// B(H) for every H. Ind [J/H] = [K/H]; Res splits K/L into J-orbits
/// J f L with stabilizers J n fLf^-1; conj relabels; the product of [H/A]
/// and [H/B] runs over A\H/B.
inline GreenPtr burnside_green_functor(const LatticePtr& Lp) {
  const auto& L = *Lp;
  const auto& G = *L.group();
  const BurnsideBases B = burnside_bases(L);
  std::vector<FgAbelianGroup> vals;
  for (const auto& b : B.basis) vals.push_back(FgAbelianGroup::free(b.size()));
  auto R = std::make_shared<GreenFunctor>();
  R->functor = MackeyFunctor(Lp, vals, "burnside");
  auto& M = R->functor;
  auto basis_vec = [&](std::size_t H, std::size_t s) {
    IntVector v(B.basis[H].size());
    v[B.position(H, L.class_rep(s, H))] += 1;
    return v;
  };
  for (std::size_t K = 0; K < L.size(); ++K)
    for (std::size_t J : L.subgroups_of(K)) {
      IntMatrix ind(B.basis[K].size(), B.basis[J].size()), res(B.basis[J].size(), B.basis[K].size());
      for (std::size_t c = 0; c < B.basis[J].size(); ++c) {
        const IntVector v = basis_vec(K, B.basis[J][c]);
        for (std::size_t r = 0; r < v.size(); ++r) ind(r, c) = v[r];
      }
      for (std::size_t c = 0; c < B.basis[K].size(); ++c) {
        const std::size_t Ls = B.basis[K][c];
        IntVector v(B.basis[J].size());
        for (Elem f : double_coset_reps(L[K], L[J], L[Ls])) {
          const IntVector w = basis_vec(J, L.intersection(J, L.conjugate(Ls, f)));
          for (std::size_t r = 0; r < v.size(); ++r) v[r] += w[r];
        }
        for (std::size_t r = 0; r < v.size(); ++r) res(r, c) = v[r];
      }
      M.set_ind(J, K, std::move(ind));
      M.set_res(J, K, std::move(res));
    }
  for (Elem f = 0; f < G.order(); ++f)
    for (std::size_t H = 0; H < L.size(); ++H) {
      const std::size_t fH = L.conjugate(H, f);
      IntMatrix c(B.basis[fH].size(), B.basis[H].size());
      for (std::size_t k = 0; k < B.basis[H].size(); ++k) c(B.position(fH, L.class_rep(L.conjugate(B.basis[H][k], f), fH)), k) = 1;
      M.set_conj(f, H, std::move(c));
    }
  for (std::size_t H = 0; H < L.size(); ++H) {
    const std::size_t n = B.basis[H].size();
    std::vector<IntVector> table;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        IntVector v(n);
        const std::size_t A = B.basis[H][a], Bs = B.basis[H][b];
        for (Elem x : double_coset_reps(L[H], L[A], L[Bs])) {
          const IntVector w = basis_vec(H, L.intersection(A, L.conjugate(Bs, x)));
          for (std::size_t r = 0; r < n; ++r) v[r] += w[r];
        }
        table.push_back(std::move(v));
      }
    R->product.table.push_back(std::move(table));
    R->product.left_rank.push_back(n);
    R->unit.push_back(basis_vec(H, H));
  }
  return R;
}

/// Mark at the whole group of ind_H^G of every basis element of B(H), for
/// each proper H. All zero means the induced image misses 1, whose mark is 1.
struct ZeroMarkCertificate {
  bool all_zero = true;
  std::size_t elements_checked = 0;
  Int unit_mark = 0;
};

inline ZeroMarkCertificate zero_mark_certificate(const GreenFunctor& burnside, const TableOfMarks& T, const Family& fam) {
  const auto& L = *T.lattice;
  const std::size_t top = L.whole();
  ZeroMarkCertificate out;
  // basis of B(G) = G-classes in table order, so marks apply directly
  const std::size_t col = T.class_of(top);
  auto mark_at_top = [&](const IntVector& x) {
    Int m = 0;
    for (std::size_t a = 0; a < x.size(); ++a) m += x[a] * T.marks(a, col);
    return m;
  };
  out.unit_mark = mark_at_top(burnside.one(top));
  for (std::size_t H : fam.members()) {
    if (H == top) continue;
    const IntMatrix& ind = burnside.functor.ind_matrix(H, top);
    for (std::size_t j = 0; j < ind.cols(); ++j, ++out.elements_checked)
      if (mark_at_top(ind.col(j)) != 0) out.all_zero = false;
  }
  return out;
}

/// Values on element classes (ordered by minimal member).
struct ClassFunction {
  std::vector<std::vector<Elem>> classes;
  std::vector<Rational> values;
};

/// Value at g = |Fix_{G/H}(g)|.
inline ClassFunction perm_character(const GroupPtr& G, const SubgroupRef& H) {
  ClassFunction chi;
  chi.classes = conjugacy_classes(*G);
  for (const auto& cls : chi.classes) {
    const Elem g = cls.front();
    std::size_t count = 0;
    for (Elem x = 0; x < G->order(); ++x) count += H.contains(G->conjugate(G->inv(x), g));
    chi.values.emplace_back(static_cast<long long>(count / H.order()));
  }
  return chi;
}

/// sum_C a_C Ind_C^G(1) = n 1 over the G-classes of cyclic subgroups.
struct ArtinSolution {
  Int n = 0;
  std::vector<std::size_t> cyclic_classes;  // lattice indices of class representatives
  IntVector coefficients;
};

namespace detail {
inline IntMatrix artin_matrix(const LatticePtr& L, const std::vector<std::size_t>& cyc) {
  const auto& G = L->group();
  const std::size_t nclasses = conjugacy_classes(*G).size();
  IntMatrix P(nclasses, cyc.size());
  for (std::size_t c = 0; c < cyc.size(); ++c) {
    const auto chi = perm_character(G, (*L)[cyc[c]]);
    for (std::size_t r = 0; r < nclasses; ++r) P(r, c) = boost::multiprecision::numerator(chi.values[r]);
  }
  return P;
}
inline std::vector<std::size_t> cyclic_classes(const LatticePtr& L) {
  std::set<std::size_t> reps;
  for (std::size_t s = 0; s < L->size(); ++s)
    if (classify_subgroup(L->group(), (*L)[s]).is_cyclic) reps.insert(L->class_rep(s, L->whole()));
  return {reps.begin(), reps.end()};
}
}  // namespace detail

/// Coefficients for a given n, or nullopt when n 1 is not a combination.
inline std::optional<ArtinSolution> artin_solve_at(const LatticePtr& L, const Int& n) {
  ArtinSolution out;
  out.n = n;
  out.cyclic_classes = detail::cyclic_classes(L);
  const IntMatrix P = detail::artin_matrix(L, out.cyclic_classes);
  auto sol = solve_integer_linear(P, IntVector(P.rows(), n));
  if (!sol) return std::nullopt;
  out.coefficients = std::move(*sol);
  return out;
}

/// Minimal positive n and the (unique) coefficients.
inline ArtinSolution artin_solve(const LatticePtr& L) {
  const auto cyc = detail::cyclic_classes(L);
  const IntMatrix P = detail::artin_matrix(L, cyc);
  const SmithResult s = smith_normal_form(P);
  const IntVector u = s.U.apply(IntVector(P.rows(), Int(1)));
  Int n = 1;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i >= s.rank) {
      if (u[i] != 0) throw Error(ErrorCode::NoSolution, "the trivial character is not a rational combination");
      continue;
    }
    const Int& d = s.D(i, i);
    n = lcm(n, d / gcd(d, u[i]));
  }
  auto sol = artin_solve_at(L, n);
  if (!sol) throw Error(ErrorCode::NoSolution, "Artin system has no solution at the computed multiplier");
  const Int order = static_cast<long long>(L->group()->order());
  if (order % n != 0) throw Error(ErrorCode::NoSolution, "Artin multiplier does not divide the group order");
  return *sol;
}

}  // namespace mackey
