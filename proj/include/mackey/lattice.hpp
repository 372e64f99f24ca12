#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mackey/groups.hpp"
#include "mackey/integer.hpp"

namespace mackey {

/// Z^m with a representation of the acting subgroup I by unimodular matrices.
/// Matrices are stored in the order of I.members().
class Lattice {
 public:
  Lattice(SubgroupRef acting, std::size_t rank, std::vector<IntMatrix> rep)
      : acting_(std::move(acting)), rank_(rank), rep_(std::move(rep)) {
    if (rep_.size() != acting_.order()) throw Error(ErrorCode::DimensionMismatch, "one matrix per acting element required");
    for (const auto& m : rep_)
      if (m.rows() != rank_ || m.cols() != rank_) throw Error(ErrorCode::DimensionMismatch, "representation matrix has wrong size");
    if (auto bad = first_violation()) throw Error(ErrorCode::ActionViolation, "not a representation: " + *bad);
  }

  static Lattice trivial(const SubgroupRef& I, std::size_t rank = 1) {
    return Lattice(I, rank, std::vector<IntMatrix>(I.order(), IntMatrix::identity(rank)));
  }

  /// Rank one, g acting by the sign of its permutation.
  static Lattice sign(const SubgroupRef& I) {
    std::vector<IntMatrix> rep;
    for (Elem g : I.members()) rep.push_back(IntMatrix{{I.parent()->element(g).is_odd() ? -1 : 1}});
    return Lattice(I, 1, std::move(rep));
  }

  /// Z[I] with basis the members of I and left multiplication.
  static Lattice regular(const SubgroupRef& I) {
    const auto& G = *I.parent();
    const auto& mem = I.members();
    std::vector<IntMatrix> rep;
    for (Elem g : mem) {
      IntMatrix m(mem.size(), mem.size());
      for (std::size_t x = 0; x < mem.size(); ++x) {
        auto it = std::lower_bound(mem.begin(), mem.end(), G.mul(g, mem[x]));
        m(static_cast<std::size_t>(it - mem.begin()), x) = 1;
      }
      rep.push_back(std::move(m));
    }
    return Lattice(I, mem.size(), std::move(rep));
  }

  const SubgroupRef& acting() const noexcept { return acting_; }
  std::size_t rank() const noexcept { return rank_; }

  const IntMatrix& matrix(Elem g) const {
    const auto& mem = acting_.members();
    auto it = std::lower_bound(mem.begin(), mem.end(), g);
    if (it == mem.end() || *it != g) throw Error(ErrorCode::SupportViolation, "element does not act on this lattice");
    return rep_[static_cast<std::size_t>(it - mem.begin())];
  }

  Int character(Elem g) const { return matrix(g).trace(); }

  /// Description of the first failed representation law, if any.
  std::optional<std::string> first_violation() const {
    const auto& G = *acting_.parent();
    if (!(matrix(FiniteGroup::identity()) == IntMatrix::identity(rank_))) return "identity does not act trivially";
    for (Elem g : acting_.members()) {
      if (!is_unimodular(matrix(g))) return "matrix of " + G.element(g).cycle_string() + " is not invertible over Z";
      for (Elem h : acting_.members())
        if (!(matrix(G.mul(g, h)) == matrix(g) * matrix(h)))
          return "M(gh) != M(g)M(h) at g=" + G.element(g).cycle_string() + ", h=" + G.element(h).cycle_string();
    }
    return std::nullopt;
  }

 private:
  SubgroupRef acting_;
  std::size_t rank_;
  std::vector<IntMatrix> rep_;
};

inline Lattice lattice_tensor(const Lattice& a, const Lattice& b) {
  if (!(a.acting() == b.acting())) throw Error(ErrorCode::GroupMismatch, "tensor of lattices over different subgroups");
  std::vector<IntMatrix> rep;
  for (Elem g : a.acting().members()) rep.push_back(kron(a.matrix(g), b.matrix(g)));
  return Lattice(a.acting(), a.rank() * b.rank(), std::move(rep));
}

inline Lattice lattice_restrict(const Lattice& L, const SubgroupRef& I) {
  if (!I.is_subgroup_of(L.acting())) throw Error(ErrorCode::NotNested, "restriction to a non-subgroup");
  std::vector<IntMatrix> rep;
  for (Elem g : I.members()) rep.push_back(L.matrix(g));
  return Lattice(I, L.rank(), std::move(rep));
}

/// Z[J] (x)_{Z[I]} L on the basis a_tau (x) e_b, coset index outer. Block
/// (tau, lambda) of M(j) is M_L(a_tau^-1 j a_lambda) when that lies in I.
inline Lattice lattice_induce(const RepSystem& reps, const Lattice& L) {
  if (!(reps.sub() == L.acting())) throw Error(ErrorCode::NotNested, "representative system is over a different subgroup");
  const auto& G = *L.acting().parent();
  const std::size_t r = reps.size(), m = L.rank();
  std::vector<IntMatrix> rep;
  for (Elem j : reps.super().members()) {
    IntMatrix M(r * m, r * m);
    for (std::size_t tau = 0; tau < r; ++tau)
      for (std::size_t lam = 0; lam < r; ++lam) {
        Elem x = G.mul(G.mul(G.inv(reps[tau]), j), reps[lam]);
        if (!reps.sub().contains(x)) continue;
        const IntMatrix& B = L.matrix(x);
        for (std::size_t a = 0; a < m; ++a)
          for (std::size_t b = 0; b < m; ++b) M(tau * m + a, lam * m + b) = B(a, b);
      }
    rep.push_back(std::move(M));
  }
  return Lattice(reps.super(), r * m, std::move(rep));
}

/// T is a lattice map L1 -> L2: T M1(g) = M2(g) T for all g.
inline bool is_intertwiner(const Lattice& L1, const Lattice& L2, const IntMatrix& T) {
  if (!(L1.acting() == L2.acting()) || T.rows() != L2.rank() || T.cols() != L1.rank()) return false;
  for (Elem g : L1.acting().members())
    if (!(T * L1.matrix(g) == L2.matrix(g) * T)) return false;
  return true;
}

/// Group average sum_g M2(g) X M1(g^-1): an intertwiner for any X.
inline IntMatrix reynolds(const Lattice& L1, const Lattice& L2, const IntMatrix& X) {
  const auto& G = *L1.acting().parent();
  IntMatrix acc(L2.rank(), L1.rank());
  for (Elem g : L1.acting().members()) acc = acc + L2.matrix(g) * X * L1.matrix(G.inv(g));
  return acc;
}

}  // namespace mackey
