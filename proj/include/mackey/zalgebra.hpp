#pragma once

#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mackey/groups.hpp"
#include "mackey/integer.hpp"

namespace mackey {

/// Ring element: coordinates on the algebra basis.
using ZVec = IntVector;

/// Associative unital Z-algebra, free of rank d, given by structure constants
/// e_i * e_j = sum_k c[i][j][k] e_k.
class ZAlgebra {
 public:
  ZAlgebra(std::string name, std::size_t rank, std::vector<std::vector<ZVec>> structure, ZVec unit)
      : name_(std::move(name)), rank_(rank), structure_(std::move(structure)), unit_(std::move(unit)) {
    if (structure_.size() != rank_ || unit_.size() != rank_)
      throw Error(ErrorCode::InvalidAlgebra, name_ + ": structure/unit shape does not match rank");
    for (const auto& row : structure_) {
      if (row.size() != rank_) throw Error(ErrorCode::InvalidAlgebra, name_ + ": structure row has wrong length");
      for (const auto& v : row)
        if (v.size() != rank_) throw Error(ErrorCode::InvalidAlgebra, name_ + ": structure vector has wrong length");
    }
    for (std::size_t i = 0; i < rank_; ++i) {
      if (mul(unit_, basis(i)) != basis(i) || mul(basis(i), unit_) != basis(i))
        throw Error(ErrorCode::InvalidAlgebra, name_ + ": unit law fails on e_" + std::to_string(i));
      for (std::size_t j = 0; j < rank_; ++j)
        for (std::size_t k = 0; k < rank_; ++k)
          if (mul(mul(basis(i), basis(j)), basis(k)) != mul(basis(i), mul(basis(j), basis(k))))
            throw Error(ErrorCode::InvalidAlgebra, name_ + ": associativity fails on a basis triple");
    }
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t rank() const noexcept { return rank_; }
  const ZVec& one() const noexcept { return unit_; }
  ZVec zero() const { return ZVec(rank_); }
  const std::vector<std::vector<ZVec>>& structure() const noexcept { return structure_; }

  ZVec basis(std::size_t i) const {
    ZVec v(rank_);
    v.at(i) = 1;
    return v;
  }

  ZVec scalar(const Int& n) const {
    ZVec v = unit_;
    for (auto& x : v) x *= n;
    return v;
  }

  ZVec mul(const ZVec& x, const ZVec& y) const {
    if (x.size() != rank_ || y.size() != rank_) throw Error(ErrorCode::DimensionMismatch, "ring element has wrong rank");
    ZVec out(rank_);
    for (std::size_t i = 0; i < rank_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < rank_; ++j) {
        if (y[j] == 0) continue;
        const Int xy = x[i] * y[j];
        const ZVec& c = structure_[i][j];
        for (std::size_t k = 0; k < rank_; ++k)
          if (c[k] != 0) out[k] += xy * c[k];
      }
    }
    return out;
  }

  static ZVec add(const ZVec& x, const ZVec& y) {
    ZVec out = x;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += y[i];
    return out;
  }

 private:
  std::string name_;
  std::size_t rank_;
  std::vector<std::vector<ZVec>> structure_;
  ZVec unit_;
};

using RingPtr = std::shared_ptr<const ZAlgebra>;

inline ZVec ring_mul(const ZAlgebra& R, const ZVec& x, const ZVec& y) { return R.mul(x, y); }

/// Z-linear ring automorphism, acting on coordinate columns.
struct RingAutomorphism {
  IntMatrix matrix;

  ZVec apply(const ZVec& x) const { return matrix.apply(x); }

  friend bool operator==(const RingAutomorphism&, const RingAutomorphism&) = default;
};

/// Failure of one of the action laws, with the offending elements.
struct ActionViolation {
  std::string law;
  Elem g = 0;
  Elem h = 0;
  std::size_t basis_i = 0;
  std::size_t basis_j = 0;
};

/// Right action g -> sigma_g = g^* of a group on a ring: sigma_gh = sigma_h o sigma_g.
class RingAction {
 public:
  /// Raw sigma table, one automorphism per group element. Unchecked; see validate_action.
  RingAction(GroupPtr group, RingPtr ring, std::vector<RingAutomorphism> sigma)
      : group_(std::move(group)), ring_(std::move(ring)), sigma_(std::move(sigma)) {
    if (sigma_.size() != group_->order()) throw Error(ErrorCode::DimensionMismatch, "one automorphism per element required");
    for (const auto& s : sigma_)
      if (s.matrix.rows() != ring_->rank() || s.matrix.cols() != ring_->rank())
        throw Error(ErrorCode::DimensionMismatch, "automorphism matrix has wrong size");
  }

  static RingAction trivial(GroupPtr group, RingPtr ring) {
    std::vector<RingAutomorphism> s(group->order(), RingAutomorphism{IntMatrix::identity(ring->rank())});
    return RingAction(std::move(group), std::move(ring), std::move(s));
  }

  /// Extends a left action tau given on generators to a homomorphism, then
  /// stores sigma_g = tau(g^-1). Throws ActionViolation if tau is not
  /// consistent with the group relations.
  static RingAction from_left_generators(GroupPtr group, RingPtr ring, const std::vector<IntMatrix>& tau_gens) {
    const auto& G = *group;
    if (tau_gens.size() != G.generators().size())
      throw Error(ErrorCode::ActionViolation, "one matrix per generator required");
    std::vector<std::optional<IntMatrix>> tau(G.order());
    tau[FiniteGroup::identity()] = IntMatrix::identity(ring->rank());
    std::deque<Elem> queue{FiniteGroup::identity()};
    while (!queue.empty()) {
      Elem x = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < G.generators().size(); ++k) {
        Elem y = G.mul(x, G.generators()[k]);
        IntMatrix t = *tau[x] * tau_gens[k];
        if (!tau[y]) {
          tau[y] = std::move(t);
          queue.push_back(y);
        } else if (!(*tau[y] == t)) {
          throw Error(ErrorCode::ActionViolation,
                      "generator matrices do not define a homomorphism (at " + G.element(y).cycle_string() + ")");
        }
      }
    }
    std::vector<RingAutomorphism> sigma(G.order());
    for (Elem g = 0; g < G.order(); ++g) sigma[g] = RingAutomorphism{*tau[G.inv(g)]};
    return RingAction(std::move(group), std::move(ring), std::move(sigma));
  }

  const GroupPtr& group() const noexcept { return group_; }
  const RingPtr& ring() const noexcept { return ring_; }
  const RingAutomorphism& sigma(Elem g) const { return sigma_.at(g); }
  ZVec apply(Elem g, const ZVec& x) const { return sigma_.at(g).apply(x); }

  bool is_trivial() const {
    const IntMatrix id = IntMatrix::identity(ring_->rank());
    for (const auto& s : sigma_)
      if (!(s.matrix == id)) return false;
    return true;
  }

 private:
  GroupPtr group_;
  RingPtr ring_;
  std::vector<RingAutomorphism> sigma_;
};

using ActionPtr = std::shared_ptr<const RingAction>;

/// Exhaustive check of the right-action laws: sigma_e = id, sigma_gh =
/// sigma_h o sigma_g, every sigma_g fixes the unit, preserves the structure
/// constants and is invertible over Z.
inline std::optional<ActionViolation> validate_action(const FiniteGroup& G, const ZAlgebra& R, const RingAction& action) {
  if (action.group()->order() != G.order() || action.ring()->rank() != R.rank())
    throw Error(ErrorCode::GroupMismatch, "action belongs to a different group or ring");
  const std::size_t d = R.rank();
  if (!(action.sigma(FiniteGroup::identity()).matrix == IntMatrix::identity(d))) return ActionViolation{"identity", 0, 0};
  for (Elem g = 0; g < G.order(); ++g) {
    const auto& s = action.sigma(g);
    if (!is_unimodular(s.matrix)) return ActionViolation{"invertible", g, g};
    if (s.apply(R.one()) != R.one()) return ActionViolation{"unit", g, g};
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (s.apply(R.mul(R.basis(i), R.basis(j))) != R.mul(s.apply(R.basis(i)), s.apply(R.basis(j))))
          return ActionViolation{"multiplicative", g, g, i, j};
    for (Elem h = 0; h < G.order(); ++h)
      if (!(action.sigma(G.mul(g, h)).matrix == action.sigma(h).matrix * s.matrix))
        return ActionViolation{"composition", g, h};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Matrices over the ring

/// rows x cols matrix with ring entries, row-major.
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(std::size_t rows, std::size_t cols, std::size_t coeff_rank)
      : rows_(rows), cols_(cols), coeff_rank_(coeff_rank), entries_(rows * cols, ZVec(coeff_rank)) {}

  static RMatrix identity(const ZAlgebra& R, std::size_t n) {
    RMatrix m(n, n, R.rank());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R.one();
    return m;
  }

  /// Integer matrix embedded through n -> n * 1.
  static RMatrix from_integers(const ZAlgebra& R, const IntMatrix& a) {
    RMatrix m(a.rows(), a.cols(), R.rank());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = R.scalar(a(i, j));
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t coeff_rank() const noexcept { return coeff_rank_; }

  ZVec& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const ZVec& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!mackey::is_zero(e)) return false;
    return true;
  }

  /// Copy `b` into the block whose top-left corner is (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const RMatrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  RMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
    RMatrix out(rows, cols, coeff_rank_);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }

  friend bool operator==(const RMatrix& a, const RMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.coeff_rank_ == b.coeff_rank_ && a.entries_ == b.entries_;
  }

  RMatrix& operator+=(const RMatrix& b) {
    if (b.rows_ != rows_ || b.cols_ != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum size mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k)
      for (std::size_t c = 0; c < coeff_rank_; ++c) entries_[k][c] += b.entries_[k][c];
    return *this;
  }

  std::string str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r) os << ", ";
      os << '[';
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c) os << ", ";
        os << '[';
        const auto& e = (*this)(r, c);
        for (std::size_t k = 0; k < e.size(); ++k) os << (k ? "," : "") << e[k];
        os << ']';
      }
      os << ']';
    }
    os << ']';
    return os.str();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t coeff_rank_ = 0;
  std::vector<ZVec> entries_;
};

/// (a b)_{ik} = sum_j a_ij * b_jk, ring products taken in that order.
inline RMatrix rmat_mul(const ZAlgebra& R, const RMatrix& a, const RMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "ring matrix product size mismatch");
  RMatrix out(a.rows(), b.cols(), R.rank());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const ZVec& aij = a(i, j);
      if (is_zero(aij)) continue;
      for (std::size_t k = 0; k < b.cols(); ++k) {
        const ZVec& bjk = b(j, k);
        if (is_zero(bjk)) continue;
        ZVec p = R.mul(aij, bjk);
        ZVec& o = out(i, k);
        for (std::size_t c = 0; c < p.size(); ++c) o[c] += p[c];
      }
    }
  return out;
}

/// sigma applied entrywise.
inline RMatrix twist(const RingAutomorphism& sigma, const RMatrix& m) {
  RMatrix out(m.rows(), m.cols(), m.coeff_rank());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) out(i, j) = sigma.apply(m(i, j));
  return out;
}

/// Block (a, b) of the result is s(a, b) * m: the integer matrix with m
/// multiplied into its entries.
inline RMatrix int_kron(const IntMatrix& s, const RMatrix& m) {
  RMatrix out(s.rows() * m.rows(), s.cols() * m.cols(), m.coeff_rank());
  for (std::size_t a = 0; a < s.rows(); ++a)
    for (std::size_t b = 0; b < s.cols(); ++b) {
      const Int& k = s(a, b);
      if (k == 0) continue;
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
          ZVec e = m(i, j);
          for (auto& x : e) x *= k;
          out(a * m.rows() + i, b * m.cols() + j) = std::move(e);
        }
    }
  return out;
}

inline RMatrix rmat_direct_sum(const RMatrix& a, const RMatrix& b) {
  RMatrix out(a.rows() + b.rows(), a.cols() + b.cols(), std::max(a.coeff_rank(), b.coeff_rank()));
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

// ---------------------------------------------------------------------------
// Named rings

inline RingPtr ring_integers() {
  return std::make_shared<const ZAlgebra>("Z", 1, std::vector<std::vector<ZVec>>{{ZVec{1}}}, ZVec{1});
}

/// Basis (1, i).
inline RingPtr ring_gaussian() {
  return std::make_shared<const ZAlgebra>(
      "Z[i]", 2, std::vector<std::vector<ZVec>>{{ZVec{1, 0}, ZVec{0, 1}}, {ZVec{0, 1}, ZVec{-1, 0}}}, ZVec{1, 0});
}

/// Group ring of C_n, basis t^0, ..., t^{n-1}.
inline RingPtr ring_cyclic_group_ring(std::size_t n) {
  std::vector<std::vector<ZVec>> c(n, std::vector<ZVec>(n, ZVec(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j][(i + j) % n] = 1;
  ZVec u(n);
  u[0] = 1;
  return std::make_shared<const ZAlgebra>("Z[C" + std::to_string(n) + "]", n, std::move(c), std::move(u));
}

/// Z^n with coordinatewise product.
inline RingPtr ring_product(std::size_t n, std::string name) {
  std::vector<std::vector<ZVec>> c(n, std::vector<ZVec>(n, ZVec(n)));
  for (std::size_t i = 0; i < n; ++i) c[i][i][i] = 1;
  return std::make_shared<const ZAlgebra>(std::move(name), n, std::move(c), ZVec(n, Int(1)));
}

/// Ring plus the standard left action its name implies on a given group.
/// "Z[i]", "Z[C3]" and "ZxZ-swap" let odd permutations act by complex
/// conjugation, t -> t^2, and the factor swap respectively; even ones act
/// trivially. "Z^n-perm" is Z^degree with g permuting coordinates.
struct RingSetup {
  RingPtr ring;
  ActionPtr action;
};

inline RingSetup sign_twisted_setup(const GroupPtr& G, RingPtr ring, const IntMatrix& odd_involution) {
  std::vector<IntMatrix> tau;
  for (Elem g : G->generators())
    tau.push_back(G->element(g).is_odd() ? odd_involution : IntMatrix::identity(ring->rank()));
  auto action = std::make_shared<const RingAction>(RingAction::from_left_generators(G, ring, tau));
  return {std::move(ring), std::move(action)};
}

inline IntMatrix permutation_matrix(const Perm& p) {
  IntMatrix m(p.degree(), p.degree());
  for (std::uint32_t x = 0; x < p.degree(); ++x) m(p(x), x) = 1;
  return m;
}

inline RingSetup named_ring(const std::string& name, const GroupPtr& G, bool twisted = true) {
  RingSetup out;
  if (name == "Z") {
    out.ring = ring_integers();
    out.action = std::make_shared<const RingAction>(RingAction::trivial(G, out.ring));
    return out;
  }
  if (name == "Z[i]") return twisted ? sign_twisted_setup(G, ring_gaussian(), IntMatrix{{1, 0}, {0, -1}})
                                     : RingSetup{ring_gaussian(), std::make_shared<const RingAction>(RingAction::trivial(G, ring_gaussian()))};
  if (name == "Z[C3]") {
    auto R = ring_cyclic_group_ring(3);
    if (!twisted) return {R, std::make_shared<const RingAction>(RingAction::trivial(G, R))};
    return sign_twisted_setup(G, R, IntMatrix{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
  }
  if (name == "ZxZ-swap") {
    auto R = ring_product(2, "ZxZ-swap");
    if (!twisted) return {R, std::make_shared<const RingAction>(RingAction::trivial(G, R))};
    return sign_twisted_setup(G, R, IntMatrix{{0, 1}, {1, 0}});
  }
  if (name == "Z^n-perm") {
    auto R = ring_product(G->degree(), "Z^n-perm");
    if (!twisted) return {R, std::make_shared<const RingAction>(RingAction::trivial(G, R))};
    std::vector<IntMatrix> tau;
    for (Elem g : G->generators()) tau.push_back(permutation_matrix(G->element(g)));
    auto action = std::make_shared<const RingAction>(RingAction::from_left_generators(G, R, tau));
    return {R, std::move(action)};
  }
  throw Error(ErrorCode::InputError, "unknown ring '" + name + "'");
}

}  // namespace mackey
