#pragma once

#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mackey/groups.hpp"
#include "mackey/zalgebra.hpp"

namespace mackey {

/// Free module of the given rank over the coefficient ring.
struct TGObject {
  std::size_t rank = 0;
  friend bool operator==(const TGObject&, const TGObject&) = default;
};

/// Formal sum sum_g phi^g g, phi^g : A -> g^*B a codomain x domain matrix.
/// Zero components are never stored, so equality is plain comparison.
class TGMorphism {
 public:
  TGMorphism() = default;
  TGMorphism(TGObject domain, TGObject codomain, std::size_t coeff_rank)
      : domain_(domain), codomain_(codomain), coeff_rank_(coeff_rank) {}

  const TGObject& domain() const noexcept { return domain_; }
  const TGObject& codomain() const noexcept { return codomain_; }
  std::size_t coeff_rank() const noexcept { return coeff_rank_; }
  const std::map<Elem, RMatrix>& components() const noexcept { return parts_; }

  std::vector<Elem> support() const {
    std::vector<Elem> s;
    for (const auto& [g, _] : parts_) s.push_back(g);
    return s;
  }

  /// Component at g, or the zero matrix.
  RMatrix at(Elem g) const {
    auto it = parts_.find(g);
    return it == parts_.end() ? RMatrix(codomain_.rank, domain_.rank, coeff_rank_) : it->second;
  }

  void add(Elem g, const RMatrix& m) {
    if (m.rows() != codomain_.rank || m.cols() != domain_.rank)
      throw Error(ErrorCode::DimensionMismatch, "component has wrong shape");
    auto it = parts_.find(g);
    if (it == parts_.end()) {
      if (!m.is_zero()) parts_.emplace(g, m);
      return;
    }
    it->second += m;
    if (it->second.is_zero()) parts_.erase(it);
  }

  friend bool operator==(const TGMorphism& a, const TGMorphism& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.parts_ == b.parts_;
  }

  std::string str(const FiniteGroup& G) const {
    std::ostringstream os;
    os << "{" << domain_.rank << " -> " << codomain_.rank << ":";
    for (const auto& [g, m] : parts_) os << " " << G.element(g).cycle_string() << "=" << m.str();
    os << "}";
    return os.str();
  }

 private:
  TGObject domain_, codomain_;
  std::size_t coeff_rank_ = 0;
  std::map<Elem, RMatrix> parts_;
};

inline RMatrix apply_twist(const RingAction& action, Elem g, const RMatrix& m) { return twist(action.sigma(g), m); }

/// The category A_alpha[I] sitting inside A_alpha[G]: morphism supports must lie in I.
class TwistedCategoryCtx {
 public:
  TwistedCategoryCtx(ActionPtr action, SubgroupRef sub) : action_(std::move(action)), sub_(std::move(sub)) {
    if (sub_.parent() != action_->group()) throw Error(ErrorCode::GroupMismatch, "subgroup of a different group");
  }
  static TwistedCategoryCtx whole(const ActionPtr& action) {
    return TwistedCategoryCtx(action, SubgroupRef::whole(action->group()));
  }

  const ActionPtr& action() const noexcept { return action_; }
  const FiniteGroup& group() const { return *action_->group(); }
  const ZAlgebra& ring() const { return *action_->ring(); }
  const SubgroupRef& sub() const noexcept { return sub_; }

  TwistedCategoryCtx with_subgroup(SubgroupRef sub) const { return TwistedCategoryCtx(action_, std::move(sub)); }

  bool same_as(const TwistedCategoryCtx& o) const { return action_ == o.action_ && sub_ == o.sub_; }

  void check_support(const TGMorphism& phi) const {
    for (const auto& [g, _] : phi.components())
      if (!sub_.contains(g))
        throw Error(ErrorCode::SupportViolation, "component at " + group().element(g).cycle_string() + " outside the subgroup");
  }

  TGMorphism zero(TGObject a, TGObject b) const { return TGMorphism(a, b, ring().rank()); }

  TGMorphism identity(TGObject a) const {
    TGMorphism id(a, a, ring().rank());
    id.add(FiniteGroup::identity(), RMatrix::identity(ring(), a.rank));
    return id;
  }

  /// Single component m at g.
  TGMorphism monomial(TGObject a, TGObject b, Elem g, const RMatrix& m) const {
    TGMorphism phi(a, b, ring().rank());
    phi.add(g, m);
    check_support(phi);
    return phi;
  }

  /// (psi o phi)^g = sum_{hk=g} k^*(psi^h) phi^k.
  TGMorphism compose(const TGMorphism& psi, const TGMorphism& phi) const {
    if (!(phi.codomain() == psi.domain())) throw Error(ErrorCode::DimensionMismatch, "morphisms are not composable");
    check_support(psi);
    check_support(phi);
    const auto& G = group();
    TGMorphism out(phi.domain(), psi.codomain(), ring().rank());
    for (const auto& [h, ph] : psi.components())
      for (const auto& [k, pk] : phi.components()) out.add(G.mul(h, k), rmat_mul(ring(), twist(action_->sigma(k), ph), pk));
    return out;
  }

  TGMorphism sum(const TGMorphism& a, const TGMorphism& b) const {
    if (!(a.domain() == b.domain()) || !(a.codomain() == b.codomain()))
      throw Error(ErrorCode::DimensionMismatch, "sum of morphisms with different ends");
    TGMorphism out = a;
    for (const auto& [g, m] : b.components()) out.add(g, m);
    return out;
  }

  /// Both composites are identities. Shape mismatches give false.
  bool verify_inverse_pair(const TGMorphism& phi, const TGMorphism& psi) const {
    if (!(phi.codomain() == psi.domain()) || !(psi.codomain() == phi.domain())) return false;
    return compose(psi, phi) == identity(phi.domain()) && compose(phi, psi) == identity(phi.codomain());
  }

 private:
  ActionPtr action_;
  SubgroupRef sub_;
};

/// (phi1 (+) phi2)^g = diag(phi1^g, phi2^g).
inline TGMorphism direct_sum(const TwistedCategoryCtx& c1, const TGMorphism& a, const TwistedCategoryCtx& c2,
                             const TGMorphism& b) {
  if (!c1.same_as(c2)) throw Error(ErrorCode::ContextMismatch, "direct sum across different categories");
  TGMorphism out({a.domain().rank + b.domain().rank}, {a.codomain().rank + b.codomain().rank}, c1.ring().rank());
  std::set<Elem> support;
  for (const auto& [g, _] : a.components()) support.insert(g);
  for (const auto& [g, _] : b.components()) support.insert(g);
  for (Elem g : support) out.add(g, rmat_direct_sum(a.at(g), b.at(g)));
  return out;
}

inline TGMorphism direct_sum(const TwistedCategoryCtx& ctx, const std::vector<TGMorphism>& parts) {
  TGMorphism acc(TGObject{0}, TGObject{0}, ctx.ring().rank());
  for (const auto& p : parts) acc = direct_sum(ctx, acc, ctx, p);
  return acc;
}

/// Seeded random morphisms: entries uniform in [-3, 3], one to three
/// support elements drawn from the context subgroup.
class MorphismSampler {
 public:
  explicit MorphismSampler(std::uint64_t seed) : rng_(seed) {}

  std::size_t rank(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }

  RMatrix matrix(std::size_t rows, std::size_t cols, std::size_t coeff_rank) {
    std::uniform_int_distribution<int> entry(-3, 3);
    RMatrix m(rows, cols, coeff_rank);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t c = 0; c < coeff_rank; ++c) m(i, j)[c] = entry(rng_);
    return m;
  }

  TGMorphism morphism(const TwistedCategoryCtx& ctx, TGObject a, TGObject b) {
    const auto& mem = ctx.sub().members();
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(3, mem.size()))(rng_);
    TGMorphism phi(a, b, ctx.ring().rank());
    std::uniform_int_distribution<std::size_t> pick(0, mem.size() - 1);
    for (std::size_t n = 0; n < k; ++n) phi.add(mem[pick(rng_)], matrix(b.rank, a.rank, ctx.ring().rank()));
    return phi;
  }

  Elem element(const SubgroupRef& H) {
    return H.members()[std::uniform_int_distribution<std::size_t>(0, H.order() - 1)(rng_)];
  }

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace mackey
