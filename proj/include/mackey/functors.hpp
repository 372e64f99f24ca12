#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mackey/lattice.hpp"
#include "mackey/twisted.hpp"

namespace mackey {

// ---------------------------------------------------------------------------
// The functors

/// Inclusion A_alpha[I] -> A_alpha[J]; only the support is checked.
inline TGMorphism ind_apply(const SubgroupRef& I, const SubgroupRef& J, const TGMorphism& phi) {
  if (!I.is_subgroup_of(J)) throw Error(ErrorCode::NotNested, "Ind needs I <= J");
  for (Elem g : phi.support())
    if (!I.contains(g)) throw Error(ErrorCode::SupportViolation, "Ind applied to a morphism not supported in I");
  return phi;
}
inline TGObject ind_apply(const TGObject& a) { return a; }

inline TGObject res_apply(const RepSystem& reps, const TGObject& a) { return {a.rank * reps.size()}; }

/// Component at i in I: block (tau, lambda) is sigma_{a_lambda}(phi^{a_tau i a_lambda^-1}).
inline TGMorphism res_apply(const RingAction& action, const RepSystem& reps, const TGMorphism& phi) {
  const auto& G = *action.group();
  for (Elem g : phi.support())
    if (!reps.super().contains(g)) throw Error(ErrorCode::SupportViolation, "Res applied to a morphism not supported in J");
  const std::size_t r = reps.size(), n = phi.codomain().rank, m = phi.domain().rank;
  TGMorphism out(res_apply(reps, phi.domain()), res_apply(reps, phi.codomain()), phi.coeff_rank());
  for (Elem i : reps.sub().members()) {
    RMatrix big(r * n, r * m, phi.coeff_rank());
    bool any = false;
    for (std::size_t tau = 0; tau < r; ++tau)
      for (std::size_t lam = 0; lam < r; ++lam) {
        const Elem g = G.mul(G.mul(reps[tau], i), G.inv(reps[lam]));
        auto it = phi.components().find(g);
        if (it == phi.components().end()) continue;
        big.set_block(tau * n, lam * m, twist(action.sigma(reps[lam]), it->second));
        any = true;
      }
    if (any) out.add(i, big);
  }
  return out;
}

/// c_f(phi)^{f i f^-1} = sigma_{f^-1}(phi^i).
inline TGMorphism conj_apply(const RingAction& action, Elem f, const SubgroupRef& I, const TGMorphism& phi) {
  const auto& G = *action.group();
  TGMorphism out(phi.domain(), phi.codomain(), phi.coeff_rank());
  for (const auto& [i, m] : phi.components()) {
    if (!I.contains(i)) throw Error(ErrorCode::SupportViolation, "c_f applied to a morphism not supported in I");
    out.add(G.conjugate(f, i), twist(action.sigma(G.inv(f)), m));
  }
  return out;
}

inline TGObject theta_apply(const Lattice& L, const TGObject& a) { return {L.rank() * a.rank}; }

/// Theta(M, phi) for a lattice map M : L1 -> L2: component at i is the
/// block matrix (M M_{L1}(i)) (x) phi^i.
inline TGMorphism theta_apply(const Lattice& L1, const Lattice& L2, const IntMatrix& M, const TGMorphism& phi) {
  if (!(L1.acting() == L2.acting())) throw Error(ErrorCode::GroupMismatch, "lattice map between different subgroups");
  if (M.rows() != L2.rank() || M.cols() != L1.rank()) throw Error(ErrorCode::DimensionMismatch, "lattice map has wrong size");
  TGMorphism out(theta_apply(L1, phi.domain()), theta_apply(L2, phi.codomain()), phi.coeff_rank());
  for (const auto& [i, m] : phi.components()) {
    if (!L1.acting().contains(i)) throw Error(ErrorCode::GroupMismatch, "morphism support outside the lattice's group");
    out.add(i, int_kron(M * L1.matrix(i), m));
  }
  return out;
}

inline TGMorphism theta_apply(const Lattice& L, const TGMorphism& phi) {
  return theta_apply(L, L, IntMatrix::identity(L.rank()), phi);
}

// ---------------------------------------------------------------------------
// Descriptors

/// A functor between twisted group categories, as data.
struct FunctorDescriptor {
  enum class Kind { Ind, Res, Conj, Theta, Composite };
  Kind kind = Kind::Ind;
  SubgroupRef I, J;                      // Ind(I, J), Res(I, J), Conj(f, I), Theta over I
  std::optional<RepSystem> reps;         // Res
  Elem f = 0;                            // Conj
  std::shared_ptr<const Lattice> lattice;  // Theta
  std::vector<FunctorDescriptor> parts;  // Composite, applied first to last

  static FunctorDescriptor ind(SubgroupRef I, SubgroupRef J) {
    FunctorDescriptor d;
    d.kind = Kind::Ind;
    d.I = std::move(I);
    d.J = std::move(J);
    return d;
  }
  static FunctorDescriptor res(RepSystem reps) {
    FunctorDescriptor d;
    d.kind = Kind::Res;
    d.I = reps.sub();
    d.J = reps.super();
    d.reps = std::move(reps);
    return d;
  }
  static FunctorDescriptor conj(Elem f, SubgroupRef I) {
    FunctorDescriptor d;
    d.kind = Kind::Conj;
    d.f = f;
    d.I = std::move(I);
    return d;
  }
  static FunctorDescriptor theta(Lattice L) {
    FunctorDescriptor d;
    d.kind = Kind::Theta;
    d.I = L.acting();
    d.lattice = std::make_shared<const Lattice>(std::move(L));
    return d;
  }
  static FunctorDescriptor composite(std::vector<FunctorDescriptor> parts) {
    FunctorDescriptor d;
    d.kind = Kind::Composite;
    d.parts = std::move(parts);
    return d;
  }

  /// Subgroup whose category the functor starts from.
  SubgroupRef source() const {
    switch (kind) {
      case Kind::Res: return J;
      case Kind::Composite: return parts.front().source();
      default: return I;
    }
  }
  SubgroupRef target() const {
    switch (kind) {
      case Kind::Ind: return J;
      case Kind::Res: return I;
      case Kind::Conj: return I.conjugate(f);
      case Kind::Theta: return I;
      case Kind::Composite: return parts.back().target();
    }
    return I;
  }

  TGObject apply(const TGObject& a) const {
    switch (kind) {
      case Kind::Ind: return a;
      case Kind::Res: return res_apply(*reps, a);
      case Kind::Conj: return a;
      case Kind::Theta: return theta_apply(*lattice, a);
      case Kind::Composite: {
        TGObject x = a;
        for (const auto& p : parts) x = p.apply(x);
        return x;
      }
    }
    return a;
  }

  TGMorphism apply(const RingAction& action, const TGMorphism& phi) const {
    switch (kind) {
      case Kind::Ind: return ind_apply(I, J, phi);
      case Kind::Res: return res_apply(action, *reps, phi);
      case Kind::Conj: return conj_apply(action, f, I, phi);
      case Kind::Theta: return theta_apply(*lattice, phi);
      case Kind::Composite: {
        TGMorphism x = phi;
        for (const auto& p : parts) x = p.apply(action, x);
        return x;
      }
    }
    return phi;
  }

  std::string name() const {
    const auto& G = *(kind == Kind::Composite ? parts.front().source() : I).parent();
    auto sub = [&](const SubgroupRef& H) { return "|" + std::to_string(H.order()) + "|"; };
    switch (kind) {
      case Kind::Ind: return "Ind" + sub(I) + "->" + sub(J);
      case Kind::Res: return "Res" + sub(J) + "->" + sub(I);
      case Kind::Conj: return "c_" + G.element(f).cycle_string();
      case Kind::Theta: return "Theta(rank " + std::to_string(lattice->rank()) + ")";
      case Kind::Composite: {
        std::string s;
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) s += (s.empty() ? "" : " o ") + it->name();
        return s;
      }
    }
    return "?";
  }
};

/// Factor by which the functor scales object rank.
inline Int k0_multiplier(const FunctorDescriptor& d) {
  switch (d.kind) {
    case FunctorDescriptor::Kind::Ind: return 1;
    case FunctorDescriptor::Kind::Res: return static_cast<long long>(d.reps->size());
    case FunctorDescriptor::Kind::Conj: return 1;
    case FunctorDescriptor::Kind::Theta: return static_cast<long long>(d.lattice->rank());
    case FunctorDescriptor::Kind::Composite: {
      Int k = 1;
      for (const auto& p : d.parts) k *= k0_multiplier(p);
      return k;
    }
  }
  return 1;
}

// ---------------------------------------------------------------------------
// Representative systems used by the checks

/// Deterministic list of distinct systems for I <= J: the canonical one,
/// representatives shifted by right multiplication with members of I, and
/// the reversed orderings.
inline std::vector<RepSystem> rep_system_variants(const SubgroupRef& J, const SubgroupRef& I, std::size_t max_count = 8) {
  const RepSystem canon = left_coset_reps(J, I);
  const auto& G = *J.parent();
  std::vector<RepSystem> out{canon};
  auto push = [&](std::vector<Elem> reps) {
    RepSystem r(I, J, std::move(reps));
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  };
  for (std::size_t s = 0; s < I.order() && out.size() < max_count; ++s) {
    std::vector<Elem> shifted;
    for (std::size_t k = 0; k < canon.size(); ++k) shifted.push_back(G.mul(canon[k], I.members()[(s + k) % I.order()]));
    std::vector<Elem> reversed(shifted.rbegin(), shifted.rend());
    push(std::move(shifted));
    if (out.size() < max_count) push(std::move(reversed));
  }
  // rotations of the canonical order
  for (std::size_t s = 1; s < canon.size() && out.size() < max_count; ++s) {
    std::vector<Elem> rotated;
    for (std::size_t k = 0; k < canon.size(); ++k) rotated.push_back(canon[(s + k) % canon.size()]);
    push(std::move(rotated));
  }
  return out;
}

/// K/I representatives b_nu a_mu, mu outer and nu inner, for K/J reps b and J/I reps a.
inline RepSystem product_reps(const RepSystem& outer, const RepSystem& inner) {
  if (!(outer.sub() == inner.super())) throw Error(ErrorCode::IncompatibleRepSystems, "systems do not chain");
  const auto& G = *outer.sub().parent();
  std::vector<Elem> reps;
  for (Elem a : inner.reps())
    for (Elem b : outer.reps()) reps.push_back(G.mul(b, a));
  return RepSystem(inner.sub(), outer.super(), std::move(reps));
}

/// f a_lambda f^-1 for a system of I in J.
inline RepSystem conjugate_reps(const RepSystem& reps, Elem f) {
  const auto& G = *reps.sub().parent();
  std::vector<Elem> out;
  for (Elem a : reps.reps()) out.push_back(G.conjugate(f, a));
  return RepSystem(reps.sub().conjugate(f), reps.super().conjugate(f), std::move(out));
}

/// Data for the double coset formula with I, J <= K: double coset
/// representatives f of J\K/I, the systems of I/(I n f^-1 J f), and the
/// resulting system {a f^-1} of K/J ordered by double coset first.
struct DoubleCosetDecomposition {
  std::vector<Elem> f;
  std::vector<RepSystem> inner;
  RepSystem k_over_j;
};

inline DoubleCosetDecomposition double_coset_decomposition(const SubgroupRef& K, const SubgroupRef& J, const SubgroupRef& I) {
  const auto& G = *K.parent();
  DoubleCosetDecomposition d;
  d.f = double_coset_reps(K, J, I);
  std::vector<Elem> reps;
  for (Elem f : d.f) {
    const SubgroupRef Ip = I.intersect(J.conjugate(G.inv(f)));
    d.inner.push_back(left_coset_reps(I, Ip));
    for (Elem a : d.inner.back().reps()) reps.push_back(G.mul(a, G.inv(f)));
  }
  d.k_over_j = RepSystem(J, K, std::move(reps));
  return d;
}

// ---------------------------------------------------------------------------
// Natural isomorphism witnesses

/// One component of a natural isomorphism together with its inverse.
struct WitnessComponent {
  TGMorphism forward, inverse;
};

/// xi_A : Res(A) -> Res'(A) for two systems of the same pair I <= J. Block
/// (tau, lambda) at i is the identity exactly when a_lambda = a'_tau i.
inline WitnessComponent xi_witness(const RingAction& action, const RepSystem& reps, const RepSystem& reps2, TGObject A) {
  if (!(reps.sub() == reps2.sub()) || !(reps.super() == reps2.super()))
    throw Error(ErrorCode::IncompatibleRepSystems, "xi needs two systems for the same pair");
  const auto& G = *action.group();
  const auto& R = *action.ring();
  const std::size_t r = reps.size(), m = A.rank;
  TGObject src = res_apply(reps, A), dst = res_apply(reps2, A);
  TGMorphism fwd(src, dst, R.rank()), inv(dst, src, R.rank());
  const RMatrix id = RMatrix::identity(R, m);
  for (std::size_t tau = 0; tau < r; ++tau)
    for (std::size_t lam = 0; lam < r; ++lam) {
      const Elem i = G.mul(G.inv(reps2[tau]), reps[lam]);
      if (!reps.sub().contains(i)) continue;
      RMatrix f(r * m, r * m, R.rank()), b(r * m, r * m, R.rank());
      f.set_block(tau * m, lam * m, id);
      b.set_block(lam * m, tau * m, id);
      fwd.add(i, f);
      inv.add(G.inv(i), b);
    }
  return {std::move(fwd), std::move(inv)};
}

/// eta_A : A -> c_f(A) for f in I, the identity placed at f.
inline WitnessComponent eta_witness(const RingAction& action, Elem f, const SubgroupRef& I, TGObject A) {
  if (!I.contains(f)) throw Error(ErrorCode::PreconditionViolated, "eta needs f in I");
  const auto& R = *action.ring();
  TGMorphism fwd(A, A, R.rank()), inv(A, A, R.rank());
  fwd.add(f, RMatrix::identity(R, A.rank));
  inv.add(action.group()->inv(f), RMatrix::identity(R, A.rank));
  return {std::move(fwd), std::move(inv)};
}

/// omega_A : Ind Theta(L, Res A) -> Theta(Ind L, A) for L over I and A over J.
/// The source is lattice-index outer, the target coset-index outer; the
/// component at a_lambda moves block (b, lambda) to block (lambda, b).
inline WitnessComponent omega_witness(const RingAction& action, const RepSystem& reps, const Lattice& L, TGObject A) {
  if (!(reps.sub() == L.acting())) throw Error(ErrorCode::GroupMismatch, "lattice is not over the representative subgroup");
  const auto& G = *action.group();
  const auto& R = *action.ring();
  const std::size_t r = reps.size(), m = L.rank(), a = A.rank;
  TGObject obj{r * m * a};
  TGMorphism fwd(obj, obj, R.rank()), inv(obj, obj, R.rank());
  const RMatrix id = RMatrix::identity(R, a);
  for (std::size_t lam = 0; lam < r; ++lam) {
    RMatrix f(r * m * a, r * m * a, R.rank()), b(r * m * a, r * m * a, R.rank());
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t src = (k * r + lam) * a, dst = (lam * m + k) * a;
      f.set_block(dst, src, id);
      b.set_block(src, dst, id);
    }
    fwd.add(reps[lam], f);
    inv.add(G.inv(reps[lam]), b);
  }
  return {std::move(fwd), std::move(inv)};
}

// ---------------------------------------------------------------------------
// Checks

/// Outcome of one extensional check.
struct CheckResult {
  bool pass = true;
  std::size_t samples = 0;
  std::string counterexample;

  void fail(std::string what) {
    if (pass) counterexample = std::move(what);
    pass = false;
  }
  void merge(const CheckResult& o) {
    samples += o.samples;
    if (!o.pass) fail(o.counterexample);
  }
};

/// Sampling knobs shared by the checks.
struct SampleConfig {
  std::size_t samples = 5;
  std::size_t max_rank = 3;
};

namespace detail {
inline std::string describe(const FiniteGroup& G, const std::vector<std::pair<std::string, const SubgroupRef*>>& subs,
                            const std::vector<std::pair<std::string, Elem>>& elems) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, H] : subs) {
    os << (first ? "" : ", ") << n << "={";
    for (std::size_t k = 0; k < H->members().size(); ++k) os << (k ? " " : "") << G.element(H->members()[k]).cycle_string();
    os << "}";
    first = false;
  }
  for (const auto& [n, g] : elems) {
    os << (first ? "" : ", ") << n << "=" << G.element(g).cycle_string();
    first = false;
  }
  return os.str();
}
}  // namespace detail

/// F(psi o phi) = F(psi) o F(phi) and F(id_A) = id_{F(A)}, on sampled pairs
/// and on identities of ranks 0..max_rank.
inline CheckResult check_functoriality(const ActionPtr& action, const FunctorDescriptor& F, MorphismSampler& rng,
                                       const SampleConfig& cfg) {
  CheckResult res;
  const auto src = TwistedCategoryCtx(action, F.source());
  const auto dst = TwistedCategoryCtx(action, F.target());
  for (std::size_t rk = 0; rk <= cfg.max_rank; ++rk)
    if (!(F.apply(*action, src.identity({rk})) == dst.identity(F.apply(TGObject{rk}))))
      res.fail(F.name() + " does not preserve the identity of rank " + std::to_string(rk));
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    TGObject a{rng.rank(1, cfg.max_rank)}, b{rng.rank(1, cfg.max_rank)}, c{rng.rank(1, cfg.max_rank)};
    TGMorphism phi = rng.morphism(src, a, b), psi = rng.morphism(src, b, c);
    if (!(F.apply(*action, src.compose(psi, phi)) == dst.compose(F.apply(*action, psi), F.apply(*action, phi))))
      res.fail(F.name() + " fails F(psi o phi) = F(psi) o F(phi) on " + phi.str(src.group()) + ", " + psi.str(src.group()));
    ++res.samples;
  }
  return res;
}

/// Witness components are inverse pairs on objects up to max_rank, and
/// target(phi) o w_A = w_B o source(phi) on samples.
inline CheckResult check_natural_iso(const ActionPtr& action, const SubgroupRef& over, const FunctorDescriptor& from,
                                     const FunctorDescriptor& to, const std::function<WitnessComponent(TGObject)>& witness,
                                     MorphismSampler& rng, const SampleConfig& cfg, const std::string& label) {
  CheckResult res;
  const auto src = TwistedCategoryCtx(action, from.source());
  const auto dst = TwistedCategoryCtx(action, over);
  for (std::size_t rk = 0; rk <= cfg.max_rank; ++rk) {
    auto w = witness({rk});
    if (!(w.forward.domain() == from.apply(TGObject{rk})) || !(w.forward.codomain() == to.apply(TGObject{rk})))
      res.fail(label + ": witness has the wrong ends at rank " + std::to_string(rk));
    else if (!dst.verify_inverse_pair(w.forward, w.inverse))
      res.fail(label + ": witness at rank " + std::to_string(rk) + " is not invertible");
  }
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    TGObject a{rng.rank(1, cfg.max_rank)}, b{rng.rank(1, cfg.max_rank)};
    TGMorphism phi = rng.morphism(src, a, b);
    auto wa = witness(a), wb = witness(b);
    if (!(dst.compose(to.apply(*action, phi), wa.forward) == dst.compose(wb.forward, from.apply(*action, phi))))
      res.fail(label + ": naturality fails on " + phi.str(src.group()));
    ++res.samples;
  }
  return res;
}

/// Tuple for one Mackey axiom instance: subgroups by lattice index, elements.
struct AxiomTuple {
  std::vector<std::size_t> subgroups;
  std::vector<Elem> elements;
};

/// All admissible tuples for axiom k:
/// (1) I; (2),(3) I <= J <= K; (4) f, g, I; (5),(6) f, I <= J; (7) K, J, I with I, J <= K.
inline std::vector<AxiomTuple> axiom_tuples(int k, const SubgroupLattice& L) {
  std::vector<AxiomTuple> out;
  const std::size_t n = L.size(), order = L.group()->order();
  switch (k) {
    case 1:
      for (std::size_t i = 0; i < n; ++i) out.push_back({{i}, {}});
      break;
    case 2:
    case 3:
      for (std::size_t kk = 0; kk < n; ++kk)
        for (std::size_t j : L.subgroups_of(kk))
          for (std::size_t i : L.subgroups_of(j)) out.push_back({{i, j, kk}, {}});
      break;
    case 4:
      for (Elem f = 0; f < order; ++f)
        for (Elem g = 0; g < order; ++g)
          for (std::size_t i = 0; i < n; ++i) out.push_back({{i}, {f, g}});
      break;
    case 5:
    case 6:
      for (Elem f = 0; f < order; ++f)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t i : L.subgroups_of(j)) out.push_back({{i, j}, {f}});
      break;
    case 7:
      for (std::size_t kk = 0; kk < n; ++kk)
        for (std::size_t j : L.subgroups_of(kk))
          for (std::size_t i : L.subgroups_of(kk)) out.push_back({{kk, j, i}, {}});
      break;
    default: throw Error(ErrorCode::InputError, "axiom number must be 1..7");
  }
  return out;
}

/// Extensional check of Mackey axiom k on one tuple, as strict equality of
/// functors on sampled morphisms (axiom 1 for c_f uses the eta witness).
inline CheckResult mackey_axiom_check(int k, const ActionPtr& action, const SubgroupLattice& L, const AxiomTuple& t,
                                      MorphismSampler& rng, const SampleConfig& cfg) {
  const auto& G = *action->group();
  CheckResult res;
  auto sample = [&](const SubgroupRef& H) {
    TwistedCategoryCtx ctx(action, H);
    return rng.morphism(ctx, {rng.rank(1, cfg.max_rank)}, {rng.rank(1, cfg.max_rank)});
  };
  auto expect = [&](const TGMorphism& lhs, const TGMorphism& rhs, const std::string& what, const TGMorphism& input) {
    if (!(lhs == rhs)) res.fail("axiom " + std::to_string(k) + " " + what + " on " + input.str(G));
  };
  switch (k) {
    case 1: {
      const SubgroupRef& I = L[t.subgroups[0]];
      const RepSystem trivial_reps(I, I, {FiniteGroup::identity()});
      for (std::size_t s = 0; s < cfg.samples; ++s, ++res.samples) {
        TGMorphism phi = sample(I);
        const std::string where = detail::describe(G, {{"I", &I}}, {});
        expect(ind_apply(I, I, phi), phi, "Ind_I^I != id (" + where + ")", phi);
        expect(res_apply(*action, trivial_reps, phi), phi, "Res_I^I != id (" + where + ")", phi);
      }
      for (Elem f : I.members()) {
        auto id = FunctorDescriptor::composite({});
        id.parts.push_back(FunctorDescriptor::ind(I, I));
        auto c = FunctorDescriptor::conj(f, I);
        SampleConfig small = cfg;
        small.samples = std::max<std::size_t>(1, cfg.samples / 2);
        auto r = check_natural_iso(action, I, id, c, [&](TGObject A) { return eta_witness(*action, f, I, A); }, rng, small,
                                   "axiom 1 eta at f=" + G.element(f).cycle_string());
        res.merge(r);
      }
      break;
    }
    case 2: {
      const SubgroupRef &I = L[t.subgroups[0]], &J = L[t.subgroups[1]], &K = L[t.subgroups[2]];
      const RepSystem outer = left_coset_reps(K, J), inner = left_coset_reps(J, I);
      const RepSystem prod = product_reps(outer, inner);
      const std::string where = detail::describe(G, {{"I", &I}, {"J", &J}, {"K", &K}}, {});
      for (std::size_t s = 0; s < cfg.samples; ++s, ++res.samples) {
        TGMorphism phi = sample(K);
        expect(res_apply(*action, inner, res_apply(*action, outer, phi)), res_apply(*action, prod, phi),
               "Res_I^J Res_J^K != Res_I^K (" + where + ")", phi);
      }
      break;
    }
    case 3: {
      const SubgroupRef &I = L[t.subgroups[0]], &J = L[t.subgroups[1]], &K = L[t.subgroups[2]];
      const std::string where = detail::describe(G, {{"I", &I}, {"J", &J}, {"K", &K}}, {});
      for (std::size_t s = 0; s < cfg.samples; ++s, ++res.samples) {
        TGMorphism phi = sample(I);
        expect(ind_apply(J, K, ind_apply(I, J, phi)), ind_apply(I, K, phi), "Ind_J^K Ind_I^J != Ind_I^K (" + where + ")", phi);
      }
      break;
    }
    case 4: {
      const SubgroupRef& I = L[t.subgroups[0]];
      const Elem f = t.elements[0], g = t.elements[1];
      const std::string where = detail::describe(G, {{"I", &I}}, {{"f", f}, {"g", g}});
      for (std::size_t s = 0; s < cfg.samples; ++s, ++res.samples) {
        TGMorphism phi = sample(I);
        expect(conj_apply(*action, f, I.conjugate(g), conj_apply(*action, g, I, phi)), conj_apply(*action, G.mul(f, g), I, phi),
               "c_f c_g != c_fg (" + where + ")", phi);
      }
      break;
    }
    case 5: {
      const SubgroupRef &I = L[t.subgroups[0]], &J = L[t.subgroups[1]];
      const Elem f = t.elements[0];
      const RepSystem reps = left_coset_reps(J, I), creps = conjugate_reps(reps, f);
      const std::string where = detail::describe(G, {{"I", &I}, {"J", &J}}, {{"f", f}});
      for (std::size_t s = 0; s < cfg.samples; ++s, ++res.samples) {
        TGMorphism phi = sample(J);
        expect(conj_apply(*action, f, I, res_apply(*action, reps, phi)), res_apply(*action, creps, conj_apply(*action, f, J, phi)),
               "c_f Res != Res c_f (" + where + ")", phi);
      }
      break;
    }
    case 6: {
      const SubgroupRef &I = L[t.subgroups[0]], &J = L[t.subgroups[1]];
      const Elem f = t.elements[0];
      const std::string where = detail::describe(G, {{"I", &I}, {"J", &J}}, {{"f", f}});
      for (std::size_t s = 0; s < cfg.samples; ++s, ++res.samples) {
        TGMorphism phi = sample(I);
        expect(conj_apply(*action, f, J, ind_apply(I, J, phi)), ind_apply(I.conjugate(f), J.conjugate(f), conj_apply(*action, f, I, phi)),
               "c_f Ind != Ind c_f (" + where + ")", phi);
      }
      break;
    }
    case 7: {
      const SubgroupRef &K = L[t.subgroups[0]], &J = L[t.subgroups[1]], &I = L[t.subgroups[2]];
      const auto dec = double_coset_decomposition(K, J, I);
      const std::string where = detail::describe(G, {{"K", &K}, {"J", &J}, {"I", &I}}, {});
      TwistedCategoryCtx ctxJ(action, J);
      for (std::size_t s = 0; s < cfg.samples; ++s, ++res.samples) {
        TGMorphism phi = sample(I);
        TGMorphism lhs = res_apply(*action, dec.k_over_j, ind_apply(I, K, phi));
        std::vector<TGMorphism> parts;
        for (std::size_t l = 0; l < dec.f.size(); ++l) {
          const Elem f = dec.f[l];
          const SubgroupRef& Ip = dec.inner[l].sub();
          parts.push_back(ind_apply(Ip.conjugate(f), J, conj_apply(*action, f, Ip, res_apply(*action, dec.inner[l], phi))));
        }
        expect(lhs, direct_sum(ctxJ, parts), "double coset formula fails (" + where + ")", phi);
      }
      break;
    }
    default: throw Error(ErrorCode::InputError, "axiom number must be 1..7");
  }
  return res;
}

/// Frobenius reciprocity on I <= J.
/// Law 1: Ind Theta(Res M, phi) = Theta(M, Ind phi), strictly, for lattice
/// maps M of L over J and phi over I.
/// Law 2: Ind Theta(M, Res phi) and Theta(Ind M, phi) for L over I and phi
/// over J, with Ind L built from the same system as Res: equal rank
/// multipliers and the omega witness is an inverse pair intertwining them.
inline CheckResult frobenius_check(int law, const ActionPtr& action, const RepSystem& reps, const Lattice& L,
                                   MorphismSampler& rng, const SampleConfig& cfg) {
  const auto& G = *action->group();
  const SubgroupRef &I = reps.sub(), &J = reps.super();
  CheckResult res;
  auto random_endo = [&](const Lattice& X) {
    IntMatrix m(X.rank(), X.rank());
    std::uniform_int_distribution<int> e(-3, 3);
    for (std::size_t a = 0; a < X.rank(); ++a)
      for (std::size_t b = 0; b < X.rank(); ++b) m(a, b) = e(rng.engine());
    return reynolds(X, X, m);
  };
  if (law == 1) {
    if (!(L.acting() == J)) throw Error(ErrorCode::GroupMismatch, "law 1 takes a lattice over J");
    const Lattice LI = lattice_restrict(L, I);
    TwistedCategoryCtx ctxI(action, I);
    for (std::size_t s = 0; s < cfg.samples; ++s, ++res.samples) {
      const IntMatrix M = s == 0 ? IntMatrix::identity(L.rank()) : random_endo(L);
      TGMorphism phi = rng.morphism(ctxI, {rng.rank(1, cfg.max_rank)}, {rng.rank(1, cfg.max_rank)});
      if (!(ind_apply(I, J, theta_apply(LI, LI, M, phi)) == theta_apply(L, L, M, ind_apply(I, J, phi))))
        res.fail("Frobenius law 1 fails on " + phi.str(G) + " with M=" + M.str());
    }
    return res;
  }
  if (law != 2) throw Error(ErrorCode::InputError, "Frobenius law must be 1 or 2");
  if (!(L.acting() == I)) throw Error(ErrorCode::GroupMismatch, "law 2 takes a lattice over I");
  const Lattice indL = lattice_induce(reps, L);
  const auto lhs_desc = FunctorDescriptor::composite(
      {FunctorDescriptor::res(reps), FunctorDescriptor::theta(L), FunctorDescriptor::ind(I, J)});
  const auto rhs_desc = FunctorDescriptor::theta(indL);
  if (k0_multiplier(lhs_desc) != k0_multiplier(rhs_desc)) res.fail("Frobenius law 2 rank multipliers differ");
  TwistedCategoryCtx ctxJ(action, J);
  for (std::size_t rk = 0; rk <= cfg.max_rank; ++rk) {
    auto w = omega_witness(*action, reps, L, {rk});
    if (!ctxJ.verify_inverse_pair(w.forward, w.inverse)) res.fail("omega is not invertible at rank " + std::to_string(rk));
  }
  for (std::size_t s = 0; s < cfg.samples; ++s, ++res.samples) {
    const IntMatrix M = s == 0 ? IntMatrix::identity(L.rank()) : random_endo(L);
    const IntMatrix indM = kron(IntMatrix::identity(reps.size()), M);
    TGObject a{rng.rank(1, cfg.max_rank)}, b{rng.rank(1, cfg.max_rank)};
    TGMorphism phi = rng.morphism(ctxJ, a, b);
    TGMorphism left = ind_apply(I, J, theta_apply(L, L, M, res_apply(*action, reps, phi)));
    TGMorphism right = theta_apply(indL, indL, indM, phi);
    auto wa = omega_witness(*action, reps, L, a), wb = omega_witness(*action, reps, L, b);
    if (!(ctxJ.compose(wb.forward, left) == ctxJ.compose(right, wa.forward)))
      res.fail("Frobenius law 2 fails on " + phi.str(G) + " with M=" + M.str());
  }
  return res;
}

}  // namespace mackey
