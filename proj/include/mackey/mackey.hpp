#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mackey/abelian.hpp"
#include "mackey/groups.hpp"
#include "mackey/smith.hpp"

namespace mackey {

/// Values on every subgroup (by lattice index) with res, ind and conj given
/// as integer matrices on generators.
class MackeyFunctor {
 public:
  MackeyFunctor() = default;
  MackeyFunctor(LatticePtr lattice, std::vector<FgAbelianGroup> values, std::string name = "M")
      : lattice_(std::move(lattice)), values_(std::move(values)), name_(std::move(name)) {
    if (values_.size() != lattice_->size()) throw Error(ErrorCode::DimensionMismatch, "one value per subgroup required");
  }

  const LatticePtr& lattice() const noexcept { return lattice_; }
  const FiniteGroup& group() const { return *lattice_->group(); }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  const FgAbelianGroup& value(std::size_t H) const { return values_.at(H); }
  const std::vector<FgAbelianGroup>& values() const noexcept { return values_; }

  /// res_I^J : M(J) -> M(I)
  void set_res(std::size_t I, std::size_t J, IntMatrix m) { set(res_, {I, J}, value(J), value(I), std::move(m)); }
  /// ind_I^J : M(I) -> M(J)
  void set_ind(std::size_t I, std::size_t J, IntMatrix m) { set(ind_, {I, J}, value(I), value(J), std::move(m)); }
  /// c_f : M(I) -> M(f I f^-1)
  void set_conj(Elem f, std::size_t I, IntMatrix m) {
    set(conj_, {f, I}, value(I), value(lattice_->conjugate(I, f)), std::move(m));
  }

  AbHom res(std::size_t I, std::size_t J) const { return AbHom(value(J), value(I), get(res_, {I, J}, "res")); }
  AbHom ind(std::size_t I, std::size_t J) const { return AbHom(value(I), value(J), get(ind_, {I, J}, "ind")); }
  AbHom conj(Elem f, std::size_t I) const {
    return AbHom(value(I), value(lattice_->conjugate(I, f)), get(conj_, {static_cast<std::size_t>(f), I}, "conj"));
  }
  const IntMatrix& res_matrix(std::size_t I, std::size_t J) const { return get(res_, {I, J}, "res"); }
  const IntMatrix& ind_matrix(std::size_t I, std::size_t J) const { return get(ind_, {I, J}, "ind"); }
  const IntMatrix& conj_matrix(Elem f, std::size_t I) const { return get(conj_, {static_cast<std::size_t>(f), I}, "conj"); }

  /// Every nested pair and every (f, I) has its map.
  bool is_complete() const {
    const auto& L = *lattice_;
    for (std::size_t J = 0; J < L.size(); ++J)
      for (std::size_t I : L.subgroups_of(J))
        if (!res_.count({I, J}) || !ind_.count({I, J})) return false;
    return conj_.size() == L.size() * group().order();
  }

 private:
  using Key = std::pair<std::size_t, std::size_t>;

  static void set(std::map<Key, IntMatrix>& table, Key k, const FgAbelianGroup& src, const FgAbelianGroup& dst, IntMatrix m) {
    if (m.rows() != dst.generators() || m.cols() != src.generators())
      throw Error(ErrorCode::DimensionMismatch, "map matrix does not match the value presentations");
    table[k] = std::move(m);
  }
  static const IntMatrix& get(const std::map<Key, IntMatrix>& table, Key k, const char* what) {
    auto it = table.find(k);
    if (it == table.end()) throw Error(ErrorCode::PreconditionViolated, std::string("missing ") + what + " map");
    return it->second;
  }

  LatticePtr lattice_;
  std::vector<FgAbelianGroup> values_;
  std::string name_;
  std::map<Key, IntMatrix> res_, ind_, conj_;
};

/// Bilinear map value(H) x value(H) -> value(H) on generators, stored per subgroup.
struct Pairing {
  // table[H][a * n_H + b]
  std::vector<std::vector<IntVector>> table;
  std::vector<std::size_t> left_rank;

  IntVector apply(std::size_t H, const IntVector& x, const IntVector& y, std::size_t out_dim) const {
    IntVector out(out_dim);
    const std::size_t nb = y.size();
    for (std::size_t a = 0; a < x.size(); ++a) {
      if (x[a] == 0) continue;
      for (std::size_t b = 0; b < nb; ++b) {
        if (y[b] == 0) continue;
        const IntVector& v = table[H][a * nb + b];
        const Int c = x[a] * y[b];
        for (std::size_t k = 0; k < out_dim; ++k)
          if (v[k] != 0) out[k] += c * v[k];
      }
    }
    return out;
  }
};

/// Mackey functor with a ring structure on every value.
struct GreenFunctor {
  MackeyFunctor functor;
  Pairing product;
  std::vector<IntVector> unit;

  IntVector mul(std::size_t H, const IntVector& x, const IntVector& y) const {
    return product.apply(H, x, y, functor.value(H).generators());
  }
  const IntVector& one(std::size_t H) const { return unit.at(H); }
};

using GreenPtr = std::shared_ptr<const GreenFunctor>;

/// Mackey functor M with an action G(H) x M(H) -> M(H).
struct GreenModule {
  GreenPtr ring;
  MackeyFunctor module;
  Pairing action;

  IntVector act(std::size_t H, const IntVector& a, const IntVector& m) const {
    return action.apply(H, a, m, module.value(H).generators());
  }
};

// ---------------------------------------------------------------------------
// Validation

struct ValidationFailure {
  std::string law;
  std::string where;
};

struct ValidationReport {
  std::size_t checks = 0;
  std::vector<ValidationFailure> failures;

  bool pass() const noexcept { return failures.empty(); }
  void expect(bool ok, std::string law, std::string where) {
    ++checks;
    if (!ok && failures.size() < 50) failures.push_back({std::move(law), std::move(where)});
  }
};

namespace detail {
inline std::string sub_name(const SubgroupLattice& L, std::size_t s) {
  const auto& G = *L.group();
  std::string out = "#" + std::to_string(s) + "{";
  const auto& mem = L[s].members();
  for (std::size_t k = 0; k < mem.size(); ++k) out += (k ? " " : "") + G.element(mem[k]).cycle_string();
  return out + "}";
}
inline std::string sub_tuple(const SubgroupLattice& L, std::initializer_list<std::pair<const char*, std::size_t>> subs,
                             std::initializer_list<std::pair<const char*, Elem>> elems = {}) {
  std::string out;
  for (const auto& [n, s] : subs) out += (out.empty() ? "" : ", ") + std::string(n) + "=" + sub_name(L, s);
  for (const auto& [n, g] : elems) out += (out.empty() ? "" : ", ") + std::string(n) + "=" + L.group()->element(g).cycle_string();
  return out;
}
inline IntMatrix zero_map(const FgAbelianGroup& src, const FgAbelianGroup& dst) { return IntMatrix(dst.generators(), src.generators()); }
}  // namespace detail

/// All seven axioms, exhaustively over subgroup tuples and group elements.
/// Map equality is decided modulo the target relations.
inline ValidationReport validate_mackey(const MackeyFunctor& M) {
  ValidationReport rep;
  const auto& L = *M.lattice();
  const auto& G = M.group();
  const std::size_t n = L.size();
  auto same = [](const AbHom& a, const AbHom& b) { return a.equals(b); };
  auto identity_on = [&](std::size_t H) { return AbHom(M.value(H), M.value(H), IntMatrix::identity(M.value(H).generators())); };

  // maps are homomorphisms
  for (std::size_t J = 0; J < n; ++J)
    for (std::size_t I : L.subgroups_of(J)) {
      rep.expect(M.res(I, J).is_well_defined(), "res well-defined", detail::sub_tuple(L, {{"I", I}, {"J", J}}));
      rep.expect(M.ind(I, J).is_well_defined(), "ind well-defined", detail::sub_tuple(L, {{"I", I}, {"J", J}}));
    }
  for (Elem f = 0; f < G.order(); ++f)
    for (std::size_t I = 0; I < n; ++I) rep.expect(M.conj(f, I).is_well_defined(), "conj well-defined", detail::sub_tuple(L, {{"I", I}}, {{"f", f}}));

  // (1) identities
  for (std::size_t I = 0; I < n; ++I) {
    rep.expect(same(M.res(I, I), identity_on(I)), "axiom 1: res_I^I = id", detail::sub_tuple(L, {{"I", I}}));
    rep.expect(same(M.ind(I, I), identity_on(I)), "axiom 1: ind_I^I = id", detail::sub_tuple(L, {{"I", I}}));
    for (Elem f : L[I].members()) rep.expect(same(M.conj(f, I), identity_on(I)), "axiom 1: c_f = id for f in I", detail::sub_tuple(L, {{"I", I}}, {{"f", f}}));
  }
  // (2), (3) transitivity
  for (std::size_t K = 0; K < n; ++K)
    for (std::size_t J : L.subgroups_of(K))
      for (std::size_t I : L.subgroups_of(J)) {
        const auto where = detail::sub_tuple(L, {{"I", I}, {"J", J}, {"K", K}});
        rep.expect(same(compose(M.res(I, J), M.res(J, K)), M.res(I, K)), "axiom 2: res_I^J res_J^K = res_I^K", where);
        rep.expect(same(compose(M.ind(J, K), M.ind(I, J)), M.ind(I, K)), "axiom 3: ind_J^K ind_I^J = ind_I^K", where);
      }
  // (4) c_f c_g = c_fg
  for (Elem f = 0; f < G.order(); ++f)
    for (Elem g = 0; g < G.order(); ++g)
      for (std::size_t I = 0; I < n; ++I)
        rep.expect(same(compose(M.conj(f, L.conjugate(I, g)), M.conj(g, I)), M.conj(G.mul(f, g), I)), "axiom 4: c_f c_g = c_fg",
                   detail::sub_tuple(L, {{"I", I}}, {{"f", f}, {"g", g}}));
  // (5), (6) conjugation commutes with res and ind
  for (Elem f = 0; f < G.order(); ++f)
    for (std::size_t J = 0; J < n; ++J)
      for (std::size_t I : L.subgroups_of(J)) {
        const std::size_t fI = L.conjugate(I, f), fJ = L.conjugate(J, f);
        const auto where = detail::sub_tuple(L, {{"I", I}, {"J", J}}, {{"f", f}});
        rep.expect(same(compose(M.conj(f, I), M.res(I, J)), compose(M.res(fI, fJ), M.conj(f, J))), "axiom 5: c_f res = res c_f", where);
        rep.expect(same(compose(M.conj(f, J), M.ind(I, J)), compose(M.ind(fI, fJ), M.conj(f, I))), "axiom 6: c_f ind = ind c_f", where);
      }
  // (7) res_J^K ind_I^K = sum_f ind c_f res over J\K/I
  for (std::size_t K = 0; K < n; ++K)
    for (std::size_t J : L.subgroups_of(K))
      for (std::size_t I : L.subgroups_of(K)) {
        const AbHom lhs = compose(M.res(J, K), M.ind(I, K));
        IntMatrix acc = detail::zero_map(M.value(I), M.value(J));
        for (Elem f : double_coset_reps(L[K], L[J], L[I])) {
          const std::size_t Ip = L.intersection(I, L.conjugate(J, G.inv(f)));
          const std::size_t fIp = L.conjugate(Ip, f);
          acc = acc + M.ind_matrix(fIp, J) * M.conj_matrix(f, Ip) * M.res_matrix(Ip, I);
        }
        rep.expect(same(lhs, AbHom(M.value(I), M.value(J), acc)), "axiom 7: double coset formula",
                   detail::sub_tuple(L, {{"K", K}, {"J", J}, {"I", I}}));
      }
  return rep;
}

/// Ring laws per subgroup, res and conj as unital ring maps, and both
/// Frobenius identities; with a module, the module laws as well.
inline ValidationReport validate_green(const GreenFunctor& R, const GreenModule* M = nullptr) {
  ValidationReport rep = validate_mackey(R.functor);
  const auto& F = R.functor;
  const auto& L = *F.lattice();
  const auto& G = F.group();
  const std::size_t n = L.size();
  for (std::size_t H = 0; H < n; ++H) {
    const auto& V = F.value(H);
    const std::size_t d = V.generators();
    const auto where = detail::sub_tuple(L, {{"H", H}});
    for (std::size_t r = 0; r < V.relations().rows(); ++r)
      for (std::size_t b = 0; b < d; ++b) {
        rep.expect(V.is_zero(R.mul(H, V.relations().row(r), V.basis(b))), "product respects relations", where);
        rep.expect(V.is_zero(R.mul(H, V.basis(b), V.relations().row(r))), "product respects relations", where);
      }
    for (std::size_t a = 0; a < d; ++a) {
      rep.expect(V.equal(R.mul(H, R.one(H), V.basis(a)), V.basis(a)), "left unit", where);
      rep.expect(V.equal(R.mul(H, V.basis(a), R.one(H)), V.basis(a)), "right unit", where);
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t c = 0; c < d; ++c)
          rep.expect(V.equal(R.mul(H, R.mul(H, V.basis(a), V.basis(b)), V.basis(c)), R.mul(H, V.basis(a), R.mul(H, V.basis(b), V.basis(c)))),
                     "associativity", where);
    }
  }
  for (std::size_t J = 0; J < n; ++J)
    for (std::size_t I : L.subgroups_of(J)) {
      const auto where = detail::sub_tuple(L, {{"I", I}, {"J", J}});
      const auto &VI = F.value(I), &VJ = F.value(J);
      const AbHom res = F.res(I, J), ind = F.ind(I, J);
      rep.expect(VI.equal(res.apply(R.one(J)), R.one(I)), "res preserves the unit", where);
      for (std::size_t a = 0; a < VJ.generators(); ++a)
        for (std::size_t b = 0; b < VJ.generators(); ++b)
          rep.expect(VI.equal(res.apply(R.mul(J, VJ.basis(a), VJ.basis(b))), R.mul(I, res.apply(VJ.basis(a)), res.apply(VJ.basis(b)))),
                     "res is multiplicative", where);
      for (std::size_t x = 0; x < VI.generators(); ++x)
        for (std::size_t y = 0; y < VJ.generators(); ++y) {
          rep.expect(VJ.equal(ind.apply(R.mul(I, VI.basis(x), res.apply(VJ.basis(y)))), R.mul(J, ind.apply(VI.basis(x)), VJ.basis(y))),
                     "Frobenius: ind(x res y) = ind(x) y", where);
          rep.expect(VJ.equal(ind.apply(R.mul(I, res.apply(VJ.basis(y)), VI.basis(x))), R.mul(J, VJ.basis(y), ind.apply(VI.basis(x)))),
                     "Frobenius: ind(res(y) x) = y ind(x)", where);
        }
    }
  for (Elem f = 0; f < G.order(); ++f)
    for (std::size_t I = 0; I < n; ++I) {
      const std::size_t fI = L.conjugate(I, f);
      const auto& V = F.value(I);
      const AbHom c = F.conj(f, I);
      const auto where = detail::sub_tuple(L, {{"I", I}}, {{"f", f}});
      rep.expect(F.value(fI).equal(c.apply(R.one(I)), R.one(fI)), "conj preserves the unit", where);
      for (std::size_t a = 0; a < V.generators(); ++a)
        for (std::size_t b = 0; b < V.generators(); ++b)
          rep.expect(F.value(fI).equal(c.apply(R.mul(I, V.basis(a), V.basis(b))), R.mul(fI, c.apply(V.basis(a)), c.apply(V.basis(b)))),
                     "conj is multiplicative", where);
    }
  if (!M) return rep;

  const auto& N = M->module;
  if (N.lattice() != F.lattice()) throw Error(ErrorCode::GroupMismatch, "module over a different subgroup lattice");
  ValidationReport mod = validate_mackey(N);
  rep.checks += mod.checks;
  for (auto& f : mod.failures) rep.failures.push_back({"module: " + f.law, f.where});
  for (std::size_t H = 0; H < n; ++H) {
    const auto &A = F.value(H), &V = N.value(H);
    const auto where = detail::sub_tuple(L, {{"H", H}});
    for (std::size_t m = 0; m < V.generators(); ++m) {
      rep.expect(V.equal(M->act(H, R.one(H), V.basis(m)), V.basis(m)), "unit acts trivially", where);
      for (std::size_t r = 0; r < A.relations().rows(); ++r)
        rep.expect(V.is_zero(M->act(H, A.relations().row(r), V.basis(m))), "action respects ring relations", where);
      for (std::size_t a = 0; a < A.generators(); ++a)
        for (std::size_t b = 0; b < A.generators(); ++b)
          rep.expect(V.equal(M->act(H, R.mul(H, A.basis(a), A.basis(b)), V.basis(m)), M->act(H, A.basis(a), M->act(H, A.basis(b), V.basis(m)))),
                     "module associativity", where);
    }
    for (std::size_t r = 0; r < V.relations().rows(); ++r)
      for (std::size_t a = 0; a < A.generators(); ++a)
        rep.expect(V.is_zero(M->act(H, A.basis(a), V.relations().row(r))), "action respects module relations", where);
  }
  for (std::size_t J = 0; J < n; ++J)
    for (std::size_t I : L.subgroups_of(J)) {
      const auto where = detail::sub_tuple(L, {{"I", I}, {"J", J}});
      const auto &AI = F.value(I), &AJ = F.value(J), &VI = N.value(I), &VJ = N.value(J);
      const AbHom rR = F.res(I, J), iR = F.ind(I, J), rM = N.res(I, J), iM = N.ind(I, J);
      for (std::size_t a = 0; a < AJ.generators(); ++a)
        for (std::size_t m = 0; m < VJ.generators(); ++m)
          rep.expect(VI.equal(rM.apply(M->act(J, AJ.basis(a), VJ.basis(m))), M->act(I, rR.apply(AJ.basis(a)), rM.apply(VJ.basis(m)))),
                     "res commutes with the action", where);
      for (std::size_t a = 0; a < AI.generators(); ++a)
        for (std::size_t m = 0; m < VJ.generators(); ++m)
          rep.expect(VJ.equal(iM.apply(M->act(I, AI.basis(a), rM.apply(VJ.basis(m)))), M->act(J, iR.apply(AI.basis(a)), VJ.basis(m))),
                     "Frobenius: ind(a res m) = ind(a) m", where);
      for (std::size_t a = 0; a < AJ.generators(); ++a)
        for (std::size_t m = 0; m < VI.generators(); ++m)
          rep.expect(VJ.equal(iM.apply(M->act(I, rR.apply(AJ.basis(a)), VI.basis(m))), M->act(J, AJ.basis(a), iM.apply(VI.basis(m)))),
                     "Frobenius: ind(res(a) m) = a ind(m)", where);
    }
  for (Elem f = 0; f < G.order(); ++f)
    for (std::size_t I = 0; I < n; ++I) {
      const std::size_t fI = L.conjugate(I, f);
      const auto &A = F.value(I), &V = N.value(I);
      const AbHom cR = F.conj(f, I), cM = N.conj(f, I);
      for (std::size_t a = 0; a < A.generators(); ++a)
        for (std::size_t m = 0; m < V.generators(); ++m)
          rep.expect(N.value(fI).equal(cM.apply(M->act(I, A.basis(a), V.basis(m))), M->act(fI, cR.apply(A.basis(a)), cM.apply(V.basis(m)))),
                     "conj commutes with the action", detail::sub_tuple(L, {{"I", I}}, {{"f", f}}));
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Builders

/// Z on every subgroup; res = 1, ind = index, conj = 1.
inline MackeyFunctor fixed_point_functor(const LatticePtr& L) {
  MackeyFunctor M(L, std::vector<FgAbelianGroup>(L->size(), FgAbelianGroup::free(1)), "fixed-point");
  for (std::size_t J = 0; J < L->size(); ++J)
    for (std::size_t I : L->subgroups_of(J)) {
      M.set_res(I, J, IntMatrix{{1}});
      IntMatrix idx(1, 1);
      idx(0, 0) = static_cast<long long>(L->index(I, J));
      M.set_ind(I, J, idx);
    }
  for (Elem f = 0; f < L->group()->order(); ++f)
    for (std::size_t I = 0; I < L->size(); ++I) M.set_conj(f, I, IntMatrix{{1}});
  return M;
}

inline Pairing scalar_pairing(const std::vector<FgAbelianGroup>& left, const std::vector<FgAbelianGroup>& right) {
  Pairing p;
  for (std::size_t H = 0; H < left.size(); ++H) {
    const std::size_t a = left[H].generators(), b = right[H].generators();
    if (a != 1) throw Error(ErrorCode::PreconditionViolated, "scalar pairing needs a cyclic left factor");
    std::vector<IntVector> t;
    for (std::size_t j = 0; j < b; ++j) t.push_back(right[H].basis(j));
    p.table.push_back(std::move(t));
    p.left_rank.push_back(a);
  }
  return p;
}

/// Fixed-point functor with the pointwise product of Z.
inline GreenPtr fixed_point_green(const LatticePtr& L) {
  auto G = std::make_shared<GreenFunctor>();
  G->functor = fixed_point_functor(L);
  G->product = scalar_pairing(G->functor.values(), G->functor.values());
  G->unit.assign(L->size(), IntVector{1});
  return G;
}

/// A Green functor as a module over itself.
inline GreenModule module_over_self(const GreenPtr& R) { return GreenModule{R, R->functor, R->product}; }

/// Z/|H| on H; res = reduction, ind = multiplication by the index, conj = 1,
/// with Z = fixed-point Green functor acting by multiplication. Vanishes on
/// the trivial subgroup.
inline GreenModule torsion_module(const GreenPtr& R) {
  const auto& L = R->functor.lattice();
  std::vector<FgAbelianGroup> vals;
  for (const auto& H : L->subgroups()) vals.push_back(FgAbelianGroup::cyclic(static_cast<long long>(H.order())));
  MackeyFunctor M(L, vals, "torsion");
  for (std::size_t J = 0; J < L->size(); ++J)
    for (std::size_t I : L->subgroups_of(J)) {
      M.set_res(I, J, IntMatrix{{1}});
      IntMatrix idx(1, 1);
      idx(0, 0) = static_cast<long long>(L->index(I, J));
      M.set_ind(I, J, idx);
    }
  for (Elem f = 0; f < L->group()->order(); ++f)
    for (std::size_t I = 0; I < L->size(); ++I) M.set_conj(f, I, IntMatrix{{1}});
  return GreenModule{R, std::move(M), scalar_pairing(R->functor.values(), vals)};
}

/// The zero module over R.
inline GreenModule zero_module(const GreenPtr& R) {
  const auto& L = R->functor.lattice();
  std::vector<FgAbelianGroup> vals(L->size(), FgAbelianGroup::zero());
  MackeyFunctor M(L, vals, "zero");
  for (std::size_t J = 0; J < L->size(); ++J)
    for (std::size_t I : L->subgroups_of(J)) {
      M.set_res(I, J, IntMatrix(0, 0));
      M.set_ind(I, J, IntMatrix(0, 0));
    }
  for (Elem f = 0; f < L->group()->order(); ++f)
    for (std::size_t I = 0; I < L->size(); ++I) M.set_conj(f, I, IntMatrix(0, 0));
  Pairing p;
  for (std::size_t H = 0; H < L->size(); ++H) {
    p.table.emplace_back();
    p.left_rank.push_back(R->functor.value(H).generators());
  }
  return GreenModule{R, std::move(M), std::move(p)};
}

// ---------------------------------------------------------------------------
// Localization

/// Values replaced by their canonical presentations over the coefficient
/// ring; maps transported through the comparison matrices.
inline MackeyFunctor localize_functor(const MackeyFunctor& M, CoefficientMode mode) {
  const auto& L = *M.lattice();
  std::vector<Localization> loc;
  std::vector<FgAbelianGroup> vals;
  for (std::size_t H = 0; H < L.size(); ++H) {
    loc.push_back(localize(M.value(H), mode));
    vals.push_back(loc.back().group);
  }
  MackeyFunctor out(M.lattice(), vals, M.name() + "@" + mode.str());
  auto transport = [&](std::size_t src, std::size_t dst, const IntMatrix& m) { return loc[dst].to_local * m * loc[src].from_local; };
  for (std::size_t J = 0; J < L.size(); ++J)
    for (std::size_t I : L.subgroups_of(J)) {
      out.set_res(I, J, transport(J, I, M.res_matrix(I, J)));
      out.set_ind(I, J, transport(I, J, M.ind_matrix(I, J)));
    }
  for (Elem f = 0; f < M.group().order(); ++f)
    for (std::size_t I = 0; I < L.size(); ++I) out.set_conj(f, I, transport(I, L.conjugate(I, f), M.conj_matrix(f, I)));
  return out;
}

// ---------------------------------------------------------------------------
// Induction engine

/// Whether 1 in G(F) lies in the sum of the images of ind_H^F over the
/// family, after passing to the coefficient ring. The certificate expresses
/// n * 1 as a sum of induced elements, n the order of 1 modulo the image
/// (n = 1 integrally).
struct UnitCertificate {
  bool holds = false;
  Int multiplier = 0;                          // n; 0 when 1 has infinite order modulo the image
  std::map<std::size_t, IntVector> coefficients;  // subgroup -> element of G(H)
  std::vector<Int> indices;                    // distinct [F:H], H in the family
  Int index_gcd = 0;
};

inline UnitCertificate unit_in_induction_image(const GreenFunctor& R, const Family& fam, CoefficientMode mode = {}) {
  const auto& F = R.functor;
  const auto& L = *F.lattice();
  if (fam.lattice() != F.lattice()) throw Error(ErrorCode::GroupMismatch, "family over a different lattice");
  const std::size_t top = L.whole();
  const auto& V = F.value(top);
  UnitCertificate cert;
  std::set<Int> idx;
  for (std::size_t H : fam.members()) idx.insert(static_cast<long long>(L.index(H, top)));
  cert.indices.assign(idx.begin(), idx.end());
  for (const Int& i : cert.indices) cert.index_gcd = gcd(cert.index_gcd, i);

  // columns: induced generators, then relations of G(F)
  std::vector<std::pair<std::size_t, std::size_t>> col_src;
  std::size_t cols = V.relations().rows();
  for (std::size_t H : fam.members()) cols += F.value(H).generators();
  IntMatrix A(V.generators(), cols);
  std::size_t c = 0;
  for (std::size_t H : fam.members()) {
    const IntMatrix& m = F.ind_matrix(H, top);
    for (std::size_t j = 0; j < m.cols(); ++j, ++c) {
      for (std::size_t i = 0; i < m.rows(); ++i) A(i, c) = m(i, j);
      col_src.emplace_back(H, j);
    }
  }
  for (std::size_t r = 0; r < V.relations().rows(); ++r, ++c)
    for (std::size_t i = 0; i < V.generators(); ++i) A(i, c) = V.relations()(r, i);

  const AbHom into(FgAbelianGroup::free(cols), V, A);
  const FgAbelianGroup coker = into.cokernel();
  cert.holds = coker.with_mode(mode).is_zero(R.one(top));
  auto order = coker.order_of(R.one(top));
  cert.multiplier = order ? *order : Int(0);
  if (fam.contains(top)) {
    cert.coefficients[top] = R.one(top);
  } else if (cert.holds && cert.multiplier != 0) {
    IntVector rhs = R.one(top);
    for (auto& x : rhs) x *= cert.multiplier;
    auto sol = solve_integer_linear(A, rhs);
    if (!sol) throw Error(ErrorCode::NoSolution, "unit certificate could not be solved");
    for (std::size_t k = 0; k < col_src.size(); ++k) {
      auto [H, j] = col_src[k];
      auto& v = cert.coefficients[H];
      if (v.empty()) v.assign(F.value(H).generators(), Int(0));
      v[j] = (*sol)[k];
    }
  }
  return cert;
}

/// Colimit or limit over the family with its comparison map to or from M(F).
struct FamilyLimit {
  FgAbelianGroup group;
  AbHom comparison;  // colim -> M(F), or M(F) -> lim
  bool is_isomorphism = false;
};

enum class LimitDirection { Colim, Lim };

inline FamilyLimit family_limit(const MackeyFunctor& M0, const Family& fam, LimitDirection dir, CoefficientMode mode = {}) {
  if (!fam.is_closed()) throw Error(ErrorCode::FamilyNotClosed, "family is not closed under subgroups and conjugation");
  const MackeyFunctor M = localize_functor(M0, mode);
  const auto& L = *M.lattice();
  const auto& G = M.group();
  const std::size_t top = L.whole();
  std::map<std::size_t, std::size_t> offset;
  std::size_t total = 0;
  std::vector<FgAbelianGroup> parts;
  for (std::size_t H : fam.members()) {
    offset[H] = total;
    total += M.value(H).generators();
    parts.push_back(M.value(H));
  }
  const FgAbelianGroup sum = direct_sum(parts).with_mode(mode);
  const FgAbelianGroup& top_value = M.value(top);

  if (dir == LimitDirection::Colim) {
    std::vector<IntVector> rel;
    for (std::size_t r = 0; r < sum.relations().rows(); ++r) rel.push_back(sum.relations().row(r));
    auto glue = [&](std::size_t H, std::size_t K, const IntMatrix& m) {
      for (std::size_t x = 0; x < M.value(H).generators(); ++x) {
        IntVector v(total);
        v[offset[H] + x] += 1;
        for (std::size_t y = 0; y < m.rows(); ++y) v[offset[K] + y] -= m(y, x);
        if (!is_zero(v)) rel.push_back(std::move(v));
      }
    };
    for (std::size_t K : fam.members())
      for (std::size_t H : fam.members())
        if (H != K && L.is_subgroup(H, K)) glue(H, K, M.ind_matrix(H, K));
    for (Elem f = 0; f < G.order(); ++f)
      for (std::size_t H : fam.members()) glue(H, L.conjugate(H, f), M.conj_matrix(f, H));
    FgAbelianGroup colim(total, IntMatrix::from_rows(rel, total), mode);
    IntMatrix cmp(top_value.generators(), total);
    for (std::size_t H : fam.members()) {
      const IntMatrix& m = M.ind_matrix(H, top);
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) cmp(i, offset[H] + j) = m(i, j);
    }
    AbHom comparison(colim, top_value, std::move(cmp));
    const bool iso = comparison.is_isomorphism();
    return {std::move(colim), std::move(comparison), iso};
  }

  // Limit: compatible families inside the product, as a kernel.
  std::vector<FgAbelianGroup> targets;
  struct Constraint {
    std::size_t from, to;  // read x_from, compare with x_to in M(to)
    IntMatrix map;
  };
  std::vector<Constraint> cons;
  for (std::size_t K : fam.members())
    for (std::size_t H : fam.members())
      if (H != K && L.is_subgroup(H, K)) cons.push_back({K, H, M.res_matrix(H, K)});
  for (Elem f = 0; f < G.order(); ++f)
    for (std::size_t H : fam.members()) cons.push_back({H, L.conjugate(H, f), M.conj_matrix(f, H)});
  std::size_t rows = 0;
  for (const auto& c : cons) {
    targets.push_back(M.value(c.to));
    rows += M.value(c.to).generators();
  }
  IntMatrix D(rows, total);
  std::size_t r0 = 0;
  for (const auto& c : cons) {
    for (std::size_t i = 0; i < c.map.rows(); ++i) {
      for (std::size_t j = 0; j < c.map.cols(); ++j) D(r0 + i, offset[c.from] + j) += c.map(i, j);
      D(r0 + i, offset[c.to] + i) -= 1;
    }
    r0 += M.value(c.to).generators();
  }
  const FgAbelianGroup tgt = targets.empty() ? FgAbelianGroup::zero().with_mode(mode) : direct_sum(targets).with_mode(mode);
  const AbHom constraint(sum, tgt, D);
  auto ker = constraint.kernel();
  IntMatrix stacked(total, top_value.generators());
  for (std::size_t H : fam.members()) {
    const IntMatrix& m = M.res_matrix(H, top);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) stacked(offset[H] + i, j) = m(i, j);
  }
  IntMatrix cmp(ker.group.generators(), top_value.generators());
  for (std::size_t j = 0; j < top_value.generators(); ++j) {
    auto c = solve_integer_linear(ker.inclusion, stacked.col(j));
    if (!c) throw Error(ErrorCode::PreconditionViolated, "restrictions are not compatible; validate the functor first");
    for (std::size_t i = 0; i < c->size(); ++i) cmp(i, j) = (*c)[i];
  }
  AbHom comparison(top_value, ker.group, std::move(cmp));
  const bool iso = comparison.is_isomorphism();
  return {std::move(ker.group), std::move(comparison), iso};
}

enum class InductionStatus { Pass, HypothesisFailure, Counterexample };

inline const char* to_string(InductionStatus s) {
  switch (s) {
    case InductionStatus::Pass: return "pass";
    case InductionStatus::HypothesisFailure: return "hypothesis_failure";
    case InductionStatus::Counterexample: return "fail";
  }
  return "fail";
}

struct InductionResult {
  InductionStatus status = InductionStatus::Pass;
  UnitCertificate unit;
  std::optional<FamilyLimit> colim, lim;
  std::string detail;
};

/// Unit induced from the family (after localization) implies both
/// comparison maps are isomorphisms; the hypothesis is checked, not assumed.
inline InductionResult verify_induction_iso(const GreenModule& M, const Family& fam, CoefficientMode mode = {}) {
  InductionResult out;
  out.unit = unit_in_induction_image(*M.ring, fam, mode);
  if (!out.unit.holds) {
    out.status = InductionStatus::HypothesisFailure;
    out.detail = "unit of the Green functor is not induced from the family at " + mode.str();
    return out;
  }
  out.colim = family_limit(M.module, fam, LimitDirection::Colim, mode);
  out.lim = family_limit(M.module, fam, LimitDirection::Lim, mode);
  const bool ok_c = out.colim->is_isomorphism, ok_l = out.lim->is_isomorphism;
  // an isomorphism verdict must leave nothing behind after normal form
  if (ok_c && !(out.colim->comparison.kernel().group.is_trivial() && out.colim->comparison.cokernel().is_trivial()))
    throw Error(ErrorCode::PreconditionViolated, "inconsistent isomorphism verdict");
  if (ok_c && ok_l) {
    out.status = InductionStatus::Pass;
  } else {
    out.status = InductionStatus::Counterexample;
    out.detail = std::string(ok_c ? "" : "colim comparison is not an isomorphism; ") + (ok_l ? "" : "lim comparison is not an isomorphism");
  }
  return out;
}

struct SwanResult {
  bool pass = true;
  std::size_t generators_checked = 0;
  std::string detail;
  std::optional<bool> vanishes_after_inverting;  // M(F)[1/n] = 0, when a scalar n is supplied
};

/// For every generator y of M(F): ind_1^F res_1^F y = [F] y, and both vanish.
/// Requires M(1) = 0.
inline SwanResult swan_vanishing_check(const GreenModule& M, const IntVector& regular_class, std::optional<Int> scalar = std::nullopt) {
  const auto& N = M.module;
  const auto& L = *N.lattice();
  const std::size_t one = L.trivial(), top = L.whole();
  if (!N.value(one).is_trivial()) throw Error(ErrorCode::PreconditionViolated, "M(1) is not zero");
  SwanResult out;
  const auto& V = N.value(top);
  const AbHom res = N.res(one, top), ind = N.ind(one, top);
  for (std::size_t k = 0; k < V.generators(); ++k, ++out.generators_checked) {
    const IntVector y = V.basis(k);
    const IntVector lhs = ind.apply(res.apply(y));
    const IntVector rhs = M.act(top, regular_class, y);
    if (!V.equal(lhs, rhs)) {
      out.pass = false;
      out.detail = "ind res y != [F] y at generator " + std::to_string(k);
    } else if (!V.is_zero(rhs)) {
      out.pass = false;
      out.detail = "[F] y != 0 at generator " + std::to_string(k);
    }
    if (scalar) {
      IntVector ny = y;
      for (auto& x : ny) x *= *scalar;
      if (!V.equal(rhs, ny)) {
        out.pass = false;
        out.detail = "[F] does not act by the supplied scalar";
      }
    }
  }
  if (scalar) {
    bool van = V.free_rank() == 0;
    for (const Int& t : V.torsion_factors()) van = van && part_coprime_to(t, *scalar) == 1;
    out.vanishes_after_inverting = van;
    if (!van) {
      out.pass = false;
      out.detail = "M(F) survives inverting " + scalar->str();
    }
  }
  return out;
}

}  // namespace mackey
