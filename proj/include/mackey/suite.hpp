#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mackey/burnside.hpp"
#include "mackey/functors.hpp"
#include "mackey/io.hpp"

namespace mackey {

inline constexpr const char* kToolName = "mackey";
inline constexpr const char* kToolVersion = "0.1.0";

struct SuiteConfig {
  std::string command;
  std::string group = "S3";
  std::string ring = "Z";
  std::uint64_t seed = 1;
  std::size_t samples = 10;
  std::string family = "H";
  std::string coeff = "Z";
  std::string functor = "fixed_point";
  std::string fixture;
  std::size_t max_subgroup_order = 0;  // 0 = no filter
  std::string out;
  std::string format = "text";
  bool timing = false;
};

enum class CheckStatus { Pass, Fail, HypothesisFailure };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::HypothesisFailure: return "hypothesis_failure";
  }
  return "fail";
}

struct ReportCheck {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::size_t samples = 0;
  std::string summary;
  Json detail = Json::object();
};

struct Report {
  SuiteConfig config;
  std::vector<ReportCheck> checks;
  Json data = Json::object();
  std::optional<double> seconds;

  void add(ReportCheck c) { checks.push_back(std::move(c)); }
  void add(std::string name, const CheckResult& r, std::string summary = {}) {
    ReportCheck c{std::move(name), r.pass ? CheckStatus::Pass : CheckStatus::Fail, r.samples, std::move(summary), Json::object()};
    if (!r.pass) c.detail["counterexample"] = r.counterexample;
    add(std::move(c));
  }

  /// 0 when nothing failed; hypothesis failures are verdicts, not failures.
  int exit_code() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) return 1;
    return 0;
  }

  Json config_json() const {
    Json j;
    j["command"] = config.command;
    j["group"] = config.group;
    j["ring"] = config.ring;
    j["seed"] = config.seed;
    j["samples"] = config.samples;
    j["family"] = config.family;
    j["coeff"] = config.coeff;
    j["functor"] = config.functor;
    if (!config.fixture.empty()) j["fixture"] = config.fixture;
    if (config.max_subgroup_order) j["max_subgroup_order"] = config.max_subgroup_order;
    return j;
  }

  Json to_json() const {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["config"] = config_json();
    std::size_t pass = 0, fail = 0, hyp = 0;
    for (const auto& c : checks) {
      pass += c.status == CheckStatus::Pass;
      fail += c.status == CheckStatus::Fail;
      hyp += c.status == CheckStatus::HypothesisFailure;
    }
    j["summary"] = {{"checks", checks.size()}, {"pass", pass}, {"fail", fail}, {"hypothesis_failure", hyp}};
    Json arr = Json::array();
    for (const auto& c : checks) {
      Json cj;
      cj["name"] = c.name;
      cj["status"] = to_string(c.status);
      cj["samples"] = c.samples;
      if (!c.summary.empty()) cj["summary"] = c.summary;
      if (!c.detail.empty()) cj["detail"] = c.detail;
      arr.push_back(std::move(cj));
    }
    j["checks"] = std::move(arr);
    if (!data.empty()) j["data"] = data;
    if (seconds) j["seconds"] = *seconds;
    return j;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << kToolName << " " << kToolVersion << "\n";
    os << "config:";
    const Json cfg = config_json();
    for (const auto& [k, v] : cfg.items()) os << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
    os << "\n";
    for (const auto& c : checks) {
      os << to_string(c.status) << "  " << c.name;
      if (c.samples) os << "  [" << c.samples << " samples]";
      if (!c.summary.empty()) os << "  " << c.summary;
      os << "\n";
      if (c.detail.contains("counterexample")) os << "    counterexample: " << c.detail["counterexample"].get<std::string>() << "\n";
    }
    for (const auto& [k, v] : data.items()) os << "data " << k << ": " << v.dump() << "\n";
    const Json s = to_json()["summary"];
    os << "summary: " << s["checks"] << " checks, " << s["pass"] << " pass, " << s["fail"] << " fail, " << s["hypothesis_failure"]
       << " hypothesis_failure\n";
    if (seconds) os << "seconds: " << *seconds << "\n";
    return os.str();
  }
};

/// Writes to the --out path, or stdout when it is empty.
inline void emit_report(const Report& r, const std::string& format, const std::string& path) {
  std::string body;
  if (format == "text") body = r.to_text();
  else if (format == "structured" || format == "json") body = r.to_json().dump(2) + "\n";
  else throw Error(ErrorCode::InputError, "unknown format '" + format + "'");
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << body;
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
}

// ---------------------------------------------------------------------------

inline Family parse_family(const LatticePtr& L, const std::string& spec) {
  auto prime_of = [&](const std::string& s) -> unsigned {
    try {
      return static_cast<unsigned>(std::stoul(s));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InputError, "family prime must be a number");
    }
  };
  if (spec == "H") return subgroup_family(L, Family::Tag::Hyperelementary);
  if (spec == "E") return subgroup_family(L, Family::Tag::Elementary);
  if (spec == "FC") return subgroup_family(L, Family::Tag::Cyclic);
  if (spec.rfind("Hp:", 0) == 0) return subgroup_family(L, Family::Tag::PHyperelementary, prime_of(spec.substr(3)));
  if (spec.rfind("Ep:", 0) == 0) return subgroup_family(L, Family::Tag::PElementary, prime_of(spec.substr(3)));
  if (spec == "proper") return Family::proper(L);
  if (spec == "all") return Family::all(L);
  throw Error(ErrorCode::InputError, "unknown family '" + spec + "'");
}

namespace detail {

inline Json subgroup_json(const SubgroupLattice& L, std::size_t s) {
  const auto& G = *L.group();
  Json m = Json::array();
  for (Elem x : L[s].members()) m.push_back(G.element(x).cycle_string());
  return m;
}

inline bool keep(const SuiteConfig& c, const SubgroupRef& H) { return c.max_subgroup_order == 0 || H.order() <= c.max_subgroup_order; }

inline void run_group(const SuiteConfig& cfg, Report& rep) {
  auto G = load_group(cfg.group);
  auto L = SubgroupLattice::of(G);
  rep.data["order"] = G->order();
  rep.data["degree"] = G->degree();
  rep.data["subgroup_count"] = L->size();
  Json subs = Json::array();
  for (std::size_t s = 0; s < L->size(); ++s) {
    const auto c = classify_subgroup(G, (*L)[s]);
    Json e;
    e["id"] = s;
    e["order"] = (*L)[s].order();
    e["cyclic"] = c.is_cyclic;
    e["hyperelementary_primes"] = std::vector<unsigned>(c.hyperelementary_primes.begin(), c.hyperelementary_primes.end());
    e["elementary_primes"] = std::vector<unsigned>(c.elementary_primes.begin(), c.elementary_primes.end());
    e["members"] = subgroup_json(*L, s);
    subs.push_back(std::move(e));
  }
  rep.data["subgroups"] = std::move(subs);

  CheckResult orbit;
  for (std::size_t K = 0; K < L->size(); ++K)
    for (std::size_t J : L->subgroups_of(K))
      for (std::size_t I : L->subgroups_of(K)) {
        std::size_t sum = 0;
        for (Elem f : double_coset_reps((*L)[K], (*L)[J], (*L)[I]))
          sum += L->index(L->intersection(I, L->conjugate(J, G->inv(f))), I);
        ++orbit.samples;
        if (sum != L->index(J, K)) orbit.fail("sum over J\\K/I differs from [K:J] at K=" + std::to_string(K) + " J=" + std::to_string(J) + " I=" + std::to_string(I));
      }
  rep.add("orbit-counting identity [K:J] = sum_f [I : I n f^-1 J f]", orbit);

  CheckResult conj;
  for (std::size_t s = 0; s < L->size(); ++s)
    for (Elem f = 0; f < G->order(); ++f) {
      ++conj.samples;
      if ((*L)[L->conjugate(s, f)].order() != (*L)[s].order()) conj.fail("conjugate of subgroup " + std::to_string(s) + " has a different order");
    }
  rep.add("conjugates are subgroups of the same order", conj);
}

inline void run_families(const SuiteConfig& cfg, Report& rep, bool explicit_family) {
  auto G = load_group(cfg.group);
  auto L = SubgroupLattice::of(G);
  std::vector<std::string> specs;
  if (explicit_family) {
    specs.push_back(cfg.family);
  } else {
    specs = {"H", "E", "FC"};
    for (unsigned p : prime_divisors(G->order())) {
      specs.push_back("Hp:" + std::to_string(p));
      specs.push_back("Ep:" + std::to_string(p));
    }
  }
  Json fams = Json::object();
  for (const auto& spec : specs) {
    const Family fam = parse_family(L, spec);
    fams[spec] = fam.members();
    ReportCheck c{"family " + spec + " closed under subgroups and conjugation", fam.is_closed() ? CheckStatus::Pass : CheckStatus::Fail,
                  fam.size(), std::to_string(fam.size()) + " of " + std::to_string(L->size()) + " subgroups", Json::object()};
    rep.add(std::move(c));
  }
  rep.data["families"] = std::move(fams);
}

inline void run_axioms(const SuiteConfig& cfg, Report& rep) {
  if (!cfg.fixture.empty()) {
    const auto fx = mackey_fixture_from_json(read_json_file(cfg.fixture));
    const auto v = validate_mackey(fx.functor);
    std::map<std::string, std::vector<std::string>> by_law;
    for (const auto& f : v.failures) by_law[f.law].push_back(f.where);
    ReportCheck c{"Mackey functor '" + fx.functor.name() + "' satisfies the axioms", v.pass() ? CheckStatus::Pass : CheckStatus::Fail,
                  v.checks, std::to_string(v.failures.size()) + " failures", Json::object()};
    if (!v.pass()) {
      Json ce = Json::object();
      for (const auto& [law, wh] : by_law) ce[law] = wh;
      c.detail["failures"] = std::move(ce);
      c.detail["counterexample"] = v.failures.front().law + " at " + v.failures.front().where;
    }
    rep.add(std::move(c));
    return;
  }
  auto G = load_group(cfg.group);
  auto L = SubgroupLattice::of(G);
  auto rs = load_ring(cfg.ring, G);
  rep.data["action_trivial"] = rs.action->is_trivial();
  MorphismSampler rng(cfg.seed);
  SampleConfig sc{cfg.samples, 3};
  for (int k = 1; k <= 7; ++k) {
    CheckResult agg;
    std::size_t tuples = 0;
    for (const auto& t : axiom_tuples(k, *L)) {
      bool ok = true;
      for (std::size_t s : t.subgroups) ok = ok && keep(cfg, (*L)[s]);
      if (!ok) continue;
      ++tuples;
      agg.merge(mackey_axiom_check(k, rs.action, *L, t, rng, sc));
    }
    rep.add("axiom " + std::to_string(k), agg, std::to_string(tuples) + " tuples");
  }
  CheckResult func;
  for (std::size_t J = 0; J < L->size(); ++J)
    for (std::size_t I : L->subgroups_of(J)) {
      if (!keep(cfg, (*L)[J])) continue;
      func.merge(check_functoriality(rs.action, FunctorDescriptor::ind((*L)[I], (*L)[J]), rng, sc));
      func.merge(check_functoriality(rs.action, FunctorDescriptor::res(left_coset_reps((*L)[J], (*L)[I])), rng, sc));
    }
  for (std::size_t I = 0; I < L->size(); ++I) {
    if (!keep(cfg, (*L)[I])) continue;
    func.merge(check_functoriality(rs.action, FunctorDescriptor::conj(G->generators().empty() ? 0 : G->generators().front(), (*L)[I]), rng, sc));
    func.merge(check_functoriality(rs.action, FunctorDescriptor::theta(Lattice::regular((*L)[I])), rng, sc));
  }
  rep.add("functoriality of Ind, Res, c_f, Theta", func);
}

inline void run_frobenius(const SuiteConfig& cfg, Report& rep) {
  auto G = load_group(cfg.group);
  auto L = SubgroupLattice::of(G);
  auto rs = load_ring(cfg.ring, G);
  MorphismSampler rng(cfg.seed);
  SampleConfig sc{cfg.samples, 3};
  CheckResult law1, law2, bif;
  std::size_t pairs = 0;
  for (std::size_t J = 0; J < L->size(); ++J)
    for (std::size_t I : L->subgroups_of(J)) {
      if (!keep(cfg, (*L)[J])) continue;
      ++pairs;
      const RepSystem reps = left_coset_reps((*L)[J], (*L)[I]);
      law1.merge(frobenius_check(1, rs.action, reps, Lattice::regular((*L)[J]), rng, sc));
      law1.merge(frobenius_check(1, rs.action, reps, Lattice::sign((*L)[J]), rng, sc));
      law2.merge(frobenius_check(2, rs.action, reps, Lattice::regular((*L)[I]), rng, sc));
      law2.merge(frobenius_check(2, rs.action, reps, Lattice::sign((*L)[I]), rng, sc));
    }
  // Theta(M2 M1, psi phi) = Theta(M2, psi) Theta(M1, phi)
  for (std::size_t I = 0; I < L->size(); ++I) {
    if (!keep(cfg, (*L)[I])) continue;
    const Lattice R = Lattice::regular((*L)[I]);
    TwistedCategoryCtx ctx(rs.action, (*L)[I]);
    for (std::size_t s = 0; s < cfg.samples; ++s, ++bif.samples) {
      IntMatrix X(R.rank(), R.rank()), Y(R.rank(), R.rank());
      std::uniform_int_distribution<int> e(-3, 3);
      for (std::size_t a = 0; a < R.rank(); ++a)
        for (std::size_t b = 0; b < R.rank(); ++b) {
          X(a, b) = e(rng.engine());
          Y(a, b) = e(rng.engine());
        }
      const IntMatrix M1 = reynolds(R, R, X), M2 = reynolds(R, R, Y);
      TGObject a{rng.rank(1, 2)}, b{rng.rank(1, 2)}, c{rng.rank(1, 2)};
      auto phi = rng.morphism(ctx, a, b), psi = rng.morphism(ctx, b, c);
      if (!(theta_apply(R, R, M2 * M1, ctx.compose(psi, phi)) == ctx.compose(theta_apply(R, R, M2, psi), theta_apply(R, R, M1, phi))))
        bif.fail("Theta is not bifunctorial on " + phi.str(*G));
    }
  }
  rep.add("Frobenius law: Ind Theta(Res M, phi) = Theta(M, Ind phi)", law1, std::to_string(pairs) + " pairs");
  rep.add("Frobenius law: Ind Theta(M, Res phi) ~ Theta(Ind M, phi) via omega", law2, std::to_string(pairs) + " pairs");
  rep.add("Theta bifunctoriality", bif);
}

inline GreenModule build_module(const std::string& functor, const LatticePtr& L) {
  if (functor == "fixed_point") return module_over_self(fixed_point_green(L));
  if (functor == "burnside") return module_over_self(burnside_green_functor(L));
  if (functor == "torsion") return torsion_module(fixed_point_green(L));
  throw Error(ErrorCode::InputError, "unknown functor '" + functor + "' (fixed_point, burnside, torsion)");
}

inline void run_dress(const SuiteConfig& cfg, Report& rep) {
  const CoefficientMode mode = CoefficientMode::parse(cfg.coeff);
  auto G = load_group(cfg.group);
  auto L = SubgroupLattice::of(G);
  const Family fam = parse_family(L, cfg.family);
  const GreenModule M = build_module(cfg.functor, L);
  rep.data["family"] = fam.members();

  const auto v = validate_green(*M.ring, &M);
  ReportCheck vc{"Green module validates", v.pass() ? CheckStatus::Pass : CheckStatus::Fail, v.checks, {}, Json::object()};
  if (!v.pass()) vc.detail["counterexample"] = v.failures.front().law + " at " + v.failures.front().where;
  rep.add(std::move(vc));

  const auto res = verify_induction_iso(M, fam, mode);
  Json cert;
  std::vector<std::string> idx;
  for (const auto& i : res.unit.indices) idx.push_back(i.str());
  std::string idx_list;
  for (const auto& s : idx) idx_list += (idx_list.empty() ? "" : ",") + s;
  cert["indices"] = idx;
  cert["index_gcd"] = res.unit.index_gcd.str();
  cert["gcd_certificate"] = "gcd{" + idx_list + "} = " + res.unit.index_gcd.str();
  cert["unit_order_modulo_image"] = res.unit.multiplier.str();
  Json coeffs = Json::object();
  for (const auto& [H, vec] : res.unit.coefficients) coeffs[std::to_string(H)] = int_vector_json(vec);
  cert["coefficients"] = std::move(coeffs);
  ReportCheck uc{"unit induced from family " + cfg.family + " at " + mode.str(), res.unit.holds ? CheckStatus::Pass : CheckStatus::HypothesisFailure,
                 0, cert["gcd_certificate"].get<std::string>(), Json::object()};
  uc.detail["certificate"] = cert;
  if (!res.unit.holds && cfg.functor == "burnside") {
    const auto T = table_of_marks(L);
    const auto z = zero_mark_certificate(*M.ring, T, fam);
    uc.detail["zero_mark"] = {{"induced_elements_checked", z.elements_checked}, {"all_marks_at_G_zero", z.all_zero}, {"mark_of_unit", z.unit_mark.str()}};
  }
  rep.add(std::move(uc));

  ReportCheck ic{"induction isomorphisms (colim and lim over the family)", CheckStatus::Pass, 0, res.detail, Json::object()};
  if (res.status == InductionStatus::HypothesisFailure) ic.status = CheckStatus::HypothesisFailure;
  if (res.status == InductionStatus::Counterexample) {
    ic.status = CheckStatus::Fail;
    ic.detail["counterexample"] = res.detail;
  }
  if (res.colim) ic.detail["colim"] = res.colim->group.str();
  if (res.lim) ic.detail["lim"] = res.lim->group.str();
  ic.detail["value_at_G"] = localize_fg_abelian(M.module.value(L->whole()), mode).str();
  rep.add(std::move(ic));

  if (M.module.value(L->trivial()).is_trivial()) {
    const std::size_t one = L->trivial(), top = L->whole();
    const IntVector regular = M.ring->functor.ind(one, top).apply(M.ring->one(one));
    std::optional<Int> scalar;
    if (cfg.functor != "burnside") scalar = Int(static_cast<long long>(G->order()));
    const auto s = swan_vanishing_check(M, regular, scalar);
    ReportCheck sc{"[F] y = ind_1^F res_1^F y = 0 on M(F)", s.pass ? CheckStatus::Pass : CheckStatus::Fail, s.generators_checked, s.detail,
                   Json::object()};
    if (!s.pass) sc.detail["counterexample"] = s.detail;
    if (s.vanishes_after_inverting) sc.detail["vanishes_after_inverting_|F|"] = *s.vanishes_after_inverting;
    rep.add(std::move(sc));
  }
}

inline void run_artin(const SuiteConfig& cfg, Report& rep) {
  auto G = load_group(cfg.group);
  auto L = SubgroupLattice::of(G);
  const auto T = table_of_marks(L);
  rep.data["marks_classes"] = T.classes;
  Json marks = Json::array();
  for (std::size_t i = 0; i < T.size(); ++i) marks.push_back(int_vector_json(T.marks.row(i)));
  rep.data["marks"] = std::move(marks);
  rep.add(ReportCheck{"table of marks is lower triangular with positive diagonal", CheckStatus::Pass, T.size(), {}, Json::object()});

  CheckResult hom;
  for (std::size_t a = 0; a < T.size(); ++a)
    for (std::size_t b = 0; b < T.size(); ++b, ++hom.samples) {
      IntVector x(T.size()), y(T.size());
      x[a] = 1;
      y[b] = 1;
      const IntVector p = burnside_product(T, x, y);
      IntVector mp = T.marks_of(p), mx = T.marks_of(x), my = T.marks_of(y);
      for (std::size_t k = 0; k < mx.size(); ++k)
        if (mp[k] != mx[k] * my[k]) hom.fail("marks are not multiplicative on basis pair " + std::to_string(a) + "," + std::to_string(b));
    }
  rep.add("marks(x y) = marks(x) marks(y) on basis pairs", hom);

  const auto sol = artin_solve(L);
  const auto classes = conjugacy_classes(*G);
  std::vector<Rational> total(classes.size());
  for (std::size_t c = 0; c < sol.cyclic_classes.size(); ++c) {
    const auto chi = perm_character(G, (*L)[sol.cyclic_classes[c]]);
    for (std::size_t k = 0; k < total.size(); ++k) total[k] += Rational(sol.coefficients[c]) * chi.values[k];
  }
  bool ok = true;
  for (const auto& v : total) ok = ok && v == Rational(sol.n);
  const bool divides = Int(static_cast<long long>(G->order())) % sol.n == 0;
  Json art;
  art["n"] = sol.n.str();
  art["cyclic_classes"] = sol.cyclic_classes;
  art["coefficients"] = int_vector_json(sol.coefficients);
  if (auto at_order = artin_solve_at(L, Int(static_cast<long long>(G->order())))) art["coefficients_at_order"] = int_vector_json(at_order->coefficients);
  std::string terms;
  for (std::size_t c = 0; c < sol.cyclic_classes.size(); ++c)
    terms += (c ? " + " : "") + sol.coefficients[c].str() + " Ind_" + std::to_string(sol.cyclic_classes[c]) + "(1)";
  ReportCheck ac{"Artin induction: n 1 = sum over cyclic classes", ok && divides ? CheckStatus::Pass : CheckStatus::Fail, 0,
                 sol.n.str() + " 1 = " + terms, Json::object()};
  ac.detail["artin"] = std::move(art);
  if (!(ok && divides)) ac.detail["counterexample"] = ok ? "n does not divide |G|" : "re-expansion does not reproduce n 1";
  rep.add(std::move(ac));
}

inline void run_twisted(const SuiteConfig& cfg, Report& rep) {
  auto G = load_group(cfg.group);
  auto L = SubgroupLattice::of(G);
  auto rs = load_ring(cfg.ring, G);
  const auto ctx = TwistedCategoryCtx::whole(rs.action);
  MorphismSampler rng(cfg.seed);
  SampleConfig sc{cfg.samples, 3};

  if (!cfg.fixture.empty()) {
    const Json j = read_json_file(cfg.fixture);
    const TGObject a{detail::json_get<std::size_t>(detail::json_field(j, "domain"), "domain")};
    const TGObject b{detail::json_get<std::size_t>(detail::json_field(j, "codomain"), "codomain")};
    const auto phi = morphism_from_json(detail::json_field(j, "phi"), ctx, a, b);
    const auto psi = morphism_from_json(detail::json_field(j, "psi"), ctx, b, a);
    const bool inv = ctx.verify_inverse_pair(phi, psi);
    ReportCheck c{"fixture morphisms are mutually inverse", inv ? CheckStatus::Pass : CheckStatus::Fail, 1, {}, Json::object()};
    c.detail["psi_after_phi"] = ctx.compose(psi, phi).str(*G);
    if (!inv) c.detail["counterexample"] = "psi o phi = " + ctx.compose(psi, phi).str(*G);
    rep.add(std::move(c));
  }

  const auto v = validate_action(*G, *rs.ring, *rs.action);
  rep.add(ReportCheck{"ring action satisfies the right-action laws", v ? CheckStatus::Fail : CheckStatus::Pass, G->order(), v ? v->law : "",
                      Json::object()});

  CheckResult assoc, unit, anti;
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    TGObject a{rng.rank(1, 3)}, b{rng.rank(1, 3)}, c{rng.rank(1, 3)}, d{rng.rank(1, 3)};
    auto phi = rng.morphism(ctx, a, b), psi = rng.morphism(ctx, b, c), chi = rng.morphism(ctx, c, d);
    ++assoc.samples;
    if (!(ctx.compose(chi, ctx.compose(psi, phi)) == ctx.compose(ctx.compose(chi, psi), phi))) assoc.fail("associativity fails on " + phi.str(*G));
    ++unit.samples;
    if (!(ctx.compose(ctx.identity(b), phi) == phi && ctx.compose(phi, ctx.identity(a)) == phi)) unit.fail("identity law fails on " + phi.str(*G));
    const Elem g = rng.element(ctx.sub()), h = rng.element(ctx.sub());
    const RMatrix m = rng.matrix(2, 2, rs.ring->rank());
    ++anti.samples;
    if (!(apply_twist(*rs.action, G->mul(g, h), m) == apply_twist(*rs.action, h, apply_twist(*rs.action, g, m))))
      anti.fail("twist by gh differs from twist by h after g");
  }
  rep.add("composition is associative", assoc);
  rep.add("identities are two-sided", unit);
  rep.add("twist(gh) = twist(h) twist(g)", anti);

  CheckResult xi, eta;
  std::size_t xi_pairs = 0;
  for (std::size_t J = 0; J < L->size(); ++J)
    for (std::size_t I : L->subgroups_of(J)) {
      if (!keep(cfg, (*L)[J])) continue;
      const auto systems = rep_system_variants((*L)[J], (*L)[I], 3);
      for (const auto& r1 : systems)
        for (const auto& r2 : systems) {
          ++xi_pairs;
          SampleConfig small{std::max<std::size_t>(1, cfg.samples / 4), 3};
          xi.merge(check_natural_iso(rs.action, (*L)[I], FunctorDescriptor::res(r1), FunctorDescriptor::res(r2),
                                     [&](TGObject A) { return xi_witness(*rs.action, r1, r2, A); }, rng, small, "xi"));
        }
    }
  for (std::size_t I = 0; I < L->size(); ++I) {
    if (!keep(cfg, (*L)[I])) continue;
    for (Elem f : (*L)[I].members()) {
      SampleConfig small{std::max<std::size_t>(1, cfg.samples / 4), 3};
      eta.merge(check_natural_iso(rs.action, (*L)[I], FunctorDescriptor::ind((*L)[I], (*L)[I]), FunctorDescriptor::conj(f, (*L)[I]),
                                  [&](TGObject A) { return eta_witness(*rs.action, f, (*L)[I], A); }, rng, small, "eta"));
    }
  }
  rep.add("xi: Res for two representative systems are isomorphic", xi, std::to_string(xi_pairs) + " system pairs");
  rep.add("eta: c_f is isomorphic to the identity for f in I", eta);

  // Ind_1^F Res_1^F against Theta(regular lattice of F)
  const SubgroupRef one = SubgroupRef::trivial(G), top = SubgroupRef::whole(G);
  const RepSystem reps = left_coset_reps(top, one);
  const Lattice triv = Lattice::trivial(one);
  const auto lhs = FunctorDescriptor::composite({FunctorDescriptor::res(reps), FunctorDescriptor::ind(one, top)});
  const auto rhs = FunctorDescriptor::theta(Lattice::regular(top));
  CheckResult reg;
  if (k0_multiplier(lhs) != k0_multiplier(rhs) || k0_multiplier(lhs) != Int(static_cast<long long>(G->order())))
    reg.fail("rank multipliers differ from |F|");
  if (!(lattice_induce(reps, triv).rank() == Lattice::regular(top).rank())) reg.fail("induced trivial lattice has the wrong rank");
  reg.merge(frobenius_check(2, rs.action, reps, triv, rng, sc));
  rep.add("Ind_1^F Res_1^F ~ Theta(Z[F]), multiplier " + k0_multiplier(lhs).str(), reg);
}

}  // namespace detail

/// Runs one subcommand. Input errors propagate as Error(InputError, ...).
inline Report run_suite(const SuiteConfig& cfg, bool explicit_family = true) {
  Report rep;
  rep.config = cfg;
  const auto t0 = std::chrono::steady_clock::now();
  if (cfg.command == "group") detail::run_group(cfg, rep);
  else if (cfg.command == "families") detail::run_families(cfg, rep, explicit_family);
  else if (cfg.command == "axioms") detail::run_axioms(cfg, rep);
  else if (cfg.command == "frobenius") detail::run_frobenius(cfg, rep);
  else if (cfg.command == "dress") detail::run_dress(cfg, rep);
  else if (cfg.command == "artin") detail::run_artin(cfg, rep);
  else if (cfg.command == "twisted") detail::run_twisted(cfg, rep);
  else if (cfg.command == "none") {
  } else throw Error(ErrorCode::InputError, "unknown command '" + cfg.command + "'");
  if (cfg.timing) rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

/// Errors that mean the input itself was unusable.
inline bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::InputError:
    case ErrorCode::IoError:
    case ErrorCode::InvalidPermutation:
    case ErrorCode::OrderCapExceeded:
    case ErrorCode::InvalidAlgebra:
    case ErrorCode::ActionViolation:
    case ErrorCode::NotASubgroup:
    case ErrorCode::DimensionMismatch: return true;
    default: return false;
  }
}

}  // namespace mackey
