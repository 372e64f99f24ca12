#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "mackey/burnside.hpp"
#include "mackey/twisted.hpp"
#include "mackey/zalgebra.hpp"

namespace mackey {

using Json = nlohmann::ordered_json;

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InputError, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InputError, "malformed JSON in '" + path + "': " + e.what());
  }
}

namespace detail {
template <class T>
T json_get(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::InputError, std::string("bad value for ") + what);
  }
}

inline const Json& json_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::InputError, std::string("missing field '") + key + "'");
  return j.at(key);
}

inline IntMatrix json_int_matrix(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::InputError, std::string(what) + " must be a matrix");
  std::vector<IntVector> rows;
  std::size_t cols = 0;
  for (const auto& r : j) {
    if (!r.is_array()) throw Error(ErrorCode::InputError, std::string(what) + " must be a list of rows");
    IntVector row;
    for (const auto& x : r) {
      if (x.is_number_integer()) row.emplace_back(x.get<long long>());
      else if (x.is_string()) row.emplace_back(Int(x.get<std::string>()));
      else throw Error(ErrorCode::InputError, std::string(what) + " has a non-integer entry");
    }
    if (!rows.empty() && row.size() != cols) throw Error(ErrorCode::InputError, std::string(what) + " is ragged");
    cols = row.size();
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows, cols);
}

inline IntVector json_int_vector(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::InputError, std::string(what) + " must be a list");
  IntVector v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(ErrorCode::InputError, std::string(what) + " has a non-integer entry");
    v.emplace_back(x.get<long long>());
  }
  return v;
}

inline std::pair<std::size_t, std::size_t> parse_pair_key(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::InputError, "map key '" + key + "' must look like 'a,b'");
  try {
    return {std::stoul(key.substr(0, comma)), std::stoul(key.substr(comma + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::InputError, "map key '" + key + "' must look like 'a,b'");
  }
}
}  // namespace detail

inline Json int_matrix_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    out.push_back(std::move(row));
  }
  return out;
}

inline Json int_vector_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) {
    if (abs(x) < Int(1) << 53) out.push_back(static_cast<long long>(x));
    else out.push_back(x.str());
  }
  return out;
}

/// {"degree": n, "generators": [[images], ...]}
inline GroupPtr group_from_json(const Json& j) {
  const auto degree = detail::json_get<std::size_t>(detail::json_field(j, "degree"), "degree");
  const auto& gens = detail::json_field(j, "generators");
  if (!gens.is_array()) throw Error(ErrorCode::InputError, "generators must be a list");
  std::vector<Perm> perms;
  for (const auto& g : gens) perms.emplace_back(detail::json_get<std::vector<std::uint32_t>>(g, "generator"));
  return FiniteGroup::generate(degree, perms);
}

/// Builtin name, or a path to a group file.
inline GroupPtr load_group(const std::string& spec) {
  if (std::filesystem::exists(spec)) return group_from_json(read_json_file(spec));
  return named_group(spec);
}

/// {"rank": d, "structure": [[[...]]], "unit": [...], "action": {"<generator index>": matrix}}.
/// The action gives a left action on generators; missing generators act trivially.
inline RingSetup ring_from_json(const Json& j, const GroupPtr& G, const std::string& name = "custom") {
  const auto rank = detail::json_get<std::size_t>(detail::json_field(j, "rank"), "rank");
  const auto& st = detail::json_field(j, "structure");
  std::vector<std::vector<ZVec>> c;
  if (!st.is_array()) throw Error(ErrorCode::InputError, "structure must be a list");
  for (const auto& row : st) {
    c.emplace_back();
    if (!row.is_array()) throw Error(ErrorCode::InputError, "structure rows must be lists");
    for (const auto& v : row) c.back().push_back(detail::json_int_vector(v, "structure constant"));
  }
  ZVec unit = detail::json_int_vector(detail::json_field(j, "unit"), "unit");
  auto ring = std::make_shared<const ZAlgebra>(name, rank, std::move(c), std::move(unit));
  std::vector<IntMatrix> tau(G->generators().size(), IntMatrix::identity(rank));
  if (j.contains("action")) {
    for (const auto& [k, m] : j.at("action").items()) {
      std::size_t idx = 0;
      try {
        idx = std::stoul(k);
      } catch (const std::exception&) {
        throw Error(ErrorCode::InputError, "action key '" + k + "' is not a generator index");
      }
      if (idx >= tau.size()) throw Error(ErrorCode::InputError, "action key '" + k + "' out of range");
      tau[idx] = detail::json_int_matrix(m, "action matrix");
    }
  }
  auto action = std::make_shared<const RingAction>(RingAction::from_left_generators(G, ring, tau));
  if (auto v = validate_action(*G, *ring, *action)) throw Error(ErrorCode::ActionViolation, "ring action fails the " + v->law + " law");
  return {std::move(ring), std::move(action)};
}

inline RingSetup load_ring(const std::string& spec, const GroupPtr& G) {
  if (std::filesystem::exists(spec)) return ring_from_json(read_json_file(spec), G, std::filesystem::path(spec).stem().string());
  return named_ring(spec, G);
}

/// Morphism literal: list of {"element": [generator letters], "matrix": [[[coefficients]]]}.
inline TGMorphism morphism_from_json(const Json& j, const TwistedCategoryCtx& ctx, TGObject domain, TGObject codomain) {
  if (!j.is_array()) throw Error(ErrorCode::InputError, "morphism literal must be a list");
  TGMorphism phi(domain, codomain, ctx.ring().rank());
  for (const auto& term : j) {
    const auto word = detail::json_get<std::vector<std::size_t>>(detail::json_field(term, "element"), "element word");
    const Elem g = ctx.group().word(word);
    const auto& mj = detail::json_field(term, "matrix");
    if (!mj.is_array() || mj.size() != codomain.rank) throw Error(ErrorCode::InputError, "component has the wrong number of rows");
    RMatrix m(codomain.rank, domain.rank, ctx.ring().rank());
    for (std::size_t r = 0; r < codomain.rank; ++r) {
      if (!mj[r].is_array() || mj[r].size() != domain.rank) throw Error(ErrorCode::InputError, "component has the wrong number of columns");
      for (std::size_t c = 0; c < domain.rank; ++c) {
        ZVec v = detail::json_int_vector(mj[r][c], "ring element");
        if (v.size() != ctx.ring().rank()) throw Error(ErrorCode::InputError, "ring element has the wrong length");
        m(r, c) = std::move(v);
      }
    }
    phi.add(g, m);
  }
  ctx.check_support(phi);
  return phi;
}

/// Mackey fixture. Either a builtin base with overrides,
///   {"group": ..., "base": "fixed_point" | "burnside" | "torsion", "overrides": {"ind": {"I,J": matrix}, ...}}
/// or fully explicit,
///   {"group": ..., "values": {"<sid>": {"generators": n, "relations": [[...]]}}, "res": {"I,J": m}, "ind": {...}, "conj": {"f,I": m}}.
/// Subgroup ids are lattice indices; f is an element index.
struct MackeyFixture {
  LatticePtr lattice;
  MackeyFunctor functor;
};

inline MackeyFixture mackey_fixture_from_json(const Json& j) {
  const auto& gj = detail::json_field(j, "group");
  GroupPtr G = gj.is_string() ? load_group(gj.get<std::string>()) : group_from_json(gj);
  LatticePtr L = SubgroupLattice::of(G);
  MackeyFunctor M;
  auto check_pair = [&](std::size_t a, std::size_t b, bool nested) {
    if (a >= L->size() || b >= L->size()) throw Error(ErrorCode::InputError, "subgroup id out of range");
    if (nested && !L->is_subgroup(a, b)) throw Error(ErrorCode::InputError, "map key names a non-nested pair");
  };
  auto apply_maps = [&](const Json& maps) {
    if (maps.contains("res"))
      for (const auto& [k, m] : maps.at("res").items()) {
        auto [I, J] = detail::parse_pair_key(k);
        check_pair(I, J, true);
        M.set_res(I, J, detail::json_int_matrix(m, "res matrix"));
      }
    if (maps.contains("ind"))
      for (const auto& [k, m] : maps.at("ind").items()) {
        auto [I, J] = detail::parse_pair_key(k);
        check_pair(I, J, true);
        M.set_ind(I, J, detail::json_int_matrix(m, "ind matrix"));
      }
    if (maps.contains("conj"))
      for (const auto& [k, m] : maps.at("conj").items()) {
        auto [f, I] = detail::parse_pair_key(k);
        if (f >= G->order()) throw Error(ErrorCode::InputError, "conj key names an element out of range");
        check_pair(I, I, false);
        M.set_conj(static_cast<Elem>(f), I, detail::json_int_matrix(m, "conj matrix"));
      }
  };
  if (j.contains("base")) {
    const auto base = detail::json_get<std::string>(j.at("base"), "base");
    if (base == "fixed_point") M = fixed_point_functor(L);
    else if (base == "burnside") M = burnside_green_functor(L)->functor;
    else if (base == "torsion") M = torsion_module(fixed_point_green(L)).module;
    else throw Error(ErrorCode::InputError, "unknown base functor '" + base + "'");
    if (j.contains("overrides")) apply_maps(j.at("overrides"));
  } else {
    const auto& vals = detail::json_field(j, "values");
    std::vector<FgAbelianGroup> v(L->size());
    std::vector<bool> seen(L->size(), false);
    for (const auto& [k, spec] : vals.items()) {
      std::size_t s = 0;
      try {
        s = std::stoul(k);
      } catch (const std::exception&) {
        throw Error(ErrorCode::InputError, "value key '" + k + "' is not a subgroup id");
      }
      if (s >= L->size()) throw Error(ErrorCode::InputError, "value key '" + k + "' out of range");
      const auto n = detail::json_get<std::size_t>(detail::json_field(spec, "generators"), "generators");
      IntMatrix rel = spec.contains("relations") ? detail::json_int_matrix(spec.at("relations"), "relations") : IntMatrix(0, n);
      if (rel.rows() == 0) rel = IntMatrix(0, n);
      v[s] = FgAbelianGroup(n, std::move(rel));
      seen[s] = true;
    }
    for (std::size_t s = 0; s < L->size(); ++s)
      if (!seen[s]) throw Error(ErrorCode::InputError, "fixture has no value for subgroup " + std::to_string(s));
    M = MackeyFunctor(L, std::move(v), j.value("name", std::string("fixture")));
    apply_maps(j);
    if (!M.is_complete()) throw Error(ErrorCode::InputError, "fixture is missing res, ind or conj maps");
  }
  return {L, std::move(M)};
}

}  // namespace mackey
