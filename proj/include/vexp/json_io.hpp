#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "vexp/duality.hpp"
#include "vexp/exponents.hpp"
#include "vexp/modular.hpp"
#include "vexp/orlicz.hpp"

namespace vexp {

using json = nlohmann::json;

namespace json_detail {

inline void expect_keys(const json& j, const char* who,
                        std::initializer_list<const char*> allowed) {
  if (!j.is_object())
    throw std::invalid_argument(std::string(who) + ": expected an object");
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* k : allowed)
      if (key == k) ok = true;
    if (!ok)
      throw std::invalid_argument(std::string(who) + ": unknown key '" + key +
                                  "'");
  }
}

inline void require(const json& j, const char* who, const char* key) {
  if (!j.contains(key))
    throw std::invalid_argument(std::string(who) + ": missing key '" + key +
                                "'");
}

}  // namespace json_detail

/// Exponent: a positive number or the string "inf".
inline Exponent exponent_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return Exponent::infinity();
    throw std::invalid_argument("exponent: string form must be \"inf\"");
  }
  if (!j.is_number()) throw std::invalid_argument("exponent: expected number or \"inf\"");
  return Exponent(j.get<double>());
}

inline json exponent_to_json(Exponent p) {
  if (p.is_infinite()) return json("inf");
  return json(p.finite_value());
}

inline std::vector<ExponentAtom> atoms_from_json(const json& j,
                                                 const char* who) {
  if (!j.is_array()) throw std::invalid_argument(std::string(who) + ": atoms must be an array");
  std::vector<ExponentAtom> atoms;
  for (const auto& a : j) {
    json_detail::expect_keys(a, who, {"p", "w"});
    json_detail::require(a, who, "p");
    json_detail::require(a, who, "w");
    atoms.push_back(ExponentAtom{exponent_from_json(a["p"]), a["w"].get<double>()});
  }
  return atoms;
}

inline json atoms_to_json(const std::vector<ExponentAtom>& atoms) {
  json arr = json::array();
  for (const auto& a : atoms)
    arr.push_back({{"p", exponent_to_json(a.p)}, {"w", a.w}});
  return arr;
}

inline TailSpec tail_from_json(const json& j) {
  json_detail::expect_keys(j, "tail", {"kind", "p"});
  json_detail::require(j, "tail", "kind");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "none") return TailSpec::none();
  json_detail::require(j, "tail", "p");
  if (kind == "constant") return TailSpec::constant(exponent_from_json(j["p"]));
  if (kind == "convergent")
    return TailSpec::convergent(exponent_from_json(j["p"]));
  if (kind == "periodic") {
    if (!j["p"].is_array())
      throw std::invalid_argument("tail: periodic form needs a list of exponents");
    std::vector<Exponent> ps;
    for (const auto& e : j["p"]) ps.push_back(exponent_from_json(e));
    return TailSpec::periodic(std::move(ps));
  }
  throw std::invalid_argument("tail: unknown kind '" + kind + "'");
}

inline VarExponent var_exponent_from_json(const json& j) {
  json_detail::expect_keys(j, "exponent", {"atoms", "tail"});
  json_detail::require(j, "exponent", "atoms");
  TailSpec tail = j.contains("tail") ? tail_from_json(j["tail"]) : TailSpec::none();
  return VarExponent(atoms_from_json(j["atoms"], "exponent"), std::move(tail));
}

inline json var_exponent_to_json(const VarExponent& P) {
  json out{{"atoms", atoms_to_json(P.atoms())}};
  switch (P.tail().kind()) {
    case TailSpec::Kind::none:
      break;
    case TailSpec::Kind::constant:
      out["tail"] = {{"kind", "constant"},
                     {"p", exponent_to_json(P.tail().values().front())}};
      break;
    case TailSpec::Kind::convergent:
      out["tail"] = {{"kind", "convergent"},
                     {"p", exponent_to_json(P.tail().values().front())}};
      break;
    case TailSpec::Kind::periodic: {
      json ps = json::array();
      for (const auto& p : P.tail().values()) ps.push_back(exponent_to_json(p));
      out["tail"] = {{"kind", "periodic"}, {"p", ps}};
      break;
    }
  }
  return out;
}

inline WeightedVector weighted_vector_from_json(const json& j) {
  json_detail::expect_keys(j, "vector", {"entries"});
  json_detail::require(j, "vector", "entries");
  std::vector<WeightedVector::Entry> es;
  for (const auto& e : j["entries"]) {
    json_detail::expect_keys(e, "vector entry", {"i", "v"});
    json_detail::require(e, "vector entry", "i");
    json_detail::require(e, "vector entry", "v");
    es.push_back(WeightedVector::Entry{e["i"].get<std::size_t>(),
                                       e["v"].get<double>()});
  }
  return WeightedVector(std::move(es));
}

inline json weighted_vector_to_json(const WeightedVector& f) {
  json entries = json::array();
  for (const auto& e : f.entries())
    entries.push_back({{"i", e.i}, {"v", e.v}});
  return json{{"entries", entries}};
}

/// Orlicz function descriptors:
///   {"kind":"phi","p":2}            {"kind":"psi","p":2}
///   {"kind":"log","r":2,"a":1}      {"kind":"mixture","atoms":[...]}
///   {"kind":"lacunary","r":[...],"b":[...],"limit":1.0}
inline OrliczFn orlicz_from_json(const json& j) {
  json_detail::require(j, "orlicz", "kind");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "phi" || kind == "psi") {
    json_detail::expect_keys(j, "orlicz", {"kind", "p"});
    json_detail::require(j, "orlicz", "p");
    const Exponent p = exponent_from_json(j["p"]);
    return kind == "phi" ? OrliczFn::power_phi(p) : OrliczFn::power_psi(p);
  }
  if (kind == "log") {
    json_detail::expect_keys(j, "orlicz", {"kind", "r", "a"});
    json_detail::require(j, "orlicz", "r");
    json_detail::require(j, "orlicz", "a");
    return OrliczFn::log_perturbed(j["r"].get<double>(), j["a"].get<double>());
  }
  if (kind == "mixture") {
    json_detail::expect_keys(j, "orlicz", {"kind", "atoms"});
    json_detail::require(j, "orlicz", "atoms");
    return OrliczFn::mixture(
        ExponentMeasure(atoms_from_json(j["atoms"], "mixture")));
  }
  if (kind == "lacunary") {
    json_detail::expect_keys(j, "orlicz", {"kind", "r", "b", "limit"});
    json_detail::require(j, "orlicz", "r");
    json_detail::require(j, "orlicz", "b");
    const auto r = j["r"].get<std::vector<double>>();
    const auto b = j["b"].get<std::vector<double>>();
    // Default tail limit: the last listed exponent.
    const double limit =
        j.contains("limit") ? j["limit"].get<double>() : r.back();
    return lacunary_build(r, b, r.size(), limit);
  }
  throw std::invalid_argument("orlicz: unknown kind '" + kind + "'");
}

inline json norming_pair_to_json(const NormingPair& pair) {
  return json{{"f", weighted_vector_to_json(pair.f)},
              {"g", weighted_vector_to_json(pair.g)},
              {"pairing", pair.pairing},
              {"rho_p", pair.rho_p},
              {"rho_q", pair.rho_q}};
}

}  // namespace vexp
