#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "quasiaffine/closed_form.hpp"
#include "quasiaffine/omega.hpp"
#include "quasiaffine/oracle.hpp"
#include "quasiaffine/rational.hpp"

// JSON renderings of the analysis results.
namespace quasiaffine::render {

using json = nlohmann::ordered_json;

/// Integers that do not fit in int64 are emitted as decimal strings.
inline json integer(const Integer& z) {
  static const Integer lo(std::numeric_limits<std::int64_t>::min());
  static const Integer hi(std::numeric_limits<std::int64_t>::max());
  if (lo <= z && z <= hi) return json(z.convert_to<std::int64_t>());
  return json(z.str());
}

inline json to_json(const IntegerSet& s) {
  if (std::holds_alternative<EmptySet>(s)) return {{"kind", "empty"}};
  if (const auto* r = std::get_if<IntegerRange>(&s))
    return {{"kind", "range"}, {"lo", integer(r->lo)}, {"hi", integer(r->hi)}};
  return {{"kind", "all_integers"}};
}

inline json to_json(const std::vector<CyclePair>& pairs) {
  json arr = json::array();
  for (const auto& pr : pairs) arr.push_back(json::array({integer(pr.a), integer(pr.b)}));
  return {{"kind", "finite"}, {"pairs", std::move(arr)}};
}

inline json to_json(const TwoCycleSet& s) {
  if (const auto* f = std::get_if<FiniteCycles>(&s)) return to_json(f->pairs);
  return {{"kind", "neg_one_family"}, {"c", integer(std::get<NegOneFamily>(s).c)}};
}

inline json to_json(const CountValue& c) {
  if (const auto* f = std::get_if<FiniteCount>(&c)) return {{"kind", "finite"}, {"n", integer(f->n)}};
  return {{"kind", "infinite"}};
}

inline json to_json(const OmegaLimit& w) {
  struct Visitor {
    json operator()(const FixedLimit& f) const { return {{"kind", "fixed"}, {"z", integer(f.z)}}; }
    json operator()(const TwoCycleLimit& c) const {
      return {{"kind", "two_cycle"}, {"a", integer(c.a)}, {"b", integer(c.b)}};
    }
    json operator()(const PlusInfinity&) const { return {{"kind", "plus_inf"}}; }
    json operator()(const MinusInfinity&) const { return {{"kind", "minus_inf"}}; }
    json operator()(const PlusMinusInfinity&) const { return {{"kind", "plus_minus_inf"}}; }
  };
  return std::visit(Visitor{}, w);
}

inline json to_json(CaseTag tag) { return {{"case", std::string(to_string(tag))}}; }

inline json to_json(const oracle::Verdict& v) { return {{"agrees", v.agrees}, {"detail", v.detail}}; }

// Plain-text forms for --plain.

inline std::string plain(const IntegerSet& s) {
  if (std::holds_alternative<EmptySet>(s)) return "empty";
  if (const auto* r = std::get_if<IntegerRange>(&s)) return "{" + r->lo.str() + ".." + r->hi.str() + "}";
  return "all integers";
}

inline std::string plain(const std::vector<CyclePair>& pairs) {
  if (pairs.empty()) return "none";
  std::string out;
  for (const auto& pr : pairs) {
    if (!out.empty()) out += ' ';
    out += "{" + pr.a.str() + "," + pr.b.str() + "}";
  }
  return out;
}

inline std::string plain(const TwoCycleSet& s) {
  if (const auto* f = std::get_if<FiniteCycles>(&s)) return plain(f->pairs);
  const auto& c = std::get<NegOneFamily>(s).c;
  return "{x, " + c.str() + " - x} for every integer x with 2x != " + c.str();
}

inline std::string plain(const OmegaLimit& w) { return describe(w); }

}  // namespace quasiaffine::render
