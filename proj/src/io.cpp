#include "ordcomp/io.hpp"

#include <fstream>
#include <sstream>

#include "ordcomp/error.hpp"

namespace ordcomp::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::InvalidInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<std::string> string_array(const json& j, const char* what) {
  if (!j.is_array()) throw Error(Errc::InvalidInput, std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw Error(Errc::InvalidInput, std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::map<std::string, std::string> string_map(const json& j) {
  if (!j.is_object()) throw Error(Errc::InvalidInput, "map must be an object of name -> name");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) throw Error(Errc::InvalidInput, "map values must be element names");
    out.emplace(k, v.get<std::string>());
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string set_label(const std::vector<std::string>& labels, Mask m) {
  std::string s = "{";
  bool first = true;
  for_each_bit(m, [&](std::size_t i) {
    if (!first) s += ",";
    s += labels[i];
    first = false;
  });
  return s + "}";
}

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidInput, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

json to_json(const Poset& p) {
  json rel = json::array();
  for (const auto& [a, b] : p.covers()) rel.push_back({p.label(a), p.label(b)});
  return {{"elements", p.labels()}, {"relation", rel}, {"relation_kind", "covers"}};
}

Poset poset_from_json(const json& j, const Limits& limits) {
  auto labels = string_array(field(j, "elements"), "elements");
  RelationKind kind = RelationKind::Covers;
  if (j.contains("relation_kind")) {
    const auto& k = j.at("relation_kind");
    if (k == "covers") {
      kind = RelationKind::Covers;
    } else if (k == "full") {
      kind = RelationKind::Full;
    } else {
      throw Error(Errc::InvalidInput, "relation_kind must be \"covers\" or \"full\"");
    }
  }
  std::vector<Poset::NamePair> pairs;
  const json rel = j.contains("relation") ? j.at("relation") : json::array();
  if (!rel.is_array()) throw Error(Errc::InvalidInput, "relation must be an array of pairs");
  for (const auto& pr : rel) {
    if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string()) {
      throw Error(Errc::InvalidInput, "relation entries must be [string, string]");
    }
    pairs.emplace_back(pr[0].get<std::string>(), pr[1].get<std::string>());
  }
  return Poset::build(std::move(labels), pairs, kind, limits);
}

json to_json(const CarrierSet& s) { return {{"elements", s.labels()}}; }

Domain domain_from_json(const json& j, const Limits& limits) {
  if (j.is_object() && j.contains("relation")) return poset_from_json(j, limits);
  auto labels = string_array(field(j, "elements"), "elements");
  if (labels.size() > limits.max_arity) throw Error(Errc::ResourceCap, "set arity exceeds cap");
  return CarrierSet(std::move(labels));
}

json subset_to_json(const std::vector<std::string>& labels, Mask m) {
  json out = json::array();
  for_each_bit(m, [&](std::size_t i) { out.push_back(labels[i]); });
  return out;
}

Subset subset_from_json(const CarrierSet& carrier, const json& j) {
  const auto names = string_array(j, "subset");
  return carrier.subset(names);
}

json to_json(const CompletedPoset& c) {
  const auto& labels = c.parent().labels();
  json cuts = json::array();
  for (Mask m : c.cut_masks()) cuts.push_back(subset_to_json(labels, m));
  json emb = json::object();
  for (std::size_t x = 0; x < labels.size(); ++x) emb[labels[x]] = c.embedding(x);
  return {{"parent", to_json(c.parent())}, {"cuts", cuts}, {"embedding", emb}};
}

json to_json(const PosetMap& m) {
  json src = m.source_ordered() ? to_json(m.source_poset()) : to_json(m.source_carrier());
  json mp = json::object();
  for (std::size_t x = 0; x < m.assignment().size(); ++x) {
    mp[m.source_carrier().label(x)] = m.target().label(m(x));
  }
  return {{"source", src}, {"target", to_json(m.target())}, {"map", mp}};
}

PosetMap map_from_json(const json& j, const Limits& limits) {
  Domain src = domain_from_json(field(j, "source"), limits);
  Poset tgt = poset_from_json(field(j, "target"), limits);
  return PosetMap::from_names(std::move(src), std::move(tgt), string_map(field(j, "map")));
}

json to_json(const EquationInstance& e) {
  json mp = json::object();
  for (std::size_t x = 0; x < e.domain().size(); ++x) {
    mp[e.domain().label(x)] = e.codomain().label(e.map()(x));
  }
  return {{"domain", to_json(e.domain())}, {"codomain", to_json(e.codomain())}, {"map", mp}};
}

EquationInstance equation_from_json(const json& j, const Limits& limits) {
  const auto& dom = field(j, "domain");
  auto labels = string_array(field(dom, "elements"), "domain elements");
  if (labels.size() > limits.max_arity) throw Error(Errc::ResourceCap, "domain arity exceeds cap");
  CarrierSet x(std::move(labels));
  Poset y = poset_from_json(field(j, "codomain"), limits);
  PosetMap t = PosetMap::from_names(x, y, string_map(field(j, "map")));
  return EquationInstance::build(t, limits);
}

Subset target_from_json(const Poset& codomain, const json& j) {
  if (j.is_object() && j.contains("cut")) return subset_from_json(codomain.carrier(), j.at("cut"));
  if (j.is_object() && j.contains("principal")) {
    if (!j.at("principal").is_string()) throw Error(Errc::InvalidInput, "principal must be an element name");
    return down_set(codomain, j.at("principal").get<std::string>());
  }
  throw Error(Errc::InvalidInput, "target must be {\"cut\": [...]} or {\"principal\": name}");
}

json to_json(const MacNeilleReport& r) {
  return {{"allPassed", r.all_passed()},
          {"complete", r.complete},
          {"completenessExhaustive", r.completeness_exhaustive},
          {"familiesChecked", r.families_checked},
          {"embeddingOie", r.embedding_oie},
          {"preservesExistingBounds", r.preserves_bounds},
          {"preservationExhaustive", r.preservation_exhaustive},
          {"existingBoundsChecked", r.existing_bounds_checked},
          {"density", r.density},
          {"densityInfEmptyFamily", r.density_inf_empty_family},
          {"counterexample", r.counterexample}};
}

json to_json(const SolveReport& r, const EquationInstance& e) {
  const auto& ql = e.quotient().order().labels();
  const auto& yl = e.codomain().labels();
  const auto& xc = e.quotient_completion();
  auto family = [&](const std::vector<std::size_t>& idx) {
    json out = json::array();
    for (auto i : idx) out.push_back(subset_to_json(ql, xc.mask(i)));
    return out;
  };
  json classes = json::array();
  for (std::size_t u = 0; u < e.quotient().size(); ++u) {
    classes.push_back({{"representative", ql[u]},
                       {"members", subset_to_json(e.domain().labels(), e.quotient().classes()[u])},
                       {"image", yl[e.class_map().base()(u)]}});
  }
  const auto& a = r.assumptions;
  return {
      {"schemaVersion", kSchemaVersion},
      {"target", subset_to_json(yl, r.target.mask())},
      {"quotientClasses", classes},
      {"lowerFamily", family(r.lower_family)},
      {"upperFamily", family(r.upper_family)},
      {"supOfImages", subset_to_json(yl, r.sup_of_images.mask())},
      {"infOfImages", subset_to_json(yl, r.inf_of_images.mask())},
      {"supOfLowerFamily", subset_to_json(ql, r.sup_of_lower.mask())},
      {"infOfUpperFamily", subset_to_json(ql, r.inf_of_upper.mask())},
      {"solvable", r.solvable},
      {"solution", r.solution ? subset_to_json(ql, r.solution->mask()) : json(nullptr)},
      {"emptyFamilyFlags", {{"lowerFamilyEmpty", r.lower_family_empty}, {"upperFamilyEmpty", r.upper_family_empty}}},
      {"assumptionFlags",
       {{"quotientHasMinimum", a.quotient_has_minimum},
        {"quotientHasMaximum", a.quotient_has_maximum},
        {"codomainHasMinimum", a.codomain_has_minimum},
        {"codomainHasMaximum", a.codomain_has_maximum},
        {"emptyCutInQuotientCompletion", a.empty_cut_in_quotient_completion},
        {"emptyCutInCodomainCompletion", a.empty_cut_in_codomain_completion},
        {"deviatesFromNoMinNoMax", a.deviates()}}},
  };
}

json to_json(const GlobalReport& g, const EquationInstance& e) {
  json missing = json::array();
  for (auto y : g.missing_principal) missing.push_back(e.codomain().label(y));
  return {{"schemaVersion", kSchemaVersion},
          {"quotientCuts", g.quotient_cuts},
          {"codomainCuts", g.codomain_cuts},
          {"imageSize", g.image_size},
          {"imageContainsPrincipalCuts", g.image_contains_principal},
          {"imageIsWholeCompletion", g.image_is_everything},
          {"conditionsAgree", g.conditions_agree},
          {"orderIsomorphism", g.order_isomorphism ? json(*g.order_isomorphism) : json(nullptr)},
          {"missingPrincipal", missing}};
}

json to_json(const ExtensionReport& r) {
  return {{"increasingOnPowerset", std::string(to_string(r.increasing_on_powerset))},
          {"powersetExhaustive", r.powerset_exhaustive},
          {"commutesWithEmbedding", std::string(to_string(r.commutes_with_embedding))},
          {"oieOnCuts", std::string(to_string(r.oie_on_cuts))},
          {"counterexample", r.counterexample}};
}

std::string to_dot(const CompletedPoset& c) {
  const auto& labels = c.parent().labels();
  std::vector<std::string> principal_of(c.size());
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto& tag = principal_of[c.embedding(x)];
    tag += (tag.empty() ? "" : ",") + labels[x];
  }
  std::ostringstream out;
  out << "digraph completion {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    out << "  c" << i << " [label=\"" << dot_escape(set_label(labels, c.mask(i)));
    if (!principal_of[i].empty()) {
      out << "\\n<" << dot_escape(principal_of[i]) << "]\", style=filled, fillcolor=lightblue";
    } else {
      out << "\"";
    }
    out << "];\n";
  }
  for (const auto& [a, b] : c.hasse_edges()) out << "  c" << a << " -> c" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace ordcomp::io
