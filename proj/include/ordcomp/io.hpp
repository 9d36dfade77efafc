#pragma once

// JSON (schema version 1) and DOT formats consumed and produced by the CLI.

#include <string>

#include "json.hpp"
#include "ordcomp/completion.hpp"
#include "ordcomp/mapext.hpp"
#include "ordcomp/solver.hpp"

namespace ordcomp::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Parses text; malformed JSON becomes Error(InvalidInput).
json parse(const std::string& text);
json read_file(const std::string& path);

/// {"elements": [...], "relation": [[a, b], ...], "relation_kind": "covers"|"full"}.
/// Emitted with the cover relation.
json to_json(const Poset& p);
Poset poset_from_json(const json& j, const Limits& limits = {});

json to_json(const CarrierSet& s);
/// A poset object if "relation" is present, otherwise a plain set.
Domain domain_from_json(const json& j, const Limits& limits = {});

/// Sorted array of element names.
json subset_to_json(const std::vector<std::string>& labels, Mask m);
Subset subset_from_json(const CarrierSet& carrier, const json& j);

/// {"parent": <poset>, "cuts": [[names]...], "embedding": {element: cutIndex}}.
json to_json(const CompletedPoset& c);

/// {"source": <poset|set>, "target": <poset>, "map": {src: tgt}}.
json to_json(const PosetMap& m);
PosetMap map_from_json(const json& j, const Limits& limits = {});

/// {"domain": {"elements": [...]}, "codomain": <poset>, "map": {...}}.
json to_json(const EquationInstance& e);
EquationInstance equation_from_json(const json& j, const Limits& limits = {});

/// {"cut": [names]} or {"principal": name}; the cut form is taken as given
/// and validated later by the solver.
Subset target_from_json(const Poset& codomain, const json& j);

json to_json(const MacNeilleReport& r);
json to_json(const SolveReport& r, const EquationInstance& e);
json to_json(const GlobalReport& g, const EquationInstance& e);
json to_json(const ExtensionReport& r);

/// Hasse diagram of the completion; principal cuts <x] are drawn filled and
/// tagged with x.
std::string to_dot(const CompletedPoset& c);

}  // namespace ordcomp::io
