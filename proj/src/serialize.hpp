// JSON encoding of elements and presentations.
//
// A bracket tree is a generator name string or a two-element array
// [left, right]. An element is a list of [numerator, denominator, tree]
// triples. A presentation is {generators: [{name, degree}…], truncation: N,
// differential: {name: element…}} with every generator listed.
#pragma once

#include <string>

#include "../vendor/json.hpp"
#include "lie.hpp"

namespace cdgl {

using Json = nlohmann::ordered_json;

Json tree_to_json(const Presentation& P, const Tree& t);
Json element_to_json(const Presentation& P, const LieElement& x);
Json presentation_to_json(const Presentation& P);

Tree tree_from_json(const Presentation& P, const Json& j);
LieElement element_from_json(const Presentation& P, const Json& j);
Presentation presentation_from_json(const Json& j);

// Serialized with two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace cdgl
