#include "serialize.hpp"

#include <stdexcept>

namespace cdgl {

namespace {

Json int_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

mpz_class int_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<int64_t>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::runtime_error("expected integer or integer string");
}

}  // namespace

Json tree_to_json(const Presentation& P, const Tree& t) {
  if (is_leaf(t)) return Json(P.gen(t[0]).name);
  auto [l, r] = children(t);
  return Json::array({tree_to_json(P, l), tree_to_json(P, r)});
}

Json element_to_json(const Presentation& P, const LieElement& x) {
  Json out = Json::array();
  for (const auto& [t, c] : x.terms)
    out.push_back(Json::array({int_to_json(c.get_num()), int_to_json(c.get_den()),
                               tree_to_json(P, t)}));
  return out;
}

Json presentation_to_json(const Presentation& P) {
  Json gens = Json::array();
  for (int32_t g = 0; g < P.size(); ++g)
    gens.push_back(Json{{"name", P.gen(g).name}, {"degree", P.gen(g).degree}});
  Json diff = Json::object();
  for (int32_t g = 0; g < P.size(); ++g)
    diff[P.gen(g).name] = element_to_json(P, P.differential(g));
  return Json{{"generators", gens}, {"truncation", P.truncation()}, {"differential", diff}};
}

Tree tree_from_json(const Presentation& P, const Json& j) {
  if (j.is_string()) {
    int g = P.id(j.get<std::string>());
    if (g < 0) throw std::runtime_error("unknown generator " + j.get<std::string>());
    return leaf(g);
  }
  if (j.is_array() && j.size() == 2)
    return node(tree_from_json(P, j[0]), tree_from_json(P, j[1]));
  throw std::runtime_error("malformed bracket tree");
}

LieElement element_from_json(const Presentation& P, const Json& j) {
  if (!j.is_array()) throw std::runtime_error("element must be an array of triples");
  LieElement x;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 3)
      throw std::runtime_error("element term must be [num, den, tree]");
    Rat c(int_from_json(term[0]), int_from_json(term[1]));
    c.canonicalize();
    x.add(tree_from_json(P, term[2]), c);
  }
  return x;
}

Presentation presentation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("generators") || !j.contains("truncation") ||
      !j.contains("differential"))
    throw std::runtime_error("presentation needs generators, truncation, differential");
  Presentation P(j["truncation"].get<int>());
  for (const auto& g : j["generators"])
    P.add_generator(g.at("name").get<std::string>(), g.at("degree").get<int>());
  for (const auto& [name, elem] : j["differential"].items()) {
    int g = P.id(name);
    if (g < 0) throw std::runtime_error("differential of unknown generator " + name);
    P.set_differential(g, element_from_json(P, elem));
  }
  return P;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cdgl
