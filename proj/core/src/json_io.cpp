#include "invstar/json_io.hpp"

namespace invstar::json {

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw SpecError("expected a rational as a \"p/q\" string, got " + j.dump());
  return Rational::parse(j.get<std::string>());
}

json to_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

json to_json(const RationalFunction& f) {
  return json{{"num", to_json(f.numerator())}, {"den", to_json(f.denominator())}};
}

namespace {

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw SpecError("expected a coefficient list, got " + j.dump());
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return Polynomial(std::move(coeffs));
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SpecError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw SpecError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw SpecError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

template <std::size_t K, typename Coeff>
json tensor_json(const GradedLieAlgebra& alg, const BasicTensor<K, Coeff>& t) {
  json out = json::array();
  for (const auto& [key, c] : t.terms()) {
    json slots = json::array();
    for (const auto& m : key) slots.push_back(m.str(alg));
    out.push_back(json{{"slots", slots}, {"coeff", to_json(c)}});
  }
  return out;
}

}  // namespace

RationalFunction rational_function_from_json(const json& j) {
  return RationalFunction(polynomial_from_json(field(j, "num")), polynomial_from_json(field(j, "den")));
}

json algebra_to_json(const GradedLieAlgebra& alg) {
  json gens = json::array();
  for (const auto& g : alg.generators()) gens.push_back(json{{"name", g.name}, {"degree", g.degree}});
  json brackets = json::array();
  for (const auto& [pair, value] : alg.explicit_brackets()) {
    json terms = json::array();
    for (const auto& t : value) terms.push_back(json{{"gen", alg.generator(t.gen).name}, {"coeff", to_json(t.coeff)}});
    brackets.push_back(
        json{{"a", alg.generator(pair.first).name}, {"b", alg.generator(pair.second).name}, {"terms", terms}});
  }
  json character = json::array();
  for (const auto& [g, v] : alg.character_values()) {
    character.push_back(json{{"gen", alg.generator(g).name}, {"value", to_json(v)}});
  }
  json out{{"name", alg.name()},
           {"cutoff", alg.cutoff()},
           {"generators", gens},
           {"brackets", brackets},
           {"character", character}};
  if (alg.truncated()) {
    json oow = json::array();
    for (const auto& [a, b] : alg.out_of_window_pairs()) {
      oow.push_back(json::array({alg.generator(a).name, alg.generator(b).name}));
    }
    out["out_of_window"] = oow;
  }
  return out;
}

AlgebraPtr algebra_from_json(const json& j) {
  try {
    LieAlgebraBuilder b(string_field(j, "name"), int_field(j, "cutoff"));
    const json& gens = field(j, "generators");
    if (!gens.is_array()) throw SpecError("'generators' must be a list");
    for (const auto& g : gens) b.add_generator(string_field(g, "name"), int_field(g, "degree"));
    if (j.contains("brackets")) {
      for (const auto& br : j.at("brackets")) {
        BracketValue value;
        for (const auto& t : field(br, "terms")) {
          value.push_back(BracketTerm{b.id(string_field(t, "gen")), rational_from_json(field(t, "coeff"))});
        }
        b.set_bracket(b.id(string_field(br, "a")), b.id(string_field(br, "b")), std::move(value));
      }
    }
    if (j.contains("character")) {
      for (const auto& c : j.at("character")) b.set_character(b.id(string_field(c, "gen")), rational_from_json(field(c, "value")));
    }
    if (j.contains("out_of_window")) {
      for (const auto& p : j.at("out_of_window")) {
        if (!p.is_array() || p.size() != 2) throw SpecError("out_of_window entries are [a, b] pairs");
        b.mark_out_of_window(b.id(p[0].get<std::string>()), b.id(p[1].get<std::string>()));
      }
    }
    return b.build();
  } catch (const json::exception& e) {
    throw SpecError(std::string("malformed algebra spec: ") + e.what());
  }
}

json to_json(const GradedLieAlgebra& alg, const UeaElement& e) {
  json out = json::array();
  for (const auto& [m, c] : e.terms()) out.push_back(json{{"monomial", m.str(alg)}, {"coeff", to_json(c)}});
  return out;
}

json to_json(const GradedLieAlgebra& alg, const TensorElement2& t) { return tensor_json(alg, t); }
json to_json(const GradedLieAlgebra& alg, const RationalTensor2& t) { return tensor_json(alg, t); }

json to_json(const GradedLieAlgebra& alg, const DegreeComponent& c) {
  json minus = json::array();
  json plus = json::array();
  for (std::size_t k = 0; k < c.basis.minus.size(); ++k) {
    minus.push_back(c.basis.minus[k].str(alg));
    plus.push_back(to_json(alg, c.basis.plus[k]));
  }
  json matrix = json::array();
  for (const auto& row : c.pairing) {
    json r = json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    matrix.push_back(r);
  }
  json inverse = json::array();
  for (const auto& row : c.inverse) {
    json r = json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    inverse.push_back(r);
  }
  return json{{"degree", c.basis.degree}, {"minus", minus},   {"plus", plus},
              {"lengths", c.basis.lengths}, {"matrix", matrix}, {"inverse", inverse}};
}

json to_json(const StarProduct& b) {
  json comps = json::array();
  for (int m = 0; m <= b.hbar_order; ++m) comps.push_back(json{{"m", m}, {"terms", to_json(*b.algebra, b[m])}});
  return json{{"algebra", b.algebra->name()},
              {"order", b.hbar_order},
              {"degree_window", b.degree_window},
              {"complete", b.complete},
              {"components", comps}};
}

json to_json(const VerificationReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  json out{{"check", r.check}, {"passed", r.passed}, {"parameters", params}, {"compared", r.compared}};
  if (!r.passed) {
    out["component"] = r.component;
    out["difference"] = r.difference;
  }
  return out;
}

json to_json(const GradedLieAlgebra& alg, const ValidationReport& r) {
  json issues = json::array();
  for (const auto& i : r.issues) {
    json gens = json::array();
    for (GenId g : i.generators) gens.push_back(alg.generator(g).name);
    issues.push_back(json{{"kind", std::string(to_string(i.kind))}, {"generators", gens}, {"message", i.message}});
  }
  return json{{"passed", r.ok()}, {"issues", issues}};
}

}  // namespace invstar::json
