#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "jacobipoly/classify.hpp"
#include "jacobipoly/jacobi.hpp"
#include "jacobipoly/oracle.hpp"
#include "jacobipoly/poly.hpp"

// JSON views of library results. Key names are a stable scripting interface.
namespace jacobipoly {

template <CoefficientRing Ring>
nlohmann::json witness_json(const Ring& ring, const Monomial& m, const typename Ring::value_type& c) {
  typename MultiPoly<Ring>::Term t{m, c};
  return {{"term", term_to_string(ring, trivariate_vars(), t, true)},
          {"monomial", monomial_to_string<Ring>(m, trivariate_vars())},
          {"coefficient", ring.to_string(c)}};
}

template <CoefficientRing Ring>
nlohmann::json to_json(const ClassificationResult<Ring>& result, const Ring& ring) {
  nlohmann::json j;
  if (auto* s = std::get_if<Solution<Ring>>(&result)) {
    j["verdict"] = "solution";
    j["family"] = family_name<Ring>(s->family);
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : family_param_strings<Ring>(ring, s->family)) params[k] = v;
    j["params"] = params;
  } else {
    const auto& n = std::get<NotJacobi<Ring>>(result);
    j["verdict"] = "not_jacobi";
    j["witness"] = witness_json(ring, n.witness_monomial, n.witness_coeff);
  }
  return j;
}

// Deterministic for a given space and form: no timing or thread information.
template <CoefficientRing Ring>
nlohmann::json to_json(const EnumReport<Ring>& report) {
  nlohmann::json solutions = nlohmann::json::array();
  for (const auto& p : report.solutions) solutions.push_back(to_string(p));
  return {
      {"ring", report.space.ring().name()},
      {"form", to_string(report.form)},
      {"max_deg", report.space.max_deg()},
      {"coeff_bound", report.space.coeff_bound()},
      {"candidates", report.space.candidate_count()},
      {"solutions", solutions},
      {"solution_count", report.solutions.size()},
      {"agreement", report.agreement},
      {"degree_bound", degree_bound_report(report)},
      {"max_solution_degrees", {{"x", report.max_deg_x}, {"y", report.max_deg_y}}},
  };
}

}  // namespace jacobipoly
