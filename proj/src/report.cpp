#include "wordchar/report.hpp"

#include <charconv>

namespace wordchar {

Json to_json(const Polynomial& p) {
  Json arr = Json::array();
  for (const Rat& c : p.coeffs()) arr.push_back(rat_to_string(c));
  return arr;
}

Json to_json(const RationalFunction& f) {
  return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

Polynomial polynomial_from_json(const Json& j) {
  std::vector<Rat> coeffs;
  for (const auto& c : j) coeffs.push_back(rat_from_string(c.get<std::string>()));
  return Polynomial(std::move(coeffs));
}

RationalFunction rational_function_from_json(const Json& j) {
  return RationalFunction(polynomial_from_json(j.at("num")),
                          polynomial_from_json(j.at("den")));
}

Json to_json(const EnumerationStats& s) {
  return Json{{"family_combinations", s.family_combinations},
              {"junction_tuples", s.junction_tuples},
              {"graphs_built", s.graphs_built},
              {"contradictions", s.contradictions},
              {"euler_checked", s.euler_checked},
              {"max_vertex_classes", s.max_vertex_classes}};
}

Json to_json(const McReport& r) {
  return Json{{"mean", r.mean},
              {"stderr", r.stderr_},
              {"samples", r.samples},
              {"seed", r.seed}};
}

Json to_json(const SpectralReport& r) {
  Json j{{"lambda_top", r.lambda_top},
         {"lambda_bottom", r.lambda_bottom},
         {"residual", r.residual},
         {"iterations", r.iterations},
         {"converged", r.converged},
         {"connected", r.connected},
         {"bipartite", r.bipartite},
         {"seed", r.seed}};
  if (r.lambda_nontrivial) j["lambda_nontrivial"] = *r.lambda_nontrivial;
  else j["lambda_nontrivial"] = nullptr;
  return j;
}

std::string dump_report(const Json& j) {
  // nlohmann's object type is already key-sorted.
  return j.dump(2) + "\n";
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace wordchar
