#include "parhyp/json_io.hpp"

#include <fstream>

namespace parhyp {

namespace {

std::int64_t require_int(const ordered_json& j, const char* what) {
  if (!j.is_number_integer())
    throw ParseError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

}  // namespace

ArrangementFamily family_from_json(const ordered_json& j) {
  if (!j.is_object()) throw ParseError("arrangement document must be an object");
  for (const char* key : {"k", "n", "b", "a", "kappa"})
    if (!j.contains(key))
      throw ParseError(std::string("missing field \"") + key + "\"");
  ArrangementFamily fam;
  fam.k = static_cast<int>(require_int(j["k"], "k"));
  fam.n = static_cast<int>(require_int(j["n"], "n"));
  if (!j["b"].is_array() || static_cast<int>(j["b"].size()) != fam.n)
    throw ParseError("b must be a list of n rows");
  for (const auto& row : j["b"]) {
    if (!row.is_array())
      throw ParseError("b rows must be integer lists");
    std::vector<std::int64_t> r;
    for (const auto& v : row) r.push_back(require_int(v, "b entry"));
    fam.b.push_back(std::move(r));
  }
  if (!j["a"].is_array() || static_cast<int>(j["a"].size()) != fam.n)
    throw ParseError("a must be a list of n integers");
  for (const auto& v : j["a"]) fam.weights.push_back(require_int(v, "a entry"));
  fam.kappa = require_int(j["kappa"], "kappa");
  validate_family(fam);
  return fam;
}

ArrangementFamily family_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return family_from_json(j);
}

ordered_json family_to_json(const ArrangementFamily& fam) {
  ordered_json j;
  j["k"] = fam.k;
  j["n"] = fam.n;
  j["b"] = fam.b;
  j["a"] = fam.weights;
  j["kappa"] = fam.kappa;
  return j;
}

ordered_json poly_to_json(const MultiPoly& f) {
  ordered_json terms = ordered_json::array();
  for (const auto& [e, c] : f.terms()) {
    ordered_json t;
    t["exp"] = e;
    t["coeff"] = c;
    terms.push_back(std::move(t));
  }
  return terms;
}

MultiPoly poly_from_json(const PrimeField& field, int nvars,
                         const ordered_json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a list of terms");
  MultiPoly f(field, nvars);
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("coeff"))
      throw ParseError("each term needs \"exp\" and \"coeff\"");
    MultiPoly::Exp e;
    for (const auto& v : t["exp"])
      e.push_back(static_cast<std::uint32_t>(require_int(v, "exponent")));
    if (static_cast<int>(e.size()) != nvars)
      throw ParseError("exponent vector length mismatch");
    f.add_term(e, require_int(t["coeff"], "coeff"));
  }
  return f;
}

std::string basis_key(const BasisIndex& b) {
  std::string s;
  for (std::size_t i = 0; i < b.subset.size(); ++i)
    s += (i ? "," : "") + std::to_string(b.subset[i] + 1);
  return s;
}

ordered_json circuits_to_json(const std::vector<Circuit>& circs) {
  ordered_json out = ordered_json::array();
  for (const Circuit& c : circs) {
    ordered_json jc;
    std::vector<int> one_based;
    for (int i : c.indices) one_based.push_back(i + 1);
    jc["indices"] = one_based;
    jc["lambda"] = c.lambdas;
    out.push_back(std::move(jc));
  }
  return out;
}

ordered_json solution_to_json(const FlagSpace& space,
                              const SolutionVector& sol) {
  ordered_json j;
  j["A"] = sol.choice.A;
  j["q"] = sol.choice.q;
  j["l"] = sol.choice.l;
  ordered_json coords = ordered_json::object();
  for (int e = 0; e < space.dim(); ++e)
    coords[basis_key(space.basis()[e])] = poly_to_json(sol.coords[e]);
  j["solution"] = std::move(coords);
  return j;
}

SolutionVector solution_from_json(const FlagSpace& space,
                                  const ordered_json& j) {
  for (const char* key : {"A", "q", "l", "solution"})
    if (!j.contains(key))
      throw ParseError(std::string("missing field \"") + key + "\"");
  SolutionVector sol;
  for (const auto& v : j["A"])
    sol.choice.A.push_back(static_cast<std::uint32_t>(require_int(v, "A")));
  for (const auto& v : j["q"])
    sol.choice.q.push_back(
        space.field().reduce(require_int(v, "q")));
  for (const auto& v : j["l"])
    sol.choice.l.push_back(static_cast<std::uint32_t>(require_int(v, "l")));
  int nvars = space.family().n + space.family().k;
  for (int e = 0; e < space.dim(); ++e) {
    std::string key = basis_key(space.basis()[e]);
    if (!j["solution"].contains(key))
      throw ParseError("missing solution coordinate " + key);
    sol.coords.push_back(poly_from_json(space.field(), nvars,
                                        j["solution"][key]));
  }
  return sol;
}

ordered_json report_to_json(const VerifyReport& rep) {
  ordered_json j;
  j["passed"] = rep.passed;
  ordered_json checks = ordered_json::array();
  for (const CheckLine& c : rep.checks) {
    ordered_json jc;
    jc["name"] = c.name;
    jc["passed"] = c.passed;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace parhyp
