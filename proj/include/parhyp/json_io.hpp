#ifndef PARHYP_JSON_IO_HPP
#define PARHYP_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "parhyp/bethe.hpp"
#include "parhyp/fpcount.hpp"
#include "parhyp/gaussmanin.hpp"

namespace parhyp {

using ordered_json = nlohmann::ordered_json;

// Arrangement schema: {"k":int, "n":int, "b":[[int..]..], "a":[int..],
// "kappa":int}.  Throws ParseError on malformed documents.
ArrangementFamily family_from_json(const ordered_json& j);
ArrangementFamily family_from_file(const std::string& path);
ordered_json family_to_json(const ArrangementFamily& fam);

// Polynomials as a graded-lex list of {"exp":[..], "coeff":n}.
ordered_json poly_to_json(const MultiPoly& f);
MultiPoly poly_from_json(const PrimeField& field, int nvars,
                         const ordered_json& j);

// "j_1,..,j_k" with 1-based indices.
std::string basis_key(const BasisIndex& b);

ordered_json circuits_to_json(const std::vector<Circuit>& circs);

// {"A":[..],"q":[..],"l":[..],"solution":{key: poly}}
ordered_json solution_to_json(const FlagSpace& space, const SolutionVector& sol);
SolutionVector solution_from_json(const FlagSpace& space,
                                  const ordered_json& j);

ordered_json report_to_json(const VerifyReport& rep);

}  // namespace parhyp

#endif
