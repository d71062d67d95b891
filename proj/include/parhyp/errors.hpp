#ifndef PARHYP_ERRORS_HPP
#define PARHYP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace parhyp {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotPrime : Error {
  explicit NotPrime(const std::string& msg) : Error(msg) {}
};

struct ZeroInverse : Error {
  explicit ZeroInverse(const std::string& msg) : Error(msg) {}
};

struct VariableMismatch : Error {
  explicit VariableMismatch(const std::string& msg) : Error(msg) {}
};

struct ZeroLinearForm : Error {
  explicit ZeroLinearForm(const std::string& msg) : Error(msg) {}
};

struct RankDeficient : Error {
  explicit RankDeficient(const std::string& msg) : Error(msg) {}
};

struct ZeroWeight : Error {
  explicit ZeroWeight(const std::string& msg) : Error(msg) {}
};

struct ZeroKappa : Error {
  explicit ZeroKappa(const std::string& msg) : Error(msg) {}
};

struct OnDiscriminant : Error {
  explicit OnDiscriminant(const std::string& msg) : Error(msg) {}
};

struct KappaNotInvertible : Error {
  explicit KappaNotInvertible(const std::string& msg) : Error(msg) {}
};

struct ExponentUnderflow : Error {
  explicit ExponentUnderflow(const std::string& msg) : Error(msg) {}
};

struct VerificationFailed : Error {
  explicit VerificationFailed(const std::string& msg) : Error(msg) {}
};

struct HypothesisViolated : Error {
  explicit HypothesisViolated(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace parhyp

#endif
