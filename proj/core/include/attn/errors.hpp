#pragma once

#include <stdexcept>
#include <string>

namespace attn {

// Failure categories surfaced by the library. The CLI maps these to exit
// codes; tests match on them.
enum class Errc {
  BadInput,
  OutOfSimplex,
  WrongStateSpace,
  DegenerateVertices,
  NotBayesPlausible,
  NonPositiveWeight,
  DuplicateBelief,
  AmbiguousDirection,
  RedundantPolicy,
  NotInterior,
  EpsilonTooLarge,
  InvalidIndex,
  NonPositiveKappa,
  BoundaryPrior,
  OutOfRegime,
  WeightOutOfRange,
  InfeasibleLP,
  InfeasibleSlope,
  OutOfRange,
  KappaOutOfRange,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace attn
