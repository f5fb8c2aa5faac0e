#pragma once

#include <stdexcept>
#include <string>

namespace smoothroots {

enum class Errc {
  MultiplicityTooLow,
  OddMultiplicity,
  NegativeLeading,
  Flat,
  ZeroConstantTerm,
  ClusterAmbiguous,
  ClustersOverlap,
  NotARoot,
  RealityViolated,
  TruncationExhausted,
  PreconditionViolated,
  NotRealRooted,
  WindowTooSmall,
  NegativeValue,
  HermitianViolation,
  RankDrop,
  FlatRecursion,
  NonHermitianSample,
  UnknownCorpusEntry,
  InputError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace smoothroots
