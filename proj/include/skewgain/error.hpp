#ifndef SKEWGAIN_ERROR_HPP
#define SKEWGAIN_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace skewgain {

// Typed error with a stable machine-readable code. Codes used across the
// library: ZeroGain, DuplicateEdge, LoopEdge, BadVertexIndex, BadParameters,
// ZeroArgument, NotSquare, NonConvergence, NotCompleteBipartite,
// NotCompleteBipartiteBalanced, NotRegular, NotAStar, NotACycle,
// FamilyMismatch, NoClosedForm, CapExceeded, ParseError, IoError.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

}  // namespace skewgain

#endif  // SKEWGAIN_ERROR_HPP
