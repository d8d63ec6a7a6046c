#pragma once

#include <stdexcept>
#include <string>

namespace webs {

// Base class for all domain errors. `code()` is the stable machine-readable
// tag surfaced in the CLI's JSON error objects.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

#define WEBS_DEFINE_ERROR(Name)                                      \
  class Name : public Error {                                        \
  public:                                                            \
    explicit Name(const std::string& what) : Error(#Name, what) {}   \
  }

WEBS_DEFINE_ERROR(FocusCoincidence);
WEBS_DEFINE_ERROR(OutsideQuadrant);
WEBS_DEFINE_ERROR(OutOfRange);
WEBS_DEFINE_ERROR(DegenerateTarget);
WEBS_DEFINE_ERROR(OutsideDomain);
WEBS_DEFINE_ERROR(BoundaryTooClose);
WEBS_DEFINE_ERROR(UnsupportedDirection);
WEBS_DEFINE_ERROR(DegeneratePencilMember);
WEBS_DEFINE_ERROR(AxisMismatch);
WEBS_DEFINE_ERROR(NoTangentConic);
WEBS_DEFINE_ERROR(InvalidScale);
WEBS_DEFINE_ERROR(LeftDomain);
WEBS_DEFINE_ERROR(EmptyIntersection);

#undef WEBS_DEFINE_ERROR

}  // namespace webs
