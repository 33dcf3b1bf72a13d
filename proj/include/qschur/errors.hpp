#pragma once

#include <stdexcept>
#include <string>

namespace qschur {

struct NotDivisible : std::runtime_error {
  explicit NotDivisible(const std::string& m) : std::runtime_error(m) {}
};
struct TooLarge : std::runtime_error {
  explicit TooLarge(const std::string& m) : std::runtime_error(m) {}
};
struct BadLabel : std::runtime_error {
  explicit BadLabel(const std::string& m) : std::runtime_error(m) {}
};
struct BadGenerator : std::runtime_error {
  explicit BadGenerator(const std::string& m) : std::runtime_error(m) {}
};
struct AmbientMismatch : std::runtime_error {
  explicit AmbientMismatch(const std::string& m) : std::runtime_error(m) {}
};
struct NotDistinguished : std::runtime_error {
  explicit NotDistinguished(const std::string& m) : std::runtime_error(m) {}
};
struct NotFundamental : std::runtime_error {
  explicit NotFundamental(const std::string& m) : std::runtime_error(m) {}
};
struct InvalidShift : std::runtime_error {
  explicit InvalidShift(const std::string& m) : std::runtime_error(m) {}
};
struct InvalidIndex : std::runtime_error {
  explicit InvalidIndex(const std::string& m) : std::runtime_error(m) {}
};
// A double coset whose minimal-length element is not unique. Should never
// happen for parabolic subgroups; surfaced instead of picking arbitrarily.
struct NonUniqueMinimum : std::runtime_error {
  explicit NonUniqueMinimum(const std::string& m) : std::runtime_error(m) {}
};
// The oracle's re-expansion left a nonzero residual: an implementation bug.
struct InconsistentExpansion : std::runtime_error {
  explicit InconsistentExpansion(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace qschur
