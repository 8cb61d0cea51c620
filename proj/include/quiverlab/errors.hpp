#pragma once

#include <stdexcept>
#include <string>

namespace quiverlab {

// Base of every domain-level failure. `kind()` is the stable tag used in the
// CLI's structured error output.
class QuiverError : public std::runtime_error {
 public:
  QuiverError(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define QUIVERLAB_ERROR(Name, tag)                                        \
  class Name : public QuiverError {                                      \
   public:                                                               \
    explicit Name(const std::string& what) : QuiverError(tag, what) {}   \
  }

QUIVERLAB_ERROR(GuardExceeded, "guard_exceeded");
QUIVERLAB_ERROR(InvalidInput, "invalid_input");
QUIVERLAB_ERROR(NotAPermutation, "not_a_permutation");
QUIVERLAB_ERROR(NotSymmetric, "not_symmetric");
QUIVERLAB_ERROR(NotCompatible, "not_compatible");
QUIVERLAB_ERROR(NotMinimal, "not_minimal");
QUIVERLAB_ERROR(NonStrictPartition, "non_strict_partition");
QUIVERLAB_ERROR(DimensionMismatch, "dimension_mismatch");
QUIVERLAB_ERROR(ConstraintViolated, "constraint_violated");
QUIVERLAB_ERROR(MissingTableEntry, "missing_table_entry");
QUIVERLAB_ERROR(InconsistentSystem, "inconsistent_system");
QUIVERLAB_ERROR(MalformedJson, "malformed_json");

#undef QUIVERLAB_ERROR

// Enumeration guards. Exhaustive searches check these and throw
// GuardExceeded rather than running away.
struct Limits {
  int max_length = 12;            // reduced words, factorizations, word-based RC oracle
  int max_dim = 12;               // permutation size for enumerations over S_d
  int max_schubert_dim = 7;       // divided-difference recursion from w0
  long long max_results = 5'000'000;  // objects produced by a single enumeration
};

inline void require_guard(bool ok, const std::string& what) {
  if (!ok) throw GuardExceeded(what);
}

}  // namespace quiverlab
