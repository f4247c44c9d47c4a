#pragma once

#include <stdexcept>
#include <string>

namespace ukern {

enum class errc {
  parse,              // malformed s-expression / ordinal text / diagram file
  invalid_code,       // construction invariant violated (totality, arity, ...)
  not_in_carrier,     // value is not an element of the carrier's extension
  non_finitary,       // enumeration of an infinite extension demanded
  not_a_proposition,  // resizing applied to a non-h-prop code
  undecidable,        // inhabitation not decidable in the implemented fragment
  level,              // level index out of range or downward lift
  endpoint_mismatch,  // map endpoints do not line up
  resource_limit,     // population or extension cap exceeded
  unknown_suite,
};

class Error : public std::runtime_error {
 public:
  Error(errc kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace ukern
