#pragma once

#include <stdexcept>
#include <string>

namespace stabeq {

enum class ErrorKind {
  invalid_argument,
  field_mismatch,
  not_square,
  non_split_field,
  not_nilpotent,
  not_basic,
  radical_unavailable,
  non_split_endomorphism,
  inconclusive,
  parse_error,
  registry_incomplete,
};

const char* to_string(ErrorKind kind);

/// Base of every typed pipeline error. `kind()` is stable and is what the
/// CLI prints and what reports embed as a reason.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define STABEQ_DEFINE_ERROR(Name, kind_value)                   \
  class Name : public Error {                                   \
   public:                                                      \
    explicit Name(const std::string& what) : Error(kind_value, what) {} \
  };

STABEQ_DEFINE_ERROR(InvalidArgument, ErrorKind::invalid_argument)
STABEQ_DEFINE_ERROR(FieldMismatch, ErrorKind::field_mismatch)
STABEQ_DEFINE_ERROR(NotSquare, ErrorKind::not_square)
STABEQ_DEFINE_ERROR(NonSplitField, ErrorKind::non_split_field)
STABEQ_DEFINE_ERROR(NotNilpotent, ErrorKind::not_nilpotent)
STABEQ_DEFINE_ERROR(NotBasic, ErrorKind::not_basic)
STABEQ_DEFINE_ERROR(RadicalUnavailable, ErrorKind::radical_unavailable)
STABEQ_DEFINE_ERROR(NonSplitEndomorphism, ErrorKind::non_split_endomorphism)
STABEQ_DEFINE_ERROR(Inconclusive, ErrorKind::inconclusive)
STABEQ_DEFINE_ERROR(ParseError, ErrorKind::parse_error)
STABEQ_DEFINE_ERROR(RegistryIncomplete, ErrorKind::registry_incomplete)

#undef STABEQ_DEFINE_ERROR

}  // namespace stabeq
