#ifndef COMPMACH_EXECUTION_HPP
#define COMPMACH_EXECUTION_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "compmach/machine.hpp"
#include "compmach/program_space.hpp"

namespace compmach {

/// A runtime value: a signed 64-bit integer tagged with the data type it
/// inhabits. Types are nominal — two types with the same value domain are
/// still distinct.
struct Value {
  std::int64_t value = 0;
  std::string data_type;

  bool operator==(const Value& other) const {
    return value == other.value && data_type == other.data_type;
  }
};

/// Applies one computon: checks the input tag against the computon's
/// domain, evaluates its expression, and tags the result with the
/// codomain. Throws NoSemanticsError when the computon has no expression,
/// TypeMismatchError on a wrong input tag, ArithmeticOverflowError from
/// evaluation.
Value eval_computon(const Machine& m, std::string_view computon_id,
                    const Value& v);

/// Applies a morphism: identities return the value unchanged (after a tag
/// check); primitives apply their computon; composites fold eval_computon
/// over the application-order sequence. Errors name the failing
/// constituent.
Value eval_morphism(const Machine& m, const Morphism& mo, const Value& v);

}  // namespace compmach

#endif  // COMPMACH_EXECUTION_HPP
