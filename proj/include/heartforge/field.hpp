#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace heartforge {

/// Exact rational scalar. All arithmetic in the library is exact; there is
/// no floating point anywhere.
using Rat = mpq_class;

enum class FieldKind { Prime, Rational };

/// A coefficient field: GF(p) for a prime p fitting in a machine word, or Q.
struct FieldSpec {
  FieldKind kind = FieldKind::Rational;
  std::uint64_t p = 0;

  static FieldSpec prime(std::uint64_t p);
  static FieldSpec rational() { return FieldSpec{FieldKind::Rational, 0}; }

  bool is_prime_field() const { return kind == FieldKind::Prime; }
  bool operator==(const FieldSpec& o) const {
    return kind == o.kind && p == o.p;
  }
  std::string str() const {
    return is_prime_field() ? "GF(" + std::to_string(p) + ")" : "Q";
  }
};

enum class Errc {
  ShapeMismatch,
  AmbientMismatch,
  NotAdmissible,
  NotFiniteDimensional,
  CharTooSmall,
  HypothesisFailed,
  NotSource,
  Cyclic,
  InvalidInput,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

/// Radical and idempotent-lifting routines need char 0 or p > dim.
inline void require_char_ok(const FieldSpec& f, std::size_t dim,
                            const char* what) {
  if (f.is_prime_field() && f.p <= dim)
    fail(Errc::CharTooSmall, std::string(what) + ": field characteristic " +
                                 std::to_string(f.p) +
                                 " must exceed the dimension " +
                                 std::to_string(dim));
}

}  // namespace heartforge
