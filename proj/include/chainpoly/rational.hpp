#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace chainpoly {

using Int = mpz_class;
using Rat = mpq_class;

// Error codes shared with the C API; every exception thrown by the core
// carries one of these.
enum class errc {
    invalid_argument,
    parse_error,
    cycle_detected,
    not_bounded,
    not_graded,
    cap_exceeded,
    unsupported,
    host_mismatch,
    io_error,
    odd_coefficient,
    asymmetric,
    internal,
};

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

inline int sign_of(const Rat& q) { return sgn(q); }

// Parses "num" or "num/den" with an optional leading minus sign.
Rat rat_from_string(const std::string& text);

// Canonical form: "num" when the denominator is 1, else "num/den".
std::string rat_to_string(const Rat& q);

}  // namespace chainpoly
