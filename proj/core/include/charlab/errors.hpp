#pragma once

#include <stdexcept>
#include <string>

namespace charlab {

enum class errc {
    invalid_argument,       // bad parameters (shape, ranges, flag combinations)
    composite_modulus,      // p failed the primality check
    factorization_failure,  // rho budget exhausted without a full factorization
    zero_argument,          // x = 0 where a unit was required
    principal_character,    // operation undefined for the principal character
    constant_polynomial,    // polynomial input with degree < 1 (mod p)
    zero_coefficient,       // exponential-sum shift a = 0
    all_coefficients_zero,  // sparse exponential sum with every a_i = 0
    oracle_too_large,       // brute-force path refused: input beyond its size guard
    regime_error,           // parameters outside the valid range of a bound
    ceiling_exceeded,       // scan limit above the configured ceiling
    budget_exceeded,        // internal work limit hit (e.g. giant-step table too big)
    oracle_mismatch,        // cross-check between two computations disagreed
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::invalid_argument: return "invalid_argument";
    case errc::composite_modulus: return "composite_modulus";
    case errc::factorization_failure: return "factorization_failure";
    case errc::zero_argument: return "zero_argument";
    case errc::principal_character: return "principal_character";
    case errc::constant_polynomial: return "constant_polynomial";
    case errc::zero_coefficient: return "zero_coefficient";
    case errc::all_coefficients_zero: return "all_coefficients_zero";
    case errc::oracle_too_large: return "oracle_too_large";
    case errc::regime_error: return "regime_error";
    case errc::ceiling_exceeded: return "ceiling_exceeded";
    case errc::budget_exceeded: return "budget_exceeded";
    case errc::oracle_mismatch: return "oracle_mismatch";
    }
    return "unknown";
}

} // namespace charlab
