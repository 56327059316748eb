#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace korenblum {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition violated by the caller.
struct DomainError : Error {
    using Error::Error;
};

// A series tail could not be bounded below the requested tolerance.
struct TailNotCertified : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct FitFailure : Error {
    using Error::Error;
};

struct SearchFailure : Error {
    using Error::Error;
};

// Natural log of a positive rational, valid far outside double range.
double log_of(const Rational& q);
double log_of(const BigInt& n);
// log(a / b) without forming the quotient; accurate when a and b are huge and close.
double log_ratio(const BigInt& a, const BigInt& b);

// Rational to double with exponent handling (returns 0 on underflow).
double to_double(const Rational& q);

}  // namespace korenblum
