// Copyright 2026 The SSR Toolkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SSR_RATIONAL_HPP
#define SSR_RATIONAL_HPP

#include <cctype>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ssr {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Malformed or out-of-contract input (bad weights, indices, epsilon, files).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Instance too large for an exhaustive or table-based method.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

namespace detail {

inline BigInt parse_digits(std::string_view digits, std::string_view what) {
  if (digits.empty()) throw InputError("malformed number '" + std::string(what) + "'");
  BigInt value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InputError("malformed number '" + std::string(what) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

inline BigInt pow10(std::size_t exponent) {
  BigInt result = 1;
  for (std::size_t i = 0; i < exponent; ++i) result *= 10;
  return result;
}

}  // namespace detail

/// Parses "p/q", an integer, or a decimal such as "-1.25" or "3e-2" exactly.
inline Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InputError("empty number");

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = detail::parse_digits(text.substr(0, slash), original);
    BigInt den = detail::parse_digits(text.substr(slash + 1), original);
    if (den == 0) throw InputError("zero denominator in '" + std::string(original) + "'");
    value = Rational(num, den);
  } else {
    long long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (exp_text.empty() || exp_text.size() > 6) {
        throw InputError("malformed exponent in '" + std::string(original) + "'");
      }
      exponent = static_cast<long long>(detail::parse_digits(exp_text, original));
      if (exp_negative) exponent = -exponent;
      text = text.substr(0, e);
    }
    std::string_view int_part = text;
    std::string_view frac_part;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      int_part = text.substr(0, dot);
      frac_part = text.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) {
      throw InputError("malformed number '" + std::string(original) + "'");
    }
    BigInt mantissa = 0;
    if (!int_part.empty()) mantissa = detail::parse_digits(int_part, original);
    if (!frac_part.empty()) {
      mantissa = mantissa * detail::pow10(frac_part.size()) + detail::parse_digits(frac_part, original);
    }
    exponent -= static_cast<long long>(frac_part.size());
    if (exponent >= 0) {
      value = Rational(mantissa * detail::pow10(static_cast<std::size_t>(exponent)));
    } else {
      value = Rational(mantissa, detail::pow10(static_cast<std::size_t>(-exponent)));
    }
  }
  return negative ? Rational(-value) : value;
}

/// "p/q" in lowest terms, or just "p" for integers.
inline std::string to_string(const Rational& value) {
  return value.str();
}

inline double to_double(const Rational& value) {
  return value.convert_to<double>();
}

inline BigInt floor(const Rational& value) {
  BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  BigInt q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

inline bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

/// Narrowing conversion that refuses values outside the int64 range.
inline std::int64_t to_int64(const BigInt& value) {
  if (value > BigInt(std::numeric_limits<std::int64_t>::max()) ||
      value < BigInt(std::numeric_limits<std::int64_t>::min())) {
    throw SizeError("integer " + value.str() + " does not fit in 64 bits");
  }
  return value.convert_to<std::int64_t>();
}

}  // namespace ssr

#endif  // SSR_RATIONAL_HPP
