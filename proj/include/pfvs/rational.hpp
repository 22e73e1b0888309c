#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "pfvs/errors.hpp"

namespace pfvs {

// Exact arithmetic everywhere a bound or LP value is produced.  Doubles only
// appear in human-readable output, never in comparisons.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Canonical text form: "p/q" in lowest terms, "p" when q == 1.
inline std::string rat_str(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

// Accepts the output of rat_str: optional sign, digits, optional "/digits".
inline Rat rat_parse(const std::string& s) {
  const auto bad = [&] { throw ParseError("bad rational '" + s + "'"); };
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  std::size_t num_begin = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == num_begin) bad();
  BigInt num(s.substr(0, i));
  if (i == s.size()) return Rat(num);
  if (s[i] != '/') bad();
  std::size_t den_begin = ++i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == den_begin || i != s.size()) bad();
  BigInt den(s.substr(den_begin));
  if (den == 0) bad();
  return Rat(num, den);
}

// Fixed-point decimal rendering for report tables; value stays exact
// internally, this is display only.
inline std::string rat_decimal(const Rat& r, int digits = 4) {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rat scaled = r * scale;
  BigInt q = numerator(scaled) / denominator(scaled);
  BigInt rem = numerator(scaled) % denominator(scaled);
  // Round half away from zero.
  if (rem * 2 >= denominator(scaled) && numerator(scaled) >= 0) q += 1;
  if ((-rem) * 2 >= denominator(scaled) && numerator(scaled) < 0) q -= 1;
  bool neg = q < 0;
  if (neg) q = -q;
  std::string digits_str = q.str();
  if (static_cast<int>(digits_str.size()) <= digits)
    digits_str.insert(0, digits + 1 - digits_str.size(), '0');
  digits_str.insert(digits_str.size() - digits, ".");
  return (neg ? "-" : "") + digits_str;
}

inline long rat_floor_long(const Rat& r) {
  BigInt q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) q -= 1;
  return static_cast<long>(q);
}

}  // namespace pfvs
