#include "algtheta/rational.hpp"

#include <cctype>
#include <string>

#include "algtheta/error.hpp"

namespace algtheta {

namespace {

bool is_int_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

BigInt parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int_literal(num) || !is_int_literal(den) || den.front() == '-' || den.front() == '+')
    throw InputError("malformed rational \"" + std::string(text) + "\"");
  BigInt d = parse_int(den);
  if (d == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
  Rat r(parse_int(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_pow(const Rat& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error("zero to a negative power");
    return rat_pow(1 / base, -exponent);
  }
  Rat result = 1, b = base;
  for (unsigned e = static_cast<unsigned>(exponent); e; e >>= 1) {
    if (e & 1u) result *= b;
    b *= b;
  }
  return result;
}

}  // namespace algtheta
