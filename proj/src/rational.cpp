#include "ambipref/rational.hpp"

#include <cctype>

#include "ambipref/error.hpp"

namespace ambipref {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void malformed(std::string_view text) {
  throw Error(ErrorCode::MalformedRational,
              "malformed rational '" + std::string(text) + "' (expected integer or num/den)");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num)) malformed(text);
  if (slash != std::string_view::npos) {
    if (!all_digits(den)) malformed(text);
    if (den.find_first_not_of('0') == std::string_view::npos) malformed(text);
  }
  std::string normalized(text);
  if (!normalized.empty() && normalized.front() == '+') normalized.erase(0, 1);
  Rational value(normalized, 10);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

// get_d truncates; when both parts are exact doubles a single division rounds correctly.
double to_double(const Rational& value) {
  const mpz_class limit = mpz_class(1) << 53;
  if (abs(value.get_num()) <= limit && value.get_den() <= limit) {
    return value.get_num().get_d() / value.get_den().get_d();
  }
  return value.get_d();
}

}  // namespace ambipref
