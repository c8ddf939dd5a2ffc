#include "hypred/rational.hpp"

#include <cctype>

namespace hypred {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Int parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Int(std::string(s), 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view s = strip(text);
  const auto slash = s.find('/');
  std::string_view num = strip(s.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : strip(s.substr(slash + 1));
  if (!valid_integer(num) || !valid_integer(den))
    throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
  Int d = parse_int(den);
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rat r(parse_int(num), d);
  r.canonicalize();
  return r;
}

std::string encode_rat(const Rat& x) { return x.get_num().get_str() + "/" + x.get_den().get_str(); }

std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

long to_long(const Rat& x) {
  if (x.get_den() != 1 || !x.get_num().fits_slong_p())
    throw Error(ErrorKind::InvalidArgument, "not a machine integer: " + to_string(x));
  return x.get_num().get_si();
}

}  // namespace hypred
