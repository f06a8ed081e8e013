#include "hlchow/basics.hpp"

#include <cctype>

namespace hlchow {

Rat parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);

  auto fail = [&text]() {
    return MalformedRational("not a rational: '" + text + "'");
  };
  if (s.empty()) throw fail();

  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    if (s.find('/', slash + 1) != std::string::npos) throw fail();
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  auto is_integer = [](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < part.size() && (part[i] == '+' || part[i] == '-')) ++i;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  if (!is_integer(num, true) || !is_integer(den, false)) throw fail();

  Int d(den);
  if (d == 0) throw fail();
  Rat q(Int(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

std::string to_string(const Int& z) { return z.get_str(); }

}  // namespace hlchow
