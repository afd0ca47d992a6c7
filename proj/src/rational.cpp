#include "wdeg/rational.hpp"

#include <ostream>

namespace wdeg {

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(mpz_class(s));
    }
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  }
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::size_t Rational::hash() const {
  // FNV-style mix over the limb data via decimal string; cheap enough here.
  std::size_t h = 1469598103934665603ull;
  for (char c : str()) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace wdeg
