#include "sparsehs/rational.hpp"

#include <cctype>
#include <ostream>

#include "sparsehs/errors.hpp"

namespace sparsehs {

Rational::Rational(long n, long d) {
  if (d == 0) throw InputError("rational with zero denominator");
  value_ = mpq_class(n, d);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw InputError("division of rational by zero");
  value_ /= o.value_;
  return *this;
}

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  std::string num = text;
  std::string den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!valid_integer_token(num) || !valid_integer_token(den)) {
    throw InputError("malformed rational: '" + text + "'");
  }
  mpq_class q;
  if (q.set_str(num + "/" + den, 10) != 0) {
    throw InputError("malformed rational: '" + text + "'");
  }
  if (q.get_den() == 0) {
    throw InputError("rational with zero denominator: '" + text + "'");
  }
  q.canonicalize();
  return Rational(q);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace sparsehs
