#include <biham/errors.hpp>
#include <biham/rational.hpp>

#include <cctype>

namespace biham {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Validation: return "ValidationError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::PoleAtPoint: return "PoleAtPoint";
    case ErrorKind::SingularInversion: return "SingularInversion";
    case ErrorKind::NotSkewCanonical: return "NotSkewCanonical";
    case ErrorKind::NotPureKronecker: return "NotPureKronecker";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::UnsupportedPeriod: return "UnsupportedPeriod";
    case ErrorKind::DegenerateFunction: return "DegenerateFunction";
    case ErrorKind::DegenerateModel: return "DegenerateModel";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::NotNormalizable: return "NotNormalizable";
    case ErrorKind::SingularODE: return "SingularODE";
    case ErrorKind::SamplingExhausted: return "SamplingExhausted";
    case ErrorKind::UnknownModel: return "UnknownModel";
  }
  return "Error";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  Integer d{std::string(den)};
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational q{Integer{std::string(num)}, d};
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational pow(const Rational& base, long exponent) {
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r = exponent < 0 ? Rational(den, num) : Rational(num, den);
  r.canonicalize();
  return r;
}

Integer lcm_of_denominators(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

std::string to_string(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += p[i].get_str();
  }
  return out + ")";
}

}  // namespace biham
