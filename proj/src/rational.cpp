#include "valconv/rational.hpp"

#include <cctype>

#include "valconv/errors.hpp"

namespace valconv {

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den)) {
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class p(num, 10);
  mpz_class q(den, 10);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

QVector zero_vector(int n) { return QVector(static_cast<std::size_t>(n), Rational(0)); }

QVector unit_vector(int n, int i) {
  QVector e = zero_vector(n);
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: vector sizes differ");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVector operator+(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum: sizes differ");
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVector operator-(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector difference: sizes differ");
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVector operator-(const QVector& a) {
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

QVector operator*(const Rational& s, const QVector& a) {
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

bool is_zero(const QVector& a) {
  for (const auto& x : a) {
    if (x != 0) return false;
  }
  return true;
}

QVector primitive(const QVector& a) {
  if (is_zero(a)) return a;
  mpz_class den_lcm = 1;
  for (const auto& x : a) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<mpz_class> ints(a.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational scaled = a[i] * Rational(den_lcm);
    ints[i] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rational(ints[i] / g);
  return r;
}

QVector primitive_up_to_sign(const QVector& a) {
  QVector r = primitive(a);
  for (const auto& x : r) {
    if (x != 0) {
      if (x < 0) r = -r;
      break;
    }
  }
  return r;
}

std::vector<double> to_doubles(const QVector& a) {
  std::vector<double> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i].get_d();
  return r;
}

std::string to_string(const QVector& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ", ";
    s += to_string(a[i]);
  }
  return s + ")";
}

}  // namespace valconv
