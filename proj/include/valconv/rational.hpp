#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace valconv {

/// Exact rational number. mpq_class keeps values in lowest terms with a
/// positive denominator as long as every constructed value is canonicalized,
/// which parse_rational and all arithmetic here guarantee.
using Rational = mpq_class;

/// A point or direction in Q^n.
using QVector = std::vector<Rational>;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }
inline double to_double(const Rational& q) { return q.get_d(); }

QVector zero_vector(int n);
QVector unit_vector(int n, int i);

Rational dot(const QVector& a, const QVector& b);
QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator-(const QVector& a);
QVector operator*(const Rational& s, const QVector& a);

bool is_zero(const QVector& a);

/// Positive multiple of `a` with coprime integer entries. Zero stays zero.
QVector primitive(const QVector& a);

/// primitive(a), additionally negated so the first nonzero entry is positive.
QVector primitive_up_to_sign(const QVector& a);

std::vector<double> to_doubles(const QVector& a);

std::string to_string(const QVector& a);

}  // namespace valconv
