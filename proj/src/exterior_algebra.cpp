#include "valconv/exterior_algebra.hpp"

#include <algorithm>

#include "valconv/errors.hpp"
#include "valconv/linalg.hpp"

namespace valconv {

namespace {

bool strictly_increasing(const KVector::Index& idx, int dim) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || idx[i] >= dim) return false;
    if (i > 0 && idx[i - 1] >= idx[i]) return false;
  }
  return true;
}

// Sign of the permutation sorting a ++ b, or 0 if they share an index.
int merge_sign(const KVector::Index& a, const KVector::Index& b, KVector::Index& merged) {
  merged.clear();
  merged.reserve(a.size() + b.size());
  int inversions = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      merged.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      // b[j] jumps over the remaining elements of a
      inversions += static_cast<int>(a.size() - i);
      merged.push_back(b[j++]);
    } else {
      return 0;
    }
  }
  return (inversions % 2) ? -1 : 1;
}

// Lexicographic enumeration of all increasing k-subsets of {0..n-1}.
void for_each_subset(int n, int k, const auto& fn) {
  KVector::Index idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  if (k > n) return;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace

KVector::KVector(int dim, int grade) : dim_(dim), grade_(grade) {
  if (dim < 0 || grade < 0 || grade > dim) {
    throw InvalidArgument("KVector: grade must lie in [0, dim]");
  }
}

KVector KVector::scalar(int dim, const Rational& c) {
  KVector k(dim, 0);
  k.add_term({}, c);
  return k;
}

KVector KVector::basis(int dim, Index idx, const Rational& c) {
  KVector k(dim, static_cast<int>(idx.size()));
  k.add_term(idx, c);
  return k;
}

KVector KVector::from_vector(const QVector& v) {
  const int n = static_cast<int>(v.size());
  KVector k(n, 1);
  for (int i = 0; i < n; ++i) k.add_term({i}, v[static_cast<std::size_t>(i)]);
  return k;
}

Rational KVector::coefficient(const Index& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Rational(0) : it->second;
}

void KVector::add_term(const Index& idx, const Rational& c) {
  if (static_cast<int>(idx.size()) != grade_ || !strictly_increasing(idx, dim_)) {
    throw InvalidArgument("KVector: index tuple must be strictly increasing of length grade");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

KVector KVector::operator+(const KVector& o) const {
  if (dim_ != o.dim_) throw DimensionMismatch("KVector sum: ambient dimensions differ");
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (grade_ != o.grade_) throw InvalidArgument("KVector sum: grades differ");
  KVector r = *this;
  for (const auto& [idx, c] : o.terms_) r.add_term(idx, c);
  return r;
}

KVector KVector::operator-(const KVector& o) const { return *this + (-o); }

KVector KVector::operator-() const { return scaled(-1); }

KVector KVector::scaled(const Rational& s) const {
  KVector r(dim_, grade_);
  if (s == 0) return r;
  for (const auto& [idx, c] : terms_) r.terms_.emplace(idx, c * s);
  return r;
}

bool KVector::operator==(const KVector& o) const {
  if (dim_ != o.dim_) return false;
  if (is_zero() && o.is_zero()) return true;
  return grade_ == o.grade_ && terms_ == o.terms_;
}

Rational KVector::norm_squared() const {
  Rational s = 0;
  for (const auto& [idx, c] : terms_) s += c * c;
  return s;
}

Rational KVector::leading_coefficient() const {
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

std::optional<Rational> KVector::ratio_to(const KVector& other) const {
  if (dim_ != other.dim_) return std::nullopt;
  if (is_zero()) return Rational(0);
  if (other.is_zero() || grade_ != other.grade_ || terms_.size() != other.terms_.size()) {
    return std::nullopt;
  }
  Rational c = terms_.begin()->second / other.coefficient(terms_.begin()->first);
  if (other.scaled(c) != *this) return std::nullopt;
  return c;
}

KVector wedge(const KVector& a, const KVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("wedge: ambient dimensions differ");
  const int n = a.dim();
  if (a.grade() + b.grade() > n) return KVector(n, n);
  KVector r(n, a.grade() + b.grade());
  KVector::Index merged;
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      int s = merge_sign(ia, ib, merged);
      if (s != 0) r.add_term(merged, s > 0 ? Rational(ca * cb) : Rational(-(ca * cb)));
    }
  }
  return r;
}

Rational top_coefficient(const KVector& a) {
  if (a.grade() != a.dim()) throw InvalidArgument("top_coefficient: grade must equal dim");
  KVector::Index all(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) all[static_cast<std::size_t>(i)] = i;
  return a.coefficient(all);
}

KVector simple_kvector_from_basis(std::span<const QVector> vectors, int dim) {
  if (static_cast<int>(vectors.size()) > dim) {
    throw InvalidArgument("simple_kvector_from_basis: more vectors than dimensions");
  }
  KVector r = KVector::scalar(dim, 1);
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != dim) {
      throw DimensionMismatch("simple_kvector_from_basis: mixed dimensions");
    }
    r = wedge(r, KVector::from_vector(v));
  }
  if (r.is_zero()) return KVector(dim, static_cast<int>(vectors.size()));
  return r;
}

Rational pairing(const KVector& a, const KVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("pairing: ambient dimensions differ");
  Rational s = 0;
  if (a.is_zero() || b.is_zero() || a.grade() != b.grade()) return s;
  for (const auto& [idx, c] : a.terms()) s += c * b.coefficient(idx);
  return s;
}

// Rows of the linear map x -> x ^ a, one row per output coordinate.
static std::vector<QVector> wedge_map_rows(const KVector& a) {
  const int n = a.dim();
  std::vector<QVector> cols;
  for (int i = 0; i < n; ++i) {
    KVector w = wedge(KVector::basis(n, {i}), a);
    QVector col;
    for_each_subset(n, a.grade() + 1, [&](const KVector::Index& idx) {
      col.push_back(w.coefficient(idx));
    });
    cols.push_back(std::move(col));
  }
  if (cols.empty() || cols[0].empty()) return {};
  std::vector<QVector> rows(cols[0].size(), QVector(static_cast<std::size_t>(n)));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int c = 0; c < n; ++c) rows[r][static_cast<std::size_t>(c)] = cols[static_cast<std::size_t>(c)][r];
  }
  return rows;
}

bool is_simple(const KVector& a) {
  if (a.is_zero()) return false;
  if (a.grade() <= 1 || a.grade() >= a.dim() - 1) return true;
  return static_cast<int>(kvector_span(a).size()) == a.grade();
}

std::vector<QVector> kvector_span(const KVector& a) {
  const int n = a.dim();
  if (a.is_zero() || a.grade() == 0) return {};
  if (a.grade() == n) {
    std::vector<QVector> id;
    for (int i = 0; i < n; ++i) id.push_back(unit_vector(n, i));
    return id;
  }
  return nullspace(wedge_map_rows(a), n);
}

}  // namespace valconv
