#include "catalan/triangles.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace catalan {

Integer ballot(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return exact_divide(Integer(k + 1) * binomial(2 * n - k, n), Integer(n + 1));
}

Integer ballot_alt(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return exact_divide(Integer(k + 1) * binomial(2 * n - k + 1, n - k), Integer(2 * n - k + 1));
}

Integer shapiro(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return exact_divide(Integer(k + 1) * binomial(2 * n + 2, n - k), Integer(n + 1));
}

Integer admissible(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return exact_divide(Integer(2 * k + 1) * binomial(2 * n + 1, n - k), Integer(2 * n + 1));
}

namespace {

std::vector<Rational> next_motzkin_row(const std::vector<Rational>& row, const Rational& x, const Rational& y) {
  const long n = static_cast<long>(row.size()) - 1;
  std::vector<Rational> next(row.size() + 1);
  for (long k = 0; k <= n + 1; ++k) {
    Rational v;
    if (k >= 1) v += row[k - 1];
    if (k <= n) v += (k == 0 ? x : y) * row[k];
    if (k + 1 <= n) v += row[k + 1];
    next[k] = std::move(v);
  }
  return next;
}

}  // namespace

Rational motzkin_weight(long n, long k, const Rational& x, const Rational& y) {
  if (n < 0) throw DomainError("motzkin_weight with negative n = " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  std::vector<Rational> row{Rational(1)};
  for (long i = 0; i < n; ++i) row = next_motzkin_row(row, x, y);
  return row[k];
}

Integer motzkin_zero_closed_form(long n, long k) {
  if (n < 0 || k < 0 || k > n || (n - k) % 2 != 0) return 0;
  return exact_divide(Integer(k + 1) * binomial(n + 1, (n - k) / 2), Integer(n + 1));
}

std::string to_string(TriangleKind kind) {
  switch (kind) {
    case TriangleKind::BallotC: return "C";
    case TriangleKind::ShapiroB: return "B";
    case TriangleKind::AdmissibleA: return "A";
    case TriangleKind::MotzkinM: return "M";
  }
  return "?";
}

struct Triangle::Cache {
  mutable std::shared_mutex mutex;
  // Rows are heap-allocated individually so that growing the index never
  // moves an already published entry.
  std::vector<std::unique_ptr<const std::vector<Rational>>> rows;
};

Triangle::Triangle(TriangleKind kind, Rational x, Rational y)
    : kind_(kind), x_(std::move(x)), y_(std::move(y)), cache_(std::make_shared<Cache>()) {}

Triangle Triangle::ballot() { return Triangle(TriangleKind::BallotC, 0, 0); }
Triangle Triangle::shapiro() { return Triangle(TriangleKind::ShapiroB, 2, 2); }
Triangle Triangle::admissible() { return Triangle(TriangleKind::AdmissibleA, 1, 2); }
Triangle Triangle::motzkin(const Rational& x, const Rational& y) { return Triangle(TriangleKind::MotzkinM, x, y); }

const Rational& Triangle::entry(long n, long k) const {
  static const Rational zero;
  if (n < 0 || k < 0 || k > n) return zero;
  {
    std::shared_lock lock(cache_->mutex);
    if (static_cast<std::size_t>(n) < cache_->rows.size()) return (*cache_->rows[n])[k];
  }
  std::unique_lock lock(cache_->mutex);
  auto& rows = cache_->rows;
  while (rows.size() <= static_cast<std::size_t>(n)) {
    const long row = static_cast<long>(rows.size());
    std::vector<Rational> values(row + 1);
    if (kind_ == TriangleKind::MotzkinM) {
      values = row == 0 ? std::vector<Rational>{Rational(1)} : next_motzkin_row(*rows.back(), x_, y_);
    } else {
      for (long j = 0; j <= row; ++j) {
        switch (kind_) {
          case TriangleKind::BallotC: values[j] = Rational(catalan::ballot(row, j)); break;
          case TriangleKind::ShapiroB: values[j] = Rational(catalan::shapiro(row, j)); break;
          case TriangleKind::AdmissibleA: values[j] = Rational(catalan::admissible(row, j)); break;
          case TriangleKind::MotzkinM: break;
        }
      }
    }
    rows.push_back(std::make_unique<const std::vector<Rational>>(std::move(values)));
  }
  return (*rows[n])[k];
}

std::size_t Triangle::cached_rows() const {
  std::shared_lock lock(cache_->mutex);
  return cache_->rows.size();
}

const Triangle& shared_motzkin(const Rational& x, const Rational& y) {
  static std::shared_mutex mutex;
  static std::map<std::pair<Rational, Rational>, std::unique_ptr<Triangle>> triangles;
  const auto key = std::make_pair(x, y);
  {
    std::shared_lock lock(mutex);
    if (auto it = triangles.find(key); it != triangles.end()) return *it->second;
  }
  std::unique_lock lock(mutex);
  auto& slot = triangles[key];
  if (!slot) slot = std::make_unique<Triangle>(Triangle::motzkin(x, y));
  return *slot;
}

}  // namespace catalan
