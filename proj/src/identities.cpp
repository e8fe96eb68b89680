#include "catalan/identities.hpp"

#include <algorithm>

#include "catalan/triangles.hpp"

namespace catalan {

long Assignment::operator[](std::string_view name) const {
  for (std::size_t i = 0; i < specs_->size(); ++i) {
    if ((*specs_)[i].name == name) return (*values_)[i];
  }
  throw std::out_of_range("no parameter named " + std::string(name));
}

std::vector<std::pair<std::string, long>> Assignment::pairs() const {
  std::vector<std::pair<std::string, long>> out;
  for (std::size_t i = 0; i < specs_->size(); ++i) out.emplace_back((*specs_)[i].name, (*values_)[i]);
  return out;
}

// --- helpers ---------------------------------------------------------------

namespace {

Integer catalan_or_zero(long n) { return n < 0 ? Integer(0) : catalan(n); }

Integer product(std::initializer_list<long> factors) {
  Integer out = 1;
  for (long f : factors) out *= f;
  return out;
}

}  // namespace

Integer ScalarHelpers::lambda(long n, long k, long m, long l) const {
  return product({2 * m - l, 2 * m - l + 1, n - k + 1, n + k + 2}) -
         product({2 * n + 1, 2 * n + 2, m - l - k, m + k + 2}) + offsets_.lambda;
}

Integer ScalarHelpers::mu(long n, long k, long m, long l) const {
  return product({2 * m - l + 1, 2 * m - l + 2, n - k + 1, n + k + 3}) -
         product({2 * n + 2, 2 * n + 3, m - l - k, m + k + 3}) + offsets_.mu;
}

Integer ScalarHelpers::lambda_bar(long n, long k, long l) const {
  return Integer(2 * k * (2 * n + 1) + l * (n - k + 1) + offsets_.lambda_bar);
}

Integer ScalarHelpers::mu_bar(long n, long k, long l) const {
  return Integer((2 * k + 1) * (2 * n + 2) + l * (n - k + 1) + offsets_.mu_bar);
}

Integer ScalarHelpers::eta(long n, long m, long k) const {
  return Integer(4 * m * n + 5 * (m + n) + 2 * (m + n + 1) * k + 4 + offsets_.eta);
}

Integer ScalarHelpers::nu(long n, long k, long m) const {
  return Integer(2 * m * n + 3 * m + 3 * n - 6 * k - 2 * k * k + offsets_.nu);
}

Integer ScalarHelpers::g(long n, long m, long p) const {
  Integer sum = 0;
  if (p >= 1) {
    for (long i = 0; i <= p - 1; ++i) sum += catalan_or_zero(n + i) * catalan_or_zero(m - i);
  } else if (p <= -1) {
    for (long i = 1; i <= -p; ++i) sum -= catalan_or_zero(n - i) * catalan_or_zero(m + i);
  }
  return sum + offsets_.g;
}

Integer ScalarHelpers::f(long n, long m, long p) const {
  Integer sum = 0;
  if (p >= 1) {
    for (long i = 0; i <= p - 1; ++i) sum += catalan_or_zero(n + i) * catalan_or_zero(m + p - i - 1);
  } else if (p <= -1) {
    for (long i = 1; i <= -p; ++i) sum -= catalan_or_zero(n - i) * catalan_or_zero(m + p + i - 1);
  }
  return sum + offsets_.f;
}

Rational ScalarHelpers::h(long n, long m, long r, const Rational& y) const {
  const Triangle& t = shared_motzkin(y, y);
  Rational sum;
  if (r >= 1) {
    for (long i = 0; i <= r - 1; ++i) sum += t.entry(n + i, 0) * t.entry(m + r - i - 1, 0);
  } else if (r <= -1) {
    for (long i = 1; i <= -r; ++i) sum -= t.entry(n - i, 0) * t.entry(m + r + i - 1, 0);
  }
  return sum + Rational(offsets_.h);
}

// --- engine ----------------------------------------------------------------

const IdentityDescriptor& IdentityRegistry::find(std::string_view id) const {
  for (const auto& identity : identities_) {
    if (identity.id == id) return identity;
  }
  throw UnknownIdentity("unknown identity '" + std::string(id) + "'");
}

Box resolve_box(const IdentityDescriptor& identity, const Box& overrides) {
  for (const auto& o : overrides) {
    const bool known = std::any_of(identity.params.begin(), identity.params.end(),
                                   [&](const ParamSpec& p) { return p.name == o.name; });
    if (!known) throw std::invalid_argument("identity '" + identity.id + "' has no parameter '" + o.name + "'");
  }
  Box box;
  for (const auto& spec : identity.params) {
    ParamRange range{spec.name, spec.default_lo, spec.default_hi};
    for (const auto& o : overrides) {
      if (o.name != spec.name) continue;
      if (o.lo <= o.hi && (o.lo < spec.domain_lo || o.hi > spec.domain_hi)) {
        throw BoxOutsideDomain("range " + o.name + "=" + std::to_string(o.lo) + ".." + std::to_string(o.hi) +
                               " leaves the domain of '" + identity.id + "'");
      }
      range.lo = o.lo;
      range.hi = o.hi;
    }
    box.push_back(range);
  }
  return box;
}

namespace {

VerificationReport run_box(const IdentityDescriptor& identity, Box box) {
  VerificationReport report;
  report.id = identity.id;
  report.note = identity.note;
  report.box = std::move(box);
  const auto& ranges = report.box;
  if (std::any_of(ranges.begin(), ranges.end(), [](const ParamRange& r) { return r.lo > r.hi; })) return report;

  std::vector<long> values;
  for (const auto& r : ranges) values.push_back(r.lo);
  const Assignment at(identity.params, values);
  while (true) {
    if (!identity.admissible || identity.admissible(at)) {
      ++report.cases;
      Rational lhs = identity.lhs(at);
      Rational rhs = identity.rhs(at);
      if (lhs != rhs) {
        report.pass = false;
        report.counterexample = Counterexample{at.pairs(), std::move(lhs), std::move(rhs), {}};
        return report;
      }
      if (identity.lhs_extended) {
        Rational extended = identity.lhs_extended(at);
        if (extended != lhs) {
          report.pass = false;
          report.counterexample =
              Counterexample{at.pairs(), std::move(extended), std::move(rhs), "sum over an extended range"};
          return report;
        }
      }
    }
    // Odometer increment, last parameter fastest.
    std::size_t i = values.size();
    while (i > 0) {
      --i;
      if (values[i] < ranges[i].hi) {
        ++values[i];
        break;
      }
      values[i] = ranges[i].lo;
      if (i == 0) return report;
    }
    if (values.empty()) return report;
  }
}

}  // namespace

VerificationReport verify(const IdentityDescriptor& identity, const Box& overrides) {
  return run_box(identity, resolve_box(identity, overrides));
}

VerificationReport verify(const IdentityRegistry& registry, std::string_view id, const Box& overrides) {
  return verify(registry.find(id), overrides);
}

std::vector<VerificationReport> verify_all(const IdentityRegistry& registry, const Box& overrides) {
  std::vector<VerificationReport> reports;
  for (const auto& identity : registry.identities()) {
    Box box = resolve_box(identity, {});
    for (auto& range : box) {
      for (const auto& o : overrides) {
        if (o.name != range.name) continue;
        const auto& spec = *std::find_if(identity.params.begin(), identity.params.end(),
                                         [&](const ParamSpec& p) { return p.name == o.name; });
        range.lo = std::max(o.lo, spec.domain_lo);
        range.hi = std::min(o.hi, spec.domain_hi);
      }
    }
    reports.push_back(run_box(identity, std::move(box)));
  }
  return reports;
}

bool polynomial_identity_check(const BivariateEvaluator& lhs, const BivariateEvaluator& rhs, long degree_bound) {
  for (long x = 0; x <= degree_bound; ++x) {
    for (long y = 0; y <= degree_bound; ++y) {
      if (lhs(Rational(x), Rational(y)) != rhs(Rational(x), Rational(y))) return false;
    }
  }
  return true;
}

bool polynomial_identity_check(const UnivariateEvaluator& lhs, const UnivariateEvaluator& rhs, long degree_bound) {
  for (long y = 0; y <= degree_bound; ++y) {
    if (lhs(Rational(y)) != rhs(Rational(y))) return false;
  }
  return true;
}

}  // namespace catalan
