#pragma once

#include <climits>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "catalan/exact.hpp"
#include "catalan/report.hpp"

namespace catalan {

inline constexpr long kNoBound = LONG_MAX;

// One integer parameter of an identity: its mathematical domain and the
// desk-scale range verified by default.
struct ParamSpec {
  std::string name;
  long domain_lo = 0;
  long domain_hi = kNoBound;
  long default_lo = 0;
  long default_hi = 0;
};

// Values for the parameters of one identity, in declaration order.
class Assignment {
 public:
  Assignment(const std::vector<ParamSpec>& specs, const std::vector<long>& values)
      : specs_(&specs), values_(&values) {}

  // Throws std::out_of_range for a name the identity does not declare.
  long operator[](std::string_view name) const;

  std::vector<std::pair<std::string, long>> pairs() const;

 private:
  const std::vector<ParamSpec>* specs_;
  const std::vector<long>* values_;
};

using Evaluator = std::function<Rational(const Assignment&)>;
using Constraint = std::function<bool(const Assignment&)>;

struct IdentityDescriptor {
  std::string id;
  std::string statement;
  std::vector<ParamSpec> params;
  // Restricts the box (e.g. l <= m); cases failing it are skipped, not counted.
  Constraint admissible;
  Evaluator lhs;
  Evaluator rhs;
  // Same sum as lhs with its upper limit pushed past the printed one; must
  // agree with lhs. Empty when the identity has no truncated sum.
  Evaluator lhs_extended;
  std::string note;
};

class UnknownIdentity : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BoxOutsideDomain : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Added to each scalar helper's value; all zero in normal use. Non-zero
// offsets build deliberately broken registries for mutation testing.
struct HelperOffsets {
  long lambda = 0;
  long mu = 0;
  long lambda_bar = 0;
  long mu_bar = 0;
  long eta = 0;
  long nu = 0;
  long g = 0;
  long f = 0;
  long h = 0;
};

// The closed-form helper polynomials and piecewise sums appearing in the
// identities.
class ScalarHelpers {
 public:
  explicit ScalarHelpers(HelperOffsets offsets = {}) : offsets_(offsets) {}

  // (2m-l)(2m-l+1)(n-k+1)(n+k+2) - (2n+1)(2n+2)(m-l-k)(m+k+2)
  Integer lambda(long n, long k, long m, long l) const;
  // (2m-l+1)(2m-l+2)(n-k+1)(n+k+3) - (2n+2)(2n+3)(m-l-k)(m+k+3)
  Integer mu(long n, long k, long m, long l) const;
  // 2k(2n+1) + l(n-k+1)
  Integer lambda_bar(long n, long k, long l) const;
  // (2k+1)(2n+2) + l(n-k+1)
  Integer mu_bar(long n, long k, long l) const;
  // 4mn + 5(m+n) + 2(m+n+1)k + 4
  Integer eta(long n, long m, long k) const;
  // 2mn + 3m + 3n - 6k - 2k^2
  Integer nu(long n, long k, long m) const;

  // p >= 1: sum_{i<p} C(n+i) C(m-i); p = 0: 0; p <= -1: -sum_{i=1}^{|p|} C(n-i) C(m+i).
  Integer g(long n, long m, long p) const;
  // p >= 1: sum_{i<p} C(n+i) C(m+p-i-1); p = 0: 0; p <= -1: -sum_{i=1}^{|p|} C(n-i) C(m-|p|+i-1).
  Integer f(long n, long m, long p) const;
  // Same shape as f with Motzkin weights M(.,0)(y,y) in place of Catalan numbers.
  Rational h(long n, long m, long r, const Rational& y) const;

 private:
  HelperOffsets offsets_;
};

class IdentityRegistry {
 public:
  // The full catalogue, with helpers perturbed by `offsets`.
  explicit IdentityRegistry(HelperOffsets offsets = {});

  const std::vector<IdentityDescriptor>& identities() const { return identities_; }
  const IdentityDescriptor& find(std::string_view id) const;
  const ScalarHelpers& helpers() const { return *helpers_; }

 private:
  std::shared_ptr<const ScalarHelpers> helpers_;
  std::vector<IdentityDescriptor> identities_;
};

// Resolves per-parameter ranges: defaults, replaced by any matching override.
// Throws BoxOutsideDomain when an override leaves the declared domain and
// std::invalid_argument when it names an unknown parameter.
Box resolve_box(const IdentityDescriptor& identity, const Box& overrides);

// Exhaustive exact check of lhs == rhs (and lhs == lhs_extended) over the
// box, in lexicographic parameter order, stopping at the first failure.
VerificationReport verify(const IdentityDescriptor& identity, const Box& overrides = {});
VerificationReport verify(const IdentityRegistry& registry, std::string_view id, const Box& overrides = {});

// Every identity on its default box, in registry order. Overrides apply to
// identities that have the named parameter and are clipped to its domain.
std::vector<VerificationReport> verify_all(const IdentityRegistry& registry, const Box& overrides = {});

using UnivariateEvaluator = std::function<Rational(const Rational&)>;
using BivariateEvaluator = std::function<Rational(const Rational&, const Rational&)>;

// Compares two polynomials of degree at most degree_bound in each variable by
// evaluating them on the grid {0, 1, ..., degree_bound}^2. Equality on that
// grid implies identity.
bool polynomial_identity_check(const BivariateEvaluator& lhs, const BivariateEvaluator& rhs, long degree_bound);
bool polynomial_identity_check(const UnivariateEvaluator& lhs, const UnivariateEvaluator& rhs, long degree_bound);

}  // namespace catalan
