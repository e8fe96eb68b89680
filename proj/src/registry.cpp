// The catalogue of Catalan-triangle identities checked by the engine.
//
// Conventions: parameters are integers; sums are written on the lhs side so
// that lhs_extended can push their upper limit past the printed one; every
// triangle accessor is zero outside its support, so over-long sums are
// harmless.

#include <algorithm>

#include "catalan/bijections.hpp"
#include "catalan/identities.hpp"
#include "catalan/transforms.hpp"
#include "catalan/triangles.hpp"

namespace catalan {

namespace {

constexpr long kNoLowerBound = -kNoBound;

ParamSpec nat(std::string name, long default_hi, long domain_lo = 0) {
  return ParamSpec{std::move(name), domain_lo, kNoBound, domain_lo, default_hi};
}

ParamSpec integer(std::string name, long default_lo, long default_hi) {
  return ParamSpec{std::move(name), kNoLowerBound, kNoBound, default_lo, default_hi};
}

ParamSpec cases(long count) { return ParamSpec{"case", 0, count - 1, 0, count - 1}; }

template <class F>
Integer isum(long lo, long hi, F&& term) {
  Integer s = 0;
  for (long k = lo; k <= hi; ++k) s += term(k);
  return s;
}

template <class F>
Rational rsum(long lo, long hi, F&& term) {
  Rational s;
  for (long k = lo; k <= hi; ++k) s += term(k);
  return s;
}

Integer Cb(long n, long k) { return ballot(n, k); }
Integer Cat(long n) { return n < 0 ? Integer(0) : catalan(n); }
Integer Bin(long n, long k) { return binomial_or_zero(n, k); }
Rational Q(const Integer& num, const Integer& den) { return Rational(num, den); }
Rational R(const Integer& v) { return Rational(v); }
Integer rising(long x, long k) { return rising_factorial(Rational(x), k).to_integer(); }

const Triangle& Mxy(long x, long y) { return shared_motzkin(Rational(x), Rational(y)); }

// --- shared sums -----------------------------------------------------------

Integer det_a_sum(long n, long m, long l, long upper) {
  return isum(0, upper, [&](long k) {
    return det2(Cb(n + k, 2 * k), Cb(m + k, 2 * k + l + 1), Cb(n + k + 1, 2 * k), Cb(m + k + 1, 2 * k + l + 1));
  });
}

Integer det_b_sum(long n, long m, long l, long upper) {
  return isum(0, upper, [&](long k) {
    return det2(Cb(n + k + 1, 2 * k + 1), Cb(m + k + 1, 2 * k + l + 2), Cb(n + k + 2, 2 * k + 1),
                Cb(m + k + 2, 2 * k + l + 2));
  });
}

Integer z_mix_sum(long n, long m, long upper, int sign) {
  return isum(0, upper, [&](long k) {
    return Integer(Cb(m + k + 1, 2 * k + 1) * (Cb(n + k, 2 * k) + sign * Cb(n + k + 1, 2 * k + 2)));
  });
}

Integer per_even_sum(long n, long m, long p, long upper) {
  return isum(0, upper, [&](long k) {
    return per2(Cb(n + k, 2 * k), Cb(n + p + k, 2 * k + 1), Cb(m + k, 2 * k), Cb(m + p + k, 2 * k + 1));
  });
}

Integer per_odd_sum(long n, long m, long p, long upper) {
  return isum(0, upper, [&](long k) {
    return per2(Cb(n + k, 2 * k + 1), Cb(n + p + k + 1, 2 * k + 2), Cb(m + k, 2 * k + 1),
                Cb(m + p + k + 1, 2 * k + 2));
  });
}

Integer per_shapiro_sum(long n, long m, long p, long upper) {
  return isum(0, upper, [&](long k) {
    return per2(shapiro(n, k), shapiro(n + p, k + 1), shapiro(m, k), shapiro(m + p, k + 1));
  });
}

// At integer weights every Motzkin entry is an integer; summing numerators
// avoids the gcd work of rational products, which dominates the large boxes.
template <class Term>
Rational motzkin_sum(const Triangle& t, long upper, Term&& term) {
  if (t.x().is_integer() && t.y().is_integer()) {
    const auto num = [&](long n, long k) -> const Integer& { return t.entry(n, k).raw().get_num(); };
    Integer s = 0;
    for (long k = 0; k <= upper; ++k) s += term(num, k);
    return Rational(s);
  }
  const auto value = [&](long n, long k) -> const Rational& { return t.entry(n, k); };
  return rsum(0, upper, [&](long k) { return term(value, k); });
}

Rational motzkin_det_sum(long x, long y, long n, long m, long l, long r, long upper) {
  return motzkin_sum(Mxy(x, y), upper, [&](const auto& e, long k) {
    return det2(e(n, k), e(m, k + l + 1), e(n + r + 1, k), e(m + r + 1, k + l + 1));
  });
}

Rational motzkin_per_sum(long y, long n, long m, long r, long upper) {
  return motzkin_sum(Mxy(y, y), upper, [&](const auto& e, long k) {
    return per2(e(n, k), e(n + r, k + 1), e(m, k), e(m + r, k + 1));
  });
}

// --- catalogue -------------------------------------------------------------

using Helpers = std::shared_ptr<const ScalarHelpers>;

void add_shapiro_family(std::vector<IdentityDescriptor>& out) {
  out.push_back({
      "row_sum_B",
      "sum_{k=0}^{n} B(n,k) = (2n+1) C(n)",
      {nat("n", 25)},
      {},
      [](const Assignment& a) { return R(isum(0, a["n"], [&](long k) { return shapiro(a["n"], k); })); },
      [](const Assignment& a) { return R(Integer(2 * a["n"] + 1) * Cat(a["n"])); },
      {},
      {},
  });
  out.push_back({
      "shapiro_convolution",
      "sum_{k=0}^{min(m,n)} B(n,k) B(m,k) = C(m+n+1)",
      {nat("n", 25), nat("m", 25)},
      {},
      [](const Assignment& a) {
        const long n = a["n"], m = a["m"];
        return R(isum(0, std::min(m, n), [&](long k) { return Integer(shapiro(n, k) * shapiro(m, k)); }));
      },
      [](const Assignment& a) { return R(Cat(a["m"] + a["n"] + 1)); },
      [](const Assignment& a) {
        const long n = a["n"], m = a["m"];
        return R(isum(0, std::max(m, n) + 2, [&](long k) { return Integer(shapiro(n, k) * shapiro(m, k)); }));
      },
      {},
  });
  out.push_back({
      "eplett",
      "sum_{k=0}^{n} (-1)^k B(n,k) = C(n)",
      {nat("n", 25)},
      {},
      [](const Assignment& a) {
        return R(isum(0, a["n"], [&](long k) { return Integer((k % 2 == 0 ? 1 : -1) * shapiro(a["n"], k)); }));
      },
      [](const Assignment& a) { return R(Cat(a["n"])); },
      {},
      {},
  });
}

void add_motzkin_determinants(std::vector<IdentityDescriptor>& out) {
  out.push_back({
      "thm_1_1",
      "sum_{k=0}^{N} det[[M(n,k), M(m,k+l+1)], [M(n+r+1,k), M(m+r+1,k+l+1)]](x,y) = "
      "sum_{i=0}^{r} M(n+i,0)(x,y) M(m+r-i,l)(y,y), N = min(n+r+1, m+r-l)",
      {integer("x", 0, 6), integer("y", 0, 6), nat("n", 25), nat("m", 25), nat("l", 25), nat("r", 5)},
      [](const Assignment& a) { return a["l"] <= a["m"]; },
      [](const Assignment& a) {
        const long n = a["n"], m = a["m"], l = a["l"], r = a["r"];
        return motzkin_det_sum(a["x"], a["y"], n, m, l, r, std::min(n + r + 1, m + r - l));
      },
      [](const Assignment& a) {
        const long n = a["n"], m = a["m"], l = a["l"], r = a["r"];
        const Triangle& mxy = Mxy(a["x"], a["y"]);
        const Triangle& myy = Mxy(a["y"], a["y"]);
        return rsum(0, r, [&](long i) { return mxy.entry(n + i, 0) * myy.entry(m + r - i, l); });
      },
      [](const Assignment& a) {
        const long n = a["n"], m = a["m"], l = a["l"], r = a["r"];
        return motzkin_det_sum(a["x"], a["y"], n, m, l, r, std::min(n + r + 1, m + r - l) + 2);
      },
      {},
  });
}

void add_determinant_family(std::vector<IdentityDescriptor>& out, const Helpers& h) {
  const auto l_le_m = [](const Assignment& a) { return a["l"] <= a["m"]; };
  const auto upper = [](const Assignment& a) { return std::min(a["n"] + 1, a["m"] - a["l"]); };

  out.push_back({
      "thm_2_1_det_a",
      "sum_{k=0}^{N} det[[C(n+k,2k), C(m+k,2k+l+1)], [C(n+k+1,2k), C(m+k+1,2k+l+1)]] = C(n) C(m,l), "
      "N = min(n+1, m-l)",
      {nat("n", 25), nat("m", 25), nat("l", 25)},
      l_le_m,
      [upper](const Assignment& a) { return R(det_a_sum(a["n"], a["m"], a["l"], upper(a))); },
      [](const Assignment& a) { return R(Integer(Cat(a["n"]) * Cb(a["m"], a["l"]))); },
      [upper](const Assignment& a) { return R(det_a_sum(a["n"], a["m"], a["l"], upper(a) + 3)); },
      {},
  });
  out.push_back({
      "thm_2_1_det_b",
      "sum_{k=0}^{N} det[[C(n+k+1,2k+1), C(m+k+1,2k+l+2)], [C(n+k+2,2k+1), C(m+k+2,2k+l+2)]] = C(n+1) C(m,l)",
      {nat("n", 25), nat("m", 25), nat("l", 25)},
      l_le_m,
      [upper](const Assignment& a) { return R(det_b_sum(a["n"], a["m"], a["l"], upper(a))); },
      [](const Assignment& a) { return R(Integer(Cat(a["n"] + 1) * Cb(a["m"], a["l"]))); },
      [upper](const Assignment& a) { return R(det_b_sum(a["n"], a["m"], a["l"], upper(a) + 3)); },
      {},
  });

  // Binomial forms. The denominator does not depend on k and is factored out.
  const auto sum_a = [h](long n, long m, long l, long hi) {
    const Integer num = isum(0, hi, [&](long k) {
      return Integer((2 * k + 1) * (2 * k + l + 2) * h->lambda(n, k, m, l) * Bin(2 * n + 3, n - k + 1) *
                     Bin(2 * m - l + 2, m - k - l));
    });
    return Q(num, rising(2 * n + 1, 3) * rising(2 * m - l, 3));
  };
  const auto sum_b = [h](long n, long m, long l, long hi) {
    const Integer num = isum(0, hi, [&](long k) {
      return Integer((2 * k + 2) * (2 * k + l + 3) * h->mu(n, k, m, l) * Bin(2 * n + 4, n - k + 1) *
                     Bin(2 * m - l + 3, m - k - l));
    });
    return Q(num, rising(2 * n + 2, 3) * rising(2 * m - l + 1, 3));
  };
  out.push_back({
      "thm_2_1_sum_a",
      "sum_{k=0}^{N} (2k+1)(2k+l+2) lambda(n,k;m,l) / ((2n+1)_3 (2m-l)_3) binom(2n+3,n-k+1) binom(2m-l+2,m-k-l) "
      "= C(m,l) C(n)",
      {nat("n", 25), nat("m", 25), nat("l", 25)},
      // (2m-l)_3 vanishes at m = l = 0, where the summand is 0/0.
      [](const Assignment& a) { return a["l"] <= a["m"] && 2 * a["m"] - a["l"] >= 1; },
      [sum_a, upper](const Assignment& a) { return sum_a(a["n"], a["m"], a["l"], upper(a)); },
      [](const Assignment& a) { return R(Integer(Cb(a["m"], a["l"]) * Cat(a["n"]))); },
      [sum_a, upper](const Assignment& a) { return sum_a(a["n"], a["m"], a["l"], upper(a) + 3); },
      "m = l = 0 excluded: the summand is 0/0 there",
  });
  out.push_back({
      "thm_2_1_sum_b",
      "sum_{k=0}^{N} (2k+2)(2k+l+3) mu(n,k;m,l) / ((2n+2)_3 (2m-l+1)_3) binom(2n+4,n-k+1) binom(2m-l+3,m-k-l) "
      "= C(m,l) C(n+1)",
      {nat("n", 25), nat("m", 25), nat("l", 25)},
      l_le_m,
      [sum_b, upper](const Assignment& a) { return sum_b(a["n"], a["m"], a["l"], upper(a)); },
      [](const Assignment& a) { return R(Integer(Cb(a["m"], a["l"]) * Cat(a["n"] + 1))); },
      [sum_b, upper](const Assignment& a) { return sum_b(a["n"], a["m"], a["l"], upper(a) + 3); },
      {},
  });

  out.push_back({
      "lambda_mu_special",
      "lambda(n,k;m,l) and mu(n,k;m,l) at (m,l) in {(n,0),(n,1),(n+1,0),(n+1,1),(n+2,1)} match their factored forms",
      {nat("n", 20), nat("k", 20), cases(10)},
      [](const Assignment& a) { return a["k"] <= a["n"]; },
      [h](const Assignment& a) {
        const long n = a["n"], k = a["k"];
        switch (a["case"]) {
          case 0: return R(h->lambda(n, k, n, 0));
          case 1: return R(h->lambda(n, k, n, 1));
          case 2: return R(h->lambda(n, k, n + 1, 0));
          case 3: return R(h->lambda(n, k, n + 1, 1));
          case 4: return R(h->lambda(n, k, n + 2, 1));
          case 5: return R(h->mu(n, k, n, 0));
          case 6: return R(h->mu(n, k, n, 1));
          case 7: return R(h->mu(n, k, n + 1, 0));
          case 8: return R(h->mu(n, k, n + 1, 1));
          default: return R(h->mu(n, k, n + 2, 1));
        }
      },
      [](const Assignment& a) {
        const long n = a["n"], k = a["k"];
        switch (a["case"]) {
          case 0: return Rational(2 * k * (2 * n + 1) * (n + k + 2));
          case 1: return Rational((n + k + 2) * (8 * n * k + 2 * k + 2 * n + 2));
          case 2: return Rational((2 * k + 3) * (n - k + 1) * (2 * n + 2));
          case 3: return Rational((2 * k + 2) * (2 * n + 1) * (2 * n + 2));
          case 4: return Rational((n - k + 1) * (8 * n * k + 10 * k + 14 * n + 16));
          case 5: return Rational((2 * k + 1) * (2 * n + 2) * (n + k + 3));
          case 6: return Rational((n + k + 3) * (8 * n * k + 6 * k + 6 * n + 6));
          case 7: return Rational((2 * k + 4) * (n - k + 1) * (2 * n + 3));
          case 8: return Rational((2 * k + 3) * (2 * n + 2) * (2 * n + 3));
          default: return Rational((n - k + 1) * (8 * n * k + 14 * k + 18 * n + 30));
        }
      },
      {},
      {},
  });
  out.push_back({
      "lambda_mu_diagonal",
      "lambda(n,k;n,l) = (l+1)(n+k+2) lambda_bar(n,k;l) and mu(n,k;n,l) = (l+1)(n+k+3) mu_bar(n,k;l)",
      {nat("n", 20), nat("k", 20), nat("l", 20), cases(2)},
      [](const Assignment& a) { return a["k"] <= a["n"]; },
      [h](const Assignment& a) {
        const long n = a["n"], k = a["k"], l = a["l"];
        return R(a["case"] == 0 ? h->lambda(n, k, n, l) : h->mu(n, k, n, l));
      },
      [h](const Assignment& a) {
        const long n = a["n"], k = a["k"], l = a["l"];
        return a["case"] == 0 ? R(Integer((l + 1) * (n + k + 2) * h->lambda_bar(n, k, l)))
                              : R(Integer((l + 1) * (n + k + 3) * h->mu_bar(n, k, l)));
      },
      {},
      {},
  });

  out.push_back({
      "cor_2_2",
      "case 0: C(n+1)^2, case 1: C(n) C(n+1), case 2: C(n) C(n+2) as single binomial sums over k = 0..n",
      {nat("n", 25), cases(3)},
      {},
      [](const Assignment& a) {
        const long n = a["n"];
        switch (a["case"]) {
          case 0:
            return Q(isum(0, n, [&](long k) {
                       return Integer((2 * k + 1) * (2 * k + 3) * (8 * n * k + 10 * k + 2 * n + 4) *
                                      Bin(2 * n + 2, n - k) * Bin(2 * n + 5, n - k + 2));
                     }),
                     rising(2 * n + 1, 5));
          case 1:
            return Q(isum(0, n, [&](long k) {
                       return Integer((2 * k + 1) * (2 * k + 2) * (2 * k + 3) * Bin(2 * n + 3, n - k) *
                                      Bin(2 * n + 3, n - k + 1));
                     }),
                     Integer((2 * n + 1) * (2 * n + 2)) * (2 * n + 3) * (2 * n + 3));
          default:
            return Q(isum(0, n, [&](long k) {
                       return Integer((2 * k + 1) * (2 * k + 3) * (8 * n * k + 10 * k + 14 * n + 16) *
                                      Bin(2 * n + 2, n - k) * Bin(2 * n + 5, n - k + 1));
                     }),
                     rising(2 * n + 1, 5));
        }
      },
      [](const Assignment& a) {
        const long n = a["n"];
        switch (a["case"]) {
          case 0: return R(Integer(Cat(n + 1) * Cat(n + 1)));
          case 1: return R(Integer(Cat(n) * Cat(n + 1)));
          default: return R(Integer(Cat(n) * Cat(n + 2)));
        }
      },
      {},
      {},
  });
  out.push_back({
      "cor_2_3",
      "case 0: C(n+1) C(n+2), case 1: C(n+1)^2, case 2: C(n+1) C(n+2) as single binomial sums over k = 0..n",
      {nat("n", 25), cases(3)},
      {},
      [](const Assignment& a) {
        const long n = a["n"];
        switch (a["case"]) {
          case 0:
            return Q(isum(0, n, [&](long k) {
                       return Integer((2 * k + 2) * (2 * k + 4) * (8 * n * k + 6 * n + 14 * k + 12) *
                                      Bin(2 * n + 3, n - k) * Bin(2 * n + 6, n - k + 2));
                     }),
                     rising(2 * n + 2, 5));
          case 1:
            return Q(isum(0, n, [&](long k) {
                       return Integer((2 * k + 2) * (2 * k + 3) * (2 * k + 4) * Bin(2 * n + 4, n - k) *
                                      Bin(2 * n + 4, n - k + 1));
                     }),
                     Integer((2 * n + 2) * (2 * n + 3)) * (2 * n + 4) * (2 * n + 4));
          default:
            return Q(isum(0, n, [&](long k) {
                       return Integer((2 * k + 2) * (2 * k + 4) * (8 * n * k + 14 * k + 18 * n + 30) *
                                      Bin(2 * n + 3, n - k) * Bin(2 * n + 6, n - k + 1));
                     }),
                     rising(2 * n + 2, 5));
        }
      },
      [](const Assignment& a) {
        const long n = a["n"];
        switch (a["case"]) {
          case 1: return R(Integer(Cat(n + 1) * Cat(n + 1)));
          default: return R(Integer(Cat(n + 1) * Cat(n + 2)));
        }
      },
      {},
      {},
  });

  const auto ballot_over_binomial = [](long n, long l) { return Q(Bin(2 * n - l + 1, n - l), Integer(2 * n - l + 1)); };
  out.push_back({
      "cor_2_4_a",
      "sum_{k=0}^{n-l} (2k+1)(2k+l+2) lambda_bar(n,k;l) / ((2n+1)_2 (2n-l)_3) binom(2n+2,n-k+1) binom(2n-l+2,n-k-l) "
      "= binom(2n-l+1,n-l)/(2n-l+1) C(n)",
      {nat("n", 25), nat("l", 25)},
      // (2n-l)_3 vanishes at n = l = 0.
      [](const Assignment& a) { return a["l"] <= a["n"] && 2 * a["n"] - a["l"] >= 1; },
      [h](const Assignment& a) {
        const long n = a["n"], l = a["l"];
        return Q(isum(0, n - l, [&](long k) {
                   return Integer((2 * k + 1) * (2 * k + l + 2) * h->lambda_bar(n, k, l) * Bin(2 * n + 2, n - k + 1) *
                                  Bin(2 * n - l + 2, n - k - l));
                 }),
                 rising(2 * n + 1, 2) * rising(2 * n - l, 3));
      },
      [ballot_over_binomial](const Assignment& a) { return ballot_over_binomial(a["n"], a["l"]) * R(Cat(a["n"])); },
      {},
      "n = l = 0 excluded: the summand is 0/0 there",
  });
  out.push_back({
      "cor_2_4_b",
      "sum_{k=0}^{n-l} (2k+2)(2k+l+3) mu_bar(n,k;l) / ((2n+2)_2 (2n-l+1)_3) binom(2n+3,n-k+1) binom(2n-l+3,n-k-l) "
      "= binom(2n-l+1,n-l)/(2n-l+1) C(n+1)",
      {nat("n", 25), nat("l", 25)},
      [](const Assignment& a) { return a["l"] <= a["n"]; },
      [h](const Assignment& a) {
        const long n = a["n"], l = a["l"];
        return Q(isum(0, n - l, [&](long k) {
                   return Integer((2 * k + 2) * (2 * k + l + 3) * h->mu_bar(n, k, l) * Bin(2 * n + 3, n - k + 1) *
                                  Bin(2 * n - l + 3, n - k - l));
                 }),
                 rising(2 * n + 2, 2) * rising(2 * n - l + 1, 3));
      },
      [ballot_over_binomial](const Assignment& a) {
        return ballot_over_binomial(a["n"], a["l"]) * R(Cat(a["n"] + 1));
      },
      {},
      {},
  });
  out.push_back({
      "cor_2_5_a",
      "sum_{k=0}^{n} (2k+1)^2 (4nk-n-k) / ((2n-1)^2 (2n) (2n+1)) binom(2n,n-k) binom(2n+1,n-k) = binom(2n,n) C(n-1)",
      {nat("n", 25, 1)},
      {},
      [](const Assignment& a) {
        const long n = a["n"];
        return Q(isum(0, n, [&](long k) {
                   return Integer((2 * k + 1) * (2 * k + 1) * (4 * n * k - n - k) * Bin(2 * n, n - k) *
                                  Bin(2 * n + 1, n - k));
                 }),
                 Integer((2 * n - 1) * (2 * n - 1)) * (2 * n) * (2 * n + 1));
      },
      [](const Assignment& a) { return R(Integer(Bin(2 * a["n"], a["n"]) * Cat(a["n"] - 1))); },
      {},
      {},
  });
  out.push_back({
      "cor_2_5_b",
      "sum_{k=0}^{n} (k+1)^2 (4nk+n+k) / (n (n+1) (2n+1)^2) binom(2n+1,n-k) binom(2n+2,n-k) = binom(2n,n) C(n)",
      {nat("n", 25, 1)},
      {},
      [](const Assignment& a) {
        const long n = a["n"];
        return Q(isum(0, n, [&](long k) {
                   return Integer((k + 1) * (k + 1) * (4 * n * k + n + k) * Bin(2 * n + 1, n - k) *
                                  Bin(2 * n + 2, n - k));
                 }),
                 Integer(n * (n + 1)) * (2 * n + 1) * (2 * n + 1));
      },
      [](const Assignment& a) { return R(Integer(Bin(2 * a["n"], a["n"]) * Cat(a["n"]))); },
      {},
      {},
  });
}

void add_product_family(std::vector<IdentityDescriptor>& out, const Helpers& h) {
  out.push_back({
      "thm_3_1_sum",
      "sum_{k=0}^{min(m,n)} C(m+k+1,2k+1) (C(n+k,2k) + C(n+k+1,2k+2)) = C(m+n+1)",
      {nat("n", 25), nat("m", 25)},
      {},
      [](const Assignment& a) { return R(z_mix_sum(a["n"], a["m"], std::min(a["m"], a["n"]), 1)); },
      [](const Assignment& a) { return R(Cat(a["m"] + a["n"] + 1)); },
      [](const Assignment& a) { return R(z_mix_sum(a["n"], a["m"], std::max(a["m"], a["n"]) + 3, 1)); },
      {},
  });
  out.push_back({
      "thm_3_1_alt",
      "sum_{k=0}^{min(m,n)} C(m+k+1,2k+1) (C(n+k,2k) - C(n+k+1,2k+2)) = G(n,m;m-n+1)",
      {nat("n", 25), nat("m", 25)},
      {},
      [](const Assignment& a) { return R(z_mix_sum(a["n"], a["m"], std::min(a["m"], a["n"]), -1)); },
      [h](const Assignment& a) { return R(h->g(a["n"], a["m"], a["m"] - a["n"] + 1)); },
      [](const Assignment& a) { return R(z_mix_sum(a["n"], a["m"], std::max(a["m"], a["n"]) + 3, -1)); },
      {},
  });
  out.push_back({
      "cor_3_2_a",
      "Dyck paths of length 4n split evenly by their (2n+1)-th step: #u = #d",
      {nat("n", 4, 1)},
      {},
      [](const Assignment& a) { return Rational(static_cast<long>(count_dyck_by_pivot(a["n"], a["n"] - 1).up)); },
      [](const Assignment& a) { return Rational(static_cast<long>(count_dyck_by_pivot(a["n"], a["n"] - 1).down)); },
      {},
      {},
  });
  const auto pivot_difference = [](long n, long m) {
    const PivotCounts c = count_dyck_by_pivot(n, m);
    return Rational(static_cast<long>(c.up)) - Rational(static_cast<long>(c.down));
  };
  out.push_back({
      "cor_3_2_b",
      "Dyck paths of length 4n+2: #u - #d at the (2n+1)-th step = C(n)^2",
      {nat("n", 4)},
      {},
      [pivot_difference](const Assignment& a) { return pivot_difference(a["n"], a["n"]); },
      [](const Assignment& a) { return R(Integer(Cat(a["n"]) * Cat(a["n"]))); },
      {},
      {},
  });
  out.push_back({
      "cor_3_2_c",
      "Dyck paths of length 4n+4: #u - #d at the (2n+1)-th step = 2 C(n) C(n+1)",
      {nat("n", 3)},
      {},
      [pivot_difference](const Assignment& a) { return pivot_difference(a["n"], a["n"] + 1); },
      [](const Assignment& a) { return R(Integer(2 * Cat(a["n"]) * Cat(a["n"] + 1))); },
      {},
      {},
  });
  out.push_back({
      "dyck_pivot_counts",
      "Dyck paths of length 2n+2m+2 by (2n+1)-th step: case 0: #u + #d = C(n+m+1), case 1: #u - #d = G(n,m;m-n+1)",
      {nat("n", 4), nat("m", 4), cases(2)},
      {},
      [](const Assignment& a) {
        const PivotCounts c = count_dyck_by_pivot(a["n"], a["m"]);
        const Rational up(static_cast<long>(c.up));
        const Rational down(static_cast<long>(c.down));
        return a["case"] == 0 ? up + down : up - down;
      },
      [h](const Assignment& a) {
        const long n = a["n"], m = a["m"];
        return a["case"] == 0 ? R(Cat(n + m + 1)) : R(h->g(n, m, m - n + 1));
      },
      {},
      {},
  });
}

void add_permanent_family(std::vector<IdentityDescriptor>& out, const Helpers& h) {
  const auto m_ge_n = [](const Assignment& a) { return a["m"] >= a["n"]; };

  out.push_back({
      "thm_4_1",
      "sum_{k=0}^{m} per[[M(n,k), M(n+r,k+1)], [M(m,k), M(m+r,k+1)]](y,y) = M(m+n+r,1)(y,y) + H(n,m;r)",
      {integer("y", 0, 6), nat("n", 25), nat("m", 25), integer("r", -5, 5)},
      m_ge_n,
      [](const Assignment& a) { return motzkin_per_sum(a["y"], a["n"], a["m"], a["r"], a["m"]); },
      [h](const Assignment& a) {
        const Rational y(a["y"]);
        return shared_motzkin(y, y).entry(a["m"] + a["n"] + a["r"], 1) + h->h(a["n"], a["m"], a["r"], y);
      },
      [](const Assignment& a) {
        return motzkin_per_sum(a["y"], a["n"], a["m"], a["r"], a["m"] + std::abs(a["r"]) + 2);
      },
      {},
  });
  out.push_back({
      "thm_4_2_a",
      "sum_{k=0}^{m} per[[C(n+k,2k), C(n+p+k,2k+1)], [C(m+k,2k), C(m+p+k,2k+1)]] = C(m+n+p,1) + F(n,m;p)",
      {nat("n", 25), nat("m", 25), integer("p", -5, 5)},
      m_ge_n,
      [](const Assignment& a) { return R(per_even_sum(a["n"], a["m"], a["p"], a["m"])); },
      [h](const Assignment& a) { return R(Integer(Cb(a["m"] + a["n"] + a["p"], 1) + h->f(a["n"], a["m"], a["p"]))); },
      [](const Assignment& a) { return R(per_even_sum(a["n"], a["m"], a["p"], a["m"] + std::abs(a["p"]) + 2)); },
      {},
  });
  out.push_back({
      "thm_4_2_b",
      "sum_{k=0}^{m} per[[C(n+k,2k+1), C(n+p+k+1,2k+2)], [C(m+k,2k+1), C(m+p+k+1,2k+2)]] = C(m+n+p,1) + F(n,m;p)",
      {nat("n", 25, 1), nat("m", 25), integer("p", -5, 5)},
      m_ge_n,
      [](const Assignment& a) { return R(per_odd_sum(a["n"], a["m"], a["p"], a["m"])); },
      [h](const Assignment& a) { return R(Integer(Cb(a["m"] + a["n"] + a["p"], 1) + h->f(a["n"], a["m"], a["p"]))); },
      [](const Assignment& a) { return R(per_odd_sum(a["n"], a["m"], a["p"], a["m"] + std::abs(a["p"]) + 2)); },
      "holds for n >= 1 only; at n = 0 the lhs misses the C(m+p,1) term",
  });

  const auto denominator43 = [](long n, long m) -> Integer { return Integer((2 * n) * (2 * n + 1)) * (2 * m) * (2 * m + 1); };
  out.push_back({
      "cor_4_3",
      "C(n+m) as binomial sums: cases 0 and 1 for m >= n >= 1, cases 2 and 3 their m = n forms",
      {nat("n", 25, 1), nat("m", 25, 1), cases(4)},
      [](const Assignment& a) { return a["m"] >= a["n"] && (a["case"] < 2 || a["m"] == a["n"]); },
      [denominator43](const Assignment& a) {
        const long n = a["n"], m = a["m"];
        switch (a["case"]) {
          case 0:
            return Q(isum(0, n, [&](long k) {
                       return Integer((2 * k + 1) * (2 * k + 2) * (4 * m * n - 2 * (m + n) * k) *
                                      Bin(2 * n + 1, n - k) * Bin(2 * m + 1, m - k));
                     }),
                     denominator43(n, m));
          case 1:
            return Q(isum(0, n - 1, [&](long k) {
                       return Integer((2 * k + 2) * (2 * k + 3) * (4 * m * n + 4 * m + 4 * n + 2 * (m + n) * k) *
                                      Bin(2 * n + 1, n - k - 1) * Bin(2 * m + 1, m - k - 1));
                     }),
                     denominator43(n, m));
          case 2:
            return Q(isum(0, n - 1, [&](long k) {
                       return Integer((2 * k + 1) * (2 * k + 2) * Bin(2 * n, n - k - 1) * Bin(2 * n + 1, n - k));
                     }),
                     Integer(n * (2 * n + 1)));
          default:
            return Q(isum(0, n - 1, [&](long k) {
                       return Integer((2 * k + 2) * (2 * k + 3) * Bin(2 * n, n - k - 1) * Bin(2 * n + 1, n - k - 1));
                     }),
                     Integer(n * (2 * n + 1)));
        }
      },
      [](const Assignment& a) { return R(Cat(a["n"] + a["m"])); },
      {},
      {},
  });
  out.push_back({
      "cor_4_4",
      "sum_{k=0}^{n} (2k+1)(2k+2) eta(n,m;k) / ((2n+1)(2n+2)(2m+1)(2m+2)) binom(2n+2,n-k) binom(2m+2,m-k) "
      "= C(n+m+1) + C(n) C(m); case 1 is the m = n form",
      {nat("n", 25), nat("m", 25), cases(2)},
      [](const Assignment& a) { return a["m"] >= a["n"] && (a["case"] == 0 || a["m"] == a["n"]); },
      [h](const Assignment& a) {
        const long n = a["n"], m = a["m"];
        if (a["case"] == 0) {
          return Q(isum(0, n, [&](long k) {
                     return Integer((2 * k + 1) * (2 * k + 2) * h->eta(n, m, k) * Bin(2 * n + 2, n - k) *
                                    Bin(2 * m + 2, m - k));
                   }),
                   Integer((2 * n + 1) * (2 * n + 2)) * (2 * m + 1) * (2 * m + 2));
        }
        return Q(isum(0, n, [&](long k) {
                   return Integer((2 * k + 1) * (2 * k + 2) * Bin(2 * n + 1, n - k) * Bin(2 * n + 2, n - k));
                 }),
                 Integer((n + 1) * (2 * n + 1)));
      },
      [](const Assignment& a) { return R(Integer(Cat(a["n"] + a["m"] + 1) + Cat(a["n"]) * Cat(a["m"]))); },
      {},
      {},
  });
  out.push_back({
      "thm_4_4",
      "sum_{k=0}^{m} per[[B(n,k), B(n+p,k+1)], [B(m,k), B(m+p,k+1)]] = B(m+n+p,1) + F(n+1,m+1;p)",
      {nat("n", 25), nat("m", 25), integer("p", -5, 5)},
      [](const Assignment& a) { return a["m"] >= a["n"] && a["n"] + a["p"] >= 0; },
      [](const Assignment& a) { return R(per_shapiro_sum(a["n"], a["m"], a["p"], a["m"])); },
      [h](const Assignment& a) {
        return R(Integer(shapiro(a["m"] + a["n"] + a["p"], 1) + h->f(a["n"] + 1, a["m"] + 1, a["p"])));
      },
      [](const Assignment& a) { return R(per_shapiro_sum(a["n"], a["m"], a["p"], a["m"] + std::abs(a["p"]) + 2)); },
      "requires n + p >= 0",
  });
  out.push_back({
      "cor_4_5",
      "sum_{k=0}^{n} (2k+2)(2k+4) nu(n,k;m) / ((2n+2)_2 (2m+2)_2) binom(2n+3,n-k) binom(2m+3,m-k) "
      "= 2/(n+m+1) binom(2n+2m+2,n+m-1); case 1 is the m = n form",
      {nat("n", 25), nat("m", 25), cases(2)},
      [](const Assignment& a) { return a["m"] >= a["n"] && (a["case"] == 0 || a["m"] == a["n"]); },
      [h](const Assignment& a) {
        const long n = a["n"], m = a["m"];
        if (a["case"] == 0) {
          return Q(isum(0, n, [&](long k) {
                     return Integer((2 * k + 2) * (2 * k + 4) * h->nu(n, k, m) * Bin(2 * n + 3, n - k) *
                                    Bin(2 * m + 3, m - k));
                   }),
                   rising(2 * n + 2, 2) * rising(2 * m + 2, 2));
        }
        return Q(isum(0, n - 1, [&](long k) {
                   return Integer((k + 1) * (k + 2) * Bin(2 * n + 2, n - k - 1) * Bin(2 * n + 2, n - k));
                 }),
                 Integer((n + 1) * (n + 1)));
      },
      [](const Assignment& a) {
        const long n = a["n"], m = a["m"];
        if (a["case"] == 0) return Q(2 * Bin(2 * n + 2 * m + 2, n + m - 1), Integer(n + m + 1));
        return Q(Bin(4 * n + 2, 2 * n - 1), Integer(2 * n + 1));
      },
      {},
      {},
  });
}

void add_structural(std::vector<IdentityDescriptor>& out) {
  out.push_back({
      "relations",
      "case 0: A(n,k) = C(n+k,2k); 1: B(n,k) = C(n+k+1,2k+1); 2: C(n,0) = C(n); 3: C(n+1,1) = C(n+1); "
      "4: sum_k C(n,k) = C(n+1); 5: both closed forms of C(n,k) agree",
      {nat("n", 25), nat("k", 25), cases(6)},
      [](const Assignment& a) {
        const long c = a["case"];
        return (c == 0 || c == 1 || c == 5) ? a["k"] <= a["n"] : a["k"] == 0;
      },
      [](const Assignment& a) {
        const long n = a["n"], k = a["k"];
        switch (a["case"]) {
          case 0: return R(admissible(n, k));
          case 1: return R(shapiro(n, k));
          case 2: return R(ballot(n, 0));
          case 3: return R(ballot(n + 1, 1));
          case 4: return R(isum(0, n, [&](long j) { return ballot(n, j); }));
          default: return R(ballot(n, k));
        }
      },
      [](const Assignment& a) {
        const long n = a["n"], k = a["k"];
        switch (a["case"]) {
          case 0: return R(ballot(n + k, 2 * k));
          case 1: return R(ballot(n + k + 1, 2 * k + 1));
          case 2: return R(Cat(n));
          case 3: return R(Cat(n + 1));
          case 4: return R(Cat(n + 1));
          default: return R(ballot_alt(n, k));
        }
      },
      {},
      "case 4 checks the row sum against C(n+1); the commonly printed form sum_k C(n,k) = C(n) "
      "contradicts the tabulated rows (e.g. 5+5+3+1 = 14)",
  });
  out.push_back({
      "specializations",
      "case 0: A(n,k) = M(n,k)(1,2); 1: B(n,k) = M(n,k)(2,2); 2: C(n,k) = M(2n-k,k)(0,0); "
      "3: M(n,k)(0,0) matches its parity closed form",
      {nat("n", 25), nat("k", 25), cases(4)},
      [](const Assignment& a) { return a["k"] <= a["n"]; },
      [](const Assignment& a) {
        const long n = a["n"], k = a["k"];
        switch (a["case"]) {
          case 0: return Mxy(1, 2).entry(n, k);
          case 1: return Mxy(2, 2).entry(n, k);
          case 2: return Mxy(0, 0).entry(2 * n - k, k);
          default: return Mxy(0, 0).entry(n, k);
        }
      },
      [](const Assignment& a) {
        const long n = a["n"], k = a["k"];
        switch (a["case"]) {
          case 0: return R(admissible(n, k));
          case 1: return R(shapiro(n, k));
          case 2: return R(ballot(n, k));
          default: return R(motzkin_zero_closed_form(n, k));
        }
      },
      {},
      {},
  });
  out.push_back({
      "transform_row_sums",
      "row sums of X, Y, Z, W: 0: sum X = C(n)^2; 1: sum X = determinant sum at m = n, l = 0; 2: sum Y = C(n) C(n+1); "
      "3: sum Y = determinant sum at m = n, l = 0; 4: sum Z = C(n+1); 5: alternating sum Z = C(n/2)^2 or 0; "
      "6: sum W = C(n+1); 7: sum W = permanent sum at p = 0",
      {nat("n", 25), cases(8)},
      {},
      [](const Assignment& a) {
        const long n = a["n"];
        switch (a["case"]) {
          case 0:
          case 1: return R(row_sum(DerivedTriangle(DerivedKind::X), n));
          case 2:
          case 3: return R(row_sum(DerivedTriangle(DerivedKind::Y), n));
          case 4: return R(row_sum(DerivedTriangle(DerivedKind::Z), n));
          case 5: return R(row_sum(DerivedTriangle(DerivedKind::Z), n, true));
          default: return R(row_sum(DerivedTriangle(DerivedKind::W), n));
        }
      },
      [](const Assignment& a) {
        const long n = a["n"];
        switch (a["case"]) {
          case 0: return R(Integer(Cat(n) * Cat(n)));
          case 1: return R(det_a_sum(n, n, 0, std::min(n + 1, n)));
          case 2: return R(Integer(Cat(n) * Cat(n + 1)));
          case 3: return R(det_b_sum(n, n, 0, std::min(n + 1, n)));
          case 4: return R(Cat(n + 1));
          case 5: return n % 2 == 0 ? R(Integer(Cat(n / 2) * Cat(n / 2))) : Rational(0);
          case 6: return R(Cat(n + 1));
          default: {
            // Even rows 2j pair ballot rows (j+k, j+k+1): m = j+1; odd rows pair (j+k, j+k+2): m = j+2.
            const long j = n / 2;
            const long m = n % 2 == 0 ? j + 1 : j + 2;
            return R(per_even_sum(j, m, 0, m));
          }
        }
      },
      {},
      {},
  });
}

}  // namespace

IdentityRegistry::IdentityRegistry(HelperOffsets offsets)
    : helpers_(std::make_shared<const ScalarHelpers>(offsets)) {
  add_shapiro_family(identities_);
  add_motzkin_determinants(identities_);
  add_determinant_family(identities_, helpers_);
  add_product_family(identities_, helpers_);
  add_permanent_family(identities_, helpers_);
  add_structural(identities_);
}

}  // namespace catalan
