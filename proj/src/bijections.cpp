#include "catalan/bijections.hpp"

#include <set>
#include <stdexcept>

namespace catalan {

DyckSplit dyck_split(const LatticePath& p, long n) {
  if (!p.is_dyck()) throw std::invalid_argument("not a Dyck path: " + p.to_string());
  if (n < 0 || p.length() < static_cast<std::size_t>(2 * n + 2)) {
    throw std::invalid_argument("Dyck path of length " + std::to_string(p.length()) + " too short for n = " +
                                std::to_string(n));
  }
  DyckSplit split;
  split.source = p;
  split.pivot_index = static_cast<std::size_t>(2 * n);
  split.pivot = p[split.pivot_index];
  split.pivot_level = step_level(p, split.pivot_index);
  split.k = (split.pivot_level - 1) / 2;
  split.head = p.slice(0, split.pivot_index);
  split.tail_reversed = reverse_path(p.slice(split.pivot_index + 1, p.length()));
  return split;
}

LatticePath join(const DyckSplit& split) {
  LatticePath out = split.head;
  out.append(split.pivot);
  out.append(reverse_path(split.tail_reversed));
  return out;
}

PivotCounts count_dyck_by_pivot(long n, long m) {
  PivotCounts counts;
  for_each_partial_dyck(n + m + 1, 0, [&](const LatticePath& p) {
    (p[static_cast<std::size_t>(2 * n)] == Step::U ? counts.up : counts.down) += 1;
  });
  return counts;
}

std::string to_string(const PhiInput& input) {
  const auto show = [](const LatticePath& p) { return p.empty() ? std::string("-") : p.to_string(); };
  return std::string(input.side == PhiSide::B ? "B" : "A") + " " + show(input.p) + "|" + show(input.q);
}

namespace {

bool has_shape(const LatticePath& p, long length, long end) {
  return static_cast<long>(p.length()) == length && p.is_valid() && p.end_level() == end;
}

LatticePath up_step() { return LatticePath({Step::U}); }

}  // namespace

bool in_excluded_family(const LatticePath& p, const LatticePath& q, long n, long m, long r, long k) {
  if (!has_shape(p, n, k) || !has_shape(q, m + r, k + 1)) return false;
  const auto i = static_cast<long>(last_crossing_up_step(q));
  return k <= i && i <= r - 1;
}

bool is_phi_member(const PhiInput& input, long n, long m, long r) {
  if (r < 0) return false;
  if (input.side == PhiSide::B) {
    const long k = input.q.end_level();
    return k >= 0 && has_shape(input.p, n + r, k + 1) && has_shape(input.q, m, k);
  }
  const long k = input.p.end_level();
  if (k < 0 || !has_shape(input.p, n, k) || !has_shape(input.q, m + r, k + 1)) return false;
  return !in_excluded_family(input.p, input.q, n, m, r, k);
}

LatticePath phi_forward(const PhiInput& input, long n, long m, long r) {
  if (!is_phi_member(input, n, m, r)) {
    throw std::invalid_argument("not in the domain of phi: " + to_string(input));
  }
  if (input.side == PhiSide::B) return input.p + reverse_path(input.q);
  const std::size_t star = last_crossing_up_step(input.q);
  return input.p + reverse_path(input.q.slice(0, star)) + up_step() + input.q.slice(star + 1, input.q.length());
}

PhiInput phi_backward(const LatticePath& target, long n, long m, long r) {
  if (r < 0 || !has_shape(target, n + m + r, 1)) {
    throw std::invalid_argument("target must be a path of length n+m+r ending at level 1: " + target.to_string());
  }
  const std::size_t star = last_crossing_up_step(target);
  const auto cut = static_cast<std::size_t>(n + r);
  if (star < cut) {
    return PhiInput{PhiSide::B, target.slice(0, cut), reverse_path(target.slice(cut, target.length()))};
  }
  const auto head = static_cast<std::size_t>(n);
  return PhiInput{PhiSide::AMinusC, target.slice(0, head),
                  reverse_path(target.slice(head, star)) + up_step() + target.slice(star + 1, target.length())};
}

namespace {

// Visits every (P, Q) pair of the full A side together with its index k.
template <class Visit>
void for_each_a_pair(long n, long m, long r, Visit&& visit) {
  for (long k = 0; k <= n; ++k) {
    const auto qs = enumerate_motzkin(m + r, k + 1);
    for_each_motzkin(n, k, [&](const LatticePath& p) {
      for (const auto& q : qs) visit(p, q, k);
    });
  }
}

template <class Visit>
void for_each_b_pair(long n, long m, long r, Visit&& visit) {
  for (long k = 0; k + 1 <= n + r; ++k) {
    const auto qs = enumerate_motzkin(m, k);
    for_each_motzkin(n + r, k + 1, [&](const LatticePath& p) {
      for (const auto& q : qs) visit(p, q, k);
    });
  }
}

}  // namespace

std::vector<PhiInput> enumerate_phi_domain(long n, long m, long r) {
  std::vector<PhiInput> out;
  if (r < 0) return out;
  for_each_b_pair(n, m, r, [&](const LatticePath& p, const LatticePath& q, long) {
    out.push_back(PhiInput{PhiSide::B, p, q});
  });
  for_each_a_pair(n, m, r, [&](const LatticePath& p, const LatticePath& q, long k) {
    if (!in_excluded_family(p, q, n, m, r, k)) out.push_back(PhiInput{PhiSide::AMinusC, p, q});
  });
  return out;
}

Rational excluded_family_weight(long n, long m, long r, long k, const Rational& y) {
  if (r <= 0) return 0;
  if (k < 0 || k > r - 1) throw DomainError("excluded family index k must lie in 0..r-1");
  Rational total;
  const auto qs = enumerate_motzkin(m + r, k + 1);
  for_each_motzkin(n, k, [&](const LatticePath& p) {
    for (const auto& q : qs) {
      if (in_excluded_family(p, q, n, m, r, k)) total += path_weight(p, y, y) * path_weight(q, y, y);
    }
  });
  return total;
}

PhiCensus phi_census(long n, long m, long r) {
  PhiCensus census;
  for_each_b_pair(n, m, r, [&](const LatticePath&, const LatticePath&, long) { ++census.b_side; });
  for_each_a_pair(n, m, r, [&](const LatticePath& p, const LatticePath& q, long k) {
    ++census.a_side;
    if (in_excluded_family(p, q, n, m, r, k)) ++census.excluded;
  });
  for_each_motzkin(n + m + r, 1, [&](const LatticePath&) { ++census.targets; });
  return census;
}

BijectionCheck check_phi(long n, long m, long r) {
  BijectionCheck check;
  const auto fail = [&](std::string why) {
    if (check.ok) {
      check.ok = false;
      check.failure = std::move(why);
    }
  };
  std::set<LatticePath> images;
  for (const auto& input : enumerate_phi_domain(n, m, r)) {
    ++check.inputs;
    const LatticePath image = phi_forward(input, n, m, r);
    if (image.length() != input.p.length() + input.q.length() ||
        image.count(Step::H) != input.p.count(Step::H) + input.q.count(Step::H)) {
      fail("statistics not preserved for " + to_string(input));
    }
    if (!(phi_backward(image, n, m, r) == input)) fail("backward(forward(x)) != x for " + to_string(input));
    if (!images.insert(image).second) fail("two inputs map to " + image.to_string());
  }
  for_each_motzkin(n + m + r, 1, [&](const LatticePath& target) {
    ++check.targets;
    const PhiInput pre = phi_backward(target, n, m, r);
    if (!is_phi_member(pre, n, m, r)) {
      fail("backward image outside the domain: " + target.to_string());
    } else if (!(phi_forward(pre, n, m, r) == target)) {
      fail("forward(backward(t)) != t for " + target.to_string());
    }
  });
  if (images.size() != check.targets) fail("image does not cover every target");
  const PhiCensus census = phi_census(n, m, r);
  if (census.b_side + census.a_side - census.excluded != census.targets) fail("census does not balance");
  return check;
}

}  // namespace catalan
