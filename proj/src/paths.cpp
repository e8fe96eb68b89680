#include "catalan/paths.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace catalan {

char to_char(Step step) {
  switch (step) {
    case Step::U: return 'u';
    case Step::H: return 'h';
    case Step::D: return 'd';
  }
  return '?';
}

namespace {

long delta(Step step) {
  switch (step) {
    case Step::U: return 1;
    case Step::H: return 0;
    case Step::D: return -1;
  }
  return 0;
}

}  // namespace

LatticePath LatticePath::parse(std::string_view text) {
  std::vector<Step> steps;
  if (text == "-") return LatticePath();
  steps.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'u': case 'U': steps.push_back(Step::U); break;
      case 'h': case 'H': steps.push_back(Step::H); break;
      case 'd': case 'D': steps.push_back(Step::D); break;
      default: throw std::invalid_argument(std::string("bad step character '") + c + "'");
    }
  }
  return LatticePath(std::move(steps));
}

long LatticePath::end_level() const {
  long level = 0;
  for (Step s : steps_) level += delta(s);
  return level;
}

long LatticePath::min_level() const {
  long level = 0;
  long lowest = 0;
  for (Step s : steps_) {
    level += delta(s);
    lowest = std::min(lowest, level);
  }
  return lowest;
}

std::size_t LatticePath::count(Step step) const {
  return static_cast<std::size_t>(std::count(steps_.begin(), steps_.end(), step));
}

bool LatticePath::is_dyck() const { return count(Step::H) == 0 && end_level() == 0 && is_valid(); }

LatticePath LatticePath::slice(std::size_t begin, std::size_t end) const {
  return LatticePath(std::vector<Step>(steps_.begin() + static_cast<std::ptrdiff_t>(begin),
                                       steps_.begin() + static_cast<std::ptrdiff_t>(end)));
}

LatticePath& LatticePath::append(const LatticePath& tail) {
  steps_.insert(steps_.end(), tail.steps_.begin(), tail.steps_.end());
  return *this;
}

LatticePath& LatticePath::append(Step step) {
  steps_.push_back(step);
  return *this;
}

std::string LatticePath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(to_char(s));
  return out;
}

LatticePath operator+(LatticePath head, const LatticePath& tail) { return head.append(tail); }

namespace {

// Depth-first walk with pruning: from `level` with `remaining` steps left the
// target is reachable only if |level - target| <= remaining.
void walk(std::vector<Step>& prefix, long level, long remaining, long target, bool allow_h,
          const PathVisitor& visit) {
  if (remaining == 0) {
    if (level == target) visit(LatticePath(prefix));
    return;
  }
  const Step order[] = {Step::U, Step::H, Step::D};
  for (Step s : order) {
    if (s == Step::H && !allow_h) continue;
    const long next = level + delta(s);
    if (next < 0 || std::abs(next - target) > remaining - 1) continue;
    prefix.push_back(s);
    walk(prefix, next, remaining - 1, target, allow_h, visit);
    prefix.pop_back();
  }
}

std::vector<LatticePath> collect(const std::function<void(const PathVisitor&)>& source) {
  std::vector<LatticePath> out;
  source([&](const LatticePath& p) { out.push_back(p); });
  return out;
}

}  // namespace

void for_each_motzkin(long n, long k, const PathVisitor& visit) {
  if (n < 0 || k < 0 || k > n) return;
  std::vector<Step> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  walk(prefix, 0, n, k, true, visit);
}

std::vector<LatticePath> enumerate_motzkin(long n, long k) {
  return collect([&](const PathVisitor& v) { for_each_motzkin(n, k, v); });
}

void for_each_partial_dyck(long n, long k, const PathVisitor& visit) {
  if (n < 0 || k < 0 || k > n) return;
  std::vector<Step> prefix;
  walk(prefix, 0, 2 * n - k, k, false, visit);
}

std::vector<LatticePath> enumerate_partial_dyck(long n, long k) {
  return collect([&](const PathVisitor& v) { for_each_partial_dyck(n, k, v); });
}

std::vector<LatticePath> enumerate_dyck(long n) { return enumerate_partial_dyck(n, 0); }

std::pair<std::size_t, std::size_t> horizontal_profile(const LatticePath& p) {
  std::size_t on_axis = 0;
  std::size_t above = 0;
  long level = 0;
  for (Step s : p.steps()) {
    if (s == Step::H) (level == 0 ? on_axis : above) += 1;
    level += delta(s);
  }
  return {on_axis, above};
}

Rational path_weight(const LatticePath& p, const Rational& x, const Rational& y) {
  const auto [on_axis, above] = horizontal_profile(p);
  return pow(x, on_axis) * pow(y, above);
}

LatticePath reverse_path(const LatticePath& p) {
  std::vector<Step> out(p.steps().rbegin(), p.steps().rend());
  for (Step& s : out) {
    if (s == Step::U) {
      s = Step::D;
    } else if (s == Step::D) {
      s = Step::U;
    }
  }
  return LatticePath(std::move(out));
}

long step_level(const LatticePath& p, std::size_t i) {
  if (i >= p.length()) throw std::out_of_range("step index " + std::to_string(i) + " out of range");
  long level = 0;
  for (std::size_t j = 0; j <= i; ++j) level += delta(p[j]);
  return level;
}

std::vector<std::size_t> r_visible_up_steps(const LatticePath& p) {
  // Right-to-left: an up step is R-visible iff no later up step ends at its level.
  std::vector<long> levels(p.length());
  long level = 0;
  for (std::size_t i = 0; i < p.length(); ++i) levels[i] = level += delta(p[i]);
  const long offset = -std::min(0L, p.min_level());
  std::vector<bool> claimed;
  std::vector<std::size_t> out;
  for (std::size_t i = p.length(); i-- > 0;) {
    if (p[i] != Step::U) continue;
    // Up steps in a valid path end at level >= 1; offset keeps invalid pieces indexable.
    const auto slot = static_cast<std::size_t>(levels[i] + offset);
    if (slot >= claimed.size()) claimed.resize(slot + 1, false);
    if (!claimed[slot]) {
      claimed[slot] = true;
      out.push_back(i);
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::size_t last_crossing_up_step(const LatticePath& p) {
  const long target = p.end_level();
  if (target < 1) throw std::invalid_argument("path ends below level 1: " + p.to_string());
  long level = 0;
  std::size_t found = p.length();
  for (std::size_t i = 0; i < p.length(); ++i) {
    level += delta(p[i]);
    if (p[i] == Step::U && level == target) found = i;
  }
  return found;
}

std::ostream& operator<<(std::ostream& os, const LatticePath& p) { return os << p.to_string(); }

}  // namespace catalan
