#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "catalan/exact.hpp"

namespace catalan {

// Declaration order is the enumeration order: U < H < D.
enum class Step : unsigned char { U, H, D };

char to_char(Step step);

// A finite sequence of u/h/d steps starting at level 0. Validity (never
// dropping below the axis) is a property checked by is_valid(), not a
// construction invariant: path pieces produced while splitting or reversing
// may start at a different level.
class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  // Parses a string over {u, h, d}; "" and "-" are the empty path.
  static LatticePath parse(std::string_view text);

  const std::vector<Step>& steps() const { return steps_; }
  std::size_t length() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  Step operator[](std::size_t i) const { return steps_[i]; }

  long end_level() const;
  long min_level() const;
  std::size_t count(Step step) const;
  bool is_valid() const { return min_level() >= 0; }
  bool is_dyck() const;

  LatticePath slice(std::size_t begin, std::size_t end) const;
  LatticePath& append(const LatticePath& tail);
  LatticePath& append(Step step);

  // Compact u/h/d string; the empty path is "".
  std::string to_string() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  friend auto operator<=>(const LatticePath&, const LatticePath&) = default;

 private:
  std::vector<Step> steps_;
};

LatticePath operator+(LatticePath head, const LatticePath& tail);
std::ostream& operator<<(std::ostream& os, const LatticePath& p);

using PathVisitor = std::function<void(const LatticePath&)>;

// Visits every partial Motzkin path of length n ending at level k, each once,
// in lexicographic order with U < H < D.
void for_each_motzkin(long n, long k, const PathVisitor& visit);
std::vector<LatticePath> enumerate_motzkin(long n, long k);

// Partial Dyck paths (u/d only) of length 2n-k from level 0 to level k.
void for_each_partial_dyck(long n, long k, const PathVisitor& visit);
std::vector<LatticePath> enumerate_partial_dyck(long n, long k);

// Dyck paths of length 2n.
std::vector<LatticePath> enumerate_dyck(long n);

// Product of step weights: u and d weigh 1, h weighs x on the axis and y above.
Rational path_weight(const LatticePath& p, const Rational& x, const Rational& y);

// Horizontal steps on the axis and above it; path_weight is x^first * y^second.
std::pair<std::size_t, std::size_t> horizontal_profile(const LatticePath& p);

// Reverse step order and swap u with d.
LatticePath reverse_path(const LatticePath& p);

// Level after step i (the y-coordinate of its end point).
long step_level(const LatticePath& p, std::size_t i);

// Indices, ascending, of up steps that are the rightmost up step ending at
// their level.
std::vector<std::size_t> r_visible_up_steps(const LatticePath& p);

// The R-visible up step at the path's final level, i.e. the last up step
// from end_level()-1 to end_level(); the path never returns below
// end_level() after it. Requires end_level() >= 1.
std::size_t last_crossing_up_step(const LatticePath& p);

}  // namespace catalan
