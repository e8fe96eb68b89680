#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catalan/exact.hpp"

namespace catalan {

// Inclusive integer range for one named parameter.
struct ParamRange {
  std::string name;
  long lo = 0;
  long hi = 0;

  friend bool operator==(const ParamRange&, const ParamRange&) = default;
};

using Box = std::vector<ParamRange>;

struct Counterexample {
  std::vector<std::pair<std::string, long>> params;
  Rational lhs;
  Rational rhs;
  std::string detail;  // which comparison failed, when not the main one
};

struct VerificationReport {
  std::string id;
  Box box;
  bool pass = true;  // iff counterexample is empty
  std::size_t cases = 0;
  std::optional<Counterexample> counterexample;
  std::string note;
};

enum class OutputFormat { Ascii, Csv, Json };

// "n=0..10 m=0..10"
std::string describe_box(const Box& box);

std::string format_reports(const std::vector<VerificationReport>& reports, OutputFormat format);

}  // namespace catalan
