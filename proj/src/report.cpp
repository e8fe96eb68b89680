#include "catalan/report.hpp"

#include <sstream>

#include "json.hpp"

namespace catalan {

std::string describe_box(const Box& box) {
  std::string out;
  for (const auto& range : box) {
    if (!out.empty()) out += ' ';
    out += range.name + '=' + std::to_string(range.lo) + ".." + std::to_string(range.hi);
  }
  return out;
}

namespace {

std::string describe_params(const std::vector<std::pair<std::string, long>>& params) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += ' ';
    out += name + '=' + std::to_string(value);
  }
  return out;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string ascii(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << r.id << ": " << r.cases << " cases, " << (r.pass ? "pass" : "FAIL");
    if (!r.box.empty()) os << " [" << describe_box(r.box) << "]";
    os << '\n';
    if (r.counterexample) {
      const auto& c = *r.counterexample;
      os << "  counterexample " << describe_params(c.params) << ": lhs=" << c.lhs << " rhs=" << c.rhs;
      if (!c.detail.empty()) os << " (" << c.detail << ")";
      os << '\n';
    }
    if (!r.note.empty()) os << "  note: " << r.note << '\n';
  }
  return os.str();
}

std::string csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "id,box,pass,cases,params,lhs,rhs\n";
  for (const auto& r : reports) {
    os << csv_field(r.id) << ',' << csv_field(describe_box(r.box)) << ',' << (r.pass ? "true" : "false") << ','
       << r.cases << ',';
    if (r.counterexample) {
      os << csv_field(describe_params(r.counterexample->params)) << ',' << r.counterexample->lhs << ','
         << r.counterexample->rhs;
    } else {
      os << ",,";
    }
    os << '\n';
  }
  return os.str();
}

std::string json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json record;
    record["id"] = r.id;
    nlohmann::ordered_json box = nlohmann::ordered_json::object();
    for (const auto& range : r.box) box[range.name] = {range.lo, range.hi};
    record["box"] = box;
    record["pass"] = r.pass;
    record["cases"] = r.cases;
    if (r.counterexample) {
      nlohmann::ordered_json params = nlohmann::ordered_json::object();
      for (const auto& [name, value] : r.counterexample->params) params[name] = value;
      record["counterexample"] = {{"params", params},
                                  {"lhs", r.counterexample->lhs.to_string()},
                                  {"rhs", r.counterexample->rhs.to_string()}};
      if (!r.counterexample->detail.empty()) record["counterexample"]["detail"] = r.counterexample->detail;
    } else {
      record["counterexample"] = nullptr;
    }
    if (!r.note.empty()) record["note"] = r.note;
    out.push_back(std::move(record));
  }
  return out.dump(2) + '\n';
}

}  // namespace

std::string format_reports(const std::vector<VerificationReport>& reports, OutputFormat format) {
  switch (format) {
    case OutputFormat::Ascii: return ascii(reports);
    case OutputFormat::Csv: return csv(reports);
    case OutputFormat::Json: return json(reports);
  }
  return {};
}

}  // namespace catalan
