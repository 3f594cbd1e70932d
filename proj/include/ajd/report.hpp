#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace ajd {

enum class Status { pass, fail, info };

inline std::string status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::info: return "info";
  }
  return "";
}

/// One line of a report. `data` carries command-specific JSON fields.
struct Record {
  Status status = Status::info;
  std::string anchor;
  std::string check;
  std::string expected;
  std::string computed;
  std::string input;
  nlohmann::json data = nlohmann::json::object();
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<Record>& records() const { return records_; }

  Record& add(Record r) {
    records_.push_back(std::move(r));
    return records_.back();
  }

  Record& info(std::string anchor, std::string check, std::string computed,
               nlohmann::json data = nlohmann::json::object()) {
    return add({Status::info, std::move(anchor), std::move(check), "", std::move(computed), "",
                std::move(data)});
  }

  Record& compare(std::string anchor, std::string check, const std::string& expected,
                  const std::string& computed, std::string input = "") {
    Status s = expected == computed ? Status::pass : Status::fail;
    return add({s, std::move(anchor), std::move(check), expected, computed,
                s == Status::fail ? std::move(input) : std::string(), nlohmann::json::object()});
  }

  void append(const Report& other) {
    records_.insert(records_.end(), other.records_.begin(), other.records_.end());
  }

  std::size_t failures() const {
    std::size_t n = 0;
    for (const Record& r : records_) n += r.status == Status::fail;
    return n;
  }

  Status status() const {
    if (failures() != 0) return Status::fail;
    for (const Record& r : records_) {
      if (r.status == Status::pass) return Status::pass;
    }
    return Status::info;
  }

  int exit_code() const { return failures() == 0 ? 0 : 1; }

 private:
  std::string title_;
  std::vector<Record> records_;
};

/// Counts the cases of one exhaustive check and becomes a single record.
class Tally {
 public:
  Tally(std::string anchor, std::string check, std::size_t keep = 3)
      : anchor_(std::move(anchor)), check_(std::move(check)), keep_(keep) {}

  /// Records one case; `input` is evaluated only when the case fails.
  template <class F>
  bool expect(bool ok, F&& input) {
    ++cases_;
    if (!ok) {
      ++failed_;
      if (offending_.size() < keep_) offending_.push_back(input());
    }
    return ok;
  }

  bool expect(bool ok, const std::string& input = "") {
    return expect(ok, [&] { return input; });
  }

  std::size_t cases() const { return cases_; }
  std::size_t failed() const { return failed_; }

  Record record() const {
    Record r;
    r.status = failed_ == 0 && cases_ > 0 ? Status::pass : Status::fail;
    r.anchor = anchor_;
    r.check = check_;
    r.expected = std::to_string(cases_) + "/" + std::to_string(cases_);
    r.computed = std::to_string(cases_ - failed_) + "/" + std::to_string(cases_);
    for (const std::string& s : offending_) r.input += (r.input.empty() ? "" : "; ") + s;
    if (cases_ == 0) r.input = "no cases in range";
    r.data["cases"] = cases_;
    r.data["failed"] = failed_;
    return r;
  }

  void into(Report& rep) const { rep.add(record()); }

 private:
  std::string anchor_;
  std::string check_;
  std::size_t keep_;
  std::size_t cases_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> offending_;
};

enum class Format { text, json };

inline nlohmann::json to_json(const Record& r) {
  nlohmann::json j = r.data.is_object() ? r.data : nlohmann::json::object();
  j["status"] = status_name(r.status);
  j["anchor"] = r.anchor;
  if (!r.check.empty()) j["check"] = r.check;
  if (!r.expected.empty()) j["expected"] = r.expected;
  if (!r.computed.empty() && !j.contains("computed")) j["computed"] = r.computed;
  if (!r.input.empty()) j["input"] = r.input;
  return j;
}

inline std::string render_text(const Record& r) {
  std::string s = r.status == Status::pass ? "PASS" : r.status == Status::fail ? "FAIL" : "INFO";
  s += " " + r.anchor;
  if (!r.check.empty()) s += ": " + r.check;
  if (r.status == Status::info) {
    if (!r.computed.empty()) s += " = " + r.computed;
  } else {
    s += " [" + r.computed;
    if (r.status == Status::fail && !r.expected.empty()) s += ", expected " + r.expected;
    s += "]";
  }
  if (!r.input.empty()) s += " input: " + r.input;
  return s;
}

/// Text is one line per record; JSON is one object per line.
inline void emit(const Report& rep, Format f, std::ostream& os) {
  for (const Record& r : rep.records()) {
    if (f == Format::json) {
      os << to_json(r).dump() << '\n';
    } else {
      os << render_text(r) << '\n';
    }
  }
}

}  // namespace ajd
