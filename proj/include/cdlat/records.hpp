#pragma once

#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace cdlat {

enum class Outcome { pass, fail, not_checked };

const char* outcome_name(Outcome o);

// One theorem/lemma/property check outcome. Failures always carry a witness;
// `numbers` keeps named integer observations in a fixed insertion order so
// summaries are byte-stable.
struct VerificationRecord {
  std::string subject;
  Outcome outcome = Outcome::pass;
  std::vector<std::string> witnesses;
  std::vector<std::pair<std::string, long long>> numbers;

  static VerificationRecord pass(std::string subject,
                                 std::vector<std::pair<std::string, long long>> numbers = {},
                                 std::vector<std::string> witnesses = {}) {
    return {std::move(subject), Outcome::pass, std::move(witnesses), std::move(numbers)};
  }

  static VerificationRecord fail(std::string subject, std::vector<std::string> witnesses,
                                 std::vector<std::pair<std::string, long long>> numbers = {}) {
    assert(!witnesses.empty());
    return {std::move(subject), Outcome::fail, std::move(witnesses), std::move(numbers)};
  }

  static VerificationRecord not_checked(std::string subject, std::string reason) {
    return {std::move(subject), Outcome::not_checked, {std::move(reason)}, {}};
  }

  // subject TAB outcome TAB name=value... [TAB witnesses]
  std::string summary_line() const;
  nlohmann::ordered_json to_json() const;
};

}  // namespace cdlat
