#include "cdlat/records.hpp"

namespace cdlat {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return "pass";
    case Outcome::fail:
      return "fail";
    case Outcome::not_checked:
      return "not-checked";
  }
  return "?";
}

std::string VerificationRecord::summary_line() const {
  std::string line = subject;
  line += '\t';
  line += outcome_name(outcome);
  line += '\t';
  for (std::size_t i = 0; i < numbers.size(); ++i) {
    if (i) line += ' ';
    line += numbers[i].first + "=" + std::to_string(numbers[i].second);
  }
  if (numbers.empty()) line += '-';
  if (!witnesses.empty()) {
    line += '\t';
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
      if (i) line += ' ';
      line += witnesses[i];
    }
  }
  return line;
}

nlohmann::ordered_json VerificationRecord::to_json() const {
  nlohmann::ordered_json j;
  j["subject"] = subject;
  j["outcome"] = outcome_name(outcome);
  j["witnesses"] = witnesses;
  nlohmann::ordered_json nums = nlohmann::ordered_json::object();
  for (const auto& [name, value] : numbers) nums[name] = value;
  j["numbers"] = nums;
  return j;
}

}  // namespace cdlat
