#pragma once

#include <string>
#include <vector>

#include "core_model.hpp"

namespace stowsim {

// Stable per-attempt CSV schema. Doubles are written with 17 significant
// digits so parsing reproduces them bit-exactly.
extern const char* kAttemptLogHeader;

std::string attempt_log_to_csv(const std::vector<OutcomeRecord>& records);
void write_attempt_log(const std::string& path, const std::vector<OutcomeRecord>& records);
std::vector<OutcomeRecord> read_attempt_log(const std::string& path);
std::vector<OutcomeRecord> parse_attempt_log(const std::string& csv_text);

}  // namespace stowsim
