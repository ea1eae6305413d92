// Command layer shared by the CLI binary and the tests.  Exit statuses:
// 0 verdict true / success, 1 verdict false, 2 input error, 3 budget
// exceeded.

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "ogpd/base.hpp"

namespace ogpd {

struct RunOptions {
  std::uint64_t budget = 1'000'000;
  std::uint64_t seed = 0;
  std::string dot_path;  // write a DOT rendering here when non-empty
  bool json_only = false;
};

struct RunReport {
  std::string command;
  int status = 0;
  nlohmann::ordered_json verdict;  // byte-stable given the same inputs
  std::string human;
};

// command in {validate, classify, quotient, factorize, enlarge,
// cocylinder, lift, fixture, random}; args are positional.
RunReport run_command(const std::string& command, const std::vector<std::string>& args,
                      const RunOptions& opts);

std::string digest_hex(const std::string& bytes);

}  // namespace ogpd
