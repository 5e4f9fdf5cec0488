#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "grlab/report.hpp"

namespace grlab {

/// Entry point of the grlab command; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Fields of `expected` that are missing from or differ in `actual`, one
/// "path: expected X, got Y" line each. Keys of `ignored` are skipped at the
/// top level.
std::vector<std::string> diff_expected(const nlohmann::json& expected, const nlohmann::json& actual,
                                       const std::vector<std::string>& ignored = {});

/// Runs every NAME.ring.json in dir against NAME.expected.json. Returns 0 when
/// all pass (or there are no cases), 5 on any mismatch.
int run_corpus(const std::filesystem::path& dir, const AnalysisOptions& options, std::ostream& out,
               std::ostream& err);

/// Reads a whole file; throws InvalidInputError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace grlab
