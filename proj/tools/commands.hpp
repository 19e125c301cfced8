#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "stonelat/catalog.hpp"

namespace stonelat::cli {

// 0: every check passed; 1: a property was violated (a counterexample is
// printed); 2: the input could not be read.
enum ExitCode : int { kOk = 0, kViolation = 1, kInputError = 2 };

enum class ReportFormat { kText, kKeyValue };

int check_command(const std::string& file, ReportFormat format, std::ostream& out, std::ostream& err);
int stone_command(const std::string& file, ReportFormat format, std::ostream& out, std::ostream& err);
int catalog_command(const CatalogSpec& spec, ReportFormat format, std::ostream& out, std::ostream& err);
int cantor_command(const std::string& alphabet, const std::string& expression,
                   const std::optional<std::string>& point, std::ostream& out, std::ostream& err);
int graph_command(const std::string& file, std::size_t depth, ReportFormat format, std::ostream& out,
                  std::ostream& err);

/// Parses argv and dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stonelat::cli
