#pragma once

#include <string>
#include <utility>
#include <vector>

namespace chaos::cli {

enum class Status { ok, usage_error, domain_error, diverged, not_a_code };

/// 0 ok, 1 usage, 2 domain error, 3 fuel exhausted, 4 invalid code.
int exit_code(Status s);
const char* to_string(Status s);

enum class Format { text, structured };

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

/// Ordered key/value fields followed by zero or more tables.
struct Document {
    std::vector<std::pair<std::string, std::string>> fields;
    std::vector<Table> tables;

    void set(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }
    const std::string* get(const std::string& key) const;
};

struct CommandResult {
    Status status = Status::ok;
    Document payload;
    Format format = Format::text;
    /// Help or version text that replaces the document when non-empty.
    std::string message;
};

/// Parses argv (without the program name) and runs one subcommand.
/// Never throws; errors become statuses with an `error` field.
CommandResult run(const std::vector<std::string>& argv);

/// Renders a result.
///
/// text: one `key=value` line per field starting with `status=`. Each table
/// follows as `table=<name>`, `columns=<c1>,<c2>,...`, then one record per
/// line with fields separated by a single tab.
///
/// structured: a JSON object with "status", the fields in order as string
/// members, and "tables": [{"name", "columns", "rows"}] when tables exist.
std::string render(const CommandResult& r);

}  // namespace chaos::cli
