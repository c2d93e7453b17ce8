#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace tabgen {

using Json = nlohmann::ordered_json;

// Reads a JSONL file, calling fn(line_number, parsed) per non-empty line.
// Throws IoError if the file cannot be opened, ParseError (naming the
// 1-based line number) on malformed JSON.
void read_jsonl(const std::string& path, const std::function<void(size_t, const Json&)>& fn);

std::vector<Json> read_jsonl(const std::string& path);

void write_jsonl(const std::string& path, const std::vector<Json>& rows);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace tabgen
