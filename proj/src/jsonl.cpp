#include "tabgen/jsonl.hpp"

#include <fstream>
#include <sstream>

#include "tabgen/errors.hpp"

namespace tabgen {

void read_jsonl(const std::string& path, const std::function<void(size_t, const Json&)>& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      throw ParseError("malformed JSON in " + path + " at line " + std::to_string(lineno));
    }
    fn(lineno, j);
  }
}

std::vector<Json> read_jsonl(const std::string& path) {
  std::vector<Json> rows;
  read_jsonl(path, [&](size_t, const Json& j) { rows.push_back(j); });
  return rows;
}

void write_jsonl(const std::string& path, const std::vector<Json>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open file for writing: " + path);
  for (const Json& j : rows) {
    out << j.dump() << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open file for writing: " + path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace tabgen
