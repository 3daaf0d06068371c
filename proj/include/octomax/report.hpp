#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace octomax {

// 17 significant digits: doubles round-trip and byte-stable output.
std::string format_g17(double v);

// Minimal insertion-ordered JSON document builder. All numeric output goes
// through format_g17 so identical runs serialize to identical bytes.
class JsonValue {
 public:
  static JsonValue object();
  static JsonValue array();
  static JsonValue number(double v);
  static JsonValue integer(long long v);
  static JsonValue boolean(bool v);
  static JsonValue string(std::string v);
  static JsonValue null();

  JsonValue& set(const std::string& key, JsonValue v);  // object member
  JsonValue& push(JsonValue v);                         // array element

  // indent < 0: compact single line; otherwise pretty with that indent step.
  std::string dump(int indent = -1) const;

 private:
  enum class Kind { object, array, number, boolean, string_kind, null_kind };
  Kind kind_ = Kind::null_kind;
  std::string scalar_;  // preformatted number / string payload / bool literal
  std::vector<std::pair<std::string, JsonValue>> members_;
  std::vector<JsonValue> elements_;

  void write(std::string& out, int indent, int depth) const;
};

std::string json_escape(const std::string& s);

}  // namespace octomax
