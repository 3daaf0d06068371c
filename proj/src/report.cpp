#include "octomax/report.hpp"

#include <cstdio>

namespace octomax {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

JsonValue JsonValue::object() {
  JsonValue v;
  v.kind_ = Kind::object;
  return v;
}
JsonValue JsonValue::array() {
  JsonValue v;
  v.kind_ = Kind::array;
  return v;
}
JsonValue JsonValue::number(double x) {
  JsonValue v;
  v.kind_ = Kind::number;
  v.scalar_ = format_g17(x);
  return v;
}
JsonValue JsonValue::integer(long long x) {
  JsonValue v;
  v.kind_ = Kind::number;
  v.scalar_ = std::to_string(x);
  return v;
}
JsonValue JsonValue::boolean(bool x) {
  JsonValue v;
  v.kind_ = Kind::boolean;
  v.scalar_ = x ? "true" : "false";
  return v;
}
JsonValue JsonValue::string(std::string x) {
  JsonValue v;
  v.kind_ = Kind::string_kind;
  v.scalar_ = std::move(x);
  return v;
}
JsonValue JsonValue::null() { return JsonValue{}; }

JsonValue& JsonValue::set(const std::string& key, JsonValue v) {
  members_.emplace_back(key, std::move(v));
  return *this;
}

JsonValue& JsonValue::push(JsonValue v) {
  elements_.push_back(std::move(v));
  return *this;
}

void JsonValue::write(std::string& out, int indent, int depth) const {
  const bool pretty = indent >= 0;
  const std::string pad = pretty ? std::string(static_cast<std::size_t>(indent) * (depth + 1), ' ')
                                 : std::string();
  const std::string close_pad =
      pretty ? std::string(static_cast<std::size_t>(indent) * depth, ' ') : std::string();
  switch (kind_) {
    case Kind::object: {
      if (members_.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [k, v] : members_) {
        if (!first) out += ',';
        first = false;
        if (pretty) out += '\n' + pad;
        out += '"' + json_escape(k) + (pretty ? "\": " : "\":");
        v.write(out, indent, depth + 1);
      }
      if (pretty) out += '\n' + close_pad;
      out += '}';
      return;
    }
    case Kind::array: {
      if (elements_.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& v : elements_) {
        if (!first) out += ',';
        first = false;
        if (pretty) out += '\n' + pad;
        v.write(out, indent, depth + 1);
      }
      if (pretty) out += '\n' + close_pad;
      out += ']';
      return;
    }
    case Kind::number:
    case Kind::boolean:
      out += scalar_;
      return;
    case Kind::string_kind:
      out += '"' + json_escape(scalar_) + '"';
      return;
    case Kind::null_kind:
      out += "null";
      return;
  }
}

std::string JsonValue::dump(int indent) const {
  std::string out;
  write(out, indent, 0);
  return out;
}

}  // namespace octomax
