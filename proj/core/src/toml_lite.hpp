// Minimal TOML reader covering what society files actually use: scalar
// key/value pairs, one level of [table] / [[array-of-tables]] headers, and
// flat arrays. Strings know the usual escapes, numbers may carry TOML's
// digit-grouping underscores, # starts a comment outside quotes. Anything
// beyond that is rejected with a line-numbered error rather than guessed at.
#pragma once

#include <cctype>
#include <charconv>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace netform::toml_lite {

struct Value {
  enum class Kind { boolean, integer, floating, string, array };
  Kind kind = Kind::string;
  bool b = false;
  long long i = 0;
  double f = 0.0;
  std::string s;
  std::vector<Value> items;

  bool is_number() const { return kind == Kind::integer || kind == Kind::floating; }
  double as_double() const { return kind == Kind::integer ? static_cast<double>(i) : f; }
};

struct Table {
  std::map<std::string, Value, std::less<>> values;
  std::map<std::string, Table, std::less<>> tables;             // [name]
  std::map<std::string, std::vector<Table>, std::less<>> arrays;  // [[name]]
};

namespace detail {

[[noreturn]] inline void fail(std::size_t line, const std::string& what) {
  throw std::runtime_error("toml: line " + std::to_string(line) + ": " + what);
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Cuts an unquoted # and the trailing whitespace before it.
inline std::string_view strip_comment(std::string_view s, std::size_t line) {
  bool in_str = false;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const char c = s[k];
    if (in_str) {
      if (c == '\\') ++k;
      else if (c == '"') in_str = false;
    } else if (c == '"') {
      in_str = true;
    } else if (c == '#') {
      return s.substr(0, k);
    }
  }
  if (in_str) fail(line, "unterminated string");
  return s;
}

inline bool valid_key(std::string_view k) {
  if (k.empty()) return false;
  for (char c : k)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
  return true;
}

inline std::string unescape(std::string_view body, std::size_t line) {
  std::string out;
  out.reserve(body.size());
  for (std::size_t k = 0; k < body.size(); ++k) {
    char c = body[k];
    if (c != '\\') {
      out.push_back(c);
      continue;
    }
    if (++k == body.size()) fail(line, "dangling escape in string");
    switch (body[k]) {
      case '"': out.push_back('"'); break;
      case '\\': out.push_back('\\'); break;
      case 'n': out.push_back('\n'); break;
      case 't': out.push_back('\t'); break;
      case 'r': out.push_back('\r'); break;
      default: fail(line, std::string("unsupported escape \\") + body[k]);
    }
  }
  return out;
}

inline Value parse_scalar(std::string_view text, std::size_t line) {
  Value v;
  if (text.size() >= 2 && text.front() == '"') {
    if (text.back() != '"' || text.size() < 2) fail(line, "unterminated string");
    v.kind = Value::Kind::string;
    v.s = unescape(text.substr(1, text.size() - 2), line);
    return v;
  }
  if (text == "true" || text == "false") {
    v.kind = Value::Kind::boolean;
    v.b = (text == "true");
    return v;
  }
  std::string digits;
  digits.reserve(text.size());
  for (char c : text)
    if (c != '_') digits.push_back(c);
  const char* first = digits.data();
  const char* last = digits.data() + digits.size();
  if (first != last && (*first == '+')) ++first;  // from_chars rejects leading +
  long long i = 0;
  auto ir = std::from_chars(first, last, i);
  if (ir.ec == std::errc() && ir.ptr == last) {
    v.kind = Value::Kind::integer;
    v.i = i;
    return v;
  }
  double f = 0.0;
  auto fr = std::from_chars(first, last, f);
  if (fr.ec == std::errc() && fr.ptr == last) {
    v.kind = Value::Kind::floating;
    v.f = f;
    return v;
  }
  fail(line, "cannot parse value '" + std::string(text) + "'");
}

// Splits "a, b, c" at top-level commas (strings respected; nesting rejected).
inline Value parse_value(std::string_view text, std::size_t line) {
  text = trim(text);
  if (text.empty()) fail(line, "missing value");
  if (text.front() != '[') return parse_scalar(text, line);
  if (text.back() != ']') fail(line, "unterminated array");

  Value arr;
  arr.kind = Value::Kind::array;
  std::string_view body = text.substr(1, text.size() - 2);
  std::size_t start = 0;
  bool in_str = false;
  auto flush = [&](std::size_t end) {
    std::string_view piece = trim(body.substr(start, end - start));
    if (!piece.empty()) arr.items.push_back(parse_scalar(piece, line));
    else if (end != body.size()) fail(line, "empty array element");
  };
  for (std::size_t k = 0; k < body.size(); ++k) {
    const char c = body[k];
    if (in_str) {
      if (c == '\\') ++k;
      else if (c == '"') in_str = false;
    } else if (c == '"') {
      in_str = true;
    } else if (c == '[') {
      fail(line, "nested arrays are not supported");
    } else if (c == ',') {
      flush(k);
      start = k + 1;
    }
  }
  flush(body.size());
  return arr;
}

}  // namespace detail

inline Table parse(std::string_view text) {
  using namespace detail;
  Table root;
  Table* current = &root;

  std::size_t pos = 0, line_no = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string logical(text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos));
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    std::string_view lv = trim(strip_comment(logical, line_no));
    if (lv.empty()) continue;

    if (lv.front() == '[') {
      const bool array_header = lv.size() >= 2 && lv[1] == '[';
      const std::string_view closer = array_header ? "]]" : "]";
      if (!lv.ends_with(closer)) fail(line_no, "malformed table header");
      std::string_view name =
          trim(lv.substr(array_header ? 2 : 1, lv.size() - 2 * (array_header ? 2 : 1)));
      if (!valid_key(name)) fail(line_no, "bad table name '" + std::string(name) + "'");
      if (array_header) {
        auto& vec = root.arrays[std::string(name)];
        vec.emplace_back();
        current = &vec.back();
      } else {
        current = &root.tables[std::string(name)];
      }
      continue;
    }

    const std::size_t eq = [&] {
      bool in_str = false;
      for (std::size_t k = 0; k < lv.size(); ++k) {
        if (in_str) {
          if (lv[k] == '\\') ++k;
          else if (lv[k] == '"') in_str = false;
        } else if (lv[k] == '"') in_str = true;
        else if (lv[k] == '=') return k;
      }
      return std::string_view::npos;
    }();
    if (eq == std::string_view::npos) fail(line_no, "expected key = value");

    std::string key(trim(lv.substr(0, eq)));
    if (!valid_key(key)) fail(line_no, "bad key '" + key + "'");
    if (current->values.count(key)) fail(line_no, "duplicate key '" + key + "'");

    // Multi-line array: keep appending lines until brackets balance.
    std::string value_text(trim(lv.substr(eq + 1)));
    const std::size_t value_line = line_no;
    auto depth = [](std::string_view s) {
      int d = 0;
      bool in_str = false;
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (in_str) {
          if (s[k] == '\\') ++k;
          else if (s[k] == '"') in_str = false;
        } else if (s[k] == '"') in_str = true;
        else if (s[k] == '[') ++d;
        else if (s[k] == ']') --d;
      }
      return d;
    };
    while (depth(value_text) > 0) {
      if (pos > text.size()) fail(value_line, "unterminated array");
      const std::size_t next_eol = text.find('\n', pos);
      std::string cont(text.substr(pos, next_eol == std::string_view::npos ? text.size() - pos
                                                                           : next_eol - pos));
      pos = (next_eol == std::string_view::npos) ? text.size() + 1 : next_eol + 1;
      ++line_no;
      value_text.append(" ").append(trim(strip_comment(cont, line_no)));
    }

    current->values.emplace(std::move(key), parse_value(value_text, value_line));
  }
  return root;
}

}  // namespace netform::toml_lite
