#include "polychu/elem.hpp"

#include <stdexcept>

namespace polychu {

bool operator<(const Elem& a, const Elem& b) {
  if (a.v_.index() != b.v_.index()) return a.v_.index() < b.v_.index();
  return a.v_ < b.v_;
}

bool operator==(const Elem& a, const Elem& b) { return a.v_ == b.v_; }

namespace {

bool safe_str(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c == ',' || c == ';' || c == '|' || c == '[' || c == ']' || c == '\'' ||
        c == '\\')
      return false;
  }
  // A bare string must not look like an integer.
  if (s.find_first_not_of("0123456789-") == std::string::npos) return false;
  return true;
}

void append_escaped(std::string& out, const std::string& s) {
  out += '\'';
  for (char c : s) {
    if (c == '\'' || c == '\\') out += '\\';
    out += c;
  }
  out += '\'';
}

}  // namespace

std::string Elem::key() const {
  if (is_int()) return std::to_string(as_int());
  if (is_str()) {
    const std::string& s = as_str();
    if (safe_str(s)) return s;
    std::string out;
    append_escaped(out, s);
    return out;
  }
  std::string out = "[";
  bool first = true;
  for (const Elem& e : as_list()) {
    if (!first) out += '|';
    first = false;
    out += e.key();
  }
  out += ']';
  return out;
}

namespace {

Elem parse_key_at(const std::string& s, size_t& i);

Elem parse_list_at(const std::string& s, size_t& i) {
  ElemList xs;
  ++i;  // '['
  if (i < s.size() && s[i] == ']') {
    ++i;
    return Elem(std::move(xs));
  }
  while (true) {
    xs.push_back(parse_key_at(s, i));
    if (i >= s.size()) throw std::runtime_error("unterminated list key");
    if (s[i] == '|') {
      ++i;
      continue;
    }
    if (s[i] == ']') {
      ++i;
      return Elem(std::move(xs));
    }
    throw std::runtime_error("bad list key near index " + std::to_string(i));
  }
}

Elem parse_key_at(const std::string& s, size_t& i) {
  if (i >= s.size()) throw std::runtime_error("empty key");
  char c = s[i];
  if (c == '[') return parse_list_at(s, i);
  if (c == '\'') {
    std::string out;
    ++i;
    while (i < s.size() && s[i] != '\'') {
      if (s[i] == '\\' && i + 1 < s.size()) ++i;
      out += s[i++];
    }
    if (i >= s.size()) throw std::runtime_error("unterminated quoted key");
    ++i;
    return Elem(std::move(out));
  }
  size_t j = i;
  while (j < s.size() && s[j] != '|' && s[j] != ']' && s[j] != ',' &&
         s[j] != ';')
    ++j;
  std::string tok = s.substr(i, j - i);
  i = j;
  if (tok.empty()) throw std::runtime_error("empty token in key");
  if (tok.find_first_not_of("0123456789-") == std::string::npos &&
      tok != "-") {
    return Elem(static_cast<std::int64_t>(std::stoll(tok)));
  }
  return Elem(std::move(tok));
}

}  // namespace

Elem Elem::parse_key(const std::string& s) {
  size_t i = 0;
  Elem e = parse_key_at(s, i);
  if (i != s.size()) throw std::runtime_error("trailing junk in key: " + s);
  return e;
}

std::string encode_list(const ElemList& xs, char sep) {
  std::string out;
  bool first = true;
  for (const Elem& e : xs) {
    if (!first) out += sep;
    first = false;
    out += e.key();
  }
  return out;
}

}  // namespace polychu
