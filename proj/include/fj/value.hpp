#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "fj/error.hpp"

namespace fj {

enum class ValueType { Int, Text };

inline const char* to_string(ValueType t) {
  return t == ValueType::Int ? "int" : "text";
}

inline ValueType parse_value_type(const std::string& s) {
  if (s == "int") return ValueType::Int;
  if (s == "text") return ValueType::Text;
  throw ParseError("unknown value type '" + s + "' (expected int or text)");
}

// Tagged scalar: 64-bit signed integer or text. Equality is exact, no
// coercion; ordering is by tag (Int < Text), then by value, which is
// exactly std::variant's ordering.
class Value {
 public:
  Value() : v_(std::int64_t{0}) {}
  explicit Value(std::int64_t i) : v_(i) {}
  explicit Value(std::string s) : v_(std::move(s)) {}
  explicit Value(const char* s) : v_(std::string(s)) {}

  ValueType type() const {
    return v_.index() == 0 ? ValueType::Int : ValueType::Text;
  }
  bool is_int() const { return v_.index() == 0; }
  std::int64_t as_int() const { return std::get<std::int64_t>(v_); }
  const std::string& as_text() const { return std::get<std::string>(v_); }

  friend bool operator==(const Value& a, const Value& b) { return a.v_ == b.v_; }
  friend bool operator<(const Value& a, const Value& b) { return a.v_ < b.v_; }

  std::string to_string() const {
    return is_int() ? std::to_string(as_int()) : as_text();
  }

  std::size_t hash() const {
    std::size_t h = is_int() ? std::hash<std::int64_t>{}(as_int())
                             : std::hash<std::string>{}(as_text());
    return h ^ (v_.index() * 0x9e3779b97f4a7c15ULL);
  }

 private:
  std::variant<std::int64_t, std::string> v_;
};

using Tuple = std::vector<Value>;

struct TupleHash {
  std::size_t operator()(const Tuple& t) const {
    std::size_t h = 0x811c9dc5;
    for (const Value& v : t) h = (h ^ v.hash()) * 0x100000001b3ULL;
    return h;
  }
};

// Parses a raw CSV field under a type tag.
inline Value parse_value(const std::string& field, ValueType type) {
  if (type == ValueType::Text) return Value(field);
  std::size_t pos = 0;
  std::int64_t n = 0;
  try {
    n = std::stoll(field, &pos);
  } catch (const std::exception&) {
    throw ParseError("cannot parse '" + field + "' as int");
  }
  if (pos != field.size())
    throw ParseError("cannot parse '" + field + "' as int");
  return Value(n);
}

}  // namespace fj
