#ifndef KCRANK_JSON_IO_HPP
#define KCRANK_JSON_IO_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace kcrank {

// Minimal JSON document tree whose numbers are arbitrary-precision
// integers, so matrix entries round-trip exactly no matter their size.
// Object keys keep insertion order; together with the writer below this
// makes serialization byte-deterministic.  Non-integer numbers are not
// part of any document format of this tool and are rejected on input.
class JsonValue {
 public:
  enum class Kind { null_value, boolean, integer, string, array, object };

  JsonValue() : kind_(Kind::null_value) {}

  static JsonValue boolean(bool value);
  static JsonValue integer(mpz_class value);
  static JsonValue string(std::string value);
  static JsonValue array();
  static JsonValue object();

  Kind kind() const { return kind_; }
  bool is(Kind kind) const { return kind_ == kind; }

  bool as_bool() const { return bool_; }
  const mpz_class& as_int() const { return int_; }
  const std::string& as_string() const { return str_; }

  const std::vector<JsonValue>& items() const { return items_; }
  std::vector<JsonValue>& items() { return items_; }
  void push_back(JsonValue value) { items_.push_back(std::move(value)); }

  const std::vector<std::pair<std::string, JsonValue>>& members() const {
    return members_;
  }
  // Appends a member; keys are expected to be distinct.
  void set(std::string key, JsonValue value);
  // Pointer to the member value, or nullptr when the key is absent.
  const JsonValue* find(const std::string& key) const;

 private:
  Kind kind_;
  bool bool_ = false;
  mpz_class int_;
  std::string str_;
  std::vector<JsonValue> items_;
  std::vector<std::pair<std::string, JsonValue>> members_;
};

// Parses a complete JSON document.  Malformed input, trailing garbage
// and non-integer numbers raise E_SYNTAX with the byte position.
JsonValue json_parse(const std::string& text);

// Deterministic serialization: 2-space indent, object members in stored
// order, arrays of scalars inline, trailing newline.  Identical values
// always produce identical bytes.
std::string json_write(const JsonValue& value);

}  // namespace kcrank

#endif  // KCRANK_JSON_IO_HPP
