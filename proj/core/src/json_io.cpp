#include "kcrank/json_io.hpp"

#include <cctype>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "json.hpp"  // vendored single-header parser

#include "kcrank/errors.hpp"

namespace kcrank {

JsonValue JsonValue::boolean(bool value) {
  JsonValue v;
  v.kind_ = Kind::boolean;
  v.bool_ = value;
  return v;
}

JsonValue JsonValue::integer(mpz_class value) {
  JsonValue v;
  v.kind_ = Kind::integer;
  v.int_ = std::move(value);
  return v;
}

JsonValue JsonValue::string(std::string value) {
  JsonValue v;
  v.kind_ = Kind::string;
  v.str_ = std::move(value);
  return v;
}

JsonValue JsonValue::array() {
  JsonValue v;
  v.kind_ = Kind::array;
  return v;
}

JsonValue JsonValue::object() {
  JsonValue v;
  v.kind_ = Kind::object;
  return v;
}

void JsonValue::set(std::string key, JsonValue value) {
  members_.emplace_back(std::move(key), std::move(value));
}

const JsonValue* JsonValue::find(const std::string& key) const {
  for (const auto& [k, v] : members_) {
    if (k == key) return &v;
  }
  return nullptr;
}

namespace {

// SAX consumer building a JsonValue tree.  The vendored parser hands
// numbers that fit 64 bits to the integer callbacks and anything larger
// to number_float together with the raw token, which lets us recover
// oversized integers without precision loss.
class TreeBuilder {
 public:
  using json = nlohmann::json;

  bool null() { return place(JsonValue()); }
  bool boolean(bool val) { return place(JsonValue::boolean(val)); }
  bool number_integer(json::number_integer_t val) {
    return place(JsonValue::integer(mpz_class(static_cast<long>(val))));
  }
  bool number_unsigned(json::number_unsigned_t val) {
    return place(JsonValue::integer(
        mpz_class(static_cast<unsigned long>(val))));
  }
  bool number_float(json::number_float_t, const std::string& raw) {
    // Integers beyond 64 bits arrive here with their original token.
    bool integral = !raw.empty();
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] == '-' && i == 0 && raw.size() > 1) continue;
      if (!std::isdigit(static_cast<unsigned char>(raw[i]))) {
        integral = false;
        break;
      }
    }
    if (!integral) {
      throw kcrank_error(errc::syntax,
                         "non-integer number '" + raw +
                             "' is not accepted in any document format");
    }
    return place(JsonValue::integer(mpz_class(raw, 10)));
  }
  bool string(std::string& val) { return place(JsonValue::string(val)); }
  bool binary(json::binary_t&) {
    throw kcrank_error(errc::syntax, "binary values are not accepted");
  }
  bool start_object(std::size_t) {
    save_owning_key();
    stack_.push_back(JsonValue::object());
    return true;
  }
  bool key(std::string& val) {
    pending_key_ = val;
    return true;
  }
  bool end_object() { return pop(); }
  bool start_array(std::size_t) {
    save_owning_key();
    stack_.push_back(JsonValue::array());
    return true;
  }
  bool end_array() { return pop(); }
  bool parse_error(std::size_t position, const std::string&,
                   const nlohmann::detail::exception& ex) {
    std::ostringstream msg;
    msg << "byte " << position << ": " << ex.what();
    throw kcrank_error(errc::syntax, msg.str());
  }

  JsonValue take() { return std::move(root_); }

 private:
  bool place(JsonValue value) {
    if (stack_.empty()) {
      root_ = std::move(value);
      return true;
    }
    JsonValue& top = stack_.back();
    if (top.kind() == JsonValue::Kind::array) {
      top.push_back(std::move(value));
    } else {
      top.set(std::move(pending_key_), std::move(value));
    }
    return true;
  }

  // A container's key in its parent object must survive the key() calls
  // made inside the container, so it is stashed when the container opens
  // and restored when it closes.  Scalars need no such care: nothing can
  // intervene between their key() and their value callback.
  void save_owning_key() {
    if (!stack_.empty() && stack_.back().kind() == JsonValue::Kind::object) {
      owning_keys_.push_back(std::move(pending_key_));
    } else {
      owning_keys_.emplace_back();
    }
  }

  bool pop() {
    JsonValue done = std::move(stack_.back());
    stack_.pop_back();
    pending_key_ = std::move(owning_keys_.back());
    owning_keys_.pop_back();
    return place(std::move(done));
  }

  std::string pending_key_;
  std::vector<std::string> owning_keys_;
  std::vector<JsonValue> stack_;
  JsonValue root_;
};

void write_escaped(std::ostream& os, const std::string& s) {
  os << '"';
  for (unsigned char c : s) {
    switch (c) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\b': os << "\\b"; break;
      case '\f': os << "\\f"; break;
      case '\n': os << "\\n"; break;
      case '\r': os << "\\r"; break;
      case '\t': os << "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          os << buf;
        } else {
          os << c;  // UTF-8 bytes pass through unchanged
        }
    }
  }
  os << '"';
}

bool is_scalar(const JsonValue& v) {
  return v.kind() != JsonValue::Kind::array &&
         v.kind() != JsonValue::Kind::object;
}

void write_value(std::ostream& os, const JsonValue& v, int depth) {
  const std::string indent(2 * static_cast<std::size_t>(depth), ' ');
  const std::string inner(2 * static_cast<std::size_t>(depth + 1), ' ');
  switch (v.kind()) {
    case JsonValue::Kind::null_value:
      os << "null";
      break;
    case JsonValue::Kind::boolean:
      os << (v.as_bool() ? "true" : "false");
      break;
    case JsonValue::Kind::integer:
      os << v.as_int();
      break;
    case JsonValue::Kind::string:
      write_escaped(os, v.as_string());
      break;
    case JsonValue::Kind::array: {
      if (v.items().empty()) {
        os << "[]";
        break;
      }
      bool inline_form = true;
      for (const auto& item : v.items()) {
        if (!is_scalar(item)) {
          inline_form = false;
          break;
        }
      }
      if (inline_form) {
        os << '[';
        for (std::size_t i = 0; i < v.items().size(); ++i) {
          if (i) os << ", ";
          write_value(os, v.items()[i], depth);
        }
        os << ']';
      } else {
        os << "[\n";
        for (std::size_t i = 0; i < v.items().size(); ++i) {
          os << inner;
          write_value(os, v.items()[i], depth + 1);
          if (i + 1 < v.items().size()) os << ',';
          os << '\n';
        }
        os << indent << ']';
      }
      break;
    }
    case JsonValue::Kind::object: {
      if (v.members().empty()) {
        os << "{}";
        break;
      }
      os << "{\n";
      for (std::size_t i = 0; i < v.members().size(); ++i) {
        os << inner;
        write_escaped(os, v.members()[i].first);
        os << ": ";
        write_value(os, v.members()[i].second, depth + 1);
        if (i + 1 < v.members().size()) os << ',';
        os << '\n';
      }
      os << indent << '}';
      break;
    }
  }
}

}  // namespace

JsonValue json_parse(const std::string& text) {
  TreeBuilder builder;
  nlohmann::json::sax_parse(text, &builder);
  return builder.take();
}

std::string json_write(const JsonValue& value) {
  std::ostringstream os;
  write_value(os, value, 0);
  os << '\n';
  return os.str();
}

}  // namespace kcrank
