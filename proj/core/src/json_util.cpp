#include "json_util.hpp"

#include <algorithm>
#include <stdexcept>

namespace fairdiv::detail {

namespace {

using json = nlohmann::json;

// DOM builder that records float literals verbatim.
class ExactSax {
 public:
  bool null() { return put(json(nullptr)); }
  bool boolean(bool v) { return put(json(v)); }
  bool number_integer(json::number_integer_t v) { return put(json(v)); }
  bool number_unsigned(json::number_unsigned_t v) { return put(json(v)); }
  bool number_float(json::number_float_t /*v*/, const json::string_t& lexeme) {
    return put(json(lexeme));
  }
  bool string(json::string_t& v) { return put(json(v)); }
  bool binary(json::binary_t& v) { return put(json::binary(v)); }

  bool start_object(std::size_t /*size*/) {
    stack_.push_back(put_ref(json::object()));
    return true;
  }
  bool key(json::string_t& k) {
    pending_key_ = k;
    return true;
  }
  bool end_object() {
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t /*size*/) {
    stack_.push_back(put_ref(json::array()));
    return true;
  }
  bool end_array() {
    stack_.pop_back();
    return true;
  }

  bool parse_error(std::size_t position, const std::string& /*token*/,
                   const nlohmann::detail::exception& ex) {
    error_position_ = position;
    error_message_ = ex.what();
    return false;
  }

  json& root() { return root_; }
  [[nodiscard]] std::size_t error_position() const { return error_position_; }
  [[nodiscard]] const std::string& error_message() const { return error_message_; }

 private:
  bool put(json value) {
    put_ref(std::move(value));
    return true;
  }

  json* put_ref(json value) {
    if (stack_.empty()) {
      root_ = std::move(value);
      return &root_;
    }
    json& top = *stack_.back();
    if (top.is_array()) {
      top.push_back(std::move(value));
      return &top.back();
    }
    json& slot = top[pending_key_];
    slot = std::move(value);
    return &slot;
  }

  json root_;
  std::vector<json*> stack_;
  std::string pending_key_;
  std::size_t error_position_ = 0;
  std::string error_message_;
};

std::size_t line_of(std::string_view text, std::size_t position) {
  const std::size_t end = std::min(position, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(end), '\n'));
}

}  // namespace

nlohmann::json parse_exact_json(std::string_view text) {
  ExactSax sax;
  const bool ok = json::sax_parse(text.begin(), text.end(), &sax);
  if (!ok) {
    // nlohmann positions are 1-based byte counts past the offending character
    const std::size_t pos = sax.error_position() == 0 ? 0 : sax.error_position() - 1;
    throw ParseError("malformed JSON: " + sax.error_message(), line_of(text, pos));
  }
  return std::move(sax.root());
}

Rational rational_from_json(const nlohmann::json& value, const std::string& where) {
  try {
    if (value.is_string()) return Rational::parse(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  } catch (const std::exception& err) {
    throw ParseError(where + ": " + err.what());
  }
  throw ParseError(where + ": expected a rational number (\"p/q\" or decimal), got " + value.dump());
}

std::string quote(std::string_view text) { return json(std::string(text)).dump(); }

std::string rational_array(const std::vector<Rational>& values) {
  std::string out = "[";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) out += ", ";
    out += '"' + values[k].str() + '"';
  }
  return out + "]";
}

std::string string_array(const std::vector<std::string>& values) {
  std::string out = "[";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) out += ", ";
    out += quote(values[k]);
  }
  return out + "]";
}

}  // namespace fairdiv::detail
