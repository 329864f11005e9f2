#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace coorbit {

/// Minimal JSON document tree whose emission is deterministic: objects
/// print with keys sorted (std::map order), output is compact, and integers
/// of any size print as exact decimal literals. Bigints are why this exists:
/// Betti numbers routinely exceed 64 bits and must not be truncated or
/// stringified.
class JsonValue {
public:
    using Array = std::vector<JsonValue>;
    using Object = std::map<std::string, JsonValue>;

    JsonValue() : value_(nullptr) {}
    JsonValue(std::nullptr_t) : value_(nullptr) {}
    JsonValue(bool b) : value_(b) {}
    JsonValue(int v) : value_(mpz_class(v)) {}
    JsonValue(long v) : value_(mpz_class(v)) {}
    JsonValue(long long v) : value_(mpz_class(static_cast<long>(v))) {}
    JsonValue(mpz_class v) : value_(std::move(v)) {}
    JsonValue(const char* s) : value_(std::string(s)) {}
    JsonValue(std::string s) : value_(std::move(s)) {}
    JsonValue(Array a) : value_(std::move(a)) {}
    JsonValue(Object o) : value_(std::move(o)) {}

    static JsonValue array() { return JsonValue(Array{}); }
    static JsonValue object() { return JsonValue(Object{}); }

    /// Object access, creating the slot (and coercing to object) as needed.
    JsonValue& operator[](const std::string& key);
    /// Array append, coercing to array as needed.
    void push_back(JsonValue v);

    void dump(std::ostream& os) const;
    std::string dump() const;

private:
    std::variant<std::nullptr_t, bool, mpz_class, std::string, Array, Object> value_;
};

}  // namespace coorbit
