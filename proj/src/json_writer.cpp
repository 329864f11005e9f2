#include "coorbit/json_writer.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace coorbit {

namespace {

void write_escaped(std::ostream& os, const std::string& s)
{
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
                os << static_cast<char>(c);
            }
        }
    }
    os << '"';
}

}  // namespace

JsonValue& JsonValue::operator[](const std::string& key)
{
    if (std::holds_alternative<std::nullptr_t>(value_))
        value_ = Object{};
    if (auto* obj = std::get_if<Object>(&value_))
        return (*obj)[key];
    throw std::logic_error("JsonValue: operator[] on non-object");
}

void JsonValue::push_back(JsonValue v)
{
    if (std::holds_alternative<std::nullptr_t>(value_))
        value_ = Array{};
    if (auto* arr = std::get_if<Array>(&value_)) {
        arr->push_back(std::move(v));
        return;
    }
    throw std::logic_error("JsonValue: push_back on non-array");
}

void JsonValue::dump(std::ostream& os) const
{
    struct Visitor {
        std::ostream& os;
        void operator()(std::nullptr_t) const { os << "null"; }
        void operator()(bool b) const { os << (b ? "true" : "false"); }
        void operator()(const mpz_class& z) const { os << z.get_str(); }
        void operator()(const std::string& s) const { write_escaped(os, s); }
        void operator()(const Array& a) const
        {
            os << '[';
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (i)
                    os << ',';
                a[i].dump(os);
            }
            os << ']';
        }
        void operator()(const Object& o) const
        {
            os << '{';
            bool first = true;
            for (const auto& [key, value] : o) {
                if (!first)
                    os << ',';
                first = false;
                write_escaped(os, key);
                os << ':';
                value.dump(os);
            }
            os << '}';
        }
    };
    std::visit(Visitor{os}, value_);
}

std::string JsonValue::dump() const
{
    std::ostringstream os;
    dump(os);
    return os.str();
}

}  // namespace coorbit
