#include "effectkit/serialize.hpp"

#include <json.hpp>

namespace effectkit {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& what)
{
    throw ParseError(0, "not an effect algebra table: " + what);
}

int read_int(const json& value, const std::string& where)
{
    if (!value.is_number_integer())
        schema_error(where + " must be an integer");
    auto v = value.get<long long>();
    if (v < -1 || v > 1'000'000)
        schema_error(where + " out of range");
    return static_cast<int>(v);
}

}  // namespace

ParseError::ParseError(std::size_t offset, const std::string& message)
    : std::runtime_error("ParseError at byte " + std::to_string(offset) + ": " + message), offset_(offset)
{
}

EffectAlgebraTable parse_table(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(e.byte, e.what());
    }

    if (!doc.is_object())
        schema_error("top level must be an object");
    for (const char* key : {"size", "one", "sum"})
        if (!doc.contains(key))
            schema_error(std::string("missing key \"") + key + "\"");
    if (doc.size() != 3)
        schema_error("unexpected keys");

    EffectAlgebraTable table;
    table.size = read_int(doc["size"], "size");
    table.one = read_int(doc["one"], "one");
    if (table.size < 2)
        schema_error("size must be at least 2");
    if (table.one < 1 || table.one >= table.size)
        schema_error("one must be a nonzero element index");

    const json& rows = doc["sum"];
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(table.size))
        schema_error("sum must have `size` rows");
    table.sum.reserve(static_cast<std::size_t>(table.size * table.size));
    for (std::size_t a = 0; a < rows.size(); ++a) {
        const json& row = rows[a];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(table.size))
            schema_error("row " + std::to_string(a) + " must have `size` cells");
        for (std::size_t b = 0; b < row.size(); ++b) {
            std::string where = "sum[" + std::to_string(a) + "][" + std::to_string(b) + "]";
            int v = read_int(row[b], where);
            if (v >= table.size)
                schema_error(where + " out of range");
            table.sum.push_back(v);
        }
    }
    return table;
}

std::string serialize_table(const EffectAlgebraTable& table)
{
    std::string out = "{\"size\":" + std::to_string(table.size) + ",\"one\":" + std::to_string(table.one) + ",\"sum\":[";
    for (Element a = 0; a < table.size; ++a) {
        out += a ? ",[" : "[";
        for (Element b = 0; b < table.size; ++b) {
            if (b)
                out += ',';
            out += std::to_string(table.at(a, b));
        }
        out += ']';
    }
    out += "]}\n";
    return out;
}

}  // namespace effectkit
