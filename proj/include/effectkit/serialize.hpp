#ifndef EFFECTKIT_SERIALIZE_HPP
#define EFFECTKIT_SERIALIZE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "effectkit/algebra.hpp"

namespace effectkit {

/// Malformed table document. `offset` is the byte position of a syntax
/// error, or 0 when the JSON is well formed but does not describe a table.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& message);

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Reads `{"size": n, "one": u, "sum": [[...], ...]}` with -1 for undefined
/// cells. Shape and index ranges are checked here; axioms are not.
EffectAlgebraTable parse_table(std::string_view text);

/// Canonical bytes: keys size, one, sum in that order, no whitespace, and a
/// trailing newline.
std::string serialize_table(const EffectAlgebraTable& table);

}  // namespace effectkit

#endif  // EFFECTKIT_SERIALIZE_HPP
