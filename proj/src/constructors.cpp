#include "effectkit/constructors.hpp"

#include <charconv>

namespace effectkit {

CheckedEffectAlgebra chain(int n)
{
    if (n < 1)
        throw ConstructorError("chain length must be at least 1");
    auto t = EffectAlgebraTable::undefined(n + 1, n);
    for (int k = 0; k <= n; ++k)
        for (int m = 0; k + m <= n; ++m)
            t.at(k, m) = k + m;
    return validate(std::move(t));
}

CheckedEffectAlgebra horizontal_sum(std::span<const CheckedEffectAlgebra> summands)
{
    if (summands.empty())
        throw ConstructorError("horizontal sum needs at least one summand");

    int size = 2;
    for (const auto& s : summands)
        size += s.size() - 2;
    const Element one = size - 1;

    // Per summand: local element -> global element.
    std::vector<std::vector<Element>> maps;
    Element next = 1;
    for (const auto& s : summands) {
        std::vector<Element> map(static_cast<std::size_t>(s.size()));
        for (Element x = 0; x < s.size(); ++x) {
            if (x == 0)
                map[0] = 0;
            else if (x == s.one())
                map[static_cast<std::size_t>(x)] = one;
            else
                map[static_cast<std::size_t>(x)] = next++;
        }
        maps.push_back(std::move(map));
    }

    auto t = EffectAlgebraTable::undefined(size, one);
    for (Element x = 0; x < size; ++x) {
        t.at(0, x) = x;
        t.at(x, 0) = x;
    }
    for (std::size_t i = 0; i < summands.size(); ++i) {
        const auto& s = summands[i];
        const auto& map = maps[i];
        for (Element a = 1; a < s.size(); ++a)
            for (Element b = 1; b < s.size(); ++b) {
                Element v = s.sum(a, b);
                if (v != kUndefined)
                    t.at(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]) =
                        map[static_cast<std::size_t>(v)];
            }
    }
    return validate(std::move(t));
}

CheckedEffectAlgebra horizontal_sum_of_chains(std::span<const int> lengths)
{
    std::vector<CheckedEffectAlgebra> chains;
    chains.reserve(lengths.size());
    for (int len : lengths)
        chains.push_back(chain(len));
    return horizontal_sum(chains);
}

CheckedEffectAlgebra direct_product(const CheckedEffectAlgebra& e, const CheckedEffectAlgebra& f)
{
    const int m = f.size();
    const int size = e.size() * m;
    auto t = EffectAlgebraTable::undefined(size, e.one() * m + f.one());
    for (Element a = 0; a < e.size(); ++a)
        for (Element b = 0; b < m; ++b)
            for (Element c = 0; c < e.size(); ++c)
                for (Element d = 0; d < m; ++d) {
                    Element x = e.sum(a, c);
                    Element y = f.sum(b, d);
                    if (x != kUndefined && y != kUndefined)
                        t.at(a * m + b, c * m + d) = x * m + y;
                }
    return validate(std::move(t));
}

CheckedEffectAlgebra boolean_diamond()
{
    auto t = EffectAlgebraTable::undefined(4, 3);
    for (Element x = 0; x < 4; ++x) {
        t.at(0, x) = x;
        t.at(x, 0) = x;
    }
    t.at(1, 2) = 3;
    t.at(2, 1) = 3;
    return validate(std::move(t));
}

namespace {

// Recursive-descent reader over the compact spec grammar:
//   spec  := "diamond" | "chain:" int | "hsum:" int ("," int)* | "prod:" spec "," spec
class SpecReader {
public:
    explicit SpecReader(std::string_view text) : text_(text) {}

    CheckedEffectAlgebra read_all()
    {
        auto result = read_spec();
        if (pos_ != text_.size())
            fail("trailing characters");
        return result;
    }

private:
    CheckedEffectAlgebra read_spec()
    {
        if (consume("diamond"))
            return boolean_diamond();
        if (consume("chain:"))
            return chain(read_int());
        if (consume("hsum:")) {
            std::vector<int> lengths{read_int()};
            while (pos_ + 1 < text_.size() && text_[pos_] == ',' && is_digit(text_[pos_ + 1])) {
                ++pos_;
                lengths.push_back(read_int());
            }
            return horizontal_sum_of_chains(lengths);
        }
        if (consume("prod:")) {
            auto left = read_spec();
            if (!consume(","))
                fail("expected ',' between product factors");
            auto right = read_spec();
            return direct_product(left, right);
        }
        fail("unknown constructor");
    }

    int read_int()
    {
        int value = 0;
        auto begin = text_.data() + pos_;
        auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), value);
        if (ec != std::errc{} || ptr == begin)
            fail("expected an integer");
        pos_ += static_cast<std::size_t>(ptr - begin);
        return value;
    }

    bool consume(std::string_view token)
    {
        if (text_.substr(pos_).starts_with(token)) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ConstructorError("bad constructor spec \"" + std::string(text_) + "\" at position " +
                               std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

CheckedEffectAlgebra from_spec(std::string_view spec)
{
    return SpecReader(spec).read_all();
}

bool looks_like_spec(std::string_view text)
{
    return text == "diamond" || text.starts_with("chain:") || text.starts_with("hsum:") ||
           text.starts_with("prod:");
}

}  // namespace effectkit
