#include "effectkit/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace effectkit {

namespace {

std::string describe(ValidationErrorKind kind, const std::vector<int>& witness)
{
    std::ostringstream os;
    os << to_string(kind) << " witness=(";
    for (std::size_t i = 0; i < witness.size(); ++i)
        os << (i ? "," : "") << witness[i];
    os << ')';
    return os.str();
}

std::optional<ValidationError> check_shape(const EffectAlgebraTable& t)
{
    if (t.size < 2)
        return ValidationError(ValidationErrorKind::BadIndex, {t.size});
    if (t.one <= 0 || t.one >= t.size)
        return ValidationError(ValidationErrorKind::BadIndex, {t.one});
    if (t.sum.size() != static_cast<std::size_t>(t.size) * static_cast<std::size_t>(t.size))
        return ValidationError(ValidationErrorKind::BadIndex, {static_cast<int>(t.sum.size())});
    for (Element a = 0; a < t.size; ++a)
        for (Element b = 0; b < t.size; ++b) {
            Element v = t.at(a, b);
            if (v < kUndefined || v >= t.size)
                return ValidationError(ValidationErrorKind::BadIndex, {a, b});
        }
    return std::nullopt;
}

// One direction of associativity for the ordered triple (a, b, c):
// b+c and a+(b+c) defined implies a+b and (a+b)+c defined with the same value.
bool associative_at(const EffectAlgebraTable& t, Element a, Element b, Element c)
{
    Element bc = t.at(b, c);
    if (bc == kUndefined)
        return true;
    Element right = t.at(a, bc);
    if (right == kUndefined)
        return true;
    Element ab = t.at(a, b);
    if (ab == kUndefined)
        return false;
    return t.at(ab, c) == right;
}

}  // namespace

EffectAlgebraTable EffectAlgebraTable::undefined(int size, Element one)
{
    EffectAlgebraTable t;
    t.size = size;
    t.one = one;
    t.sum.assign(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), kUndefined);
    return t;
}

std::string_view to_string(ValidationErrorKind kind)
{
    switch (kind) {
    case ValidationErrorKind::NotCommutative: return "NotCommutative";
    case ValidationErrorKind::NotAssociative: return "NotAssociative";
    case ValidationErrorKind::OrthoMissing: return "OrthoMissing";
    case ValidationErrorKind::OrthoNotUnique: return "OrthoNotUnique";
    case ValidationErrorKind::ZeroOneLawViolated: return "ZeroOneLawViolated";
    case ValidationErrorKind::BadZero: return "BadZero";
    case ValidationErrorKind::BadIndex: return "BadIndex";
    }
    return "Unknown";
}

ValidationError::ValidationError(ValidationErrorKind kind, std::vector<int> witness)
    : std::runtime_error(describe(kind, witness)), kind_(kind), witness_(std::move(witness))
{
}

std::optional<ValidationError> find_violation(const EffectAlgebraTable& t)
{
    if (auto err = check_shape(t))
        return err;

    const int n = t.size;
    for (Element x = 0; x < n; ++x)
        if (t.at(0, x) != x || t.at(x, 0) != x)
            return ValidationError(ValidationErrorKind::BadZero, {x});

    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (t.at(a, b) != t.at(b, a))
                return ValidationError(ValidationErrorKind::NotCommutative, {a, b});

    // The mirrored triple (c, b, a) covers the converse direction, since the
    // table is commutative at this point.
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                if (!associative_at(t, a, b, c) || !associative_at(t, c, b, a))
                    return ValidationError(ValidationErrorKind::NotAssociative, {a, b, c});

    for (Element a = 0; a < n; ++a) {
        std::vector<int> complements;
        for (Element c = 0; c < n; ++c)
            if (t.at(a, c) == t.one)
                complements.push_back(c);
        if (complements.empty())
            return ValidationError(ValidationErrorKind::OrthoMissing, {a});
        if (complements.size() > 1)
            return ValidationError(ValidationErrorKind::OrthoNotUnique, {a, complements[0], complements[1]});
    }

    for (Element a = 1; a < n; ++a)
        if (t.at(a, t.one) != kUndefined)
            return ValidationError(ValidationErrorKind::ZeroOneLawViolated, {a});

    return std::nullopt;
}

CheckedEffectAlgebra validate(EffectAlgebraTable table)
{
    if (auto err = find_violation(table))
        throw *err;
    return CheckedEffectAlgebra(std::move(table));
}

CheckedEffectAlgebra::CheckedEffectAlgebra(EffectAlgebraTable table) : table_(std::move(table))
{
    const int n = table_.size;
    leq_.assign(static_cast<std::size_t>(n * n), 0);
    ortho_.assign(static_cast<std::size_t>(n), kUndefined);
    for (Element a = 0; a < n; ++a)
        for (Element c = 0; c < n; ++c) {
            Element s = table_.at(a, c);
            if (s == kUndefined)
                continue;
            leq_[static_cast<std::size_t>(a * n + s)] = 1;
            if (s == table_.one)
                ortho_[static_cast<std::size_t>(a)] = c;
        }
    for (Element x = 1; x < n; ++x) {
        bool minimal = true;
        for (Element y = 1; y < n && minimal; ++y)
            if (y != x && leq(y, x))
                minimal = false;
        if (minimal)
            atoms_.push_back(x);
    }
}

bool CheckedEffectAlgebra::is_atom(Element x) const
{
    return std::binary_search(atoms_.begin(), atoms_.end(), x);
}

void CheckedEffectAlgebra::require_element(Element x) const
{
    if (x < 0 || x >= size())
        throw std::out_of_range("element index " + std::to_string(x) + " outside carrier of size " +
                                std::to_string(size()));
}

bool leq(const CheckedEffectAlgebra& e, Element x, Element y)
{
    e.require_element(x);
    e.require_element(y);
    return e.leq(x, y);
}

Element ortho(const CheckedEffectAlgebra& e, Element x)
{
    e.require_element(x);
    return e.ortho(x);
}

std::vector<Element> interval(const CheckedEffectAlgebra& e, Element x, Element y)
{
    e.require_element(x);
    e.require_element(y);
    std::vector<Element> out;
    for (Element z = 0; z < e.size(); ++z)
        if (e.leq(x, z) && e.leq(z, y))
            out.push_back(z);
    return out;
}

std::optional<Element> multiple(const CheckedEffectAlgebra& e, Element x, int n)
{
    e.require_element(x);
    if (n < 0)
        throw std::invalid_argument("multiple: negative count");
    Element acc = 0;
    for (int k = 0; k < n; ++k) {
        acc = e.sum(acc, x);
        if (acc == kUndefined)
            return std::nullopt;
    }
    return acc;
}

int isotropy_index(const CheckedEffectAlgebra& e, Element x)
{
    e.require_element(x);
    if (x == 0)
        throw ZeroElementError();
    // n*x strictly increases while defined, so at most size-1 steps succeed.
    int n = 1;
    Element acc = x;
    for (;;) {
        Element next = e.sum(acc, x);
        if (next == kUndefined)
            return n;
        acc = next;
        ++n;
    }
}

bool is_sharp(const CheckedEffectAlgebra& e, Element x)
{
    e.require_element(x);
    Element xo = e.ortho(x);
    for (Element b = 1; b < e.size(); ++b)
        if (e.leq(b, x) && e.leq(b, xo))
            return false;
    return true;
}

std::vector<Element> sharp_set(const CheckedEffectAlgebra& e)
{
    std::vector<Element> out;
    for (Element x = 0; x < e.size(); ++x)
        if (is_sharp(e, x))
            out.push_back(x);
    return out;
}

bool has_trivial_sharps(const CheckedEffectAlgebra& e)
{
    for (Element x = 1; x < e.size(); ++x)
        if (x != e.one() && is_sharp(e, x))
            return false;
    return true;
}

std::optional<Element> meet(const CheckedEffectAlgebra& e, Element x, Element y)
{
    e.require_element(x);
    e.require_element(y);
    std::vector<Element> lower;
    for (Element z = 0; z < e.size(); ++z)
        if (e.leq(z, x) && e.leq(z, y))
            lower.push_back(z);
    for (Element candidate : lower)
        if (std::all_of(lower.begin(), lower.end(), [&](Element z) { return e.leq(z, candidate); }))
            return candidate;
    return std::nullopt;
}

std::optional<Element> join(const CheckedEffectAlgebra& e, Element x, Element y)
{
    e.require_element(x);
    e.require_element(y);
    std::vector<Element> upper;
    for (Element z = 0; z < e.size(); ++z)
        if (e.leq(x, z) && e.leq(y, z))
            upper.push_back(z);
    for (Element candidate : upper)
        if (std::all_of(upper.begin(), upper.end(), [&](Element z) { return e.leq(candidate, z); }))
            return candidate;
    return std::nullopt;
}

std::optional<std::pair<Element, Element>> find_non_lattice_pair(const CheckedEffectAlgebra& e)
{
    for (Element x = 0; x < e.size(); ++x)
        for (Element y = x + 1; y < e.size(); ++y)
            if (!meet(e, x, y) || !join(e, x, y))
                return std::pair{x, y};
    return std::nullopt;
}

bool is_lattice(const CheckedEffectAlgebra& e)
{
    return !find_non_lattice_pair(e).has_value();
}

std::vector<std::pair<Element, Element>> hasse_covers(const CheckedEffectAlgebra& e)
{
    std::vector<std::pair<Element, Element>> covers;
    const int n = e.size();
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
            if (x == y || !e.leq(x, y))
                continue;
            bool covered = true;
            for (Element z = 0; z < n && covered; ++z)
                if (z != x && z != y && e.leq(x, z) && e.leq(z, y))
                    covered = false;
            if (covered)
                covers.emplace_back(x, y);
        }
    return covers;
}

EffectAlgebraTable relabel(const EffectAlgebraTable& table, std::span<const Element> perm)
{
    if (perm.size() != static_cast<std::size_t>(table.size) || perm.empty() || perm[0] != 0)
        throw std::invalid_argument("relabel: permutation must cover the carrier and fix 0");
    std::vector<char> seen(perm.size(), 0);
    for (Element p : perm) {
        if (p < 0 || p >= table.size || seen[static_cast<std::size_t>(p)])
            throw std::invalid_argument("relabel: not a permutation");
        seen[static_cast<std::size_t>(p)] = 1;
    }
    auto out = EffectAlgebraTable::undefined(table.size, perm[static_cast<std::size_t>(table.one)]);
    for (Element a = 0; a < table.size; ++a)
        for (Element b = 0; b < table.size; ++b) {
            Element v = table.at(a, b);
            out.at(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]) =
                v == kUndefined ? kUndefined : perm[static_cast<std::size_t>(v)];
        }
    return out;
}

}  // namespace effectkit
