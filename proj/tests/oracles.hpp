// Brute-force reference implementations used only by the tests. Everything
// here works on raw tables and recomputes from the definitions, without
// calling the library's derived order, atoms, canonical forms or search.
#ifndef EFFECTKIT_TESTS_ORACLES_HPP
#define EFFECTKIT_TESTS_ORACLES_HPP

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "effectkit/algebra.hpp"
#include "effectkit/constructors.hpp"
#include "effectkit/serialize.hpp"

namespace oracle {

using effectkit::Element;
using effectkit::EffectAlgebraTable;
using effectkit::kUndefined;

inline bool leq(const EffectAlgebraTable& t, Element x, Element y)
{
    for (Element c = 0; c < t.size; ++c)
        if (t.at(x, c) == y)
            return true;
    return false;
}

inline Element ortho(const EffectAlgebraTable& t, Element x)
{
    for (Element c = 0; c < t.size; ++c)
        if (t.at(x, c) == t.one)
            return c;
    return kUndefined;
}

inline std::vector<Element> atoms(const EffectAlgebraTable& t)
{
    std::vector<Element> out;
    for (Element x = 1; x < t.size; ++x) {
        bool minimal = true;
        for (Element y = 1; y < t.size; ++y)
            if (y != x && leq(t, y, x))
                minimal = false;
        if (minimal)
            out.push_back(x);
    }
    return out;
}

/// Sharp: no nonzero common lower bound of x and x'.
inline std::vector<Element> sharp_set(const EffectAlgebraTable& t)
{
    std::vector<Element> out;
    for (Element x = 0; x < t.size; ++x) {
        bool sharp = true;
        for (Element b = 1; b < t.size; ++b)
            if (leq(t, b, x) && leq(t, b, ortho(t, x)))
                sharp = false;
        if (sharp)
            out.push_back(x);
    }
    return out;
}

inline int count_covers(const EffectAlgebraTable& t)
{
    int covers = 0;
    for (Element x = 0; x < t.size; ++x)
        for (Element y = 0; y < t.size; ++y) {
            if (x == y || !leq(t, x, y))
                continue;
            bool between = false;
            for (Element z = 0; z < t.size; ++z)
                between = between || (z != x && z != y && leq(t, x, z) && leq(t, z, y));
            covers += between ? 0 : 1;
        }
    return covers;
}

/// Homogeneity with the decomposition searched in descending order.
inline bool homogeneous_descending(const EffectAlgebraTable& t)
{
    for (Element u = t.size - 1; u >= 0; --u)
        for (Element v1 = t.size - 1; v1 >= 0; --v1)
            for (Element v2 = t.size - 1; v2 >= 0; --v2) {
                Element s = t.at(v1, v2);
                if (s == kUndefined || !leq(t, u, s) || !leq(t, s, ortho(t, u)))
                    continue;
                bool found = false;
                for (Element u1 = t.size - 1; u1 >= 0 && !found; --u1)
                    for (Element u2 = t.size - 1; u2 >= 0 && !found; --u2)
                        found = t.at(u1, u2) == u && leq(t, u1, v1) && leq(t, u2, v2);
                if (!found)
                    return false;
            }
    return true;
}

/// Every relabeling fixing 0, tried exhaustively.
inline bool isomorphic(const EffectAlgebraTable& a, const EffectAlgebraTable& b)
{
    if (a.size != b.size)
        return false;
    std::vector<Element> perm(static_cast<std::size_t>(a.size));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (effectkit::relabel(a, perm) == b)
            return true;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return false;
}

/// Naive enumeration of isomorphism classes of n-element effect algebras:
/// unit fixed at n-1, every interior cell ranges over {undefined, 1..n-1},
/// each candidate goes through the full axiom check, and classes are
/// separated with the exhaustive isomorphism test above.
inline std::vector<EffectAlgebraTable> brute_force_classes(int n)
{
    const Element one = n - 1;
    std::vector<std::pair<Element, Element>> cells;
    for (Element i = 1; i < one; ++i)
        for (Element j = i; j < one; ++j)
            cells.emplace_back(i, j);

    std::vector<EffectAlgebraTable> reps;
    std::vector<int> digits(cells.size(), 0);
    for (;;) {
        auto t = EffectAlgebraTable::undefined(n, one);
        for (Element x = 0; x < n; ++x) {
            t.at(0, x) = x;
            t.at(x, 0) = x;
        }
        for (std::size_t k = 0; k < cells.size(); ++k) {
            Element v = digits[k] == 0 ? kUndefined : digits[k];
            t.at(cells[k].first, cells[k].second) = v;
            t.at(cells[k].second, cells[k].first) = v;
        }
        if (!effectkit::find_violation(t)) {
            bool seen = std::any_of(reps.begin(), reps.end(), [&](const auto& r) { return isomorphic(r, t); });
            if (!seen)
                reps.push_back(t);
        }
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] == n) {
            digits[k] = 0;
            ++k;
        }
        if (k == digits.size())
            break;
    }
    return reps;
}

/// All multisets of chain lengths >= 2 with sum of (length - 1) <= budget,
/// each sorted ascending.
inline std::vector<std::vector<int>> chain_multisets(int budget)
{
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int min_len) {
        if (!current.empty())
            out.push_back(current);
        for (int len = min_len; len - 1 <= remaining; ++len) {
            current.push_back(len);
            rec(remaining - (len - 1), len);
            current.pop_back();
        }
    };
    rec(budget, 2);
    return out;
}

struct NamedAlgebra {
    std::string name;
    effectkit::CheckedEffectAlgebra algebra;
};

/// Chains up to length 8, horizontal sums of chains with interior budget
/// `hsum_budget`, the diamond and products of short chains.
inline std::vector<NamedAlgebra> corpus(int hsum_budget = 10)
{
    std::vector<NamedAlgebra> out;
    for (int n = 1; n <= 8; ++n)
        out.push_back({"chain:" + std::to_string(n), effectkit::chain(n)});
    for (const auto& lengths : chain_multisets(hsum_budget)) {
        std::string name = "hsum:";
        for (std::size_t i = 0; i < lengths.size(); ++i)
            name += (i ? "," : "") + std::to_string(lengths[i]);
        out.push_back({name, effectkit::horizontal_sum_of_chains(lengths)});
    }
    out.push_back({"diamond", effectkit::boolean_diamond()});
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            out.push_back({"prod:chain:" + std::to_string(i) + ",chain:" + std::to_string(j),
                           effectkit::direct_product(effectkit::chain(i), effectkit::chain(j))});
    return out;
}

inline std::string read_fixture(const std::string& name)
{
    std::ifstream in(std::string(EFFECTKIT_FIXTURES) + "/" + name, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace oracle

#endif  // EFFECTKIT_TESTS_ORACLES_HPP
