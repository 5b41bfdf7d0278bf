#include <doctest.h>

#include <random>

#include "effectkit/algebra.hpp"
#include "effectkit/constructors.hpp"
#include "effectkit/enumeration.hpp"
#include "effectkit/serialize.hpp"
#include "oracles.hpp"

using namespace effectkit;

namespace {

EffectAlgebraTable with_zero_row(int size, Element one)
{
    auto t = EffectAlgebraTable::undefined(size, one);
    for (Element x = 0; x < size; ++x) {
        t.at(0, x) = x;
        t.at(x, 0) = x;
    }
    return t;
}

void set_sym(EffectAlgebraTable& t, Element a, Element b, Element v)
{
    t.at(a, b) = v;
    t.at(b, a) = v;
}

std::vector<CheckedEffectAlgebra> small_universe()
{
    std::vector<CheckedEffectAlgebra> out;
    for (auto& named : oracle::corpus(6))
        out.push_back(named.algebra);
    for (int n = 2; n <= 6; ++n)
        for (const auto& key : enumerate_all(n))
            out.push_back(validate(parse_table(key)));
    return out;
}

}  // namespace

TEST_CASE("chain of length 3 validates with one atom")
{
    auto e = chain(3);
    CHECK(e.size() == 4);
    CHECK(e.atoms() == std::vector<Element>{1});
    CHECK(ortho(e, 1) == 2);
}

TEST_CASE("two orthosupplements are reported as OrthoNotUnique")
{
    auto t = with_zero_row(4, 3);
    set_sym(t, 1, 1, 3);
    set_sym(t, 1, 2, 3);
    auto err = find_violation(t);
    REQUIRE(err);
    CHECK(err->kind() == ValidationErrorKind::OrthoNotUnique);
    CHECK(err->witness() == std::vector<int>{1, 1, 2});
    CHECK_THROWS_AS(validate(t), ValidationError);
}

TEST_CASE("missing orthosupplement is reported as OrthoMissing")
{
    auto t = with_zero_row(3, 2);
    auto err = find_violation(t);
    REQUIRE(err);
    CHECK(err->kind() == ValidationErrorKind::OrthoMissing);
    CHECK(err->witness() == std::vector<int>{1});
}

TEST_CASE("remaining error kinds and their witnesses")
{
    SUBCASE("BadIndex for a cell out of range")
    {
        auto t = chain(2).table();
        t.at(1, 1) = 7;
        auto err = find_violation(t);
        REQUIRE(err);
        CHECK(err->kind() == ValidationErrorKind::BadIndex);
        CHECK(err->witness() == std::vector<int>{1, 1});
    }
    SUBCASE("BadIndex for a unit at index 0")
    {
        auto t = chain(2).table();
        t.one = 0;
        CHECK(find_violation(t)->kind() == ValidationErrorKind::BadIndex);
    }
    SUBCASE("BadZero when 0 is not neutral")
    {
        auto t = chain(2).table();
        t.at(0, 1) = 2;
        auto err = find_violation(t);
        REQUIRE(err);
        CHECK(err->kind() == ValidationErrorKind::BadZero);
        CHECK(err->witness() == std::vector<int>{1});
    }
    SUBCASE("NotCommutative")
    {
        auto t = chain(3).table();
        t.at(1, 2) = kUndefined;
        auto err = find_violation(t);
        REQUIRE(err);
        CHECK(err->kind() == ValidationErrorKind::NotCommutative);
        CHECK(err->witness() == std::vector<int>{1, 2});
    }
    SUBCASE("NotAssociative")
    {
        // chain(3) plus 2a + 2a = 1: (a + a) + 2a is defined, a + (a + 2a) = a + 1 is not.
        auto t = chain(3).table();
        set_sym(t, 2, 2, 3);
        auto err = find_violation(t);
        REQUIRE(err);
        CHECK(err->kind() == ValidationErrorKind::NotAssociative);
        auto w = err->witness();
        REQUIRE(w.size() == 3);
        CHECK(w == std::vector<int>{1, 1, 2});
        // The witness really breaks one direction of associativity.
        auto broken = [&](Element a, Element b, Element c) {
            Element bc = t.at(b, c);
            if (bc == kUndefined || t.at(a, bc) == kUndefined)
                return false;
            Element ab = t.at(a, b);
            return ab == kUndefined || t.at(ab, c) != t.at(a, bc);
        };
        CHECK((broken(w[0], w[1], w[2]) || broken(w[2], w[1], w[0])));
    }
    SUBCASE("ZeroOneLawViolated")
    {
        // The group Z2 with 1 + 1 = 0: every other axiom holds.
        auto t = with_zero_row(2, 1);
        t.at(1, 1) = 0;
        auto err = find_violation(t);
        REQUIRE(err);
        CHECK(err->kind() == ValidationErrorKind::ZeroOneLawViolated);
        CHECK(err->witness() == std::vector<int>{1});
    }
}

TEST_CASE("order examples")
{
    auto c3 = chain(3);
    auto d = boolean_diamond();
    CHECK(leq(c3, 1, 2));
    CHECK_FALSE(leq(d, 1, 2));
    for (Element x = 0; x < d.size(); ++x)
        CHECK(leq(d, x, x));
    CHECK_THROWS_AS(leq(d, 0, 9), std::out_of_range);
}

TEST_CASE("orthosupplement examples")
{
    CHECK(ortho(chain(5), 0) == 5);
    CHECK(ortho(chain(3), 1) == 2);
    CHECK(ortho(boolean_diamond(), 1) == 2);
}

TEST_CASE("interval examples")
{
    auto c3 = chain(3);
    CHECK(interval(c3, 0, c3.one()) == std::vector<Element>{0, 1, 2, 3});
    CHECK(interval(boolean_diamond(), 1, 2).empty());
    // Oracle: z with a <= z <= a' scanned straight off the table.
    std::vector<Element> expected;
    for (Element z = 0; z < 4; ++z)
        if (oracle::leq(c3.table(), 1, z) && oracle::leq(c3.table(), z, oracle::ortho(c3.table(), 1)))
            expected.push_back(z);
    CHECK(expected == std::vector<Element>{1, 2});
    CHECK(interval(c3, 1, ortho(c3, 1)) == expected);
}

TEST_CASE("multiples and isotropy index")
{
    auto c3 = chain(3);
    CHECK(multiple(c3, 1, 0) == 0);
    CHECK(multiple(c3, 1, 2) == 2);
    CHECK_FALSE(multiple(c3, 1, 4).has_value());
    CHECK_FALSE(multiple(boolean_diamond(), 1, 2).has_value());

    auto c4 = chain(4);
    CHECK(isotropy_index(c4, 1) == 4);
    CHECK(multiple(c4, 1, 4) == c4.one());
    CHECK(isotropy_index(boolean_diamond(), 1) == 1);
    CHECK_THROWS_AS(isotropy_index(c4, 0), ZeroElementError);

    // hsum(2,3) = {0, a, b, 2b, 1}; b = 2. Folding the table: b, 2b, 1, then undefined.
    auto h = horizontal_sum_of_chains(std::vector<int>{2, 3});
    const auto& t = h.table();
    CHECK(t.at(2, 2) == 3);
    CHECK(t.at(3, 2) == 4);
    CHECK(t.at(4, 2) == kUndefined);
    CHECK(isotropy_index(h, 2) == 3);
}

TEST_CASE("sharp elements")
{
    CHECK(sharp_set(boolean_diamond()) == std::vector<Element>{0, 1, 2, 3});
    CHECK_FALSE(is_sharp(chain(2), 1));
    auto p = direct_product(chain(2), chain(2));
    auto expected = oracle::sharp_set(p.table());
    CHECK(expected.size() == 4);
    CHECK(sharp_set(p) == expected);
    CHECK(has_trivial_sharps(chain(5)));
    CHECK_FALSE(has_trivial_sharps(p));
}

TEST_CASE("meets, joins and the lattice property")
{
    for (int n = 1; n <= 6; ++n)
        CHECK(is_lattice(chain(n)));
    auto h = horizontal_sum_of_chains(std::vector<int>{2, 2});
    CHECK(meet(h, 1, 2) == 0);
    CHECK(join(h, 1, 2) == 3);
    CHECK(is_lattice(h));
    CHECK(meet(boolean_diamond(), 1, 2) == 0);

    auto non_lattice = validate(parse_table(oracle::read_fixture("smallest_non_lattice.json")));
    auto pair = find_non_lattice_pair(non_lattice);
    REQUIRE(pair);
    CHECK_FALSE((meet(non_lattice, pair->first, pair->second) && join(non_lattice, pair->first, pair->second)));
}

TEST_CASE("Hasse covers")
{
    using Covers = std::vector<std::pair<Element, Element>>;
    CHECK(hasse_covers(chain(2)) == Covers{{0, 1}, {1, 2}});
    CHECK(hasse_covers(boolean_diamond()) == Covers{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    auto h = horizontal_sum_of_chains(std::vector<int>{2, 3});
    CHECK(oracle::count_covers(h.table()) == 5);
    CHECK(hasse_covers(h).size() == 5);
}

TEST_CASE("derived structure matches the brute-force definitions")
{
    for (const auto& e : small_universe()) {
        const auto& t = e.table();
        CHECK(e.atoms() == oracle::atoms(t));
        CHECK(sharp_set(e) == oracle::sharp_set(t));
        for (Element x = 0; x < e.size(); ++x) {
            CHECK(e.ortho(x) == oracle::ortho(t, x));
            for (Element y = 0; y < e.size(); ++y)
                CHECK(e.leq(x, y) == oracle::leq(t, x, y));
        }
    }
}

TEST_CASE("order and orthosupplement invariants over the small universe")
{
    for (const auto& e : small_universe()) {
        const int n = e.size();
        for (Element x = 0; x < n; ++x) {
            REQUIRE(e.leq(x, x));
            REQUIRE(e.leq(0, x));
            REQUIRE(e.leq(x, e.one()));
            REQUIRE(e.ortho(e.ortho(x)) == x);
            for (Element y = 0; y < n; ++y) {
                if (x != y)
                    REQUIRE_FALSE((e.leq(x, y) && e.leq(y, x)));
                if (e.leq(x, y))
                    REQUIRE(e.leq(e.ortho(y), e.ortho(x)));
                for (Element z = 0; z < n; ++z)
                    if (e.leq(x, y) && e.leq(y, z))
                        REQUIRE(e.leq(x, z));
            }
        }
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b) {
                if (e.sum(a, b) == 0)
                    REQUIRE((a == 0 && b == 0));
                for (Element c = b + 1; c < n; ++c)
                    if (e.sum(a, b) != kUndefined)
                        REQUIRE(e.sum(a, b) != e.sum(a, c));
            }
        for (Element x = 1; x < n; ++x)
            for (int m = 0; m <= n; ++m)
                for (int k = 0; k <= n; ++k)
                    if (auto whole = multiple(e, x, m + k)) {
                        auto left = multiple(e, x, m);
                        auto right = multiple(e, x, k);
                        REQUIRE(left);
                        REQUIRE(right);
                        REQUIRE(e.sum(*left, *right) == *whole);
                    }
    }
}

TEST_CASE("validation verdicts are invariant under relabeling")
{
    std::mt19937 rng(12345);
    std::vector<EffectAlgebraTable> tables;
    for (const auto& e : small_universe())
        tables.push_back(e.table());
    // Broken variants: drop one defined interior cell.
    for (std::size_t i = 0; i < 40; ++i) {
        auto t = tables[i % tables.size()];
        for (Element a = 1; a < t.size; ++a)
            if (a != t.one && t.at(a, a) != kUndefined) {
                t.at(a, a) = kUndefined;
                break;
            }
        tables.push_back(t);
    }
    for (const auto& t : tables) {
        std::vector<Element> perm(static_cast<std::size_t>(t.size));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin() + 1, perm.end(), rng);
        CHECK(find_violation(t).has_value() == find_violation(relabel(t, perm)).has_value());
    }
}
