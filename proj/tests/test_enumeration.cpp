#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <set>

#include "effectkit/constructors.hpp"
#include "effectkit/enumeration.hpp"
#include "effectkit/serialize.hpp"
#include "effectkit/structure.hpp"
#include "oracles.hpp"

using namespace effectkit;

namespace {

bool contains_isomorph(const std::vector<std::string>& keys, const EffectAlgebraTable& t)
{
    return std::any_of(keys.begin(), keys.end(), [&](const auto& k) { return oracle::isomorphic(parse_table(k), t); });
}

}  // namespace

TEST_CASE("class counts for the smallest sizes")
{
    CHECK(enumerate_all(2).size() == 1);
    CHECK(enumerate_all(3).size() == 1);
    auto four = enumerate_all(4);
    REQUIRE(four.size() == 3);
    CHECK(contains_isomorph(four, chain(3).table()));
    CHECK(contains_isomorph(four, boolean_diamond().table()));
    CHECK(contains_isomorph(four, horizontal_sum_of_chains(std::vector<int>{2, 2}).table()));
}

TEST_CASE("search agrees with the naive enumeration")
{
    for (int n = 2; n <= 5; ++n) {
        CAPTURE(n);
        auto keys = enumerate_all(n);
        auto reps = oracle::brute_force_classes(n);
        CHECK(keys.size() == reps.size());
        for (const auto& r : reps)
            CHECK(contains_isomorph(keys, r));
    }
}

TEST_CASE("symmetry pruning does not change the output")
{
    EnumerationOptions unpruned;
    unpruned.symmetry_pruning = false;
    for (int n = 2; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(enumerate_all(n) == enumerate_all(n, unpruned));
    }
}

TEST_CASE("every emitted table is valid, canonical and distinct up to isomorphism")
{
    for (int n = 2; n <= 7; ++n) {
        auto keys = enumerate_all(n);
        CHECK(std::is_sorted(keys.begin(), keys.end()));
        CHECK(std::set<std::string>(keys.begin(), keys.end()).size() == keys.size());
        for (const auto& k : keys) {
            auto t = parse_table(k);
            CHECK(t.size == n);
            CHECK_FALSE(find_violation(t).has_value());
            CHECK(serialize_table(t) == k);
            CHECK(canonical_form(validate(t)) == k);
        }
        if (n <= 6)
            for (std::size_t i = 0; i < keys.size(); ++i)
                for (std::size_t j = i + 1; j < keys.size(); ++j)
                    CHECK_FALSE(oracle::isomorphic(parse_table(keys[i]), parse_table(keys[j])));
    }
}

TEST_CASE("parallel search is deterministic")
{
    EnumerationOptions four;
    four.parallelism = 4;
    for (int n = 2; n <= 7; ++n)
        CHECK(enumerate_all(n) == enumerate_all(n, four));
}

TEST_CASE("chains and horizontal sums of every size are found")
{
    for (int n = 2; n <= 8; ++n) {
        auto keys = enumerate_all(n);
        std::set<std::string> set(keys.begin(), keys.end());
        CHECK(set.count(canonical_form(chain(n - 1))) == 1);
        for (const auto& lengths : oracle::chain_multisets(n - 2)) {
            auto h = horizontal_sum_of_chains(lengths);
            if (h.size() == n)
                CHECK(set.count(canonical_form(h)) == 1);
        }
    }
}

TEST_CASE("survey rows match brute-force classification")
{
    auto rows = survey(5);
    REQUIRE(rows.size() == 4);
    for (const auto& row : rows) {
        CAPTURE(row.size);
        SurveyRow expected;
        expected.size = row.size;
        for (const auto& t : oracle::brute_force_classes(row.size)) {
            bool homogeneous = oracle::homogeneous_descending(t);
            bool trivial = oracle::sharp_set(t) == std::vector<Element>{0, t.one};
            ++expected.total;
            expected.homogeneous += homogeneous;
            expected.trivial_sharp += trivial;
            expected.hypothesis_class += homogeneous && trivial;
        }
        expected.theorem_verified = expected.hypothesis_class;
        CHECK(row == expected);
    }
    CHECK(rows[0] == SurveyRow{2, 1, 1, 1, 1, 1, 0});
    CHECK(rows[2] == SurveyRow{4, 3, 3, 2, 2, 2, 0});

    auto tsv = survey_tsv(rows);
    CHECK(tsv.rfind("size\ttotal\thomogeneous\ttrivial_sharp\thypothesis_class\ttheorem_verified\tcounterexamples\n", 0) ==
          0);
    CHECK(tsv.find("4\t3\t3\t2\t2\t2\t0\n") != std::string::npos);
}

TEST_CASE("size cap")
{
    ::unsetenv("EFFECTKIT_MAX_SIZE");
    CHECK_THROWS_AS(enumerate_all(9), SizeTooLarge);
    CHECK_THROWS_AS(survey(9), SizeTooLarge);
    EnumerationOptions small;
    small.max_size = 4;
    CHECK_THROWS_AS(enumerate_all(5, small), SizeTooLarge);
    CHECK_THROWS_AS(enumerate_all(1), std::invalid_argument);

    CHECK(configured_max_size() == kDefaultMaxSize);
    ::setenv("EFFECTKIT_MAX_SIZE", "10", 1);
    CHECK(configured_max_size() == 10);
    CHECK(EnumerationOptions{}.max_size == 10);
    ::setenv("EFFECTKIT_MAX_SIZE", "junk", 1);
    CHECK(configured_max_size() == kDefaultMaxSize);
    ::unsetenv("EFFECTKIT_MAX_SIZE");
}

TEST_CASE("notable algebras match the committed fixtures")
{
    auto result = run_survey(8);
    const auto& notable = result.notable;
    CHECK_FALSE(notable.theorem_counterexample.has_value());
    REQUIRE(notable.smallest_non_homogeneous);
    REQUIRE(notable.smallest_trivial_sharp_non_homogeneous);
    REQUIRE(notable.smallest_non_lattice);
    CHECK(serialize_table(*notable.smallest_non_homogeneous) == oracle::read_fixture("smallest_non_homogeneous.json"));
    CHECK(serialize_table(*notable.smallest_trivial_sharp_non_homogeneous) ==
          oracle::read_fixture("smallest_trivial_sharp_non_homogeneous.json"));
    CHECK(serialize_table(*notable.smallest_non_lattice) == oracle::read_fixture("smallest_non_lattice.json"));

    // Nothing smaller is non-homogeneous.
    for (int n = 2; n < notable.smallest_non_homogeneous->size; ++n)
        for (const auto& t : oracle::brute_force_classes(n))
            CHECK(oracle::homogeneous_descending(t));

    auto dir = std::filesystem::temp_directory_path() / "effectkit_survey_test";
    std::filesystem::remove_all(dir);
    write_survey(result, dir);
    CHECK(std::filesystem::exists(dir / "size_4" / "00002.json"));
    CHECK_FALSE(std::filesystem::exists(dir / "size_4" / "00003.json"));
    CHECK_FALSE(std::filesystem::exists(dir / "fixtures" / "theorem_counterexample.json"));
    CHECK(std::filesystem::exists(dir / "fixtures" / "smallest_non_lattice.json"));
    std::filesystem::remove_all(dir);
}
