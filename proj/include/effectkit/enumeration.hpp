#ifndef EFFECTKIT_ENUMERATION_HPP
#define EFFECTKIT_ENUMERATION_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "effectkit/algebra.hpp"

namespace effectkit {

inline constexpr int kDefaultMaxSize = 8;
/// Hard limit of the search representation, independent of the configured cap.
inline constexpr int kSearchCapacity = 16;

class SizeTooLarge : public std::runtime_error {
public:
    SizeTooLarge(int requested, int cap);
};

/// kDefaultMaxSize unless EFFECTKIT_MAX_SIZE holds a positive integer.
int configured_max_size();

struct EnumerationOptions {
    int max_size = configured_max_size();
    int parallelism = 1;
    /// Fixes the unit at the last index and only accepts labelings whose
    /// interior elements are sorted by a relabeling-invariant key. Never
    /// changes the emitted set; disabling it gives the brute-force baseline.
    bool symmetry_pruning = true;
};

/// One canonical serialized table per isomorphism class of effect algebras
/// with n elements, sorted. Throws SizeTooLarge past options.max_size.
std::vector<std::string> enumerate_all(int n, const EnumerationOptions& options = {});

struct SurveyRow {
    int size = 0;
    int total = 0;
    int homogeneous = 0;
    int trivial_sharp = 0;
    int hypothesis_class = 0;
    int theorem_verified = 0;
    int counterexamples = 0;

    friend bool operator==(const SurveyRow&, const SurveyRow&) = default;
};

/// Smallest enumerated algebras with notable properties ("smallest" means
/// fewest elements, ties broken by canonical order).
struct NotableAlgebras {
    std::optional<EffectAlgebraTable> theorem_counterexample;
    std::optional<EffectAlgebraTable> smallest_non_homogeneous;
    std::optional<EffectAlgebraTable> smallest_trivial_sharp_non_homogeneous;
    std::optional<EffectAlgebraTable> smallest_non_lattice;
};

struct SurveyResult {
    std::vector<SurveyRow> rows;
    NotableAlgebras notable;
    std::map<int, std::vector<std::string>> algebras;  // size -> canonical tables
};

/// Enumerates sizes 2..max_n and classifies every algebra.
SurveyResult run_survey(int max_n, const EnumerationOptions& options = {});
std::vector<SurveyRow> survey(int max_n, const EnumerationOptions& options = {});
NotableAlgebras find_counterexample(int max_n, const EnumerationOptions& options = {});

/// Header plus one line per row, tab separated.
std::string survey_tsv(const std::vector<SurveyRow>& rows);

/// Writes size_<n>/<index>.json for every algebra, survey.tsv, and
/// fixtures/<name>.json for each notable algebra found.
void write_survey(const SurveyResult& result, const std::filesystem::path& dir);

}  // namespace effectkit

#endif  // EFFECTKIT_ENUMERATION_HPP
