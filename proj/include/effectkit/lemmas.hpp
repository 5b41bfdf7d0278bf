#ifndef EFFECTKIT_LEMMAS_HPP
#define EFFECTKIT_LEMMAS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "effectkit/algebra.hpp"

namespace effectkit {

/// Statements checked against concrete algebras. Ordering matches the
/// report order of `lemma_suite`.
enum class LemmaId {
    L14,  // x non-sharp iff x lies in [b, b'] for some nonzero b <= b'
    L15,  // a non-sharp atom lies below its orthosupplement
    L20,  // trivial sharps: carrier = {0, 1} plus the atom intervals [a, a']
    L22,  // v1 + v2 in [a, a'] forces a <= v1 or a <= v2
    L30,  // n*a_i in [a_j, a_j'] forces i = j
    L31,  // n*a_i is 1 or lies in [a_i, a_i']
    L32,  // a_i' = n*a_i for some n
    L33,  // [0, n*a_i] larger than the multiples contains another atom
    T36,  // n*a_i <= a_i' forces [0, n*a_i] = {0, a_i, ..., n*a_i}
    C1,   // distinct atom intervals are disjoint and elementwise incomparable
    C2,   // isomorphic to a horizontal sum of chains
    C3,   // lattice
};

enum class Verdict { Pass, Fail, NotApplicable };

std::string_view to_string(LemmaId id);
std::string_view to_string(Verdict verdict);

struct LemmaReport {
    LemmaId id;
    Verdict verdict = Verdict::Pass;
    /// Instantiates the failing case when verdict is Fail; see `confirms_failure`.
    std::vector<int> witness;

    friend bool operator==(const LemmaReport&, const LemmaReport&) = default;
};

/// `<id> <verdict>` with ` witness=(...)` appended for failures.
std::string render(const LemmaReport& report);

/// u, v1, v2 with v1 + v2 defined and u <= v1 + v2 <= u', while no
/// u1 <= v1, u2 <= v2 satisfy u1 + u2 = u.
struct HomogeneityWitness {
    Element u = 0;
    Element v1 = 0;
    Element v2 = 0;

    friend bool operator==(const HomogeneityWitness&, const HomogeneityWitness&) = default;
};

/// Lexicographically first homogeneity violation, if any.
std::optional<HomogeneityWitness> find_homogeneity_violation(const CheckedEffectAlgebra& e);
bool is_homogeneous(const CheckedEffectAlgebra& e);

/// Re-evaluates a witness directly against the table.
bool witnesses_non_homogeneity(const CheckedEffectAlgebra& e, const HomogeneityWitness& w);

/// Whether a check first tests its standing hypotheses (homogeneity,
/// trivial sharp set). `Ignore` evaluates the conclusion on any algebra,
/// which is how genuine failures can be provoked and their witnesses tested.
enum class Hypotheses { Enforce, Ignore };

LemmaReport check_L22(const CheckedEffectAlgebra& e, Hypotheses mode = Hypotheses::Enforce);
/// Returns {L14, L15}. Both hold in every effect algebra.
std::vector<LemmaReport> check_L14_L15(const CheckedEffectAlgebra& e);
LemmaReport check_L20(const CheckedEffectAlgebra& e, Hypotheses mode = Hypotheses::Enforce);
/// Returns {L30, L31, L32}.
std::vector<LemmaReport> check_L30_L31_L32(const CheckedEffectAlgebra& e, Hypotheses mode = Hypotheses::Enforce);
/// Returns {L33, T36, C1}.
std::vector<LemmaReport> check_T36_L33_C1(const CheckedEffectAlgebra& e, Hypotheses mode = Hypotheses::Enforce);

/// Re-checks a Fail report's witness from the core primitives: the
/// witnessed instance must satisfy the statement's premise and violate
/// its conclusion.
bool confirms_failure(const CheckedEffectAlgebra& e, const LemmaReport& report);

}  // namespace effectkit

#endif  // EFFECTKIT_LEMMAS_HPP
