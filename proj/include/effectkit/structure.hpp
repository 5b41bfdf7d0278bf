#ifndef EFFECTKIT_STRUCTURE_HPP
#define EFFECTKIT_STRUCTURE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "effectkit/algebra.hpp"
#include "effectkit/lemmas.hpp"

namespace effectkit {

/// Position of an element inside a horizontal sum of chains: the element
/// is `multiple` times the atom of chain `branch`.
struct BranchLabel {
    int branch = 0;
    int multiple = 0;

    friend bool operator==(const BranchLabel&, const BranchLabel&) = default;
};

/// E as a horizontal sum of chains. Branches are sorted by length (ties by
/// atom index), so `chain_lengths` is ascending. The two-element algebra
/// decomposes as the single chain {1}.
struct ChainDecomposition {
    std::vector<int> chain_lengths;
    std::vector<BranchLabel> labeling;  // indexed by element
};

enum class DecomposeErrorKind { NotTrivialSharps, NotHomogeneous, TheoremViolation };

std::string_view to_string(DecomposeErrorKind kind);

class DecomposeError : public std::runtime_error {
public:
    DecomposeError(DecomposeErrorKind kind, std::vector<int> detail);

    DecomposeErrorKind kind() const noexcept { return kind_; }
    /// NotTrivialSharps: a sharp element other than 0, 1.
    /// NotHomogeneous: (u, v1, v2) as in HomogeneityWitness.
    /// TheoremViolation: the element or atom where the structure broke.
    const std::vector<int>& detail() const noexcept { return detail_; }

private:
    DecomposeErrorKind kind_;
    std::vector<int> detail_;
};

/// Splits a homogeneous algebra with sharp set {0, 1} into chains: atoms,
/// their isotropy indices, the chain intervals [a, a'] and their disjoint
/// cover of the interior. The result is checked against the table before
/// it is returned.
ChainDecomposition decompose(const CheckedEffectAlgebra& e);

/// `chains: [l1, l2, ...]` followed by one `elem -> branch.k` line per element.
std::string render(const ChainDecomposition& d);

/// Bijection h (indexed by elements of e) with h(0) = 0, h(1) = 1 and
/// h(a + b) = h(a) + h(b), definedness included; nothing if none exists.
std::optional<std::vector<Element>> find_isomorphism(const CheckedEffectAlgebra& e, const CheckedEffectAlgebra& f);
bool is_isomorphic(const CheckedEffectAlgebra& e, const CheckedEffectAlgebra& f);

/// Least relabeling of a valid table, comparing (one, sum row-major) as
/// integer sequences. Relabelings fix 0, send the unit to index 1 and list
/// the interior sorted by an isomorphism-invariant element signature.
EffectAlgebraTable canonical_table(const EffectAlgebraTable& table);

/// Serialized canonical_table: equal strings iff isomorphic algebras.
std::string canonical_form(const CheckedEffectAlgebra& e);

/// {C2, C3}. C2 passes when decompose succeeds and the rebuilt horizontal
/// sum is isomorphic to e; C3 when e is a lattice.
std::pair<LemmaReport, LemmaReport> verify_C2_C3(const CheckedEffectAlgebra& e,
                                                 Hypotheses mode = Hypotheses::Enforce);

/// Every check in the fixed order L14, L15, L20, L22, L30, L31, L32, L33,
/// T36, C1, C2, C3.
std::vector<LemmaReport> lemma_suite(const CheckedEffectAlgebra& e);

}  // namespace effectkit

#endif  // EFFECTKIT_STRUCTURE_HPP
