#ifndef EFFECTKIT_ALGEBRA_HPP
#define EFFECTKIT_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace effectkit {

/// Index of an element of a finite carrier. Index 0 is always the zero.
using Element = int;

/// Marks an undefined cell of a partial sum table.
inline constexpr Element kUndefined = -1;

/// Raw partial Cayley table of a finite effect algebra candidate.
///
/// `sum` is stored row-major with `size * size` cells; `kUndefined` marks
/// pairs whose sum does not exist. Nothing about the axioms is guaranteed
/// until the table has been through `validate`.
struct EffectAlgebraTable {
    int size = 0;
    Element one = 0;
    std::vector<Element> sum;

    /// Table of the given shape with every cell undefined.
    static EffectAlgebraTable undefined(int size, Element one);

    Element at(Element a, Element b) const { return sum[static_cast<std::size_t>(a * size + b)]; }
    Element& at(Element a, Element b) { return sum[static_cast<std::size_t>(a * size + b)]; }

    friend bool operator==(const EffectAlgebraTable&, const EffectAlgebraTable&) = default;
};

enum class ValidationErrorKind {
    NotCommutative,
    NotAssociative,
    OrthoMissing,
    OrthoNotUnique,
    ZeroOneLawViolated,
    BadZero,
    BadIndex,
};

std::string_view to_string(ValidationErrorKind kind);

/// First axiom violation of a table, in lexicographic scan order.
class ValidationError : public std::runtime_error {
public:
    ValidationError(ValidationErrorKind kind, std::vector<int> witness);

    ValidationErrorKind kind() const noexcept { return kind_; }
    const std::vector<int>& witness() const noexcept { return witness_; }

private:
    ValidationErrorKind kind_;
    std::vector<int> witness_;
};

/// Raised by operations whose argument must be a nonzero element.
class ZeroElementError : public std::invalid_argument {
public:
    ZeroElementError() : std::invalid_argument("ZeroElement: operation requires a nonzero element") {}
};

/// A table that satisfied the effect algebra axioms, together with the
/// derived order, orthosupplement map and atom list. Immutable.
class CheckedEffectAlgebra {
public:
    const EffectAlgebraTable& table() const noexcept { return table_; }
    int size() const noexcept { return table_.size; }
    Element one() const noexcept { return table_.one; }

    Element sum(Element a, Element b) const { return table_.at(a, b); }
    bool orthogonal(Element a, Element b) const { return table_.at(a, b) != kUndefined; }
    bool leq(Element x, Element y) const { return leq_[static_cast<std::size_t>(x * size() + y)] != 0; }
    Element ortho(Element x) const { return ortho_[static_cast<std::size_t>(x)]; }
    const std::vector<Element>& atoms() const noexcept { return atoms_; }
    bool is_atom(Element x) const;

    /// Throws std::out_of_range unless `x` indexes the carrier.
    void require_element(Element x) const;

    friend bool operator==(const CheckedEffectAlgebra& a, const CheckedEffectAlgebra& b) { return a.table_ == b.table_; }

private:
    friend CheckedEffectAlgebra validate(EffectAlgebraTable table);

    explicit CheckedEffectAlgebra(EffectAlgebraTable table);

    EffectAlgebraTable table_;
    std::vector<char> leq_;
    std::vector<Element> ortho_;
    std::vector<Element> atoms_;
};

/// Checks commutativity, associativity, existence and uniqueness of
/// orthosupplements and the zero-one law, plus that index 0 is neutral.
/// Returns the first violation, or nothing for a valid table.
std::optional<ValidationError> find_violation(const EffectAlgebraTable& table);

/// Validates `table` and derives its order structure. Throws ValidationError.
CheckedEffectAlgebra validate(EffectAlgebraTable table);

bool leq(const CheckedEffectAlgebra& e, Element x, Element y);
Element ortho(const CheckedEffectAlgebra& e, Element x);

/// {z : x <= z <= y}, ascending. Empty when x is not below y.
std::vector<Element> interval(const CheckedEffectAlgebra& e, Element x, Element y);

/// n-fold sum of x, folded from the left; nothing once a partial sum is undefined.
std::optional<Element> multiple(const CheckedEffectAlgebra& e, Element x, int n);

/// Largest n >= 1 with multiple(x, n) defined. Throws ZeroElementError for x = 0.
int isotropy_index(const CheckedEffectAlgebra& e, Element x);

/// x is sharp iff 0 is the only common lower bound of x and x'.
bool is_sharp(const CheckedEffectAlgebra& e, Element x);
std::vector<Element> sharp_set(const CheckedEffectAlgebra& e);
bool has_trivial_sharps(const CheckedEffectAlgebra& e);

/// Greatest lower bound, taken literally: a common lower bound that
/// dominates every other common lower bound.
std::optional<Element> meet(const CheckedEffectAlgebra& e, Element x, Element y);
std::optional<Element> join(const CheckedEffectAlgebra& e, Element x, Element y);
bool is_lattice(const CheckedEffectAlgebra& e);

/// Pairs whose first element is a meet-less (or join-less) pair, if any.
std::optional<std::pair<Element, Element>> find_non_lattice_pair(const CheckedEffectAlgebra& e);

/// Cover relation of the induced order, in lexicographic order.
std::vector<std::pair<Element, Element>> hasse_covers(const CheckedEffectAlgebra& e);

/// Relabels a table: element x becomes perm[x]. perm must fix 0.
EffectAlgebraTable relabel(const EffectAlgebraTable& table, std::span<const Element> perm);

}  // namespace effectkit

#endif  // EFFECTKIT_ALGEBRA_HPP
