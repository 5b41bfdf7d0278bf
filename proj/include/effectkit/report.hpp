#ifndef EFFECTKIT_REPORT_HPP
#define EFFECTKIT_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "effectkit/algebra.hpp"
#include "effectkit/lemmas.hpp"
#include "effectkit/structure.hpp"

namespace effectkit {

/// Flags and order-theoretic data of one algebra, as printed by `analyze`.
struct AnalysisReport {
    int size = 0;
    Element one = 0;
    std::vector<Element> atoms;
    std::vector<Element> ortho;
    std::vector<Element> sharp;
    bool homogeneous = false;
    std::optional<HomogeneityWitness> homogeneity_witness;
    bool lattice = false;
    /// Isotropy index of each atom, in atom order.
    std::vector<int> isotropy;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyze(const CheckedEffectAlgebra& e);

std::string to_text(const AnalysisReport& report);
std::string to_json(const AnalysisReport& report);
/// Inverse of to_json. Throws ParseError on malformed input.
AnalysisReport analysis_from_json(const std::string& text);

std::string to_json(const ChainDecomposition& d);
std::string to_json(const std::vector<LemmaReport>& reports);

/// DOT digraph of the cover relation; 0 and the unit are labeled "0" and "1".
std::string hasse_dot(const CheckedEffectAlgebra& e);

}  // namespace effectkit

#endif  // EFFECTKIT_REPORT_HPP
