#include "effectkit/report.hpp"

#include <sstream>

#include <json.hpp>

#include "effectkit/serialize.hpp"

namespace effectkit {

namespace {

using nlohmann::ordered_json;

template <typename T>
std::string list(const std::vector<T>& values)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < values.size(); ++i)
        os << (i ? ", " : "") << values[i];
    os << ']';
    return os.str();
}

}  // namespace

AnalysisReport analyze(const CheckedEffectAlgebra& e)
{
    AnalysisReport r;
    r.size = e.size();
    r.one = e.one();
    r.atoms = e.atoms();
    for (Element x = 0; x < e.size(); ++x)
        r.ortho.push_back(e.ortho(x));
    r.sharp = sharp_set(e);
    r.homogeneity_witness = find_homogeneity_violation(e);
    r.homogeneous = !r.homogeneity_witness.has_value();
    r.lattice = is_lattice(e);
    for (Element a : r.atoms)
        r.isotropy.push_back(isotropy_index(e, a));
    return r;
}

std::string to_text(const AnalysisReport& r)
{
    std::ostringstream os;
    os << "size: " << r.size << '\n'
       << "one: " << r.one << '\n'
       << "atoms: " << list(r.atoms) << '\n'
       << "ortho: " << list(r.ortho) << '\n'
       << "sharp: " << list(r.sharp) << '\n'
       << "homogeneous: " << (r.homogeneous ? "true" : "false") << '\n';
    if (r.homogeneity_witness)
        os << "homogeneity_witness: "
           << list(std::vector<int>{r.homogeneity_witness->u, r.homogeneity_witness->v1, r.homogeneity_witness->v2})
           << '\n';
    os << "lattice: " << (r.lattice ? "true" : "false") << '\n' << "isotropy: " << list(r.isotropy) << '\n';
    return os.str();
}

std::string to_json(const AnalysisReport& r)
{
    ordered_json j;
    j["size"] = r.size;
    j["one"] = r.one;
    j["atoms"] = r.atoms;
    j["ortho"] = r.ortho;
    j["sharp"] = r.sharp;
    j["homogeneous"] = r.homogeneous;
    if (r.homogeneity_witness)
        j["homogeneity_witness"] = {r.homogeneity_witness->u, r.homogeneity_witness->v1, r.homogeneity_witness->v2};
    else
        j["homogeneity_witness"] = nullptr;
    j["lattice"] = r.lattice;
    j["isotropy"] = r.isotropy;
    return j.dump() + '\n';
}

AnalysisReport analysis_from_json(const std::string& text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError(e.byte, e.what());
    }
    try {
        AnalysisReport r;
        r.size = j.at("size").get<int>();
        r.one = j.at("one").get<Element>();
        r.atoms = j.at("atoms").get<std::vector<Element>>();
        r.ortho = j.at("ortho").get<std::vector<Element>>();
        r.sharp = j.at("sharp").get<std::vector<Element>>();
        r.homogeneous = j.at("homogeneous").get<bool>();
        if (const auto& w = j.at("homogeneity_witness"); !w.is_null()) {
            auto v = w.get<std::vector<Element>>();
            if (v.size() != 3)
                throw ParseError(0, "homogeneity_witness must have three elements");
            r.homogeneity_witness = HomogeneityWitness{v[0], v[1], v[2]};
        }
        r.lattice = j.at("lattice").get<bool>();
        r.isotropy = j.at("isotropy").get<std::vector<int>>();
        return r;
    } catch (const ordered_json::exception& e) {
        throw ParseError(0, e.what());
    }
}

std::string to_json(const ChainDecomposition& d)
{
    ordered_json j;
    j["chains"] = d.chain_lengths;
    j["labeling"] = ordered_json::array();
    for (const auto& l : d.labeling)
        j["labeling"].push_back({l.branch, l.multiple});
    return j.dump() + '\n';
}

std::string to_json(const std::vector<LemmaReport>& reports)
{
    ordered_json j = ordered_json::array();
    for (const auto& r : reports)
        j.push_back({{"id", to_string(r.id)}, {"verdict", to_string(r.verdict)}, {"witness", r.witness}});
    return j.dump() + '\n';
}

std::string hasse_dot(const CheckedEffectAlgebra& e)
{
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n";
    for (Element x = 0; x < e.size(); ++x) {
        std::string label = x == 0 ? "0" : x == e.one() ? "1" : "e" + std::to_string(x);
        os << "  n" << x << " [label=\"" << label << "\"];\n";
    }
    for (const auto& [x, y] : hasse_covers(e))
        os << "  n" << x << " -> n" << y << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace effectkit
