#include "effectkit/structure.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "effectkit/constructors.hpp"
#include "effectkit/serialize.hpp"

namespace effectkit {

namespace {

std::string describe(DecomposeErrorKind kind, const std::vector<int>& detail)
{
    std::ostringstream os;
    os << to_string(kind) << " witness=(";
    for (std::size_t i = 0; i < detail.size(); ++i)
        os << (i ? "," : "") << detail[i];
    os << ')';
    return os.str();
}

[[noreturn]] void violation(std::vector<int> detail)
{
    throw DecomposeError(DecomposeErrorKind::TheoremViolation, std::move(detail));
}

// Chain arithmetic through the labeling must reproduce the table exactly.
void check_labeling(const CheckedEffectAlgebra& e, const ChainDecomposition& d)
{
    auto is_bottom = [](const BranchLabel& l) { return l.multiple == 0; };
    auto length = [&](const BranchLabel& l) { return d.chain_lengths[static_cast<std::size_t>(l.branch)]; };
    auto is_top = [&](const BranchLabel& l) { return l.multiple == length(l); };

    for (Element x = 0; x < e.size(); ++x)
        for (Element y = 0; y < e.size(); ++y) {
            const BranchLabel& lx = d.labeling[static_cast<std::size_t>(x)];
            const BranchLabel& ly = d.labeling[static_cast<std::size_t>(y)];
            std::optional<Element> expected;
            if (is_bottom(lx))
                expected = y;
            else if (is_bottom(ly))
                expected = x;
            else if (lx.branch == ly.branch && !is_top(lx) && !is_top(ly) && lx.multiple + ly.multiple <= length(lx)) {
                int k = lx.multiple + ly.multiple;
                expected = k == length(lx) ? e.one() : kUndefined;
                if (k < length(lx))
                    for (Element z = 0; z < e.size(); ++z)
                        if (d.labeling[static_cast<std::size_t>(z)] == BranchLabel{lx.branch, k})
                            expected = z;
            }
            Element actual = e.sum(x, y);
            if (actual != expected.value_or(kUndefined))
                violation({x, y});
        }
}

struct ElementSignature {
    std::array<int, 7> values{};
    friend auto operator<=>(const ElementSignature&, const ElementSignature&) = default;
};

std::vector<ElementSignature> signatures(const CheckedEffectAlgebra& e)
{
    std::vector<ElementSignature> out(static_cast<std::size_t>(e.size()));
    for (Element x = 0; x < e.size(); ++x) {
        auto& v = out[static_cast<std::size_t>(x)].values;
        v[0] = x == 0 ? 0 : isotropy_index(e, x);
        v[1] = e.is_atom(x) ? 1 : 0;
        v[2] = x == e.one() ? 1 : 0;
        v[3] = e.leq(x, e.ortho(x)) ? 1 : 0;
        for (Element y = 0; y < e.size(); ++y) {
            v[4] += e.leq(y, x) ? 1 : 0;
            v[5] += e.leq(x, y) ? 1 : 0;
            v[6] += e.orthogonal(x, y) ? 1 : 0;
        }
    }
    return out;
}

class IsomorphismSearch {
public:
    IsomorphismSearch(const CheckedEffectAlgebra& e, const CheckedEffectAlgebra& f)
        : e_(e), f_(f), sig_e_(signatures(e)), sig_f_(signatures(f))
    {
    }

    std::optional<std::vector<Element>> run()
    {
        if (e_.size() != f_.size() || e_.atoms().size() != f_.atoms().size())
            return std::nullopt;
        auto sorted_e = sig_e_;
        auto sorted_f = sig_f_;
        std::sort(sorted_e.begin(), sorted_e.end());
        std::sort(sorted_f.begin(), sorted_f.end());
        if (sorted_e != sorted_f)
            return std::nullopt;

        const auto n = static_cast<std::size_t>(e_.size());
        map_.assign(n, kUndefined);
        inverse_.assign(n, kUndefined);
        order_.clear();
        order_.push_back(e_.one());
        for (Element x = 1; x < e_.size(); ++x)
            if (x != e_.one())
                order_.push_back(x);
        map_[0] = 0;
        inverse_[0] = 0;
        if (!extend(0))
            return std::nullopt;
        return map_;
    }

private:
    bool consistent(Element x) const
    {
        const Element hx = map_[static_cast<std::size_t>(x)];
        for (Element a = 0; a < e_.size(); ++a) {
            const Element ha = map_[static_cast<std::size_t>(a)];
            if (ha == kUndefined)
                continue;
            const Element se = e_.sum(x, a);
            const Element sf = f_.sum(hx, ha);
            if ((se == kUndefined) != (sf == kUndefined))
                return false;
            if (se == kUndefined)
                continue;
            const Element mapped = map_[static_cast<std::size_t>(se)];
            if (mapped != kUndefined && mapped != sf)
                return false;
            const Element pre = inverse_[static_cast<std::size_t>(sf)];
            if (pre != kUndefined && pre != se)
                return false;
        }
        return true;
    }

    bool extend(std::size_t depth)
    {
        if (depth == order_.size())
            return true;
        const Element x = order_[depth];
        for (Element y = 1; y < f_.size(); ++y) {
            if (inverse_[static_cast<std::size_t>(y)] != kUndefined ||
                sig_e_[static_cast<std::size_t>(x)] != sig_f_[static_cast<std::size_t>(y)])
                continue;
            map_[static_cast<std::size_t>(x)] = y;
            inverse_[static_cast<std::size_t>(y)] = x;
            if (consistent(x) && extend(depth + 1))
                return true;
            map_[static_cast<std::size_t>(x)] = kUndefined;
            inverse_[static_cast<std::size_t>(y)] = kUndefined;
        }
        return false;
    }

    const CheckedEffectAlgebra& e_;
    const CheckedEffectAlgebra& f_;
    std::vector<ElementSignature> sig_e_;
    std::vector<ElementSignature> sig_f_;
    std::vector<Element> order_;
    std::vector<Element> map_;
    std::vector<Element> inverse_;
};

}  // namespace

std::string_view to_string(DecomposeErrorKind kind)
{
    switch (kind) {
    case DecomposeErrorKind::NotTrivialSharps: return "NotTrivialSharps";
    case DecomposeErrorKind::NotHomogeneous: return "NotHomogeneous";
    case DecomposeErrorKind::TheoremViolation: return "TheoremViolation";
    }
    return "?";
}

DecomposeError::DecomposeError(DecomposeErrorKind kind, std::vector<int> detail)
    : std::runtime_error(describe(kind, detail)), kind_(kind), detail_(std::move(detail))
{
}

ChainDecomposition decompose(const CheckedEffectAlgebra& e)
{
    for (Element x = 1; x < e.size(); ++x)
        if (x != e.one() && is_sharp(e, x))
            throw DecomposeError(DecomposeErrorKind::NotTrivialSharps, {x});
    if (auto w = find_homogeneity_violation(e))
        throw DecomposeError(DecomposeErrorKind::NotHomogeneous, {w->u, w->v1, w->v2});

    ChainDecomposition d;
    d.labeling.assign(static_cast<std::size_t>(e.size()), BranchLabel{});
    if (e.size() == 2) {
        d.chain_lengths = {1};
        d.labeling[static_cast<std::size_t>(e.one())] = {0, 1};
        return d;
    }

    struct Branch {
        Element atom;
        int length;
    };
    std::vector<Branch> branches;
    for (Element a : e.atoms()) {
        const int len = isotropy_index(e, a);
        if (multiple(e, a, len) != std::optional<Element>(e.one()))
            violation({a, len});
        branches.push_back({a, len});
    }
    std::stable_sort(branches.begin(), branches.end(),
                     [](const Branch& x, const Branch& y) { return x.length < y.length; });

    std::vector<char> covered(static_cast<std::size_t>(e.size()), 0);
    for (std::size_t b = 0; b < branches.size(); ++b) {
        const auto [atom, len] = branches[b];
        // The chain interval [a, a'] must be exactly {a, 2a, ..., (len-1)a}.
        std::vector<Element> chain_part;
        for (int k = 1; k < len; ++k)
            chain_part.push_back(*multiple(e, atom, k));
        auto sorted = chain_part;
        std::sort(sorted.begin(), sorted.end());
        if (interval(e, atom, e.ortho(atom)) != sorted)
            violation({atom});
        for (int k = 1; k < len; ++k) {
            const Element x = chain_part[static_cast<std::size_t>(k - 1)];
            if (covered[static_cast<std::size_t>(x)])
                violation({x});
            covered[static_cast<std::size_t>(x)] = 1;
            d.labeling[static_cast<std::size_t>(x)] = {static_cast<int>(b), k};
        }
        d.chain_lengths.push_back(len);
    }
    for (Element x = 1; x < e.size(); ++x)
        if (x != e.one() && !covered[static_cast<std::size_t>(x)])
            violation({x});
    d.labeling[static_cast<std::size_t>(e.one())] = {0, d.chain_lengths.front()};

    check_labeling(e, d);
    return d;
}

std::string render(const ChainDecomposition& d)
{
    std::ostringstream os;
    os << "chains: [";
    for (std::size_t i = 0; i < d.chain_lengths.size(); ++i)
        os << (i ? ", " : "") << d.chain_lengths[i];
    os << "]\n";
    for (std::size_t x = 0; x < d.labeling.size(); ++x)
        os << x << " -> " << d.labeling[x].branch << '.' << d.labeling[x].multiple << '\n';
    return os.str();
}

std::optional<std::vector<Element>> find_isomorphism(const CheckedEffectAlgebra& e, const CheckedEffectAlgebra& f)
{
    return IsomorphismSearch(e, f).run();
}

bool is_isomorphic(const CheckedEffectAlgebra& e, const CheckedEffectAlgebra& f)
{
    return find_isomorphism(e, f).has_value();
}

EffectAlgebraTable canonical_table(const EffectAlgebraTable& table)
{
    const int n = table.size;
    if (n <= 2)
        return relabel(table, std::vector<Element>{0, 1});

    // Labels 2.. go to the interior in signature order; only elements with
    // equal signatures are permuted against each other.
    const auto sig = signatures(validate(table));
    std::vector<Element> order;
    for (Element x = 1; x < n; ++x)
        if (x != table.one)
            order.push_back(x);
    std::sort(order.begin(), order.end(), [&](Element a, Element b) {
        return std::pair(sig[static_cast<std::size_t>(a)], a) < std::pair(sig[static_cast<std::size_t>(b)], b);
    });
    std::vector<std::size_t> group_start{0};
    for (std::size_t i = 1; i < order.size(); ++i)
        if (sig[static_cast<std::size_t>(order[i])] != sig[static_cast<std::size_t>(order[i - 1])])
            group_start.push_back(i);
    group_start.push_back(order.size());

    auto advance = [&] {
        for (std::size_t g = group_start.size() - 1; g-- > 0;)
            if (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(group_start[g]),
                                      order.begin() + static_cast<std::ptrdiff_t>(group_start[g + 1])))
                return true;
        return false;
    };

    std::vector<Element> perm(static_cast<std::size_t>(n));
    std::vector<Element> inverse(static_cast<std::size_t>(n));
    perm[0] = 0;
    inverse[0] = 0;
    perm[static_cast<std::size_t>(table.one)] = 1;
    inverse[1] = table.one;

    // Rows 0 and 1 are the same for every relabeling, so only rows 2.. compete.
    std::vector<Element> best;
    std::vector<Element> best_perm;
    do {
        for (std::size_t i = 0; i < order.size(); ++i) {
            perm[static_cast<std::size_t>(order[i])] = static_cast<Element>(i + 2);
            inverse[i + 2] = order[i];
        }
        bool improved = best.empty();
        std::size_t pos = 0;
        for (Element i = 2; i < n; ++i)
            for (Element j = 0; j < n; ++j, ++pos) {
                Element v = table.at(inverse[static_cast<std::size_t>(i)], inverse[static_cast<std::size_t>(j)]);
                Element mapped = v == kUndefined ? kUndefined : perm[static_cast<std::size_t>(v)];
                if (improved) {
                    if (best.size() <= pos)
                        best.push_back(mapped);
                    else
                        best[pos] = mapped;
                    continue;
                }
                if (mapped > best[pos])
                    goto next_permutation;
                if (mapped < best[pos]) {
                    improved = true;
                    best[pos] = mapped;
                }
            }
        if (improved)
            best_perm = perm;
    next_permutation:;
    } while (advance());

    return relabel(table, best_perm);
}

std::string canonical_form(const CheckedEffectAlgebra& e)
{
    return serialize_table(canonical_table(e.table()));
}

std::pair<LemmaReport, LemmaReport> verify_C2_C3(const CheckedEffectAlgebra& e, Hypotheses mode)
{
    if (mode == Hypotheses::Enforce && (!has_trivial_sharps(e) || !is_homogeneous(e)))
        return {{LemmaId::C2, Verdict::NotApplicable, {}}, {LemmaId::C3, Verdict::NotApplicable, {}}};

    LemmaReport c2{LemmaId::C2, Verdict::Pass, {}};
    try {
        const auto d = decompose(e);
        const auto rebuilt = horizontal_sum_of_chains(d.chain_lengths);
        if (!is_isomorphic(e, rebuilt))
            c2 = {LemmaId::C2, Verdict::Fail, d.chain_lengths};
    } catch (const DecomposeError& err) {
        c2 = {LemmaId::C2, Verdict::Fail, err.detail()};
    }

    LemmaReport c3{LemmaId::C3, Verdict::Pass, {}};
    if (auto pair = find_non_lattice_pair(e))
        c3 = {LemmaId::C3, Verdict::Fail, {pair->first, pair->second}};
    return {c2, c3};
}

std::vector<LemmaReport> lemma_suite(const CheckedEffectAlgebra& e)
{
    std::vector<LemmaReport> out = check_L14_L15(e);
    out.push_back(check_L20(e));
    out.push_back(check_L22(e));
    for (auto& r : check_L30_L31_L32(e))
        out.push_back(std::move(r));
    for (auto& r : check_T36_L33_C1(e))
        out.push_back(std::move(r));
    auto [c2, c3] = verify_C2_C3(e);
    out.push_back(std::move(c2));
    out.push_back(std::move(c3));
    return out;
}

}  // namespace effectkit
