#include "effectkit/lemmas.hpp"

#include <algorithm>
#include <sstream>

#include "effectkit/structure.hpp"

namespace effectkit {

namespace {

LemmaReport pass(LemmaId id) { return {id, Verdict::Pass, {}}; }
LemmaReport not_applicable(LemmaId id) { return {id, Verdict::NotApplicable, {}}; }
LemmaReport fail(LemmaId id, std::vector<int> witness) { return {id, Verdict::Fail, std::move(witness)}; }

bool in_interval(const CheckedEffectAlgebra& e, Element lo, Element x, Element hi)
{
    return e.leq(lo, x) && e.leq(x, hi);
}

bool in_atom_interval(const CheckedEffectAlgebra& e, Element atom, Element x)
{
    return in_interval(e, atom, x, e.ortho(atom));
}

// Some b != 0 with b <= b' and x in [b, b'].
std::optional<Element> interval_witness(const CheckedEffectAlgebra& e, Element x)
{
    for (Element b = 1; b < e.size(); ++b)
        if (e.leq(b, e.ortho(b)) && in_interval(e, b, x, e.ortho(b)))
            return b;
    return std::nullopt;
}

bool non_sharp_directly(const CheckedEffectAlgebra& e, Element x)
{
    for (Element b = 1; b < e.size(); ++b)
        if (e.leq(b, x) && e.leq(b, e.ortho(x)))
            return true;
    return false;
}

// 0*a, 1*a, ..., up to the largest defined multiple.
std::vector<Element> multiples_of(const CheckedEffectAlgebra& e, Element a)
{
    std::vector<Element> out{0};
    Element acc = 0;
    for (;;) {
        acc = e.sum(acc, a);
        if (acc == kUndefined)
            return out;
        out.push_back(acc);
    }
}

std::vector<Element> down_set(const CheckedEffectAlgebra& e, Element x)
{
    return interval(e, 0, x);
}

bool hypotheses_hold(const CheckedEffectAlgebra& e)
{
    return has_trivial_sharps(e) && is_homogeneous(e);
}

bool splits(const CheckedEffectAlgebra& e, Element u, Element v1, Element v2)
{
    for (Element u1 = 0; u1 < e.size(); ++u1) {
        if (!e.leq(u1, v1) || !e.leq(u1, u))
            continue;
        for (Element u2 = 0; u2 < e.size(); ++u2)
            if (e.leq(u2, v2) && e.sum(u1, u2) == u)
                return true;
    }
    return false;
}

bool is_premise_of_homogeneity(const CheckedEffectAlgebra& e, Element u, Element v1, Element v2)
{
    Element s = e.sum(v1, v2);
    return s != kUndefined && in_interval(e, u, s, e.ortho(u));
}

}  // namespace

std::string_view to_string(LemmaId id)
{
    switch (id) {
    case LemmaId::L14: return "L14";
    case LemmaId::L15: return "L15";
    case LemmaId::L20: return "L20";
    case LemmaId::L22: return "L22";
    case LemmaId::L30: return "L30";
    case LemmaId::L31: return "L31";
    case LemmaId::L32: return "L32";
    case LemmaId::L33: return "L33";
    case LemmaId::T36: return "T36";
    case LemmaId::C1: return "C1";
    case LemmaId::C2: return "C2";
    case LemmaId::C3: return "C3";
    }
    return "?";
}

std::string_view to_string(Verdict verdict)
{
    switch (verdict) {
    case Verdict::Pass: return "Pass";
    case Verdict::Fail: return "Fail";
    case Verdict::NotApplicable: return "NotApplicable";
    }
    return "?";
}

std::string render(const LemmaReport& report)
{
    std::ostringstream os;
    os << to_string(report.id) << ' ' << to_string(report.verdict);
    if (report.verdict == Verdict::Fail) {
        os << " witness=(";
        for (std::size_t i = 0; i < report.witness.size(); ++i)
            os << (i ? "," : "") << report.witness[i];
        os << ')';
    }
    return os.str();
}

std::optional<HomogeneityWitness> find_homogeneity_violation(const CheckedEffectAlgebra& e)
{
    const int n = e.size();
    for (Element u = 0; u < n; ++u)
        for (Element v1 = 0; v1 < n; ++v1)
            for (Element v2 = 0; v2 < n; ++v2)
                if (is_premise_of_homogeneity(e, u, v1, v2) && !splits(e, u, v1, v2))
                    return HomogeneityWitness{u, v1, v2};
    return std::nullopt;
}

bool is_homogeneous(const CheckedEffectAlgebra& e)
{
    return !find_homogeneity_violation(e).has_value();
}

bool witnesses_non_homogeneity(const CheckedEffectAlgebra& e, const HomogeneityWitness& w)
{
    for (Element x : {w.u, w.v1, w.v2})
        if (x < 0 || x >= e.size())
            return false;
    if (!is_premise_of_homogeneity(e, w.u, w.v1, w.v2))
        return false;
    // Exhaustive over all pairs, without using the order-based shortcut in splits().
    for (Element u1 = 0; u1 < e.size(); ++u1)
        for (Element u2 = 0; u2 < e.size(); ++u2)
            if (e.sum(u1, u2) == w.u && e.leq(u1, w.v1) && e.leq(u2, w.v2))
                return false;
    return true;
}

LemmaReport check_L22(const CheckedEffectAlgebra& e, Hypotheses mode)
{
    if (mode == Hypotheses::Enforce && !is_homogeneous(e))
        return not_applicable(LemmaId::L22);
    for (Element a : e.atoms()) {
        if (!e.leq(a, e.ortho(a)))
            continue;
        for (Element v1 = 0; v1 < e.size(); ++v1)
            for (Element v2 = 0; v2 < e.size(); ++v2) {
                Element s = e.sum(v1, v2);
                if (s == kUndefined || !in_atom_interval(e, a, s))
                    continue;
                if (!e.leq(a, v1) && !e.leq(a, v2))
                    return fail(LemmaId::L22, {a, v1, v2});
            }
    }
    return pass(LemmaId::L22);
}

std::vector<LemmaReport> check_L14_L15(const CheckedEffectAlgebra& e)
{
    LemmaReport l14 = pass(LemmaId::L14);
    for (Element x = 0; x < e.size(); ++x)
        if (!is_sharp(e, x) != interval_witness(e, x).has_value()) {
            l14 = fail(LemmaId::L14, {x});
            break;
        }

    LemmaReport l15 = pass(LemmaId::L15);
    for (Element a : e.atoms())
        if (!is_sharp(e, a) && !e.leq(a, e.ortho(a))) {
            l15 = fail(LemmaId::L15, {a});
            break;
        }
    return {l14, l15};
}

LemmaReport check_L20(const CheckedEffectAlgebra& e, Hypotheses mode)
{
    if (mode == Hypotheses::Enforce && !has_trivial_sharps(e))
        return not_applicable(LemmaId::L20);
    for (Element x = 1; x < e.size(); ++x) {
        if (x == e.one())
            continue;
        bool covered = std::any_of(e.atoms().begin(), e.atoms().end(),
                                   [&](Element a) { return in_atom_interval(e, a, x); });
        if (!covered)
            return fail(LemmaId::L20, {x});
    }
    return pass(LemmaId::L20);
}

std::vector<LemmaReport> check_L30_L31_L32(const CheckedEffectAlgebra& e, Hypotheses mode)
{
    if (mode == Hypotheses::Enforce && !hypotheses_hold(e))
        return {not_applicable(LemmaId::L30), not_applicable(LemmaId::L31), not_applicable(LemmaId::L32)};

    LemmaReport l30 = pass(LemmaId::L30);
    LemmaReport l31 = pass(LemmaId::L31);
    LemmaReport l32 = pass(LemmaId::L32);
    for (Element ai : e.atoms()) {
        const auto mult = multiples_of(e, ai);
        for (int n = 1; n < static_cast<int>(mult.size()); ++n) {
            const Element m = mult[static_cast<std::size_t>(n)];
            if (l30.verdict == Verdict::Pass)
                for (Element aj : e.atoms())
                    if (aj != ai && in_atom_interval(e, aj, m)) {
                        l30 = fail(LemmaId::L30, {ai, aj, n});
                        break;
                    }
            if (l31.verdict == Verdict::Pass && m != e.one() && !in_atom_interval(e, ai, m))
                l31 = fail(LemmaId::L31, {ai, n});
        }
        if (l32.verdict == Verdict::Pass && std::find(mult.begin(), mult.end(), e.ortho(ai)) == mult.end())
            l32 = fail(LemmaId::L32, {ai});
    }
    return {l30, l31, l32};
}

std::vector<LemmaReport> check_T36_L33_C1(const CheckedEffectAlgebra& e, Hypotheses mode)
{
    if (mode == Hypotheses::Enforce && !hypotheses_hold(e))
        return {not_applicable(LemmaId::L33), not_applicable(LemmaId::T36), not_applicable(LemmaId::C1)};

    LemmaReport l33 = pass(LemmaId::L33);
    LemmaReport t36 = pass(LemmaId::T36);
    for (Element ai : e.atoms()) {
        const auto mult = multiples_of(e, ai);
        for (int n = 1; n < static_cast<int>(mult.size()); ++n) {
            const Element m = mult[static_cast<std::size_t>(n)];
            std::vector<Element> expected(mult.begin(), mult.begin() + n + 1);
            std::sort(expected.begin(), expected.end());
            const auto below = down_set(e, m);
            if (below == expected)
                continue;
            if (l33.verdict == Verdict::Pass) {
                bool other_atom = std::any_of(below.begin(), below.end(),
                                              [&](Element z) { return z != ai && e.is_atom(z); });
                if (!other_atom)
                    l33 = fail(LemmaId::L33, {ai, n});
            }
            if (t36.verdict == Verdict::Pass && e.leq(m, e.ortho(ai))) {
                Element stray = *std::find_if(below.begin(), below.end(), [&](Element z) {
                    return !std::binary_search(expected.begin(), expected.end(), z);
                });
                t36 = fail(LemmaId::T36, {ai, n, stray});
            }
        }
    }

    LemmaReport c1 = pass(LemmaId::C1);
    for (Element ai : e.atoms())
        for (Element aj : e.atoms()) {
            if (ai == aj || c1.verdict == Verdict::Fail)
                continue;
            for (Element x : interval(e, ai, e.ortho(ai)))
                for (Element y : interval(e, aj, e.ortho(aj)))
                    if (c1.verdict == Verdict::Pass && e.leq(x, y))
                        c1 = fail(LemmaId::C1, {ai, aj, x, y});
        }
    return {l33, t36, c1};
}

bool confirms_failure(const CheckedEffectAlgebra& e, const LemmaReport& report)
{
    if (report.verdict != Verdict::Fail)
        return false;
    const auto& w = report.witness;
    auto element = [&](std::size_t i) { return i < w.size() && w[i] >= 0 && w[i] < e.size(); };
    auto atom = [&](std::size_t i) { return element(i) && e.is_atom(w[i]); };
    auto arity = [&](std::size_t k) { return w.size() == k; };

    switch (report.id) {
    case LemmaId::L14: {
        if (!arity(1) || !element(0))
            return false;
        bool direct = non_sharp_directly(e, w[0]);
        bool via_interval = interval_witness(e, w[0]).has_value();
        return direct != via_interval;
    }
    case LemmaId::L15:
        return arity(1) && atom(0) && non_sharp_directly(e, w[0]) && !e.leq(w[0], e.ortho(w[0]));
    case LemmaId::L20: {
        if (!arity(1) || !element(0) || w[0] == 0 || w[0] == e.one())
            return false;
        for (Element a = 1; a < e.size(); ++a)
            if (e.is_atom(a) && in_atom_interval(e, a, w[0]))
                return false;
        return true;
    }
    case LemmaId::L22: {
        if (!arity(3) || !atom(0) || !element(1) || !element(2))
            return false;
        Element a = w[0];
        Element s = e.sum(w[1], w[2]);
        return e.leq(a, e.ortho(a)) && s != kUndefined && in_atom_interval(e, a, s) && !e.leq(a, w[1]) &&
               !e.leq(a, w[2]);
    }
    case LemmaId::L30: {
        if (!arity(3) || !atom(0) || !atom(1) || w[0] == w[1] || w[2] < 1)
            return false;
        auto m = multiple(e, w[0], w[2]);
        return m && in_atom_interval(e, w[1], *m);
    }
    case LemmaId::L31: {
        if (!arity(2) || !atom(0) || w[1] < 1)
            return false;
        auto m = multiple(e, w[0], w[1]);
        return m && *m != e.one() && !in_atom_interval(e, w[0], *m);
    }
    case LemmaId::L32: {
        if (!arity(1) || !atom(0))
            return false;
        for (int n = 0; n <= e.size(); ++n)
            if (multiple(e, w[0], n) == std::optional<Element>(e.ortho(w[0])))
                return false;
        return true;
    }
    case LemmaId::L33: {
        if (!arity(2) || !atom(0) || w[1] < 1)
            return false;
        auto m = multiple(e, w[0], w[1]);
        if (!m)
            return false;
        bool larger = false;
        for (Element z = 0; z < e.size(); ++z) {
            if (!e.leq(z, *m))
                continue;
            bool is_multiple = false;
            for (int k = 0; k <= w[1]; ++k)
                is_multiple = is_multiple || multiple(e, w[0], k) == std::optional<Element>(z);
            larger = larger || !is_multiple;
            if (z != w[0] && e.is_atom(z))
                return false;
        }
        return larger;
    }
    case LemmaId::T36: {
        if (!arity(3) || !atom(0) || w[1] < 1 || !element(2))
            return false;
        auto m = multiple(e, w[0], w[1]);
        if (!m || !e.leq(*m, e.ortho(w[0])) || !e.leq(w[2], *m))
            return false;
        for (int k = 0; k <= w[1]; ++k)
            if (multiple(e, w[0], k) == std::optional<Element>(w[2]))
                return false;
        return true;
    }
    case LemmaId::C1:
        return arity(4) && atom(0) && atom(1) && w[0] != w[1] && element(2) && element(3) &&
               in_atom_interval(e, w[0], w[2]) && in_atom_interval(e, w[1], w[3]) && e.leq(w[2], w[3]);
    case LemmaId::C2:
        return verify_C2_C3(e, Hypotheses::Ignore).first.verdict == Verdict::Fail;
    case LemmaId::C3:
        return arity(2) && element(0) && element(1) && (!meet(e, w[0], w[1]) || !join(e, w[0], w[1]));
    }
    return false;
}

}  // namespace effectkit
