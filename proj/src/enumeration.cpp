#include "effectkit/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

#include "effectkit/lemmas.hpp"
#include "effectkit/serialize.hpp"
#include "effectkit/structure.hpp"

namespace effectkit {

namespace {

using Cell = std::int8_t;
constexpr Cell kUnassigned = -2;
constexpr Cell kNone = static_cast<Cell>(kUndefined);
constexpr int K = kSearchCapacity;

// Depth-first assignment of the free cells of a partial sum table.
//
// Row 0 (x + 0 = x) and the unit row (1 + x undefined for x != 0) are
// fixed up front. The free cells are the upper triangle over the interior
// elements, visited row-major. Commutativity holds by symmetric storage,
// cancellation by keeping every row injective, and each completed row must
// contain the unit exactly once. Associativity is checked on the decided
// part of the table after every assignment, so every leaf is a valid table.
class TableSearch {
public:
    TableSearch(int n, Element unit, bool pruning) : n_(n), unit_(unit), pruning_(pruning)
    {
        s_.fill(kUnassigned);
        used_.fill(0);
        open_.fill(0);
        for (Element x = 0; x < n_; ++x) {
            set(0, x, static_cast<Cell>(x));
            if (x != 0)
                set(unit_, x, kNone);
        }
        for (Element x = 0; x < n_; ++x) {
            used_[static_cast<std::size_t>(x)] = bit(x);  // x + 0 = x
            if (x == 0 || x == unit_)
                used_[static_cast<std::size_t>(x)] |= bit(x == 0 ? unit_ : x);
        }
        for (Element x = 1; x < n_; ++x)
            if (x != unit_)
                interior_.push_back(x);
        for (std::size_t i = 0; i < interior_.size(); ++i)
            for (std::size_t j = i; j < interior_.size(); ++j) {
                cells_.emplace_back(interior_[i], interior_[j]);
                ++open_[static_cast<std::size_t>(interior_[i])];
                if (i != j)
                    ++open_[static_cast<std::size_t>(interior_[j])];
            }
    }

    /// Values the first free cell may take; empty when there are no free cells.
    std::vector<Cell> first_cell_domain() const
    {
        if (cells_.empty())
            return {};
        return domain(cells_.front().first, cells_.front().second);
    }

    /// Explores the subtree with the first free cell fixed to `first`
    /// (or the whole tree when there are no free cells).
    void run(std::optional<Cell> first, std::set<std::string>& out)
    {
        out_ = &out;
        if (cells_.empty()) {
            leaf();
            return;
        }
        try_value(0, *first);
    }

private:
    static std::uint32_t bit(int v) { return std::uint32_t{1} << v; }

    static std::size_t index(Element a, Element b)
    {
        return static_cast<std::size_t>(static_cast<unsigned>(a) * K + static_cast<unsigned>(b)) % (K * K);
    }
    Cell get(Element a, Element b) const { return s_[index(a, b)]; }
    void set(Element a, Element b, Cell v)
    {
        s_[index(a, b)] = v;
        s_[index(b, a)] = v;
    }

    std::vector<Cell> domain(Element i, Element j) const
    {
        std::vector<Cell> values{kNone};
        for (Element v = 1; v < n_; ++v)
            if (v != i && v != j)
                values.push_back(static_cast<Cell>(v));
        return values;
    }

    // b + c and a + (b + c) defined force a + b and (a + b) + c defined and equal.
    // Unassigned cells are optimistic.
    bool triple_ok(Element a, Element b, Element c) const
    {
        const Cell bc = get(b, c);
        if (bc < 0)
            return true;
        const Cell right = get(a, bc);
        if (right < 0)
            return true;
        const Cell ab = get(a, b);
        if (ab == kNone)
            return false;
        if (ab == kUnassigned)
            return true;
        const Cell left = get(ab, c);
        return left == kUnassigned || left == right;
    }

    // Only triples that read cell {i, j} can have changed status: as b + c,
    // as a + b, as a + (b + c), or as (a + b) + c.
    bool associative_around(Element i, Element j) const
    {
        for (Element x = 0; x < n_; ++x)
            if (!triple_ok(x, i, j) || !triple_ok(x, j, i) || !triple_ok(i, j, x) || !triple_ok(j, i, x))
                return false;
        for (Element a = 0; a < n_; ++a)
            for (Element b = 0; b < n_; ++b) {
                const Cell ab = get(a, b);
                if (ab == static_cast<Cell>(j) && (!triple_ok(i, a, b) || !triple_ok(a, b, i)))
                    return false;
                if (ab == static_cast<Cell>(i) && (!triple_ok(j, a, b) || !triple_ok(a, b, j)))
                    return false;
            }
        return true;
    }

    bool row_complete_ok(Element x) const
    {
        return open_[static_cast<std::size_t>(x)] != 0 || (used_[static_cast<std::size_t>(x)] & bit(unit_)) != 0;
    }

    void try_value(std::size_t k, Cell v)
    {
        const auto [i, j] = cells_[k];
        if (pruning_ && i == j && v == kNone && k > 0) {
            // Interior elements with x + x defined come after those without.
            const Element prev = i - 1;
            if (get(prev, prev) != kNone)
                return;
        }
        const std::uint32_t mask = v >= 0 ? bit(v) : 0;
        auto& used_i = used_[static_cast<std::size_t>(i)];
        auto& used_j = used_[static_cast<std::size_t>(j)];
        if ((used_i & mask) || (used_j & mask))
            return;

        set(i, j, v);
        used_i |= mask;
        used_j |= mask;
        --open_[static_cast<std::size_t>(i)];
        if (i != j)
            --open_[static_cast<std::size_t>(j)];

        if (row_complete_ok(i) && row_complete_ok(j) && associative_around(i, j)) {
            if (k + 1 == cells_.size())
                leaf();
            else {
                const auto [ni, nj] = cells_[k + 1];
                for (Cell next : domain(ni, nj))
                    try_value(k + 1, next);
            }
        }

        ++open_[static_cast<std::size_t>(i)];
        if (i != j)
            ++open_[static_cast<std::size_t>(j)];
        used_i &= ~mask;
        used_j &= ~mask;
        set(i, j, kUnassigned);
    }

    EffectAlgebraTable to_table() const
    {
        auto t = EffectAlgebraTable::undefined(n_, unit_);
        for (Element a = 0; a < n_; ++a)
            for (Element b = 0; b < n_; ++b)
                t.at(a, b) = get(a, b);
        return t;
    }

    // Relabeling-invariant key of an interior element; the diagonal flag
    // comes first so the key order refines the order enforced in try_value.
    std::array<int, 4> element_key(Element x) const
    {
        std::array<int, 4> key{get(x, x) != kNone ? 1 : 0, 1, 0, 0};
        Element acc = x;
        while ((acc = get(acc, x)) >= 0)
            ++key[1];
        std::array<char, K * K> leq{};
        for (Element a = 0; a < n_; ++a)
            for (Element c = 0; c < n_; ++c)
                if (const Cell s = get(a, c); s >= 0)
                    leq[static_cast<std::size_t>(a * K + s)] = 1;
        for (Element y = 0; y < n_; ++y) {
            key[2] += leq[static_cast<std::size_t>(y * K + x)];
            key[3] += leq[static_cast<std::size_t>(x * K + y)];
        }
        return key;
    }

    void leaf()
    {
        if (pruning_)
            for (std::size_t i = 1; i < interior_.size(); ++i)
                if (element_key(interior_[i - 1]) > element_key(interior_[i]))
                    return;
        out_->insert(serialize_table(canonical_table(to_table())));
    }

    int n_;
    Element unit_;
    bool pruning_;
    std::array<Cell, K * K> s_{};
    std::array<std::uint32_t, K> used_{};
    std::array<int, K> open_{};
    std::vector<Element> interior_;
    std::vector<std::pair<Element, Element>> cells_;
    std::set<std::string>* out_ = nullptr;
};

struct Task {
    Element unit;
    std::optional<Cell> first;
};

std::string fixture_name_path(const std::filesystem::path& dir, const std::string& name)
{
    return (dir / "fixtures" / (name + ".json")).string();
}

void write_file(const std::filesystem::path& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << contents;
}

}  // namespace

SizeTooLarge::SizeTooLarge(int requested, int cap)
    : std::runtime_error("SizeTooLarge: size " + std::to_string(requested) + " exceeds the enumeration cap " +
                         std::to_string(cap))
{
}

int configured_max_size()
{
    if (const char* env = std::getenv("EFFECTKIT_MAX_SIZE")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<int>(std::min<long>(v, kSearchCapacity));
    }
    return kDefaultMaxSize;
}

std::vector<std::string> enumerate_all(int n, const EnumerationOptions& options)
{
    const int cap = std::min(options.max_size, kSearchCapacity);
    if (n > cap)
        throw SizeTooLarge(n, cap);
    if (n < 2)
        throw std::invalid_argument("effect algebras have at least two elements");

    std::vector<Task> tasks;
    for (Element unit = 1; unit < n; ++unit) {
        if (options.symmetry_pruning && unit != n - 1)
            continue;
        auto domain = TableSearch(n, unit, options.symmetry_pruning).first_cell_domain();
        if (domain.empty())
            tasks.push_back({unit, std::nullopt});
        for (Cell v : domain)
            tasks.push_back({unit, v});
    }

    std::vector<std::set<std::string>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();)
            TableSearch(n, tasks[t].unit, options.symmetry_pruning).run(tasks[t].first, results[t]);
    };
    const auto threads = static_cast<std::size_t>(std::max(1, options.parallelism));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < std::min(threads, tasks.size()); ++i)
            pool.emplace_back(worker);
    }

    std::set<std::string> merged;
    for (auto& r : results)
        merged.merge(r);
    return {merged.begin(), merged.end()};
}

SurveyResult run_survey(int max_n, const EnumerationOptions& options)
{
    const int cap = std::min(options.max_size, kSearchCapacity);
    if (max_n > cap)
        throw SizeTooLarge(max_n, cap);

    SurveyResult result;
    auto& notable = result.notable;
    for (int n = 2; n <= max_n; ++n) {
        auto keys = enumerate_all(n, options);
        SurveyRow row;
        row.size = n;
        row.total = static_cast<int>(keys.size());
        for (const auto& key : keys) {
            const auto e = validate(parse_table(key));
            const bool homogeneous = is_homogeneous(e);
            const bool trivial = has_trivial_sharps(e);
            row.homogeneous += homogeneous;
            row.trivial_sharp += trivial;
            if (!homogeneous && !notable.smallest_non_homogeneous)
                notable.smallest_non_homogeneous = e.table();
            if (!homogeneous && trivial && !notable.smallest_trivial_sharp_non_homogeneous)
                notable.smallest_trivial_sharp_non_homogeneous = e.table();
            if (!notable.smallest_non_lattice && !is_lattice(e))
                notable.smallest_non_lattice = e.table();
            if (homogeneous && trivial) {
                ++row.hypothesis_class;
                auto [c2, c3] = verify_C2_C3(e);
                if (c2.verdict == Verdict::Pass && c3.verdict == Verdict::Pass) {
                    ++row.theorem_verified;
                } else {
                    ++row.counterexamples;
                    if (!notable.theorem_counterexample)
                        notable.theorem_counterexample = e.table();
                }
            }
        }
        result.rows.push_back(row);
        result.algebras.emplace(n, std::move(keys));
    }
    return result;
}

std::vector<SurveyRow> survey(int max_n, const EnumerationOptions& options)
{
    return run_survey(max_n, options).rows;
}

NotableAlgebras find_counterexample(int max_n, const EnumerationOptions& options)
{
    return run_survey(max_n, options).notable;
}

std::string survey_tsv(const std::vector<SurveyRow>& rows)
{
    std::ostringstream os;
    os << "size\ttotal\thomogeneous\ttrivial_sharp\thypothesis_class\ttheorem_verified\tcounterexamples\n";
    for (const auto& r : rows)
        os << r.size << '\t' << r.total << '\t' << r.homogeneous << '\t' << r.trivial_sharp << '\t'
           << r.hypothesis_class << '\t' << r.theorem_verified << '\t' << r.counterexamples << '\n';
    return os.str();
}

void write_survey(const SurveyResult& result, const std::filesystem::path& dir)
{
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    for (const auto& [n, keys] : result.algebras) {
        const fs::path sub = dir / ("size_" + std::to_string(n));
        fs::create_directories(sub);
        for (std::size_t i = 0; i < keys.size(); ++i) {
            std::ostringstream name;
            name << std::setw(5) << std::setfill('0') << i << ".json";
            write_file(sub / name.str(), keys[i]);
        }
    }
    write_file(dir / "survey.tsv", survey_tsv(result.rows));

    const std::pair<const char*, const std::optional<EffectAlgebraTable>*> fixtures[] = {
        {"theorem_counterexample", &result.notable.theorem_counterexample},
        {"smallest_non_homogeneous", &result.notable.smallest_non_homogeneous},
        {"smallest_trivial_sharp_non_homogeneous", &result.notable.smallest_trivial_sharp_non_homogeneous},
        {"smallest_non_lattice", &result.notable.smallest_non_lattice},
    };
    bool any = false;
    for (const auto& [name, table] : fixtures)
        any = any || table->has_value();
    if (!any)
        return;
    fs::create_directories(dir / "fixtures");
    for (const auto& [name, table] : fixtures)
        if (table->has_value())
            write_file(fixture_name_path(dir, name), serialize_table(**table));
}

}  // namespace effectkit
