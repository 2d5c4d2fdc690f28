#include "fanocalc/catalog.hpp"

#include "fanocalc/error.hpp"
#include "fanocalc/embedded_table.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace fanocalc {

namespace {

constexpr std::array<const char*, 11> kColumns = {
    "id", "rho", "index", "epsilon", "eps_status", "dp_degrees",
    "non_bpf", "clubsuit", "ci_center", "ell", "description"};

// Number of families per Picard rank (Mori-Mukai; Iskovskikh-Prokhorov).
constexpr std::array<int, 11> kFamilyCount = {0, 17, 36, 31, 13, 3, 1, 1, 1, 1, 1};

struct RankOneEntry {
    int number;
    RankOneDescriptor descriptor;
};

constexpr std::array<RankOneEntry, 17> kRankOne = {{
    {1, {1, 2}},   {2, {1, 3}},   {3, {1, 4}},  {4, {1, 5}},  {5, {1, 6}},  {6, {1, 7}},
    {7, {1, 8}},   {8, {1, 9}},   {9, {1, 10}}, {10, {1, 12}},
    {11, {2, 1}},  {12, {2, 2}},  {13, {2, 3}}, {14, {2, 4}}, {15, {2, 5}},
    {16, {3, 0}},  {17, {4, 0}},
}};

std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t end = line.find(sep, start);
        out.emplace_back(line.substr(start, end == std::string_view::npos ? end : end - start));
        if (end == std::string_view::npos) {
            return out;
        }
        start = end + 1;
    }
}

class RowReader {
public:
    explicit RowReader(std::size_t line) : line_(line) {}

    [[noreturn]] void fail(const std::string& column, const std::string& message) const {
        throw DataFormatError("catalog line " + std::to_string(line_) + ", column " + column +
                              ": " + message);
    }

    int integer(const std::string& column, const std::string& text) const {
        if (text.empty() || text.size() > 6 ||
            !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(c); })) {
            fail(column, "expected a nonnegative integer, got '" + text + "'");
        }
        return std::stoi(text);
    }

    std::optional<int> maybe_integer(const std::string& column, const std::string& text) const {
        if (text == "?") {
            return std::nullopt;
        }
        return integer(column, text);
    }

    bool boolean(const std::string& column, const std::string& text) const {
        if (text == "true") {
            return true;
        }
        if (text == "false") {
            return false;
        }
        fail(column, "expected true or false, got '" + text + "'");
    }

    std::optional<bool> maybe_boolean(const std::string& column, const std::string& text) const {
        if (text == "?") {
            return std::nullopt;
        }
        return boolean(column, text);
    }

private:
    std::size_t line_;
};

FanoFamilyRecord parse_row(const std::vector<std::string>& f, std::size_t line) {
    RowReader in(line);
    FanoFamilyRecord r;
    try {
        r.id = parse_family_id(f[0]);
    } catch (const SyntaxError& e) {
        in.fail("id", e.detail());
    }
    r.rho = in.integer("rho", f[1]);
    if (r.rho != r.id.rho) {
        in.fail("rho", "does not match the identifier " + r.id.str());
    }
    r.index = in.maybe_integer("index", f[2]);

    if (f[4] == "open") {
        r.epsilon_status = EpsilonStatus::Open;
        if (f[3] != "?") {
            in.fail("epsilon", "an open value must be written '?'");
        }
    } else if (f[4] == "known") {
        auto value = parse_rational(f[3]);
        if (!value) {
            in.fail("epsilon", "expected p/q, got '" + f[3] + "'");
        }
        r.epsilon = *value;
    } else {
        in.fail("eps_status", "expected known or open, got '" + f[4] + "'");
    }

    if (f[5] != "-") {
        for (const auto& part : split(f[5], ',')) {
            if (!r.dp_degrees.insert(in.integer("dp_degrees", part)).second) {
                in.fail("dp_degrees", "repeated degree " + part);
            }
        }
    }
    r.non_bpf = in.boolean("non_bpf", f[6]);
    r.clubsuit = in.maybe_boolean("clubsuit", f[7]);
    r.ci_center = in.maybe_boolean("ci_center", f[8]);
    r.ell = in.maybe_integer("ell", f[9]);
    r.description = f[10];
    if (r.description.empty()) {
        in.fail("description", "empty");
    }
    return r;
}

} // namespace

Catalog Catalog::parse(std::string_view tsv) {
    Catalog catalog;
    std::size_t line_no = 0;
    bool header_seen = false;
    for (const auto& raw : split(tsv, '\n')) {
        ++line_no;
        std::string line = raw;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const auto fields = split(line, '\t');
        if (!header_seen) {
            if (fields != std::vector<std::string>(kColumns.begin(), kColumns.end())) {
                throw DataFormatError("catalog line " + std::to_string(line_no) +
                                      ": unexpected header");
            }
            header_seen = true;
            continue;
        }
        if (fields.size() != kColumns.size()) {
            throw DataFormatError("catalog line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(kColumns.size()) + " fields, found " +
                                  std::to_string(fields.size()));
        }
        FanoFamilyRecord record = parse_row(fields, line_no);
        if (catalog.contains(record.id)) {
            throw DataFormatError("catalog line " + std::to_string(line_no) + ": duplicate id " +
                                  record.id.str());
        }
        catalog.records_.push_back(std::move(record));
    }
    if (!header_seen) {
        throw DataFormatError("catalog is empty");
    }
    std::sort(catalog.records_.begin(), catalog.records_.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    return catalog;
}

Catalog Catalog::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataFormatError("cannot read catalog file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

const Catalog& Catalog::standard() {
    static const Catalog catalog = [] {
        if (const char* path = std::getenv("FANOCALC_DATA"); path && *path) {
            return load_file(path);
        }
        return parse(detail::kEmbeddedTable);
    }();
    return catalog;
}

bool Catalog::contains(FamilyId id) const {
    return std::any_of(records_.begin(), records_.end(), [&](const auto& r) { return r.id == id; });
}

const FanoFamilyRecord& Catalog::get(FamilyId id) const {
    auto it = std::lower_bound(records_.begin(), records_.end(), id,
                               [](const auto& r, const FamilyId& key) { return r.id < key; });
    if (it == records_.end() || it->id != id) {
        throw UnknownFamilyError("no family " + id.str() + " in the catalog");
    }
    return *it;
}

const FanoFamilyRecord& Catalog::get(std::string_view id) const {
    return get(parse_family_id(id));
}

std::vector<FanoFamilyRecord> Catalog::list(const FamilyFilter& filter) const {
    std::vector<FanoFamilyRecord> out;
    for (const auto& r : records_) {
        if (filter.epsilon &&
            (r.epsilon_status != EpsilonStatus::Known || r.epsilon != *filter.epsilon)) {
            continue;
        }
        if ((filter.rho && r.rho != *filter.rho) || (filter.rho_min && r.rho < *filter.rho_min) ||
            (filter.rho_max && r.rho > *filter.rho_max)) {
            continue;
        }
        if (filter.dp && !r.dp_degrees.count(*filter.dp)) {
            continue;
        }
        out.push_back(r);
    }
    return out;
}

const FanoFamilyRecord& get_family(FamilyId id) { return Catalog::standard().get(id); }

std::vector<FanoFamilyRecord> list_families(const FamilyFilter& filter) {
    return Catalog::standard().list(filter);
}

std::optional<RankOneDescriptor> rank_one_descriptor(FamilyId id) {
    if (id.rho != 1) {
        return std::nullopt;
    }
    for (const auto& e : kRankOne) {
        if (e.number == id.number) {
            return e.descriptor;
        }
    }
    return std::nullopt;
}

std::optional<FamilyId> find_rank_one(int index, int invariant) {
    for (const auto& e : kRankOne) {
        if (e.descriptor.index == index && e.descriptor.invariant == invariant) {
            return FamilyId{1, e.number};
        }
    }
    return std::nullopt;
}

std::vector<std::string> catalog_violations(const Catalog& catalog) {
    std::vector<std::string> out;
    auto report = [&](const FanoFamilyRecord& r, const std::string& message) {
        out.push_back(r.id.str() + ": " + message);
    };
    const std::set<FamilyId> base_point_families = {{2, 1}, {10, 1}};
    const std::set<Rational> high_rank_values = {1, Rational(4, 3), Rational(3, 2), 2, 3};
    const std::set<Rational> rank_one_values = {Rational(3, 2), 2, 3, 4};

    for (int rho = 1; rho <= 10; ++rho) {
        for (int n = 1; n <= kFamilyCount[static_cast<std::size_t>(rho)]; ++n) {
            if (!catalog.contains({rho, n})) {
                out.push_back(FamilyId{rho, n}.str() + ": missing from the catalog");
            }
        }
    }

    for (const auto& r : catalog.records()) {
        const bool known = r.epsilon_status == EpsilonStatus::Known;
        if (r.id.number > kFamilyCount[static_cast<std::size_t>(r.rho)]) {
            report(r, "not a Mori-Mukai family");
        }
        if (r.rho >= 2) {
            if (!known) {
                report(r, "epsilon is determined for every family with rho >= 2");
            } else if (!high_rank_values.count(r.epsilon)) {
                report(r, "epsilon " + to_string(r.epsilon) + " outside {1, 4/3, 3/2, 2, 3}");
            }
        } else if (known && !rank_one_values.count(r.epsilon)) {
            report(r, "epsilon " + to_string(r.epsilon) + " outside {3/2, 2, 3, 4}");
        }

        const bool expect_non_bpf = base_point_families.count(r.id) > 0;
        if (r.non_bpf != expect_non_bpf) {
            report(r, expect_non_bpf ? "|-K| should have base points"
                                     : "|-K| should be base point free");
        }
        if (r.dp_degrees.count(1) != static_cast<std::size_t>(r.non_bpf)) {
            report(r, "a degree-1 del Pezzo fibration exists exactly when |-K| has base points");
        }
        if (r.non_bpf && (r.dp_degrees.count(2) || r.dp_degrees.count(3))) {
            report(r, "degree 2 or 3 fibration on a family whose |-K| has base points");
        }
        if (known && (r.epsilon == 1) != r.non_bpf) {
            report(r, "epsilon = 1 exactly when |-K| has base points");
        }

        if (auto d = rank_one_descriptor(r.id)) {
            if (r.index && *r.index != d->index) {
                report(r, "index should be " + std::to_string(d->index));
            }
            std::optional<Rational> expected;
            if (d->index == 1 && d->invariant >= 4) {
                expected = d->invariant == 4 ? Rational(3, 2) : Rational(2);
            } else if (d->index >= 2) {
                expected = Rational(d->index == 2 ? 2 : d->index);
            }
            if (expected && (!known || r.epsilon != *expected)) {
                report(r, "epsilon should be " + to_string(*expected));
            }
            if (!expected && known) {
                report(r, "epsilon should be open");
            }
        }
    }
    return out;
}

} // namespace fanocalc
