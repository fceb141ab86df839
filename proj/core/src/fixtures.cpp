#include "nlbox/fixtures.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "nlbox/errors.hpp"
#include "nlbox/spaces.hpp"

namespace nlbox {

namespace {

std::string trim(const std::string& s)
{
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

bool starts_with(const std::string& s, const std::string& prefix)
{
    return s.rfind(prefix, 0) == 0;
}

std::string subset_label(int index)
{
    return "subset " + std::to_string(index);
}

std::string join_vectors(const std::vector<BitVec>& vs)
{
    std::string out;
    for (const BitVec& v : vs) {
        if (!out.empty())
            out += " ";
        out += v.str();
    }
    return out;
}

} // namespace

FixtureSet load_fixture_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open fixture file " + path, 0);

    FixtureSet out;
    enum class Section { none, inputs, translations, subset };
    enum class ListKind { none, t, x, r };
    Section section = Section::none;
    ListKind kind = ListKind::none;
    std::string section_label = "prelude";
    std::vector<BitVec> matrix_rows;
    int matrix_line = 0;
    int lineno = 0;

    auto current = [&]() -> FixtureSubset& { return out.subsets.back(); };

    auto finish_matrix = [&]() {
        if (kind != ListKind::r)
            return;
        if (static_cast<int>(matrix_rows.size()) != out.n)
            throw ParseError("matrix block has " + std::to_string(matrix_rows.size()) +
                             " rows, expected " + std::to_string(out.n),
                             matrix_line);
        current().r.push_back(BitMatrix(matrix_rows));
        matrix_rows.clear();
    };

    auto check_duplicate = [&](const std::vector<BitVec>& list, const BitVec& v,
                               const char* what) {
        if (std::find(list.begin(), list.end(), v) != list.end())
            throw FixtureError("duplicate " + std::string(what) + " " + v.str() + " in " +
                               section_label + " (line " + std::to_string(lineno) + ")");
    };

    std::string raw;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string text = raw;
        const auto hash = text.find('#');
        if (hash != std::string::npos) {
            const std::string comment = trim(text.substr(hash + 1));
            text = text.substr(0, hash);
            if (starts_with(comment, "inferred") || starts_with(comment, "replaced"))
                out.notes.push_back(FixtureNote{lineno, section_label, comment});
        }
        text = trim(text);
        if (text.empty())
            continue;

        if (text.front() == '[') {
            if (text.back() != ']')
                throw ParseError("unterminated section header " + text, lineno);
            finish_matrix();
            kind = ListKind::none;
            const std::string name = trim(text.substr(1, text.size() - 2));
            if (name == "inputs") {
                section = Section::inputs;
                section_label = "inputs";
            } else if (name == "translations") {
                section = Section::translations;
                section_label = "translations";
            } else if (starts_with(name, "subset ")) {
                int index = 0;
                std::istringstream is(name.substr(7));
                if (!(is >> index) || !(is >> std::ws).eof())
                    throw ParseError("bad subset header " + text, lineno);
                if (index != static_cast<int>(out.subsets.size()) + 1)
                    throw ParseError("subset indices must be contiguous from 1, got " +
                                     std::to_string(index), lineno);
                FixtureSubset s;
                s.index = index;
                out.subsets.push_back(s);
                section = Section::subset;
                section_label = subset_label(index);
            } else {
                throw ParseError("unknown section header " + text, lineno);
            }
            continue;
        }

        if (text == "T:" || text == "X:" || text == "R:") {
            if (section != Section::subset)
                throw ParseError("directive " + text + " outside a subset section", lineno);
            finish_matrix();
            if (text == "T:")
                kind = ListKind::t;
            else if (text == "X:")
                kind = ListKind::x;
            else {
                kind = ListKind::r;
                matrix_line = lineno;
                if (out.n == 0)
                    throw ParseError("matrix block before any vector fixed the length", lineno);
            }
            continue;
        }

        if (text.find_first_not_of("01") != std::string::npos)
            throw ParseError("expected one binary vector per line, got \"" + text + "\"", lineno);
        const BitVec v = BitVec::parse(text);
        if (out.n == 0)
            out.n = v.n();
        if (v.n() != out.n)
            throw ParseError("vector length " + std::to_string(v.n()) + ", expected " +
                             std::to_string(out.n), lineno);

        switch (section) {
        case Section::none:
            throw ParseError("vector before any section header", lineno);
        case Section::inputs:
            if (parity(v) != 1)
                throw FixtureError("input with even parity: " + v.str() + " (line " +
                                   std::to_string(lineno) + ")");
            check_duplicate(out.inputs, v, "input");
            out.inputs.push_back(v);
            break;
        case Section::translations:
            if (parity(v) != 0)
                throw FixtureError("translation with odd parity: " + v.str() + " (line " +
                                   std::to_string(lineno) + ")");
            check_duplicate(out.translations, v, "translation");
            out.translations.push_back(v);
            break;
        case Section::subset:
            switch (kind) {
            case ListKind::none:
                throw ParseError("vector before a T:/X:/R: directive", lineno);
            case ListKind::t:
                if (parity(v) != 0)
                    throw FixtureError("translation with odd parity: " + v.str() + " (line " +
                                       std::to_string(lineno) + ")");
                check_duplicate(current().t, v, "translation");
                current().t.push_back(v);
                break;
            case ListKind::x:
                if (parity(v) != 1)
                    throw FixtureError("input with even parity: " + v.str() + " (line " +
                                       std::to_string(lineno) + ")");
                check_duplicate(current().x, v, "input");
                current().x.push_back(v);
                break;
            case ListKind::r:
                if (parity(v) != 1)
                    throw FixtureError("matrix row with even parity: " + v.str() + " (line " +
                                       std::to_string(lineno) + ")");
                matrix_rows.push_back(v);
                break;
            }
            break;
        }
    }
    finish_matrix();
    if (out.n == 0)
        throw ParseError("fixture file holds no vectors", lineno);
    return out;
}

SettingsQuad load_settings_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open settings file " + path, 0);

    SettingsQuad quad;
    bool seen[4] = {false, false, false, false};
    const std::string keys[4] = {"x1", "x2", "y1", "y2"};
    BitVec* slots[4] = {&quad.x1, &quad.x2, &quad.y1, &quad.y2};

    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string text = raw;
        const auto hash = text.find('#');
        if (hash != std::string::npos)
            text = text.substr(0, hash);
        text = trim(text);
        if (text.empty())
            continue;
        const auto colon = text.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected \"<key>: <vector>\", got \"" + text + "\"", lineno);
        const std::string key = trim(text.substr(0, colon));
        const std::string value = trim(text.substr(colon + 1));
        int slot = -1;
        for (int i = 0; i < 4; ++i)
            if (key == keys[i])
                slot = i;
        if (slot < 0)
            throw ParseError("unknown settings key \"" + key + "\"", lineno);
        if (seen[slot])
            throw ParseError("settings key \"" + key + "\" given twice", lineno);
        if (value.empty() || value.find_first_not_of("01") != std::string::npos)
            throw ParseError("expected a binary vector after \"" + key + ":\"", lineno);
        *slots[slot] = BitVec::parse(value);
        seen[slot] = true;
    }
    for (int i = 0; i < 4; ++i)
        if (!seen[i])
            throw ParseError("settings file is missing key \"" + keys[i] + "\"", lineno);
    return quad;
}

FixtureReport verify_reference_fixture(const FixtureSet& f)
{
    FixtureReport report;
    report.notes = f.notes;
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        report.checks.push_back(CheckResult{name, pass, detail});
    };

    const int n = f.n;
    const BitVec zero = BitVec::zero(n);
    const BitVec all_ones = BitVec::ones(n);

    // counts: list sizes dictated by the space dimension.
    {
        bool ok = n >= 4 && n % 2 == 0;
        std::string detail;
        std::size_t expected_half = 0;
        std::size_t expected_group = 0;
        std::size_t expected_subsets = 0;
        if (ok) {
            expected_half = std::size_t{1} << (n - 1);
            expected_group = std::size_t{1} << (n / 2);
            expected_subsets = expected_subset_count(n);
            ok = f.inputs.size() == expected_half && f.translations.size() == expected_half &&
                 f.subsets.size() == expected_subsets;
            for (const FixtureSubset& s : f.subsets)
                ok = ok && s.t.size() == expected_group && s.x.size() == expected_group &&
                     s.r.size() == 4;
            detail = std::to_string(f.inputs.size()) + " inputs, " +
                     std::to_string(f.translations.size()) + " translations, " +
                     std::to_string(f.subsets.size()) + " subsets (expected " +
                     std::to_string(expected_subsets) + " of " + std::to_string(expected_group) +
                     " translations, 4 matrices each)";
        } else {
            detail = "space length " + std::to_string(n) + " is not an even n >= 4";
        }
        add("counts", ok, detail);
    }

    // spaces: the two flat lists are exactly the admissible spaces.
    {
        bool ok = true;
        std::string detail = "inputs and translations match the enumerated spaces";
        try {
            std::set<BitVec> have_inputs(f.inputs.begin(), f.inputs.end());
            std::set<BitVec> have_translations(f.translations.begin(), f.translations.end());
            const std::vector<BitVec> want_inputs = enumerate_inputs(n);
            const std::vector<BitVec> want_translations = enumerate_translations(n);
            ok = have_inputs == std::set<BitVec>(want_inputs.begin(), want_inputs.end()) &&
                 have_translations ==
                     std::set<BitVec>(want_translations.begin(), want_translations.end());
            if (!ok)
                detail = "list contents differ from the enumerated spaces";
        } catch (const Error& e) {
            ok = false;
            detail = e.what();
        }
        add("spaces", ok, detail);
    }

    // subgroup: every T is XOR-closed, self-orthogonal, and contains 0 and 1...1.
    {
        bool ok = true;
        std::string detail = "all subsets are self-orthogonal subgroups containing 0 and 1...1";
        for (const FixtureSubset& s : f.subsets) {
            const std::set<BitVec> members(s.t.begin(), s.t.end());
            if (members.count(zero) == 0 || members.count(all_ones) == 0) {
                ok = false;
                detail = subset_label(s.index) + " misses 0...0 or 1...1";
                break;
            }
            for (const BitVec& a : s.t) {
                for (const BitVec& b : s.t) {
                    if (members.count(a ^ b) == 0) {
                        ok = false;
                        detail = subset_label(s.index) + " is not XOR-closed: " + a.str() +
                                 " ^ " + b.str();
                    }
                    if (inner_product(a, b) != 0) {
                        ok = false;
                        detail = subset_label(s.index) + " is not self-orthogonal: " + a.str() +
                                 " . " + b.str() + " = 1";
                    }
                    if (!ok)
                        break;
                }
                if (!ok)
                    break;
            }
            if (!ok)
                break;
        }
        add("subgroup", ok, detail);
    }

    // coset: every X is a coset of its T, with one representative pair shared
    // by all subsets.
    {
        bool ok = true;
        std::string detail;
        std::set<BitVec> shared;
        for (const FixtureSubset& s : f.subsets) {
            if (s.x.empty() || s.t.empty()) {
                ok = false;
                detail = subset_label(s.index) + " has an empty list";
                break;
            }
            std::set<BitVec> expected;
            for (const BitVec& t : s.t)
                expected.insert(s.x.front() ^ t);
            const std::set<BitVec> have(s.x.begin(), s.x.end());
            if (have != expected) {
                ok = false;
                detail = subset_label(s.index) + " inputs are not a coset of its translations";
                break;
            }
            if (shared.empty())
                shared = have;
            else {
                std::set<BitVec> next;
                for (const BitVec& v : have)
                    if (shared.count(v))
                        next.insert(v);
                shared = next;
            }
        }
        if (ok) {
            ok = shared.size() == 2;
            if (ok) {
                const BitVec first = *shared.begin();
                ok = shared.count(reverse(first)) == 1;
            }
            if (ok)
                detail = "shared representatives: " +
                         join_vectors(std::vector<BitVec>(shared.begin(), shared.end()));
            else
                detail = "subsets do not share exactly one complementary representative pair";
        }
        add("coset", ok, detail);
    }

    // intersection: distinct subsets meet exactly in {0, 1...1}.
    {
        bool ok = true;
        std::string detail = "all pairwise intersections are {0...0, 1...1}";
        for (std::size_t i = 0; i < f.subsets.size() && ok; ++i) {
            const std::set<BitVec> a(f.subsets[i].t.begin(), f.subsets[i].t.end());
            for (std::size_t j = i + 1; j < f.subsets.size() && ok; ++j) {
                std::set<BitVec> meet;
                for (const BitVec& v : f.subsets[j].t)
                    if (a.count(v))
                        meet.insert(v);
                const std::set<BitVec> want{zero, all_ones};
                if (meet != want) {
                    ok = false;
                    detail = subset_label(f.subsets[i].index) + " and " +
                             subset_label(f.subsets[j].index) + " meet in " +
                             std::to_string(meet.size()) + " elements";
                }
            }
        }
        add("intersection", ok, detail);
    }

    // cover: between them the subsets hit every translation exactly once
    // (except the shared pair, hit once per subset); likewise the inputs.
    {
        bool ok = true;
        std::string detail = "translations and inputs are covered exactly";
        std::map<BitVec, std::size_t> t_hits;
        std::map<BitVec, std::size_t> x_hits;
        for (const FixtureSubset& s : f.subsets) {
            for (const BitVec& v : s.t)
                ++t_hits[v];
            for (const BitVec& v : s.x)
                ++x_hits[v];
        }
        const std::size_t k = f.subsets.size();
        for (const BitVec& v : f.translations) {
            const std::size_t want = (v == zero || v == all_ones) ? k : 1;
            if (t_hits[v] != want) {
                ok = false;
                detail = "translation " + v.str() + " covered " + std::to_string(t_hits[v]) +
                         " times, expected " + std::to_string(want);
                break;
            }
        }
        if (ok && t_hits.size() != f.translations.size()) {
            ok = false;
            detail = "subsets contain translations outside the flat list";
        }
        if (ok) {
            std::set<BitVec> shared;
            for (const auto& [v, c] : x_hits)
                if (c == k)
                    shared.insert(v);
            for (const BitVec& v : f.inputs) {
                const std::size_t want = shared.count(v) ? k : 1;
                if (x_hits[v] != want) {
                    ok = false;
                    detail = "input " + v.str() + " covered " + std::to_string(x_hits[v]) +
                             " times, expected " + std::to_string(want);
                    break;
                }
            }
            if (ok && x_hits.size() != f.inputs.size()) {
                ok = false;
                detail = "subsets contain inputs outside the flat list";
            }
        }
        add("cover", ok, detail);
    }

    // stabilizers: every recorded matrix is orthogonal with odd rows and maps
    // its subset's translations onto themselves.
    {
        bool ok = true;
        std::string detail;
        std::size_t matrices = 0;
        for (const FixtureSubset& s : f.subsets) {
            for (const BitMatrix& m : s.r) {
                ++matrices;
                bool odd_rows = true;
                for (const BitVec& r : m.rows())
                    odd_rows = odd_rows && parity(r) == 1;
                if (!is_orthogonal(m) || !odd_rows || !subset_stabilizer_check(m, s.t)) {
                    ok = false;
                    detail = subset_label(s.index) + " matrix\n" + m.str() +
                             "\nfails orthogonality or does not stabilize the subset";
                    break;
                }
            }
            if (!ok)
                break;
        }
        if (ok)
            detail = std::to_string(matrices) + " matrices, all orthogonal stabilizers";
        add("stabilizers", ok, detail);
    }

    // within_w: the symmetry parameter vanishes on every quadruple drawn from
    // a single subset.
    {
        bool ok = true;
        std::string detail;
        std::uint64_t quads = 0;
        for (const FixtureSubset& s : f.subsets) {
            for (const BitVec& x1 : s.x) {
                for (const BitVec& x2 : s.x)
                    for (const BitVec& y1 : s.x)
                        for (const BitVec& y2 : s.x) {
                            ++quads;
                            if (symmetry_parameter_W(x1, x2, y1, y2) != 0) {
                                ok = false;
                                detail = subset_label(s.index) + " quadruple (" + x1.str() +
                                         ", " + x2.str() + ", " + y1.str() + ", " + y2.str() +
                                         ") has W = 1";
                            }
                            if (!ok)
                                break;
                        }
                if (!ok)
                    break;
            }
            if (!ok)
                break;
        }
        if (ok)
            detail = std::to_string(quads) + " quadruples scanned, W = 0 throughout";
        add("within_w", ok, detail);
    }

    report.pass = true;
    for (const CheckResult& c : report.checks)
        report.pass = report.pass && c.pass;
    return report;
}

}  // namespace nlbox
