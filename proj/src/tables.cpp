#include <elusive/tables.hpp>

#include <elusive/condexpr.hpp>
#include <elusive/numth.hpp>
#include <elusive/socle_orders.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace elusive {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    size_t start = 0;
    for (;;) {
        size_t pos = line.find('\t', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

struct PatternAlt {
    Family family;
    bool either_eps;  // Le: PSL or PSU
    unsigned n;
    enum class Q { Any, PrimeField, DegreeLE2, Cube, Exact } qkind;
    unsigned long long qval;
};

bool parse_alt(const std::string& text, PatternAlt& alt) {
    size_t i = 0;
    alt.either_eps = false;
    if (text.compare(0, 2, "Le") == 0) {
        alt.family = Family::PSL;
        alt.either_eps = true;
        i = 2;
    } else if (text.compare(0, 2, "O+") == 0) {
        alt.family = Family::POmegaPlus;
        i = 2;
    } else if (text.compare(0, 2, "O-") == 0) {
        alt.family = Family::POmegaMinus;
        i = 2;
    } else if (!text.empty() && text[0] == 'L') {
        alt.family = Family::PSL;
        i = 1;
    } else if (!text.empty() && text[0] == 'U') {
        alt.family = Family::PSU;
        i = 1;
    } else if (!text.empty() && text[0] == 'S') {
        alt.family = Family::PSp;
        i = 1;
    } else if (!text.empty() && text[0] == 'O') {
        alt.family = Family::OmegaOdd;
        i = 1;
    } else {
        return false;
    }
    size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) return false;
    alt.n = static_cast<unsigned>(std::stoul(text.substr(i, j - i)));
    if (j >= text.size() || text[j] != '(' || text.back() != ')') return false;
    std::string qs = text.substr(j + 1, text.size() - j - 2);
    if (qs == "q") alt.qkind = PatternAlt::Q::Any;
    else if (qs == "p") alt.qkind = PatternAlt::Q::PrimeField;
    else if (qs == "p2") alt.qkind = PatternAlt::Q::DegreeLE2;
    else if (qs == "q0^3") alt.qkind = PatternAlt::Q::Cube;
    else {
        if (qs.empty() ||
            !std::all_of(qs.begin(), qs.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            return false;
        alt.qkind = PatternAlt::Q::Exact;
        alt.qval = std::stoull(qs);
    }
    return true;
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(part);
    return out;
}

}  // namespace

bool Tables::pattern_well_formed(const std::string& pattern) {
    auto parts = split_commas(pattern);
    if (parts.empty()) return false;
    PatternAlt alt;
    return std::all_of(parts.begin(), parts.end(),
                       [&](const std::string& s) { return parse_alt(s, alt); });
}

bool Tables::match_pattern(const std::string& pattern, const GroupSpec& spec,
                           int* eps_out) {
    for (const auto& part : split_commas(pattern)) {
        PatternAlt alt;
        if (!parse_alt(part, alt))
            throw std::invalid_argument("bad T-pattern: " + pattern);
        bool fam_ok = alt.either_eps
                          ? (spec.family == Family::PSL || spec.family == Family::PSU)
                          : spec.family == alt.family;
        if (!fam_ok || spec.n != alt.n) continue;
        bool q_ok = false;
        switch (alt.qkind) {
            case PatternAlt::Q::Any: q_ok = true; break;
            case PatternAlt::Q::PrimeField: q_ok = spec.f == 1; break;
            case PatternAlt::Q::DegreeLE2: q_ok = spec.f <= 2; break;
            case PatternAlt::Q::Cube: q_ok = spec.f % 3 == 0; break;
            case PatternAlt::Q::Exact: q_ok = spec.q() == alt.qval; break;
        }
        if (!q_ok) continue;
        if (eps_out) {
            if (spec.family == Family::PSL) *eps_out = 1;
            else if (spec.family == Family::PSU) *eps_out = -1;
            else *eps_out = 0;
        }
        return true;
    }
    return false;
}

Tables::Tables(const std::string& cases_path, const std::string& conds_path) {
    {
        std::ifstream in(cases_path);
        if (!in) throw std::runtime_error("cannot open case table: " + cases_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            auto cols = split_tabs(line);
            if (cols[0] == "acase") {
                if (cols.size() != 5)
                    throw std::runtime_error("bad acase row: " + line);
                a_rows_.push_back({cols[1], cols[2], std::stoi(cols[3]), cols[4]});
            } else if (cols[0] == "lowdim" || cols[0] == "bcase") {
                if (cols.size() != 6)
                    throw std::runtime_error("bad case row: " + line);
                CaseDef cd;
                cd.tag = cols[0] == "lowdim" ? CaseTag::Lowdim : CaseTag::BCase;
                cd.id = cols[1];
                cd.t_pattern = cols[2];
                cd.s_key = cols[3];
                cd.exist_cond = cols[4];
                cd.double_cond = cols[5] == "--" ? std::string() : cols[5];
                cases_.push_back(std::move(cd));
            } else {
                throw std::runtime_error("unknown case kind in: " + line);
            }
        }
    }
    {
        std::ifstream in(conds_path);
        if (!in) throw std::runtime_error("cannot open condition table: " + conds_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            auto cols = split_tabs(line);
            if (cols.size() != 6)
                throw std::runtime_error("bad condition row: " + line);
            ConditionRow row;
            row.source_table = std::stoi(cols[0]);
            row.case_id = cols[1];
            row.t_pattern = cols[2];
            row.s_key = cols[3];
            row.r = static_cast<unsigned>(std::stoul(cols[4]));
            row.cond = cols[5];
            conds_.push_back(std::move(row));
        }
    }
}

const Tables& Tables::instance() {
    static Tables t(data_dir() + "/cases.tsv", data_dir() + "/conditions.tsv");
    return t;
}

const CaseDef* Tables::find_case(const std::string& id) const {
    for (const auto& c : cases_)
        if (c.id == id) return &c;
    return nullptr;
}

const ConditionRow* Tables::condition_row(int table, const std::string& case_id,
                                          unsigned r) const {
    for (const auto& row : conds_)
        if (row.source_table == table && row.case_id == case_id && row.r == r)
            return &row;
    return nullptr;
}

std::vector<const ConditionRow*> Tables::rows_of_table(int table) const {
    std::vector<const ConditionRow*> out;
    for (const auto& row : conds_)
        if (row.source_table == table) out.push_back(&row);
    return out;
}

const ACaseRow* Tables::a_row_for(int d, unsigned p) const {
    for (const auto& row : a_rows_) {
        if (d < row.dmin) continue;
        CondEnv env;
        env.p = p;
        env.d = d;
        if (eval_condition(row.cond, env)) return &row;
    }
    return nullptr;
}

bigint Tables::s_order(const CaseDef& cd, const GroupSpec& spec) const {
    std::string key = cd.s_key;
    if (key == "L3e(q)")
        key = spec.family == Family::PSU ? "U3(q)" : "L3(q)";
    const auto& so = SocleOrders::instance();
    if (!so.has(key)) throw std::invalid_argument("no socle order entry: " + key);
    bigint arg = 0;
    if (key.size() >= 3 && key.compare(key.size() - 3, 3, "(q)") == 0) {
        arg = bigint(spec.q());
    } else if (key.size() >= 4 && key.compare(key.size() - 4, 4, "(q0)") == 0) {
        if (spec.f % 3 != 0)
            throw std::invalid_argument("cube field required for key " + key);
        bigint q0 = 1;
        for (unsigned k = 0; k < spec.f / 3; ++k) q0 *= spec.p;
        arg = q0;
    }
    return so.order(key, arg);
}

std::vector<std::string> Tables::validate() const {
    std::vector<std::string> problems;
    auto complain = [&](const std::string& msg) { problems.push_back(msg); };

    std::vector<std::string> seen;
    for (const auto& row : a_rows_) {
        if (row.code != "orth" && row.code != "sp" && row.code != "osgn8")
            complain("acase " + row.id + ": unknown code " + row.code);
        try {
            check_condition_syntax(row.cond);
        } catch (const std::exception& e) {
            complain("acase " + row.id + ": " + e.what());
        }
    }
    for (const auto& cd : cases_) {
        if (std::find(seen.begin(), seen.end(), cd.id) != seen.end())
            complain("duplicate case id " + cd.id);
        seen.push_back(cd.id);
        if (!pattern_well_formed(cd.t_pattern))
            complain("case " + cd.id + ": bad pattern " + cd.t_pattern);
        for (const std::string* c : {&cd.exist_cond, &cd.double_cond}) {
            if (c->empty()) continue;
            try {
                check_condition_syntax(*c);
            } catch (const std::exception& e) {
                complain("case " + cd.id + ": " + e.what());
            }
        }
        std::string key = cd.s_key == "L3e(q)" ? "L3(q)" : cd.s_key;
        if (!SocleOrders::instance().has(key))
            complain("case " + cd.id + ": unknown socle key " + cd.s_key);
        if (cd.s_key == "L3e(q)" && !SocleOrders::instance().has("U3(q)"))
            complain("case " + cd.id + ": unknown socle key U3(q)");
    }
    for (const auto& row : conds_) {
        std::string where = "table " + std::to_string(row.source_table) + " row " +
                            row.case_id + " r=" + std::to_string(row.r);
        if (row.source_table != 3 && row.source_table != 4 && row.source_table != 6)
            complain(where + ": bad table number");
        if (!is_prime(row.r)) complain(where + ": r not prime");
        bool a_row = row.case_id == "A-odd" || row.case_id == "A-even";
        if (a_row) {
            if (row.source_table != 6) complain(where + ": A rows belong to table 6");
        } else {
            const CaseDef* cd = find_case(row.case_id);
            if (!cd) {
                complain(where + ": unknown case id");
            } else {
                if (cd->t_pattern != row.t_pattern)
                    complain(where + ": pattern mismatch vs case table");
                if (cd->s_key != row.s_key)
                    complain(where + ": socle key mismatch vs case table");
                int want = row.source_table == 4 ? 1 : 0;
                if (row.source_table == 3 && cd->tag != CaseTag::Lowdim)
                    complain(where + ": table 3 rows must cite lowdim cases");
                if (want == 1 && cd->tag != CaseTag::BCase)
                    complain(where + ": table 4 rows must cite bcases");
            }
        }
        if (row.cond != "none") {
            try {
                check_condition_syntax(row.cond);
            } catch (const std::exception& e) {
                complain(where + ": " + std::string(e.what()));
            }
        }
    }
    return problems;
}

}
