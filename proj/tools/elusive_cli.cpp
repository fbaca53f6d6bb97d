#include <elusive/classes.hpp>
#include <elusive/condexpr.hpp>
#include <elusive/decide.hpp>
#include <elusive/delperm.hpp>
#include <elusive/gf.hpp>
#include <elusive/groups.hpp>
#include <elusive/json_io.hpp>
#include <elusive/numth.hpp>
#include <elusive/oracle.hpp>
#include <elusive/tables.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

using namespace elusive;

namespace {

SubgroupCase parse_case(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("case syntax: A:d=<int> | B:<row> | lowdim:<row-id> | "
                                    "S:<name>,order=<int>[,double]");
    std::string head = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    SubgroupCase c;
    if (head == "A") {
        if (rest.rfind("d=", 0) != 0) throw std::invalid_argument("case syntax: A:d=<int>");
        c.kind = CaseSel::A;
        c.d = std::stoi(rest.substr(2));
        return c;
    }
    if (head == "B") {
        c.kind = CaseSel::B;
        c.id = rest.rfind('B', 0) == 0 ? rest : "B" + rest;
        return c;
    }
    if (head == "lowdim") {
        c.kind = CaseSel::Lowdim;
        c.id = rest;
        return c;
    }
    if (head == "S") {
        c.kind = CaseSel::GenericS;
        std::vector<std::string> parts;
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            auto comma = rest.find(',', pos);
            if (comma == std::string::npos) comma = rest.size();
            parts.push_back(rest.substr(pos, comma - pos));
            pos = comma + 1;
        }
        if (parts.empty()) throw std::invalid_argument("case syntax: S:<name>,order=<int>");
        c.s_name = parts[0];
        for (std::size_t i = 1; i < parts.size(); ++i) {
            if (parts[i].rfind("order=", 0) == 0)
                c.s_order = bigint(parts[i].substr(6));
            else if (parts[i] == "double")
                c.h0_double = true;
            else
                throw std::invalid_argument("unknown case attribute: " + parts[i]);
        }
        if (c.s_order <= 0) throw std::invalid_argument("case syntax: S:<name>,order=<int>");
        return c;
    }
    throw std::invalid_argument("unknown case collection: " + head);
}

struct CycleShape {
    std::uint64_t r = 0;
    std::uint32_t h = 0;
    std::uint32_t fixed = 0;
};

CycleShape parse_cycle(const std::string& text, int d) {
    CycleShape out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string part = text.substr(pos, comma - pos);
        pos = comma + 1;
        std::uint64_t len = 0, mult = 1;
        auto hat = part.find('^');
        len = std::stoull(part.substr(0, hat));
        if (hat != std::string::npos) mult = std::stoull(part.substr(hat + 1));
        if (len == 0 || mult == 0) throw std::invalid_argument("bad cycle part: " + part);
        if (len == 1) {
            out.fixed += static_cast<std::uint32_t>(mult);
        } else {
            if (out.r != 0 && out.r != len)
                throw std::invalid_argument("mixed cycle lengths are not an order-r type");
            out.r = len;
            out.h += static_cast<std::uint32_t>(mult);
        }
    }
    if (out.r == 0) throw std::invalid_argument("cycle type has no nontrivial cycle");
    if (!is_prime(out.r)) throw std::invalid_argument("cycle length must be prime");
    if (out.r * out.h + out.fixed != static_cast<std::uint64_t>(d))
        throw std::invalid_argument("cycle type does not sum to the permutation degree");
    return out;
}

// ---------------------------------------------------------------------------
// verify suites

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::vector<std::string> failures;
};

std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q) {
    for (std::uint64_t p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            std::uint32_t k = 0;
            std::uint64_t t = q;
            while (t % p == 0) t /= p, ++k;
            if (t != 1) throw std::invalid_argument("not a prime power");
            return {static_cast<std::uint32_t>(p), k};
        }
    }
    return {static_cast<std::uint32_t>(q), 1};
}

std::uint64_t to_u64(const bigint& v) { return v.convert_to<std::uint64_t>(); }

SuiteResult run_closures() {
    SuiteResult s{"closures", 0, {}};
    auto check = [&s](const std::string& what, std::uint64_t got, std::uint64_t want) {
        ++s.cases;
        if (got != want)
            s.failures.push_back(what + ": got " + std::to_string(got) + ", want " +
                                 std::to_string(want));
    };
    for (std::uint64_t q : {4ull, 5ull, 7ull, 8ull, 9ull, 11ull, 13ull}) {
        auto [p, k] = split_prime_power(q);
        Field F = make_field(p, k);
        Closure c = small_group_closure(F, sl_generators(F, 2), true);
        check("PSL2(" + std::to_string(q) + ")", c.size(),
              to_u64(group_order(make_spec(Family::PSL, 2, p, k))));
    }
    for (std::uint64_t q : {2ull, 3ull}) {
        auto [p, k] = split_prime_power(q);
        Field F = make_field(p, k);
        Closure c = small_group_closure(F, sl_generators(F, 3), true);
        check("PSL3(" + std::to_string(q) + ")", c.size(),
              to_u64(group_order(make_spec(Family::PSL, 3, p, k))));
    }
    {
        Field F = make_field(3, 1);
        Closure lin = small_group_closure(F, sp_generators(F, 4), false);
        check("Sp4(3)", lin.size(), 51840);
        Closure proj = small_group_closure(F, sp_generators(F, 4), true);
        check("PSp4(3)", proj.size(), to_u64(group_order(make_spec(Family::PSp, 4, 3, 1))));
    }
    return s;
}

SuiteResult run_lowdim_psl2(std::uint64_t qmax) {
    SuiteResult s{"lowdim-psl2", 0, {}};
    SubgroupCase C;
    C.kind = CaseSel::Lowdim;
    C.id = "L2-A5";
    for (std::uint64_t q : {11ull, 19ull, 29ull, 31ull, 41ull}) {
        if (q > qmax) continue;
        Field F = make_field(static_cast<std::uint32_t>(q), 1);
        Closure c = small_group_closure(F, sl_generators(F, 2), true);
        auto pair = find_a5_pair(c);
        if (!pair) {
            s.failures.push_back("q=" + std::to_string(q) + ": no (2,3,5) pair found");
            continue;
        }
        std::vector<std::uint32_t> h0 = subgroup_closure(c, {pair->first, pair->second});
        std::sort(h0.begin(), h0.end());
        ++s.cases;
        if (h0.size() != 60) {
            s.failures.push_back("q=" + std::to_string(q) + ": pair generated order " +
                                 std::to_string(h0.size()));
            continue;
        }
        std::uint64_t omega = c.size() / h0.size();
        GroupSpec T = make_spec(Family::PSL, 2, q, 1);
        for (auto [r, e] : factorize(omega)) {
            (void)e;
            ++s.cases;
            DerangementReport rep = derangement_search(c, h0, r);
            Verdict v = decide_elusive(T, C, r);
            if (!v.decided) {
                s.failures.push_back("q=" + std::to_string(q) + " r=" + std::to_string(r) +
                                     ": engine rejected an in-hypothesis instance");
                continue;
            }
            if (rep.elusive() != v.elusive)
                s.failures.push_back("q=" + std::to_string(q) + " r=" + std::to_string(r) +
                                     ": oracle " + (rep.elusive() ? "elusive" : "derangement") +
                                     " vs engine " + (v.elusive ? "elusive" : "derangement"));
        }
    }
    return s;
}

SuiteResult run_delperm(int dmax) {
    SuiteResult s{"delperm", 0, {}};
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        for (int d = 5; d <= dmax; ++d) {
            if (p > static_cast<std::uint64_t>(d)) continue;
            std::uint32_t du = static_cast<std::uint32_t>(d);
            for (std::uint32_t h = 1; h * p <= static_cast<std::uint64_t>(d); ++h) {
                Partition want = jordan_of_cycle_shape(du, p, h);
                std::vector<std::uint32_t> perm(du);
                for (std::uint32_t i = 0; i < du; ++i) perm[i] = i;
                for (std::uint32_t b = 0; b < h; ++b) {
                    std::uint32_t base = b * static_cast<std::uint32_t>(p);
                    for (std::uint32_t j = 0; j + 1 < p; ++j) perm[base + j] = base + j + 1;
                    perm[base + static_cast<std::uint32_t>(p) - 1] = base;
                }
                Mat m = permutation_matrix_on_module(du, p, perm);
                Partition got = jordan_partition(m, static_cast<std::int64_t>(p));
                ++s.cases;
                if (!(got == want))
                    s.failures.push_back("d=" + std::to_string(d) + " p=" + std::to_string(p) +
                                         " h=" + std::to_string(h) + ": jordan mismatch");
            }
        }
    }
    return s;
}

SuiteResult run_classes() {
    SuiteResult s{"classes", 0, {}};
    struct Inst {
        Family fam;
        std::uint32_t n;
        std::uint64_t q;
    };
    const Inst insts[] = {{Family::PSL, 2, 5},  {Family::PSL, 2, 7},  {Family::PSL, 2, 9},
                          {Family::PSL, 2, 11}, {Family::PSL, 2, 13}, {Family::PSL, 3, 2},
                          {Family::PSL, 3, 3}};
    for (const Inst& in : insts) {
        auto [p, k] = split_prime_power(in.q);
        Field F = make_field(p, k);
        Closure c = small_group_closure(F, sl_generators(F, in.n), true);
        GroupSpec T = make_spec(in.fam, in.n, p, k);
        for (auto [r, e] : factorize(to_u64(group_order(T)))) {
            (void)e;
            EnumReport rep = enumerate_element_classes(T, r);
            if (!rep.exact) continue;
            ++s.cases;
            std::size_t got = classes_of_order(c, r).size();
            if (got != rep.class_count)
                s.failures.push_back(T.to_string() + " r=" + std::to_string(r) + ": closure " +
                                     std::to_string(got) + " vs catalogue " +
                                     std::to_string(rep.class_count));
        }
    }
    return s;
}

json suite_to_json(const SuiteResult& s) {
    json j;
    j["suite"] = s.name;
    j["cases"] = s.cases;
    j["failures"] = s.failures;
    j["pass"] = s.failures.empty();
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"r-elusivity decision engine for classical socles"};
    app.require_subcommand(1);
    bool human = false;
    app.add_flag("--human", human, "indented output");

    json out;
    int exit_code = 0;

    std::string family_s, case_s, cycle_s, suite_s = "all", tables_mode = "validate";
    std::uint32_t n = 0, f = 1;
    std::uint64_t p = 0, r = 0, qmax = 41, seed = 0;
    int d = 0, dmax = 12;
    bool subgroups = false;

    auto make_group = [&]() {
        auto fam = family_parse(family_s);
        if (!fam) throw std::invalid_argument("unknown family: " + family_s);
        return make_spec(*fam, n, p, f);
    };

    // decide
    auto* cmd_decide = app.add_subcommand("decide", "r-elusivity verdict for one action");
    cmd_decide->add_option("--family", family_s)->required();
    cmd_decide->add_option("-n,--dim", n)->required();
    cmd_decide->add_option("-p,--char", p)->required();
    cmd_decide->add_option("-f,--fdeg", f);
    cmd_decide->add_option("--case", case_s)->required();
    cmd_decide->add_option("-r,--prime", r)->required();
    cmd_decide->add_flag("--corollary", subgroups, "use the class-count route");
    cmd_decide->callback([&] {
        GroupSpec T = make_group();
        SubgroupCase C = parse_case(case_s);
        Verdict v = subgroups ? decide_kappa_corollary(T, C, r) : decide_elusive(T, C, r);
        out = verdict_to_json(v);
        exit_code = v.decided ? 0 : 2;
    });

    // kappa
    auto* cmd_kappa = app.add_subcommand("kappa", "order-r subgroup class counts");
    cmd_kappa->add_option("--family", family_s)->required();
    cmd_kappa->add_option("-n,--dim", n)->required();
    cmd_kappa->add_option("-p,--char", p)->required();
    cmd_kappa->add_option("-f,--fdeg", f);
    cmd_kappa->add_option("-r,--prime", r)->required();
    cmd_kappa->callback([&] {
        GroupSpec T = make_group();
        if (!is_prime(r)) throw std::invalid_argument("r must be prime");
        auto count = kappa_exact_value(T, r);
        out["exact"] = count.has_value();
        if (count) out["count"] = *count;
        out["lower"] = kappa_known_lower(T, r);
        if (r > 2 && r != T.p && r_valuation(T, r) > 0) {
            KappaReport kr = kappa_rules(T, r);
            json rules;
            rules["exact"] = kr.exact;
            if (kr.exact) rules["value"] = kr.value;
            rules["lower"] = kr.lower;
            if (kr.upper_known) rules["upper"] = kr.upper;
            out["rules"] = rules;
        }
    });

    // classes
    auto* cmd_classes = app.add_subcommand("classes", "order-r class catalogue");
    cmd_classes->add_option("--family", family_s)->required();
    cmd_classes->add_option("-n,--dim", n)->required();
    cmd_classes->add_option("-p,--char", p)->required();
    cmd_classes->add_option("-f,--fdeg", f);
    cmd_classes->add_option("-r,--prime", r)->required();
    cmd_classes->add_flag("--subgroups", subgroups, "orbits under the power maps");
    cmd_classes->callback([&] {
        GroupSpec T = make_group();
        if (subgroups)
            out = subgroup_to_json(enumerate_subgroup_classes(T, r));
        else
            out = enum_to_json(enumerate_element_classes(T, r));
        out["group"] = spec_to_json(T);
    });

    // fuse
    auto* cmd_fuse = app.add_subcommand("fuse", "socle class of a cycle type on the module");
    cmd_fuse->add_option("--cycle", cycle_s)->required();
    cmd_fuse->add_option("-d,--points", d)->required();
    cmd_fuse->add_option("-p,--char", p)->required();
    auto* opt_fuse_r = cmd_fuse->add_option("-r,--prime", r);
    cmd_fuse->callback([&] {
        CycleShape cs = parse_cycle(cycle_s, d);
        if (opt_fuse_r->count() == 0) {
            // shape-only mode: the Jordan type of the image, defined for r = p
            if (cs.r != p)
                throw std::invalid_argument("cycle length must equal the characteristic "
                                            "in shape-only mode; pass -r for class labels");
            Partition jor = jordan_of_cycle_shape(static_cast<std::uint32_t>(d), p, cs.h);
            out["jordan"] = jor.parts;
            return;
        }
        if (r != cs.r) throw std::invalid_argument("-r disagrees with the cycle type");
        FuseResult fr = fuse_cycle_type(static_cast<std::uint32_t>(d), p, r, cs.h);
        out = label_to_json(fr.label);
        out["resolved"] = fr.decoration_resolved;
    });

    // coverage
    auto* cmd_cov = app.add_subcommand("coverage", "stabiliser coverage of the order-r classes");
    cmd_cov->add_option("-d,--points", d)->required();
    cmd_cov->add_option("-p,--char", p)->required();
    cmd_cov->add_option("-r,--prime", r)->required();
    cmd_cov->callback([&] { out = coverage_to_json(a_collection_coverage(d, p, r)); });

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "oracle cross-checks");
    cmd_verify->add_option("--suite", suite_s)
        ->check(CLI::IsMember({"lowdim-psl2", "closures", "delperm", "classes", "all"}));
    cmd_verify->add_option("--qmax", qmax);
    cmd_verify->add_option("--dmax", dmax);
    cmd_verify->add_option("--seed", seed);
    cmd_verify->callback([&] {
        std::vector<SuiteResult> results;
        if (suite_s == "closures" || suite_s == "all") results.push_back(run_closures());
        if (suite_s == "lowdim-psl2" || suite_s == "all")
            results.push_back(run_lowdim_psl2(qmax));
        if (suite_s == "delperm" || suite_s == "all") results.push_back(run_delperm(dmax));
        if (suite_s == "classes" || suite_s == "all") results.push_back(run_classes());
        bool pass = true;
        json suites = json::array();
        std::size_t cases = 0;
        for (const SuiteResult& sr : results) {
            suites.push_back(suite_to_json(sr));
            pass = pass && sr.failures.empty();
            cases += sr.cases;
        }
        out["suites"] = suites;
        out["cases"] = cases;
        out["pass"] = pass;
        exit_code = pass ? 0 : 1;
    });

    // tables
    auto* cmd_tables = app.add_subcommand("tables", "inspect the condition data files");
    cmd_tables->add_option("mode", tables_mode)->check(CLI::IsMember({"dump", "validate"}));
    cmd_tables->callback([&] {
        const Tables& tb = Tables::instance();
        if (tables_mode == "validate") {
            std::vector<std::string> errs = tb.validate();
            out["a_rows"] = tb.a_rows().size();
            out["cases"] = tb.cases().size();
            out["conditions"] = tb.conditions().size();
            out["errors"] = errs;
            out["ok"] = errs.empty();
            exit_code = errs.empty() ? 0 : 1;
            return;
        }
        json a = json::array();
        for (const ACaseRow& row : tb.a_rows()) {
            json j;
            j["id"] = row.id;
            j["code"] = row.code;
            j["dmin"] = row.dmin;
            j["cond"] = row.cond;
            a.push_back(j);
        }
        json cs = json::array();
        for (const CaseDef& cd : tb.cases()) {
            json j;
            j["id"] = cd.id;
            j["collection"] = cd.tag == CaseTag::BCase ? "B" : "lowdim";
            j["socle_pattern"] = cd.t_pattern;
            j["stabiliser"] = cd.s_key;
            j["exists"] = cd.exist_cond;
            if (!cd.double_cond.empty()) j["doubled"] = cd.double_cond;
            cs.push_back(j);
        }
        json rows = json::array();
        for (const ConditionRow& row : tb.conditions()) {
            json j;
            j["table"] = row.source_table;
            j["case"] = row.case_id;
            j["socle_pattern"] = row.t_pattern;
            j["stabiliser"] = row.s_key;
            j["r"] = row.r;
            j["cond"] = row.cond;
            rows.push_back(j);
        }
        out["a_rows"] = a;
        out["cases"] = cs;
        out["conditions"] = rows;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        json err;
        err["error"] = e.what();
        std::cout << (human ? err.dump(2) : err.dump()) << "\n";
        return 2;
    } catch (const std::exception& e) {
        json err;
        err["error"] = e.what();
        std::cout << (human ? err.dump(2) : err.dump()) << "\n";
        return 1;
    }
    std::cout << (human ? out.dump(2) : out.dump()) << "\n";
    return exit_code;
}
