#include <elusive/decide.hpp>

#include <elusive/condexpr.hpp>
#include <elusive/delperm.hpp>
#include <elusive/numth.hpp>
#include <elusive/tables.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace elusive {

namespace {

int form_sign(const GroupSpec& T) {
    switch (T.family) {
        case Family::PSU:
        case Family::POmegaMinus:
            return -1;
        default:
            return 1;
    }
}

CondEnv env_for(const GroupSpec& T, int eps, int d = 0) {
    CondEnv env;
    env.p = static_cast<long long>(T.p);
    env.q = static_cast<long long>(T.q());
    env.n = static_cast<long long>(T.n);
    env.d = d;
    env.f = static_cast<long long>(T.f);
    env.eps = eps == 0 ? 1 : eps;
    return env;
}

bool row_condition_holds(const ConditionRow* row, const CondEnv& env) {
    if (!row) return false;
    if (row->cond == "none") return true;
    return eval_condition(row->cond, env);
}

// largest total eigenvalue-block multiplicity over the order-r catalogue
std::uint32_t max_total_blocks(const EnumReport& rep) {
    std::uint32_t best = 0;
    for (const ClassLabel& lab : rep.labels) {
        if (lab.kind != LabelKind::Semisimple) continue;
        std::uint32_t tot = 0;
        for (std::uint32_t b : lab.block_mult) tot += b;
        best = std::max(best, tot);
    }
    return best;
}

// label of a class expected to miss the point stabiliser: the curated
// small-support witness when available, otherwise the catalogue label of
// least eigenspace codimension (ties broken by printable form)
std::string derangement_candidate(const GroupSpec& T, std::uint64_t r) {
    if (auto w = guralnick_saxl_witness(T, r)) return w->to_string();
    EnumReport rep = enumerate_element_classes(T, r);
    std::string best;
    std::uint32_t best_nu = 0;
    for (const ClassLabel& lab : rep.labels) {
        std::uint32_t nu = nu_of_label(T, lab);
        std::string s = lab.to_string();
        if (best.empty() || nu < best_nu || (nu == best_nu && s < best)) {
            best = s;
            best_nu = nu;
        }
    }
    return best;
}

struct CaseCheck {
    bool ok = false;
    Verdict reject;  // populated when !ok
    const CaseDef* cd = nullptr;
    int eps = 0;  // pattern-bound sign for the tabulated cases
};

CaseCheck validate_case(const GroupSpec& T, const SubgroupCase& C) {
    CaseCheck out;
    switch (C.kind) {
        case CaseSel::A: {
            if (C.d < 5) throw std::invalid_argument("permutation degree too small");
            if (!Tables::instance().a_row_for(C.d, static_cast<unsigned>(T.p))) {
                out.reject.note = "no alternating-collection membership for these parameters";
                return out;
            }
            if (!(socle_of_module(static_cast<std::uint32_t>(C.d), T.p) == T)) {
                out.reject.note = "socle does not match the module of this degree";
                return out;
            }
            out.eps = form_sign(T);
            out.ok = true;
            return out;
        }
        case CaseSel::B:
        case CaseSel::Lowdim: {
            out.cd = Tables::instance().find_case(C.id);
            if (!out.cd) throw std::invalid_argument("unknown case id: " + C.id);
            bool want_b = C.kind == CaseSel::B;
            if (want_b != (out.cd->tag == CaseTag::BCase))
                throw std::invalid_argument("case kind mismatch for id: " + C.id);
            if (!Tables::match_pattern(out.cd->t_pattern, T, &out.eps)) {
                out.reject.note = "socle does not match the case pattern";
                return out;
            }
            if (!eval_condition(out.cd->exist_cond, env_for(T, out.eps))) {
                out.reject.note = "embedding existence conditions fail";
                return out;
            }
            out.ok = true;
            return out;
        }
        case CaseSel::GenericS: {
            if (C.s_order <= 0)
                throw std::invalid_argument("socle order required for a generic stabiliser");
            if (T.n < 6) {
                out.reject.note = "dimensions below 6 belong to the tabulated collections";
                return out;
            }
            out.eps = form_sign(T);
            out.ok = true;
            return out;
        }
    }
    throw std::logic_error("unhandled case kind");
}

}  // namespace

bigint h0_order(const GroupSpec& T, const SubgroupCase& C) {
    switch (C.kind) {
        case CaseSel::A: {
            if (C.d < 5) throw std::invalid_argument("permutation degree too small");
            std::uint32_t d = static_cast<std::uint32_t>(C.d);
            if (!(socle_of_module(d, T.p) == T))
                throw std::invalid_argument("socle does not match the module of this degree");
            return h0_structure(d, T.p) == StabStructure::Symmetric ? factorial(d)
                                                                    : alternating_order(d);
        }
        case CaseSel::B:
        case CaseSel::Lowdim: {
            const CaseDef* cd = Tables::instance().find_case(C.id);
            if (!cd) throw std::invalid_argument("unknown case id: " + C.id);
            int eps = 0;
            if (!Tables::match_pattern(cd->t_pattern, T, &eps))
                throw std::invalid_argument("socle does not match case " + C.id);
            bigint base = Tables::instance().s_order(*cd, T);
            if (!cd->double_cond.empty() && eval_condition(cd->double_cond, env_for(T, eps)))
                base *= 2;
            return base;
        }
        case CaseSel::GenericS: {
            if (C.s_order <= 0)
                throw std::invalid_argument("socle order required for a generic stabiliser");
            return C.h0_double ? C.s_order * 2 : C.s_order;
        }
    }
    throw std::logic_error("unhandled case kind");
}

bool conditions_diamond(const GroupSpec& T, std::uint64_t r) {
    if (!is_prime(r)) throw std::invalid_argument("r must be prime");
    if (r == 2 || r == T.p || r_valuation(T, r) == 0) return false;
    std::uint64_t c = c_value(T, r);
    return c > 2 && 4 * c * c > T.n;
}

bool conditions_box(const GroupSpec& T, std::uint64_t r) {
    if (!conditions_diamond(T, r)) return false;
    std::uint64_t c = c_value(T, r);
    return 2 * c < T.n || (2 * c == T.n && T.family != Family::POmegaMinus);
}

bool conditions_star(const GroupSpec& T, const SubgroupCase& C, std::uint64_t r) {
    if (!is_prime(r)) throw std::invalid_argument("r must be prime");
    if (r == 2 || r == T.p) return false;
    if (big_valuation(h0_order(T, C), r) == 0) return false;
    std::uint64_t c = c_value(T, r);  // r divides |H0|, hence the group order
    return 2 * c > T.n || (2 * c == T.n && T.family == Family::POmegaMinus);
}

std::optional<std::uint64_t> kappa_exact_value(const GroupSpec& T, std::uint64_t r) {
    if (!is_prime(r)) throw std::invalid_argument("r must be prime");
    if (r_valuation(T, r) == 0) return std::nullopt;
    if (r == T.p) {
        if (auto v = kappa_p_exact(T)) return v;
        if (T.p == 2) {
            // order 2: subgroup classes coincide with element classes
            EnumReport rep = enumerate_element_classes(T, 2);
            if (rep.exact) return rep.class_count;
        }
        return std::nullopt;
    }
    if (r == 2) {
        if (auto v = kappa2_lowdim(T)) return v;
        EnumReport rep = enumerate_element_classes(T, 2);
        if (rep.exact) return rep.class_count;
        return std::nullopt;
    }
    SubgroupReport sub = enumerate_subgroup_classes(T, r);
    if (sub.exact) return sub.count;
    KappaReport kr = kappa_rules(T, r);
    if (kr.exact) return kr.value;
    return std::nullopt;
}

std::uint64_t kappa_known_lower(const GroupSpec& T, std::uint64_t r) {
    if (!is_prime(r)) throw std::invalid_argument("r must be prime");
    if (r_valuation(T, r) == 0) return 0;
    if (r == T.p) return T.n >= 3 ? 2 : 1;
    if (r == 2) return T.n >= 6 ? 2 : 1;
    std::uint64_t c = c_value(T, r);
    if (c >= 2) return kappa_rules(T, r).lower;
    SubgroupReport sub = enumerate_subgroup_classes(T, r);
    return sub.exact ? std::max<std::uint64_t>(sub.count, 1) : 1;
}

Verdict decide_elusive(const GroupSpec& T, const SubgroupCase& C, std::uint64_t r) {
    if (!is_prime(r)) throw std::invalid_argument("r must be prime");
    CaseCheck chk = validate_case(T, C);
    if (!chk.ok) return chk.reject;

    Verdict v;
    bigint h0 = h0_order(T, C);
    unsigned vT = r_valuation(T, r);
    unsigned vH = big_valuation(h0, r);
    if (vT <= vH) {
        v.note = "r does not divide the degree";
        return v;
    }
    v.degree_divisible = true;
    v.decided = true;

    switch (C.kind) {
        case CaseSel::A: {
            std::uint64_t p = T.p;
            if (r == 2 && p != 2) {
                if (T.family == Family::OmegaOdd) {
                    auto a = static_cast<std::int64_t>(((T.n + 1) / 2) % p);
                    if (legendre(a, p) == 1) {
                        v.elusive = true;
                        v.rule = "thm1.ii.a";
                        return v;
                    }
                } else if (T.n % 4 == 2) {
                    std::uint64_t want = form_sign(T) == 1 ? 5 : 3;  // 5e mod 8
                    if (p % 8 == want) {
                        v.elusive = true;
                        v.rule = "thm1.ii.b";
                        return v;
                    }
                }
            }
            if (r > 2 && r != p && vH >= 1) {
                std::uint64_t c = c_value(T, r);
                if (c + 1 == r) {
                    EnumReport rep = enumerate_element_classes(T, r);
                    if (max_total_blocks(rep) <= static_cast<std::uint64_t>(C.d) / r) {
                        v.elusive = true;
                        v.rule = "thm1.ii.c";
                        return v;
                    }
                }
            }
            v.rule = "thm1.ii";
            if (vH == 0) {
                v.witness = derangement_candidate(T, r);
                return v;
            }
            CoverageReport cov = a_collection_coverage(C.d, T.p, r);
            for (const CoverageEntry& e : cov.entries) {
                if (e.covered_by.empty()) {
                    v.witness = e.label.to_string();
                    break;
                }
            }
            if (v.witness.empty()) v.witness = derangement_candidate(T, r);
            return v;
        }
        case CaseSel::Lowdim:
        case CaseSel::B: {
            int table = C.kind == CaseSel::Lowdim ? 3 : 4;
            v.rule = table == 3 ? "thm1.i" : "thm1.iii";
            const ConditionRow* row = Tables::instance().condition_row(table, C.id, r);
            if (row_condition_holds(row, env_for(T, chk.eps))) {
                v.elusive = true;
                return v;
            }
            v.witness = derangement_candidate(T, r);
            return v;
        }
        case CaseSel::GenericS: {
            v.rule = "thm1.iv";
            if (conditions_star(T, C, r)) {
                v.elusive = true;
                return v;
            }
            v.witness = derangement_candidate(T, r);
            return v;
        }
    }
    throw std::logic_error("unhandled case kind");
}

Verdict decide_kappa_corollary(const GroupSpec& T, const SubgroupCase& C, std::uint64_t r) {
    if (!is_prime(r)) throw std::invalid_argument("r must be prime");
    CaseCheck chk = validate_case(T, C);
    if (!chk.ok) return chk.reject;

    Verdict v;
    bigint h0 = h0_order(T, C);
    unsigned vT = r_valuation(T, r);
    unsigned vH = big_valuation(h0, r);
    if (vT <= vH) {
        v.note = "r does not divide the degree";
        return v;
    }
    v.degree_divisible = true;
    v.decided = true;

    if (vH == 0) {
        // no order-r elements in the stabiliser at all
        v.rule = "kappa.pre.h0";
        v.witness = derangement_candidate(T, r);
        return v;
    }
    if (auto k = kappa_exact_value(T, r); k && *k == 1) {
        v.elusive = true;
        v.rule = "kappa.i";
        return v;
    }
    if (C.kind == CaseSel::A && r >= 5 && r != T.p) {
        std::uint64_t c = c_value(T, r);
        if (c + 1 == r &&
            max_total_blocks(enumerate_element_classes(T, r)) <=
                static_cast<std::uint64_t>(C.d) / r) {
            v.elusive = true;
            v.rule = "kappa.ii";
            return v;
        }
    }
    if ((r == 2 || r == 3) && C.kind != CaseSel::GenericS) {
        // complete small-prime catalogue of multi-class elusive actions
        v.rule = "kappa.iii";
        const Tables& tb = Tables::instance();
        bool hit = false;
        if (C.kind == CaseSel::A) {
            CondEnv env = env_for(T, form_sign(T), C.d);
            for (const char* id : {"A-odd", "A-even"}) {
                if (row_condition_holds(tb.condition_row(6, id, static_cast<unsigned>(r)), env)) {
                    hit = true;
                    break;
                }
            }
        } else {
            hit = row_condition_holds(tb.condition_row(6, C.id, static_cast<unsigned>(r)),
                                      env_for(T, chk.eps));
        }
        v.elusive = hit;
        if (!hit) v.witness = derangement_candidate(T, r);
        return v;
    }
    if (C.kind == CaseSel::B && r >= 5) {
        // sporadic-collection rows carry the larger primes directly
        v.rule = "kappa.iii.ext";
        v.elusive = row_condition_holds(
            Tables::instance().condition_row(4, C.id, static_cast<unsigned>(r)),
            env_for(T, chk.eps));
        if (!v.elusive) v.witness = derangement_candidate(T, r);
        return v;
    }
    if (kappa_known_lower(T, r) >= 2 || kappa_exact_value(T, r).value_or(1) >= 2) {
        v.rule = "kappa.kge2";
        v.witness = derangement_candidate(T, r);
        return v;
    }
    v.rule = "kappa.none";
    v.witness = derangement_candidate(T, r);
    return v;
}

bool decide_subfield_corollary(std::uint32_t n, std::uint64_t p, std::uint64_t q0, unsigned k,
                               int eps, std::uint64_t r, bool unitary_variant) {
    if (!is_prime(r)) throw std::invalid_argument("r must be prime");
    if (n < 2 || p < 2 || q0 < 2) throw std::invalid_argument("bad parameters");
    {
        std::uint64_t t = q0;
        while (t % p == 0) t /= p;
        if (t != 1) throw std::invalid_argument("q0 must be a power of p");
    }
    if (unitary_variant) {
        // index-two subfield acting on an odd-dimensional unitary space
        if (n % 2 == 0) throw std::invalid_argument("unitary subfield case needs odd dimension");
        if (r != p) return false;
        bigint q = bigint(q0) * q0;
        for (const Partition& lam : p_bounded_partitions(n, static_cast<unsigned>(std::min<std::uint64_t>(p, n)))) {
            bigint d = lam.parts_gcd();
            if (gcd(d, bigint(q - 1)) != gcd(d, bigint(q0 + 1))) return false;
        }
        return true;
    }
    if (k < 3 || !is_prime(k)) throw std::invalid_argument("field index must be an odd prime");
    if (r == k) return true;
    if (r != p) return false;
    if (eps == 0) return true;  // the partition conditions only constrain the linear
                                // and unitary socles
    bigint q = 1;
    for (unsigned i = 0; i < k; ++i) q *= q0;
    bigint mq = q + (eps == 1 ? -1 : 1);
    bigint mq0 = eps == 1 ? bigint(q0) - 1 : bigint(q0) + 1;
    bool some_gcd = false;
    for (const Partition& lam : p_bounded_partitions(n, static_cast<unsigned>(std::min<std::uint64_t>(p, n)))) {
        bigint d = lam.parts_gcd();
        bigint g = gcd(d, mq);
        if (g != gcd(d, mq0)) return false;
        if (g > 1) some_gcd = true;
    }
    if (some_gcd) {
        bigint g0 = gcd(bigint(n), mq0);
        if (!(bigint(k) >= bigint(p) || gcd(bigint(k), g0) == 1)) return false;
    }
    return true;
}

CoverageReport a_collection_coverage(int d, std::uint64_t p, std::uint64_t r) {
    if (!is_prime(r)) throw std::invalid_argument("r must be prime");
    if (d < 5) throw std::invalid_argument("permutation degree too small");
    if (!Tables::instance().a_row_for(d, static_cast<unsigned>(p)))
        throw std::invalid_argument("no alternating-collection membership for these parameters");
    if (r > static_cast<std::uint64_t>(d))
        throw std::invalid_argument("no order-r permutations on this many points");

    std::uint32_t du = static_cast<std::uint32_t>(d);
    GroupSpec T = socle_of_module(du, p);
    EnumReport rep = enumerate_element_classes(T, r);
    StabStructure st = h0_structure(du, p);

    CoverageReport out;
    out.spec = T;
    out.d = d;
    out.r = r;
    out.exact = rep.exact;

    std::vector<std::string> cover(rep.labels.size());
    std::uint32_t hmax = static_cast<std::uint32_t>(static_cast<std::uint64_t>(d) / r);
    for (std::uint32_t h = 1; h <= hmax; ++h) {
        // (r^h, 1^(d-rh)) decomposes into h*(r-1) transpositions
        bool odd_perm = (h * (r - 1)) % 2 == 1;
        if (odd_perm && st == StabStructure::Alternating) continue;
        FuseResult fr;
        try {
            fr = fuse_cycle_type(du, p, r, h);
        } catch (const std::exception&) {
            continue;  // image falls outside the socle
        }
        std::ostringstream cyc;
        cyc << "(" << r;
        if (h > 1) cyc << "^" << h;
        if (static_cast<std::uint64_t>(d) > r * h) cyc << ",1^" << (d - static_cast<int>(r * h));
        cyc << ")";
        for (std::size_t i = 0; i < rep.labels.size(); ++i) {
            if (cover[i].empty() && rep.labels[i] == fr.label) cover[i] = cyc.str();
        }
    }

    out.elusive = true;
    for (std::size_t i = 0; i < rep.labels.size(); ++i) {
        out.entries.push_back({rep.labels[i], cover[i]});
        if (cover[i].empty()) out.elusive = false;
    }
    return out;
}

}  // namespace elusive
