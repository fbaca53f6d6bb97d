#pragma once

#include <elusive/groups.hpp>

#include <string>
#include <vector>

namespace elusive {

// Membership rows for the alternating-stabiliser collection: which socle a
// fully deleted permutation module of parameters (d, p) carries.
struct ACaseRow {
    std::string id;    // A1..A4
    std::string code;  // "orth" | "sp" | "osgn8"
    int dmin = 0;
    std::string cond;  // condition over p and d
};

enum class CaseTag { Lowdim, BCase };

struct CaseDef {
    CaseTag tag = CaseTag::Lowdim;
    std::string id;
    std::string t_pattern;
    std::string s_key;
    std::string exist_cond;   // when the embedding exists (over p, q, f, e)
    std::string double_cond;  // when |H0| = 2|S|; empty: never
};

struct ConditionRow {
    int source_table = 0;  // 3, 4 or 6
    std::string case_id;
    std::string t_pattern;
    std::string s_key;
    unsigned r = 0;
    std::string cond;  // "none" = no extra condition
};

class Tables {
public:
    Tables(const std::string& cases_path, const std::string& conds_path);
    static const Tables& instance();

    const std::vector<ACaseRow>& a_rows() const { return a_rows_; }
    const std::vector<CaseDef>& cases() const { return cases_; }
    const std::vector<ConditionRow>& conditions() const { return conds_; }

    const CaseDef* find_case(const std::string& id) const;
    const ConditionRow* condition_row(int table, const std::string& case_id,
                                      unsigned r) const;
    std::vector<const ConditionRow*> rows_of_table(int table) const;

    const ACaseRow* a_row_for(int d, unsigned p) const;

    // T-pattern matching.  Alternatives are comma-separated; each one is a
    // family code (L, U, Le, S, O, O+, O-), the dimension, and a field spec
    // in parentheses: q (any), p (prime field), p2 (degree at most 2),
    // q0^3 (perfect cube) or an explicit value.  On success *eps_out gets the
    // sign the pattern binds for 'e' (+1 linear, -1 unitary, else 0).
    static bool match_pattern(const std::string& pattern, const GroupSpec& spec,
                              int* eps_out);
    static bool pattern_well_formed(const std::string& pattern);

    bigint s_order(const CaseDef& cd, const GroupSpec& spec) const;

    // Structural validation of the loaded data; returns problem strings.
    std::vector<std::string> validate() const;

private:
    std::vector<ACaseRow> a_rows_;
    std::vector<CaseDef> cases_;
    std::vector<ConditionRow> conds_;
};

}
