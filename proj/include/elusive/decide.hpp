#pragma once

#include <elusive/classes.hpp>
#include <elusive/groups.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace elusive {

enum class CaseSel { A, B, Lowdim, GenericS };

// Point-stabiliser description.  A: alternating/symmetric stabiliser on a
// fully deleted permutation module, identified by the permutation degree d.
// B / Lowdim: a case id from the data files.  GenericS: any other irreducible
// almost simple stabiliser; the caller supplies the socle order and vouches
// that the case matches none of the tabulated collections.
struct SubgroupCase {
    CaseSel kind = CaseSel::GenericS;
    int d = 0;
    std::string id;
    std::string s_name;
    bigint s_order = 0;
    bool h0_double = false;
};

struct Verdict {
    bool decided = false;
    bool elusive = false;
    bool degree_divisible = false;
    std::string rule;
    std::string witness;  // class label of a derangement candidate
    std::string note;
};

// |H ∩ T|, resolving case data, doubling conditions and the
// alternating-vs-symmetric distinction.
bigint h0_order(const GroupSpec& T, const SubgroupCase& C);

// screening conditions on the eigenvalue field degree c
bool conditions_star(const GroupSpec& T, const SubgroupCase& C, std::uint64_t r);
bool conditions_diamond(const GroupSpec& T, std::uint64_t r);
bool conditions_box(const GroupSpec& T, std::uint64_t r);

// Exact subgroup-class count when one is derivable (curated closed forms,
// exact enumerations, or the counting rules); nullopt otherwise.
std::optional<std::uint64_t> kappa_exact_value(const GroupSpec& T, std::uint64_t r);
// Best known lower bound (1 when nothing better is known).
std::uint64_t kappa_known_lower(const GroupSpec& T, std::uint64_t r);

// Main classification: is the socle r-elusive for this action?
// A verdict with decided == false is a rejection (hypothesis violation),
// with degree_divisible == false when r does not divide |Ω|.
Verdict decide_elusive(const GroupSpec& T, const SubgroupCase& C, std::uint64_t r);

// Independent route through subgroup-class counts plus the r ∈ {2,3}
// catalogue; agrees with decide_elusive wherever both are defined.
Verdict decide_kappa_corollary(const GroupSpec& T, const SubgroupCase& C, std::uint64_t r);

// Subfield-type clauses: variant "C5" has q = q0^k for an odd prime k,
// variant "C8" has q = q0^2 acting as a unitary group on an odd-dimensional
// space.  eps is +1/-1 for linear/unitary socles and 0 otherwise (the
// partition conditions then do not apply).
bool decide_subfield_corollary(std::uint32_t n, std::uint64_t p, std::uint64_t q0,
                               unsigned k, int eps, std::uint64_t r, bool unitary_variant);

struct CoverageEntry {
    ClassLabel label;
    std::string covered_by;  // cycle type, empty when uncovered
};

struct CoverageReport {
    GroupSpec spec;
    int d = 0;
    std::uint64_t r = 2;
    bool exact = true;    // label catalogue exactness
    bool elusive = false; // every class covered
    std::vector<CoverageEntry> entries;
};

// Which socle classes of order r are hit by stabiliser elements, computed by
// fusing cycle types into the module.  Independent of decide_elusive's
// closed-form branch and compared against it in the tests.
CoverageReport a_collection_coverage(int d, std::uint64_t p, std::uint64_t r);

}
