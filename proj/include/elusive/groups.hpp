#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>

namespace elusive {

using bigint = boost::multiprecision::cpp_int;

enum class Family { PSL, PSU, PSp, POmegaPlus, POmegaMinus, OmegaOdd };

const char* family_name(Family f);

// simple classical socle acting on its natural module of dimension n over
// F_q (F_{q^2} in the unitary case), q = p^f
struct GroupSpec {
  Family family = Family::PSL;
  std::uint32_t n = 0;
  std::uint64_t p = 0;
  std::uint32_t f = 1;

  std::uint64_t q() const;
  int eps() const;  // +1 linear, -1 unitary, 0 otherwise
  bool orthogonal() const;
  std::string to_string() const;
  bool operator==(const GroupSpec&) const = default;
};

// validates simplicity and dimension constraints; the dimension-4 symplectic
// group over F_2 is accepted and treated as its derived subgroup throughout
GroupSpec make_spec(Family fam, std::uint32_t n, std::uint64_t p, std::uint32_t f);

bigint group_order(const GroupSpec&);
bigint factorial(std::uint32_t d);
bigint alternating_order(std::uint32_t d);

unsigned big_valuation(bigint v, std::uint64_t r);
unsigned r_valuation(const GroupSpec&, std::uint64_t r);

// degree over F_q of the eigenvalue field of an order-r semisimple element;
// requires r odd, r != p, and r dividing the group order
std::uint32_t c_value(const GroupSpec&, std::uint64_t r);

struct KappaReport {
  bool exact = false;
  std::uint64_t value = 0;  // meaningful when exact
  std::uint64_t lower = 1;
  std::uint64_t upper = 0;
  bool upper_known = false;
};

// class-counting rules for subgroups of odd prime order r != p; exact when
// the count is forced, otherwise bounds
KappaReport kappa_rules(const GroupSpec&, std::uint64_t r);

// exact involution class-subgroup counts in small rank over odd q
std::optional<std::uint64_t> kappa2_lowdim(const GroupSpec&);

// exact order-p subgroup class counts where a closed form is curated
std::optional<std::uint64_t> kappa_p_exact(const GroupSpec&);

// checks the count for t2 strictly exceeds the count for t1; requires both
// groups enumerable for r and dim(t2) > 2 dim(t1)
bool kappa_monotone_check(const GroupSpec& t1, const GroupSpec& t2, std::uint64_t r);

}  // namespace elusive
