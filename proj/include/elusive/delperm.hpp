#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "elusive/classes.hpp"
#include "elusive/form_type.hpp"
#include "elusive/groups.hpp"
#include "elusive/linalg.hpp"
#include "elusive/numth.hpp"

namespace elusive {

// the nontrivial composition factor of the F_p permutation module of S_d:
// zero-sum vectors, modulo the all-ones line when p divides d
struct DeletedModule {
  std::uint32_t d = 0;
  std::uint64_t p = 0;
  std::uint32_t n = 0;  // d - 1, less one more when p | d
  bool p_divides_d = false;
  bool symplectic = false;  // p == 2, d = 2 mod 4: no invariant quadratic refinement
  Mat gram;                 // invariant bilinear form on the difference basis
  std::vector<int> q_diag;  // p == 2 only: Q(e_i)
};

DeletedModule build_deleted_module(std::uint32_t d, std::uint64_t p);

// isometry type of the invariant form, closed form
FormType epsilon_type(std::uint32_t d, std::uint64_t p);

// socle of the classical isometry group of the module
GroupSpec socle_of_module(std::uint32_t d, std::uint64_t p);

enum class StabStructure { Alternating, Symmetric };

// whether the image of the full symmetric group stays inside the socle
StabStructure h0_structure(std::uint32_t d, std::uint64_t p);

// Jordan type on the module of a permutation of cycle type (p^h, 1^(d-ph))
Partition jordan_of_cycle_shape(std::uint32_t d, std::uint64_t p, std::uint32_t h);

// for cycle type (r^h, 1^(d-rh)) with prime r != p: every nontrivial r-th
// root of unity has the same multiplicity; returns (that multiplicity, the
// fixed-space dimension); throws when no such action shape is possible
std::pair<std::uint32_t, std::uint32_t> eigen_multiplicity(std::uint32_t d, std::uint64_t p,
                                                           std::uint64_t r, std::uint32_t h);

struct FuseResult {
  ClassLabel label;
  bool decoration_resolved = true;  // false: label carries shape but not form data
};

// socle class label of the image of a cycle type (r^h, 1^(d-rh)); throws if
// the image falls outside the socle
FuseResult fuse_cycle_type(std::uint32_t d, std::uint64_t p, std::uint64_t r, std::uint32_t h);

// action matrix on the module of a permutation of {0, ..., d-1}
Mat permutation_matrix_on_module(std::uint32_t d, std::uint64_t p,
                                 const std::vector<std::uint32_t>& perm);

}  // namespace elusive
