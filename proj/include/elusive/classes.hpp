#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "elusive/groups.hpp"
#include "elusive/numth.hpp"

namespace elusive {

// orbits of the nontrivial r-th roots of unity (as exponents 1..r-1) under
// multiplication by q
struct FrobeniusOrbitSystem {
  std::uint64_t r = 0;
  std::uint64_t q_mod_r = 0;
  std::vector<std::vector<std::uint32_t>> orbits;  // each sorted, ordered by least member
  std::vector<std::uint32_t> orbit_of;             // exponent -> orbit index (index 0 unused)
};
FrobeniusOrbitSystem root_orbits(std::uint64_t r, std::uint64_t q);

// coset blocks of the eigenvalue-pairing subgroup A <= (Z/r)^*; |A| equals
// the eigenvalue field degree
struct BlockSystem {
  std::uint64_t r = 0;
  std::uint32_t c = 0;  // block size
  std::uint32_t s = 0;  // block count (r-1)/c
  std::vector<std::vector<std::uint32_t>> blocks;
  std::vector<std::uint32_t> block_of;
};
BlockSystem block_system(const GroupSpec&, std::uint64_t r);

enum class LabelKind {
  Semisimple,       // eigenvalues grouped into blocks, c >= 2
  SemisimpleSplit,  // c == 1: explicit eigenvalue multiplicities
  Unipotent,        // order p, Jordan data
  Involution,       // order 2, odd q, eigenspace data
};

enum class Decor2 { None, A, B, C };  // characteristic-2 involution types

struct ClassLabel {
  LabelKind kind = LabelKind::Semisimple;

  // Semisimple: block_mult[j] = common multiplicity on block j; fixed_dim is
  // the 1-eigenspace dimension
  std::vector<std::uint32_t> block_mult;
  std::uint32_t fixed_dim = 0;
  // orthogonal fixed_dim == 0 only: the label covers two socle classes
  bool splits = false;

  // SemisimpleSplit: eig_mult[j] = multiplicity of zeta^j, canonical rotation
  std::vector<std::uint32_t> eig_mult;

  // Unipotent
  Partition jordan;
  std::uint64_t class_multiplier = 1;  // socle classes sharing this shape
  Decor2 decor = Decor2::None;
  std::uint32_t ell = 0;

  // Involution over odd q: minus_dim even; tau / tau_perp are form types
  // (+1/-1) of the two eigenspaces where meaningful, else 0.  half_spin
  // marks projective involutions whose lifts square to a nontrivial scalar.
  std::uint32_t minus_dim = 0;
  int tau = 0;
  int tau_perp = 0;
  bool half_spin = false;

  std::string to_string() const;
  bool operator==(const ClassLabel&) const = default;
};

struct EnumReport {
  std::vector<ClassLabel> labels;  // one entry per label unit
  std::uint64_t class_count = 0;   // socle conjugacy classes covered
  bool exact = true;               // false: classes beyond this catalogue may exist
};

// conjugacy classes of elements of prime order r in the socle
EnumReport enumerate_element_classes(const GroupSpec&, std::uint64_t r);

struct SubgroupReport {
  std::uint64_t count = 0;  // orbits of label units under power maps
  bool exact = true;
  std::vector<std::vector<std::uint32_t>> orbits;  // indices into labels
  std::vector<ClassLabel> labels;
};

// conjugacy classes of order-r subgroups; defined for odd r != p
SubgroupReport enumerate_subgroup_classes(const GroupSpec&, std::uint64_t r);

// codimension of the largest eigenspace over the algebraic closure
std::uint32_t nu_of_label(const GroupSpec&, const ClassLabel&);

// a small-support class guaranteed to lie outside any irreducible almost
// simple point stabiliser candidate family; present when the generic
// low-support pattern applies
std::optional<ClassLabel> guralnick_saxl_witness(const GroupSpec&, std::uint64_t r);

}  // namespace elusive
