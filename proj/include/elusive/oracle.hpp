#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "elusive/form_type.hpp"
#include "elusive/gf.hpp"
#include "elusive/linalg.hpp"
#include "elusive/numth.hpp"

namespace elusive {

// Jordan block sizes of M over F_p; requires (M - I)^dim = 0 mod p
Partition jordan_partition(const Mat& m, std::int64_t p);

// symmetric bilinear Gram matrix over F_p, p odd
FormType classify_quadratic_form(const Mat& gram, std::int64_t p);

// characteristic 2: quadratic form given by the values q_diag[i] = Q(e_i)
// and the polarization gram (alternating); classified by counting zeros
FormType classify_quadratic_form2(const std::vector<int>& q_diag, const Mat& gram);

// b restricted to the span of the columns of basis: basis^T * b * basis
Mat restrict_bilinear(const Mat& b, const Mat& basis, std::int64_t p);

// dim ker(M - w I) over the field F (entries of M are embedded via F.scalar)
int eigenspace_dim(const Mat& m, const Field& f, std::uint64_t w);

// ---------------------------------------------------------------------------
// explicit closure of small matrix groups over F_q

struct FqMat {
  std::uint32_t n = 0;
  std::vector<std::uint8_t> a;  // row-major field codes

  std::uint8_t& at(std::uint32_t i, std::uint32_t j) { return a[i * n + j]; }
  std::uint8_t at(std::uint32_t i, std::uint32_t j) const { return a[i * n + j]; }
};

FqMat fq_identity(std::uint32_t n);
FqMat fq_mul(const Field& f, const FqMat& x, const FqMat& y);
bool fq_equal(const FqMat& x, const FqMat& y);

// base-q integer key; requires q^(n*n) to fit 64 bits
std::uint64_t fq_key(const Field& f, const FqMat& m);

// scales so the first nonzero entry in row-major order is 1; identifies x
// with lambda*x exactly for the scalars lambda fixing the determinant class
FqMat fq_canonical_projective(const Field& f, FqMat m);

// decode of a base-q key back into a matrix
FqMat fq_decode(const Field& f, std::uint32_t n, std::uint64_t key);

struct Closure {
  const Field* f = nullptr;
  std::uint32_t n = 0;
  bool projective = false;
  std::vector<std::uint64_t> keys;  // id -> key of representative (canonical when projective)
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  std::vector<std::uint32_t> gen_ids;

  std::size_t size() const { return keys.size(); }
  FqMat mat(std::uint32_t id) const { return fq_decode(*f, n, keys[id]); }
  std::uint32_t id_of(const FqMat& m) const;  // throws if not in the group
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t inverse(std::uint32_t x) const;
};

// breadth-first enumeration; throws if the group exceeds cap
Closure small_group_closure(const Field& f, const std::vector<FqMat>& gens,
                            bool projective, std::size_t cap = 2000000);

// ids of the subgroup generated inside an existing closure
std::vector<std::uint32_t> subgroup_closure(const Closure& c,
                                            const std::vector<std::uint32_t>& gens);

std::uint64_t element_order(const Closure& c, std::uint32_t x);

// conjugacy classes of elements of order exactly r, each a sorted id list,
// ordered by least member
std::vector<std::vector<std::uint32_t>> classes_of_order(const Closure& c, std::uint64_t r);

struct DerangementReport {
  std::size_t classes_total = 0;
  std::vector<std::uint32_t> derangement_reps;  // least id of each class missing h0
  bool elusive() const { return classes_total > 0 && derangement_reps.empty(); }
};

// h0 sorted ascending; an order-r class all of whose members avoid every
// conjugate of h0 is exactly a class disjoint from h0 itself
DerangementReport derangement_search(const Closure& c,
                                     const std::vector<std::uint32_t>& h0, std::uint64_t r);

// least (a, b) with |a| = 2, |b| = 3, |ab| = 5; any such pair generates an
// alternating group of degree 5
std::optional<std::pair<std::uint32_t, std::uint32_t>> find_a5_pair(const Closure& c);

// ---------------------------------------------------------------------------
// standard generator sets

std::vector<FqMat> sl_generators(const Field& f, std::uint32_t n);
// Sp_n for the form with Gram [[0, I], [-I, 0]]; n even
std::vector<FqMat> sp_generators(const Field& f, std::uint32_t n);

}  // namespace elusive
