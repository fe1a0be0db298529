#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qsym/algebra.hpp"
#include "qsym/groebner.hpp"

namespace qsym {

enum class Family {
  rs, cs, ip, inj, wel, rinj, rwel,
  bg1, bg2, bg3, bg4, bg5, bg6, bg7, bg8, bg9, bg10, bg11, bg12, bg13, bg14,
  rrs, rcs, rinjcs, rwelcs,
};

inline constexpr Family kAllFamilies[] = {
    Family::rs,   Family::cs,   Family::ip,    Family::inj,    Family::wel,   Family::rinj, Family::rwel,
    Family::bg1,  Family::bg2,  Family::bg3,   Family::bg4,    Family::bg5,   Family::bg6,  Family::bg7,
    Family::bg8,  Family::bg9,  Family::bg10,  Family::bg11,   Family::bg12,  Family::bg13, Family::bg14,
    Family::rrs,  Family::rcs,  Family::rinjcs, Family::rwelcs,
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
int family_arity(Family f);
// Smallest n for which the family is defined.
int family_min_size(Family f);
bool is_bad_guy(Family f);

// Index tuples are 1-based and positional, e.g. inj (a,b,c) = u_ab u_cb.
bool is_valid_index(Family f, std::span<const int> indices, Size n);
std::vector<std::vector<int>> valid_indices(Family f, Size n);

// Throws IndexError for invalid tuples and Unsupported when n is too small.
Polynomial make_relation(Family f, std::span<const int> indices, Size n);
inline Polynomial make_relation(Family f, std::initializer_list<int> indices, Size n) {
  return make_relation(f, std::span<const int>(indices.begin(), indices.size()), n);
}

struct RelationInstance {
  Family family;
  std::vector<int> indices;
  Polynomial poly;
};
std::string label(const RelationInstance& r);
std::string label(Family f, std::span<const int> indices);

// transpose(make_relation(f, x)) == sign * make_relation(family, indices).
struct TransposePartner {
  Family family;
  std::vector<int> indices;
  int sign;
};
// Empty when the partner index tuple is not valid (rinjcs_3 has no rwelcs_3).
std::optional<TransposePartner> transpose_partner(Family f, std::span<const int> indices);

// Whether one of the relations a bad-guy family is built from is rwel_23
// (absent from F_n, so such tuples are not overlaps of F_n).
bool uses_rwel23(Family f, std::span<const int> indices);

enum class NamedSet { Fpp, Fp, F, B, G };
std::string_view set_name(NamedSet s);
std::optional<NamedSet> parse_named_set(std::string_view name);

// Members with their family labels, in construction order.
std::vector<RelationInstance> named_set_members(NamedSet s, Size n);
// F, Fp, B and G are returned monic; Fpp as written. Throws Unsupported for n < 4.
Basis named_set(NamedSet s, Size n);

// The rinj identity rinj_jk = inj_j1k - rs_j u_k1 + u_j2 rs_k - inj_j2k and its transpose for rwel.
bool reduced_orthogonal_identity_check(int j, int k, Size n);

struct WordProblemResult {
  bool equivalent;
  Polynomial lhs_normal_form;
  Polynomial rhs_normal_form;
};

// Decides f = g in the quotient by reducing modulo G_n (n >= 4).
WordProblemResult word_problem(const Polynomial& f, const Polynomial& g);

}  // namespace qsym
