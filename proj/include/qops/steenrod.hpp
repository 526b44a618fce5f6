#pragma once

// Dual Steenrod operations Sq^r_* acting on the free models: the
// Nishida relations past Dyer-Lashof decorations, the Cartan formula on
// products, annihilated sphere generators and the stunted projective
// rule. Also the coalgebra structure (coproduct, primitivity) and the
// dual Adem consistency sweep.

#include <utility>
#include <vector>

#include "qops/element.hpp"
#include "qops/report.hpp"

namespace qops {

using SteenrodWord = std::vector<int>;  // entries applied left to right

struct NishidaTerm {
  int q_index;   // upper Dyer-Lashof index, >= 0 (Q^0 retained)
  int sq_index;  // Sq^{sq_index}_*; 0 is the identity
  bool operator==(const NishidaTerm&) const = default;
};

struct NishidaExpansion {
  std::vector<NishidaTerm> terms;  // ascending sq_index
  bool operator==(const NishidaExpansion&) const = default;
};

// Sq^r_* Q^s = sum_i binom(s-r, r-2i) Q^{s-r+i} Sq^i_*, 0 <= i <= r/2,
// negative Q indices dropped.
NishidaExpansion nishida_expand(int r, int s);

Element sq_act(int r, const Element& x);
Element sq_act_word(const SteenrodWord& word, const Element& x);

bool is_A_annihilated(const Element& x, int r_max);

// Tensor square of the model's underlying module; used for coproducts.
struct Tensor {
  Model model;
  std::set<std::pair<Monomial, Monomial>> terms;

  void toggle(const Monomial& a, const Monomial& b);
  bool operator==(const Tensor&) const = default;
};

Tensor tensor_mul(const Tensor& a, const Tensor& b);
Tensor coproduct(const Element& x);
bool is_primitive(const Element& x);

// Checks Sq^b_* Sq^a_* = sum_c binom(b-c-1, a-2c) Sq^c_* Sq^{a+b-c}_*
// (a < 2b) on every basis monomial up to degree_bound.
VerificationReport verify_dual_adem(int a, int b, const Model& model,
                                    long degree_bound);

}  // namespace qops
