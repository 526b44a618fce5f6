#pragma once

// F2 polynomial elements of a free homology model. A monomial is a
// product of decorated generators Q^I g with I admissible and
// excess(I) > dim(g) (an instance whose excess equals the dimension is
// folded into the square of a shorter decoration). Operation evaluation
// implements instability (Q^s y = 0 for s < |y|, y^2 at s = |y|), the
// Cartan formula on products, and Adem normalization on decorations.

#include <set>
#include <string>
#include <vector>

#include "qops/model.hpp"
#include "qops/opseq.hpp"

namespace qops {

struct Instance {
  int gen = 0;
  Word ops;       // admissible, excess > dim(gen), possibly empty
  long exp = 1;   // >= 1

  bool operator==(const Instance&) const = default;
  auto operator<=>(const Instance&) const = default;
};

struct Monomial {
  std::vector<Instance> factors;  // sorted by (gen, ops), keys unique

  long degree(const Model& model) const;
  bool is_unit() const { return factors.empty(); }
  long instance_count() const;  // total exponent across factors

  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial&) const = default;
};

// Normalizes a factor list: sorts, merges equal keys, drops exp 0.
Monomial make_monomial(std::vector<Instance> factors);

class Element {
 public:
  explicit Element(Model model) : model_(std::move(model)) {}
  Element(Model model, std::set<Monomial> terms)
      : model_(std::move(model)), terms_(std::move(terms)) {}

  static Element zero(const Model& model) { return Element(model); }
  static Element one(const Model& model) {
    return Element(model, {Monomial{}});
  }
  // Bare generator; gen -1 means the model's base generator.
  static Element generator(const Model& model, int gen = -1);

  const Model& model() const { return model_; }
  const std::set<Monomial>& terms() const { return terms_; }
  bool zero_element() const { return terms_.empty(); }
  bool nonzero() const { return !terms_.empty(); }

  void toggle(const Monomial& m);

  Element& operator+=(const Element& other);  // F2: also subtraction
  Element& operator*=(const Element& other);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator*(const Element& a, const Element& b);

  // Degree shared by every term; throws if inhomogeneous or zero.
  long homogeneous_degree() const;

  bool operator==(const Element&) const = default;

 private:
  Model model_;
  std::set<Monomial> terms_;
};

// Q^s x with instability, Cartan, and Adem normalization on
// decorations. For a finite loop bound L the lower index s - |term|
// must be <= L-1 (RangeError otherwise); nonpositive lower indices
// resolve by instability or squaring and are not errors.
Element apply_q(int s, const Element& x);

namespace detail {
// apply_q without the loop-bound check; internal recursions (Nishida,
// coproduct factors) use it so intermediate terms are never range-gated.
Element apply_q_unchecked(int s, const Element& x);
}  // namespace detail

// Applies an upper word innermost entry first.
Element evaluate(const Word& upper_word, const Element& x);
Element evaluate(const FormalOpSum& ops, const Element& x);
// OpSequence form converts lower indexing against the (homogeneous)
// degree of x first.
Element evaluate(const OpSequence& seq, const Element& x);

// Rank over F2 of the span of the degree-d parts, by Gaussian
// elimination over the deterministic monomial order.
long graded_rank(const std::vector<Element>& elements, long degree);

std::string render(const Monomial& m, const Model& model);
std::string render(const Element& e);

}  // namespace qops
