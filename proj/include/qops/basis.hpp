#pragma once

// Monomial bases of the free models: generator enumeration under
// excess/cap/entry filters, homogeneous basis listing, Poincare series
// by generating-function counting, homology suspension, and the
// bottom-cell inclusion into a stunted model.

#include <functional>
#include <optional>
#include <vector>

#include "qops/element.hpp"

namespace qops {

struct GeneratorFilters {
  std::optional<long> excess_gt;            // keep excess(I) > value
  std::optional<int> cap_lt;                // keep last entry < value
  std::function<bool(int)> entry_pred;      // every entry must satisfy
  std::optional<int> max_length;
};

// All admissible upper words I with word sum <= max_sum passing the
// filters, ordered by (sum, lexicographic). Includes the empty word
// when it passes (it always passes excess filters).
std::vector<Word> enumerate_admissible_words(long max_sum,
                                             const GeneratorFilters& filters);

// Decoration words I with deg(Q^I g) <= max_degree for a sphere-kind
// model's generator, same ordering and empty-word rule.
std::vector<Word> enumerate_generators(const Model& model, long max_degree,
                                       const GeneratorFilters& filters);

// All basis monomials of the exact degree, in the deterministic
// monomial order. Degree 0 yields the unit monomial.
std::vector<Monomial> enumerate_basis(const Model& model, long degree);

// Dimensions of degrees 0..max_degree computed from the generator
// degree counts by multiplying out 1/(1-t^d) factors.
std::vector<long> poincare_series(const Model& model, long max_degree);

// Homology suspension: kills decomposables (and the unit), sends a
// decoration Q^I g to evaluate(Q^I, g') over the generator one
// dimension up (sphere n -> n+1, stunted shift m -> m+1). Stable
// models only.
Element suspend(const Element& x);
Element suspend_iterated(const Element& x, int times);

// Multiplicative, operation-compatible map induced by including the
// bottom cell; requires dim(g) == bottom dimension of the target.
Element include_bottom_cell(const Element& x, const Model& target);

}  // namespace qops
