#pragma once

// Verification of generator-set characterizations for the Hurewicz
// images of the eta family under iterated loop James-Hopf maps, the
// kernel ideal direction, algebraic independence of the images, the
// stable bottom-cell image in stunted models, and the corresponding
// sweeps for the Hopf classes nu and sigma.

#include <optional>

#include "qops/basis.hpp"
#include "qops/element.hpp"
#include "qops/report.hpp"
#include "qops/steenrod.hpp"

namespace qops {

// Where nonvanishing of a formal composite Q^I Q^J is tested: in the
// free operation algebra (nonzero admissible normal form), or on the
// target generator (some normal-form term survives excess truncation).
enum class NonvanishingMode { in_free_algebra, on_generator };

NonvanishingMode parse_mode(const std::string& name);
std::string mode_name(NonvanishingMode mode);

// The k-th generator family for the image of [eta_i]_{6-k}: admissible
// I with excess(I) > 6-k, last entry < 2^{i+1}-3, membership given by
// the k-specific predicate.
struct GeneratorSetSpec {
  int k = 0;
  int i = 4;
  NonvanishingMode mode = NonvanishingMode::on_generator;

  long excess_gt() const { return 6 - k; }
  int cap_lt() const { return (1 << (i + 1)) - 3; }
};

bool in_generator_set(const GeneratorSetSpec& spec, const Word& I);

// Bookkeeping for [eta_i]_j: degree j, home model with finite loop
// bound 2^{i+1}-8+(6-j) over a sphere of dimension 2^i-2. Only the
// image side is ever evaluated.
struct EtaClass {
  int i = 4;
  int j = 6;

  long degree() const { return j; }
  Model home() const {
    return Model::sphere((1 << i) - 2, (1L << (i + 1)) - 8 + (6 - j));
  }
};

// Hurewicz images of the loop-theoretic lifts feeding the James-Hopf
// composites: j = 6 -> g3^2, j = 5 -> Q^3 g2, j = 4 -> Q^3 g1 + g1^4.
// j = 3 is membership-only (its element has undetermined summands);
// j = 1, 2 are out of scope and carry an annotation only.
struct NuHat {
  std::optional<Element> element;
  bool membership_only = false;
  std::string annotation;
};

NuHat nu_hat(int j);

struct JhopfResult {
  std::optional<Element> element;     // k <= 2
  std::optional<bool> membership;     // k == 3
  bool nonzero() const;
};

// Image of Q^I [eta_i]_{6-k} under the k-fold-deloopable James-Hopf
// composite, evaluated in sphere(3-k) (sphere_zero for k = 3, where
// only survival of I*(3) or I*(2,1) is decided). Lower indices of I
// against degree 6-k must stay below 2^{i+1}-9+k (RangeError).
JhopfResult jhopf_image(int k, const Word& I, int i,
                        NonvanishingMode mode = NonvanishingMode::on_generator);

// Sweeps admissible I (excess > 6-k, last entry < cap, length and
// degree bounded) comparing set membership against computed
// nonvanishing of the image.
VerificationReport verify_generators(int k, int i, long max_degree,
                                     int max_length, NonvanishingMode mode,
                                     int threads = 1,
                                     std::optional<int> cap_override = {});

// Sweeps words outside the generator set whose normal-form terms all
// have excess > 6-k and asserts the image vanishes.
VerificationReport kernel_ideal_check(int k, int i, long max_degree,
                                      int max_length, NonvanishingMode mode,
                                      int threads = 1);

// Checks that per-degree ranks of all products of generator-set images
// match the monomial counts of an abstract polynomial algebra on those
// generators (k <= 2).
VerificationReport verify_independence(int k, int i, long max_degree,
                                       NonvanishingMode mode);

struct StableImage {
  Element image;
  bool square_of_bottom = false;
  bool bottom_annihilated = false;
  bool bottom_primitive = false;
};

// Image of g3^2 under the bottom-cell identification with the stunted
// model stunted(2^i-3, -2^i+6): the square of the bottom class.
StableImage stable_image(int i);

// stable_image plus the suspension identity (shift -2^i+7 suspended
// 2^{i+1}-10 times lands on the unshifted bottom class) and sampled
// excess-criterion checks; exposed by the stable CLI verb.
VerificationReport stable_check(int i, int excess_samples = 20);

enum class HopfCase { nu, sigma };

// Theorem sweeps for the Hopf classes: level i image of the base class
// is the bottom generator of sphere(i) (sphere_zero at i = 0); for
// admissible I under the case cap (6 for nu, 14 for sigma) compares the
// excess(I) > 0 filter against computed nonvanishing, which needs
// excess(I) >= i. Discrepancies are reported, never reconciled.
VerificationReport verify_hopf_case(HopfCase hopf_case, int level,
                                    long max_degree, int threads = 1);

// Suspension chain: suspending the j = 4 class gives the j = 5 class,
// suspending that gives the j = 6 class; the j = 6 -> 7 step is
// annotated as out of scope (its vanishing is cited, not computed).
VerificationReport suspension_chain_check();

}  // namespace qops
