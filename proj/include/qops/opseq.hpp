#pragma once

// Words of Dyer-Lashof operations over F2: admissibility, excess,
// upper/lower indexing conversion, and Adem rewriting to admissible
// normal form. A word (i1, ..., ir) denotes Q^{i1} ... Q^{ir}; entry 0
// is the outermost operation and the last entry acts first. Entries are
// upper indices unless a function says otherwise.

#include <cstddef>
#include <limits>
#include <set>
#include <string>
#include <vector>

namespace qops {

using Word = std::vector<int>;

enum class Indexing { upper, lower };

struct OpSequence {
  Word entries;
  Indexing indexing = Indexing::upper;

  bool operator==(const OpSequence&) const = default;
};

// excess(()) = +infinity: the empty word passes every excess filter.
inline constexpr long kExcessInfinity = std::numeric_limits<long>::max();

// Upper words only: (i1, ..., ir) is admissible iff i_j <= 2*i_{j+1}.
bool is_admissible(const Word& word);
bool is_admissible(const OpSequence& seq);

// excess(i1, ..., ir) = i1 - (i2 + ... + ir); upper words only.
long excess(const Word& word);
long excess(const OpSequence& seq);

// Degree of Q^I x for x of the given degree: each upper entry adds
// itself (Q^s raises degree by s).
long word_degree(const Word& word, long base_degree);

// Lower indices of an upper word applied to a class of base_degree,
// outermost first. Values may be nonpositive; no range checking.
std::vector<long> lower_indices(const Word& upper, long base_degree);

// Converts between indexings, innermost entry outward, tracking the
// accumulating degree (lower index a on a degree-d class is upper index
// a + d and the result has degree a + 2d). Throws std::domain_error if
// an output entry would be nonpositive.
OpSequence convert_indexing(const OpSequence& seq, long base_degree, Indexing to);

// F2 sum of upper-indexed words; set membership is the coefficient.
struct FormalOpSum {
  std::set<Word> terms;

  bool zero() const { return terms.empty(); }
  void toggle(const Word& w);
  FormalOpSum& operator^=(const FormalOpSum& other);
  bool operator==(const FormalOpSum&) const = default;
};

// Adem expansion of an inadmissible pair (r > 2s):
//   Q^r Q^s = sum_i binom(i-s-1, 2i-r) Q^{r+s-i} Q^i,  0 <= 2i-r <= i-s-1.
// Output pairs need not be admissible themselves.
FormalOpSum adem_step(int r, int s);

enum class RewriteStrategy { leftmost, rightmost };

// Rewrites the word to its admissible normal form by repeatedly
// expanding the leftmost (or rightmost) inadmissible adjacent pair.
// A word containing a nonpositive entry is the zero operation.
FormalOpSum normalize(const Word& word,
                      RewriteStrategy strategy = RewriteStrategy::leftmost);

// Process-wide memo of leftmost-strategy normal forms; purely an
// optimization. The snapshot encoding is one record per line,
// "w1,w2 -> t1,t2;t3,t4" (empty right side for a vanishing word).
namespace normalization_cache {
void clear();
std::size_t size();
void load(const std::string& path);
void save(const std::string& path);
}  // namespace normalization_cache

std::string render(const Word& word);        // "Q^16 Q^8"; "1" for the empty word
std::string render(const FormalOpSum& sum);  // " + "-joined terms; "0" if zero

}  // namespace qops
