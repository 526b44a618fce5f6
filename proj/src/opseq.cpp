#include "qops/opseq.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "qops/f2.hpp"

namespace qops {

bool is_admissible(const Word& word) {
  for (std::size_t j = 0; j + 1 < word.size(); ++j)
    if (word[j] > 2 * word[j + 1]) return false;
  return true;
}

bool is_admissible(const OpSequence& seq) {
  if (seq.indexing != Indexing::upper)
    throw std::invalid_argument("admissibility is defined on upper indexing; convert first");
  return is_admissible(seq.entries);
}

long excess(const Word& word) {
  if (word.empty()) return kExcessInfinity;
  long tail = 0;
  for (std::size_t j = 1; j < word.size(); ++j) tail += word[j];
  return word[0] - tail;
}

long excess(const OpSequence& seq) {
  if (seq.indexing != Indexing::upper)
    throw std::invalid_argument("excess is defined on upper indexing; convert first");
  return excess(seq.entries);
}

long word_degree(const Word& word, long base_degree) {
  long d = base_degree;
  for (int e : word) d += e;
  return d;
}

std::vector<long> lower_indices(const Word& upper, long base_degree) {
  std::vector<long> out(upper.size());
  long d = base_degree;
  for (std::size_t j = upper.size(); j-- > 0;) {
    out[j] = upper[j] - d;
    d += upper[j];
  }
  return out;
}

OpSequence convert_indexing(const OpSequence& seq, long base_degree, Indexing to) {
  if (seq.indexing == to) return seq;
  OpSequence out;
  out.indexing = to;
  out.entries.resize(seq.entries.size());
  long d = base_degree;
  if (to == Indexing::lower) {
    for (std::size_t j = seq.entries.size(); j-- > 0;) {
      long a = seq.entries[j] - d;
      if (a <= 0)
        throw std::domain_error("conversion produced a nonpositive lower index");
      out.entries[j] = static_cast<int>(a);
      d += seq.entries[j];
    }
  } else {
    for (std::size_t j = seq.entries.size(); j-- > 0;) {
      long s = seq.entries[j] + d;
      if (s <= 0)
        throw std::domain_error("conversion produced a nonpositive upper index");
      out.entries[j] = static_cast<int>(s);
      d = seq.entries[j] + 2 * d;
    }
  }
  return out;
}

void FormalOpSum::toggle(const Word& w) {
  auto it = terms.find(w);
  if (it == terms.end())
    terms.insert(w);
  else
    terms.erase(it);
}

FormalOpSum& FormalOpSum::operator^=(const FormalOpSum& other) {
  for (const Word& w : other.terms) toggle(w);
  return *this;
}

FormalOpSum adem_step(int r, int s) {
  if (s < 1 || r <= 2 * s)
    throw std::invalid_argument("adem_step needs an inadmissible pair r > 2s >= 2");
  FormalOpSum out;
  // 0 <= 2i-r <= i-s-1 bounds i to [ceil(r/2), r-s-1].
  for (int i = (r + 1) / 2; i <= r - s - 1; ++i) {
    if (binom_mod2(i - s - 1, 2 * i - r)) out.toggle({r + s - i, i});
  }
  return out;
}

namespace {

// Position of the pair to rewrite, or npos if admissible.
std::size_t find_pair(const Word& w, RewriteStrategy strategy) {
  if (w.size() < 2) return static_cast<std::size_t>(-1);
  if (strategy == RewriteStrategy::leftmost) {
    for (std::size_t j = 0; j + 1 < w.size(); ++j)
      if (w[j] > 2 * w[j + 1]) return j;
  } else {
    for (std::size_t j = w.size() - 1; j-- > 0;)
      if (w[j] > 2 * w[j + 1]) return j;
  }
  return static_cast<std::size_t>(-1);
}

struct LeftmostCache {
  std::shared_mutex mutex;
  std::map<Word, FormalOpSum> table;
};

LeftmostCache& cache() {
  static LeftmostCache c;
  return c;
}

FormalOpSum normalize_uncached(const Word& word, RewriteStrategy strategy);

FormalOpSum normalize_term(const Word& word, RewriteStrategy strategy) {
  if (strategy != RewriteStrategy::leftmost)
    return normalize_uncached(word, strategy);
  {
    std::shared_lock lock(cache().mutex);
    auto it = cache().table.find(word);
    if (it != cache().table.end()) return it->second;
  }
  FormalOpSum result = normalize_uncached(word, strategy);
  {
    std::unique_lock lock(cache().mutex);
    cache().table.emplace(word, result);
  }
  return result;
}

FormalOpSum normalize_uncached(const Word& word, RewriteStrategy strategy) {
  std::size_t j = find_pair(word, strategy);
  if (j == static_cast<std::size_t>(-1)) return FormalOpSum{{word}};
  FormalOpSum out;
  for (const Word& pair : adem_step(word[j], word[j + 1]).terms) {
    Word next(word.begin(), word.begin() + j);
    next.push_back(pair[0]);
    next.push_back(pair[1]);
    next.insert(next.end(), word.begin() + j + 2, word.end());
    out ^= normalize_term(next, strategy);
  }
  return out;
}

}  // namespace

FormalOpSum normalize(const Word& word, RewriteStrategy strategy) {
  for (int e : word)
    if (e <= 0) return FormalOpSum{};  // zero operation
  return normalize_term(word, strategy);
}

namespace normalization_cache {

void clear() {
  std::unique_lock lock(cache().mutex);
  cache().table.clear();
}

std::size_t size() {
  std::shared_lock lock(cache().mutex);
  return cache().table.size();
}

namespace {

std::string encode_word(const Word& w) {
  std::ostringstream os;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (j) os << ',';
    os << w[j];
  }
  return os.str();
}

Word decode_word(const std::string& text) {
  Word w;
  std::istringstream is(text);
  std::string part;
  while (std::getline(is, part, ',')) {
    std::size_t pos = 0;
    int value = std::stoi(part, &pos);
    if (pos != part.size()) throw std::invalid_argument("bad cache entry: " + part);
    w.push_back(value);
  }
  return w;
}

}  // namespace

void load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read cache file: " + path);
  std::map<Word, FormalOpSum> loaded;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t arrow = line.find(" -> ");
    if (arrow == std::string::npos)
      throw std::invalid_argument("bad cache line: " + line);
    Word key = decode_word(line.substr(0, arrow));
    FormalOpSum value;
    std::string rhs = line.substr(arrow + 4);
    if (!rhs.empty()) {
      std::istringstream terms(rhs);
      std::string term;
      while (std::getline(terms, term, ';')) value.toggle(decode_word(term));
    }
    loaded.emplace(std::move(key), std::move(value));
  }
  std::unique_lock lock(cache().mutex);
  for (auto& [k, v] : loaded) cache().table.insert_or_assign(k, v);
}

void save(const std::string& path) {
  std::map<Word, FormalOpSum> snapshot;
  {
    std::shared_lock lock(cache().mutex);
    snapshot = cache().table;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write cache file: " + path);
  for (const auto& [key, value] : snapshot) {
    out << encode_word(key) << " -> ";
    bool first = true;
    for (const Word& term : value.terms) {
      if (!first) out << ';';
      first = false;
      out << encode_word(term);
    }
    out << '\n';
  }
}

}  // namespace normalization_cache

std::string render(const Word& word) {
  if (word.empty()) return "1";
  std::ostringstream os;
  for (std::size_t j = 0; j < word.size(); ++j) {
    if (j) os << ' ';
    os << "Q^" << word[j];
  }
  return os.str();
}

std::string render(const FormalOpSum& sum) {
  if (sum.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Word& w : sum.terms) {
    if (!first) os << " + ";
    first = false;
    os << render(w);
  }
  return os.str();
}

}  // namespace qops
