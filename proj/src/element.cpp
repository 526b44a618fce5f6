#include "qops/element.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qops/errors.hpp"

namespace qops {

long Monomial::degree(const Model& model) const {
  long d = 0;
  for (const Instance& f : factors)
    d += f.exp * word_degree(f.ops, model.generator_dim(f.gen));
  return d;
}

long Monomial::instance_count() const {
  long n = 0;
  for (const Instance& f : factors) n += f.exp;
  return n;
}

Monomial make_monomial(std::vector<Instance> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (Instance& f : factors) {
    if (f.exp == 0) continue;
    if (f.exp < 0) throw std::invalid_argument("negative exponent");
    if (!m.factors.empty() && m.factors.back().gen == f.gen &&
        m.factors.back().ops == f.ops)
      m.factors.back().exp += f.exp;
    else
      m.factors.push_back(std::move(f));
  }
  return m;
}

Element Element::generator(const Model& model, int gen) {
  if (gen < 0) gen = model.base_generator();
  model.generator_dim(gen);  // validates
  return Element(model, {Monomial{{Instance{gen, {}, 1}}}});
}

void Element::toggle(const Monomial& m) {
  auto it = terms_.find(m);
  if (it == terms_.end())
    terms_.insert(m);
  else
    terms_.erase(it);
}

Element& Element::operator+=(const Element& other) {
  if (model_ != other.model_)
    throw std::invalid_argument("elements live in different models");
  for (const Monomial& m : other.terms_) toggle(m);
  return *this;
}

namespace {

Monomial mul_monomials(const Monomial& a, const Monomial& b) {
  std::vector<Instance> factors = a.factors;
  factors.insert(factors.end(), b.factors.begin(), b.factors.end());
  return make_monomial(std::move(factors));
}

}  // namespace

Element& Element::operator*=(const Element& other) {
  *this = *this * other;
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  if (a.model() != b.model())
    throw std::invalid_argument("elements live in different models");
  Element out(a.model());
  for (const Monomial& ma : a.terms())
    for (const Monomial& mb : b.terms()) out.toggle(mul_monomials(ma, mb));
  return out;
}

long Element::homogeneous_degree() const {
  if (terms_.empty()) throw std::invalid_argument("zero element has no degree");
  long d = terms_.begin()->degree(model_);
  for (const Monomial& m : terms_)
    if (m.degree(model_) != d)
      throw std::invalid_argument("element is not homogeneous");
  return d;
}

namespace {

// Admissible word over a generator, folded through excess truncation:
// excess < dim kills the class, excess == dim squares the rest of the
// decoration (lower indices of an admissible word are nondecreasing, so
// the fold needs no backtracking).
Element instantiate(const Word& admissible, int gen, const Model& model) {
  long d = model.generator_dim(gen);
  Word span = admissible;
  long e = 1;
  while (true) {
    long exc = excess(span);
    if (exc < d) return Element::zero(model);
    if (exc == d && !span.empty()) {
      e *= 2;
      span.erase(span.begin());
      continue;
    }
    break;
  }
  return Element(model, {Monomial{{Instance{gen, span, e}}}});
}

Element apply_q_units(int s, const std::vector<Instance>& units,
                      std::size_t from, const Model& model,
                      std::vector<std::vector<std::optional<Element>>>& memo);

// Q^s on a single generator instance.
Element apply_q_instance(int s, const Instance& unit, const Model& model) {
  long d = word_degree(unit.ops, model.generator_dim(unit.gen));
  if (s < d) return Element::zero(model);
  if (s == d)
    return Element(model, {Monomial{{Instance{unit.gen, unit.ops, 2}}}});
  Word w;
  w.reserve(unit.ops.size() + 1);
  w.push_back(s);
  w.insert(w.end(), unit.ops.begin(), unit.ops.end());
  if (is_admissible(w)) return instantiate(w, unit.gen, model);
  Element out(model);
  for (const Word& term : normalize(w).terms)
    out += instantiate(term, unit.gen, model);
  return out;
}

// Cartan formula across the unit factors of a monomial, memoized over
// (suffix start, budget).
Element apply_q_units(int s, const std::vector<Instance>& units,
                      std::size_t from, const Model& model,
                      std::vector<std::vector<std::optional<Element>>>& memo) {
  if (from == units.size()) {
    return s == 0 ? Element::one(model) : Element::zero(model);
  }
  auto& slot = memo[from][static_cast<std::size_t>(s)];
  if (slot) return *slot;
  Element out(model);
  if (from + 1 == units.size()) {
    out = apply_q_instance(s, units[from], model);
  } else {
    for (int a = 0; a <= s; ++a) {
      Element head = apply_q_instance(a, units[from], model);
      if (head.zero_element()) continue;
      Element tail = apply_q_units(s - a, units, from + 1, model, memo);
      if (tail.zero_element()) continue;
      out += head * tail;
    }
  }
  slot = out;
  return out;
}

std::vector<Instance> expand_units(const Monomial& m) {
  std::vector<Instance> units;
  for (const Instance& f : m.factors)
    for (long c = 0; c < f.exp; ++c) units.push_back(Instance{f.gen, f.ops, 1});
  return units;
}

Element apply_q_monomial(int s, const Monomial& m, const Model& model) {
  if (m.is_unit())
    return s == 0 ? Element::one(model) : Element::zero(model);
  std::vector<Instance> units = expand_units(m);
  if (units.size() == 1) return apply_q_instance(s, units[0], model);
  std::vector<std::vector<std::optional<Element>>> memo(
      units.size() + 1,
      std::vector<std::optional<Element>>(static_cast<std::size_t>(s) + 1));
  return apply_q_units(s, units, 0, model, memo);
}

}  // namespace

namespace detail {

Element apply_q_unchecked(int s, const Element& x) {
  if (s < 0) throw std::invalid_argument("negative operation index");
  Element out(x.model());
  for (const Monomial& m : x.terms()) out += apply_q_monomial(s, m, x.model());
  return out;
}

}  // namespace detail

Element apply_q(int s, const Element& x) {
  if (s < 0) throw std::invalid_argument("negative operation index");
  const auto& bound = x.model().loop_bound;
  if (bound) {
    for (const Monomial& m : x.terms()) {
      long a = s - m.degree(x.model());
      if (a > *bound - 1) {
        std::ostringstream os;
        os << "lower index " << a << " outside the model's admitted range (<= "
           << (*bound - 1) << ")";
        throw RangeError(os.str());
      }
    }
  }
  return detail::apply_q_unchecked(s, x);
}

Element evaluate(const Word& upper_word, const Element& x) {
  Element acc = x;
  for (std::size_t j = upper_word.size(); j-- > 0;)
    acc = apply_q(upper_word[j], acc);
  return acc;
}

Element evaluate(const FormalOpSum& ops, const Element& x) {
  Element out(x.model());
  for (const Word& w : ops.terms) out += evaluate(w, x);
  return out;
}

Element evaluate(const OpSequence& seq, const Element& x) {
  if (seq.indexing == Indexing::upper) return evaluate(seq.entries, x);
  if (x.zero_element()) return x;
  OpSequence upper =
      convert_indexing(seq, x.homogeneous_degree(), Indexing::upper);
  return evaluate(upper.entries, x);
}

long graded_rank(const std::vector<Element>& elements, long degree) {
  if (elements.empty()) return 0;
  const Model& model = elements.front().model();
  std::set<Monomial> universe;
  for (const Element& e : elements) {
    if (e.model() != model)
      throw std::invalid_argument("elements live in different models");
    for (const Monomial& m : e.terms())
      if (m.degree(model) == degree) universe.insert(m);
  }
  std::vector<Monomial> columns(universe.begin(), universe.end());
  std::size_t width = (columns.size() + 63) / 64;
  std::vector<std::vector<unsigned long long>> rows;
  for (const Element& e : elements) {
    std::vector<unsigned long long> row(width, 0);
    bool any = false;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (e.terms().count(columns[c])) {
        row[c / 64] |= 1ULL << (c % 64);
        any = true;
      }
    }
    if (any) rows.push_back(std::move(row));
  }
  long rank = 0;
  std::size_t pivot_col = 0;
  for (std::size_t c = 0; c < columns.size() && pivot_col < rows.size(); ++c) {
    std::size_t blk = c / 64;
    unsigned long long bit = 1ULL << (c % 64);
    std::size_t pivot = pivot_col;
    while (pivot < rows.size() && !(rows[pivot][blk] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[pivot_col]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != pivot_col && (rows[r][blk] & bit))
        for (std::size_t b = 0; b < width; ++b) rows[r][b] ^= rows[pivot_col][b];
    }
    ++pivot_col;
    ++rank;
  }
  return rank;
}

namespace {

std::string render_base(int gen, const Model& model) {
  std::ostringstream os;
  if (model.kind == ModelKind::stunted)
    os << "a_" << gen << "[" << model.shift << "]";
  else
    os << "g_" << gen;
  return os.str();
}

std::string render_instance(const Instance& f, const Model& model) {
  std::ostringstream os;
  std::string body;
  {
    std::ostringstream b;
    for (int s : f.ops) b << "Q^" << s << ' ';
    b << render_base(f.gen, model);
    body = b.str();
  }
  if (f.exp == 1) return body;
  if (f.ops.empty()) {
    os << body << '^' << f.exp;
  } else {
    os << '(' << body << ")^" << f.exp;
  }
  return os.str();
}

}  // namespace

std::string render(const Monomial& m, const Model& model) {
  if (m.is_unit()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Instance& f : m.factors) {
    if (!first) os << " * ";
    first = false;
    os << render_instance(f, model);
  }
  return os.str();
}

std::string render(const Element& e) {
  if (e.zero_element()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Monomial& m : e.terms()) {
    if (!first) os << " + ";
    first = false;
    os << render(m, e.model());
  }
  return os.str();
}

}  // namespace qops
