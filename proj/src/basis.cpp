#include "qops/basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace qops {

namespace {

bool word_passes(const Word& w, const GeneratorFilters& f) {
  if (f.excess_gt && !(excess(w) > *f.excess_gt)) return false;
  if (f.cap_lt && !w.empty() && !(w.back() < *f.cap_lt)) return false;
  if (f.entry_pred)
    for (int e : w)
      if (!f.entry_pred(e)) return false;
  if (f.max_length && static_cast<long>(w.size()) > *f.max_length) return false;
  return true;
}

bool by_sum_then_lex(const Word& a, const Word& b) {
  long sa = 0, sb = 0;
  for (int e : a) sa += e;
  for (int e : b) sb += e;
  if (sa != sb) return sa < sb;
  return a < b;
}

}  // namespace

std::vector<Word> enumerate_admissible_words(long max_sum,
                                             const GeneratorFilters& filters) {
  std::vector<Word> out;
  if (word_passes({}, filters)) out.push_back({});
  if (max_sum < 1) {
    return out;
  }
  // Words build innermost entry first; prepending i before i1 keeps
  // admissibility iff i <= 2*i1.
  Word rev;  // rev[0] is the innermost entry
  auto emit = [&]() {
    Word w(rev.rbegin(), rev.rend());
    if (word_passes(w, filters)) out.push_back(std::move(w));
  };
  std::function<void(long)> grow = [&](long remaining) {
    emit();
    if (filters.max_length &&
        static_cast<long>(rev.size()) >= *filters.max_length)
      return;
    long cap = std::min<long>(2L * rev.back(), remaining);
    for (int i = 1; i <= cap; ++i) {
      if (filters.entry_pred && !filters.entry_pred(i)) continue;
      rev.push_back(i);
      grow(remaining - i);
      rev.pop_back();
    }
  };
  for (int inner = 1; inner <= max_sum; ++inner) {
    if (filters.cap_lt && !(inner < *filters.cap_lt)) continue;
    if (filters.entry_pred && !filters.entry_pred(inner)) continue;
    if (filters.max_length && *filters.max_length < 1) break;
    rev.assign(1, inner);
    grow(max_sum - inner);
  }
  std::sort(out.begin(), out.end(), by_sum_then_lex);
  return out;
}

std::vector<Word> enumerate_generators(const Model& model, long max_degree,
                                       const GeneratorFilters& filters) {
  if (model.kind == ModelKind::stunted)
    throw std::invalid_argument(
        "generator enumeration by word needs a single-generator model");
  long d = model.generator_dim(model.base_generator());
  GeneratorFilters merged = filters;
  merged.excess_gt = filters.excess_gt ? std::max<long>(d, *filters.excess_gt) : d;
  if (model.loop_bound) {
    // Lower indices of an admissible word peak at the innermost entry,
    // so the loop bound caps it at L-1+d.
    long cap = *model.loop_bound + d;
    merged.cap_lt =
        filters.cap_lt ? std::min<long>(cap, *filters.cap_lt) : cap;
  }
  return enumerate_admissible_words(max_degree - d, merged);
}

namespace {

struct GenEntry {
  int gen;
  Word ops;
  long deg;
};

void check_degree_bounds_monomials(const Model& model) {
  if (model.kind == ModelKind::sphere_zero)
    throw std::invalid_argument(
        "degree does not bound monomials over a degree-0 generator");
  if (model.kind == ModelKind::stunted && model.bottom + model.shift < 1)
    throw std::invalid_argument(
        "degree does not bound monomials when the bottom cell has "
        "dimension < 1");
}

std::vector<GenEntry> collect_generators(const Model& model, long max_degree) {
  std::vector<GenEntry> gens;
  if (model.kind == ModelKind::sphere) {
    long d = model.dim;
    for (Word& w : enumerate_generators(model, max_degree, {})) {
      long deg = word_degree(w, d);
      gens.push_back(GenEntry{model.dim, std::move(w), deg});
    }
    return gens;
  }
  // stunted
  for (int k = model.bottom; k + model.shift <= max_degree; ++k) {
    long base = k + model.shift;
    GeneratorFilters f;
    f.excess_gt = base;
    if (model.loop_bound) f.cap_lt = *model.loop_bound + base;
    for (Word& w : enumerate_admissible_words(max_degree - base, f)) {
      long deg = word_degree(w, base);
      gens.push_back(GenEntry{k, std::move(w), deg});
    }
  }
  return gens;
}

void fill_basis(const std::vector<GenEntry>& gens, std::size_t idx,
                long remaining, std::vector<Instance>& acc,
                std::set<Monomial>& out) {
  if (remaining == 0) {
    out.insert(make_monomial(acc));
    return;
  }
  if (idx == gens.size()) return;
  fill_basis(gens, idx + 1, remaining, acc, out);
  const GenEntry& g = gens[idx];
  for (long e = 1; e * g.deg <= remaining; ++e) {
    acc.push_back(Instance{g.gen, g.ops, e});
    fill_basis(gens, idx + 1, remaining - e * g.deg, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Monomial> enumerate_basis(const Model& model, long degree) {
  check_degree_bounds_monomials(model);
  if (degree < 0) return {};
  if (degree == 0) return {Monomial{}};
  std::vector<GenEntry> gens = collect_generators(model, degree);
  std::set<Monomial> out;
  std::vector<Instance> acc;
  fill_basis(gens, 0, degree, acc, out);
  return {out.begin(), out.end()};
}

std::vector<long> poincare_series(const Model& model, long max_degree) {
  check_degree_bounds_monomials(model);
  if (max_degree < 0) return {};
  std::vector<GenEntry> gens = collect_generators(model, max_degree);
  std::vector<long> series(static_cast<std::size_t>(max_degree) + 1, 0);
  series[0] = 1;
  for (const GenEntry& g : gens) {
    for (long j = g.deg; j <= max_degree; ++j)
      series[static_cast<std::size_t>(j)] +=
          series[static_cast<std::size_t>(j - g.deg)];
  }
  return series;
}

namespace {

Model suspended_model(const Model& m, int& gen_map_base) {
  switch (m.kind) {
    case ModelKind::sphere:
      gen_map_base = m.dim + 1;
      return Model::sphere(m.dim + 1);
    case ModelKind::sphere_zero:
      gen_map_base = 1;
      return Model::sphere(1);
    case ModelKind::stunted:
      gen_map_base = 0;  // stunted keeps generator ids
      return Model::stunted(m.bottom, m.shift + 1);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Element suspend(const Element& x) {
  const Model& m = x.model();
  if (!m.stable())
    throw std::invalid_argument("suspension needs a stable model");
  int base = 0;
  Model target = suspended_model(m, base);
  Element out(target);
  for (const Monomial& term : x.terms()) {
    if (term.instance_count() != 1) continue;  // unit and decomposables die
    const Instance& f = term.factors.front();
    int gen = m.kind == ModelKind::stunted ? f.gen : base;
    out += evaluate(f.ops, Element::generator(target, gen));
  }
  return out;
}

Element suspend_iterated(const Element& x, int times) {
  if (times < 0) throw std::invalid_argument("negative suspension count");
  Element out = x;
  for (int t = 0; t < times; ++t) out = suspend(out);
  return out;
}

Element include_bottom_cell(const Element& x, const Model& target) {
  if (target.kind != ModelKind::stunted)
    throw std::invalid_argument("bottom-cell inclusion targets a stunted model");
  const Model& src = x.model();
  if (src.kind == ModelKind::stunted)
    throw std::invalid_argument("bottom-cell inclusion starts from a sphere model");
  long src_dim = src.generator_dim(src.base_generator());
  long bottom_dim = target.generator_dim(target.bottom);
  if (src_dim != bottom_dim)
    throw std::invalid_argument(
        "generator dimension does not match the bottom cell");
  Element out(target);
  for (const Monomial& term : x.terms()) {
    std::vector<Instance> factors;
    factors.reserve(term.factors.size());
    for (const Instance& f : term.factors)
      factors.push_back(Instance{target.bottom, f.ops, f.exp});
    out.toggle(make_monomial(std::move(factors)));
  }
  return out;
}

}  // namespace qops
