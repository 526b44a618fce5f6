// Acceptance sweep: one line per criterion, exit code = number of failures.
// Expected values marked "frozen" were produced by the definitional
// evaluator in tests/oracles.hpp before being pinned here.
#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qops/basis.hpp"
#include "qops/cli.hpp"
#include "qops/element.hpp"
#include "qops/steenrod.hpp"
#include "qops/verifier.hpp"

using namespace qops;

namespace {

int failures = 0;
std::chrono::steady_clock::time_point mark;

void start() { mark = std::chrono::steady_clock::now(); }

long elapsed_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - mark)
      .count();
}

void report(int criterion, bool ok, long ms, const std::string& note) {
  if (!ok) ++failures;
  std::cout << "criterion " << criterion << ": " << (ok ? "PASS" : "FAIL")
            << " (" << ms << " ms)" << (note.empty() ? "" : "  ") << note
            << "\n";
}

// admissible words, length <= 2, every entry < 29, excess > 6-k,
// class degree (6-k) + sum <= 50; the empty word is included
std::vector<Word> sweep_words(int k) {
  std::vector<Word> out;
  out.push_back({});
  for (int a = 1; a < 29; ++a) {
    if (a + 6 - k <= 50 && a > 6 - k) out.push_back({a});
    for (int b = 1; b < 29; ++b) {
      if (a > 2 * b) continue;
      if (a + b + 6 - k > 50) continue;
      if (a - b <= 6 - k) continue;
      out.push_back({a, b});
    }
  }
  return out;
}

bool oracle_survives(const Word& I, const Word& tail) {
  Word w = I;
  w.insert(w.end(), tail.begin(), tail.end());
  for (const Word& t : oracle::normal_form(w))
    if (oracle::excess_of(t) >= 0) return true;
  return false;
}

void criterion_1() {
  start();
  std::ostringstream out, err;
  int code = run({"image", "--k", "0", "--i", "4", "--seq", ""}, out, err);
  long ms = elapsed_ms();
  bool ok = code == 0 && out.str() == "g_3^2\n" && ms < 1000;
  report(1, ok, ms, "base image " + out.str().substr(0, out.str().size() - 1));
}

void criterion_2() {
  start();
  Element g3 = Element::generator(Model::sphere(3));
  long mismatches = 0, halving_failures = 0, words = 0;
  for (const Word& I : sweep_words(0)) {
    ++words;
    bool predicted = true;
    for (int e : I)
      if (e % 2) predicted = false;
    JhopfResult res = jhopf_image(0, I, 4);
    if (predicted != res.nonzero()) ++mismatches;
    if (res.nonzero()) {
      Word half = I;
      for (int& e : half) e /= 2;
      Element root = evaluate(half, g3);
      if (*res.element != root * root) ++halving_failures;
    }
  }
  bool sweeps_clean =
      verify_generators(0, 4, 50, 2, NonvanishingMode::on_generator)
              .mismatch_count() == 0 &&
      verify_generators(0, 4, 50, 2, NonvanishingMode::in_free_algebra)
              .mismatch_count() == 0;
  long ms = elapsed_ms();
  std::ostringstream note;
  note << words << " words, " << mismatches << " mismatches, "
       << halving_failures << " halving failures";
  report(2, mismatches == 0 && halving_failures == 0 && sweeps_clean &&
                ms < 10000,
         ms, note.str());
}

void criterion_3() {
  start();
  const long pinned_mismatches[4] = {0, 0, 0, 0};  // frozen, k = 1..3 used
  bool ok = true;
  std::ostringstream note;
  for (int k = 1; k <= 3; ++k) {
    VerificationReport gen =
        verify_generators(k, 4, 50, 2, NonvanishingMode::on_generator);
    VerificationReport ker =
        kernel_ideal_check(k, 4, 50, 2, NonvanishingMode::on_generator);
    long oracle_disagrees = 0;
    for (const ReportRecord& r : gen.records) {
      bool oracle_pred = oracle::in_I(k, 4, r.seq);
      bool oracle_comp =
          k == 3 ? (oracle_survives(r.seq, {3}) ||
                    oracle_survives(r.seq, {2, 1}))
                 : !oracle::o_evaluate(r.seq, oracle::nu_hat(6 - k)).zero();
      if (oracle_pred != r.predicted || oracle_comp != r.computed_nonzero)
        ++oracle_disagrees;
    }
    long kernel_leaks = 0;
    for (const ReportRecord& r : ker.records) {
      bool oracle_comp =
          k == 3 ? (oracle_survives(r.seq, {3}) ||
                    oracle_survives(r.seq, {2, 1}))
                 : !oracle::o_evaluate(r.seq, oracle::nu_hat(6 - k)).zero();
      if (oracle_comp || r.computed_nonzero) ++kernel_leaks;
    }
    if (static_cast<long>(gen.mismatch_count()) != pinned_mismatches[k] ||
        ker.mismatch_count() != 0 || oracle_disagrees != 0 ||
        kernel_leaks != 0)
      ok = false;
    note << "k=" << k << " gen=" << gen.mismatch_count()
         << " kernel=" << ker.mismatch_count()
         << " oracle_disagrees=" << oracle_disagrees << "  ";
  }
  long ms = elapsed_ms();
  report(3, ok && ms < 30000, ms, note.str());
}

void criterion_4() {
  start();
  VerificationReport zero =
      verify_independence(0, 4, 30, NonvanishingMode::on_generator);
  VerificationReport one =
      verify_independence(1, 4, 30, NonvanishingMode::on_generator);
  long ms = elapsed_ms();
  bool ok = zero.mismatch_count() == 0 && one.mismatch_count() == 0 &&
            ms < 60000;
  std::ostringstream note;
  note << "k=0 mismatches=" << zero.mismatch_count()
       << ", k=1 mismatches=" << one.mismatch_count();
  if (one.mismatch_count() != 0) {
    // Explain the failure and confirm it with the independent evaluator:
    // the image of Q^16 Q^9 over the degree-5 class equals the square of
    // the image of Q^10, so the listed set is not algebraically
    // independent and the degree-30 rank drops below the monomial count.
    oracle::OElem cls = oracle::nu_hat(5);
    oracle::OElem big = oracle::o_evaluate(Word{16, 9}, cls);
    oracle::OElem small = oracle::o_evaluate(Word{10}, cls);
    bool confirmed = big == oracle::o_mul(small, small) && !big.zero();
    note << "; image(Q^16 Q^9) = image(Q^10)^2 "
         << (confirmed ? "confirmed" : "NOT confirmed")
         << " by the independent evaluator, so the rank of degree-30 "
            "products is one short of the abstract monomial count";
  }
  report(4, ok, ms, note.str());
}

void criterion_5() {
  start();
  std::mt19937_64 rng(20260817);
  std::uniform_int_distribution<int> len(1, 4), entry(1, 24);
  long disagreements = 0;
  for (int t = 0; t < 1000; ++t) {
    Word w(static_cast<std::size_t>(len(rng)));
    for (int& e : w) e = entry(rng);
    if (normalize(w, RewriteStrategy::leftmost) !=
        normalize(w, RewriteStrategy::rightmost))
      ++disagreements;
  }
  long ms = elapsed_ms();
  std::ostringstream note;
  note << "1000 words, " << disagreements << " strategy disagreements";
  report(5, disagreements == 0 && ms < 5000, ms, note.str());
}

void criterion_6() {
  start();
  long bad = 0;
  for (int d = 1; d <= 6; ++d) {
    Model m = Model::sphere(d);
    Element g = Element::generator(m);
    for (int r = 1; r <= 24; ++r) {
      Element lhs = evaluate(normalize(Word{r, d}), g);
      Element cartan = evaluate(Word{r}, g * g);
      Element closed = Element::zero(m);
      if (r % 2 == 0 && r >= 2 * d) {
        Element root = evaluate(Word{r / 2}, g);
        closed = root * root;
      }
      if (lhs != cartan || cartan != closed) ++bad;
    }
  }
  long ms = elapsed_ms();
  std::ostringstream note;
  note << "144 pairs, " << bad << " inconsistencies";
  report(6, bad == 0, ms, note.str());
}

void criterion_7() {
  start();
  long rows = 0, mismatches = 0;
  for (int n = 1; n <= 3; ++n) {
    Model m = Model::sphere(n);
    for (int b = 1; b <= 11; ++b)
      for (int a = 1; a < 2 * b && a + b <= 12; ++a) {
        VerificationReport r = verify_dual_adem(a, b, m, 24);
        rows += static_cast<long>(r.records.size());
        mismatches += static_cast<long>(r.mismatch_count());
      }
  }
  long sq1_bad = 0, sq1_rows = 0;
  for (int n = 1; n <= 3; ++n) {
    Model m = Model::sphere(n);
    for (long d = 0; d <= 24; ++d)
      for (const Monomial& mono : enumerate_basis(m, d)) {
        Element x(m, {mono});
        for (int s = 1; s + d <= 24; ++s) {
          ++sq1_rows;
          Element lhs = sq_act(1, evaluate(Word{s}, x));
          Element rhs =
              s % 2 == 0 ? evaluate(Word{s - 1}, x) : Element::zero(m);
          if (lhs != rhs) ++sq1_bad;
        }
      }
  }
  long ms = elapsed_ms();
  std::ostringstream note;
  note << rows << " dual-Adem rows, " << mismatches << " mismatches; "
       << sq1_rows << " Sq^1 identities, " << sq1_bad << " bad";
  report(7, mismatches == 0 && sq1_bad == 0, ms, note.str());
}

void criterion_8() {
  start();
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> sphere(1, 3);
  long built = 0, bad = 0;
  while (built < 200) {
    Model m = Model::sphere(sphere(rng));
    std::uniform_int_distribution<long> deg(m.dim, 14);
    std::vector<Monomial> basis = enumerate_basis(m, deg(rng));
    if (basis.empty()) continue;
    Element xi = Element::zero(m);
    std::uniform_int_distribution<int> coin(0, 1);
    for (const Monomial& mono : basis)
      if (coin(rng)) xi = xi + Element(m, {mono});
    if (!xi.nonzero()) continue;
    ++built;
    for (int r = 1; r <= 6; ++r) {
      Element lhs = sq_act(2 * r, xi * xi);
      Element half = sq_act(r, xi);
      if (lhs != half * half) ++bad;
    }
  }
  long ms = elapsed_ms();
  std::ostringstream note;
  note << "200 classes x 6 exponents, " << bad << " failures";
  report(8, bad == 0, ms, note.str());
}

void criterion_9() {
  start();
  VerificationReport chain = suspension_chain_check();
  Element g1 = Element::generator(Model::sphere(1));
  Element g2 = Element::generator(Model::sphere(2));
  bool dies = evaluate(Word{2, 1}, g1) == g1 * g1 * g1 * g1 &&
              !evaluate(Word{2, 1}, g2).nonzero();
  long ms = elapsed_ms();
  std::ostringstream note;
  note << chain.records.size() << " links, " << chain.mismatch_count()
       << " broken; Q^2 Q^1 dies over the 2-sphere: " << (dies ? "yes" : "no");
  report(9, chain.mismatch_count() == 0 && chain.records.size() == 3 && dies,
         ms, note.str());
}

void criterion_10() {
  start();
  const char* rendered[3] = {"a_5[-2]^2", "a_13[-10]^2", "a_29[-26]^2"};
  const int samples[3] = {20, 5, 3};
  bool ok = true;
  std::ostringstream note;
  for (int i = 3; i <= 5; ++i) {
    StableImage s = stable_image(i);
    VerificationReport r = stable_check(i, samples[i - 3]);
    bool here = s.square_of_bottom && s.bottom_annihilated &&
                s.bottom_primitive && render(s.image) == rendered[i - 3] &&
                r.mismatch_count() == 0;
    if (!here) ok = false;
    note << "i=" << i << " " << render(s.image) << " mismatches="
         << r.mismatch_count() << "  ";
  }
  report(10, ok, elapsed_ms(), note.str());
}

void criterion_11() {
  start();
  // frozen record and mismatch counts per adjoint level
  const long nu_records[4] = {17973, 10017, 5582, 3110};
  const long nu_mism[4] = {19, 0, 9, 14};
  const long sigma_records[8] = {61957, 34516, 19225, 10706,
                                 5959,  3315,  1843,  1023};
  const long sigma_mism[8] = {25, 0, 13, 20, 21, 21, 19, 18};
  bool ok = true;
  long oracle_disagrees = 0;
  std::ostringstream note;
  for (int which = 0; which < 2; ++which) {
    bool is_nu = which == 0;
    int levels = is_nu ? 3 : 7;
    long maxdeg = is_nu ? 16 : 18;
    note << (is_nu ? "nu:" : "sigma:");
    for (int level = 0; level <= levels; ++level) {
      VerificationReport r = verify_hopf_case(
          is_nu ? HopfCase::nu : HopfCase::sigma, level, maxdeg);
      long want_records = is_nu ? nu_records[level] : sigma_records[level];
      long want_mism = is_nu ? nu_mism[level] : sigma_mism[level];
      if (static_cast<long>(r.records.size()) != want_records ||
          static_cast<long>(r.mismatch_count()) != want_mism)
        ok = false;
      oracle::OElem g = oracle::o_generator(level);
      for (const ReportRecord& rec : r.records) {
        bool oracle_filter =
            rec.seq.empty() || oracle::excess_of(rec.seq) > 0;
        bool oracle_nonzero =
            rec.seq.empty() || !oracle::o_evaluate(rec.seq, g).zero();
        if (oracle_filter != rec.predicted ||
            oracle_nonzero != rec.computed_nonzero)
          ++oracle_disagrees;
      }
      note << " " << r.mismatch_count();
    }
    note << "  ";
  }
  if (oracle_disagrees != 0) ok = false;
  note << "(filter-vs-instability gaps as frozen; evaluator paths disagree "
          "on "
       << oracle_disagrees << " records)";
  report(11, ok, elapsed_ms(), note.str());
}

void criterion_12() {
  start();
  const long sphere3_window[8] = {1, 0, 0, 1, 1, 1, 2, 2};  // degrees 3..10
  bool ok = true;
  std::ostringstream note;
  for (int n = 1; n <= 3; ++n) {
    std::vector<long> series = poincare_series(Model::sphere(n), 30);
    std::vector<long> degs{n};
    for (const Word& I : oracle::generator_words(30 - n, n))
      degs.push_back(n + oracle::word_sum(I));
    long diffs = 0;
    for (long d = 0; d <= 30; ++d)
      if (series[static_cast<std::size_t>(d)] !=
          oracle::count_monomials(degs, 0, d))
        ++diffs;
    if (diffs != 0) ok = false;
    note << "sphere(" << n << ") diffs=" << diffs << "  ";
    if (n == 3)
      for (int d = 3; d <= 10; ++d)
        if (series[static_cast<std::size_t>(d)] != sphere3_window[d - 3])
          ok = false;
  }
  report(12, ok, elapsed_ms(), note.str());
}

}  // namespace

int main() {
  auto total0 = std::chrono::steady_clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  long total =
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - total0)
          .count();
  std::cout << "total: " << total << " ms (target 120000), " << failures
            << (failures == 1 ? " criterion failed\n" : " criteria failed\n");
  return failures;
}
