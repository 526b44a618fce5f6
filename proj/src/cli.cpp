#include "qops/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qops/basis.hpp"
#include "qops/element.hpp"
#include "qops/errors.hpp"
#include "qops/model.hpp"
#include "qops/opseq.hpp"
#include "qops/report.hpp"
#include "qops/steenrod.hpp"
#include "qops/verifier.hpp"

namespace qops {

namespace {

Word parse_seq(const std::string& text) {
  Word w;
  if (text.empty()) return w;
  std::istringstream is(text);
  std::string part;
  while (std::getline(is, part, ',')) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(part, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != part.size() || part.empty())
      throw std::invalid_argument("malformed sequence entry '" + part + "'");
    w.push_back(value);
  }
  return w;
}

std::string csv_quote(const std::string& s) { return '"' + s + '"'; }

std::string seq_csv(const Word& w) {
  std::ostringstream os;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (j) os << ',';
    os << w[j];
  }
  return os.str();
}

void emit_words(const std::vector<Word>& words, OutputFormat format,
                std::ostream& out) {
  switch (format) {
    case OutputFormat::text:
      for (const Word& w : words) out << render(w) << '\n';
      return;
    case OutputFormat::json:
      for (const Word& w : words)
        out << nlohmann::ordered_json{{"seq", w}}.dump() << '\n';
      return;
    case OutputFormat::csv:
      out << "seq\n";
      for (const Word& w : words) out << csv_quote(seq_csv(w)) << '\n';
      return;
  }
}

struct CachePlan {
  std::string path;

  void load_if_present() const {
    if (!path.empty() && std::filesystem::exists(path))
      normalization_cache::load(path);
  }
  void save() const {
    if (!path.empty()) normalization_cache::save(path);
  }
};

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"mod-2 Dyer-Lashof / Steenrod computation and verification"};
  app.require_subcommand(1);

  std::string model_text;
  long max_degree = 50;
  std::optional<long> excess_gt;
  std::optional<int> cap;
  std::string filter_name = "none";
  std::string format_name = "text";
  std::string seq_text;
  std::string mode_text = "on_generator";
  std::string check_name = "generators";
  std::string sigma_source = "S8";
  int k = 0;
  std::optional<int> level;
  int max_length = 2;
  int threads = 1;
  int times = 1;
  int samples = 20;
  CachePlan cache;

  auto format_opt = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };
  auto cache_opt = [&](CLI::App* sub) {
    sub->add_option("--cache", cache.path,
                    "normal-form cache file, loaded before and saved after");
  };

  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "admissible generator words of a model");
  enumerate_cmd->add_option("--model", model_text)->required();
  enumerate_cmd->add_option("--max-degree", max_degree)->required();
  enumerate_cmd->add_option("--excess-gt", excess_gt);
  enumerate_cmd->add_option("--cap", cap, "keep last entry < cap");
  enumerate_cmd->add_option("--filter", filter_name, "entry filter")
      ->check(CLI::IsMember({"even", "div4", "none"}));
  format_opt(enumerate_cmd);

  CLI::App* basis_cmd =
      app.add_subcommand("basis", "monomial basis by degree");
  basis_cmd->add_option("--model", model_text)->required();
  basis_cmd->add_option("--max-degree", max_degree)->required();
  format_opt(basis_cmd);

  CLI::App* poincare_cmd =
      app.add_subcommand("poincare", "graded dimensions of a model");
  poincare_cmd->add_option("--model", model_text)->required();
  poincare_cmd->add_option("--max-degree", max_degree)->required();
  format_opt(poincare_cmd);

  CLI::App* adem_cmd =
      app.add_subcommand("adem", "admissible normal form of an upper word");
  adem_cmd->add_option("--seq", seq_text, "comma-separated upper indices")
      ->required();
  cache_opt(adem_cmd);

  CLI::App* nishida_cmd = app.add_subcommand(
      "nishida", "expansion of a lower Steenrod operation past Q^s");
  nishida_cmd->add_option("--seq", seq_text, "r,s for Sq^r_* Q^s")->required();

  CLI::App* image_cmd =
      app.add_subcommand("image", "James-Hopf image of a decorated class");
  image_cmd->add_option("--k", k, "0..3")->required();
  image_cmd->add_option("--i", level, "family index >= 3")->required();
  image_cmd->add_option("--seq", seq_text, "upper word, empty for the class");
  image_cmd->add_option("--mode", mode_text)
      ->check(CLI::IsMember({"in_R", "on_generator"}));
  cache_opt(image_cmd);

  CLI::App* suspend_cmd =
      app.add_subcommand("suspend", "homology suspension of Q^seq g");
  suspend_cmd->add_option("--model", model_text)->required();
  suspend_cmd->add_option("--seq", seq_text);
  suspend_cmd->add_option("--times", times)->check(CLI::NonNegativeNumber);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "verification sweeps and reports");
  verify_cmd->add_option("--check", check_name)
      ->check(CLI::IsMember({"generators", "kernel", "independence",
                             "suspension", "hopf-nu", "hopf-sigma"}));
  verify_cmd->add_option("--k", k, "0..3");
  verify_cmd->add_option("--i", level,
                         "family index (sweeps) or adjoint level (hopf)");
  verify_cmd->add_option("--max-degree", max_degree);
  verify_cmd->add_option("--max-length", max_length);
  verify_cmd->add_option("--mode", mode_text)
      ->check(CLI::IsMember({"in_R", "on_generator"}));
  verify_cmd->add_option("--cap", cap, "override the sweep cap");
  verify_cmd->add_option("--threads", threads)->envname("QOPS_THREADS");
  verify_cmd->add_option("--sigma-source", sigma_source,
                         "recorded source sphere for the sigma case")
      ->check(CLI::IsMember({"S8", "S4"}));
  format_opt(verify_cmd);
  cache_opt(verify_cmd);

  CLI::App* stable_cmd =
      app.add_subcommand("stable", "stable bottom-cell image checks");
  stable_cmd->add_option("--i", level, "family index >= 3");
  stable_cmd->add_option("--samples", samples)->check(CLI::NonNegativeNumber);
  format_opt(stable_cmd);
  cache_opt(stable_cmd);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    OutputFormat format = parse_format(format_name);
    cache.load_if_present();

    if (app.got_subcommand(enumerate_cmd)) {
      Model model = parse_model(model_text);
      GeneratorFilters filters;
      filters.excess_gt = excess_gt;
      filters.cap_lt = cap;
      if (filter_name == "even")
        filters.entry_pred = [](int e) { return e % 2 == 0; };
      else if (filter_name == "div4")
        filters.entry_pred = [](int e) { return e % 4 == 0; };
      emit_words(enumerate_generators(model, max_degree, filters), format, out);
      return 0;
    }

    if (app.got_subcommand(basis_cmd)) {
      Model model = parse_model(model_text);
      if (format == OutputFormat::csv) out << "degree,monomial\n";
      for (long d = 0; d <= max_degree; ++d) {
        for (const Monomial& m : enumerate_basis(model, d)) {
          std::string text = render(m, model);
          switch (format) {
            case OutputFormat::text:
              out << "degree " << d << ": " << text << '\n';
              break;
            case OutputFormat::json:
              out << nlohmann::ordered_json{{"degree", d}, {"monomial", text}}
                         .dump()
                  << '\n';
              break;
            case OutputFormat::csv:
              out << d << ',' << csv_quote(text) << '\n';
              break;
          }
        }
      }
      return 0;
    }

    if (app.got_subcommand(poincare_cmd)) {
      Model model = parse_model(model_text);
      std::vector<long> series = poincare_series(model, max_degree);
      if (format == OutputFormat::csv) out << "degree,dim\n";
      for (long d = 0; d < static_cast<long>(series.size()); ++d) {
        switch (format) {
          case OutputFormat::text:
            out << d << ": " << series[static_cast<std::size_t>(d)] << '\n';
            break;
          case OutputFormat::json:
            out << nlohmann::ordered_json{
                       {"degree", d},
                       {"dim", series[static_cast<std::size_t>(d)]}}
                       .dump()
                << '\n';
            break;
          case OutputFormat::csv:
            out << d << ',' << series[static_cast<std::size_t>(d)] << '\n';
            break;
        }
      }
      return 0;
    }

    if (app.got_subcommand(adem_cmd)) {
      out << render(normalize(parse_seq(seq_text))) << '\n';
      cache.save();
      return 0;
    }

    if (app.got_subcommand(nishida_cmd)) {
      Word rs = parse_seq(seq_text);
      if (rs.size() != 2)
        throw std::invalid_argument("nishida needs --seq r,s");
      NishidaExpansion ex = nishida_expand(rs[0], rs[1]);
      if (ex.terms.empty()) {
        out << "0\n";
        return 0;
      }
      bool first = true;
      for (const NishidaTerm& t : ex.terms) {
        if (!first) out << " + ";
        first = false;
        out << "Q^" << t.q_index;
        if (t.sq_index > 0) out << " Sq^" << t.sq_index;
      }
      out << '\n';
      return 0;
    }

    if (app.got_subcommand(image_cmd)) {
      JhopfResult res =
          jhopf_image(k, parse_seq(seq_text), level.value_or(4),
                      parse_mode(mode_text));
      if (res.element)
        out << render(*res.element) << '\n';
      else
        out << (res.membership.value_or(false) ? "nonzero [membership mode]"
                                               : "0")
            << '\n';
      cache.save();
      return 0;
    }

    if (app.got_subcommand(suspend_cmd)) {
      Model model = parse_model(model_text);
      Element x = evaluate(parse_seq(seq_text), Element::generator(model));
      out << render(suspend_iterated(x, times)) << '\n';
      return 0;
    }

    if (app.got_subcommand(verify_cmd)) {
      VerificationReport report;
      if (check_name == "generators") {
        report = verify_generators(k, level.value_or(4), max_degree,
                                   max_length, parse_mode(mode_text), threads,
                                   cap);
      } else if (check_name == "kernel") {
        report = kernel_ideal_check(k, level.value_or(4), max_degree,
                                    max_length, parse_mode(mode_text), threads);
      } else if (check_name == "independence") {
        report = verify_independence(k, level.value_or(4), max_degree,
                                     parse_mode(mode_text));
      } else if (check_name == "suspension") {
        report = suspension_chain_check();
      } else if (check_name == "hopf-nu") {
        report = verify_hopf_case(HopfCase::nu, level.value_or(3), max_degree,
                                  threads);
      } else {
        report = verify_hopf_case(HopfCase::sigma, level.value_or(7),
                                  max_degree, threads);
        report.add_param("source", sigma_source);
      }
      emit_table(report, format, out);
      cache.save();
      return report.mismatch_count() == 0 ? 0 : 1;
    }

    if (app.got_subcommand(stable_cmd)) {
      VerificationReport report = stable_check(level.value_or(4), samples);
      emit_table(report, format, out);
      cache.save();
      return report.mismatch_count() == 0 ? 0 : 1;
    }
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no command dispatched\n";
  return 2;
}

}  // namespace qops
