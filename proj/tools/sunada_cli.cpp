#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sunada/hyperbolic.hpp"
#include "sunada/pipeline.hpp"
#include "sunada/ribbon.hpp"
#include "sunada/trace.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace sunada;

namespace {

constexpr int kExitNoWitness = 2;
constexpr int kExitValidation = 3;
constexpr int kExitInternal = 4;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExperimentConfig load_config(const std::string& config_path, int example_id) {
  if (!config_path.empty()) return ExperimentConfig::from_json(slurp(config_path));
  if (example_id != 0) return ExperimentConfig::example(example_id);
  throw ConfigError("need --config FILE or --example N");
}

ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "text") return ReportFormat::text;
  if (s == "dot-bundle") return ReportFormat::dot_bundle;
  throw ConfigError("unknown format: " + s);
}

void emit_report(const WitnessReport& rep, const std::string& fmt,
                 const std::string& out_dir) {
  ReportFormat f = parse_format(fmt);
  if (!out_dir.empty()) {
    for (const std::string& p : report_emit(rep, f, out_dir))
      std::cout << "wrote " << p << "\n";
  } else if (f == ReportFormat::json) {
    std::cout << report_json(rep);
  } else {
    std::cout << report_text(rep);
  }
}

void print_check(const WitnessCheck& c) {
  std::cout << "word " << c.word << " (degree " << c.degree << "): p " << c.simple_a
            << "/" << c.elevations_a << " simple, q " << c.simple_b << "/"
            << c.elevations_b << " simple; certificate "
            << (c.certificate.granted ? "granted" : "refused") << " ("
            << c.certificate.reason << ")";
  if (c.witness()) std::cout << "; WITNESS";
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite covers of surfaces: Gassmann pairs, elevations, witnesses"};
  app.require_subcommand(1);

  std::string config_path, out_dir, format = "text", word_text, word2_text, rep_spec;
  int example_id = 0, degree = 1, max_exponent = 0, oracle_radius = 10, bound = 20;
  int jobs = 0;
  unsigned seed = 0;
  char side = 'A';
  bool serial = false, search = false;

  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "experiment config (json)");
    sub->add_option("--example", example_id, "built-in experiment 1, 2 or 3");
    sub->add_option("--jobs", jobs, "OpenMP thread count");
  };

  CLI::App* ex = app.add_subcommand("example", "run a built-in experiment end to end");
  ex->add_option("id", example_id, "1, 2 or 3")->required();
  ex->add_option("--out", out_dir, "output directory");
  ex->add_option("--format", format, "json | text | dot-bundle");
  ex->add_option("--jobs", jobs, "OpenMP thread count");

  CLI::App* rep_cmd = app.add_subcommand("report", "run a config and emit its report");
  add_config(rep_cmd);
  rep_cmd->add_option("--out", out_dir, "output directory");
  rep_cmd->add_option("--format", format, "json | text | dot-bundle");

  CLI::App* gas = app.add_subcommand("gassmann", "check the configured subgroup pair");
  add_config(gas);
  gas->add_flag("--search", search, "also list all Gassmann pairs up to |A|");

  CLI::App* cov = app.add_subcommand("cover", "print one cover as graphviz dot");
  add_config(cov);
  cov->add_option("--side", side, "A or B")->check(CLI::IsMember({'A', 'B'}));

  CLI::App* elev = app.add_subcommand("elevations", "list elevations of a word");
  add_config(elev);
  elev->add_option("--word", word_text, "word in a1..ag, b1..bg")->required();

  CLI::App* simp = app.add_subcommand("simple", "self-intersection spectra of a word");
  add_config(simp);
  simp->add_option("--word", word_text, "word in a1..ag, b1..bg")->required();
  simp->add_option("--degree", degree, "elevation degree (default 1)");

  CLI::App* wit = app.add_subcommand("witness", "search for certified witness words");
  add_config(wit);
  wit->add_option("--max-exponent", max_exponent, "override configured exponent bound");

  CLI::App* iso = app.add_subcommand("isospectral", "combinatorial isospectrality check");
  add_config(iso);
  iso->add_flag("--serial", serial, "use the serial reference kernel");

  CLI::App* tr = app.add_subcommand("trace", "trace polynomial / twin test of free words");
  tr->add_option("--word", word_text, "word in a, b")->required();
  tr->add_option("--word2", word2_text, "second word for the twin test");
  tr->add_option("--bound", bound, "power bound for commensurability");
  tr->add_option("--seed", seed, "seed for the numeric spot check");

  CLI::App* si = app.add_subcommand("selfint", "self-intersection count of a free word");
  si->add_option("--word", word_text, "word in a, b")->required();
  si->add_option("--rep", rep_spec, "trace coordinates x,y,z for the oracle");
  si->add_option("--oracle-radius", oracle_radius, "conjugator ball radius");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#endif

  try {
    if (ex->parsed() || rep_cmd->parsed()) {
      WitnessReport rep = run_pipeline(load_config(config_path, example_id));
      emit_report(rep, format, out_dir);
      return 0;
    }

    if (tr->parsed()) {
      Alphabet al = Alphabet::free2();
      Word w1 = parse_word(word_text, al);
      TracePoly p = trace_polynomial(w1);
      std::cout << "tr(" << word_text << ") = " << p.str() << "\n";
      std::mt19937 rng(seed);
      std::uniform_real_distribution<double> dist(2.5, 4.0);
      double x = dist(rng), y = dist(rng);
      PuncturedTorusRep r = PuncturedTorusRep::from_traces(x, y, x * y / 2 + 1);
      double num = r.evaluate(w1).trace();
      double sym = p.evaluate(r.x, r.y, r.z);
      std::cout << "numeric check at (" << r.x << ", " << r.y << ", " << r.z
                << "): |delta| = " << std::abs(num - sym) << "\n";
      if (!word2_text.empty()) {
        Word w2 = parse_word(word2_text, al);
        std::cout << "tr(" << word2_text << ") = " << trace_polynomial(w2).str() << "\n";
        auto cw = trace_commensurable(w1, w2, bound);
        if (cw)
          std::cout << "trace commensurable: tr(w1^" << cw->m << ")^2 = tr(w2^" << cw->n
                    << ")^2\n";
        else
          std::cout << "not trace commensurable up to " << bound << "\n";
        std::cout << "trace twin pair: "
                  << (is_trace_twin_pair(w1, w2, bound) ? "yes" : "no") << "\n";
      }
      return 0;
    }

    if (si->parsed()) {
      Alphabet al = Alphabet::free2();
      CyclicWord w = cyclic_reduce(parse_word(word_text, al));
      RibbonGraph g = rose(2, RibbonConvention::torus);
      SelfIntersectionResult comb = self_intersection(g, rose_path(w));
      std::cout << "combinatorial count (one-holed torus): " << comb.count << "\n";
      PuncturedTorusRep r = PuncturedTorusRep::standard();
      if (!rep_spec.empty()) {
        double x, y, z;
        if (std::sscanf(rep_spec.c_str(), "%lf,%lf,%lf", &x, &y, &z) != 3)
          throw ConfigError("--rep wants x,y,z");
        r = PuncturedTorusRep::from_traces(x, y, z);
      }
      Word lift;
      lift.letters = w.letters;
      OracleResult o = self_intersection_oracle(r, lift, nullptr, oracle_radius);
      std::cout << "hyperbolic oracle (radius " << oracle_radius << "): " << o.count
                << (o.precision_warning ? "  [precision warning]" : "") << "\n";
      return o.count == comb.count ? 0 : kExitInternal;
    }

    ExperimentConfig cfg = load_config(config_path, example_id);

    if (gas->parsed()) {
      BuiltExperiment b = build_experiment(cfg);
      bool almost = is_almost_conjugate(*b.group, b.a, b.b);
      auto conj = conjugating_element(*b.group, b.a, b.b);
      std::cout << "|G| = " << b.group->order << ", |A| = " << b.a.order()
                << ", |B| = " << b.b.order() << "\n";
      std::cout << "almost conjugate: " << (almost ? "yes" : "no") << "\n";
      std::cout << "conjugate: "
                << (conj ? "yes, by " + b.group->name(*conj) : "no") << "\n";
      if (search) {
        auto pairs = gassmann_search(*b.group, b.a.order());
        std::cout << pairs.size() << " Gassmann pair(s) with subgroup order <= "
                  << b.a.order() << "\n";
      }
      return 0;
    }

    if (cov->parsed()) {
      BuiltExperiment b = build_experiment(cfg);
      DotStyle style;
      style.suppress_self_loops = true;
      style.merge_opposite_pairs = true;
      std::cout << export_dot(side == 'A' ? b.cover_a : b.cover_b, style);
      return 0;
    }

    if (elev->parsed()) {
      BuiltExperiment b = build_experiment(cfg);
      CyclicWord w = cyclic_reduce(parse_word(word_text, b.pres.alphabet));
      for (auto s : {'A', 'B'}) {
        const SchreierCover& c = s == 'A' ? b.cover_a : b.cover_b;
        std::cout << "cover " << (s == 'A' ? 'p' : 'q') << ":";
        for (const Elevation& e : elevations_of(c, w))
          std::cout << " (coset " << e.start_coset << ", degree " << e.degree << ")";
        std::cout << "\n";
      }
      return 0;
    }

    if (simp->parsed()) {
      BuiltExperiment b = build_experiment(cfg);
      WitnessCheck c = check_witness(b, word_text, degree);
      print_check(c);
      std::cout << "p spectrum:";
      for (int v : c.spectrum_a) std::cout << " " << v;
      std::cout << "\nq spectrum:";
      for (int v : c.spectrum_b) std::cout << " " << v;
      std::cout << "\n";
      return 0;
    }

    if (wit->parsed()) {
      BuiltExperiment b = build_experiment(cfg);
      int e = max_exponent > 0 ? max_exponent : cfg.max_exponent;
      auto found = witness_search(b, cfg.search_generators, e);
      for (const WitnessCheck& c : found) print_check(c);
      if (found.empty()) {
        std::cout << "no certified witness up to exponent " << e << "\n";
        return kExitNoWitness;
      }
      return 0;
    }

    if (iso->parsed()) {
      BuiltExperiment b = build_experiment(cfg);
      IsospectralityReport r = serial
                                   ? combinatorial_isospectrality_serial(b.cover_a, b.cover_b)
                                   : combinatorial_isospectrality(b.cover_a, b.cover_b);
      std::cout << "combinatorial isospectrality: " << (r.pass ? "PASS" : "FAIL")
                << " (" << b.group->order << " elements";
      if (!r.pass) std::cout << ", " << r.violations.size() << " violation(s)";
      std::cout << ")\n";
      return r.pass ? 0 : kExitNoWitness;
    }

  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#endif

  try {
    if (ex->parsed() || rep_cmd->parsed()) {
      WitnessReport rep = run_pipeline(load_config(config_path, example_id));
      emit_report(rep, format, out_dir);
      return 0;
    }

    if (tr->parsed()) {
      Alphabet al = Alphabet::free2();
      Word w1 = parse_word(word_text, al);
      TracePoly p = trace_polynomial(w1);
      std::cout << "tr(" << word_text << ") = " << p.str() << "\n";
      std::mt19937 rng(seed);
      std::uniform_real_distribution<double> dist(2.5, 4.0);
      double x = dist(rng), y = dist(rng);
      PuncturedTorusRep r = PuncturedTorusRep::from_traces(x, y, x * y / 2 + 1);
      double num = r.evaluate(w1).trace();
      double sym = p.evaluate(r.x, r.y, r.z);
      std::cout << "numeric check at (" << r.x << ", " << r.y << ", " << r.z
                << "): |delta| = " << std::abs(num - sym) << "\n";
      if (!word2_text.empty()) {
        Word w2 = parse_word(word2_text, al);
        std::cout << "tr(" << word2_text << ") = " << trace_polynomial(w2).str() << "\n";
        auto cw = trace_commensurable(w1, w2, bound);
        if (cw)
          std::cout << "trace commensurable: tr(w1^" << cw->m << ")^2 = tr(w2^" << cw->n
                    << ")^2\n";
        else
          std::cout << "not trace commensurable up to " << bound << "\n";
        std::cout << "trace twin pair: "
                  << (is_trace_twin_pair(w1, w2, bound) ? "yes" : "no") << "\n";
      }
      return 0;
    }

    if (si->parsed()) {
      Alphabet al = Alphabet::free2();
      CyclicWord w = cyclic_reduce(parse_word(word_text, al));
      RibbonGraph g = rose(2, RibbonConvention::torus);
      SelfIntersectionResult comb = self_intersection(g, rose_path(w));
      std::cout << "combinatorial count (one-holed torus): " << comb.count << "\n";
      PuncturedTorusRep r = PuncturedTorusRep::standard();
      if (!rep_spec.empty()) {
        double x, y, z;
        if (std::sscanf(rep_spec.c_str(), "%lf,%lf,%lf", &x, &y, &z) != 3)
          throw ConfigError("--rep wants x,y,z");
        r = PuncturedTorusRep::from_traces(x, y, z);
      }
      Word lift;
      lift.letters = w.letters;
      OracleResult o = self_intersection_oracle(r, lift, nullptr, oracle_radius);
      std::cout << "hyperbolic oracle (radius " << oracle_radius << "): " << o.count
                << (o.precision_warning ? "  [precision warning]" : "") << "\n";
      return o.count == comb.count ? 0 : kExitInternal;
    }

    ExperimentConfig cfg = load_config(config_path, example_id);

    if (gas->parsed()) {
      BuiltExperiment b = build_experiment(cfg);
      bool almost = is_almost_conjugate(*b.group, b.a, b.b);
      auto conj = conjugating_element(*b.group, b.a, b.b);
      std::cout << "|G| = " << b.group->order << ", |A| = " << b.a.order()
                << ", |B| = " << b.b.order() << "\n";
      std::cout << "almost conjugate: " << (almost ? "yes" : "no") << "\n";
      std::cout << "conjugate: "
                << (conj ? "yes, by " + b.group->name(*conj) : "no") << "\n";
      if (search) {
        auto pairs = gassmann_search(*b.group, b.a.order());
        std::cout << pairs.size() << " Gassmann pair(s) with subgroup order <= "
                  << b.a.order() << "\n";
      }
      return 0;
    }

    if (cov->parsed()) {
      BuiltExperiment b = build_experiment(cfg);
      DotStyle style;
      style.suppress_self_loops = true;
      style.merge_opposite_pairs = true;
      std::cout << export_dot(side == 'A' ? b.cover_a : b.cover_b, style);
      return 0;
    }

    if (elev->parsed()) {
      BuiltExperiment b = build_experiment(cfg);
      CyclicWord w = cyclic_reduce(parse_word(word_text, b.pres.alphabet));
      for (auto s : {'A', 'B'}) {
        const SchreierCover& c = s == 'A' ? b.cover_a : b.cover_b;
        std::cout << "cover " << (s == 'A' ? 'p' : 'q') << ":";
        for (const Elevation& e : elevations_of(c, w))
          std::cout << " (coset " << e.start_coset << ", degree " << e.degree << ")";
        std::cout << "\n";
      }
      return 0;
    }

    if (simp->parsed()) {
      BuiltExperiment b = build_experiment(cfg);
      WitnessCheck c = check_witness(b, word_text, degree);
      print_check(c);
      std::cout << "p spectrum:";
      for (int v : c.spectrum_a) std::cout << " " << v;
      std::cout << "\nq spectrum:";
      for (int v : c.spectrum_b) std::cout << " " << v;
      std::cout << "\n";
      return 0;
    }

    if (wit->parsed()) {
      BuiltExperiment b = build_experiment(cfg);
      int e = max_exponent > 0 ? max_exponent : cfg.max_exponent;
      auto found = witness_search(b, cfg.search_generators, e);
      for (const WitnessCheck& c : found) print_check(c);
      if (found.empty()) {
        std::cout << "no certified witness up to exponent " << e << "\n";
        return kExitNoWitness;
      }
      return 0;
    }

    if (iso->parsed()) {
      BuiltExperiment b = build_experiment(cfg);
      IsospectralityReport r = serial
                                   ? combinatorial_isospectrality_serial(b.cover_a, b.cover_b)
                                   : combinatorial_isospectrality(b.cover_a, b.cover_b);
      std::cout << "combinatorial isospectrality: " << (r.pass ? "PASS" : "FAIL")
                << " (" << b.group->order << " elements";
      if (!r.pass) std::cout << ", " << r.violations.size() << " violation(s)";
      std::cout << ")\n";
      return r.pass ? 0 : kExitNoWitness;
    }

    if (tr->parsed()) {
      Alphabet al = Alphabet::free2();
      Word w1 = parse_word(word_text, al);
      TracePoly p = trace_polynomial(w1);
      std::cout << "tr(" << word_text << ") = " << p.str() << "\n";
      std::mt19937 rng(seed);
      std::uniform_real_distribution<double> dist(2.5, 4.0);
      double x = dist(rng), y = dist(rng);
      PuncturedTorusRep r = PuncturedTorusRep::from_traces(x, y, x * y / 2 + 1);
      double num = r.evaluate(w1).trace();
      double sym = p.evaluate(r.x, r.y, r.z);
      std::cout << "numeric check at (" << r.x << ", " << r.y << ", " << r.z
                << "): |delta| = " << std::abs(num - sym) << "\n";
      if (!word2_text.empty()) {
        Word w2 = parse_word(word2_text, al);
        std::cout << "tr(" << word2_text << ") = " << trace_polynomial(w2).str() << "\n";
        auto cw = trace_commensurable(w1, w2, bound);
        if (cw)
          std::cout << "trace commensurable: tr(w1^" << cw->m << ")^2 = tr(w2^" << cw->n
                    << ")^2\n";
        else
          std::cout << "not trace commensurable up to " << bound << "\n";
        std::cout << "trace twin pair: "
                  << (is_trace_twin_pair(w1, w2, bound) ? "yes" : "no") << "\n";
      }
      return 0;
    }

    if (si->parsed()) {
      Alphabet al = Alphabet::free2();
      CyclicWord w = cyclic_reduce(parse_word(word_text, al));
      RibbonGraph g = rose(2, RibbonConvention::torus);
      SelfIntersectionResult comb = self_intersection(g, rose_path(w));
      std::cout << "combinatorial count (one-holed torus): " << comb.count << "\n";
      PuncturedTorusRep r = PuncturedTorusRep::standard();
      if (!rep_spec.empty()) {
        double x, y, z;
        if (std::sscanf(rep_spec.c_str(), "%lf,%lf,%lf", &x, &y, &z) != 3)
          throw ConfigError("--rep wants x,y,z");
        r = PuncturedTorusRep::from_traces(x, y, z);
      }
      Word lift;
      lift.letters = w.letters;
      OracleResult o = self_intersection_oracle(r, lift, nullptr, oracle_radius);
      std::cout << "hyperbolic oracle (radius " << oracle_radius << "): " << o.count
                << (o.precision_warning ? "  [precision warning]" : "") << "\n";
      return o.count == comb.count ? 0 : kExitInternal;
    }
  } catch (const CLI::ParseError& e) {
    return kExitValidation;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const WordError& e) {
    std::cerr << "word error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
