#include "sunada/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sunada/ribbon.hpp"

namespace sunada {

using json = nlohmann::ordered_json;

namespace {

std::vector<int> parse_ints(const std::string& s, char sep) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw ConfigError("bad integer in element spec: " + s);
    }
  }
  return out;
}

std::string matrix_spec(const std::vector<std::vector<int>>& rows) {
  std::string out;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ';';
    for (size_t j = 0; j < rows[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(rows[i][j]);
    }
  }
  return out;
}

}  // namespace

Elem parse_element(const FiniteGroup& g, const std::string& kind, const std::string& spec) {
  try {
    if (kind == "semidirect_z8") {
      auto v = parse_ints(spec, ',');
      if (v.size() != 2) throw ConfigError("pair spec needs two entries: " + spec);
      return element_from_pair(g, v[0], v[1]);
    }
    if (kind == "symmetric") return element_from_cycles(g, spec);
    if (kind == "sl") {
      std::vector<std::vector<int>> rows;
      std::stringstream ss(spec);
      std::string row;
      while (std::getline(ss, row, ';')) rows.push_back(parse_ints(row, ','));
      return element_from_matrix(g, rows);
    }
    if (kind == "table") {
      auto v = parse_ints(spec, ',');
      if (v.size() != 1 || v[0] < 0 || v[0] >= g.order)
        throw ConfigError("element index out of range: " + spec);
      return v[0];
    }
  } catch (const GroupError& e) {
    throw ConfigError(std::string("bad element spec '") + spec + "': " + e.what());
  }
  throw ConfigError("unknown group kind: " + kind);
}

ExperimentConfig ExperimentConfig::example(int which) {
  ExperimentConfig cfg;
  if (which == 1) {
    cfg.name = "example1";
    cfg.group_kind = "semidirect_z8";
    cfg.base_genus = 3;
    cfg.subgroup_a = {"1,0", "3,0", "5,0", "7,0"};
    cfg.subgroup_b = {"1,0", "3,4", "5,4", "7,0"};
    cfg.images = {{"a1", "5,0"}, {"a2", "3,0"}, {"a3", "1,1"}};
    cfg.witness_words = {"a1^-2 a2"};
    cfg.search_generators = {"a1", "a2", "a3"};
  } else if (which == 2) {
    cfg.name = "example2";
    cfg.group_kind = "sl";
    cfg.sl_n = 3;
    cfg.sl_q = 2;
    cfg.base_genus = 3;
    FiniteGroup g = build_sl(3, 2);
    for (Elem e = 0; e < g.order; ++e) {
      auto m = matrix_of(g, e);
      if (m[1][0] == 0 && m[2][0] == 0) cfg.subgroup_a.push_back(matrix_spec(m));
      if (m[0][1] == 0 && m[0][2] == 0) cfg.subgroup_b.push_back(matrix_spec(m));
    }
    cfg.images = {{"a1", "0,1,1;0,1,0;1,0,0"}, {"a2", "1,0,0;0,0,1;0,1,1"}};
    cfg.witness_words = {"a1^2 a2^2"};
    cfg.search_generators = {"a1", "a2"};
  } else if (which == 3) {
    cfg.name = "example3";
    cfg.group_kind = "symmetric";
    cfg.symmetric_n = 6;
    cfg.base_genus = 720;
    cfg.subgroup_a = {"(1,2)(3,4)", "(1,3)(2,4)"};
    cfg.subgroup_b = {"(1,2)(3,4)", "(1,2)(5,6)"};
    cfg.enumeration_images = true;
    // the witness pairs the generator mapped to (1,2,3,4)(5,6) with the one
    // mapped to (1,5,3,6)(2,4)
    FiniteGroup g = build_symmetric(6);
    std::string g1 = "a" + std::to_string(element_from_cycles(g, "(1,2,3,4)(5,6)") + 1);
    std::string g2 = "a" + std::to_string(element_from_cycles(g, "(1,5,3,6)(2,4)") + 1);
    cfg.witness_words = {g1 + "^4 " + g2 + "^2"};
    cfg.search_generators = {g1, g2};
  } else {
    throw ConfigError("no built-in example " + std::to_string(which));
  }
  return cfg;
}

std::string ExperimentConfig::to_json() const {
  json j;
  j["name"] = name;
  j["group"]["kind"] = group_kind;
  if (group_kind == "symmetric") j["group"]["n"] = symmetric_n;
  if (group_kind == "sl") {
    j["group"]["n"] = sl_n;
    j["group"]["q"] = sl_q;
  }
  if (group_kind == "table") j["group"]["table"] = table;
  j["base_genus"] = base_genus;
  j["subgroup_a"] = subgroup_a;
  j["subgroup_b"] = subgroup_b;
  if (enumeration_images)
    j["enumeration_images"] = true;
  else
    j["images"] = images;
  j["witness_words"] = witness_words;
  j["search_generators"] = search_generators;
  j["max_exponent"] = max_exponent;
  j["oracle_radius"] = oracle_radius;
  return j.dump(2) + "\n";
}

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  ExperimentConfig cfg;
  try {
    cfg.name = j.at("name").get<std::string>();
    const json& g = j.at("group");
    cfg.group_kind = g.at("kind").get<std::string>();
    if (cfg.group_kind == "symmetric") cfg.symmetric_n = g.at("n").get<int>();
    if (cfg.group_kind == "sl") {
      cfg.sl_n = g.at("n").get<int>();
      cfg.sl_q = g.at("q").get<int>();
    }
    if (cfg.group_kind == "table") cfg.table = g.at("table").get<std::vector<std::vector<int>>>();
    cfg.base_genus = j.at("base_genus").get<int>();
    cfg.subgroup_a = j.at("subgroup_a").get<std::vector<std::string>>();
    cfg.subgroup_b = j.at("subgroup_b").get<std::vector<std::string>>();
    cfg.enumeration_images = j.value("enumeration_images", false);
    if (j.contains("images"))
      cfg.images = j.at("images").get<std::map<std::string, std::string>>();
    cfg.witness_words = j.value("witness_words", std::vector<std::string>{});
    cfg.search_generators = j.value("search_generators", std::vector<std::string>{});
    cfg.max_exponent = j.value("max_exponent", 6);
    cfg.oracle_radius = j.value("oracle_radius", 10);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field error: ") + e.what());
  }
  return cfg;
}

BuiltExperiment build_experiment(const ExperimentConfig& cfg) {
  BuiltExperiment ex;
  if (cfg.group_kind == "semidirect_z8")
    ex.group = std::make_unique<FiniteGroup>(build_semidirect_z8());
  else if (cfg.group_kind == "symmetric")
    ex.group = std::make_unique<FiniteGroup>(build_symmetric(cfg.symmetric_n));
  else if (cfg.group_kind == "sl")
    ex.group = std::make_unique<FiniteGroup>(build_sl(cfg.sl_n, cfg.sl_q));
  else if (cfg.group_kind == "table")
    ex.group = std::make_unique<FiniteGroup>(build_from_table(cfg.table));
  else
    throw ConfigError("unknown group kind: " + cfg.group_kind);

  auto gens = [&](const std::vector<std::string>& specs) {
    std::vector<Elem> out;
    for (const std::string& s : specs) out.push_back(parse_element(*ex.group, cfg.group_kind, s));
    return out;
  };
  ex.a = subgroup_from_generators(*ex.group, gens(cfg.subgroup_a));
  ex.b = subgroup_from_generators(*ex.group, gens(cfg.subgroup_b));

  if (cfg.base_genus < 1) throw ConfigError("base genus must be at least 1");
  ex.pres = SurfacePresentation::standard(cfg.base_genus);
  std::vector<Elem> images(ex.pres.alphabet.rank(), ex.group->identity);
  if (cfg.enumeration_images) {
    // a_k -> k-th group element, b_k -> identity; needs one handle per element
    if (cfg.base_genus < ex.group->order)
      throw ConfigError("enumeration images need base genus >= group order");
    for (Elem e = 0; e < ex.group->order; ++e) images[e] = e;
  } else {
    for (const auto& [name, spec] : cfg.images)
      images[ex.pres.alphabet.index(name)] = parse_element(*ex.group, cfg.group_kind, spec);
  }
  ex.quotient = make_quotient(ex.pres, *ex.group, images, true);
  ex.cover_a = build_cover(ex.quotient, ex.a);
  ex.cover_b = build_cover(ex.quotient, ex.b);
  return ex;
}

WitnessCheck check_witness(const BuiltExperiment& ex, const std::string& word, int degree) {
  WitnessCheck c;
  c.word = word;
  c.degree = degree;
  Word w = parse_word(word, ex.pres.alphabet);
  CyclicWord cw = cyclic_reduce(w);
  auto one_side = [&](const SchreierCover& cover, int& elev, std::vector<int>& spec,
                      int& simple) {
    for (const Elevation& e : elevations_of(cover, cw))
      if (e.degree == degree) ++elev;
    spec = self_intersection_spectrum(cover, cw, degree);
    simple = (int)std::count(spec.begin(), spec.end(), 0);
  };
  one_side(ex.cover_a, c.elevations_a, c.spectrum_a, c.simple_a);
  one_side(ex.cover_b, c.elevations_b, c.spectrum_b, c.simple_b);
  c.certificate = no_length_twins_certificate(w, ex.pres.genus);
  return c;
}

std::vector<WitnessCheck> witness_search(const BuiltExperiment& ex,
                                         const std::vector<std::string>& generators,
                                         int max_exponent) {
  std::vector<std::string> candidates;
  for (size_t i = 0; i < generators.size(); ++i)
    for (size_t k = i + 1; k < generators.size(); ++k)
      for (int j = -max_exponent; j <= max_exponent; ++j) {
        if (j == 0) continue;
        for (int l = -max_exponent; l <= max_exponent; ++l) {
          if (l == 0) continue;
          candidates.push_back(generators[i] + "^" + std::to_string(j) + " " + generators[k] +
                               "^" + std::to_string(l));
        }
      }
  std::vector<WitnessCheck> checks(candidates.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int t = 0; t < (int)candidates.size(); ++t) checks[t] = check_witness(ex, candidates[t]);
  std::vector<WitnessCheck> out;
  for (WitnessCheck& c : checks)
    if (c.witness()) out.push_back(std::move(c));
  return out;
}

WitnessReport run_pipeline(const ExperimentConfig& cfg) {
  BuiltExperiment ex = build_experiment(cfg);
  WitnessReport rep;
  rep.config = cfg;
  rep.group_order = ex.group->order;
  rep.order_a = ex.a.order();
  rep.order_b = ex.b.order();
  rep.gassmann = is_almost_conjugate(*ex.group, ex.a, ex.b);
  auto conj = conjugating_element(*ex.group, ex.a, ex.b);
  rep.conjugate = conj.has_value();
  if (conj) rep.conjugator = ex.group->name(*conj);
  rep.isospectral = combinatorial_isospectrality(ex.cover_a, ex.cover_b).pass;
  rep.elements_checked = ex.group->order;
  rep.index_a = ex.cover_a.index();
  rep.index_b = ex.cover_b.index();
  rep.genus_a = cover_genus(ex.cover_a, cfg.base_genus);
  rep.genus_b = cover_genus(ex.cover_b, cfg.base_genus);
  for (const std::string& w : cfg.witness_words) rep.checks.push_back(check_witness(ex, w));
  for (size_t i = 0; i < rep.checks.size(); ++i)
    if (rep.checks[i].witness()) {
      rep.witness_index = i;
      break;
    }
  return rep;
}

namespace {

json side_json(int elevations, int simple, const std::vector<int>& spectrum) {
  json s;
  s["degree_elevations"] = elevations;
  s["simple"] = simple;
  s["spectrum"] = spectrum;
  return s;
}

std::string conclusion_of(const WitnessReport& rep) {
  if (!rep.gassmann) return "subgroups are not almost conjugate; the construction does not apply";
  if (!rep.isospectral) return "combinatorial isospectrality failed; no conclusion";
  if (!rep.witness_found())
    return "covers are length isospectral (certified combinatorially); no certified witness "
           "among the configured words";
  const WitnessCheck& w = rep.checks[*rep.witness_index];
  std::ostringstream os;
  os << "covers are length isospectral (certified combinatorially); witness " << w.word
     << " has a granted no-length-twin certificate and unequal simple degree-" << w.degree
     << " elevation counts (" << w.simple_a << " vs " << w.simple_b
     << "), so the covers are generically not simple length isospectral over the base";
  return os.str();
}

}  // namespace

std::string report_json(const WitnessReport& rep) {
  json j;
  j["name"] = rep.config.name;
  j["group"]["kind"] = rep.config.group_kind;
  j["group"]["order"] = rep.group_order;
  j["base_genus"] = rep.config.base_genus;
  j["subgroups"]["A"]["order"] = rep.order_a;
  j["subgroups"]["A"]["index"] = rep.index_a;
  j["subgroups"]["A"]["cover_genus"] = rep.genus_a;
  j["subgroups"]["B"]["order"] = rep.order_b;
  j["subgroups"]["B"]["index"] = rep.index_b;
  j["subgroups"]["B"]["cover_genus"] = rep.genus_b;
  j["gassmann"] = rep.gassmann;
  j["conjugate"] = rep.conjugate;
  j["conjugator"] = rep.conjugate ? json(rep.conjugator) : json(nullptr);
  j["isospectral"] = rep.isospectral;
  j["elements_checked"] = rep.elements_checked;
  j["words"] = json::array();
  for (const WitnessCheck& c : rep.checks) {
    json w;
    w["word"] = c.word;
    w["degree"] = c.degree;
    w["p"] = side_json(c.elevations_a, c.simple_a, c.spectrum_a);
    w["q"] = side_json(c.elevations_b, c.simple_b, c.spectrum_b);
    w["certificate"]["granted"] = c.certificate.granted;
    w["certificate"]["reason"] = c.certificate.reason;
    w["witness"] = c.witness();
    j["words"].push_back(w);
  }
  j["witness"]["found"] = rep.witness_found();
  j["witness"]["word"] =
      rep.witness_found() ? json(rep.checks[*rep.witness_index].word) : json(nullptr);
  j["conclusion"] = conclusion_of(rep);
  return j.dump(2) + "\n";
}

std::string report_text(const WitnessReport& rep) {
  std::ostringstream os;
  os << "experiment " << rep.config.name << "\n";
  os << "group " << rep.config.group_kind << " of order " << rep.group_order << "\n";
  os << "subgroup orders: |A| = " << rep.order_a << ", |B| = " << rep.order_b << "\n";
  os << "gassmann pair: " << (rep.gassmann ? "yes" : "no")
     << "; conjugate: " << (rep.conjugate ? "yes (by " + rep.conjugator + ")" : "no") << "\n";
  os << "indices: [G:A] = " << rep.index_a << ", [G:B] = " << rep.index_b << "\n";
  os << "base genus = " << rep.config.base_genus << "\n";
  os << "cover genus = " << rep.genus_a << " (p), " << rep.genus_b << " (q)\n";
  os << "combinatorial isospectrality: " << (rep.isospectral ? "PASS" : "FAIL") << " ("
     << rep.elements_checked << " elements)\n";
  for (const WitnessCheck& c : rep.checks) {
    os << "word " << c.word << " (degree " << c.degree << "): p " << c.simple_a << "/"
       << c.elevations_a << " simple, q " << c.simple_b << "/" << c.elevations_b
       << " simple; certificate " << (c.certificate.granted ? "granted" : "refused")
       << (c.witness() ? "; WITNESS" : "") << "\n";
  }
  os << "conclusion: " << conclusion_of(rep) << "\n";
  return os.str();
}

std::vector<std::string> report_emit(const WitnessReport& rep, ReportFormat fmt,
                                     const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  auto write = [&](const std::string& file, const std::string& content) {
    fs::path path = fs::path(out_dir) / file;
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    os << content;
    return path.string();
  };
  std::vector<std::string> out;
  if (fmt == ReportFormat::json) {
    out.push_back(write("report.json", report_json(rep)));
  } else if (fmt == ReportFormat::text) {
    out.push_back(write("report.txt", report_text(rep)));
  } else {
    BuiltExperiment ex = build_experiment(rep.config);
    DotStyle style;
    style.suppress_self_loops = true;
    style.merge_opposite_pairs = true;
    out.push_back(write("cover_p.dot", export_dot(ex.cover_a, style)));
    out.push_back(write("cover_q.dot", export_dot(ex.cover_b, style)));
  }
  return out;
}

}  // namespace sunada
