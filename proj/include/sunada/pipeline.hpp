#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sunada/cover.hpp"
#include "sunada/trace.hpp"

namespace sunada {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Everything needed to run one experiment: a finite group, two subgroups,
/// a homomorphism from a surface group, and the candidate witness words.
/// Serializes to/from JSON. Element specs are strings whose shape depends on
/// the group kind: "5,0" (semidirect pair), "(1,2)(3,4)" (permutation),
/// "0,1,1;0,1,0;1,0,0" (matrix rows), "7" (raw table index).
struct ExperimentConfig {
  std::string name;
  std::string group_kind;  // semidirect_z8 | symmetric | sl | table
  int symmetric_n = 0;
  int sl_n = 0, sl_q = 0;
  std::vector<std::vector<int>> table;

  int base_genus = 0;
  std::vector<std::string> subgroup_a;  // generator specs
  std::vector<std::string> subgroup_b;
  std::map<std::string, std::string> images;  // generator name -> element spec
  // phi(a_k) = k-th group element, phi(b_k) = identity; ignores `images`
  bool enumeration_images = false;

  std::vector<std::string> witness_words;
  std::vector<std::string> search_generators;
  int max_exponent = 6;
  int oracle_radius = 10;

  static ExperimentConfig example(int which);  // built-in configs 1, 2, 3
  static ExperimentConfig from_json(const std::string& text);
  std::string to_json() const;
};

Elem parse_element(const FiniteGroup& g, const std::string& kind, const std::string& spec);

/// Instantiated experiment. The group lives on the heap so the subgroup and
/// cover back-pointers stay valid when this struct moves.
struct BuiltExperiment {
  std::unique_ptr<FiniteGroup> group;
  Subgroup a, b;
  SurfacePresentation pres;
  FiniteQuotient quotient;
  SchreierCover cover_a, cover_b;
};

BuiltExperiment build_experiment(const ExperimentConfig& cfg);

/// Both simple-elevation counts and the full self-intersection spectrum of
/// one candidate word, plus its no-length-twin certificate. A word is a
/// witness when the certificate is granted and the simple counts differ.
struct WitnessCheck {
  std::string word;
  int degree = 1;
  int elevations_a = 0, elevations_b = 0;
  std::vector<int> spectrum_a, spectrum_b;  // sorted self-intersection counts
  int simple_a = 0, simple_b = 0;
  TwinCertificate certificate;

  bool witness() const { return certificate.granted && simple_a != simple_b; }
};

WitnessCheck check_witness(const BuiltExperiment& ex, const std::string& word,
                           int degree = 1);

/// All certified witnesses of the form a_i^j a_k^l over the given generators
/// with 0 < |j|, |l| <= max_exponent, i < k; parallel, deterministic order.
std::vector<WitnessCheck> witness_search(const BuiltExperiment& ex,
                                         const std::vector<std::string>& generators,
                                         int max_exponent);

struct WitnessReport {
  ExperimentConfig config;
  int group_order = 0;
  int order_a = 0, order_b = 0;
  bool gassmann = false;
  bool conjugate = false;
  std::string conjugator;  // element name, empty if absent
  bool isospectral = false;
  int elements_checked = 0;
  int index_a = 0, index_b = 0;
  int genus_a = 0, genus_b = 0;
  std::vector<WitnessCheck> checks;  // one per configured witness word
  std::optional<size_t> witness_index;

  bool witness_found() const { return witness_index.has_value(); }
};

WitnessReport run_pipeline(const ExperimentConfig& cfg);

enum class ReportFormat { json, text, dot_bundle };

std::string report_json(const WitnessReport& rep);  // byte-stable
std::string report_text(const WitnessReport& rep);

/// Writes the report under out_dir (report.json, report.txt, or
/// cover_p.dot + cover_q.dot) and returns the paths written.
std::vector<std::string> report_emit(const WitnessReport& rep, ReportFormat fmt,
                                     const std::string& out_dir);

}  // namespace sunada
