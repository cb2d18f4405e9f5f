// Copyright 2026 The unimetric Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "unimetric/covers.hpp"
#include "unimetric/embeddings.hpp"
#include "unimetric/geometry.hpp"
#include "unimetric/inverse_limits.hpp"
#include "unimetric/json_io.hpp"
#include "unimetric/oracles.hpp"
#include "unimetric/quotient.hpp"

namespace unimetric {

namespace {

struct Options {
  std::uint64_t seed = 0;
  std::string grid;
  long depth = 4;
  bool pseudo = false;
  bool rescale = false;
  bool oracle = false;
  std::string out;
  std::string file;
  std::string kind;
};

class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Accumulates named checks; any failed check makes the exit status 1.
class Report {
 public:
  void check(std::string name, bool ok, Json witnesses = Json::array(), Json scalars = Json::object()) {
    add(std::move(name), ok ? "pass" : "fail", std::move(witnesses), std::move(scalars));
    failed_ = failed_ || !ok;
  }
  void info(std::string name, Json scalars = Json::object(), Json witnesses = Json::array()) {
    add(std::move(name), "info", std::move(witnesses), std::move(scalars));
  }
  void set_output(Json output) { output_ = std::move(output); }
  bool failed() const { return failed_; }
  Json results() const { return results_; }
  const Json& output() const { return output_; }

 private:
  void add(std::string name, const char* status, Json witnesses, Json scalars) {
    results_.push_back(Json{{"name", std::move(name)}, {"status", status}, {"witnesses", std::move(witnesses)},
                            {"scalars", std::move(scalars)}});
  }
  Json results_ = Json::array();
  Json output_;
  bool failed_ = false;
};

Json pair_json(const std::optional<std::pair<std::size_t, std::size_t>>& p) {
  return p ? Json::array({Json::array({p->first, p->second})}) : Json::array();
}

void check_axioms(Report& r, const std::string& prefix, const FiniteMetricSpace& m, bool pseudo) {
  const AxiomReport a = check_metric_axioms(m, pseudo);
  Json witnesses = Json::array();
  Json scalars = Json::object();
  for (std::size_t i = 0; i < a.violations.size(); ++i) {
    const AxiomViolation& v = a.violations[i];
    witnesses.push_back(Json{{"axiom", v.axiom}, {"points", v.witness}, {"lhs", to_json(v.lhs)}, {"rhs", to_json(v.rhs)}});
    scalars[v.axiom + "_violations"] = a.violation_counts[i];
  }
  r.check(prefix + "metric_axioms", a.passed, std::move(witnesses), std::move(scalars));
}

Grid grid_or(const Options& o, const char* fallback) { return grid_from_csv(o.grid.empty() ? fallback : o.grid); }

Json matrix_json(const DistanceMatrix& d) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < d.size(); ++k) row.push_back(to_json(d(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Compares two matrices and records the first mismatch.
void oracle_diff(Report& r, const std::string& name, const DistanceMatrix& fast, const DistanceMatrix& slow) {
  Json witness = Json::array();
  for (std::size_t i = 0; i < fast.size() && witness.empty(); ++i) {
    for (std::size_t k = 0; k < fast.size() && witness.empty(); ++k) {
      if (fast(i, k) != slow(i, k)) {
        witness.push_back(Json{{"points", {i, k}}, {"fast", to_json(fast(i, k))}, {"oracle", to_json(slow(i, k))}});
      }
    }
  }
  r.check(name, witness.empty(), std::move(witness));
}

void cmd_check(const Json& j, const Options& o, Report& r) {
  const FiniteMetricSpace m = space_from_json(j);
  check_axioms(r, "", m, o.pseudo);
  r.info("size", {{"points", m.size()}, {"diameter", to_json(m.diameter())}});
  if (o.oracle) {
    const std::size_t slow = oracle::triangle_violations(m);
    const AxiomReport a = check_metric_axioms(m, o.pseudo);
    std::size_t fast = 0;
    for (std::size_t i = 0; i < a.violations.size(); ++i) {
      if (a.violations[i].axiom == "triangle") fast = a.violation_counts[i];
    }
    r.check("oracle_triangle_count", fast == slow, Json::array(), {{"fast", fast}, {"oracle", slow}});
  }
}

void build_cone(const Json& j, const Options& o, Report& r) {
  const FiniteMetricSpace base = space_from_json(j.contains("space") ? j.at("space") : j);
  const FiniteMetricSpace cone = cone_metric(base, grid_or(o, "0,1/2,1"));
  check_axioms(r, "", cone, false);
  r.set_output(to_json(cone));
}

void build_join(const Json& j, const Options& o, Report& r) {
  const FiniteMetricSpace x = space_from_json(j.at("x"));
  const FiniteMetricSpace y = space_from_json(j.at("y"));
  const Grid grid = grid_or(o, "-1,0,1");
  const FiniteMetricSpace join = join_metric(x, y, grid);
  check_axioms(r, "", join, false);
  const JoinAmalgamReport a = join_amalgam_equality(x, y, grid);
  r.check("amalgam_equality", a.equal, Json::array(), {{"max_discrepancy", to_json(a.max_discrepancy)}});
  r.set_output(to_json(join));
}

void build_cylinder(const Json& j, const Options& o, Report& r) {
  const FiniteMetricSpace x = space_from_json(j.at("x"));
  const FiniteMetricSpace y = space_from_json(j.at("y"));
  const TotalMap f = map_from_json(j.at("map"), x.size(), y.size());
  const CylinderResult c = mapping_cylinder_metric(x, y, f, grid_or(o, "0,1/2,1"));
  check_axioms(r, "", c.space, false);
  r.check("matches_adjunction", c.matches_adjunction);
  r.set_output(to_json(c.space));
}

void build_adjunction(const Json& j, const Options&, Report& r) {
  const FiniteMetricSpace x = space_from_json(j.at("x"));
  const FiniteMetricSpace y = space_from_json(j.at("y"));
  const Subset a = subset_from_json(j.at("a"), x.size());
  const PartialMap f = partial_map_from_json(Json{{"pairs", j.at("pairs")}}, x.size(), y.size());
  if (f.domain != a) throw StructuralError("adjunction pairs must assign every point of A exactly once");
  const AdjunctionResult adj = adjunction_space(x, y, f);
  r.check("d3_equals_dinf", adj.d3_equals_dinf);
  r.check("is_metric", adj.is_metric);
  r.check("y_isometric", adj.y_isometric);
  r.check("separated_from_y", adj.separated_from_y, pair_json(adj.separation_witness));
  r.set_output(to_json(adj.space));
}

void build_amalgam(const Json& j, const Options&, Report& r) {
  const FiniteMetricSpace x = space_from_json(j.at("x"));
  const FiniteMetricSpace y = space_from_json(j.at("y"));
  const Json& ja = j.at("a");
  const Json& jb = j.at("b");
  Subset a, b;
  for (const Json& v : ja) a.push_back(v.get<std::size_t>());
  for (const Json& v : jb) b.push_back(v.get<std::size_t>());
  const Scalar cross = j.contains("cross") ? scalar_from_json(j.at("cross")) : Scalar(1);
  const AmalgamResult am = amalgamated_union(x, y, a, b, cross);
  r.check("d2_equals_dinf", am.d2_equals_dinf);
  r.check("is_metric", am.is_metric);
  r.check("x_isometric", am.x_isometric);
  r.check("y_isometric", am.y_isometric);
  r.set_output(to_json(am.space));
}

void build_quotient(const Json& j, const Options& o, Report& r) {
  const FiniteMetricSpace m = space_from_json(j.at("space"));
  if (j.contains("family")) {
    std::vector<Subset> family;
    for (const Json& s : j.at("family")) family.push_back(subset_from_json(s, m.size()));
    const QuotientResult q = quotient_by_discrete_family(m, family);
    r.check("d2_equals_dinf", q.d2_equals_dinf);
    r.check("is_metric", q.is_metric);
    r.set_output(to_json(q.space));
    return;
  }
  const Surjection f = surjection_from_json(j.at("surjection"), m.size());
  std::optional<std::size_t> n;
  if (j.contains("n")) n = j.at("n").get<std::size_t>();
  const ChainMetric c = chain_metric(m, f, n);
  Json witnesses = Json::array();
  if (c.triangle_witness) witnesses.push_back(Json{{"triangle", *c.triangle_witness}});
  if (c.positivity_witness) witnesses.push_back(Json{{"positivity", {c.positivity_witness->first, c.positivity_witness->second}}});
  r.check("is_metric", c.is_metric, std::move(witnesses));
  r.check("equals_dinf", c.equals_dinf);
  if (o.oracle) oracle_diff(r, "oracle_dinf", c.d_infinity, oracle::quotient_dinf(m, f.class_of, f.class_count));
  r.set_output(to_json(chain_quotient(m, f, c)));
}

void build_telescope(const Json& j, const Options& o, Report& r) {
  const InverseSequenceTruncation t = truncation_from_json(j.at("truncation"));
  const TelescopeResult tel =
      telescope_metric(t, j.at("a").get<std::size_t>(), j.at("b").get<std::size_t>(), grid_or(o, "0,1/2,1"));
  r.check("d2_equals_dinf", tel.d2_equals_dinf);
  check_axioms(r, "", tel.space, false);
  r.set_output(to_json(tel.space));
}

void cmd_build(const Json& j, const Options& o, Report& r) {
  static const std::map<std::string, std::function<void(const Json&, const Options&, Report&)>> kinds = {
      {"cone", build_cone},           {"join", build_join},         {"cylinder", build_cylinder},
      {"adjunction", build_adjunction}, {"amalgam", build_amalgam}, {"quotient", build_quotient},
      {"telescope", build_telescope}};
  kinds.at(o.kind)(j, o, r);
}

void cmd_metrize(const Json& j, const Options& o, Report& r) {
  const FundamentalSequence seq = fundamental_sequence_from_json(j);
  const RefinementVerdict valid = validate_fundamental_sequence(seq);
  r.check("fundamental_sequence", valid.holds, valid.witness ? Json::array({*valid.witness}) : Json::array(),
          {{"reason", valid.reason}});
  if (!valid.holds) return;
  const AuMetrization au = au_metrize(seq);
  r.check("d_le_f", au.d_le_f);
  r.check("f_le_2d", au.f_le_2d);
  for (std::size_t n = 0; n < au.c_refines_d.size(); ++n) {
    const RefinementVerdict& v = au.c_refines_d[n];
    r.check("c_refines_d_" + std::to_string(n + 1), v.holds, v.witness ? Json::array({*v.witness}) : Json::array());
  }
  for (std::size_t n = 0; n < au.d_refines_c.size(); ++n) {
    const RefinementVerdict& v = au.d_refines_c[n];
    r.check("d_refines_c_" + std::to_string(n + 1), v.holds, v.witness ? Json::array({*v.witness}) : Json::array());
  }
  if (o.oracle) {
    DistanceMatrix slow(seq.ground_size);
    for (std::size_t x = 0; x < seq.ground_size; ++x) {
      for (std::size_t y = 0; y < seq.ground_size; ++y) slow(x, y) = oracle::au_prefunction(seq, x, y);
    }
    oracle_diff(r, "oracle_prefunction", au.pre_distance, slow);
  }
  r.set_output(Json{{"metric", to_json(au.space)}, {"prefunction", matrix_json(au.pre_distance)}});
}

void cmd_embed(const Json& j, const Options& o, Report& r) {
  FiniteMetricSpace m = space_from_json(j);
  if (o.rescale && m.diameter() > 1) m = rescale_to_diameter(m, 1);
  const AharoniEmbedding e = aharoni_embed(m, o.depth);
  Json rows = Json::array();
  for (const ModulusRow& row : e.certificate.continuity.rows) {
    rows.push_back(Json{{"delta", to_json(row.delta)}, {"epsilon", to_json(row.epsilon)}});
  }
  r.info("continuity_modulus", {{"rows", std::move(rows)}});
  for (const SeparationRow& row : e.certificate.separation) {
    r.check("separation_" + std::to_string(row.n), row.holds, pair_json(row.witness),
            {{"threshold", to_json(row.threshold)}, {"bound", to_json(row.bound)}});
  }
  r.check("injective", e.certificate.injective);
  r.check("coordinates_in_range", e.certificate.coordinates_in_range);
  Json images = Json::array();
  for (const SequencePoint& p : e.images) images.push_back(to_json(p));
  Json lambdas = Json::array();
  for (const Scalar& l : e.lambdas) lambdas.push_back(to_json(l));
  r.set_output(Json{{"images", std::move(images)}, {"lambdas", std::move(lambdas)}, {"offsets", e.offsets}});
}

std::optional<std::vector<Scalar>> epsilons_from(const Json& j) {
  if (!j.contains("epsilons")) return std::nullopt;
  std::vector<Scalar> out;
  for (const Json& e : j.at("epsilons")) out.push_back(scalar_from_json(e));
  return out;
}

void containment_checks(Report& r, const std::string& prefix, const ContainmentReport& c) {
  for (const ContainmentLevel& level : c.levels) {
    for (const ContainmentRow& row : level.rows) {
      Json scalars{{"epsilon", to_json(row.epsilon)}};
      if (row.from) scalars["from"] = *row.from;
      r.check(prefix + "_level_" + std::to_string(level.level), row.holds, Json::array(), std::move(scalars));
    }
  }
}

void cmd_invlim(const Json& j, const Options& o, Report& r) {
  if (o.kind == "perturb") {
    const PerturbationResult p = perturbation_limit(ladder_from_json(j));
    Json alphas = Json::array(), betas = Json::array(), measured = Json::array(), closeness = Json::array();
    for (const Scalar& s : p.alphas) alphas.push_back(to_json(s));
    for (const Scalar& s : p.betas) betas.push_back(to_json(s));
    for (const Scalar& s : p.measured) measured.push_back(to_json(s));
    for (const Scalar& s : p.closeness) closeness.push_back(to_json(s));
    Json failure = Json::array();
    if (p.failure) {
      Json w{{"hypothesis", p.failure->hypothesis}, {"level", p.failure->level}, {"points", p.failure->witness}};
      if (p.failure->target_level) w["target_level"] = *p.failure->target_level;
      failure.push_back(std::move(w));
    }
    r.check("hypotheses", p.hypotheses_hold(), std::move(failure),
            {{"alphas", std::move(alphas)}, {"betas", std::move(betas)}, {"measured", std::move(measured)}});
    r.check("telescoping", p.telescoping_ok);
    r.check("closeness", p.closeness_ok, Json::array(), {{"closeness", std::move(closeness)}});
    r.info("uniqueness", {{"unique", p.unique}, {"injective", p.injective}});
    r.set_output(Json{{"limit", p.limit}});
    return;
  }
  const InverseSequenceTruncation t = truncation_from_json(j);
  if (o.kind == "threads") {
    const std::vector<Thread> ts = threads(t);
    Json out{{"threads", ts}};
    bool bounded = true;
    for (const auto& l : t.levels) bounded = bounded && l.diameter() <= 1;
    if (bounded) out["metric"] = to_json(thread_metric(t, ts));
    r.info("threads", {{"count", ts.size()}, {"metric_available", bounded}});
    r.set_output(std::move(out));
  } else if (o.kind == "ml") {
    for (const MittagLefflerLevel& level : mittag_leffler_report(t)) {
      Json scalars = Json::object();
      if (level.stabilized_at) scalars["stabilized_at"] = *level.stabilized_at;
      r.check("mittag_leffler_level_" + std::to_string(level.level), level.stabilized_at.has_value(),
              Json::array({level.images}), std::move(scalars));
    }
  } else if (o.kind == "converge") {
    containment_checks(r, "convergence", convergence_report(t, epsilons_from(j)));
  } else if (o.kind == "cauchy") {
    containment_checks(r, "cauchy", cauchy_report(t, epsilons_from(j)));
  } else {
    const Scalar eps = j.contains("eps") ? scalar_from_json(j.at("eps")) : Scalar(0);
    const SeparationIndex s = separation_index(t, eps);
    Json scalars{{"epsilon", to_json(eps)}, {"lambda", to_json(s.lambda)}};
    if (s.level) scalars["level"] = *s.level;
    r.check("separation_index", s.level.has_value(), Json::array(), std::move(scalars));
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact finite metric constructions and certificates", "unimetric"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", o.seed, "Seed echoed into the report");
  app.add_option("--grid", o.grid, "Comma-separated rational grid");
  app.add_option("--depth", o.depth, "Embedding depth")->check(CLI::PositiveNumber);
  app.add_flag("--pseudo", o.pseudo, "Allow zero distances between distinct points");
  app.add_flag("--rescale", o.rescale, "Rescale to diameter 1 before embedding");
  app.add_flag("--oracle", o.oracle, "Also run the brute-force oracle and diff");
  app.add_option("--out", o.out, "Write the report here instead of stdout");

  auto* check = app.add_subcommand("check", "Audit the metric axioms");
  check->add_option("file", o.file)->required();
  auto* build = app.add_subcommand("build", "Build a construction and certify it");
  build->add_option("kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"cone", "join", "cylinder", "adjunction", "amalgam", "quotient", "telescope"}));
  build->add_option("file", o.file)->required();
  auto* metrize = app.add_subcommand("metrize", "Metrize a fundamental sequence of covers");
  metrize->add_option("file", o.file)->required();
  auto* embed = app.add_subcommand("embed", "Embed a space into q0");
  embed->add_option("file", o.file)->required();
  auto* invlim = app.add_subcommand("invlim", "Inverse sequence reports");
  invlim->add_option("subcommand", o.kind)
      ->required()
      ->check(CLI::IsMember({"threads", "ml", "converge", "cauchy", "separate", "perturb"}));
  invlim->add_option("file", o.file)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "unimetric: " << e.what() << "\n";
    return 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  Json report;
  report["schema_version"] = kReportSchemaVersion;
  report["command"] = Json{{"name", name}, {"arguments", args}};
  report["seed"] = std::to_string(o.seed);
  Report r;
  int status = 0;
  std::string error;
  try {
    const std::string bytes = read_file(o.file);
    report["inputs_digest"] = digest(bytes);
    const Json j = parse_json(bytes);
    try {
      if (name == "check") cmd_check(j, o, r);
      if (name == "build") cmd_build(j, o, r);
      if (name == "metrize") cmd_metrize(j, o, r);
      if (name == "embed") cmd_embed(j, o, r);
      if (name == "invlim") cmd_invlim(j, o, r);
    } catch (const Json::exception& e) {
      throw StructuralError(std::string("bad input field: ") + e.what());
    }
    status = r.failed() ? 1 : 0;
  } catch (const PreconditionError& e) {
    status = 1;
    error = e.what();
  } catch (const StructuralError& e) {
    status = 2;
    error = e.what();
  } catch (const InputError& e) {
    status = 2;
    error = e.what();
  }
  if (!report.contains("inputs_digest")) report["inputs_digest"] = nullptr;
  report["results"] = r.results();
  if (!r.output().is_null()) report["output"] = r.output();
  if (!error.empty()) {
    report["error"] = error;
    err << "unimetric: " << error << "\n";
  }
  report["exit_status"] = status;

  const std::string text = report.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      err << "unimetric: cannot write '" << o.out << "'\n";
      return 2;
    }
    f << text;
  }
  return status;
}

}  // namespace unimetric
