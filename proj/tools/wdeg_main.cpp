#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "wdeg/io.hpp"

using namespace wdeg;

namespace {

struct CommonArgs {
  std::string metric_spec;
  std::string model_spec;
  std::string mu_text;
  std::uint64_t seed = 2024;
  int jobs = 1;
  double budget_secs = 0;
  std::uint64_t budget_steps = 0;
  std::string format = "json";
  std::string out_path;
  std::string journal_path;
  bool saturate_singular = false;
};

Json parse_spec(const std::string& text) {
  if (!text.empty() && text[0] != '{' && text[0] != '[') {
    std::ifstream in(text);
    if (!in) throw std::invalid_argument("cannot open spec file '" + text + "'");
    return Json::parse(in);
  }
  return Json::parse(text);
}

FiniteMetric load_metric(const CommonArgs& a) { return metric_from_json(parse_spec(a.metric_spec)); }

ToricModel load_model(const CommonArgs& a) {
  Budget b = Budget::unlimited();
  return model_from_json(parse_spec(a.model_spec), b);
}

RatVec load_mu(const CommonArgs& a, std::size_t n) {
  if (!a.mu_text.empty()) {
    RatVec mu = parse_rational_list(a.mu_text, n);
    Rational total;
    for (const auto& x : mu) total += x;
    if (!(total == Rational(1)))
      throw std::invalid_argument("--mu entries must sum to 1");
    return mu;
  }
  return random_simplex_point(n, a.seed);
}

void emit(const CommonArgs& a, const std::string& text) {
  if (a.out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(a.out_path, std::ios::binary);
  out << text;
}

WdegOptions face_options(const CommonArgs& a) {
  WdegOptions o;
  o.budget_steps = a.budget_steps;
  if (a.budget_secs > 0)
    o.budget_wall = std::chrono::milliseconds(static_cast<long>(a.budget_secs * 1000));
  o.functional_seed = a.seed;
  o.saturate_singular = a.saturate_singular;
  return o;
}

Budget command_budget(const CommonArgs& a) {
  if (a.budget_steps == 0 && a.budget_secs <= 0) return Budget::unlimited();
  auto wall = a.budget_secs > 0
                  ? std::chrono::milliseconds(static_cast<long>(a.budget_secs * 1000))
                  : std::chrono::milliseconds(1u << 30);
  return Budget(a.budget_steps, wall);
}

int cmd_ball(const CommonArgs& a) {
  FiniteMetric metric = load_metric(a);
  FaceLattice lat = face_lattice(wasserstein_ball(metric));
  if (a.format == "csv") {
    std::ostringstream csv;
    csv << "# wdeg ball csv v1\nf_vector";
    for (auto c : lat.f_vector()) csv << "," << c;
    csv << "\n";
    emit(a, csv.str());
  } else if (a.format == "pretty") {
    std::ostringstream out;
    out << "ball of " << metric.label() << "\n";
    out << "dimension " << lat.dim() << ", f-vector (";
    auto fv = lat.f_vector();
    for (std::size_t i = 0; i < fv.size(); ++i) out << (i ? "," : "") << fv[i];
    out << ")\n" << lat.polytope().vertices.size() << " vertices, "
        << lat.hrep().inequalities.size() << " facets, " << lat.face_count()
        << " proper faces\n";
    emit(a, out.str());
  } else {
    emit(a, ball_to_json(metric, lat).dump(2));
  }
  return 0;
}

int cmd_model(const CommonArgs& a) {
  Budget b = command_budget(a);
  ToricModel m = load_model(a);
  Json j;
  j["label"] = m.label;
  j["coordinates"] = m.ring.arity();
  j["dim_projective"] = m.dim_projective;
  j["degree"] = homogeneous_degree(m.ideal, b);
  Json gens = Json::array();
  for (const auto& g : m.ideal.gens) gens.push_back(to_string(g, m.ring));
  j["ideal"] = gens;
  if (a.format == "pretty") {
    std::ostringstream out;
    out << m.label << ": " << m.ideal.gens.size() << " generators, dim "
        << m.dim_projective << ", degree " << j["degree"].get<int>() << "\n";
    for (const auto& g : m.ideal.gens) out << "  " << to_string(g, m.ring) << "\n";
    emit(a, out.str());
  } else {
    emit(a, j.dump(2));
  }
  return 0;
}

int cmd_polar(const CommonArgs& a, const std::string& method) {
  ToricModel m = load_model(a);
  Budget b = command_budget(a);
  MultiDegree md;
  std::string source = method;
  if (method == "formula") {
    if (m.label.rfind("scroll(", 0) == 0 || m.label.rfind("hirzebruch(", 0) == 0) {
      std::vector<long> ns;
      std::string inside = m.label.substr(m.label.find('(') + 1);
      inside.pop_back();
      std::istringstream in(inside);
      std::string tok;
      while (std::getline(in, tok, ',')) ns.push_back(std::stol(tok));
      md = scroll_polar_degrees(ns);
    } else if (m.label.rfind("star_tree(", 0) == 0) {
      // h^K from the hilbert multidegree of one independence slice.
      std::string inside = m.label.substr(m.label.find('(') + 1);
      inside.pop_back();
      auto semi = inside.find(';');
      std::vector<long> leaves;
      std::istringstream in(inside.substr(0, semi));
      std::string tok;
      while (std::getline(in, tok, ',')) leaves.push_back(std::stol(tok));
      long hub = std::stol(inside.substr(semi + 1));
      Budget bb = Budget::unlimited();
      ToricModel slice = star_tree(leaves, 1, bb);
      MultiDegree h = polar_degrees_hilbert(slice, bb);
      md = star_tree_multidegree(h, hub);
    } else {
      std::cerr << "no closed polar-degree formula for model '" << m.label << "'\n";
      return 3;
    }
  } else if (method == "slicing") {
    md = polar_degrees_slicing(m, a.seed, b);
  } else if (method == "hilbert") {
    md = polar_degrees_hilbert(m, b);
  } else if (method == "fixture") {
    auto f = fixture_multidegree(m.label);
    if (!f) {
      std::cerr << "no stored multidegree for model '" << m.label << "'\n";
      return 3;
    }
    md = *f;
  } else {
    std::cerr << "unknown method '" << method << "'\n";
    return 1;
  }
  Json j = multidegree_to_json(md);
  j["model"] = m.label;
  j["method"] = method;
  j["source"] = source;
  j["pretty"] = pretty(md);
  j["palindromic"] = md.palindromic();
  if (a.format == "pretty") {
    emit(a, m.label + ": " + pretty(md) + "\n");
  } else {
    emit(a, j.dump(2));
  }
  return 0;
}

int cmd_wdeg(const CommonArgs& a, const std::vector<int>& face_dims,
             const std::vector<int>& face_codims, const std::string& face_spec,
             long face_index) {
  FiniteMetric metric = load_metric(a);
  ToricModel model = load_model(a);
  if (model.ring.arity() != metric.size())
    throw std::invalid_argument("model coordinates and metric states disagree");
  FaceLattice lat = face_lattice(wasserstein_ball(metric));
  RatVec mu = load_mu(a, metric.size());

  if (!face_spec.empty() || face_index >= 0) {
    // Single-face mode.
    const Face* face = nullptr;
    if (face_index >= 0) {
      face = &lat.face_at(static_cast<std::size_t>(face_index));
    } else {
      Json vs = Json::parse(face_spec);
      std::vector<RatVec> want;
      for (const auto& v : vs) want.push_back(ratvec_from_json(v));
      std::sort(want.begin(), want.end());
      for (std::size_t d = 0; d < lat.dim() && !face; ++d)
        for (const auto& f : lat.faces(d)) {
          std::vector<RatVec> have;
          for (auto vi : f.vertex_indices) have.push_back(lat.polytope().vertices[vi]);
          std::sort(have.begin(), have.end());
          if (have == want) {
            face = &f;
            break;
          }
        }
      if (!face) throw std::invalid_argument("--face: no face has that vertex set");
    }
    DegreeOutcome o = wasserstein_degree(model, lat, *face, mu, face_options(a));
    Json j;
    j["model"] = model.label;
    j["metric"] = metric.label();
    j["mu"] = ratvec_to_json(mu);
    j["face_dim"] = face->dim;
    j["outcome"] = o.key();
    if (o.functional_sensitive) j["functional_sensitive"] = true;
    emit(a, j.dump(2));
    return 0;
  }

  TableOptions opts;
  opts.jobs = a.jobs;
  opts.face_opts = face_options(a);
  for (int d : face_dims) opts.dims.push_back(d);
  if (!face_codims.empty()) {
    opts.by_codim = true;
    opts.dims.assign(face_codims.begin(), face_codims.end());
  }

  std::map<std::size_t, DegreeOutcome> resume;
  if (!a.journal_path.empty()) {
    std::ifstream in(a.journal_path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      FaceOutcome fo = face_outcome_from_json(Json::parse(line));
      resume[fo.flat_index] = fo.outcome;
    }
  }
  std::ofstream journal;
  if (!a.journal_path.empty())
    journal.open(a.journal_path, std::ios::app);

  FaceCallback cb = [&](const FaceOutcome& fo) {
    std::cerr << "face " << fo.flat_index << " dim " << fo.dim << " -> "
              << fo.outcome.key() << " (" << fo.seconds << "s)\n";
    if (journal.is_open() && !resume.count(fo.flat_index)) {
      journal << face_outcome_to_json(fo).dump() << "\n";
      journal.flush();
    }
  };
  DegreeTable table = degree_table(model, metric, lat, mu, opts,
                                   resume.empty() ? nullptr : &resume, cb);
  std::string csv = table_to_csv(table, lat.dim());
  std::string json = table_to_json(table, mu).dump(2);
  if (!a.out_path.empty()) {
    std::ofstream(a.out_path + ".csv", std::ios::binary) << csv;
    std::ofstream(a.out_path + ".json", std::ios::binary) << json;
  } else if (a.format == "csv") {
    std::cout << csv;
  } else if (a.format == "pretty") {
    for (const auto& [dim, counts] : table.freq) {
      std::cout << "dimension " << dim << ":";
      for (const auto& [k, c] : counts) std::cout << "  " << k << " : " << c;
      std::cout << "\n";
    }
  } else {
    std::cout << json << "\n";
  }
  return 0;
}

int cmd_solve(const CommonArgs& a, const std::string& nu_text,
              const std::vector<long>& face_indices, const std::vector<int>& face_dims,
              bool all_faces) {
  FiniteMetric metric = load_metric(a);
  RatVec mu = load_mu(a, metric.size());
  if (!nu_text.empty()) {
    RatVec nu = parse_rational_list(nu_text, metric.size());
    Json j;
    j["wasserstein"] = rational_to_json(wasserstein_lp(mu, nu, metric));
    emit(a, j.dump(2));
    return 0;
  }
  ToricModel model = load_model(a);
  FaceLattice lat = face_lattice(wasserstein_ball(metric));
  std::vector<std::size_t> faces;
  for (long i : face_indices) faces.push_back(static_cast<std::size_t>(i));
  for (int d : face_dims)
    for (std::size_t i = 0; i < lat.faces(d).size(); ++i)
      faces.push_back(lat.flat_index(d, i));
  if (all_faces)
    for (std::size_t i = 0; i < lat.face_count(); ++i) faces.push_back(i);
  if (faces.empty())
    throw std::invalid_argument("solve: pick faces via --face-index/--face-dim/--all-faces");
  DistanceCandidate dc = distance_candidate(model, metric, lat, mu, faces, face_options(a));
  Json j;
  j["model"] = model.label;
  j["metric"] = metric.label();
  j["mu"] = ratvec_to_json(mu);
  j["found"] = dc.found;
  if (dc.found) {
    j["lambda"] = dc.lambda;
    Json nu = Json::array();
    for (double x : dc.nu) nu.push_back(x);
    j["nu"] = nu;
    j["face_index"] = dc.face_flat_index;
  }
  j["candidate_only"] = true;  // upper bound, not a certified minimum
  Json errs = Json::array();
  for (const auto& e : dc.face_errors) errs.push_back(e);
  j["face_errors"] = errs;
  emit(a, j.dump(2));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Wasserstein balls, toric models, polar degrees, and per-face critical degrees"};
  app.require_subcommand(1);
  CommonArgs a;

  auto add_common = [&](CLI::App* cmd, bool metric, bool model) {
    if (metric) cmd->add_option("--metric", a.metric_spec, "metric spec (JSON or file)");
    if (model) cmd->add_option("--model", a.model_spec, "model spec (JSON or file)");
    cmd->add_option("--seed", a.seed, "seed for all randomness");
    cmd->add_option("--format", a.format)->check(CLI::IsMember({"json", "csv", "pretty"}));
    cmd->add_option("--out", a.out_path, "output path (wdeg: basename for .csv/.json)");
    cmd->add_option("--budget-secs", a.budget_secs, "wall-clock budget per face");
    cmd->add_option("--budget-steps", a.budget_steps, "step budget per face");
  };

  auto* ball = app.add_subcommand("ball", "Wasserstein unit ball and its face lattice");
  add_common(ball, true, false);

  auto* model = app.add_subcommand("model", "toric model: ideal, dimension, degree");
  add_common(model, false, true);

  std::string method = "hilbert";
  auto* polar = app.add_subcommand("polar", "polar degrees / conormal multidegree");
  add_common(polar, false, true);
  polar->add_option("--method", method)
      ->check(CLI::IsMember({"formula", "slicing", "hilbert", "fixture"}));

  std::vector<int> face_dims, face_codims;
  std::string face_spec;
  long face_index = -1;
  auto* wdeg_cmd = app.add_subcommand("wdeg", "per-face critical-point degree table");
  add_common(wdeg_cmd, true, true);
  wdeg_cmd->add_option("--mu", a.mu_text, "explicit rational point, comma separated");
  wdeg_cmd->add_option("--jobs", a.jobs, "worker threads");
  wdeg_cmd->add_option("--face-dim", face_dims, "restrict to these face dimensions");
  wdeg_cmd->add_option("--face-codim", face_codims, "restrict to these face codimensions");
  wdeg_cmd->add_option("--face", face_spec, "single face by its vertex list (JSON)");
  wdeg_cmd->add_option("--face-index", face_index, "single face by flat index");
  wdeg_cmd->add_option("--journal", a.journal_path, "resumable per-face journal file");
  wdeg_cmd->add_flag("--saturate-singular", a.saturate_singular,
                     "discard critical points on the singular locus");

  std::string nu_text;
  std::vector<long> solve_faces;
  bool all_faces = false;
  auto* solve = app.add_subcommand("solve", "distance candidates per face / exact point LP");
  add_common(solve, true, true);
  solve->add_option("--mu", a.mu_text, "explicit rational point, comma separated");
  solve->add_option("--nu", nu_text, "second point: compute the exact transport LP value");
  solve->add_option("--face-index", solve_faces, "faces to scan (flat indices)");
  solve->add_option("--face-dim", face_dims, "scan all faces of these dimensions");
  solve->add_flag("--all-faces", all_faces, "scan every proper face");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ball->parsed()) return cmd_ball(a);
    if (model->parsed()) return cmd_model(a);
    if (polar->parsed()) return cmd_polar(a, method);
    if (wdeg_cmd->parsed()) return cmd_wdeg(a, face_dims, face_codims, face_spec, face_index);
    if (solve->parsed()) return cmd_solve(a, nu_text, solve_faces, face_dims, all_faces);
  } catch (const MetricError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const TimeoutError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
