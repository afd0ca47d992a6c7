#include "wdeg/io.hpp"

#include <sstream>

namespace wdeg {

Json rational_to_json(const Rational& r) {
  if (r.is_integer() && r.num() >= LONG_MIN && r.num() <= LONG_MAX)
    return Json(r.num().get_si());
  return Json(r.str());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw std::invalid_argument("rational: expected integer or \"p/q\" string");
}

Json ratvec_to_json(const RatVec& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(rational_to_json(x));
  return arr;
}

RatVec ratvec_from_json(const Json& j) {
  RatVec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

FiniteMetric metric_from_json(const Json& spec) {
  std::string type = spec.at("type").get<std::string>();
  if (type == "explicit") {
    const Json& rows = spec.at("d");
    std::size_t n = rows.size();
    RatMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) throw MetricError("metric: matrix not square");
      for (std::size_t j = 0; j < n; ++j) d.at(i, j) = rational_from_json(rows[i][j]);
    }
    return FiniteMetric::validate(d);
  }
  if (type == "discrete") return FiniteMetric::discrete(spec.at("n").get<std::size_t>());
  if (type == "l1") return FiniteMetric::l1(spec.at("n").get<std::size_t>());
  if (type == "hamming") {
    std::vector<std::size_t> dims;
    for (const auto& d : spec.at("dims")) dims.push_back(d.get<std::size_t>());
    return FiniteMetric::hamming(dims);
  }
  throw MetricError("metric: unknown type '" + type + "'");
}

ToricModel model_from_json(const Json& spec, Budget& budget) {
  std::string type = spec.at("type").get<std::string>();
  if (type == "matrix") {
    std::vector<std::vector<long>> A;
    for (const auto& row : spec.at("A")) {
      std::vector<long> r;
      for (const auto& x : row) r.push_back(x.get<long>());
      A.push_back(std::move(r));
    }
    std::vector<Rational> scaling(A.at(0).size(), Rational(1));
    if (spec.contains("scaling")) {
      scaling.clear();
      for (const auto& x : spec.at("scaling")) scaling.push_back(rational_from_json(x));
    }
    return toric_model_from_matrix(A, scaling, "matrix", budget);
  }
  if (type == "scroll") {
    std::vector<long> ns;
    for (const auto& x : spec.at("n")) ns.push_back(x.get<long>());
    return scroll(ns);
  }
  if (type == "hirzebruch")
    return hirzebruch(spec.at("a").get<long>(), spec.at("b").get<long>());
  if (type == "star_tree") {
    std::vector<long> leaves;
    for (const auto& x : spec.at("leaves")) leaves.push_back(x.get<long>());
    return star_tree(leaves, spec.at("hub").get<long>(), budget);
  }
  if (type == "path4_binary") return path4_binary(budget);
  if (type == "cycle4_binary") return cycle4_binary(budget);
  if (type == "no3way") {
    const auto& d = spec.at("dims");
    return no3way(d.at(0).get<long>(), d.at(1).get<long>(), d.at(2).get<long>(), budget);
  }
  throw std::invalid_argument("model: unknown type '" + type + "'");
}

Json face_to_json(const Face& f, const VPolytope& poly) {
  Json j;
  j["dim"] = f.dim;
  Json verts = Json::array();
  for (auto vi : f.vertex_indices) verts.push_back(ratvec_to_json(poly.vertices[vi]));
  j["vertices"] = verts;
  j["functional"] = ratvec_to_json(f.functional);
  Json span = Json::array();
  for (const auto& v : f.span_basis) span.push_back(ratvec_to_json(v));
  j["span"] = span;
  return j;
}

Json ball_to_json(const FiniteMetric& metric, const FaceLattice& lattice) {
  Json j;
  j["metric"] = metric.label();
  Json fv = Json::array();
  for (auto c : lattice.f_vector()) fv.push_back(c);
  j["f_vector"] = fv;
  Json verts = Json::array();
  for (const auto& v : lattice.polytope().vertices) verts.push_back(ratvec_to_json(v));
  j["vertices"] = verts;
  Json facets = Json::array();
  for (const auto& [n, b] : lattice.hrep().inequalities) {
    Json fj;
    fj["normal"] = ratvec_to_json(n);
    fj["rhs"] = rational_to_json(b);
    facets.push_back(fj);
  }
  j["facets"] = facets;
  Json faces = Json::array();
  for (std::size_t d = 0; d < lattice.dim(); ++d)
    for (const auto& f : lattice.faces(d)) faces.push_back(face_to_json(f, lattice.polytope()));
  j["faces"] = faces;
  return j;
}

Json multidegree_to_json(const MultiDegree& md) {
  Json j;
  j["n"] = md.ambient;
  Json d = Json::object();
  for (const auto& [k, v] : md.delta) d[std::to_string(k)] = v;
  j["delta"] = d;
  return j;
}

MultiDegree multidegree_from_json(const Json& j) {
  MultiDegree md;
  md.ambient = j.at("n").get<std::size_t>();
  for (const auto& [k, v] : j.at("delta").items())
    md.delta[std::stoi(k)] = v.get<long>();
  return md;
}

Json table_to_json(const DegreeTable& t, const RatVec& mu) {
  Json j;
  j["model"] = t.model_label;
  j["metric"] = t.metric_label;
  Json fv = Json::array();
  for (auto c : t.f_vector) fv.push_back(c);
  j["f_vector"] = fv;
  j["mu"] = ratvec_to_json(mu);
  Json freq = Json::object();
  for (const auto& [dim, counts] : t.freq) {
    Json row = Json::object();
    for (const auto& [key, cnt] : counts) row[key] = cnt;
    freq[std::to_string(dim)] = row;
  }
  j["freq"] = freq;
  return j;
}

namespace {

// "-" and "timeout" sort after numeric outcomes.
bool outcome_key_less(const std::string& a, const std::string& b) {
  auto kindof = [](const std::string& s) { return s == "-" ? 1 : s == "timeout" ? 2 : 0; };
  if (kindof(a) != kindof(b)) return kindof(a) < kindof(b);
  if (kindof(a) == 0) return std::stol(a) < std::stol(b);
  return a < b;
}

}  // namespace

std::string table_to_csv(const DegreeTable& t, std::size_t ball_dim) {
  std::ostringstream out;
  out << "# wdeg degree-table csv v1\n";
  out << "face_dim,face_codim,outcome,count\n";
  for (const auto& [dim, counts] : t.freq) {
    std::vector<std::string> keys;
    for (const auto& [key, cnt] : counts) keys.push_back(key);
    std::sort(keys.begin(), keys.end(), outcome_key_less);
    for (const auto& key : keys)
      out << dim << "," << (ball_dim - dim) << "," << key << "," << counts.at(key) << "\n";
  }
  return out.str();
}

// Wall time is deliberately left out so journal files are byte-stable for a
// fixed config and seed; timing goes to the progress log instead.
Json face_outcome_to_json(const FaceOutcome& fo) {
  Json j;
  j["face"] = fo.flat_index;
  j["dim"] = fo.dim;
  j["outcome"] = fo.outcome.key();
  if (fo.outcome.functional_sensitive) j["functional_sensitive"] = true;
  return j;
}

FaceOutcome face_outcome_from_json(const Json& j) {
  FaceOutcome fo;
  fo.flat_index = j.at("face").get<std::size_t>();
  fo.dim = j.at("dim").get<std::size_t>();
  std::string key = j.at("outcome").get<std::string>();
  if (key == "-") {
    fo.outcome.kind = DegreeOutcome::Kind::NotZeroDimensional;
  } else if (key == "timeout") {
    fo.outcome.kind = DegreeOutcome::Kind::TimedOut;
  } else {
    fo.outcome = DegreeOutcome::of_degree(std::stoi(key));
  }
  if (j.contains("functional_sensitive"))
    fo.outcome.functional_sensitive = j["functional_sensitive"].get<bool>();
  if (j.contains("seconds")) fo.seconds = j["seconds"].get<double>();
  return fo;
}

RatVec parse_rational_list(const std::string& csv, std::size_t expect) {
  RatVec out;
  std::string cur;
  std::istringstream in(csv);
  while (std::getline(in, cur, ',')) {
    if (cur.empty()) continue;
    out.push_back(Rational::parse(cur));
  }
  if (expect && out.size() != expect)
    throw std::invalid_argument("expected " + std::to_string(expect) + " rationals");
  return out;
}

}  // namespace wdeg
