#pragma once

#include <json.hpp>

#include <string>

#include "wdeg/wdegree.hpp"

namespace wdeg {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json ratvec_to_json(const RatVec& v);
RatVec ratvec_from_json(const Json& j);

// {"type":"explicit","d":[[..]]} | {"type":"discrete","n":N} |
// {"type":"l1","n":N} | {"type":"hamming","dims":[..]}
FiniteMetric metric_from_json(const Json& spec);

// {"type":"matrix","A":[[..]],"scaling":[..]} | {"type":"scroll","n":[..]} |
// {"type":"hirzebruch","a":A,"b":B} | {"type":"star_tree","leaves":[..],"hub":K} |
// {"type":"path4_binary"} | {"type":"cycle4_binary"} | {"type":"no3way","dims":[r,s,t]}
ToricModel model_from_json(const Json& spec, Budget& budget);

Json face_to_json(const Face& f, const VPolytope& poly);
Json ball_to_json(const FiniteMetric& metric, const FaceLattice& lattice);

Json multidegree_to_json(const MultiDegree& md);
MultiDegree multidegree_from_json(const Json& j);

Json table_to_json(const DegreeTable& t, const RatVec& mu);
// Frozen schema: header comment, then face_dim,face_codim,outcome,count rows.
std::string table_to_csv(const DegreeTable& t, std::size_t ball_dim);

Json face_outcome_to_json(const FaceOutcome& fo);
FaceOutcome face_outcome_from_json(const Json& j);

RatVec parse_rational_list(const std::string& csv, std::size_t expect = 0);

}  // namespace wdeg
