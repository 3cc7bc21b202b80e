#include "pluri/cli.hpp"
#include "pluri/poly_text.hpp"

namespace pluri {

using nlohmann::json;

namespace {

json complex_json(cd z) { return json::array({z.real(), z.imag()}); }

json point_json(const Point2& p) { return json::array({complex_json(p[0]), complex_json(p[1])}); }

json points_json(const std::vector<Point2>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(point_json(p));
  return a;
}

json leaf_json(const Leaf& l) {
  json j;
  j["generator"] = l.generator + 1;
  j["phi"] = to_text(l.phi);
  j["constant"] = complex_json(l.constant);
  j["exact"] = l.exact;
  j["curve"] = to_text(l.curve);
  j["base_point"] = point_json(l.base_point);
  j["singular_points"] = points_json(l.singular_points);
  return j;
}

json matrix_json(const std::vector<std::vector<double>>& m) {
  json a = json::array();
  for (const auto& row : m) a.push_back(row);
  return a;
}

}  // namespace

json to_json(const VarietyDecomposition& d) {
  json j;
  j["everything"] = d.everything_flag;
  j["curve"] = d.everything_flag ? "0" : to_text(d.one_dim);
  j["components"] = json::array();
  for (const auto& f : d.one_dim_factors) j["components"].push_back(to_text(f));
  j["points"] = points_json(d.zero_dim);
  return j;
}

json to_json(const Stratification& s) {
  json j;
  j["aborted"] = s.aborted;
  j["everything"] = s.everything;
  if (s.abort_component) j["abort_component"] = to_text(*s.abort_component);
  j["levels"] = json::array();
  for (const auto& level : s.levels) {
    json l;
    l["index"] = level.index;
    l["boundary"] = level.boundary;
    l["description"] = level.description;
    if (level.index == 1) l["interior"] = to_json(level.interior);
    l["points"] = points_json(level.points);
    l["certificates"] = json::array();
    for (const auto& c : level.certificates)
      l["certificates"].push_back({{"component", to_text(c.component)},
                                   {"generator", c.generator >= 0 ? json(c.generator + 1) : json(nullptr)},
                                   {"witness", to_text(c.witness)},
                                   {"sampled_max", c.sampled_max}});
    l["notes"] = level.notes;
    j["levels"].push_back(l);
  }
  return j;
}

json to_json(const Verdict& v) {
  json j;
  j["kind"] = to_string(v.kind);
  if (v.face) {
    j["witness"] = {{"type", "face"},
                    {"frozen_var", "z" + std::to_string(v.face->frozen_var + 1)},
                    {"a", complex_json(v.face->a)},
                    {"all", v.face->all}};
  } else if (v.curve) {
    j["witness"] = {{"type", "curve"}, {"polynomial", to_text(*v.curve)}};
  } else if (v.leaf) {
    j["witness"] = leaf_json(*v.leaf);
    j["witness"]["type"] = "leaf";
  } else {
    j["witness"] = nullptr;
  }
  if (v.stratification) j["stratification"] = to_json(*v.stratification);
  j["notes"] = v.notes;
  return j;
}

json to_json(const MinorSystem& ms) {
  json j;
  j["k"] = ms.k;
  j["identically_zero"] = ms.identically_zero;
  j["minors"] = json::array();
  for (const auto& m : ms.minors) {
    json rows = json::array(), cols = json::array();
    for (int r : m.rows) rows.push_back(r + 1);
    for (int c : m.cols) cols.push_back(c + 1);
    j["minors"].push_back({{"rows", rows}, {"cols", cols}, {"det", to_text(m.det)}});
  }
  return j;
}

json to_json(const DensityReport& r) {
  json j;
  j["generators"] = r.generators;
  j["domain"] = describe(r.domain);
  j["resolution"] = r.domain.resolution;
  j["targets"] = r.targets;
  j["degrees"] = r.degrees;
  j["basis_sizes"] = r.basis_sizes;
  j["ranks"] = r.ranks;
  j["train_points"] = r.train_points;
  j["validate_points"] = r.validate_points;
  j["train_residuals"] = matrix_json(r.train_residuals);
  j["sup_residuals"] = matrix_json(r.sup_residuals);
  if (r.has_stability) {
    j["sup_residuals_doubled"] = matrix_json(r.sup_residuals_doubled);
    j["stability"] = matrix_json(r.stability);
  }
  return j;
}

json to_json(const CertificateOutcome& c) {
  json j;
  j["status"] = to_string(c.status);
  if (c.certificate) {
    const auto& s = *c.certificate;
    j["certificate"] = {{"generator", s.generator + 1},
                        {"theta", s.theta},
                        {"value_at_query", s.value_at_query},
                        {"graph_max", s.graph_max},
                        {"margin", s.margin}};
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

}  // namespace pluri
