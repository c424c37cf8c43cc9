#include "unrel_cli/report_json.hpp"

namespace unrel::cli {

Json log10_or_null(LogWeight w) {
  if (w.is_zero()) return nullptr;
  return w.log10();
}

Json estimate_json(const EngineResult& result, const MultiGraph& g, double p, double eps) {
  const EstimateReport& r = result.report;
  Json j;
  j["estimate"] = r.estimate.linear();
  j["log10_estimate"] = log10_or_null(r.estimate);
  j["method"] = r.method;
  j["decision"] = result.trace.decision;
  j["samples"] = r.samples;
  j["rel_variance_hat"] = r.rel_variance_hat;
  j["q1_active"] = r.q1_active;
  j["seed"] = r.seed;
  j["p"] = p;
  j["eps"] = eps;
  j["n"] = g.num_vertices();
  j["m"] = g.num_edges();
  if (result.groups > 0) {
    j["eta_bound"] = result.eta_bound;
    j["pilot_samples"] = result.pilot_samples;
    j["groups"] = result.groups;
    j["group_size"] = result.group_size;
  }
  return j;
}

Json trace_json(const TraceNode& node) {
  Json j;
  j["n"] = node.n;
  j["m"] = node.m;
  j["lambda"] = node.lambda;
  j["gamma"] = node.gamma;
  j["q"] = node.q;
  j["p"] = node.p;
  j["decision"] = node.decision;
  j["method"] = node.method;
  j["children"] = Json::array();
  for (const TraceNode& c : node.children) j["children"].push_back(trace_json(c));
  return j;
}

Json stats_json(const MultiGraph& g, const GomoryHuTree& tree) {
  Json j;
  j["n"] = g.num_vertices();
  j["m"] = g.num_edges();
  j["lambda"] = min_cut_value(tree);
  j["gamma"] = gamma(tree);
  j["tau"] = tau_and_contract(g, tree).tau;
  j["gomory_hu_weights"] = tree.sorted_weights();
  return j;
}

}  // namespace unrel::cli
