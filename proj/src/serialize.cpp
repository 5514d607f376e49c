#include "mutlab/serialize.hpp"

#include "mutlab/errors.hpp"

namespace mutlab {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

ojson quat_to_json(const Quat& q) { return ojson::array({q.w, q.x, q.y, q.z}); }

Quat quat_from_json(const json& j) {
  auto v = j.get<std::vector<double>>();
  if (v.size() != 4) throw IoError("quaternion needs 4 numbers");
  return Quat{v[0], v[1], v[2], v[3]};
}

ojson fingerprint_to_json(const Fingerprint& fp) {
  ojson arr = ojson::array();
  for (const auto& t : fp.traces) arr.push_back(ojson::array({t.real(), t.imag()}));
  return arr;
}

Fingerprint fingerprint_from_json(const json& j) {
  Fingerprint fp;
  for (const auto& e : j) {
    auto v = e.get<std::vector<double>>();
    if (v.size() != 2) throw IoError("fingerprint entries are [re, im] pairs");
    fp.traces.emplace_back(v[0], v[1]);
  }
  return fp;
}

ojson rep_class_to_json(const RepClass& c) {
  ojson j;
  j["family"] = family_name(c.representative.family());
  j["stabilizer"] = c.stabilizer;
  j["commutant_dim"] = c.commutant_dim;
  j["residual"] = c.residual;
  j["hits"] = c.hits;
  j["fingerprint"] = fingerprint_to_json(c.fp);
  j["representative"] = representation_to_json(c.representative);
  return j;
}

RepClass rep_class_from_json(const json& j) {
  RepClass c;
  c.representative = representation_from_json(j.at("representative"));
  c.fp = fingerprint_from_json(j.at("fingerprint"));
  c.stabilizer = j.at("stabilizer").get<std::string>();
  c.commutant_dim = j.at("commutant_dim").get<int>();
  c.residual = j.at("residual").get<double>();
  c.hits = j.at("hits").get<int>();
  return c;
}

ojson solve_result_to_json(const SolveResult& r) {
  ojson j;
  j["restarts_used"] = r.restarts_used;
  j["saturation_rerun_triggered"] = r.saturation_rerun_triggered;
  j["warnings"] = r.warnings;
  ojson classes = ojson::array();
  for (const auto& c : r.classes) classes.push_back(rep_class_to_json(c));
  j["classes"] = classes;
  return j;
}

std::vector<RepClass> classes_from_json(const json& j) {
  const json& arr = j.contains("classes") ? j.at("classes")
                    : j.contains("payload") ? j.at("payload").at("classes")
                                            : j;
  std::vector<RepClass> out;
  for (const auto& e : arr) out.push_back(rep_class_from_json(e));
  return out;
}

ojson z_order_to_json(const ZOrderReport& r) {
  ojson j;
  j["abs_real"] = r.abs_real;
  j["so3_trace"] = r.so3_trace;
  j["order_two"] = r.order_two;
  return j;
}

ojson mutation_result_to_json(const MutationResult& r) {
  ojson j;
  j["conjugator"] = quat_to_json(r.conj.plus);
  j["conjugator_minus"] = quat_to_json(r.conj.minus());
  j["conjugator_residual"] = r.conj.residual;
  j["input"] = representation_to_json(r.input);
  j["mutated"] = representation_to_json(r.mutated);
  j["wtau_extension"] = representation_to_json(r.wtau_extension);
  ojson res;
  res["input"] = r.input_residual;
  res["amalgam"] = r.amalgam_residual;
  res["wtau"] = r.wtau_residual;
  res["conjugator"] = r.conj.residual;
  j["residuals"] = res;
  j["z_order"] = z_order_to_json(r.z_order);
  j["reducible_on_sigma"] = r.reducible_on_sigma;
  j["sigma_commutant_dim"] = r.sigma_commutant_dim;
  return j;
}

ojson orbits_to_json(const DualityOrbits& o) {
  ojson j;
  j["fixed"] = o.fixed;
  ojson sw = ojson::array();
  for (const auto& [a, b] : o.swapped) sw.push_back(ojson::array({a, b}));
  j["swapped"] = sw;
  j["unresolved"] = o.unresolved;
  return j;
}

ojson path_report_to_json(const PathReport& r) {
  ojson j;
  j["pass"] = r.pass;
  if (!r.failure.empty()) j["failure"] = r.failure;
  j["junction_gap_start"] = r.junction_gap_start;
  j["junction_gap_end"] = r.junction_gap_end;
  j["endpoint_sign_gap"] = r.endpoint_sign_gap;
  j["bridge_max_residual"] = r.bridge_max_residual;
  j["continuity_max_step"] = r.continuity_max_step;
  j["printed_max_residual"] = r.printed_max_residual;
  j["printed_formula_flag"] = r.printed_formula_flag;
  ojson pts = ojson::array();
  for (const auto& p : r.points) {
    ojson pj;
    pj["r"] = p.r;
    pj["relator_residual"] = p.relator_residual;
    pj["conj_residual"] = p.conj_residual;
    pj["closed_form_residual"] = p.closed_form_residual;
    pj["optimizer_match"] = p.optimizer_match;
    pj["printed_formula_residual"] = p.printed_formula_residual;
    pts.push_back(pj);
  }
  j["points"] = pts;
  return j;
}

}  // namespace mutlab
