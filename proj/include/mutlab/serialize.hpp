#pragma once

#include <nlohmann/json.hpp>

#include "mutlab/mutation.hpp"
#include "mutlab/solver.hpp"

namespace mutlab {

nlohmann::ordered_json fingerprint_to_json(const Fingerprint& fp);
Fingerprint fingerprint_from_json(const nlohmann::json& j);

nlohmann::ordered_json rep_class_to_json(const RepClass& c);
RepClass rep_class_from_json(const nlohmann::json& j);

nlohmann::ordered_json solve_result_to_json(const SolveResult& r);
std::vector<RepClass> classes_from_json(const nlohmann::json& j);

nlohmann::ordered_json mutation_result_to_json(const MutationResult& r);
nlohmann::ordered_json z_order_to_json(const ZOrderReport& r);
nlohmann::ordered_json orbits_to_json(const DualityOrbits& o);
nlohmann::ordered_json path_report_to_json(const PathReport& r);

nlohmann::ordered_json quat_to_json(const Quat& q);
Quat quat_from_json(const nlohmann::json& j);

}  // namespace mutlab
