#include "mutlab/report.hpp"

#include "mutlab/errors.hpp"

namespace mutlab {

using ojson = nlohmann::ordered_json;

ojson RunConfig::to_json() const {
  ojson j;
  j["seed"] = seed;
  j["accept_tol"] = accept_tol;
  j["dedup_tol"] = dedup_tol;
  j["trace_tol"] = trace_tol;
  j["restarts"] = restarts;
  j["fixture_dir"] = fixture_dir;
  return j;
}

const std::map<std::string, std::string>& claim_registry() {
  static const std::map<std::string, std::string> registry = {
      {"TAU-RELATOR",
       "the hyperelliptic action sends the surface relator to its conjugate by b1"},
      {"SYMMREP-TRACE",
       "surface-group characters are invariant under the hyperelliptic action"},
      {"F2-CONJUGATOR",
       "a common orthogonal order-four element conjugates any SU(2) pair to its inverses"},
      {"H1-MAPTORUS",
       "the twisted mapping torus has H1 = (Z/2)^4 + Z and sits at Euler class -3"},
      {"WTAU-H1", "the trace cobordism of a homology-sphere splitting has H1 = Z"},
      {"EXTENSION-COUNT",
       "a representation irreducible on the surface extends over the cobordism exactly twice, "
       "as z -> +g and z -> -g, with one SO(3) extension"},
      {"Z-ORDER", "the stable letter maps to an order-two rotation"},
      {"SU2-ORACLE",
       "numerical SU(2) class counts match the exact rotation-number enumeration"},
      {"BODEN-SU3",
       "the (2,3,7) fixture has 4 irreducible SU(3) classes: 2 self-dual and one conjugate pair"},
      {"SU3-DUALITY", "SU(3) classes pair off under the dual-representation involution"},
      {"HEEGAARD-INVARIANCE",
       "the genus-2 Heegaard involution fixes every SU(2)/SO(3) character"},
      {"PATH-CHECK",
       "the twisted mapping-torus representation space is connected through a 3-piece path"},
      {"MUTATION-INVOLUTION", "mutation applied twice returns the original character"},
      {"SOLVE-RESIDUAL", "accepted representations satisfy every relator within tolerance"},
      {"H1-COMPUTED", "abelianization and Smith normal form agree on the reported H1"},
      {"EULER-CLASS", "the Euler-class scan matches H1 uniquely inside the window"},
      {"FIXTURES-VALID", "every bundled fixture passes its own validation predicate"},
  };
  return registry;
}

const std::string& claim_statement(const std::string& id) {
  auto it = claim_registry().find(id);
  if (it == claim_registry().end()) throw Error("unknown claim id: " + id);
  return it->second;
}

CheckRecord CheckRecord::make(const std::string& claim, bool pass) {
  CheckRecord r;
  r.claim = claim;
  (void)claim_statement(claim);  // must exist in the registry
  r.status = pass ? "pass" : "fail";
  return r;
}

bool Report::all_passed() const {
  for (const auto& c : checks) {
    if (c.status == "fail") return false;
  }
  return true;
}

ojson Report::to_json() const {
  ojson j;
  j["command"] = command;
  j["config"] = config.to_json();
  ojson checks_json = ojson::array();
  for (const auto& c : checks) {
    ojson cj;
    cj["claim"] = c.claim;
    cj["statement"] = claim_statement(c.claim);
    cj["status"] = c.status;
    ojson res;
    for (const auto& [k, v] : c.residuals) res[k] = v;
    cj["residuals"] = res;
    if (!c.values.is_null()) cj["values"] = c.values;
    checks_json.push_back(cj);
  }
  j["checks"] = checks_json;
  if (!payload.is_null()) j["payload"] = payload;
  j["ok"] = all_passed();
  return j;
}

}  // namespace mutlab
