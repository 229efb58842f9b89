#include "nsring/report_json.hpp"

namespace nsring {

json to_json(const RelativeIdeal& I) {
  json j;
  j["min"] = I.min_element();
  j["small_part"] = I.small_elements();
  j["stab"] = I.stabilization();
  return j;
}

json to_json(const NumericalSemigroup& H) {
  json j;
  j["key"] = H.key();
  j["generators"] = H.minimal_generators();
  return j;
}

json to_json(const ClassificationReport& rep) {
  json j;
  j["gorenstein"] = rep.gorenstein;
  j["almost_gorenstein"] = rep.almost_gorenstein;
  j["ggl"] = rep.generalized_gorenstein;
  j["minimal_multiplicity"] = rep.minimal_multiplicity;
  j["arf"] = rep.arf;
  j["finite_cm_type"] = rep.finite_cm_type;
  j["S"] = rep.S.key();
  j["S_exponent"] = rep.s_exponent;
  j["conductor_ideal"] = to_json(rep.conductor);
  j["ell_R_mod_c"] = rep.ell_R_mod_c;
  if (rep.reflexive_count)
    j["reflexive_count"] = *rep.reflexive_count;
  else
    j["reflexive_count"] = nullptr;
  j["notes"] = rep.notes;
  return j;
}

json to_json(const LipmanChain& chain) {
  json j;
  json members = json::array();
  for (const auto& M : chain.members) members.push_back(M.key());
  j["members"] = members;
  j["multiplicity_sequence"] = chain.multiplicity_sequence;
  return j;
}

const char* verdict_name(UlrichVerdict v) {
  switch (v) {
    case UlrichVerdict::Ulrich: return "ulrich";
    case UlrichVerdict::NotUlrich: return "not_ulrich";
    default: return "not_verified";
  }
}

json to_json(const UlrichEvidence& ev) {
  json j;
  j["verdict"] = verdict_name(ev.verdict);
  j["mu"] = ev.mu;
  j["colength"] = ev.colength;
  j["socle_dim"] = ev.socle_dim;
  j["lhs"] = ev.lhs;
  j["rhs"] = ev.rhs;
  j["reduction"] = ev.reduction;
  j["reason"] = ev.reason;
  return j;
}

json to_json(const Certificate& cert) {
  json j;
  j["suite"] = cert.suite;
  j["instance"] = cert.instance;
  j["pass"] = cert.pass;
  j["detail"] = cert.detail;
  return j;
}

json analyze_json(const NumericalSemigroup& H) {
  ClassificationReport rep = classify(H);
  json j;
  j["generators"] = H.minimal_generators();
  j["frobenius"] = H.frobenius();
  j["conductor"] = H.conductor();
  j["genus"] = H.genus();
  j["pf"] = H.pseudo_frobenius();
  j["type"] = H.type();
  j["multiplicity"] = H.multiplicity();
  j["embedding_dim"] = H.embedding_dim();
  j["apery"] = H.apery(H.multiplicity());
  json cls = to_json(rep);
  for (auto& [k, v] : cls.items()) j[k] = v;

  if (H.genus() <= 16) {
    auto classes = reflexive_classes(H);
    j["reflexive_sector_count"] = classes.size();
    json lits = json::array();
    for (const auto& E : classes) lits.push_back(E.literal());
    j["reflexive_classes"] = lits;
  } else {
    j["reflexive_sector_count"] = nullptr;
  }
  return j;
}

}  // namespace nsring
