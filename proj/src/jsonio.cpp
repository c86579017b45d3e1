#include "mahler/jsonio.hpp"

#include <sstream>

namespace mahler {

namespace {

std::string rat_str(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

Json toric_payload(const ToricRoot& r) {
  Json j;
  if (r.u0)
    j["u0"] = rat_str(*r.u0);
  else
    j["u0"] = nullptr;
  j["u_interval"] = {rat_str(r.u_lo), rat_str(r.u_hi)};
  j["theta_interval"] = {rat_str(r.theta_lo), rat_str(r.theta_hi)};
  j["min_poly"] = r.alpha_min_poly.is_zero() ? Json(nullptr) : Json(r.alpha_min_poly.to_string());
  j["degree"] = r.alpha_degree;
  j["degree_exact"] = r.alpha_degree_exact;
  j["mult_delta"] = r.mult;
  j["theta_mult_delta"] = r.theta_mult;
  j["mult_h"] = r.mult_h;
  j["kind"] = kind_name(r.kind);
  return j;
}

Json conductors_json(const std::vector<Int>& cs) {
  Json arr = Json::array();
  for (const auto& c : cs) arr.push_back(c.convert_to<long>());
  return arr;
}

}  // namespace

Json wrap_record(const std::string& type, Json payload) {
  Json j;
  j["type"] = type;
  j["version"] = 1;
  j["payload"] = std::move(payload);
  return j;
}

std::string dump_line(const Json& record) { return record.dump() + "\n"; }

Json report_payload(const PermissibilityReport& r) {
  Json j;
  j["a"] = r.a.to_string();
  j["b"] = r.b.to_string();
  j["negated"] = r.negated;
  j["ell"] = r.ell;
  Json conds;
  for (size_t i = 0; i < r.conditions.size(); ++i) {
    Json c;
    c["verdict"] = verdict_name(r.conditions[i].verdict);
    c["witness"] = r.conditions[i].witness;
    conds[std::to_string(i + 1)] = std::move(c);
  }
  j["conditions"] = std::move(conds);
  if (r.split_valid) {
    Json s;
    s["delta"] = r.split.delta.to_string();
    s["g"] = r.split.g.to_string();
    s["h"] = r.split.h.to_string();
    j["split"] = std::move(s);
  } else {
    j["split"] = nullptr;
  }
  Json toric = Json::array();
  for (const auto& root : r.toric) toric.push_back(toric_payload(root));
  j["toric"] = std::move(toric);
  j["conductors"] = conductors_json(r.conductors);
  j["permissible"] = r.permissible;
  if (r.brv_half_measure) j["brv_half_measure"] = true;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json relation_payload(const RelationResult& r, const std::vector<Int>& conductors,
                      unsigned digits, const std::string& measure) {
  Json j;
  j["conductors"] = conductors_json(conductors);
  j["digits"] = digits;
  j["measure"] = measure;
  Json coeff = Json::array();
  for (const auto& n : r.coefficients) coeff.push_back(n.str());
  j["coefficients"] = std::move(coeff);
  Json rats = Json::array();
  for (const auto& q : r.rationals) rats.push_back(rat_str(q));
  j["rationals"] = std::move(rats);
  j["residual"] = r.residual.str(12, std::ios_base::scientific);
  j["confirmed_at"] = r.confirmed_at;
  return j;
}

Json candidate_payload(const CandidateRecord& r) {
  Json j;
  j["a"] = r.a.to_string();
  j["b"] = r.b.to_string();
  j["v"] = r.v.to_string();
  j["c"] = r.c.str();
  j["ell"] = r.ell;
  j["conductors"] = conductors_json(r.conductors);
  j["digest"] = r.digest;
  j["a_index"] = r.a_index;
  j["coords"] = r.coords;
  return j;
}

std::optional<CandidateRecord> candidate_from_payload(const Json& p) {
  CandidateRecord r;
  auto parse_poly = [](const Json& v) { return IntPoly::parse(v.get<std::string>()); };
  try {
    auto a = parse_poly(p.at("a"));
    auto b = parse_poly(p.at("b"));
    auto v = parse_poly(p.at("v"));
    if (!a || !b || !v) return std::nullopt;
    r.a = *a;
    r.b = *b;
    r.v = *v;
    r.c = Int(p.at("c").get<std::string>());
    r.ell = p.at("ell").get<int>();
    for (const auto& c : p.at("conductors")) r.conductors.emplace_back(c.get<long>());
    r.digest = p.at("digest").get<std::string>();
    r.a_index = p.at("a_index").get<long>();
    r.coords = p.at("coords").get<std::string>();
  } catch (...) {
    return std::nullopt;
  }
  return r;
}

}  // namespace mahler
