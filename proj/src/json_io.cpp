#include "flagradon/json_io.hpp"

namespace flagradon {

Json weight_to_json(const RootSystem& rs, const Weight& w) {
  Json j;
  j["omega"] = w.fw;
  if (rs.family() != Family::Generic) {
    Json eps = Json::array();
    for (const auto& r : rs.weight_to_epsilon(w)) eps.push_back(r.str());
    j["epsilon"] = eps;
  }
  return j;
}

Weight weight_from_json(const RootSystem& rs, const Json& j) {
  return rs.weight_from(j.at("omega").get<std::vector<long long>>());
}

Json weyl_to_json(const WeylElement& w) {
  return Json(w.word);
}

WeylElement weyl_from_json(const RootSystem& rs, const Json& j) {
  WeylElement w;
  w.word = j.get<std::vector<int>>();
  w.len = static_cast<int>(w.word.size());
  w.key = act(rs, w, rs.rho());
  if (w.len != inversion_count(rs, w))
    throw Error("word in JSON input is not reduced");
  return w;
}

Json class_to_json(const RootSystem& rs, const GrothendieckClass& c) {
  Json arr = Json::array();
  for (const auto& [w, coeff] : c.terms()) {
    Json t;
    t["weight"] = weight_to_json(rs, w);
    t["coeff"] = coeff;
    arr.push_back(t);
  }
  return arr;
}

GrothendieckClass class_from_json(const RootSystem& rs, const Json& j) {
  GrothendieckClass c;
  for (const auto& t : j)
    c.add(weight_from_json(rs, t.at("weight")), t.at("coeff").get<long long>());
  return c;
}

Json entry_to_json(const RootSystem& rs, const GammaEntry& e) {
  Json j;
  j["x"] = weyl_to_json(e.x);
  j["length"] = e.len_x;
  j["singular"] = e.singular;
  if (!e.singular) {
    j["y"] = weyl_to_json(*e.y);
    j["m"] = *e.m;
    j["mu"] = weight_to_json(rs, *e.mu);
    j["degree"] = *e.degree;
  }
  return j;
}

GammaEntry entry_from_json(const RootSystem& rs, const Json& j) {
  GammaEntry e;
  e.x = weyl_from_json(rs, j.at("x"));
  e.len_x = j.at("length").get<int>();
  e.singular = j.at("singular").get<bool>();
  if (!e.singular) {
    e.y = weyl_from_json(rs, j.at("y"));
    e.m = j.at("m").get<int>();
    e.mu = weight_from_json(rs, j.at("mu"));
    e.degree = j.at("degree").get<int>();
  }
  return e;
}

Json report_to_json(const RootSystem& rs, const RadonReport& rep) {
  Json j;
  j["lambda"] = weight_to_json(rs, rep.lambda);
  Json entries = Json::array();
  for (const auto& e : rep.entries) entries.push_back(entry_to_json(rs, e));
  j["entries"] = entries;
  j["euler"] = class_to_json(rs, rep.euler);
  j["vanishes"] = rep.vanishes;
  if (rep.single_term) {
    Json st;
    st["weight"] = weight_to_json(rs, rep.single_term->weight);
    st["shift"] = rep.single_term->shift;
    j["single_term"] = st;
  } else {
    j["single_term"] = nullptr;
  }
  j["concentrated_deg0_sufficient"] = rep.concentrated_deg0_sufficient;
  if (rep.epi_candidate) {
    Json epi;
    epi["candidate"] = weight_to_json(rs, *rep.epi_candidate);
    epi["sufficient"] = rep.epi_sufficient;
    j["epi"] = epi;
  } else {
    j["epi"] = nullptr;
  }
  return j;
}

RadonReport report_from_json(const RootSystem& rs, const Json& j) {
  RadonReport rep;
  rep.lambda = weight_from_json(rs, j.at("lambda"));
  for (const auto& e : j.at("entries"))
    rep.entries.push_back(entry_from_json(rs, e));
  rep.euler = class_from_json(rs, j.at("euler"));
  rep.vanishes = j.at("vanishes").get<bool>();
  if (!j.at("single_term").is_null()) {
    rep.single_term =
        SingleTerm{weight_from_json(rs, j.at("single_term").at("weight")),
                   j.at("single_term").at("shift").get<int>()};
  }
  rep.concentrated_deg0_sufficient =
      j.at("concentrated_deg0_sufficient").get<bool>();
  if (!j.at("epi").is_null()) {
    rep.epi_candidate = weight_from_json(rs, j.at("epi").at("candidate"));
    rep.epi_sufficient = j.at("epi").at("sufficient").get<bool>();
  }
  return rep;
}

Json extremal_report_to_json(const RootSystem& rs, const ExtremalReport& rep) {
  auto entries = [&rs](const std::vector<GammaEntry>& es) {
    Json arr = Json::array();
    for (const auto& e : es) arr.push_back(entry_to_json(rs, e));
    return arr;
  };
  Json j;
  j["lambda"] = weight_to_json(rs, rep.lambda);
  j["mu"] = weight_to_json(rs, rep.mu);
  j["free_directions"] = rep.free_directions;
  j["entries"] = entries(rep.entries);
  j["concentrated"] = rep.concentrated;
  j["phi_epi"] = rep.phi_epi;
  j["phi_iso"] = rep.phi_iso;
  j["concentration_violations"] = entries(rep.concentration_violations);
  j["epi_violations"] = entries(rep.epi_violations);
  j["iso_violations"] = entries(rep.iso_violations);
  return j;
}

ExtremalReport extremal_report_from_json(const RootSystem& rs, const Json& j) {
  auto entries = [&rs](const Json& arr) {
    std::vector<GammaEntry> es;
    for (const auto& e : arr) es.push_back(entry_from_json(rs, e));
    return es;
  };
  ExtremalReport rep;
  rep.lambda = weight_from_json(rs, j.at("lambda"));
  rep.mu = weight_from_json(rs, j.at("mu"));
  rep.free_directions = j.at("free_directions").get<NodeSet>();
  rep.entries = entries(j.at("entries"));
  rep.concentrated = j.at("concentrated").get<bool>();
  rep.phi_epi = j.at("phi_epi").get<bool>();
  rep.phi_iso = j.at("phi_iso").get<bool>();
  rep.concentration_violations = entries(j.at("concentration_violations"));
  rep.epi_violations = entries(j.at("epi_violations"));
  rep.iso_violations = entries(j.at("iso_violations"));
  return rep;
}

Json discrepancies_to_json(const std::vector<Discrepancy>& ds) {
  Json arr = Json::array();
  for (const auto& d : ds) {
    Json j;
    j["family"] = family_name(d.ms.family);
    j["n"] = d.ms.n;
    j["p"] = d.ms.p;
    j["q"] = d.ms.q;
    j["a"] = d.ms.a;
    j["stage"] = d.ms.a == 0 ? "extremal" : "radon";
    j["expected"] = d.expected;
    j["actual"] = d.actual;
    arr.push_back(j);
  }
  return arr;
}

Json make_envelope(const std::string& command, Json input, Json result,
                   long long timing_ms) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["input"] = std::move(input);
  j["result"] = std::move(result);
  j["timing_ms"] = timing_ms;
  return j;
}

std::shared_ptr<const RootSystem> root_system_from_input(const Json& input) {
  const Family fam = family_from_string(input.at("type").get<std::string>());
  if (fam == Family::Generic)
    return std::make_shared<const RootSystem>(
        CartanType::generic(input.at("cartan").get<IntMatrix>()));
  return std::make_shared<const RootSystem>(
      CartanType::classical(fam, input.at("rank").get<int>()));
}

}  // namespace flagradon
