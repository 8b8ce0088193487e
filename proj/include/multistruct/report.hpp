#pragma once

#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "multistruct/verdicts.hpp"

namespace multistruct {

using Json = nlohmann::ordered_json;

/// Lifted ambient-ring generators of every filtration ideal, produced in
/// embedded mode: for each chain, one generator list per index 0..m+1.
struct EmbeddedLifts {
  std::vector<std::vector<std::string>> powers;
  std::vector<std::vector<std::string>> annihilator;
  std::vector<std::vector<std::string>> double_annihilator;
};

/// Everything one analysis produces, in plain serializable form.
struct StructureReport {
  int schema_version = 1;
  std::string field;
  std::vector<std::string> vars;
  std::vector<std::string> ideal;
  std::string mode = "intrinsic";

  std::size_t dim_B = 0;
  std::size_t m = 0;
  bool trivial_multiplicity_one = false;
  std::string power_filtration_note;

  std::vector<std::size_t> powers_dims, ann_dims, dann_dims;
  StructureType type;
  std::vector<MorphismInfo> morphisms;
  std::vector<PairingInfo> pairings;
  TheoremVerdict theorem;
  std::vector<PropertyResult> properties;
  bool quasiprimitive = false;
  std::vector<std::string> falsifications;
  std::optional<EmbeddedLifts> embedded;
  double timing_ms = 0.0;
};

inline Json to_json(const StructureReport& r) {
  Json j;
  j["schema_version"] = r.schema_version;
  j["input"] = Json{{"field", r.field}, {"vars", r.vars}, {"ideal", r.ideal}, {"mode", r.mode}};
  j["dim_B"] = r.dim_B;
  j["m"] = r.m;
  j["trivial_multiplicity_one"] = r.trivial_multiplicity_one;
  j["power_filtration_note"] = r.power_filtration_note;
  j["chain_dims"] = Json{{"powers", r.powers_dims},
                         {"annihilator", r.ann_dims},
                         {"double_annihilator", r.dann_dims}};
  j["type"] =
      Json{{"dims_B", r.type.dims_B}, {"dims_A", r.type.dims_A}, {"dims_M", r.type.dims_M}};
  j["morphisms"] = Json::array();
  for (const auto& mo : r.morphisms) {
    j["morphisms"].push_back(Json{{"ell", mo.ell},
                                  {"rank_b_to_a", mo.rank_b_to_a},
                                  {"b_to_a_bijective", mo.b_to_a_bijective},
                                  {"rank_a_to_m", mo.rank_a_to_m},
                                  {"a_to_m_bijective", mo.a_to_m_bijective}});
  }
  j["pairings"] = Json::array();
  for (const auto& p : r.pairings) {
    j["pairings"].push_back(Json{{"ell", p.ell},
                                 {"dim_a", p.dim_a},
                                 {"dim_hom", p.dim_hom},
                                 {"rank", p.rank},
                                 {"bijective", p.bijective}});
  }
  j["theorem"] = Json{{"cond_a", r.theorem.cond_a},
                      {"dim_a_top", r.theorem.dim_a_top},
                      {"dim_m_top", r.theorem.dim_m_top},
                      {"cond_b", r.theorem.cond_b},
                      {"cond_c", r.theorem.cond_c},
                      {"criterion_gorenstein", r.theorem.criterion_gorenstein},
                      {"oracle_gorenstein", r.theorem.oracle_gorenstein},
                      {"socle_dim", r.theorem.socle_dim},
                      {"agrees", r.theorem.agrees}};
  j["properties"] = Json::array();
  for (const auto& p : r.properties) {
    j["properties"].push_back(Json{{"name", p.name},
                                   {"applicable", p.applicable},
                                   {"holds", p.holds},
                                   {"details", p.details}});
  }
  j["quasiprimitive"] = r.quasiprimitive;
  j["falsifications"] = r.falsifications;
  if (r.embedded) {
    j["embedded_lifts"] = Json{{"powers", r.embedded->powers},
                               {"annihilator", r.embedded->annihilator},
                               {"double_annihilator", r.embedded->double_annihilator}};
  } else {
    j["embedded_lifts"] = nullptr;
  }
  j["timing_ms"] = r.timing_ms;
  return j;
}

inline StructureReport report_from_json(const Json& j) {
  StructureReport r;
  r.schema_version = j.at("schema_version").get<int>();
  r.field = j.at("input").at("field").get<std::string>();
  r.vars = j.at("input").at("vars").get<std::vector<std::string>>();
  r.ideal = j.at("input").at("ideal").get<std::vector<std::string>>();
  r.mode = j.at("input").at("mode").get<std::string>();
  r.dim_B = j.at("dim_B").get<std::size_t>();
  r.m = j.at("m").get<std::size_t>();
  r.trivial_multiplicity_one = j.at("trivial_multiplicity_one").get<bool>();
  r.power_filtration_note = j.at("power_filtration_note").get<std::string>();
  r.powers_dims = j.at("chain_dims").at("powers").get<std::vector<std::size_t>>();
  r.ann_dims = j.at("chain_dims").at("annihilator").get<std::vector<std::size_t>>();
  r.dann_dims = j.at("chain_dims").at("double_annihilator").get<std::vector<std::size_t>>();
  r.type.dims_B = j.at("type").at("dims_B").get<std::vector<std::size_t>>();
  r.type.dims_A = j.at("type").at("dims_A").get<std::vector<std::size_t>>();
  r.type.dims_M = j.at("type").at("dims_M").get<std::vector<std::size_t>>();
  for (const auto& e : j.at("morphisms")) {
    MorphismInfo mo;
    mo.ell = e.at("ell").get<std::size_t>();
    mo.rank_b_to_a = e.at("rank_b_to_a").get<std::size_t>();
    mo.b_to_a_bijective = e.at("b_to_a_bijective").get<bool>();
    mo.rank_a_to_m = e.at("rank_a_to_m").get<std::size_t>();
    mo.a_to_m_bijective = e.at("a_to_m_bijective").get<bool>();
    r.morphisms.push_back(mo);
  }
  for (const auto& e : j.at("pairings")) {
    PairingInfo p;
    p.ell = e.at("ell").get<std::size_t>();
    p.dim_a = e.at("dim_a").get<std::size_t>();
    p.dim_hom = e.at("dim_hom").get<std::size_t>();
    p.rank = e.at("rank").get<std::size_t>();
    p.bijective = e.at("bijective").get<bool>();
    r.pairings.push_back(p);
  }
  const auto& t = j.at("theorem");
  r.theorem.cond_a = t.at("cond_a").get<bool>();
  r.theorem.dim_a_top = t.at("dim_a_top").get<std::size_t>();
  r.theorem.dim_m_top = t.at("dim_m_top").get<std::size_t>();
  r.theorem.cond_b = t.at("cond_b").get<bool>();
  r.theorem.cond_c = t.at("cond_c").get<bool>();
  r.theorem.criterion_gorenstein = t.at("criterion_gorenstein").get<bool>();
  r.theorem.oracle_gorenstein = t.at("oracle_gorenstein").get<bool>();
  r.theorem.socle_dim = t.at("socle_dim").get<std::size_t>();
  r.theorem.agrees = t.at("agrees").get<bool>();
  for (const auto& e : j.at("properties")) {
    PropertyResult p;
    p.name = e.at("name").get<std::string>();
    p.applicable = e.at("applicable").get<bool>();
    p.holds = e.at("holds").get<bool>();
    p.details = e.at("details").get<std::string>();
    r.properties.push_back(p);
  }
  r.quasiprimitive = j.at("quasiprimitive").get<bool>();
  r.falsifications = j.at("falsifications").get<std::vector<std::string>>();
  if (!j.at("embedded_lifts").is_null()) {
    EmbeddedLifts e;
    e.powers = j.at("embedded_lifts").at("powers").get<std::vector<std::vector<std::string>>>();
    e.annihilator =
        j.at("embedded_lifts").at("annihilator").get<std::vector<std::vector<std::string>>>();
    e.double_annihilator = j.at("embedded_lifts")
                               .at("double_annihilator")
                               .get<std::vector<std::vector<std::string>>>();
    r.embedded = std::move(e);
  }
  r.timing_ms = j.at("timing_ms").get<double>();
  return r;
}

/// The characteristic-independent slice of a report: everything except the
/// input echo, coefficient-bearing lifts and timing.
inline Json dimension_signature(const StructureReport& r) {
  Json j = to_json(r);
  j.erase("input");
  j.erase("embedded_lifts");
  j.erase("timing_ms");
  return j;
}

inline std::string render_dims(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

inline std::string to_text(const StructureReport& r, bool with_properties) {
  std::ostringstream os;
  os << "field " << r.field << ", vars";
  for (const auto& v : r.vars) os << " " << v;
  os << "\nideal:";
  for (const auto& g : r.ideal) os << " " << g << ";";
  os << "\n";
  if (r.trivial_multiplicity_one)
    os << "trivial structure of multiplicity 1 (B = k)\n";
  os << "dim_k B = " << r.dim_B << ", nilpotency index m = " << r.m << "\n";
  os << "chain dims  I^l : " << render_dims(r.powers_dims) << "\n";
  os << "            I_l : " << render_dims(r.ann_dims) << "\n";
  os << "            J_l : " << render_dims(r.dann_dims) << "\n";
  os << "type  dims_B = " << render_dims(r.type.dims_B)
     << "  dims_A = " << render_dims(r.type.dims_A)
     << "  dims_M = " << render_dims(r.type.dims_M) << "\n";
  os << "canonical morphisms (B_l -> A_l -> M_l ranks):";
  for (const auto& mo : r.morphisms)
    os << " [l=" << mo.ell << ": " << mo.rank_b_to_a << "," << mo.rank_a_to_m << "]";
  os << "\npairings A_l -> Hom(M_{m-l}, M_m):";
  for (const auto& p : r.pairings)
    os << " [l=" << p.ell << ": rank " << p.rank << "/" << p.dim_hom
       << (p.bijective ? " bij" : "") << "]";
  os << "\n";
  os << "conditions: (a) " << (r.theorem.cond_a ? "holds" : "fails")
     << " (dim A_m = " << r.theorem.dim_a_top << ", dim M_m = " << r.theorem.dim_m_top << ")"
     << ", (b) " << (r.theorem.cond_b ? "holds" : "fails") << ", (c) "
     << (r.theorem.cond_c ? "holds" : "fails") << "\n";
  os << "criterion: " << (r.theorem.criterion_gorenstein ? "Gorenstein" : "not Gorenstein")
     << "; socle oracle: dim " << r.theorem.socle_dim << " ("
     << (r.theorem.oracle_gorenstein ? "Gorenstein" : "not Gorenstein") << "); "
     << (r.theorem.agrees ? "AGREE" : "DISAGREE") << "\n";
  if (r.quasiprimitive) os << "quasiprimitive: all graded pieces have rank 1\n";
  if (with_properties) {
    os << "properties:\n";
    for (const auto& p : r.properties) {
      os << "  " << p.name << ": "
         << (!p.applicable ? "n/a" : (p.holds ? "holds" : "FAILS"));
      if (!p.details.empty()) os << " (" << p.details << ")";
      os << "\n";
    }
  }
  if (r.embedded) {
    os << "embedded-mode ambient lifts (generators modulo the input ideal):\n";
    auto dump = [&](const char* name, const std::vector<std::vector<std::string>>& chain) {
      os << "  " << name << ":\n";
      for (std::size_t l = 0; l < chain.size(); ++l) {
        os << "    l=" << l << ": {";
        for (std::size_t i = 0; i < chain[l].size(); ++i) {
          if (i) os << ", ";
          os << chain[l][i];
        }
        os << "}\n";
      }
    };
    dump("I^l", r.embedded->powers);
    dump("I_l", r.embedded->annihilator);
    dump("J_l", r.embedded->double_annihilator);
  }
  for (const auto& f : r.falsifications) os << "FALSIFICATION: " << f << "\n";
  return os.str();
}

}  // namespace multistruct
