#include "qgap/catalog.hpp"

#include <map>

#include "json.hpp"
#include "qgap/error.hpp"

namespace qgap::survey {

namespace {

struct VarRange {
  const char* var;
  std::int64_t lo;
  std::int64_t desk_hi;
  std::int64_t full_hi;
  std::int64_t step = 1;
};

struct Entry {
  const char* name;
  const char* tmpl;
  const char* rule;
  std::vector<VarRange> ranges;
  std::vector<const char*> filters = {};
};

const std::map<std::string, std::vector<Entry>, std::less<>>& catalog() {
  static const std::map<std::string, std::vector<Entry>, std::less<>> table{
      {"rules1",
       {
           {"Delta^-a", "Delta^-a", "1", {{"a", 1, 64, 140}}},
           {"j^a", "j^a", "1", {{"a", 1, 20, 50}}},
           {"j*Delta^-a", "j*Delta^-a", "1", {{"a", 1, 32, 100}}},
           {"j^a*Delta^-b", "j^a*Delta^-b", "1", {{"a", 1, 10, 50}, {"b", 1, 10, 50}}},
           {"G6^a*Delta^-b", "G(6)^a*Delta^-b", "1", {{"a", 1, 10, 50}, {"b", 1, 10, 50}}},
           {"G4^a*G6^b*Delta^-c", "G(4)^a*G(6)^b*Delta^-c", "1",
            {{"a", 1, 6, 50}, {"b", 0, 3, 11}, {"c", 1, 6, 50}}},
           {"G10^a*Delta^-b", "G(10)^a*Delta^-b", "1", {{"a", 1, 8, 50}, {"b", 1, 8, 50}}},
           {"G14^a*Delta^-b", "G(14)^a*Delta^-b", "1", {{"a", 1, 8, 50}, {"b", 1, 8, 50}}},
           {"G2a*Delta^-b (a<=7)", "G(2a)*Delta^-b", "1", {{"a", 1, 7, 7}, {"b", 1, 32, 140}}},
           {"G2a*Delta^-b (a>=8)", "G(2a)*Delta^-b", "1", {{"a", 8, 24, 24}, {"b", 1, 10, 50}}},
           {"G2a^-1*Delta^-b", "G(2a)^-1*Delta^-b", "1", {{"a", 1, 18, 18}, {"b", 1, 10, 50}}},
           {"S(1,1)^-a", "S(1,1)^-a", "1", {{"a", 1, 16, 50}}},
           {"S(n,2)^-a", "S(n,2)^-a", "1", {{"a", 1, 16, 50}, {"n", 1, 2, 2}}},
           {"S(n,3)^-a", "S(n,3)^-a", "1", {{"a", 1, 16, 50}, {"n", 1, 3, 3}}},
           {"S(n,4)^-a", "S(n,4)^-a", "1", {{"a", 1, 16, 50}, {"n", 1, 4, 4}}},
           {"G10^a*S(1,2)^-b", "G(10)^a*S(1,2)^-b", "1", {{"a", 1, 8, 50}, {"b", 1, 8, 50}}},
           {"G14^a*S(1,2)^-b", "G(14)^a*S(1,2)^-b", "1", {{"a", 1, 8, 50}, {"b", 1, 8, 50}}},
           {"G4^a*G6^b*S(1,2)^-c", "G(4)^a*G(6)^b*S(1,2)^-c", "1",
            {{"a", 1, 5, 50}, {"b", 1, 5, 5}, {"c", 1, 5, 50}}},
       }},
      {"rules2",
       {
           {"Egamma2*E04*Einf4^-a", "Egamma2*E04*Einf4^-a", "2", {{"a", 1, 32, 100}}},
           {"Egamma2^2*E04*Einf4^-a", "Egamma2^2*E04*Einf4^-a", "2", {{"a", 1, 32, 100}}},
           {"j2^a", "j2^a", "2", {{"a", 1, 32, 100}}},
           {"phi2^-a", "phi(2)^-a", "2", {{"a", 1, 32, 100}}},
           {"G2a*Einf4^-b", "G(2a)*Einf4^-b", "2", {{"a", 0, 24, 24}, {"b", 1, 32, 50}}},
           {"G2a^-1*Einf4^-b", "G(2a)^-1*Einf4^-b", "2", {{"a", 1, 11, 11}, {"b", 1, 32, 50}}},
           {"G4^a*Einf4^-b", "G(4)^a*Einf4^-b", "2", {{"a", 1, 32, 50}, {"b", 1, 32, 50}}},
           {"G6^a*Einf4^-b", "G(6)^a*Einf4^-b", "2", {{"a", 1, 32, 50}, {"b", 1, 32, 50}}},
           {"G4^a*G6*Einf4^-b", "G(4)^a*G(6)*Einf4^-b", "2", {{"a", 1, 32, 50}, {"b", 1, 32, 50}}},
           {"G10^a*Einf4^-b", "G(10)^a*Einf4^-b", "2", {{"a", 1, 32, 50}, {"b", 1, 32, 50}}},
           {"Egamma2^a*Einf4^-b", "Egamma2^a*Einf4^-b", "2", {{"a", 1, 32, 50}, {"b", 1, 32, 50}}},
           {"Egamma2^a*Delta^-b", "Egamma2^a*Delta^-b", "2", {{"a", 1, 32, 50}, {"b", 1, 32, 50}}},
           {"E04^a*Einf4^-b", "E04^a*Einf4^-b", "2", {{"a", 1, 32, 50}, {"b", 1, 32, 50}}},
           {"Delta2^-a", "Delta2^-a", "2", {{"a", 1, 32, 100}}},
           {"Einf4^-a", "Einf4^-a", "2", {{"a", 1, 32, 51}}},
           {"E(2,inf,k)^-a, k=2 mod 4", "E(2,inf,k)^-a", "2", {{"a", 1, 24, 51}, {"k", 6, 22, 22, 4}}},
           {"E(2,inf,k)^-a, k=0 mod 4, a even", "E(2,inf,k)^-a", "2", {{"a", 2, 24, 50}, {"k", 8, 24, 24, 4}},
            {"a even"}},
       }},
      {"rules3",
       {
           {"phi3^-a", "phi(3)^-a", "3", {{"a", 1, 32, 100}}},
           {"G10^-a*phi3^-b", "G(10)^-a*phi(3)^-b", "3", {{"a", 1, 10, 50}, {"b", 1, 10, 50}}},
           {"Phi3^-a", "Phi(3)^-a", "3", {{"a", 1, 32, 50}}},
           {"G2a*Phi3^-b", "G(2a)*Phi(3)^-b", "3", {{"a", 1, 24, 24}, {"b", 1, 10, 50}}},
           {"G4^a*Phi3^-b", "G(4)^a*Phi(3)^-b", "3", {{"a", 1, 10, 50}, {"b", 1, 10, 50}}},
           {"G10^a*Phi3^-b", "G(10)^a*Phi(3)^-b", "3", {{"a", 1, 10, 50}, {"b", 1, 10, 50}}},
           {"E(3,inf,6)^-a, a=0 mod 3", "E(3,inf,6)^-a", "3", {{"a", 3, 24, 98}}, {"a mod 3 = 0"}},
           {"E(3,inf,k)^-a, k=0 mod 6, a=0 mod 3", "E(3,inf,k)^-a", "3", {{"a", 3, 24, 48}, {"k", 12, 24, 24, 6}},
            {"a mod 3 = 0"}},
           {"E(3,inf,k)^-a, k=2 mod 6, a=0,2 mod 3", "E(3,inf,k)^-a", "3", {{"a", 2, 24, 98}, {"k", 8, 20, 20, 6}},
            {"a mod 3 = 0,2"}},
           {"E(3,inf,k)^-a, k=2 mod 6, a=1 mod 3, L=2", "E(3,inf,k)^-a", "3",
            {{"a", 1, 24, 97}, {"k", 8, 20, 20, 6}}, {"a mod 3 = 1", "L(a) = 2"}},
           {"E(3,inf,k)^-a, k=4 mod 6", "E(3,inf,k)^-a", "3", {{"a", 1, 24, 98}, {"k", 4, 22, 22, 6}}},
       }},
      {"deviations",
       {
           {"E(2,inf,k)^-a, a odd", "E(2,inf,k)^-a", "deviation", {{"a", 1, 24, 51}, {"k", 8, 24, 24, 4}},
            {"a odd"}},
           {"E(3,inf,k)^-a, a=1 mod 3", "E(3,inf,k)^-a", "deviation", {{"a", 1, 24, 49}, {"k", 12, 24, 24, 6}},
            {"a mod 3 = 1"}},
           {"E(3,inf,k)^-a, a=2 mod 3", "E(3,inf,k)^-a", "deviation", {{"a", 2, 24, 47}, {"k", 12, 24, 24, 6}},
            {"a mod 3 = 2"}},
           {"E(3,inf,k)^-a, a=1 mod 3, L=1", "E(3,inf,k)^-a", "deviation",
            {{"a", 1, 24, 94}, {"k", 8, 20, 20, 6}}, {"a mod 3 = 1", "L(a) = 1"}},
       }},
  };
  return table;
}

}  // namespace

std::vector<std::string> builtin_survey_names() {
  std::vector<std::string> names;
  for (const auto& [name, entries] : catalog()) names.push_back(name);
  return names;
}

std::string builtin_survey_json(std::string_view name, bool full) {
  const auto it = catalog().find(name);
  if (it == catalog().end()) throw Error("unknown built-in survey '" + std::string(name) + "'");
  nlohmann::ordered_json j;
  j["name"] = std::string(name) + (full ? "-full" : "");
  j["families"] = nlohmann::ordered_json::array();
  for (const auto& e : it->second) {
    nlohmann::ordered_json f;
    f["name"] = e.name;
    f["template"] = e.tmpl;
    f["ranges"] = nlohmann::ordered_json::object();
    for (const auto& r : e.ranges) {
      nlohmann::ordered_json span = {r.lo, full ? r.full_hi : r.desk_hi};
      if (r.step != 1) span.push_back(r.step);
      f["ranges"][r.var] = span;
    }
    if (!e.filters.empty()) f["filters"] = e.filters;
    f["rule"] = e.rule;
    j["families"].push_back(f);
  }
  return j.dump(2);
}

SurveyConfig builtin_survey(std::string_view name, bool full) {
  return SurveyConfig::from_json_text(builtin_survey_json(name, full));
}

}  // namespace qgap::survey
