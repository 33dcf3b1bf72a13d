#include "qschur/json_io.hpp"

#include <limits>
#include <sstream>

namespace qschur {

json to_json(const PolyQ& p) {
  json a = json::array();
  for (const Int& c : p.coeffs()) {
    if (c > Int(std::numeric_limits<long long>::max()) ||
        c < Int(std::numeric_limits<long long>::min()))
      throw TooLarge("to_json: coefficient exceeds 64 bits");
    a.push_back(c.convert_to<long long>());
  }
  return a;
}

PolyQ polyq_from_json(const json& j) {
  std::vector<Int> c;
  for (const auto& v : j) c.emplace_back(v.get<long long>());
  return PolyQ(std::move(c));
}

json to_json(const SignedPerm& w) { return json(w.images()); }

json to_json(const Composition& c) { return json(c.parts); }

json to_json(const SignedComposition& c) {
  return json{{"parts", c.base.parts}, {"mark", std::string(1, mark_char(c.mark))}};
}

json to_json(const MatB& A) {
  json rows = json::array();
  for (int i = 1; i <= A.N(); ++i) {
    json row = json::array();
    for (int j = 1; j <= A.N(); ++j) row.push_back(A.at(i, j));
    rows.push_back(row);
  }
  return json{{"n", A.n()}, {"r", A.r()}, {"entries", rows}};
}

MatB matb_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  const int r = j.at("r").get<int>();
  std::vector<int> e;
  for (const auto& row : j.at("entries"))
    for (const auto& v : row) e.push_back(v.get<int>());
  return MatB(n, r, std::move(e));
}

json to_json(const MatD& A) {
  json j = to_json(A.base());
  j["tag"] = A.tag().str();
  return j;
}

MatD matd_from_json(const json& j) {
  MatB base = matb_from_json(j);
  const std::string tag = j.at("tag").get<std::string>();
  if (tag == "dot") return MatD::dotted(std::move(base));
  if (tag.size() != 2 || (tag[0] != '+' && tag[0] != '-') || (tag[1] != '+' && tag[1] != '-'))
    throw InvalidIndex("matd_from_json: bad tag " + tag);
  return MatD::signed_pair(std::move(base), tag[0] == '+' ? +1 : -1, tag[1] == '+' ? +1 : -1);
}

json to_json(const HeckeElt& x) {
  json terms = json::array();
  for (const auto& [id, c] : x.terms())
    terms.push_back(json::array({to_json(x.group().elems[static_cast<size_t>(id)]), to_json(c)}));
  return json{{"ambient", {{"type", x.type() == Ambient::B ? "B" : "D"}, {"r", x.rank()}}},
              {"terms", terms}};
}

json to_json(const SchurB& x) {
  json terms = json::array();
  for (const auto& [k, c] : x.terms()) terms.push_back(json::array({to_json(k), to_json(c)}));
  return json{{"ambient", {{"type", "B"}, {"n", x.n()}, {"r", x.r()}}}, {"terms", terms}};
}

json to_json(const SchurD& x) {
  json terms = json::array();
  for (const auto& [k, c] : x.terms()) terms.push_back(json::array({to_json(k), to_json(c)}));
  return json{{"ambient", {{"type", "D"}, {"n", x.n()}, {"r", x.r()}}}, {"terms", terms}};
}

json to_json(const SweepReport& rep) {
  return json{{"name", rep.name},     {"ok", rep.ok},           {"checked", rep.checked},
              {"failures", rep.failures}, {"census", rep.census}, {"seconds", rep.seconds}};
}

std::string censuses_csv(const SweepReport& rep) {
  std::ostringstream os;
  os << "key,count\n";
  for (const auto& [k, v] : rep.census) os << k << "," << v << "\n";
  return os.str();
}

}  // namespace qschur
