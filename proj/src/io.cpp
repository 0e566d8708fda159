#include "nullstrata/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace nullstrata {

namespace {

constexpr const char* kMemoHeader = "# nullstrata memo v1";

}  // namespace

Json to_json(const Integer& z) {
  if (z >= std::numeric_limits<long long>::min() && z <= std::numeric_limits<long long>::max())
    return Json(z.convert_to<long long>());
  return Json(z.str());
}

Json to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

Json rational_list(const RVec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i].str());
  return out;
}

Json integer_list(const ZVec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v[i]));
  return out;
}

Json to_json(const RootDatum& d) {
  Json j;
  j["type"] = d.type().to_string();
  j["rank"] = d.rank();
  j["dim"] = d.dimension();
  j["lattice"] = d.lattice_kind() == CocharacterLattice::Adjoint ? "adjoint" : "simply-connected";
  Json gram = Json::array();
  for (Eigen::Index i = 0; i < d.gram().rows(); ++i) gram.push_back(rational_list(RVec(d.gram().row(i).transpose())));
  j["gram"] = gram;
  Json basis = Json::array();
  for (Eigen::Index c = 0; c < d.cochar_basis().cols(); ++c) basis.push_back(rational_list(RVec(d.cochar_basis().col(c))));
  j["cochar_basis"] = basis;
  j["positive_roots"] = d.positive_count();
  Json roots = Json::array();
  for (const auto& r : d.roots()) roots.push_back(integer_list(r));
  j["roots"] = roots;
  j["simple_roots"] = d.simple_roots();
  j["degrees"] = reflection_degrees(d.type());
  return j;
}

Json to_json(const ModuleCharacter& ch) {
  Json j;
  j["dim"] = ch.dim();
  Json weights = Json::array();
  for (const auto& w : ch.weights()) {
    Json e;
    e["weight"] = rational_list(ch.datum()->character_coordinates(w.weight));
    e["mult"] = w.mult;
    weights.push_back(e);
  }
  j["weights"] = weights;
  return j;
}

Json to_json(const Stratum& s, const RootDatum& d) {
  Json j;
  j["lambda"] = integer_list(s.lambda_coords);
  j["k"] = s.k;
  j["blade"] = rational_list(d.cochar_coordinates(s.blade));
  j["dim"] = s.dim_stratum;
  j["n"] = s.n;
  j["N"] = s.N;
  j["dim_P"] = s.dim_P;
  j["levi"] = s.levi.to_string();
  j["norm2"] = s.norm2.str();
  j["f"] = to_json(s.f);
  j["sub"] = to_json(s.sub_poly);
  j["contribution"] = to_json(s.contribution);
  return j;
}

Json to_json(const CountReport& r, const std::vector<CheckResult>& checks) {
  Json j;
  j["type"] = r.type;
  j["module"] = r.module;
  j["dim"] = r.character.dim();
  j["n"] = to_json(r.n);
  j["n_prime"] = to_json(r.n_prime);
  Json strata = Json::array();
  for (const auto& s : r.strata) strata.push_back(to_json(s, *r.character.datum()));
  j["strata"] = strata;
  Json c;
  c["n_at_1"] = r.n_at_1_ok;
  c["degree"] = r.degree_ok;
  c["n_prime_nonnegative"] = r.nonneg_conjecture_holds;
  for (const auto& chk : checks) c[chk.name] = chk.pass;
  j["checks"] = c;
  return j;
}

Json to_json(const UnipotentReport& r, const RootDatum& d) {
  Json j;
  j["type"] = r.type;
  j["total"] = to_json(r.total);
  j["steinberg"] = r.steinberg_ok;
  Json pieces = Json::array();
  for (const auto& p : r.pieces) {
    Json e;
    e["lambda"] = integer_list(p.lambda_coords);
    e["k"] = p.k;
    e["blade"] = rational_list(d.cochar_coordinates(p.blade));
    e["dim"] = p.dim;
    e["count"] = to_json(p.count);
    pieces.push_back(e);
  }
  j["pieces"] = pieces;
  return j;
}

Json to_json(const FFCount& c) {
  Json j;
  j["q"] = c.q;
  j["total"] = to_json(c.total);
  Json by = Json::object();
  for (const auto& [k, v] : c.by_class) by[k] = to_json(v);
  j["by_class"] = by;
  return j;
}

ModuleCharacter character_from_json(const Json& j, const DatumPtr& datum) {
  std::vector<WeightEntry> weights;
  for (const auto& e : j.at("weights")) {
    std::vector<Rational> coords;
    for (const auto& c : e.at("weight")) coords.push_back(c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>()));
    if (static_cast<int>(coords.size()) != datum->rank()) throw InputError("weight with the wrong number of coordinates");
    weights.push_back({weight_from_coordinates(*datum, coords), e.at("mult").get<long>()});
  }
  return ModuleCharacter(datum, std::move(weights));
}

std::map<std::string, IntPolynomial> load_memo_file(const std::string& path) {
  std::map<std::string, IntPolynomial> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  if (!std::getline(in, line) || line != kMemoHeader) return out;  // other versions are ignored
  while (std::getline(in, line)) {
    const auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    std::vector<Integer> coeffs;
    std::stringstream ss(line.substr(tab + 1));
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) coeffs.emplace_back(tok);
    out.emplace(line.substr(0, tab), IntPolynomial(std::move(coeffs)));
  }
  return out;
}

void save_memo_file(const std::string& path, const std::map<std::string, IntPolynomial>& memo) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw InputError("cannot write memo file " + path);
    out << kMemoHeader << '\n';
    for (const auto& [k, p] : memo) {
      out << k << '\t';
      for (std::size_t i = 0; i < p.coefficients().size(); ++i) out << (i ? "," : "") << p.coefficients()[i];
      out << '\n';
    }
  }
  std::rename(tmp.c_str(), path.c_str());
}

}  // namespace nullstrata
