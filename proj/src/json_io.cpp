#include "smashprime/json_io.hpp"

#include <fstream>

#include "smashprime/catalog.hpp"

namespace smashprime {

using nlohmann::json;

namespace {

std::size_t get_index(const json& j, const char* key, std::size_t bound, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw_input(where + ": missing or invalid index '" + std::string(key) + "'");
  long long raw = j.at(key).get<long long>();
  if (raw < 0 || static_cast<std::size_t>(raw) >= bound)
    throw_input(where + ": index '" + std::string(key) + "' = " + std::to_string(raw) +
                " out of range (dim " + std::to_string(bound) + ")");
  return static_cast<std::size_t>(raw);
}

Scalar get_scalar(const json& j, FieldSpec f, const std::string& where) {
  if (!j.is_string()) throw_input(where + ": scalar values must be exact strings");
  return Scalar::parse(f, j.get<std::string>());
}

Vec vec_from_json(const json& j, FieldSpec f, std::size_t len, const std::string& where) {
  if (!j.is_array() || j.size() != len)
    throw_input(where + ": expected an array of " + std::to_string(len) + " scalars");
  Vec v;
  v.reserve(len);
  for (const auto& e : j) v.push_back(get_scalar(e, f, where));
  return v;
}

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(s.str());
  return a;
}

}  // namespace

FieldSpec field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw_input("field: expected {\"kind\": ...}");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") return FieldSpec::rationals();
  if (kind == "prime") {
    if (!j.contains("p")) throw_input("field: prime kind requires \"p\"");
    return FieldSpec::prime(j.at("p").get<std::uint32_t>());
  }
  throw_input("field: unknown kind '" + kind + "'");
}

json field_to_json(FieldSpec f) {
  if (f.kind == FieldSpec::Kind::rational) return json{{"kind", "rational"}};
  return json{{"kind", "prime"}, {"p", f.p}};
}

Algebra algebra_from_json(const json& j) {
  if (!j.is_object()) throw_input("algebra: expected a JSON object");
  FieldSpec f = field_from_json(j.at("field"));
  if (!j.contains("dim")) throw_input("algebra: missing \"dim\"");
  std::size_t n = j.at("dim").get<std::size_t>();
  if (n == 0) throw_input("algebra: dim must be positive");
  Vec unit = vec_from_json(j.at("unit"), f, n, "algebra.unit");
  std::vector<std::string> labels;
  if (j.contains("labels"))
    for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
  std::vector<Vec> mult(n * n, zero_vec(f, n));
  if (j.contains("mult")) {
    for (const auto& entry : j.at("mult")) {
      std::size_t i = get_index(entry, "i", n, "algebra.mult");
      std::size_t jj = get_index(entry, "j", n, "algebra.mult");
      for (const auto& term : entry.at("terms")) {
        std::size_t k = get_index(term, "k", n, "algebra.mult.terms");
        mult[i * n + jj][k] += get_scalar(term.at("c"), f, "algebra.mult.terms.c");
      }
    }
  }
  return Algebra(f, n, std::move(mult), std::move(unit), std::move(labels));
}

json algebra_to_json(const Algebra& a) {
  json j;
  j["field"] = field_to_json(a.field());
  j["dim"] = a.dim();
  j["unit"] = vec_to_json(a.unit());
  if (!a.labels().empty()) j["labels"] = a.labels();
  json mult = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t jj = 0; jj < a.dim(); ++jj) {
      const Vec& p = a.basis_product(i, jj);
      json terms = json::array();
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (!p[k].is_zero()) terms.push_back({{"k", k}, {"c", p[k].str()}});
      if (!terms.empty()) mult.push_back({{"i", i}, {"j", jj}, {"terms", terms}});
    }
  j["mult"] = mult;
  return j;
}

HopfAlgebra hopf_from_json(const json& j) {
  Algebra alg = algebra_from_json(j);
  const std::size_t n = alg.dim();
  const FieldSpec f = alg.field();
  Coalgebra co;
  co.dim = n;
  co.comult.assign(n, zero_vec(f, n * n));
  if (!j.contains("comult")) throw_input("hopf: missing \"comult\"");
  for (const auto& entry : j.at("comult")) {
    std::size_t i = get_index(entry, "i", n, "hopf.comult");
    for (const auto& term : entry.at("terms")) {
      std::size_t p = get_index(term, "j", n, "hopf.comult.terms");
      std::size_t q = get_index(term, "k", n, "hopf.comult.terms");
      co.comult[i][p * n + q] += get_scalar(term.at("c"), f, "hopf.comult.terms.c");
    }
  }
  co.counit = vec_from_json(j.at("counit"), f, n, "hopf.counit");
  std::optional<Matrix> antipode;
  if (j.contains("antipode")) {
    const auto& rows = j.at("antipode");
    if (!rows.is_array() || rows.size() != n) throw_input("hopf.antipode: expected " + std::to_string(n) + " rows");
    Matrix s(f, n, n);
    for (std::size_t r = 0; r < n; ++r) {
      Vec row = vec_from_json(rows[r], f, n, "hopf.antipode");
      for (std::size_t c = 0; c < n; ++c) s.at(r, c) = row[c];
    }
    antipode = std::move(s);
  }
  return make_hopf(std::move(alg), std::move(co), std::move(antipode));
}

json hopf_to_json(const HopfAlgebra& h) {
  json j = algebra_to_json(h.algebra);
  const std::size_t n = h.dim();
  json comult = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json terms = json::array();
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        const Scalar& c = h.coalgebra.comult[i][p * n + q];
        if (!c.is_zero()) terms.push_back({{"j", p}, {"k", q}, {"c", c.str()}});
      }
    if (!terms.empty()) comult.push_back({{"i", i}, {"terms", terms}});
  }
  j["comult"] = comult;
  j["counit"] = vec_to_json(h.coalgebra.counit);
  json anti = json::array();
  for (std::size_t r = 0; r < n; ++r) anti.push_back(vec_to_json(h.antipode.row(r)));
  j["antipode"] = anti;
  return j;
}

namespace {

std::string strip_kind_prefix(const std::string& name) {
  auto pos = name.find(':');
  if (pos == std::string::npos) return name;
  std::string kind = name.substr(0, pos);
  if (kind == "group" || kind == "dual" || kind == "hopf" || kind == "ma") return name.substr(pos + 1);
  return name;
}

}  // namespace

HModuleAlgebra module_algebra_from_json(const json& j) {
  if (!j.is_object()) throw_input("module algebra: expected a JSON object");
  if (j.contains("action") && j.contains("hopf") && j.contains("algebra")) {
    HopfAlgebra h = j.at("hopf").is_string()
                        ? catalog_hopf(strip_kind_prefix(j.at("hopf").get<std::string>()))
                        : hopf_from_json(j.at("hopf"));
    Algebra a = j.at("algebra").is_string()
                    ? catalog_hopf(strip_kind_prefix(j.at("algebra").get<std::string>())).algebra
                    : algebra_from_json(j.at("algebra"));
    const std::size_t m = h.dim(), n = a.dim();
    const FieldSpec f = a.field();
    std::vector<Matrix> rho(m, Matrix(f, n, n));
    for (const auto& entry : j.at("action")) {
      std::size_t hj = get_index(entry, "h", m, "module_algebra.action");
      std::size_t ai = get_index(entry, "a", n, "module_algebra.action");
      for (const auto& term : entry.at("out")) {
        std::size_t k = get_index(term, "k", n, "module_algebra.action.out");
        rho[hj].at(k, ai) += get_scalar(term.at("c"), f, "module_algebra.action.out.c");
      }
    }
    HModuleAlgebra ma{std::move(h), std::move(a), std::move(rho)};
    CheckReport rep = verify_module_algebra(ma);
    if (!rep.ok()) throw_input("module algebra fails verification: " + rep.summary());
    return ma;
  }
  throw_input("module algebra: expected keys \"hopf\", \"algebra\", \"action\"");
}

json module_algebra_to_json(const HModuleAlgebra& ma) {
  json j;
  j["hopf"] = hopf_to_json(ma.hopf);
  j["algebra"] = algebra_to_json(ma.algebra);
  json action = json::array();
  const std::size_t n = ma.alg_dim();
  for (std::size_t hj = 0; hj < ma.hopf_dim(); ++hj)
    for (std::size_t ai = 0; ai < n; ++ai) {
      json out = json::array();
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = ma.action[hj].at(k, ai);
        if (!c.is_zero()) out.push_back({{"k", k}, {"c", c.str()}});
      }
      if (!out.empty()) action.push_back({{"h", hj}, {"a", ai}, {"out", out}});
    }
  j["action"] = action;
  return j;
}

TensorElement tensor2_from_json(const json& j, std::size_t dim, FieldSpec f, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) throw_input("twist: expected key \"" + key + "\"");
  TensorElement t{2, zero_vec(f, dim * dim)};
  for (const auto& entry : j.at(key)) {
    std::size_t i = get_index(entry, "i", dim, key);
    std::size_t jj = get_index(entry, "j", dim, key);
    t.coeffs[i * dim + jj] += get_scalar(entry.at("c"), f, key + ".c");
  }
  return t;
}

json tensor2_to_json(const TensorElement& t, std::size_t dim, const std::string& key) {
  json arr = json::array();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t jj = 0; jj < dim; ++jj) {
      const Scalar& c = t.coeffs[i * dim + jj];
      if (!c.is_zero()) arr.push_back({{"i", i}, {"j", jj}, {"c", c.str()}});
    }
  return json{{key, arr}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw_input("cannot open file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw_input("JSON parse error in '" + path + "': " + e.what());
  }
}

}  // namespace smashprime
