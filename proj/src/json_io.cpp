#include "qroot/json_io.hpp"

#include <fstream>

namespace qroot {

namespace {

Json index_tuple(const BasisIndex& m) {
  Json out = Json::array();
  for (int v : m.e) out.push_back(v);
  return out;
}

Json int_vector(const std::vector<int>& v) {
  Json out = Json::array();
  for (int x : v) out.push_back(x);
  return out;
}

std::string pair_key(unsigned j, unsigned k) {
  return std::to_string(j) + "," + std::to_string(k);
}

std::pair<unsigned, unsigned> parse_pair_key(const std::string& key) {
  auto comma = key.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("parameter key must look like \"j,k\": " + key);
  return {(unsigned)std::stoul(key.substr(0, comma)),
          (unsigned)std::stoul(key.substr(comma + 1))};
}

}  // namespace

Json to_json(const LinearOp& op) {
  Json terms = Json::array();
  for (const MonomialOp& t : op.terms()) {
    Json term;
    term["coeff"] = t.coeff.str();
    term["shift"] = int_vector(t.shift);
    term["phase"] = int_vector(t.phase);
    terms.push_back(std::move(term));
  }
  Json out;
  out["n"] = op.shape().rank();
  out["l"] = op.shape().level();
  out["terms"] = std::move(terms);
  return out;
}

Json to_json(const SparseMatrixQ& m) {
  Json entries = Json::array();
  for (const auto& [rc, v] : m.entries) {
    Json e;
    e["row"] = index_tuple(BasisIndex::from_linear(m.shape, rc.first));
    e["col"] = index_tuple(BasisIndex::from_linear(m.shape, rc.second));
    e["value"] = v.str();
    entries.push_back(std::move(e));
  }
  Json out;
  out["shape"] = Json{{"rows", m.rows}, {"cols", m.cols}};
  out["entries"] = std::move(entries);
  return out;
}

Json to_json(const SparseVector& v, const SpaceShape& shape) {
  (void)shape;
  Json terms = Json::array();
  for (const auto& [m, c] : v) {
    Json t;
    t["index"] = index_tuple(m);
    t["coeff"] = c.str();
    terms.push_back(std::move(t));
  }
  return terms;
}

Json to_json(const Subspace& s) {
  Json rows = Json::array();
  for (const auto& [pivot, row] : s.rows()) {
    Json r;
    r["pivot"] = index_tuple(pivot);
    r["terms"] = to_json(row, s.shape());
    rows.push_back(std::move(r));
  }
  Json out;
  out["dimension"] = s.dim();
  out["basis"] = std::move(rows);
  return out;
}

namespace {
Json family_to_json(const EqFamilyResult& fam) {
  Json out;
  out["pass"] = fam.pass;
  if (fam.first_failure) {
    out["first_failure"] = Json{{"i", fam.first_failure->i},
                                {"k", fam.first_failure->k},
                                {"value", fam.first_failure->value}};
  }
  return out;
}
}  // namespace

Json to_json(const SpecializationReport& rep) {
  Json out;
  out["a_chain"] = family_to_json(rep.a_chain);
  out["rb_cycle"] = family_to_json(rep.rb_cycle);
  out["t_weight"] = family_to_json(rep.t_weight);
  out["s_cycle"] = family_to_json(rep.s_cycle);
  out["derived_lambda"] = rep.derived_lambda;
  out["pass"] = rep.all_pass();
  return out;
}

Json to_json(const SuiteReport& rep) {
  Json instances = Json::array();
  for (const SuiteInstance& inst : rep.instances) {
    Json r;
    r["relation"] = inst.relation;
    r["indices"] = inst.indices;
    r["pass"] = inst.pass;
    if (inst.advisory) r["advisory"] = true;
    if (!inst.witness.empty()) r["witness"] = inst.witness;
    instances.push_back(std::move(r));
  }
  Json out;
  out["suite"] = rep.suite;
  out["params_digest"] = rep.params_digest;
  out["flag"] = rep.flag;
  out["pass"] = rep.all_pass();
  out["checked"] = rep.instances.size();
  out["failed"] = rep.failures();
  out["instances"] = std::move(instances);
  return out;
}

Json to_json(const WeightReport& rep) {
  Json weights;
  for (const auto& [w, mult] : rep.multiplicities) {
    std::string key;
    for (size_t i = 0; i < w.size(); ++i) key += (i ? "," : "") + std::to_string(w[i]);
    weights[key] = mult;
  }
  Json out;
  out["multiplicities"] = std::move(weights);
  out["total"] = rep.total;
  return out;
}

Json to_json(const DimensionReport& rep) {
  Json out;
  out["dim_closure"] = rep.dim_closure;
  if (rep.dim_pbw)
    out["dim_ordered_monomials"] = *rep.dim_pbw;
  else
    out["dim_ordered_monomials"] = nullptr;
  out["strategies_agree"] = rep.strategies_agree;
  out["weights"] = to_json(rep.weights);
  return out;
}

Json to_json(const IrreducibilityCertificate& cert) {
  Json out;
  out["params_digest"] = cert.params_digest;
  out["lambda"] = cert.lambda;
  out["flag"] = cert.flag;
  if (cert.shift) out["shift"] = index_tuple(*cert.shift);
  out["primitive_dim_V"] = cert.primitive_dim_V;
  out["primitive_dim_L"] = cert.primitive_dim_L;
  out["closure_equals_L"] = cert.closure_equals_L;
  out["dim_L"] = cert.dim_L;
  out["weights"] = to_json(cert.weights);
  out["verdict"] = cert.verdict;
  out["premises"] = cert.premises;
  return out;
}

Json params_to_json(const ParamSet& P) {
  Json out;
  out["n"] = P.n;
  out["l"] = P.l;
  Json r = Json::array(), s = Json::array();
  for (unsigned i = 1; i <= P.n; ++i) {
    r.push_back(P.r_at(i).str());
    s.push_back(P.s_at(i).str());
  }
  out["r"] = std::move(r);
  out["s"] = std::move(s);
  Json a, b;
  for (const auto& [jk, v] : P.a) a[pair_key(jk.first, jk.second)] = v.str();
  for (const auto& [jk, v] : P.b) b[pair_key(jk.first, jk.second)] = v.str();
  out["a"] = std::move(a);
  out["b"] = std::move(b);
  return out;
}

ParamSet params_from_json(const Json& j) {
  ParamSet P;
  P.n = j.at("n").get<unsigned>();
  P.l = j.at("l").get<unsigned>();
  SpaceShape shape(P.n, P.l);  // validates n and l
  const Json& r = j.at("r");
  const Json& s = j.at("s");
  if (r.size() != P.n || s.size() != P.n)
    throw std::invalid_argument("r and s must each have n entries");
  for (unsigned i = 0; i < P.n; ++i) {
    P.r.push_back(Cyclotomic::parse(r[i].get<std::string>()));
    P.s.push_back(Cyclotomic::parse(s[i].get<std::string>()));
  }
  for (const auto& [key, value] : j.at("a").items()) {
    auto [jj, kk] = parse_pair_key(key);
    if (!shape.in_range(jj, kk))
      throw std::invalid_argument("parameter index out of range: a[" + key + "]");
    P.a[{jj, kk}] = Cyclotomic::parse(value.get<std::string>());
  }
  for (const auto& [key, value] : j.at("b").items()) {
    auto [jj, kk] = parse_pair_key(key);
    if (!shape.in_range(jj, kk))
      throw std::invalid_argument("parameter index out of range: b[" + key + "]");
    P.b[{jj, kk}] = Cyclotomic::parse(value.get<std::string>());
  }
  for (const auto& [j2, k2] : shape.pairs()) {
    if (!P.a.count({j2, k2}) || !P.b.count({j2, k2}))
      throw std::invalid_argument("missing parameter at (" + pair_key(j2, k2) + ")");
    if (P.a.at({j2, k2}).is_zero() || P.b.at({j2, k2}).is_zero())
      throw std::invalid_argument("parameters must be invertible");
  }
  for (unsigned i = 0; i < P.n; ++i)
    if (P.r[i].is_zero() || P.s[i].is_zero())
      throw std::invalid_argument("parameters must be invertible");
  return P;
}

ParamSet load_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open parameter file: " + path);
  Json j = Json::parse(in);
  return params_from_json(j);
}

std::string dump_artifact(const Json& j) {
  Json wrapped;
  wrapped["format_version"] = kFormatVersion;
  for (const auto& [key, value] : j.items()) wrapped[key] = value;
  return wrapped.dump(2) + "\n";
}

void write_artifact(const std::string& path, const Json& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write artifact: " + path);
  out << dump_artifact(body);
}

}  // namespace qroot
