#include "json_util.hpp"
#include "opalg/operad.hpp"

namespace opalg {

using jsonio::Json;

namespace {

const char* kOperadSchema = "opalg.operad/1";

long long tuple_count(const Operad& O, const std::vector<int>& ar) {
  long long c = 1;
  for (int a : ar) c *= O.dim(a);
  return c;
}

}  // namespace

std::string save_operad(const Operad& O) {
  Json j;
  j["schema"] = kOperadSchema;
  j["name"] = O.name();
  j["arity_cap"] = O.cap();
  Json comps = Json::array();
  for (int n = 0; n <= O.cap(); ++n) {
    const Complex& C = O.component(n);
    Json c;
    c["arity"] = n;
    c["dims"] = jsonio::dims_to_json(*C.space());
    c["basis"] = jsonio::space_to_json(*C.space());
    if (!C.d().is_zero()) c["differential"] = jsonio::columns_to_json(C.d().columns());
    Json gens = Json::array();
    for (int i = 0; i + 1 < n; ++i) gens.push_back({{"matrix", jsonio::columns_to_json(O.generator(n, i).columns())}});
    c["generators"] = gens;
    comps.push_back(c);
  }
  j["components"] = comps;
  j["unit"] = jsonio::vec_to_json(O.unit());
  Json gam = Json::array();
  for (auto& ar : O.gamma_tuples()) {
    if (tuple_count(O, ar) == 0) continue;
    gam.push_back({{"arities", ar}, {"values", jsonio::columns_to_json(O.gamma_table(ar))}});
  }
  j["gamma"] = gam;
  return j.dump(1) + "\n";
}

LoadedOperad load_operad(const std::string& text, bool strict) {
  Json j = jsonio::parse(text, "operad definition");
  jsonio::check_schema(j, kOperadSchema);
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "operad";
  int cap = jsonio::need_int(j, "arity_cap", "operad");
  if (cap < 0) throw SchemaError("operad: arity_cap must be non-negative");
  const Json& comps = jsonio::need(j, "components", "operad");
  if (!comps.is_array() || static_cast<int>(comps.size()) != cap + 1)
    throw SchemaError("operad: expected one component per arity 0.." + std::to_string(cap));

  std::vector<Complex> components;
  // generators[n][i]: columns of the right action of s_i on O(n)
  auto gens = std::make_shared<std::vector<std::vector<std::vector<SparseVec>>>>(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    const Json& c = comps[n];
    std::string where = "operad component " + std::to_string(n);
    if (c.contains("arity") && jsonio::need_int(c, "arity", where) != n) throw SchemaError(where + ": arity out of order");
    SpacePtr sp;
    if (c.contains("basis")) {
      sp = jsonio::space_from_json(c["basis"], where, "o" + std::to_string(n) + "_");
      if (c.contains("dims") && jsonio::space_from_json(c["dims"], where)->dims() != sp->dims())
        throw SchemaError(where + ": dims disagree with basis");
    } else {
      sp = jsonio::space_from_json(jsonio::need(c, "dims", where), where, "o" + std::to_string(n) + "_");
    }
    int dim = sp->dim();
    GradedMap d(sp, sp, 1);
    if (c.contains("differential")) {
      try {
        d = GradedMap(sp, sp, 1, jsonio::columns_from_json(c["differential"], dim, dim, where + " differential"));
      } catch (const DimensionError& e) {
        throw SchemaError(where + ": differential not of degree +1: " + e.what());
      }
    }
    try {
      components.emplace_back(sp, d);
    } catch (const Error& e) {
      throw SchemaError(where + ": " + e.what());
    }
    int want = n >= 2 ? n - 1 : 0;
    const Json empty = Json::array();
    const Json& g = c.contains("generators") ? c["generators"] : empty;
    if (!g.is_array() || static_cast<int>(g.size()) != want)
      throw SchemaError(where + ": expected " + std::to_string(want) + " generator actions");
    for (int i = 0; i < want; ++i) {
      std::string gw = where + " generator " + std::to_string(i);
      std::vector<SparseVec> cols;
      if (g[i].contains("perm")) {
        const Json& p = g[i]["perm"];
        if (!p.is_array() || static_cast<int>(p.size()) != dim) throw SchemaError(gw + ": perm has wrong length");
        std::vector<char> seen(dim, 0);
        for (auto& x : p) {
          if (!x.is_number_integer() || x.get<int>() < 0 || x.get<int>() >= dim || seen[x.get<int>()])
            throw SchemaError(gw + ": perm is not a bijection");
          seen[x.get<int>()] = 1;
          cols.push_back(SparseVec::unit(x.get<int>()));
        }
      } else {
        cols = jsonio::columns_from_json(jsonio::need(g[i], "matrix", gw), dim, dim, gw);
      }
      try {
        GradedMap(sp, sp, 0, cols);
      } catch (const DimensionError& e) {
        throw SchemaError(gw + ": action not of degree 0");
      }
      (*gens)[n].push_back(std::move(cols));
    }
  }

  SparseVec unit;
  if (cap >= 1) unit = jsonio::vec_from_json(jsonio::need(j, "unit", "operad"), components[1].dim(), "operad unit");

  auto table = std::make_shared<std::map<std::vector<int>, std::vector<SparseVec>>>();
  const Json& gam = jsonio::need(j, "gamma", "operad");
  if (!gam.is_array()) throw SchemaError("operad: gamma must be a list");
  auto dim_of = [&](int a) { return components[a].dim(); };
  for (auto& e : gam) {
    const Json& arj = jsonio::need(e, "arities", "operad gamma");
    if (!arj.is_array() || arj.empty()) throw SchemaError("operad gamma: bad arities");
    std::vector<int> ar;
    for (auto& x : arj) {
      if (!x.is_number_integer()) throw SchemaError("operad gamma: bad arities");
      ar.push_back(x.get<int>());
    }
    std::string where = "operad gamma (" + join_ints(ar) + ")";
    int n = ar[0], m = 0;
    if (n < 0 || n > cap || static_cast<int>(ar.size()) != n + 1) throw SchemaError(where + ": not composable");
    for (int i = 1; i <= n; ++i) {
      if (ar[i] < 0) throw SchemaError(where + ": negative arity");
      m += ar[i];
    }
    if (m > cap) throw SchemaError(where + ": output arity above cap");
    if (table->count(ar)) throw SchemaError(where + ": duplicate");
    long long count = 1;
    std::vector<int> dims;
    for (int a : ar) {
      dims.push_back(dim_of(a));
      count *= dim_of(a);
    }
    auto vals = jsonio::columns_from_json(jsonio::need(e, "values", where), static_cast<int>(count), dim_of(m), where);
    // γ has degree 0
    for (long long k = 0; k < count; ++k) {
      long long rem = k;
      int deg = 0;
      for (int i = n; i >= 0; --i) {
        deg += components[ar[i]].space()->degree(static_cast<int>(rem % dims[i]));
        rem /= dims[i];
      }
      for (auto& [idx, c] : vals[k])
        if (components[m].space()->degree(idx) != deg) throw SchemaError(where + ": value not of degree 0");
    }
    table->emplace(ar, std::move(vals));
  }

  auto comps_copy = std::make_shared<std::vector<Complex>>(components);
  Operad::GammaFn gamma = [table, comps_copy](const std::vector<int>& ar, const std::vector<int>& b) {
    auto it = table->find(ar);
    if (it == table->end()) {
      for (int a : ar)
        if ((*comps_copy)[a].dim() == 0) return SparseVec();
      throw SchemaError("operad: no gamma values for (" + join_ints(ar) + ")");
    }
    long long k = 0;
    for (size_t i = 0; i < ar.size(); ++i) k = k * (*comps_copy)[ar[i]].dim() + b[i];
    return it->second[k];
  };
  Operad::ActionFn action = [gens](const Permutation& s, int b) {
    SparseVec v = SparseVec::unit(b);
    const auto& g = (*gens)[s.size()];
    for (int i : s.adjacent_word()) {
      SparseVec w;
      for (auto& [idx, c] : v) w.add_scaled(g[i][idx], c);
      v = std::move(w);
    }
    return v;
  };
  OperadPtr O;
  try {
    O = std::make_shared<Operad>(name, components, gamma, unit, action);
  } catch (const DimensionError& e) {
    throw SchemaError(std::string("operad: ") + e.what());
  }
  for (auto& ar : O->gamma_tuples()) {
    if (table->count(ar)) continue;
    if (tuple_count(*O, ar) != 0) throw SchemaError("operad: missing gamma values for (" + join_ints(ar) + ")");
  }
  LoadedOperad out{O, check_operad(*O)};
  if (strict && !out.report.ok()) throw AxiomError("operad " + name + ": " + out.report.summary());
  return out;
}

}  // namespace opalg
