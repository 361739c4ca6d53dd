#include "instance.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json_util.hpp"
#include "opalg/errors.hpp"

namespace cli {

using jsonio::Json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string schema_of(const std::string& text) {
  Json j = jsonio::parse(text, "input");
  if (!j.is_object() || !j.contains("schema") || !j["schema"].is_string()) throw SchemaError("input: missing \"schema\"");
  return j["schema"].get<std::string>();
}

OperadPtr operad_by_name(const std::string& name, int arity_cap, bool strict) {
  if (name == "com") return com_operad(arity_cap);
  if (name == "ass") return ass_operad(arity_cap);
  auto loaded = load_operad(read_file(name), strict);
  return loaded.operad;
}

namespace {

Complex read_generators(const Json& arr, const RunConfig& cfg, const std::string& where,
                        std::map<std::string, int>* index) {
  if (!arr.is_array()) throw SchemaError(where + " must be an array");
  std::vector<BasisElement> b;
  for (const Json& g : arr) {
    int deg = jsonio::need_int(g, "degree", where);
    if (deg < cfg.deg_lo || deg > cfg.deg_hi)
      throw SchemaError(where + ": degree " + std::to_string(deg) + " outside the window");
    int w = g.contains("weight") ? jsonio::need_int(g, "weight", where) : 1;
    std::string label = g.contains("label") ? g["label"].get<std::string>() : "v" + std::to_string(b.size());
    if (index) {
      if (index->count(label)) throw SchemaError(where + ": duplicate label " + label);
      (*index)[label] = static_cast<int>(b.size());
    }
    b.push_back({deg, w, label});
  }
  return Complex::with_zero_differential(make_space(b));
}

// {"x": [{"coeff": "1/2", "word": ["x", "y"]}], ...} as a map V -> F_O(V).
GradedMap read_map(const Json& j, const FreeAlgebra& F, const std::map<std::string, int>& index, int degree,
                   const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + " must be an object");
  int n = F.generators.dim();
  std::vector<int> gen;
  for (int i = 0; i < n; ++i) gen.push_back(F.inclusion.column(i).begin()->first);
  std::vector<VecBuilder> cols(n);
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto at = index.find(it.key());
    if (at == index.end()) throw SchemaError(where + ": unknown generator " + it.key());
    if (!it.value().is_array()) throw SchemaError(where + ": terms must be an array");
    for (const Json& t : it.value()) {
      Rational c = parse_rational(jsonio::need(t, "coeff", where).get<std::string>());
      std::vector<int> in;
      for (const Json& l : jsonio::need(t, "word", where)) {
        auto li = index.find(l.get<std::string>());
        if (li == index.end()) throw SchemaError(where + ": unknown generator in word");
        in.push_back(gen[li->second]);
      }
      int k = static_cast<int>(in.size());
      if (k > F.algebra->operad().cap() || F.algebra->operad().dim(k) == 0)
        throw SchemaError(where + ": no operation of arity " + std::to_string(k));
      cols[at->second].add(F.algebra->mu(k, 0, in), c);
    }
  }
  std::vector<SparseVec> out;
  for (auto& b : cols) out.push_back(b.build());
  GradedMap m(F.generators.space(), F.algebra->space(), degree, std::move(out));
  // homogeneity: every term must have the stated degree
  for (int i = 0; i < n; ++i)
    for (const auto& [r, v] : m.column(i))
      if (F.algebra->space()->degree(r) != F.generators.space()->degree(i) + degree)
        throw SchemaError(where + ": term of the wrong degree for " + F.generators.space()->label(i));
  return m;
}

}  // namespace

Instance read_instance(const std::string& text, const RunConfig& cfg) {
  Json j = jsonio::parse(text, "instance");
  jsonio::check_schema(j, "opalg.instance/1");
  Instance I;
  I.name = j.contains("name") ? j["name"].get<std::string>() : "instance";
  I.operad = operad_by_name(jsonio::need(j, "operad", "instance").get<std::string>(), cfg.arity_cap, cfg.strict);
  std::map<std::string, int> index;
  Complex V = read_generators(jsonio::need(j, "generators", "instance"), cfg, "generators", &index);
  I.F = free_algebra(I.operad, V, cfg.weight_cap);
  GradedMap g(I.F.generators.space(), I.F.algebra->space(), 1);
  if (j.contains("differential")) {
    g = read_map(j["differential"], I.F, index, 1, "differential");
    I.has_g = true;
  }
  I.g = mc_element(I.F, g);
  if (j.contains("xi")) {
    if (!j["xi"].is_array()) throw SchemaError("xi must be an array of coefficients");
    for (const Json& c : j["xi"]) I.xi.push_back(read_map(c, I.F, index, 0, "xi"));
  }
  if (j.contains("module")) {
    I.module = j["module"].get<std::string>();
    if (I.module != "free" && I.module != "kahler" && I.module != "universal")
      throw SchemaError("module must be free, kahler or universal");
  }
  if (j.contains("module_generators"))
    I.module_generators = read_generators(j["module_generators"], cfg, "module_generators", nullptr);
  else
    I.module_generators = Complex::with_zero_differential(make_space({{0, 0, "w"}}));
  return I;
}

}  // namespace cli
