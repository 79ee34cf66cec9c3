#include "prelieder/io.hpp"

#include <fstream>
#include <sstream>

namespace prelieder {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

std::string child(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string child(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

const Json& field(const Json& obj, const std::string& where, const std::string& key) {
  if (!obj.is_object()) throw ParseError(where.empty() ? "/" : where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(child(where, key), "missing field");
  return *it;
}

int read_dim(const Json& obj, const std::string& where, const std::string& key) {
  const Json& v = field(obj, where, key);
  if (!v.is_number_integer() || v.get<long>() < 0 || v.get<long>() > 64)
    throw ParseError(child(where, key), "expected a dimension between 0 and 64");
  return v.get<int>();
}

const Json& array_of(const Json& v, const std::string& where, std::size_t n) {
  if (!v.is_array()) throw ParseError(where, "expected an array");
  if (v.size() != n)
    throw ParseError(where, "expected " + std::to_string(n) + " entries, found " + std::to_string(v.size()));
  return v;
}

Vector read_vector(const Json& v, const std::string& where, std::size_t n) {
  array_of(v, where, n);
  Vector out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(parse_rational(v[i], child(where, i)));
  return out;
}

Matrix read_matrix(const Json& v, const std::string& where, std::size_t rows, std::size_t cols) {
  array_of(v, where, rows);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Vector row = read_vector(v[i], child(where, i), cols);
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = row[j];
  }
  return m;
}

std::vector<Matrix> read_matrices(const Json& v, const std::string& where, std::size_t count, std::size_t n) {
  array_of(v, where, count);
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(read_matrix(v[i], child(where, i), n, n));
  return out;
}

// product[i][j] = coordinates of e_i . e_j
PreLieAlgebra read_product(const Json& v, const std::string& where, int dim) {
  const auto n = sz(dim);
  array_of(v, where, n);
  PreLieAlgebra a(dim);
  for (std::size_t i = 0; i < n; ++i) {
    array_of(v[i], child(where, i), n);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector p = read_vector(v[i][j], child(child(where, i), j), n);
      for (std::size_t k = 0; k < n; ++k) a.set_constant(int(i), int(j), int(k), p[k]);
    }
  }
  return a;
}

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(format_rational(x));
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_rational(m(i, j)));
    out.push_back(row);
  }
  return out;
}

Json matrices_json(const std::vector<Matrix>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(matrix_json(m));
  return out;
}

Json product_json(const PreLieAlgebra& a) {
  Json out = Json::array();
  for (int i = 0; i < a.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < a.dim(); ++j) row.push_back(vector_json(a.product(i, j)));
    out.push_back(row);
  }
  return out;
}

// theta[i][j] = theta(e_i, e_j) in V
Json bilinear_json(const ComponentMap& f) {
  Json out = Json::array();
  for (int i = 0; i < f.dims().g; ++i) {
    Json row = Json::array();
    for (int j = 0; j < f.dims().g; ++j)
      row.push_back(vector_json(f.evaluate(std::vector<Arg>{Arg::of(i)}, {}, Arg::of(j))));
    out.push_back(row);
  }
  return out;
}

ComponentMap read_bilinear(const Json& v, const std::string& where, Dims dims) {
  const auto n = sz(dims.g);
  array_of(v, where, n);
  ComponentMap f({1, 0, Factor::G}, Factor::V, dims);
  for (std::size_t i = 0; i < n; ++i) {
    array_of(v[i], child(where, i), n);
    for (std::size_t j = 0; j < n; ++j)
      f.set({{int(i)}, {}, Factor::G, int(j)}, read_vector(v[i][j], child(child(where, i), j), sz(dims.v)));
  }
  return f;
}

Matrix linear_matrix(const ComponentMap& f) {
  const auto rows = sz(f.target_dim());
  const auto cols = sz(f.dims().of(f.shape().tail));
  Matrix m(rows, cols);
  for (std::size_t x = 0; x < cols; ++x) m.set_column(x, f.at({{}, {}, f.shape().tail, int(x)}));
  return m;
}

Representation read_rep(const Json& obj, const std::string& where, int dim_g, int dim_v) {
  Representation r;
  r.dim_v = dim_v;
  r.rho = read_matrices(field(obj, where, "rho"), child(where, "rho"), sz(dim_g), sz(dim_v));
  r.mu = read_matrices(field(obj, where, "mu"), child(where, "mu"), sz(dim_g), sz(dim_v));
  return r;
}

DerPair read_derpair(const Json& obj, const std::string& where) {
  const int dg = read_dim(obj, where, "dim_g");
  PreLieAlgebra a = read_product(field(obj, where, "product"), child(where, "product"), dg);
  if (obj.contains("regular") && obj["regular"].is_boolean() && obj["regular"].get<bool>()) {
    const Matrix d = read_matrix(field(obj, where, "derivation"), child(where, "derivation"), sz(dg), sz(dg));
    return regular_pair(a, d);
  }
  const int dv = read_dim(obj, where, "dim_v");
  Representation r = read_rep(obj, where, dg, dv);
  const Matrix d = read_matrix(field(obj, where, "derivation"), child(where, "derivation"), sz(dv), sz(dg));
  return DerPair{a, r, d};
}

GradedCochain read_cochain(const Json& obj, const std::string& where) {
  const Dims d{read_dim(obj, where, "dim_g"), read_dim(obj, where, "dim_v")};
  const Json& ar = field(obj, where, "arity");
  if (!ar.is_number_integer() || ar.get<int>() < 1) throw ParseError(child(where, "arity"), "expected a positive arity");
  GradedCochain f(d, ar.get<int>());
  const Json& entries = field(obj, where, "entries");
  if (!entries.is_array()) throw ParseError(child(where, "entries"), "expected an array");
  const int total = d.total();
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string at = child(child(where, "entries"), e);
    const Json& wedge = field(entries[e], at, "wedge");
    array_of(wedge, child(at, "wedge"), sz(f.arity() - 1));
    std::vector<int> idx;
    for (std::size_t k = 0; k < wedge.size(); ++k) {
      if (!wedge[k].is_number_integer() || wedge[k].get<int>() < 0 || wedge[k].get<int>() >= total)
        throw ParseError(child(child(at, "wedge"), k), "basis index out of range");
      idx.push_back(wedge[k].get<int>());
    }
    const Json& tail = field(entries[e], at, "tail");
    if (!tail.is_number_integer() || tail.get<int>() < 0 || tail.get<int>() >= total)
      throw ParseError(child(at, "tail"), "basis index out of range");
    Vector value = read_vector(field(entries[e], at, "value"), child(at, "value"), sz(total));
    auto normal = normalize_wedge(idx);
    if (!normal) throw ParseError(child(at, "wedge"), "repeated index in an alternating slot");
    if (normal->second < 0) value = Scalar(-1) * value;
    f.add({normal->first, tail.get<int>()}, value);
  }
  return f;
}

ExtensionDoc read_extension(const Json& obj, const std::string& where) {
  const int dg = read_dim(obj, where, "dim_g");
  const int dv = read_dim(obj, where, "dim_v");
  const Dims d{dg, dv};
  ExtensionDoc doc;
  const std::string rw = child(where, "representation");
  const Json& rep = field(obj, where, "representation");
  doc.rep.rep = read_rep(rep, rw, dg, dv);
  doc.rep.k = read_matrix(field(rep, rw, "k"), child(rw, "k"), sz(dv), sz(dv));
  const std::string cw = child(where, "cocycle");
  const Json& coc = field(obj, where, "cocycle");
  doc.cocycle = ExtensionCocycle::zero(d);
  doc.cocycle.theta = read_bilinear(field(coc, cw, "theta"), child(cw, "theta"), d);
  doc.cocycle.xi = linear_map(read_matrix(field(coc, cw, "xi"), child(cw, "xi"), sz(dv), sz(dg)), Factor::G,
                              Factor::V, d);
  if (obj.contains("realization")) {
    const std::string xw = child(where, "realization");
    const Json& x = obj["realization"];
    const int n = dg + dv;
    AbelianExtension ext;
    ext.total = regular_pair(read_product(field(x, xw, "product"), child(xw, "product"), n),
                             read_matrix(field(x, xw, "derivation"), child(xw, "derivation"), sz(n), sz(n)));
    ext.inject = read_matrix(field(x, xw, "inject"), child(xw, "inject"), sz(n), sz(dv));
    ext.project = read_matrix(field(x, xw, "project"), child(xw, "project"), sz(dg), sz(n));
    doc.realization = ext;
  }
  return doc;
}

}  // namespace

Scalar parse_rational(const Json& value, const std::string& where) {
  if (value.is_number_integer()) return Scalar(value.get<long>());
  if (!value.is_string()) throw ParseError(where, "expected a rational string \"p/q\" or an integer");
  try {
    return parse_scalar(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where, e.what());
  }
}

std::string format_rational(const Scalar& s) { return format_scalar(s); }

std::string document_kind(const Document& doc) {
  static const char* names[] = {"prelie", "representation", "derivation", "derpair", "cochain", "deformation", "extension"};
  return names[doc.index()];
}

Document read_document(const Json& json) {
  const std::string root;
  const Json& kind_json = field(json, root, "kind");
  if (!kind_json.is_string()) throw ParseError("/kind", "expected a string");
  const std::string kind = kind_json.get<std::string>();
  if (kind == "prelie") {
    const int n = read_dim(json, root, "dim");
    return read_product(field(json, root, "product"), "/product", n);
  }
  if (kind == "representation") {
    const int dg = read_dim(json, root, "dim_g");
    const int dv = read_dim(json, root, "dim_v");
    return RepresentationDoc{dg, read_rep(json, root, dg, dv)};
  }
  if (kind == "derivation") {
    const int dg = read_dim(json, root, "dim_g");
    const int dv = read_dim(json, root, "dim_v");
    return DerivationDoc{read_matrix(field(json, root, "matrix"), "/matrix", sz(dv), sz(dg))};
  }
  if (kind == "derpair") return read_derpair(json, root);
  if (kind == "cochain") return read_cochain(json, root);
  if (kind == "deformation") {
    const int dg = read_dim(json, root, "dim_g");
    const int dv = read_dim(json, root, "dim_v");
    DeformationDatum d;
    d.omega = read_product(field(json, root, "omega"), "/omega", dg);
    d.sigma = read_matrices(field(json, root, "sigma"), "/sigma", sz(dg), sz(dv));
    d.tau = read_matrices(field(json, root, "tau"), "/tau", sz(dg), sz(dv));
    d.dhat = read_matrix(field(json, root, "dhat"), "/dhat", sz(dv), sz(dg));
    return d;
  }
  if (kind == "extension") return read_extension(json, root);
  throw ParseError("/kind", "unknown document kind '" + kind + "'");
}

Document parse_document(std::string_view text) {
  Json json;
  try {
    json = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // byte offset -> line/column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col), "malformed JSON");
  }
  return read_document(json);
}

Json to_json(const Document& doc) {
  Json out;
  out["kind"] = document_kind(doc);
  if (const auto* a = std::get_if<PreLieAlgebra>(&doc)) {
    out["dim"] = a->dim();
    out["product"] = product_json(*a);
  } else if (const auto* r = std::get_if<RepresentationDoc>(&doc)) {
    out["dim_g"] = r->dim_g;
    out["dim_v"] = r->rep.dim_v;
    out["rho"] = matrices_json(r->rep.rho);
    out["mu"] = matrices_json(r->rep.mu);
  } else if (const auto* d = std::get_if<DerivationDoc>(&doc)) {
    out["dim_g"] = d->matrix.cols();
    out["dim_v"] = d->matrix.rows();
    out["matrix"] = matrix_json(d->matrix);
  } else if (const auto* p = std::get_if<DerPair>(&doc)) {
    out["dim_g"] = p->algebra.dim();
    out["dim_v"] = p->rep.dim_v;
    out["product"] = product_json(p->algebra);
    out["rho"] = matrices_json(p->rep.rho);
    out["mu"] = matrices_json(p->rep.mu);
    out["derivation"] = matrix_json(p->derivation);
  } else if (const auto* f = std::get_if<GradedCochain>(&doc)) {
    out["dim_g"] = f->dims().g;
    out["dim_v"] = f->dims().v;
    out["arity"] = f->arity();
    Json entries = Json::array();
    for (const auto& [idx, val] : f->entries()) {
      Json e;
      e["wedge"] = idx.wedge;
      e["tail"] = idx.tail;
      e["value"] = vector_json(val);
      entries.push_back(e);
    }
    out["entries"] = entries;
  } else if (const auto* m = std::get_if<DeformationDatum>(&doc)) {
    out["dim_g"] = m->dims().g;
    out["dim_v"] = m->dims().v;
    out["omega"] = product_json(m->omega);
    out["sigma"] = matrices_json(m->sigma);
    out["tau"] = matrices_json(m->tau);
    out["dhat"] = matrix_json(m->dhat);
  } else if (const auto* x = std::get_if<ExtensionDoc>(&doc)) {
    out["dim_g"] = x->cocycle.theta.dims().g;
    out["dim_v"] = x->rep.rep.dim_v;
    Json rep;
    rep["rho"] = matrices_json(x->rep.rep.rho);
    rep["mu"] = matrices_json(x->rep.rep.mu);
    rep["k"] = matrix_json(x->rep.k);
    out["representation"] = rep;
    Json coc;
    coc["theta"] = bilinear_json(x->cocycle.theta);
    coc["xi"] = matrix_json(linear_matrix(x->cocycle.xi));
    out["cocycle"] = coc;
    if (x->realization) {
      Json real;
      real["product"] = product_json(x->realization->total.algebra);
      real["derivation"] = matrix_json(x->realization->total.derivation);
      real["inject"] = matrix_json(x->realization->inject);
      real["project"] = matrix_json(x->realization->project);
      out["realization"] = real;
    }
  }
  return out;
}

namespace {

bool is_flat(const Json& j) {
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

void dump_into(std::string& out, const Json& j, int indent) {
  const std::string pad(sz(indent), ' '), inner(sz(indent + 2), ' ');
  if (j.is_array() && (j.empty() || is_flat(j))) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
    out += "]";
  } else if (j.is_array()) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += inner;
      dump_into(out, j[i], indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "]";
  } else if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += inner + Json(it.key()).dump() + ": ";
      dump_into(out, it.value(), indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "}";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string dump_compact(const Json& json) {
  std::string out;
  dump_into(out, json, 0);
  return out + "\n";
}

std::string emit_document(const Document& doc) { return dump_compact(to_json(doc)); }

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.where(), std::string(e.what()).substr(e.where().size() + 2));
  }
}

}  // namespace prelieder
