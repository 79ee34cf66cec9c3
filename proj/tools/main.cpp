#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prelieder/cohomology.hpp"
#include "prelieder/deformation.hpp"
#include "prelieder/extension.hpp"
#include "prelieder/io.hpp"
#include "prelieder/linfty.hpp"
#include "prelieder/mn_bracket.hpp"

using namespace prelieder;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;

struct Report {
  std::string command;
  Json body = Json::object();
  std::vector<std::string> lines;
  bool ok = true;
};

int finish(const Report& r, bool json) {
  if (json) {
    Json out;
    out["command"] = r.command;
    out["ok"] = r.ok;
    for (auto it = r.body.begin(); it != r.body.end(); ++it) out[it.key()] = it.value();
    std::cout << dump_compact(out);
  } else {
    for (const auto& line : r.lines) std::cout << line << "\n";
    std::cout << "result: " << (r.ok ? "true" : "false") << "\n";
  }
  return r.ok ? kTrue : kFalse;
}

template <class T>
T load_as(const std::string& path, const char* expected) {
  Document doc = load_document(path);
  if (auto* v = std::get_if<T>(&doc)) return std::move(*v);
  throw ParseError(path + ": /kind", std::string("expected a ") + expected + " document, found " + document_kind(doc));
}

// Adds one line per tag, in the given order.
void add_checks(Report& r, const std::vector<std::string>& tags, const Validation& v) {
  Json checks = Json::array();
  for (const auto& tag : tags) {
    const bool holds = std::find(v.failed.begin(), v.failed.end(), tag) == v.failed.end();
    checks.push_back(Json{{"tag", tag}, {"holds", holds}});
    r.lines.push_back(tag + ": " + (holds ? "holds" : "FAILS"));
    r.ok = r.ok && holds;
  }
  Json& all = r.body["checks"];
  if (all.is_null()) all = Json::array();
  for (auto& c : checks) all.push_back(c);
}

void add_flag(Report& r, const std::string& tag, bool holds) {
  add_checks(r, {tag}, holds ? Validation{} : Validation{{tag}});
}

const std::vector<std::string> kRepTags = {"representation-1", "representation-2"};
const std::vector<std::string> kPairTags = {"pre-lie", "representation-1", "representation-2", "derivation"};
const std::vector<std::string> kDeformTags = {"deformation-1", "deformation-2", "deformation-3", "deformation-4"};
const std::vector<std::string> kPairRepTags = {"representation-1", "representation-2", "extension-rep-1",
                                               "extension-rep-2"};
const std::vector<std::string> kExtensionTags = {"regular-pair", "short-exact", "abelian", "inclusion-morphism",
                                                 "projection-morphism"};

bool rep_cocycle(const DerPair& base, const ExtensionDoc& e) {
  return huaD_rep(e.cocycle.as_cochain(), base, e.rep).theta.is_zero() &&
         huaD_rep(e.cocycle.as_cochain(), base, e.rep).f.is_zero();
}

bool deformation_is_cocycle(const DerPair& base, const DeformationDatum& d) {
  const DerPairCochain b = huaD(deformation_cochain(d), base);
  return b == DerPairCochain::zero(b.degree(), base.dims());
}

std::string matrix_text(const Matrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? "; " : "";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? " " : "") + format_rational(m(i, j));
  }
  return out + "]";
}

Json matrix_json(const Matrix& m) { return to_json(DerivationDoc{m})["matrix"]; }

void add_document(Report& r, const std::string& key, const Document& doc) {
  r.body[key] = to_json(doc);
  std::string text = emit_document(doc);
  text.pop_back();
  r.lines.push_back(key + ":");
  r.lines.push_back(text);
}

// --- subcommands ------------------------------------------------------------

Report validate(const std::string& file, const std::string& base_file) {
  Report r{"validate"};
  const Document doc = load_document(file);
  r.body["kind"] = document_kind(doc);
  r.lines.push_back("kind: " + document_kind(doc));
  auto need_base = [&]() {
    if (base_file.empty()) throw ParseError(file, "validating a " + document_kind(doc) + " needs --base <derpair>");
    return load_as<DerPair>(base_file, "derpair");
  };
  if (const auto* a = std::get_if<PreLieAlgebra>(&doc)) {
    add_flag(r, "pre-lie", is_prelie(*a));
  } else if (const auto* p = std::get_if<DerPair>(&doc)) {
    add_checks(r, kPairTags, check_derpair(*p));
    r.body["regular"] = is_regular(*p);
    r.lines.push_back(std::string("regular: ") + (is_regular(*p) ? "yes" : "no"));
  } else if (const auto* rep = std::get_if<RepresentationDoc>(&doc)) {
    DerPair base = need_base();
    add_flag(r, "pre-lie", is_prelie(base.algebra));
    add_checks(r, kRepTags, check_representation(base.algebra, rep->rep));
  } else if (const auto* der = std::get_if<DerivationDoc>(&doc)) {
    DerPair base = need_base();
    base.derivation = der->matrix;
    add_checks(r, kPairTags, check_derpair(base));
  } else if (const auto* f = std::get_if<GradedCochain>(&doc)) {
    const auto b = bidegree_of(*f);
    r.body["degree"] = f->degree();
    r.lines.push_back("degree: " + std::to_string(f->degree()));
    if (b) {
      r.body["bidegree"] = Json::array({b->k, b->l});
      r.lines.push_back("bidegree: " + std::to_string(b->k) + "|" + std::to_string(b->l));
    } else {
      r.body["bidegree"] = nullptr;
      r.lines.push_back("bidegree: inhomogeneous");
    }
  } else if (const auto* d = std::get_if<DeformationDatum>(&doc)) {
    const DerPair base = need_base();
    add_checks(r, kDeformTags, check_infinitesimal_deformation(base, *d));
  } else if (const auto* e = std::get_if<ExtensionDoc>(&doc)) {
    const DerPair base = need_base();
    add_checks(r, kPairRepTags, check_derpair_representation(base, e->rep));
    if (r.ok) add_flag(r, "cocycle", rep_cocycle(base, *e));
    if (e->realization) add_checks(r, kExtensionTags, check_extension(*e->realization, base, e->rep.k));
  }
  return r;
}

Report bracket(const std::string& f_file, const std::string& g_file) {
  Report r{"bracket"};
  const auto f = load_as<GradedCochain>(f_file, "cochain");
  const auto g = load_as<GradedCochain>(g_file, "cochain");
  if (!(f.dims() == g.dims())) throw ParseError(g_file, "cochains live on different spaces");
  add_document(r, "bracket", mn_bracket(f, g));
  return r;
}

Report cohomology(const std::string& file, const std::string& kind_name, int degree, const std::string& rep_file) {
  Report r{"cohomology"};
  const auto p = load_as<DerPair>(file, "derpair");
  const ComplexKind kind = complex_kind_from_string(kind_name);
  std::unique_ptr<CochainComplex> c;
  switch (kind) {
    case ComplexKind::Prelie: c = prelie_complex(p.algebra, p.rep); break;
    case ComplexKind::Partial: c = partial_complex(p.algebra, p.rep); break;
    case ComplexKind::Pair: c = pair_complex(p); break;
    case ComplexKind::Regular: c = regular_complex(p); break;
    case ComplexKind::Rep: {
      if (rep_file.empty()) throw ParseError(file, "the rep complex needs --rep <extension>");
      c = rep_complex(p, load_as<ExtensionDoc>(rep_file, "extension").rep);
      break;
    }
  }
  const auto dims = cohomology_dim(*c, degree);
  r.body["complex"] = to_string(kind);
  r.body["degree"] = degree;
  r.body["cochains"] = dims.cochains;
  r.body["cocycles"] = dims.cocycles;
  r.body["coboundaries"] = dims.coboundaries;
  r.body["cohomology"] = dims.cohomology;
  r.lines.push_back("complex: " + to_string(kind));
  r.lines.push_back("degree: " + std::to_string(degree));
  r.lines.push_back("cochains: " + std::to_string(dims.cochains));
  r.lines.push_back("z: " + std::to_string(dims.cocycles));
  r.lines.push_back("b: " + std::to_string(dims.coboundaries));
  r.lines.push_back("h: " + std::to_string(dims.cohomology));
  return r;
}

Report mc(const std::string& file) {
  Report r{"mc"};
  const auto p = load_as<DerPair>(file, "derpair");
  const MCReport m = mc_check(p);
  r.ok = m.is_mc;
  Json residuals = Json::array();
  auto residual = [&](const std::string& name, const GradedCochain& f) {
    Json entry{{"name", name}, {"zero", f.is_zero()}, {"nonzero_entries", f.entries().size()}};
    if (!f.is_zero()) entry["value"] = to_json(f);
    residuals.push_back(entry);
    r.lines.push_back("residual " + name + ": " +
                      (f.is_zero() ? std::string("zero")
                                  : "NONZERO (" + std::to_string(f.entries().size()) +
                                        (f.entries().size() == 1 ? " entry)" : " entries)")));
  };
  residual("structure", m.residual_shifted);
  residual("derivation", m.residual_h);
  r.body["maurer_cartan"] = m.is_mc;
  r.body["residuals"] = residuals;
  r.lines.push_back(std::string("maurer-cartan: ") + (m.is_mc ? "yes" : "no"));
  return r;
}

Report deform_check(const std::string& base_file, const std::string& datum_file) {
  Report r{"deform check"};
  const auto base = load_as<DerPair>(base_file, "derpair");
  const auto d = load_as<DeformationDatum>(datum_file, "deformation");
  add_checks(r, kDeformTags, check_infinitesimal_deformation(base, d));
  const bool cocycle = deformation_is_cocycle(base, d);
  r.body["cocycle"] = cocycle;
  r.lines.push_back(std::string("2-cocycle: ") + (cocycle ? "yes" : "no"));
  return r;
}

Report deform_class(const std::string& base_file, const std::string& first, const std::string& second) {
  Report r{"deform class"};
  const auto base = load_as<DerPair>(base_file, "derpair");
  const auto d1 = load_as<DeformationDatum>(first, "deformation");
  const auto d2 = load_as<DeformationDatum>(second, "deformation");
  const bool c1 = deformation_is_cocycle(base, d1), c2 = deformation_is_cocycle(base, d2);
  add_flag(r, "cocycle-first", c1);
  add_flag(r, "cocycle-second", c2);
  if (!r.ok) return r;
  const auto w = same_cohomology_class(base, d1, d2);
  r.ok = w.has_value();
  r.body["same_class"] = r.ok;
  r.lines.push_back(std::string("same class: ") + (r.ok ? "yes" : "no"));
  if (w) {
    r.body["witness"] = Json{{"n", matrix_json(w->n)}, {"s", matrix_json(w->s)}};
    r.lines.push_back("witness N: " + matrix_text(w->n));
    r.lines.push_back("witness S: " + matrix_text(w->s));
  }
  return r;
}

Report ext_build(const std::string& base_file, const std::string& ext_file) {
  Report r{"ext build"};
  const auto base = load_as<DerPair>(base_file, "derpair");
  auto e = load_as<ExtensionDoc>(ext_file, "extension");
  add_checks(r, kPairRepTags, check_derpair_representation(base, e.rep));
  if (!r.ok) return r;
  add_flag(r, "cocycle", rep_cocycle(base, e));
  if (!r.ok) return r;
  e.realization = build_extension(base, e.rep, e.cocycle);
  add_checks(r, kExtensionTags, check_extension(*e.realization, base, e.rep.k));
  add_document(r, "extension", e);
  return r;
}

Report ext_extract(const std::string& base_file, const std::string& ext_file) {
  Report r{"ext extract"};
  const auto base = load_as<DerPair>(base_file, "derpair");
  const auto e = load_as<ExtensionDoc>(ext_file, "extension");
  if (!e.realization) throw ParseError(ext_file + ": /realization", "missing field");
  add_checks(r, kExtensionTags, check_extension(*e.realization, base, e.rep.k));
  if (!r.ok) return r;
  const auto x = extract_cocycle(*e.realization, base, canonical_section(*e.realization));
  const ExtensionDoc out{{x.representation.rep, e.rep.k}, x.cocycle, std::nullopt};
  add_flag(r, "representation-matches", x.representation.rep == e.rep.rep);
  add_document(r, "extension", out);
  return r;
}

Report ext_classify(const std::string& base_file, const std::string& first, const std::string& second) {
  Report r{"ext classify"};
  const auto base = load_as<DerPair>(base_file, "derpair");
  const auto e1 = load_as<ExtensionDoc>(first, "extension");
  const auto e2 = load_as<ExtensionDoc>(second, "extension");
  add_flag(r, "same-representation", e1.rep == e2.rep);
  if (!r.ok) return r;
  add_checks(r, kPairRepTags, check_derpair_representation(base, e1.rep));
  if (!r.ok) return r;
  add_flag(r, "cocycle-first", rep_cocycle(base, e1));
  add_flag(r, "cocycle-second", rep_cocycle(base, e2));
  if (!r.ok) return r;
  const auto zeta = classify(base, e1.rep, e1.cocycle, e2.cocycle);
  r.ok = zeta.has_value();
  r.body["isomorphic"] = r.ok;
  r.lines.push_back(std::string("isomorphic: ") + (r.ok ? "yes" : "no"));
  if (zeta) {
    r.body["isomorphism"] = matrix_json(*zeta);
    r.lines.push_back("isomorphism: " + matrix_text(*zeta));
  }
  return r;
}

Report les(const std::string& file, int n_max) {
  Report r{"les"};
  const auto p = load_as<DerPair>(file, "derpair");
  const LesReport rep = les_check(p, n_max);
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    checks.push_back(Json{{"degree", c.degree},
                          {"position", c.position},
                          {"image", c.image_dim},
                          {"kernel", c.kernel_dim},
                          {"exact", c.exact}});
    r.lines.push_back("n=" + std::to_string(c.degree) + " at " + c.position + ": image " + std::to_string(c.image_dim) +
                      ", kernel " + std::to_string(c.kernel_dim) + (c.exact ? ", exact" : ", NOT exact"));
  }
  r.ok = rep.exact();
  r.body["max"] = n_max;
  r.body["positions"] = checks;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pre-LieDer pairs: validation, cohomology, deformations and extensions"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Emit a machine-readable JSON report");

  std::string file, file2, file3, base, complex_name = "pair", rep_file;
  int degree = 1, n_max = 3;

  auto* v = app.add_subcommand("validate", "Check the axioms of a document");
  v->add_option("file", file)->required();
  v->add_option("--base", base, "derpair supplying the algebra/representation");

  auto* b = app.add_subcommand("bracket", "Matsushima-Nijenhuis bracket of two cochains");
  b->add_option("f", file)->required();
  b->add_option("g", file2)->required();

  auto* c = app.add_subcommand("cohomology", "Dimensions of cocycles, coboundaries and cohomology");
  c->add_option("pair", file)->required();
  c->add_option("--complex", complex_name)
      ->check(CLI::IsMember({"prelie", "partial", "pair", "regular", "rep"}));
  c->add_option("--degree", degree)->required()->check(CLI::Range(1, 64));
  c->add_option("--rep", rep_file, "extension document supplying (V,K,rho,mu) for --complex rep");

  auto* m = app.add_subcommand("mc", "Maurer-Cartan test of a candidate pair");
  m->add_option("candidate", file)->required();

  auto* d = app.add_subcommand("deform", "Infinitesimal deformations");
  d->require_subcommand(1);
  d->fallthrough();
  auto* dc = d->add_subcommand("check", "Validate a deformation datum");
  dc->add_option("base", file)->required();
  dc->add_option("datum", file2)->required();
  auto* dk = d->add_subcommand("class", "Compare the cohomology classes of two deformations");
  dk->add_option("base", file)->required();
  dk->add_option("datum", file2)->required();
  dk->add_option("datum2", file3)->required();

  auto* e = app.add_subcommand("ext", "Abelian extensions");
  e->require_subcommand(1);
  e->fallthrough();
  auto* eb = e->add_subcommand("build", "Realize the extension of a 2-cocycle");
  eb->add_option("base", file)->required();
  eb->add_option("extension", file2)->required();
  auto* ex = e->add_subcommand("extract", "Recover the cocycle of a realized extension");
  ex->add_option("base", file)->required();
  ex->add_option("extension", file2)->required();
  auto* ec = e->add_subcommand("classify", "Decide whether two extensions are isomorphic");
  ec->add_option("base", file)->required();
  ec->add_option("extension", file2)->required();
  ec->add_option("extension2", file3)->required();

  auto* l = app.add_subcommand("les", "Exactness of the long exact sequence");
  l->add_option("pair", file)->required();
  l->add_option("--max", n_max)->check(CLI::Range(1, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& h) {
    return app.exit(h);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kInputError;
  }

  try {
    Report r;
    if (*v) r = validate(file, base);
    else if (*b) r = bracket(file, file2);
    else if (*c) r = cohomology(file, complex_name, degree, rep_file);
    else if (*m) r = mc(file);
    else if (*dc) r = deform_check(file, file2);
    else if (*dk) r = deform_class(file, file2, file3);
    else if (*eb) r = ext_build(file, file2);
    else if (*ex) r = ext_extract(file, file2);
    else if (*ec) r = ext_classify(file, file2, file3);
    else if (*l) r = les(file, n_max);
    return finish(r, json);
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kInputError;
  }
}
