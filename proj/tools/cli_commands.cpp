#include "cli_commands.hpp"

#include <random>
#include <sstream>

#include "json.hpp"
#include "plancalc/affine.hpp"
#include "plancalc/depth.hpp"
#include "plancalc/pivotal.hpp"
#include "plancalc/render.hpp"

namespace plancalc::cli {

using nlohmann::json;

namespace {

constexpr const char* kFormat = "plancalc/1";

json color_json(Color c) { return {{"k", c.k}, {"eps", c.eps > 0 ? "+" : "-"}}; }

PlanarTangle load_tangle(const std::string& path) { return tangle_from_json(read_file(path)); }

void emit(const Options& o, const json& j, std::ostream& out) { write_output(o.output, j.dump(2) + "\n", out); }

json element_json(const PlanarAlgebra& P, const Element& x) {
  json terms = json::array();
  for (std::size_t i = 0; i < x.coeffs.size(); ++i)
    if (!x.coeffs[i].is_zero())
      terms.push_back({{"basis", P.basis_label(x.color, static_cast<int>(i))}, {"coeff", x.coeffs[i].to_string()}});
  return {{"color", color_json(x.color)}, {"terms", terms}};
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(m(i, j).to_string());
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

int cmd_validate(const Options& o, std::ostream& out) {
  const RawTangle raw = raw_from_json(read_file(o.files.at(0)));
  const Validation v = validate(raw);
  if (!v.ok) {
    emit(o, {{"format", kFormat}, {"valid", false}, {"clause", v.clause}, {"message", v.message}}, out);
    throw CliError(kInvalid, "invalid-tangle", v.message);
  }
  const PlanarTangle T = PlanarTangle::from_raw(raw);
  json internal = json::array();
  for (const auto& c : T.internal()) internal.push_back(color_json(c));
  emit(o, {{"format", kFormat}, {"valid", true}, {"external", color_json(T.external())}, {"internal", internal},
           {"code", T.code_hex()}},
       out);
  return kOk;
}

int cmd_compose(const Options& o, std::ostream& out) {
  const PlanarTangle A = load_tangle(o.files.at(0));
  const PlanarTangle B = load_tangle(o.files.at(1));
  write_output(o.output, tangle_to_json(compose_at(A, o.at, B)) + "\n", out);
  return kOk;
}

int cmd_star(const Options& o, std::ostream& out) {
  write_output(o.output, tangle_to_json(star(load_tangle(o.files.at(0)))) + "\n", out);
  return kOk;
}

int cmd_canon(const Options& o, std::ostream& out) {
  const PlanarTangle T = load_tangle(o.files.at(0));
  emit(o, {{"format", kFormat}, {"code", T.code_hex()}}, out);
  return kOk;
}

int cmd_tl(const std::string& mode, const Options& o, std::ostream& out) {
  auto tl = make_tl(o.ring);
  if (mode == "eval") {
    const PlanarTangle T = load_tangle(o.files.at(0));
    if (static_cast<int>(o.inputs.size()) != T.num_internal())
      throw CliError(kUsage, "usage", "need one --input per internal disc");
    std::shared_ptr<const TLQuotient> Q;
    if (o.quotient) Q = std::make_shared<TLQuotient>(tl);
    std::vector<Element> in;
    for (int j = 0; j < T.num_internal(); ++j) {
      const Color c = T.color(j + 1);
      const Matching m = parse_matching(o.inputs[j]);
      if (static_cast<int>(m.size()) != 2 * c.k) throw CliError(kUsage, "usage", "input " + std::to_string(j + 1) + " has the wrong size");
      Element e = tl->basis(c, tl->index_of(m));
      in.push_back(Q ? Q->project(e) : e);
    }
    const PlanarAlgebra& P = Q ? static_cast<const PlanarAlgebra&>(*Q) : *tl;
    emit(o, {{"format", kFormat}, {"algebra", P.name()}, {"result", element_json(P, P.act(T, in))}}, out);
    return kOk;
  }
  const Color c = parse_color(o.color);
  if (mode == "gram") {
    json labels = json::array();
    for (int i = 0; i < tl->dim(c); ++i) labels.push_back(tl->basis_label(c, i));
    emit(o, {{"format", kFormat}, {"algebra", tl->name()}, {"color", color_json(c)}, {"basis", labels},
             {"gram", matrix_json(gram_matrix(*tl, c))}},
         out);
    return kOk;
  }
  TLQuotient Q(tl);
  const QuotientInfo info = negligible_quotient(Q, c);
  json basis = json::array();
  for (int i = 0; i < info.dimension; ++i) basis.push_back(Q.basis_label(c, i));
  bool pd = true;
  for (const auto& m : leading_minors(Q.basis_gram(c.k))) pd = pd && m.sign() > 0;
  emit(o, {{"format", kFormat}, {"algebra", Q.name()}, {"color", color_json(c)}, {"dimension", info.dimension},
           {"basis", basis}, {"positive_definite", pd}},
       out);
  return kOk;
}

namespace {

mpq_class entry(const json& v) {
  if (v.is_number_integer()) return mpq_class(v.get<long>());
  if (v.is_string()) {
    mpq_class q(v.get<std::string>());
    q.canonicalize();
    return q;
  }
  throw SchemaError("label entries must be integers or \"p/q\" strings");
}

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

int cmd_pivotal_eval(const Options& o, std::ostream& out) {
  const PivotalModel M = load_model_json(read_file(o.model));
  const PlanarTangle T = load_tangle(o.files.at(0));
  const SlicePlan plan = standard_form(T, o.seed);
  json result = {{"format", kFormat}, {"external", color_json(T.external())}, {"layout_width", plan.max_width()}};
  std::vector<std::vector<mpq_class>> labels;
  if (!o.labels.empty()) {
    const json j = json::parse(read_file(o.labels));
    if (j.contains("format") && j.at("format") != kFormat) throw SchemaError("unsupported format version");
    const json& arr = j.is_array() ? j : j.at("labels");
    for (const auto& lab : arr) {
      std::vector<mpq_class> v;
      for (const auto& x : lab) v.push_back(entry(x));
      labels.push_back(std::move(v));
    }
  } else {
    std::mt19937_64 rng(o.seed);
    for (int d = 1; d <= T.num_internal(); ++d) {
      std::vector<mpq_class> v(ipow(M.n, 2 * T.color(d).k));
      for (auto& x : v) x = static_cast<long>(rng() % 7) - 3;
      labels.push_back(std::move(v));
    }
    result["labels_seed"] = o.seed;
  }
  if (static_cast<int>(labels.size()) != T.num_internal()) throw SchemaError("need one label per internal disc");
  for (int d = 1; d <= T.num_internal(); ++d)
    if (labels[d - 1].size() != ipow(M.n, 2 * T.color(d).k))
      throw SchemaError("label " + std::to_string(d) + " has the wrong size");
  json matrix = json::array();
  if (M.has_exact()) {
    for (const auto& x : evaluate_plan(M, plan, labels)) matrix.push_back(x.get_str());
    result["mode"] = "exact";
  } else {
    std::vector<std::vector<double>> lf;
    for (const auto& l : labels) {
      std::vector<double> v;
      for (const auto& x : l) v.push_back(x.get_d());
      lf.push_back(std::move(v));
    }
    for (double x : evaluate_plan(M, plan, lf)) matrix.push_back(x);
    result["mode"] = "float";
  }
  result["side"] = ipow(M.n, T.external().k);
  result["matrix"] = matrix;
  emit(o, result, out);
  return kOk;
}

int cmd_depth(const Options& o, std::ostream& out) {
  auto P = make_instance(o.instance, o.ring, o.model);
  const DepthReport r = compute_depth(*P, o.max_k);
  write_output(o.output, r.to_json() + "\n", out);
  return kOk;
}

int cmd_render(const Options& o, std::ostream& out) {
  write_output(o.output, render_svg(load_tangle(o.files.at(0)), o.seed), out);
  return kOk;
}

int cmd_affine(const std::string& mode, const Options& o, std::ostream& out) {
  auto P = make_instance(o.instance, o.ring, o.model);
  AffineCategory A(P, o.truncation, o.budget);
  bool stable = true;
  if (mode == "hom") {
    if (!o.outer.empty() || !o.inner.empty()) {
      const HomReport r = A.hom_space_dim(parse_color(o.outer.empty() ? "0+" : o.outer),
                                          parse_color(o.inner.empty() ? "0+" : o.inner));
      write_output(o.output, r.to_json() + "\n", out);
      stable = r.stable;
    } else {
      std::ostringstream csv;
      csv << "outer,inner,truncation,dim,stable,levels\n";
      for (int m = 0; m <= o.kmax; ++m)
        for (int n = 0; n <= o.kmax; ++n)
          for (int e : {1, -1}) {
            const Color oc{m, 1}, ic{n, e};
            if (A.levels(oc, ic).empty()) continue;
            const HomReport r = A.hom_space_dim(oc, ic);
            stable = stable && r.stable;
            csv << oc.str() << "," << ic.str() << "," << o.truncation << "," << r.dim << ","
                << (r.stable ? "true" : "false") << ",";
            for (std::size_t i = 0; i < r.levels.size(); ++i)
              csv << (i ? " " : "") << r.levels[i].level << ":" << r.levels[i].dim << ":" << r.levels[i].source;
            csv << "\n";
          }
      write_output(o.output, csv.str(), out);
    }
  } else if (mode == "lw" || mode == "irreps") {
    const LWAlgebra lw = lw_algebra(A, parse_color(o.color), true);
    stable = lw.stable;
    if (mode == "lw") {
      json j = json::parse(lw.to_json());
      j["truncation"] = o.truncation;
      emit(o, j, out);
    } else {
      json j = {{"format", kFormat}, {"color", color_json(lw.color)}, {"truncation", o.truncation},
                {"level", lw.level}, {"dim", lw.dim}, {"stable", lw.stable}, {"level_dims", lw.level_dims}};
      if (lw.dim == 0 || !lw.mult.empty()) {
        const IrrepReport ir = decompose_irreps(lw);
        j["radical_dim"] = ir.radical_dim;
        j["blocks"] = ir.blocks;
        j["irreducibles"] = ir.blocks.size();
        j["method"] = ir.method;
      } else {
        j["irreducibles"] = nullptr;
        j["method"] = "structure constants exceed the budget";
      }
      emit(o, j, out);
    }
  } else {
    const WeightReport w = weight_and_bounds(A, o.pmax, o.pbound, o.max_k);
    for (const auto& r : w.bounds) stable = stable && r.stable;
    json j = json::parse(w.to_json());
    j["truncation"] = o.truncation;
    emit(o, j, out);
  }
  if (o.require_stable && !stable) throw CliError(kUnstable, "unstable", "truncation " + std::to_string(o.truncation) + " is not stable");
  return kOk;
}

}  // namespace plancalc::cli
