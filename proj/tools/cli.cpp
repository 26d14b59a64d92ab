#include "cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "cli_commands.hpp"
#include "json.hpp"
#include "plancalc/affine.hpp"
#include "plancalc/pivotal.hpp"

namespace plancalc::cli {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(kUnreadable, "unreadable-file", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw CliError(kUnreadable, "unreadable-file", path);
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw CliError(kUnreadable, "unwritable-file", path);
  f << text;
}

namespace {

mpq_class parse_rational(const std::string& s) {
  try {
    mpq_class q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw CliError(kUsage, "bad-scalar", "not a rational: " + s);
  }
}

std::vector<mpq_class> parse_list(const std::string& s) {
  std::vector<mpq_class> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

Scalar generic_scalar(const std::string& s) {
  if (s == "dp") return Scalar::dp();
  if (s == "dm") return Scalar::dm();
  return Scalar::generic(parse_rational(s));
}

}  // namespace

std::shared_ptr<TLAlgebra> make_tl(const RingSpec& r) {
  if (!r.minpoly.empty()) {
    const auto mp = parse_list(r.minpoly);
    const auto iv = parse_list(r.root.empty() ? "0,1000" : r.root);
    if (iv.size() != 2) throw CliError(kUsage, "bad-interval", r.root);
    Field f;
    try {
      f = std::make_shared<NumberField>(mp, iv[0], iv[1]);
    } catch (const std::exception& e) {
      throw CliError(kCompute, "bad-field", e.what());
    }
    const Scalar d = Scalar::field_generator(f);
    return tl_instance(d, d);
  }
  if (!r.delta_plus.empty() || !r.delta_minus.empty()) {
    const Scalar a = generic_scalar(r.delta_plus.empty() ? "dp" : r.delta_plus);
    const Scalar b = generic_scalar(r.delta_minus.empty() ? r.delta_plus : r.delta_minus);
    return tl_instance(a, b);
  }
  const std::string d = r.delta.empty() ? "generic" : r.delta;
  if (d == "generic") return tl_instance(Scalar::dp(), Scalar::dp());
  if (d.rfind("sqrt", 0) == 0) {
    const Scalar g = Scalar::field_generator(NumberField::sqrt(std::stol(d.substr(4))));
    return tl_instance(g, g);
  }
  const mpq_class q = parse_rational(d);
  const Field f = std::make_shared<NumberField>(std::vector<mpq_class>{-q, 1}, q - 1, q + 1);
  const Scalar g = Scalar::field_constant(f, q);
  return tl_instance(g, g);
}

std::shared_ptr<const PlanarAlgebra> make_instance(const std::string& name, const RingSpec& r,
                                                   const std::string& model_path) {
  if (name == "tl" || name == "tl-generic") return make_tl(r);
  if (name == "tl-quotient") {
    RingSpec q = r;
    if (q.delta.empty() && q.minpoly.empty() && q.delta_plus.empty()) q.delta = "sqrt2";
    return std::make_shared<TLQuotient>(make_tl(q));
  }
  if (name == "model") {
    if (model_path.empty()) throw CliError(kUsage, "missing-model", "--model is required");
    auto m = std::make_shared<PivotalModel>(load_model_json(read_file(model_path)));
    return std::make_shared<ModelPA>(m);
  }
  throw CliError(kUsage, "bad-instance", name);
}

Color parse_color(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (ch != ',' && ch != ' ' && ch != '(' && ch != ')') t += ch;
  if (t.empty() || (t.back() != '+' && t.back() != '-')) throw CliError(kUsage, "bad-color", s);
  try {
    return {std::stoi(t.substr(0, t.size() - 1)), t.back() == '+' ? 1 : -1};
  } catch (const std::exception&) {
    throw CliError(kUsage, "bad-color", s);
  }
}

namespace {

std::string one_line(std::string s) {
  for (char& ch : s)
    if (ch == '\n' || ch == '\r') ch = ' ';
  return s;
}

void add_ring(CLI::App* c, Options& o) {
  c->add_option("--delta", o.ring.delta, "generic, sqrtN or a rational");
  c->add_option("--delta-plus", o.ring.delta_plus, "rational, dp or dm");
  c->add_option("--delta-minus", o.ring.delta_minus, "rational, dp or dm");
  c->add_option("--delta-minpoly", o.ring.minpoly, "monic minimal polynomial, low degree first: c0,c1,...,1");
  c->add_option("--delta-root", o.ring.root, "isolating interval lo,hi for the minimal polynomial");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"plancalc: shaded planar tangles, planar algebras and their affine representations"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("-o,--output", o.output, "output file (default stdout)");
  app.add_option("--seed", o.seed, "seed for sampled choices");

  auto* validate = app.add_subcommand("validate", "check a tangle file");
  validate->add_option("file", o.files, "tangle JSON")->required()->expected(1);
  auto* compose = app.add_subcommand("compose", "glue B into internal disc i of A");
  compose->add_option("--at", o.at, "internal disc of A, 1-based")->required();
  compose->add_option("files", o.files, "A B")->required()->expected(2);
  auto* star = app.add_subcommand("star", "reflected tangle");
  star->add_option("file", o.files)->required()->expected(1);
  auto* canon = app.add_subcommand("canon", "canonical code");
  canon->add_option("file", o.files)->required()->expected(1);

  auto* tl = app.add_subcommand("tl", "Temperley-Lieb computations");
  tl->require_subcommand(1);
  auto* tl_eval = tl->add_subcommand("eval", "act with a tangle on diagrams");
  tl_eval->add_option("file", o.files)->required()->expected(1);
  tl_eval->add_option("--input", o.inputs, "matching per internal disc, e.g. [(1,2),(3,4)]");
  tl_eval->add_flag("--quotient", o.quotient, "work in the trace-form quotient");
  auto* tl_gram = tl->add_subcommand("gram", "trace-form Gram matrix");
  auto* tl_quot = tl->add_subcommand("quotient", "negligible quotient");
  for (auto* c : {tl_eval, tl_gram, tl_quot}) add_ring(c, o);
  for (auto* c : {tl_gram, tl_quot}) c->add_option("--color", o.color, "colour, e.g. 3+");

  auto* piv = app.add_subcommand("pivotal", "pivotal-category evaluation");
  piv->require_subcommand(1);
  auto* piv_eval = piv->add_subcommand("eval", "evaluate a labelled tangle in a model");
  piv_eval->add_option("file", o.files)->required()->expected(1);
  piv_eval->add_option("--model", o.model, "model JSON")->required();
  piv_eval->add_option("--labels", o.labels, "labels JSON; random integer labels from --seed when absent");

  auto* depth = app.add_subcommand("depth", "depth certificates");
  depth->add_option("--instance", o.instance, "tl, tl-quotient or model");
  depth->add_option("--model", o.model, "model JSON for --instance model");
  depth->add_option("--max-k", o.max_k, "largest level scanned");
  add_ring(depth, o);

  auto* aff = app.add_subcommand("affine", "affine representations");
  aff->require_subcommand(1);
  std::vector<CLI::App*> aff_cmds;
  for (const char* m : {"hom", "lw", "irreps", "bounds"}) aff_cmds.push_back(aff->add_subcommand(m));
  for (auto* c : aff_cmds) {
    c->add_option("--truncation", o.truncation, "winding truncation L")->required();
    c->add_option("--instance", o.instance, "tl, tl-quotient or model");
    c->add_option("--model", o.model, "model JSON for --instance model");
    c->add_option("--budget", o.budget, "largest dim P(m+n+l) computed directly");
    c->add_flag("--require-stable", o.require_stable, "exit 3 unless the top two levels agree");
    add_ring(c, o);
  }
  aff_cmds[0]->add_option("--outer", o.outer, "colour, e.g. 1+; with --inner gives one JSON report");
  aff_cmds[0]->add_option("--inner", o.inner, "colour");
  aff_cmds[0]->add_option("--kmax", o.kmax, "CSV table over colours up to kmax");
  for (auto* c : {aff_cmds[1], aff_cmds[2]}) c->add_option("--color", o.color, "colour, e.g. 1+");
  aff_cmds[3]->add_option("--pmax", o.pmax, "root sequence up to pmax");
  aff_cmds[3]->add_option("--pbound", o.pbound, "bound rows up to pbound");
  aff_cmds[3]->add_option("--max-k", o.max_k, "depth scan bound");

  auto* render = app.add_subcommand("render", "SVG of the evaluated standard form");
  render->add_option("file", o.files)->required()->expected(1);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
      app.parse(rev);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kOk;
    } catch (const CLI::ParseError& e) {
      throw CliError(kUsage, "usage", e.what());
    }
    if (*validate) return cmd_validate(o, out);
    if (*compose) return cmd_compose(o, out);
    if (*star) return cmd_star(o, out);
    if (*canon) return cmd_canon(o, out);
    if (*tl_eval) return cmd_tl("eval", o, out);
    if (*tl_gram) return cmd_tl("gram", o, out);
    if (*tl_quot) return cmd_tl("quotient", o, out);
    if (*piv_eval) return cmd_pivotal_eval(o, out);
    if (*depth) return cmd_depth(o, out);
    const char* names[] = {"hom", "lw", "irreps", "bounds"};
    for (int i = 0; i < 4; ++i)
      if (*aff_cmds[i]) return cmd_affine(names[i], o, out);
    if (*render) return cmd_render(o, out);
    throw CliError(kUsage, "usage", "no subcommand");
  } catch (const CliError& e) {
    err << "plancalc: " << e.tag << ": " << one_line(e.what()) << "\n";
    return e.code;
  } catch (const TangleError& e) {
    err << "plancalc: invalid-tangle: " << one_line(e.what()) << "\n";
    return kInvalid;
  } catch (const SchemaError& e) {
    err << "plancalc: schema: " << one_line(e.what()) << "\n";
    return kSchema;
  } catch (const nlohmann::json::exception& e) {
    err << "plancalc: schema: " << one_line(e.what()) << "\n";
    return kSchema;
  } catch (const RingMismatch& e) {
    err << "plancalc: ring-mismatch: " << one_line(e.what()) << "\n";
    return kRing;
  } catch (const std::exception& e) {
    err << "plancalc: compute: " << one_line(e.what()) << "\n";
    return kCompute;
  }
}

}  // namespace plancalc::cli
