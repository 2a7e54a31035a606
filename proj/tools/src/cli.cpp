#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "tropexp/chambers.hpp"
#include "tropexp/error.hpp"
#include "tropexp/io.hpp"

namespace tropexp::cli {
namespace {

using io::Json;

struct Job {
  std::string command;
  std::string field_text = "Q";
  FieldDescriptor field;
  long dim = -1;
  std::uint64_t seed = kDefaultSeed;
  bool pretty = false;
  bool summary = false;
  std::string route = "direct";
  std::string probes_path;
  int precision = 12;
  int count = 3;
  std::vector<std::string> inputs;
};

struct Result {
  Json doc;
  std::string summary;
};

class InputError : public Error {
 public:
  using Error::Error;
};

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open \"" + path + "\"");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("\"" + path + "\" is not valid JSON: " + e.what(), e.byte);
  }
}

std::size_t require_dim(const Job& job) {
  if (job.dim < 1) throw PreconditionError("--dim is required and must be positive for " + job.command);
  return static_cast<std::size_t>(job.dim);
}

void check_dim(const Job& job, std::size_t actual, const std::string& what) {
  if (job.dim >= 0 && static_cast<std::size_t>(job.dim) != actual) {
    throw PreconditionError(what + " has dimension " + std::to_string(actual) + " but --dim is " +
                            std::to_string(job.dim));
  }
}

void require_inputs(const Job& job, std::size_t lo, std::size_t hi, const std::string& shape) {
  if (job.inputs.size() < lo || job.inputs.size() > hi) throw PreconditionError(job.command + " expects " + shape);
}

std::vector<ExpSum> parse_system(const Job& job, const std::string& text) {
  const std::size_t n = require_dim(job);
  std::vector<ExpSum> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ';')) out.push_back(parse_expsum(piece, job.field, n));
  return out;
}

std::vector<ExpSum> parse_inputs(const Job& job) {
  if (job.inputs.empty()) throw PreconditionError(job.command + " expects at least one expression");
  std::vector<ExpSum> out;
  for (const auto& text : job.inputs)
    for (auto& f : parse_system(job, text)) out.push_back(std::move(f));
  return out;
}

ProductOptions product_options(const Job& job) {
  ProductOptions p;
  p.seed = job.seed;
  return p;
}

std::string decimal(double x, int precision) {
  std::ostringstream os;
  os << std::setprecision(precision) << x;
  return os.str();
}

Json density_doc(const ScaledDensity& d, const Job& job) {
  Json j = io::to_json(d);
  j["approximate"] = decimal(d.approximate(), job.precision);
  return j;
}

Json diagnostics_doc(const Diagnostics& diags) {
  Json a = Json::array();
  for (const auto& d : diags) a.push_back(d);
  return a;
}

Result cmd_trop(const Job& job) {
  const std::vector<ExpSum> fs = parse_inputs(job);
  if (job.route != "direct" && job.route != "model" && job.route != "both") {
    throw PreconditionError("--route must be direct, model or both");
  }
  auto compute = [&](TropRoute route, Diagnostics* diags) {
    TropOptions o;
    o.route = route;
    o.product = product_options(job);
    return system_trop(fs, o, diags);
  };
  Diagnostics diags;
  Result r;
  if (job.route == "both") {
    const TropicalFan direct = compute(TropRoute::direct, &diags);
    const TropicalFan model = compute(TropRoute::model, nullptr);
    const bool eq = equality_test(direct, model);
    r.doc = Json{{"direct", io::to_json(direct)}, {"model", io::to_json(model)}, {"equal", eq}};
    r.summary = "routes " + std::string(eq ? "agree" : "DISAGREE") + ": " + std::to_string(direct.cones().size()) +
                " cones (direct), " + std::to_string(model.cones().size()) + " cones (model)";
  } else {
    const TropicalFan fan = compute(job.route == "model" ? TropRoute::model : TropRoute::direct, &diags);
    r.doc = io::to_json(fan);
    r.summary = "fan of dimension " + std::to_string(fan.pure_dim()) + " in R^" + std::to_string(fan.ambient_dim()) +
                " with " + std::to_string(fan.cones().size()) + " cones";
  }
  if (!diags.empty()) r.doc["diagnostics"] = diagnostics_doc(diags);
  return r;
}

Result cmd_index(const Job& job) {
  if (job.inputs.empty()) throw PreconditionError("index expects one argument per system");
  std::vector<std::vector<ExpSum>> systems;
  for (const auto& text : job.inputs) systems.push_back(parse_system(job, text));
  TropOptions o;
  o.product = product_options(job);
  const ScaledDensity d = intersection_index(systems, o);
  return {density_doc(d, job), "intersection index " + d.to_string()};
}

Result cmd_density(const Job& job) {
  TropOptions o;
  o.product = product_options(job);
  const ScaledDensity d = weak_density(parse_inputs(job), o);
  return {density_doc(d, job), "weak density " + d.to_string()};
}

Json chamber_doc(const Chamber& c) {
  return Json{{"point", io::to_json(c.point.coords())}, {"active", c.active}};
}

Result cmd_lattices(const Job& job) {
  const ModelSystem model = model_system(parse_inputs(job), product_options(job));
  const SubspaceFamily family = nontransversal_loci(model.fan, model.winding_image);
  const Chamber chamber = sample_chamber(family, model.fan, model.winding_image, job.seed);
  const std::vector<ShiftedLattice> lattices = zero_lattices(model, chamber);
  Json ls = Json::array();
  for (const auto& l : lattices) ls.push_back(io::to_json(l));
  const ScaledDensity d = density_sum(lattices);
  Result r;
  r.doc = Json{{"chamber", chamber_doc(chamber)}, {"lattices", ls}, {"density", density_doc(d, job)}};
  r.summary = std::to_string(lattices.size()) + " zero lattices, density " + d.to_string();
  return r;
}

Result cmd_chambers(const Job& job) {
  if (job.count < 1) throw PreconditionError("--count must be positive");
  const ModelSystem model = model_system(parse_inputs(job), product_options(job));
  const SubspaceFamily family = nontransversal_loci(model.fan, model.winding_image);
  Json cs = Json::array();
  std::optional<ScaledDensity> first;
  bool consistent = true;
  for (int i = 0; i < job.count; ++i) {
    const Chamber c = sample_chamber(family, model.fan, model.winding_image, job.seed + static_cast<std::uint64_t>(i));
    const ScaledDensity d = density_sum(zero_lattices(model, c));
    if (!first) first = d;
    consistent = consistent && d == *first;
    Json cj = chamber_doc(c);
    cj["density"] = density_doc(d, job);
    cs.push_back(cj);
  }
  Result r;
  r.doc = Json{{"subspaces", family.subspaces().size()}, {"chambers", cs}, {"consistent", consistent}};
  r.summary = std::to_string(job.count) + " chambers, densities " + (consistent ? "agree: " : "DIFFER, first: ") +
              first->to_string();
  return r;
}

TropicalFan fan_input(const Job& job, const std::string& path) {
  TropicalFan f = io::fan_from_json(read_file(path), job.field);
  check_dim(job, f.ambient_dim(), "fan \"" + path + "\"");
  return f;
}

Result cmd_equal(const Job& job) {
  require_inputs(job, 2, 2, "two fan files");
  const TropicalFan a = fan_input(job, job.inputs[0]);
  const TropicalFan b = fan_input(job, job.inputs[1]);
  const bool eq = equality_test(a, b);
  return {Json{{"equal", eq}}, eq ? "fans are equal" : "fans differ"};
}

Result cmd_pullback(const Job& job) {
  require_inputs(job, 2, 2, "a map file and a fan file");
  const LinearMap s = io::map_from_json(read_file(job.inputs[0]), job.field);
  const TropicalFan fan = io::fan_from_json(read_file(job.inputs[1]), job.field);
  check_dim(job, s.source_dim(), "map source");
  PullbackOptions o;
  o.product = product_options(job);
  const TropicalFan out = pullback(s, fan, o);
  return {io::to_json(out), "pull-back has " + std::to_string(out.cones().size()) + " cones in R^" +
                                std::to_string(out.ambient_dim())};
}

Result cmd_mixedvol(const Job& job) {
  if (job.inputs.empty()) throw PreconditionError("mixedvol expects polytope files");
  std::vector<Polytope> ps;
  for (const auto& path : job.inputs) {
    ps.push_back(io::polytope_from_json(read_file(path), job.field));
    check_dim(job, ps.back().ambient_dim(), "polytope \"" + path + "\"");
  }
  const Scalar v = mixed_volume(ps);
  Json j{{"value", v.to_string()}, {"exact", io::to_json(v)}, {"approximate", decimal(v.to_double(), job.precision)}};
  return {j, "mixed volume " + v.to_string()};
}

ProbeFamily probes_input(const Job& job, const std::string& path) {
  const Json j = read_file(path);
  ProbeFamily fam;
  fam.name = j.value("name", path);
  if (!j.contains("probes") || !j.at("probes").is_array()) throw ParseError("probe file needs a \"probes\" array");
  for (const auto& p : j.at("probes")) fam.probes.push_back(io::class_from_json(p, io::document_field(j, job.field)));
  return fam;
}

Result cmd_pair(const Job& job) {
  require_inputs(job, 1, 2, "one class file, or two classes of complementary degree");
  const PolytopeClass a = io::class_from_json(read_file(job.inputs[0]), job.field);
  check_dim(job, a.ambient_dim(), "class");
  if (job.inputs.size() == 2) {
    const PolytopeClass b = io::class_from_json(read_file(job.inputs[1]), job.field);
    const Scalar v = top_pairing(class_multiply(a, b));
    return {Json{{"pairing", v.to_string()}, {"exact", io::to_json(v)}}, "pairing " + v.to_string()};
  }
  const std::size_t n = a.ambient_dim();
  const ProbeFamily fam =
      job.probes_path.empty() ? default_probes(a, n - a.degree()) : probes_input(job, job.probes_path);
  const ZeroVerdict v = is_zero_class(a, fam);
  Json j{{"verdict", v.label()}, {"nonzero", v.nonzero}, {"family", v.family}, {"probes_checked", v.probes_checked}};
  if (v.witness) {
    j["witness"] = io::to_json(*v.witness);
    j["witness_value"] = v.witness_value.to_string();
  }
  return {j, v.label() + " (" + std::to_string(v.probes_checked) + " probes from " + v.family + ")"};
}

Result dispatch(const Job& job) {
  if (job.command == "trop") return cmd_trop(job);
  if (job.command == "index") return cmd_index(job);
  if (job.command == "density") return cmd_density(job);
  if (job.command == "lattices") return cmd_lattices(job);
  if (job.command == "chambers") return cmd_chambers(job);
  if (job.command == "equal") return cmd_equal(job);
  if (job.command == "pullback") return cmd_pullback(job);
  if (job.command == "mixedvol") return cmd_mixedvol(job);
  if (job.command == "pair") return cmd_pair(job);
  throw PreconditionError("unknown command \"" + job.command + "\"");
}

int emit_error(std::ostream& out, int code, const std::string& kind, const std::string& message,
               std::size_t position = ParseError::npos) {
  Json e{{"kind", kind}, {"message", message}, {"exit_code", code}};
  if (position != ParseError::npos) e["position"] = position;
  out << Json{{"error", e}}.dump() << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Job job;
  CLI::App app{"Tropical intersection theory of exponential sums", "tropexp"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--field", job.field_text, "Q or Qsqrt:d")->capture_default_str();
  app.add_option("--dim", job.dim, "ambient dimension n");
  app.add_option("--seed", job.seed, "seed for displacements and chamber samples")->capture_default_str();
  app.add_flag("--json", "compact JSON output (default)");
  app.add_flag("--pretty", job.pretty, "indented JSON output");
  app.add_flag("--summary", job.summary, "print a one-line human-readable summary instead of JSON");
  app.add_option("--precision", job.precision, "significant digits of decimal approximations")
      ->capture_default_str()
      ->check(CLI::Range(1, 40));

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"trop", "tropicalization of a hypersurface or system"},
      {"index", "intersection index; each argument is a system, equations separated by ';'"},
      {"density", "weak density of one system"},
      {"lattices", "zero lattices in one sampled chamber"},
      {"chambers", "density sums over several sampled chambers"},
      {"equal", "equality test of two fan files"},
      {"pullback", "pull-back of a fan file along a map file"},
      {"mixedvol", "mixed volume of polytope files"},
      {"pair", "zero test of a class file, or pairing of two class files"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("inputs", job.inputs, "expressions or files");
    if (name == "trop") sub->add_option("--route", job.route, "direct, model or both")->capture_default_str();
    if (name == "pair") sub->add_option("--probes", job.probes_path, "probe family file");
    if (name == "chambers") sub->add_option("--count", job.count, "number of chambers")->capture_default_str();
    sub->callback([&job, name = name] { job.command = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return emit_error(out, kExitParse, "usage", e.what());
  }

  try {
    job.field = FieldDescriptor::parse(job.field_text);
    const Result r = dispatch(job);
    if (job.summary) {
      out << r.summary << '\n';
    } else {
      out << r.doc.dump(job.pretty ? 2 : -1) << '\n';
    }
    return kExitOk;
  } catch (const ParseError& e) {
    return emit_error(out, kExitParse, "parse", e.what(), e.position());
  } catch (const InputError& e) {
    return emit_error(out, kExitParse, "input", e.what());
  } catch (const PreconditionError& e) {
    return emit_error(out, kExitPrecondition, "precondition", e.what());
  } catch (const GenericityError& e) {
    return emit_error(out, kExitGenericity, "genericity", e.what());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return emit_error(out, kExitInternal, "internal", e.what());
  }
}

}  // namespace tropexp::cli
