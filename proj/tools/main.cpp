// Command-line front end: reads representation documents (JSON,
// format_version 1), runs constructions, verifications and analyses,
// and prints plain-text or JSON reports. Exit code 0 on success, 1 when
// a checked property is refuted, 2 on input errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "saddlecalc/analysis.hpp"
#include "saddlecalc/document.hpp"
#include "saddlecalc/errors.hpp"
#include "saddlecalc/saddle.hpp"
#include "saddlecalc/sampling.hpp"

using namespace saddlecalc;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInputError = 2;

struct CommonOptions {
  std::string input;
  std::string output;  // empty = stdout
  bool as_json = false;
  bool exact2d = true;
  int samples = 2000;
  uint64_t seed = 0;
  Tolerances tol;
};

void add_common(CLI::App* cmd, CommonOptions* opt, bool with_sampling) {
  cmd->add_option("input", opt->input, "input document (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_flag("--json", opt->as_json, "emit a machine-readable JSON report");
  cmd->add_option("--tol-lp", opt->tol.lp, "LP feasibility/optimality tolerance");
  cmd->add_option("--tol-verify", opt->tol.verify, "saddle verification gap tolerance");
  if (with_sampling) {
    cmd->add_option("--samples", opt->samples, "sphere sample count");
    cmd->add_option("--seed", opt->seed, "sampling seed");
    cmd->add_option("--exact2d", opt->exact2d,
                    "complete low-dimensional candidate set (dim <= 2)");
  }
}

Document load(const CommonOptions& opt) {
  std::ifstream in(opt.input, std::ios::binary);
  if (!in) throw ParseError("cannot open input file", opt.input);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

void emit_document(const CommonOptions& opt, const Document& doc) {
  const std::string text = serialize_document(doc);
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw ParseError("cannot open output file", opt.output);
  out << text;
}

void emit_report(const CommonOptions& opt, const json& j,
                 const std::string& text) {
  if (opt.as_json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

json vector_json(const Vector& v) {
  json a = json::array();
  for (int i = 0; i < v.dim(); ++i) a.push_back(v[i]);
  return a;
}

SphereSampler sampler_for(const CommonOptions& opt, int dim) {
  SphereSampler s;
  s.dim = dim;
  s.count = opt.samples;
  s.seed = opt.seed;
  s.scheme = dim == 2 ? SphereScheme::kAngularGrid : SphereScheme::kLowDiscrepancy;
  return s;
}

Vector parse_point(const std::string& text, int dim) {
  std::vector<double> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      coords.push_back(std::stod(item, &used));
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("cannot parse coordinate \"" + item + "\"", "--at");
    }
  }
  if (static_cast<int>(coords.size()) != dim) {
    throw ParseError("--at expects " + std::to_string(dim) + " coordinates, got " +
                         std::to_string(coords.size()),
                     "--at");
  }
  return Vector(coords);
}

const SaddleFamily& require_saddle(const Document& doc) {
  if (doc.kind != Document::Kind::kSaddle) {
    throw ParseError("this command needs a saddle document, got kind \"" +
                         std::string(kind_name(doc.kind)) + "\"",
                     "kind");
  }
  return doc.saddle();
}

int run_eval(const CommonOptions& opt, const std::string& at, int grid) {
  const Document doc = load(opt);
  if (grid > 0) {
    if (doc.dim != 2) throw ParseError("--grid needs a 2-dimensional document", "--grid");
    const auto pts = sample_sphere({2, grid, 0, SphereScheme::kAngularGrid});
    json rows = json::array();
    std::string text = "# x0\tx1\tvalue(s)\n";
    char line[160];
    for (const Vector& x : pts) {
      json row = {{"at", vector_json(x)}};
      switch (doc.kind) {
        case Document::Kind::kDc: {
          const double v = eval_dc(doc.dc(), x);
          row["dc"] = v;
          std::snprintf(line, sizeof(line), "%.12g\t%.12g\t%.12g\n", x[0], x[1], v);
          break;
        }
        case Document::Kind::kSaddle: {
          const double vi = eval_infsup(doc.saddle(), x);
          const double vs = eval_supinf(doc.saddle(), x);
          row["infsup"] = vi;
          row["supinf"] = vs;
          std::snprintf(line, sizeof(line), "%.12g\t%.12g\t%.12g\t%.12g\n", x[0],
                        x[1], vi, vs);
          break;
        }
        case Document::Kind::kFamilies: {
          double inf_up = std::numeric_limits<double>::infinity();
          for (const MaxOfLinear& f : doc.families().upper()) {
            inf_up = std::min(inf_up, eval_sublinear(f, x));
          }
          double sup_lo = -std::numeric_limits<double>::infinity();
          for (const MinOfLinear& f : doc.families().lower()) {
            sup_lo = std::max(sup_lo, eval_superlinear(f, x));
          }
          row["inf_upper"] = inf_up;
          row["sup_lower"] = sup_lo;
          std::snprintf(line, sizeof(line), "%.12g\t%.12g\t%.12g\t%.12g\n", x[0],
                        x[1], inf_up, sup_lo);
          break;
        }
      }
      rows.push_back(row);
      text += line;
    }
    emit_report(opt, {{"command", "eval"}, {"dim", doc.dim}, {"grid", rows}}, text);
    return kExitOk;
  }

  const Vector x = parse_point(at, doc.dim);
  json report = {{"command", "eval"}, {"dim", doc.dim}, {"at", vector_json(x)}};
  std::string text;
  char line[96];
  switch (doc.kind) {
    case Document::Kind::kDc: {
      const double v = eval_dc(doc.dc(), x);
      report["dc"] = v;
      std::snprintf(line, sizeof(line), "dc: %.17g\n", v);
      text += line;
      break;
    }
    case Document::Kind::kSaddle: {
      const double vi = eval_infsup(doc.saddle(), x);
      const double vs = eval_supinf(doc.saddle(), x);
      report["infsup"] = vi;
      report["supinf"] = vs;
      std::snprintf(line, sizeof(line), "infsup: %.17g\n", vi);
      text += line;
      std::snprintf(line, sizeof(line), "supinf: %.17g\n", vs);
      text += line;
      break;
    }
    case Document::Kind::kFamilies: {
      double inf_up = std::numeric_limits<double>::infinity();
      for (const MaxOfLinear& f : doc.families().upper()) {
        inf_up = std::min(inf_up, eval_sublinear(f, x));
      }
      double sup_lo = -std::numeric_limits<double>::infinity();
      for (const MinOfLinear& f : doc.families().lower()) {
        sup_lo = std::max(sup_lo, eval_superlinear(f, x));
      }
      report["inf_upper"] = inf_up;
      report["sup_lower"] = sup_lo;
      std::snprintf(line, sizeof(line), "inf of upper family: %.17g\n", inf_up);
      text += line;
      std::snprintf(line, sizeof(line), "sup of lower family: %.17g\n", sup_lo);
      text += line;
      break;
    }
  }
  emit_report(opt, report, text);
  return kExitOk;
}

int run_build_saddle(const CommonOptions& opt) {
  const Document doc = load(opt);
  SaddleFamily F = [&] {
    switch (doc.kind) {
      case Document::Kind::kDc:
        return from_dc(doc.dc(), opt.tol);
      case Document::Kind::kFamilies:
        return build_from_approximations(doc.families(), opt.tol);
      default:
        throw ParseError("build-saddle needs a dc or families document", "kind");
    }
  }();
  emit_document(opt, make_saddle_document(std::move(F), doc.name, doc.description));
  return kExitOk;
}

int run_convert_dc(const CommonOptions& opt) {
  const Document doc = load(opt);
  DCPair p = saddle_to_dc(require_saddle(doc), opt.tol);
  emit_document(opt, make_dc_document(std::move(p), doc.name, doc.description));
  return kExitOk;
}

int run_verify(const CommonOptions& opt) {
  const Document doc = load(opt);
  const SaddleFamily& F = require_saddle(doc);
  const SaddleReport r =
      verify_saddle(F, sampler_for(opt, F.dim()), opt.exact2d, opt.tol);
  json report = {{"command", "verify"},
                 {"max_gap", r.max_gap},
                 {"witness", vector_json(r.witness)},
                 {"is_saddle", r.is_saddle},
                 {"exact", r.exact}};
  char line[160];
  std::string text;
  std::snprintf(line, sizeof(line), "max_gap: %.17g\n", r.max_gap);
  text += line;
  text += "witness: " + to_string(r.witness) + "\n";
  text += std::string("is_saddle: ") + (r.is_saddle ? "true" : "false") +
          (r.exact ? " (complete candidate set)" : " (sampled)") + "\n";
  emit_report(opt, report, text);
  return r.is_saddle ? kExitOk : kExitRefuted;
}

int run_sign(const CommonOptions& opt) {
  const Document doc = load(opt);
  const SaddleFamily& F = require_saddle(doc);
  const SignDecision nn = check_nonnegative(F, opt.tol);
  const SignDecision np = check_nonpositive(F, opt.tol);
  json report = {{"command", "sign"},
                 {"nonnegative", nn.holds},
                 {"nonpositive", np.holds}};
  std::string text;
  if (nn.holds) {
    text += "nonnegative: yes (origin lies in every row hull)\n";
  } else {
    text += "not nonnegative: row " + std::to_string(nn.failing_index) +
            " excludes the origin; p(" + to_string(nn.witness) + ") < 0\n";
    report["nonnegative_witness"] = vector_json(nn.witness);
    report["nonnegative_failing_row"] = nn.failing_index;
  }
  if (np.holds) {
    text += "nonpositive: yes (origin lies in every column hull)\n";
  } else {
    text += "not nonpositive: column " + std::to_string(np.failing_index) +
            " excludes the origin; p(" + to_string(np.witness) + ") > 0\n";
    report["nonpositive_witness"] = vector_json(np.witness);
    report["nonpositive_failing_column"] = np.failing_index;
  }
  emit_report(opt, report, text);
  return (nn.holds || np.holds) ? kExitOk : kExitRefuted;
}

int run_direction(const CommonOptions& opt, DirectionMode mode) {
  const Document doc = load(opt);
  const SaddleFamily& F = require_saddle(doc);
  const DirectionReport r = mode == DirectionMode::kDescent
                                ? steepest_descent(F, opt.tol)
                                : steepest_ascent(F, opt.tol);
  json report = {{"command", mode == DirectionMode::kDescent ? "descent" : "ascent"},
                 {"direction", vector_json(r.direction)},
                 {"value", r.value},
                 {"approximate", r.approximate}};
  if (r.certificate) {
    report["weights"] = r.certificate->weights;
  }
  char line[96];
  std::string text = "direction: " + to_string(r.direction) + "\n";
  std::snprintf(line, sizeof(line), "value: %.17g%s\n", r.value,
                r.approximate ? " (sampled, approximate)" : "");
  text += line;
  emit_report(opt, report, text);
  return kExitOk;
}

int run_info(const CommonOptions& opt) {
  const Document doc = load(opt);
  json report = {{"command", "info"},
                 {"kind", kind_name(doc.kind)},
                 {"dim", doc.dim},
                 {"format_version", doc.format_version}};
  std::string text = "kind: " + std::string(kind_name(doc.kind)) + "\n";
  text += "dim: " + std::to_string(doc.dim) + "\n";
  if (!doc.name.empty()) {
    text += "name: " + doc.name + "\n";
    report["name"] = doc.name;
  }
  char line[96];
  switch (doc.kind) {
    case Document::Kind::kDc: {
      const DCPair& p = doc.dc();
      report["plus_generators"] = p.plus().generators().size();
      report["minus_generators"] = p.minus().generators().size();
      text += "plus generators: " + std::to_string(p.plus().generators().size()) + "\n";
      text += "minus generators: " + std::to_string(p.minus().generators().size()) + "\n";
      const double m = lipschitz_constant(from_dc(p, opt.tol)).value;
      report["lipschitz"] = m;
      std::snprintf(line, sizeof(line), "lipschitz bound: %.17g\n", m);
      text += line;
      break;
    }
    case Document::Kind::kSaddle: {
      const SaddleFamily& F = doc.saddle();
      report["rows"] = F.rows();
      report["cols"] = F.cols();
      text += "rows: " + std::to_string(F.rows()) + "\n";
      text += "cols: " + std::to_string(F.cols()) + "\n";
      const double m = lipschitz_constant(F).value;
      report["lipschitz"] = m;
      std::snprintf(line, sizeof(line), "lipschitz bound: %.17g\n", m);
      text += line;
      break;
    }
    case Document::Kind::kFamilies: {
      const ApproximationFamilies& fams = doc.families();
      report["upper_members"] = fams.upper().size();
      report["lower_members"] = fams.lower().size();
      text += "upper members: " + std::to_string(fams.upper().size()) + "\n";
      text += "lower members: " + std::to_string(fams.lower().size()) + "\n";
      break;
    }
  }
  emit_report(opt, report, text);
  return kExitOk;
}

int run_reduce(const CommonOptions& opt) {
  const Document doc = load(opt);
  switch (doc.kind) {
    case Document::Kind::kSaddle: {
      SaddleFamily R = reduce(doc.saddle(),
                              sampler_for(opt, doc.saddle().dim()), opt.tol);
      emit_document(opt, make_saddle_document(std::move(R), doc.name, doc.description));
      return kExitOk;
    }
    case Document::Kind::kDc: {
      const DCPair& p = doc.dc();
      DCPair reduced(MaxOfLinear(minimal_generators(p.plus().generators(), opt.tol)),
                     MaxOfLinear(minimal_generators(p.minus().generators(), opt.tol)));
      emit_document(opt, make_dc_document(std::move(reduced), doc.name, doc.description));
      return kExitOk;
    }
    default:
      throw ParseError("reduce needs a dc or saddle document", "kind");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"saddle representations of positively homogeneous functions"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string at;
  int grid = 0;

  CLI::App* eval = app.add_subcommand("eval", "evaluate a document at a point");
  add_common(eval, &opt, false);
  eval->add_option("--at", at, "evaluation point, comma-separated coordinates");
  eval->add_option("--grid", grid, "dump an angular value table (dim 2 only)");

  CLI::App* build = app.add_subcommand(
      "build-saddle", "construct a saddle family from a dc or families document");
  add_common(build, &opt, false);
  build->add_option("-o,--output", opt.output, "output file (default stdout)");

  CLI::App* convert = app.add_subcommand(
      "convert-dc", "convert a saddle document to a dc document");
  add_common(convert, &opt, false);
  convert->add_option("-o,--output", opt.output, "output file (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "check the saddle property");
  add_common(verify, &opt, true);

  CLI::App* sign = app.add_subcommand(
      "sign", "dual nonnegativity/nonpositivity tests with certificates");
  add_common(sign, &opt, false);

  CLI::App* descent = app.add_subcommand("descent", "steepest descent direction");
  add_common(descent, &opt, false);

  CLI::App* ascent = app.add_subcommand("ascent", "steepest ascent direction");
  add_common(ascent, &opt, false);

  CLI::App* info = app.add_subcommand("info", "document summary");
  add_common(info, &opt, false);

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "drop redundant generators");
  add_common(reduce_cmd, &opt, true);
  reduce_cmd->add_option("-o,--output", opt.output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (eval->parsed()) {
      if (at.empty() && grid == 0) {
        std::cerr << "eval: either --at or --grid is required\n";
        return kExitInputError;
      }
      return run_eval(opt, at, grid);
    }
    if (build->parsed()) return run_build_saddle(opt);
    if (convert->parsed()) return run_convert_dc(opt);
    if (verify->parsed()) return run_verify(opt);
    if (sign->parsed()) return run_sign(opt);
    if (descent->parsed()) return run_direction(opt, DirectionMode::kDescent);
    if (ascent->parsed()) return run_direction(opt, DirectionMode::kAscent);
    if (info->parsed()) return run_info(opt);
    if (reduce_cmd->parsed()) return run_reduce(opt);
  } catch (const SandwichFailure& e) {
    std::cerr << "build-saddle: " << e.what() << "\n"
              << "separating direction: " << to_string(e.certificate().direction)
              << ", margin " << e.certificate().margin << "\n";
    return kExitRefuted;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
