// Command-line front end: parse JSON inputs, dispatch to the library, and
// render text/JSON reports or the classification diagram as SVG.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "ctkit/dimension_functions.hpp"
#include "ctkit/elliott.hpp"
#include "ctkit/errors.hpp"
#include "ctkit/json_io.hpp"
#include "ctkit/presentation.hpp"
#include "ctkit/stability.hpp"
#include "ctkit/svg.hpp"

namespace {

using ctkit::Json;

struct Options {
  std::string input;
  std::string output;
  std::string format = "text";
  double tol = 0.0;  // 0 = use the per-operation default
};

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ctkit::ParseError(path, "cannot open input file");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw ctkit::ParseError(path, e.what());
  }
  return j;
}

void emit(const Options& opt, const std::string& body) {
  if (opt.output.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw ctkit::ParseError(opt.output, "cannot open output file");
  out << body;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int cmd_check(const Options& opt) {
  ctkit::StepFunction f = ctkit::step_function_from_json(load_json(opt.input));
  auto witness = ctkit::lsc_witness(f);
  if (!witness) {
    emit(opt, opt.format == "json" ? dump(Json{{"lsc", true}}) : "lsc: true\n");
    return 0;
  }
  if (opt.format == "json") {
    emit(opt, dump(Json{{"lsc", false},
                        {"witness", Json{{"point", witness->point.str()},
                                         {"value", witness->value_at_point},
                                         {"liminf", witness->liminf}}}}));
  } else {
    emit(opt, "lsc: false\nwitness: t=" + witness->point.str() + " value=" +
                  std::to_string(witness->value_at_point) + " liminf=" +
                  std::to_string(witness->liminf) + "\n");
  }
  return 2;
}

int cmd_decompose(const Options& opt) {
  ctkit::StepFunction f = ctkit::step_function_from_json(load_json(opt.input));
  ctkit::NestedLayers layers = ctkit::decompose(f);
  if (opt.format == "json") {
    emit(opt, dump(ctkit::to_json(layers)));
  } else {
    std::string body;
    for (size_t j = 0; j < layers.layers.size(); ++j)
      body += "L_" + std::to_string(j + 1) + " = " + layers.layers[j].str() + "\n";
    if (layers.layers.empty()) body = "L = (none; the zero function)\n";
    emit(opt, body);
  }
  return 0;
}

ctkit::NestedLayers layers_from_input(const Json& j) {
  if (j.contains("layers")) return ctkit::layers_from_json(j);
  return ctkit::decompose(ctkit::step_function_from_json(j));
}

int cmd_present(const Options& opt) {
  ctkit::NestedLayers layers = layers_from_input(load_json(opt.input));
  ctkit::Presentation pres = ctkit::emit_presentation(layers);
  if (opt.format == "json")
    emit(opt, dump(ctkit::to_json(pres)));
  else
    emit(opt, ctkit::render_text(pres) + "block model:\n" +
                  ctkit::render_text(ctkit::model_description(layers)));
  return 0;
}

int cmd_classify(const Options& opt) {
  ctkit::InvariantProfile inv = ctkit::profile_from_json(load_json(opt.input));
  ctkit::AIReport report = ctkit::is_AI(inv);
  if (opt.format == "json") {
    emit(opt, dump(ctkit::to_json(report)));
  } else {
    std::string body = std::string("AI: ") + (report.ai ? "true" : "false") + "\n";
    for (const auto& e : report.entries)
      body += "j=" + std::to_string(e.j + 1) + " sup=" + e.sup.str() +
              " f=" + e.f.str() + "\n";
    emit(opt, body);
  }
  return 0;
}

int cmd_range(const Options& opt) {
  Json j = load_json(opt.input);
  ctkit::InvariantProfile inv =
      ctkit::profile_from_json(j.contains("profile") ? j.at("profile") : j);
  std::vector<ctkit::Rational> candidates;
  if (j.contains("candidates")) {
    const Json& arr = j.at("candidates");
    if (!arr.is_array())
      throw ctkit::ParseError("candidates", "expected an array");
    for (size_t i = 0; i < arr.size(); ++i)
      candidates.push_back(ctkit::rational_from_json(
          arr[i], "candidates[" + std::to_string(i) + "]"));
  }
  auto members = ctkit::scale_from_norm_map(inv, candidates);
  Json sups = Json::array();
  for (int jj = 0; jj < inv.simplex.m; ++jj)
    sups.push_back(ctkit::range_sup(inv, jj).str());
  if (opt.format == "json") {
    Json mem = Json::array();
    for (const auto& x : members) mem.push_back(x.str());
    emit(opt, dump(Json{{"sups", sups}, {"members", mem}}));
  } else {
    std::string body = "sups:";
    for (const auto& s : sups) body += " " + s.get<std::string>();
    body += "\nmembers:";
    for (const auto& x : members) body += " " + x.str();
    body += "\n";
    emit(opt, body);
  }
  return 0;
}

int cmd_repair(const Options& opt) {
  Json j = load_json(opt.input);
  std::string kind = j.contains("kind") ? j.at("kind").get<std::string>() : "";
  double delta = j.contains("delta") ? j.at("delta").get<double>() : 1e-3;
  if (opt.tol > 0.0) delta = opt.tol;
  Json out;
  if (kind == "r1r2") {
    const Json& arr = j.at("xs");
    std::vector<ctkit::Matrix> xs;
    for (size_t i = 0; i < arr.size(); ++i)
      xs.push_back(ctkit::matrix_from_json(arr[i], "xs[" + std::to_string(i) + "]"));
    ctkit::Matrix p = ctkit::matrix_from_json(j.at("p"), "p");
    auto rep = ctkit::repair_r1r2(xs, p, delta);
    Json xout = Json::array();
    for (const auto& m : rep.xs) xout.push_back(ctkit::matrix_to_json(m));
    out = Json{{"report", ctkit::to_json(rep.report)},
               {"p", ctkit::matrix_to_json(rep.p)},
               {"xs", xout}};
  } else if (kind == "xxstar") {
    ctkit::Matrix x = ctkit::matrix_from_json(j.at("x"), "x");
    ctkit::Matrix y = ctkit::matrix_from_json(j.at("y"), "y");
    ctkit::ScalarFunction f = ctkit::scalar_function_from_json(j.at("f"));
    auto rep = ctkit::repair_xxstar(x, y, f, delta);
    out = Json{{"report", ctkit::to_json(rep.report)},
               {"x", ctkit::matrix_to_json(rep.x)},
               {"y", ctkit::matrix_to_json(rep.y)}};
  } else {
    throw ctkit::ParseError("kind", "expected \"r1r2\" or \"xxstar\"");
  }
  if (opt.format == "json") {
    emit(opt, dump(out));
  } else {
    const Json& r = out.at("report");
    emit(opt, "input_defect: " + std::to_string(r.at("input_defect").get<double>()) +
                  "\noutput_defect: " + std::to_string(r.at("output_defect").get<double>()) +
                  "\ndisplacement: " + std::to_string(r.at("displacement").get<double>()) + "\n");
  }
  return 0;
}

int cmd_trivialize(const Options& opt) {
  Json j = load_json(opt.input);
  ctkit::MatrixPath path = ctkit::path_from_json(j.contains("path") ? j.at("path") : j);
  int rank = j.contains("rank") ? j.at("rank").get<int>() : 1;
  ctkit::Tolerances tol;
  if (opt.tol > 0.0) tol.projection_check = opt.tol;
  auto triv = ctkit::trivialize_path(path, rank, tol);
  if (opt.format == "json") {
    emit(opt, dump(Json{{"p", ctkit::matrix_to_json(triv.p)},
                        {"path", ctkit::to_json(triv.isometries)},
                        {"vvstar_defect", triv.max_vvstar_defect},
                        {"vstarv_defect", triv.max_vstarv_defect}}));
  } else {
    emit(opt, "vvstar_defect: " + std::to_string(triv.max_vvstar_defect) +
                  "\nvstarv_defect: " + std::to_string(triv.max_vstarv_defect) + "\n");
  }
  return 0;
}

int cmd_diagram(const Options& opt) {
  if (opt.format == "json")
    throw ctkit::ParseError("--format", "diagram output is svg");
  Json j = load_json(opt.input);
  ctkit::DiagramSpec spec;
  const Json& profiles = j.contains("profiles") ? j.at("profiles") : Json::array();
  for (const auto& p : profiles)
    spec.profiles.push_back(ctkit::profile_from_json(p));
  if (j.contains("highlight"))
    for (const auto& h : j.at("highlight")) spec.highlight.push_back(h.get<int>());
  emit(opt, ctkit::diagram_svg(spec));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toolkit for integer step functions on [0,1], their layer "
               "decompositions and finite presentations, numerical relation "
               "repair, and trace-invariant classification"};
  app.require_subcommand(1);

  Options opt;
  std::string subname;
  const std::vector<std::pair<std::string, std::string>> subs = {
      {"check", "Check lower semicontinuity of a step function"},
      {"decompose", "Canonical nested layer decomposition"},
      {"present", "Emit the finite presentation of the building block"},
      {"classify", "AI versus stably-AI decision for an invariant profile"},
      {"range", "Dimension-range sups and membership filter"},
      {"repair", "Numerical relation repair (r1r2 or xxstar instances)"},
      {"trivialize", "Trivialize a constant-rank projection path"},
      {"diagram", "Render the two-trace classification picture as SVG"},
  };
  for (const auto& [name, desc] : subs) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--input", opt.input, "Input JSON file")->required();
    sub->add_option("--output", opt.output, "Output file (default stdout)");
    sub->add_option("--format", opt.format, "text|json|svg");
    sub->add_option("--tol", opt.tol, "Tolerance override (positive)");
    sub->callback([&subname, name = name]() { subname = name; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (opt.tol < 0.0)
      throw ctkit::ParseError("--tol", "tolerance override must be positive");
    if (opt.format != "text" && opt.format != "json" && opt.format != "svg")
      throw ctkit::ParseError("--format", "expected text, json, or svg");
    if (opt.format == "svg" && subname != "diagram")
      throw ctkit::ParseError("--format", "svg output is only for diagram");
    if (subname == "check") return cmd_check(opt);
    if (subname == "decompose") return cmd_decompose(opt);
    if (subname == "present") return cmd_present(opt);
    if (subname == "classify") return cmd_classify(opt);
    if (subname == "range") return cmd_range(opt);
    if (subname == "repair") return cmd_repair(opt);
    if (subname == "trivialize") return cmd_trivialize(opt);
    if (subname == "diagram") return cmd_diagram(opt);
    std::cerr << "error: unknown subcommand\n";
    return 1;
  } catch (const ctkit::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ctkit::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    std::cerr << "error: parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
