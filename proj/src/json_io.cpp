#include "ctkit/json_io.hpp"

#include "ctkit/errors.hpp"

namespace ctkit {

namespace {

const Json& field(const Json& j, const char* key, const std::string& location) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(location, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_from_json(const Json& j, const std::string& location) {
  if (!j.is_number_integer())
    throw ParseError(location, "expected an integer");
  return j.get<int>();
}

}  // namespace

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j, const std::string& location) {
  if (!j.is_string()) throw ParseError(location, "expected a rational string");
  auto r = Rational::parse(j.get<std::string>());
  if (!r) throw ParseError(location, "malformed rational \"" + j.get<std::string>() + "\"");
  return *r;
}

namespace {

Json endpoint_to_json(const Endpoint& e) {
  return Json{{"v", e.value.str()}, {"closed", e.closed}};
}

Endpoint endpoint_from_json(const Json& j, const std::string& location) {
  Endpoint e;
  e.value = rational_from_json(field(j, "v", location), location + ".v");
  const Json& c = field(j, "closed", location);
  if (!c.is_boolean()) throw ParseError(location + ".closed", "expected a boolean");
  e.closed = c.get<bool>();
  return e;
}

Json piece_to_json(const IntervalPiece& p) {
  return Json{{"left", endpoint_to_json(p.left)},
              {"right", endpoint_to_json(p.right)}};
}

IntervalPiece piece_from_json(const Json& j, const std::string& location) {
  IntervalPiece p;
  p.left = endpoint_from_json(field(j, "left", location), location + ".left");
  p.right = endpoint_from_json(field(j, "right", location), location + ".right");
  try {
    p.validate();
  } catch (const DomainError& e) {
    throw ParseError(location, e.what());
  }
  return p;
}

}  // namespace

Json to_json(const OpenSet& s) {
  Json pieces = Json::array();
  for (const auto& p : s.pieces()) pieces.push_back(piece_to_json(p));
  return Json{{"pieces", pieces}};
}

OpenSet openset_from_json(const Json& j, const std::string& location) {
  const Json& arr = field(j, "pieces", location);
  if (!arr.is_array()) throw ParseError(location + ".pieces", "expected an array");
  std::vector<IntervalPiece> pieces;
  for (size_t i = 0; i < arr.size(); ++i)
    pieces.push_back(piece_from_json(
        arr[i], location + ".pieces[" + std::to_string(i) + "]"));
  return OpenSet::normalize(std::move(pieces));
}

Json to_json(const StepFunction& f) {
  Json bp = Json::array();
  for (const auto& t : f.breakpoints()) bp.push_back(t.str());
  return Json{{"breakpoints", bp},
              {"interval_values", f.interval_values()},
              {"point_values", f.point_values()}};
}

StepFunction step_function_from_json(const Json& j) {
  const Json& bp = field(j, "breakpoints", "step_function");
  const Json& iv = field(j, "interval_values", "step_function");
  const Json& pv = field(j, "point_values", "step_function");
  if (!bp.is_array() || !iv.is_array() || !pv.is_array())
    throw ParseError("step_function", "breakpoints/values must be arrays");
  std::vector<Rational> breakpoints;
  for (size_t i = 0; i < bp.size(); ++i)
    breakpoints.push_back(
        rational_from_json(bp[i], "breakpoints[" + std::to_string(i) + "]"));
  std::vector<int> interval_values, point_values;
  for (size_t i = 0; i < iv.size(); ++i)
    interval_values.push_back(
        int_from_json(iv[i], "interval_values[" + std::to_string(i) + "]"));
  for (size_t i = 0; i < pv.size(); ++i)
    point_values.push_back(
        int_from_json(pv[i], "point_values[" + std::to_string(i) + "]"));
  try {
    return StepFunction(std::move(breakpoints), std::move(interval_values),
                        std::move(point_values));
  } catch (const std::invalid_argument& e) {
    throw ParseError("step_function", e.what());
  }
}

Json to_json(const NestedLayers& layers) {
  Json arr = Json::array();
  for (const auto& l : layers.layers) arr.push_back(to_json(l));
  return Json{{"layers", arr}};
}

NestedLayers layers_from_json(const Json& j) {
  const Json& arr = field(j, "layers", "layers");
  if (!arr.is_array()) throw ParseError("layers", "expected an array");
  NestedLayers out;
  for (size_t i = 0; i < arr.size(); ++i)
    out.layers.push_back(
        openset_from_json(arr[i], "layers[" + std::to_string(i) + "]"));
  return out;
}

namespace {

const char* bump_form_name(BumpForm f) {
  switch (f) {
    case BumpForm::interior: return "interior";
    case BumpForm::left_boundary: return "left_boundary";
    case BumpForm::right_boundary: return "right_boundary";
    case BumpForm::identity: return "identity";
  }
  return "interior";
}

}  // namespace

Json to_json(const Presentation& pres) {
  Json gens = Json::array();
  for (size_t g = 0; g < pres.generators.size(); ++g) {
    const GenSymbol& sym = pres.generators[g];
    if (sym.kind == GenSymbol::Kind::P) {
      gens.push_back(Json{{"kind", "P"}});
    } else {
      gens.push_back(Json{{"kind", "X"},
                          {"level", sym.level},
                          {"component", sym.component},
                          {"bump",
                           Json{{"form", bump_form_name(pres.bumps[g].form)},
                                {"support", piece_to_json(pres.bumps[g].support)}}}});
    }
  }
  Json rels = Json::array();
  for (const auto& rel : pres.relations) {
    const char* fam = rel.family == RelationFamily::R1
                          ? "R1"
                          : (rel.family == RelationFamily::R2 ? "R2" : "R3");
    rels.push_back(Json{{"family", fam}, {"text", rel.text}});
  }
  Json sets = Json::array();
  for (const auto& s : pres.level_sets) sets.push_back(to_json(s));
  return Json{{"levels", pres.n_levels},
              {"level_sets", sets},
              {"component_counts", pres.component_counts},
              {"generators", gens},
              {"relations", rels}};
}

Json to_json(const BlockModel& model) {
  Json rows = Json::array();
  for (int i = 1; i <= model.n; ++i) {
    Json row = Json::array();
    for (int j = 1; j <= model.n; ++j) row.push_back(model.entry_level(i, j));
    rows.push_back(row);
  }
  Json sets = Json::array();
  for (const auto& s : model.level_sets) sets.push_back(to_json(s));
  return Json{{"n", model.n}, {"entry_levels", rows}, {"level_sets", sets}};
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, const std::string& location) {
  if (!j.is_array() || j.empty())
    throw ParseError(location, "expected a nonempty matrix array");
  size_t rows = j.size();
  size_t cols = j[0].is_array() ? j[0].size() : 0;
  Matrix m(rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw ParseError(location + "[" + std::to_string(r) + "]",
                       "ragged matrix row");
    for (size_t c = 0; c < cols; ++c) {
      const Json& cell = j[r][c];
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
          !cell[1].is_number())
        throw ParseError(location + "[" + std::to_string(r) + "][" +
                             std::to_string(c) + "]",
                         "expected [re, im]");
      m(long(r), long(c)) =
          std::complex<double>(cell[0].get<double>(), cell[1].get<double>());
    }
  }
  return m;
}

Json to_json(const MatrixPath& path) {
  Json grid = Json::array();
  for (const auto& t : path.grid) grid.push_back(t.str());
  Json mats = Json::array();
  for (const auto& m : path.entries) mats.push_back(matrix_to_json(m));
  return Json{{"n", path.n}, {"grid", grid}, {"matrices", mats}};
}

MatrixPath path_from_json(const Json& j) {
  MatrixPath path;
  path.n = int_from_json(field(j, "n", "path"), "path.n");
  const Json& grid = field(j, "grid", "path");
  const Json& mats = field(j, "matrices", "path");
  if (!grid.is_array() || !mats.is_array())
    throw ParseError("path", "grid/matrices must be arrays");
  for (size_t i = 0; i < grid.size(); ++i)
    path.grid.push_back(
        rational_from_json(grid[i], "path.grid[" + std::to_string(i) + "]"));
  for (size_t i = 0; i < mats.size(); ++i)
    path.entries.push_back(matrix_from_json(
        mats[i], "path.matrices[" + std::to_string(i) + "]"));
  try {
    path.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError("path", e.what());
  }
  return path;
}

Json to_json(const RepairReport& report) {
  return Json{{"input_defect", report.input_defect},
              {"output_defect", report.output_defect},
              {"displacement", report.displacement}};
}

Json to_json(const ExtRational& x) { return x.str(); }

ExtRational ext_rational_from_json(const Json& j, const std::string& location) {
  if (!j.is_string()) throw ParseError(location, "expected a rational or \"inf\"");
  std::string s = j.get<std::string>();
  if (s == "inf") return ExtRational::inf();
  auto r = Rational::parse(s);
  if (!r) throw ParseError(location, "malformed value \"" + s + "\"");
  return ExtRational::finite(*r);
}

Json to_json(const InvariantProfile& inv) {
  Json primes;
  if (inv.group.all_primes()) {
    primes = "all";
  } else {
    primes = Json::object();
    for (const auto& [p, exp] : inv.group.exponents())
      primes[std::to_string(p)] = exp.infinite ? Json("inf") : Json(exp.e);
  }
  Json traces = Json::array();
  for (const auto& c : inv.traces.c) traces.push_back(c.str());
  Json norm = Json::array();
  for (const auto& f : inv.norm_map.f) norm.push_back(f.str());
  Json out{{"group", Json{{"primes", primes}}},
           {"traces", traces},
           {"norm_map", norm}};
  if (!inv.simplex.labels.empty()) out["labels"] = inv.simplex.labels;
  return out;
}

InvariantProfile profile_from_json(const Json& j) {
  InvariantProfile inv;
  const Json& group = field(j, "group", "profile");
  const Json& primes = field(group, "primes", "profile.group");
  if (primes.is_string() && primes.get<std::string>() == "all") {
    inv.group = DimensionGroupQ::rationals();
  } else if (primes.is_object()) {
    for (auto it = primes.begin(); it != primes.end(); ++it) {
      long long p = 0;
      try {
        p = std::stoll(it.key());
      } catch (const std::exception&) {
        throw ParseError("profile.group.primes", "bad prime \"" + it.key() + "\"");
      }
      DimensionGroupQ::Exponent e;
      if (it.value().is_string() && it.value().get<std::string>() == "inf")
        e.infinite = true;
      else if (it.value().is_number_integer())
        e.e = it.value().get<int>();
      else
        throw ParseError("profile.group.primes." + it.key(),
                         "expected an integer or \"inf\"");
      try {
        inv.group.set_exponent(p, e);
      } catch (const std::invalid_argument& ex) {
        throw ParseError("profile.group.primes." + it.key(), ex.what());
      }
    }
  } else {
    throw ParseError("profile.group.primes", "expected an object or \"all\"");
  }
  const Json& traces = field(j, "traces", "profile");
  const Json& norm = field(j, "norm_map", "profile");
  if (!traces.is_array() || !norm.is_array())
    throw ParseError("profile", "traces/norm_map must be arrays");
  for (size_t i = 0; i < traces.size(); ++i)
    inv.traces.c.push_back(
        rational_from_json(traces[i], "traces[" + std::to_string(i) + "]"));
  for (size_t i = 0; i < norm.size(); ++i)
    inv.norm_map.f.push_back(
        ext_rational_from_json(norm[i], "norm_map[" + std::to_string(i) + "]"));
  inv.simplex.m = int(inv.traces.c.size());
  if (j.contains("labels") && j["labels"].is_array())
    for (const auto& l : j["labels"]) inv.simplex.labels.push_back(l.get<std::string>());
  try {
    inv.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError("profile", e.what());
  }
  return inv;
}

ScalarFunction scalar_function_from_json(const Json& j) {
  ScalarFunction f;
  if (j.contains("form")) {
    BumpFunction b;
    std::string form = field(j, "form", "f").get<std::string>();
    if (form == "interior")
      b.form = BumpForm::interior;
    else if (form == "left_boundary")
      b.form = BumpForm::left_boundary;
    else if (form == "right_boundary")
      b.form = BumpForm::right_boundary;
    else if (form == "identity")
      b.form = BumpForm::identity;
    else
      throw ParseError("f.form", "unknown bump form \"" + form + "\"");
    b.support = piece_from_json(field(j, "support", "f"), "f.support");
    f.bump = b;
    return f;
  }
  if (j.contains("samples")) {
    const Json& s = j["samples"];
    const Json& grid = field(s, "grid", "f.samples");
    const Json& values = field(s, "values", "f.samples");
    if (!grid.is_array() || !values.is_array() || grid.size() != values.size())
      throw ParseError("f.samples", "grid/values must be arrays of equal size");
    for (size_t i = 0; i < grid.size(); ++i) {
      if (grid[i].is_number())
        f.sample_grid.push_back(grid[i].get<double>());
      else
        f.sample_grid.push_back(
            rational_from_json(grid[i],
                               "f.samples.grid[" + std::to_string(i) + "]")
                .to_double());
      if (!values[i].is_number())
        throw ParseError("f.samples.values[" + std::to_string(i) + "]",
                         "expected a number");
      f.sample_values.push_back(values[i].get<double>());
    }
    return f;
  }
  throw ParseError("f", "expected a bump descriptor or samples");
}

Json to_json(const ScalarFunction& f) {
  if (f.bump)
    return Json{{"form", bump_form_name(f.bump->form)},
                {"support", piece_to_json(f.bump->support)}};
  Json grid = Json::array();
  Json values = Json::array();
  for (size_t i = 0; i < f.sample_grid.size(); ++i) {
    grid.push_back(f.sample_grid[i]);
    values.push_back(f.sample_values[i]);
  }
  return Json{{"samples", Json{{"grid", grid}, {"values", values}}}};
}

Json to_json(const AIReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries)
    entries.push_back(Json{{"j", e.j}, {"sup", e.sup.str()}, {"f", e.f.str()}});
  return Json{{"ai", report.ai}, {"entries", entries}};
}

}  // namespace ctkit
