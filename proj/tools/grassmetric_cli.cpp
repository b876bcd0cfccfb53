// Batch front end: reads vector tuples and subspace bases from CSV files,
// runs the library operations and emits JSON reports on stdout (or --out).
// Exit codes: 0 success/pass, 1 mathematical failure, 2 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "grassmetric/axioms.hpp"
#include "grassmetric/forms.hpp"
#include "grassmetric/grassmann.hpp"
#include "grassmetric/subspace.hpp"

namespace gm = grassmetric;
using nlohmann::json;

namespace {

constexpr int kExitMathFailure = 1;
constexpr int kExitInputError = 2;

gm::Matrix parse_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gm::ParseError("cannot open " + path);
  std::vector<gm::Vector> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (trimmed.empty() || trimmed.front() == '#') continue;
    gm::Vector row;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::size_t pos = 0;
      double v;
      try {
        v = std::stod(tok, &pos);
      } catch (const std::exception&) {
        throw gm::ParseError("non-numeric token '" + tok + "' in " + path);
      }
      while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
      if (pos != tok.size())
        throw gm::ParseError("non-numeric token '" + tok + "' in " + path);
      row.push_back(v);
    }
    if (row.empty()) throw gm::ParseError("empty row in " + path);
    if (!rows.empty() && row.size() != rows.front().size())
      throw gm::ParseError("ragged rows in " + path);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw gm::ParseError("empty file " + path);
  return gm::Matrix::from_rows(rows);
}

gm::VectorTuple tuple_from_csv(const std::string& path) {
  const gm::Matrix m = parse_matrix_csv(path);
  std::vector<gm::Vector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return gm::VectorTuple(std::move(rows));
}

gm::DiagonalNForm parse_diagonal_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gm::ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
    const auto m = j.at("m").get<std::size_t>();
    const auto n = j.at("n").get<std::size_t>();
    std::map<gm::IndexTuple, gm::Scalar> coeffs;
    for (const auto& e : j.at("C"))
      coeffs.emplace(gm::IndexTuple(e.at("idx").get<std::vector<int>>()),
                     e.at("value").get<double>());
    return gm::DiagonalNForm(m, n, std::move(coeffs));
  } catch (const json::exception& e) {
    throw gm::ParseError("bad coefficient table " + path + ": " + e.what());
  }
}

// "gram:standard" | "gram:<matrix.csv>" | "diagonal:<coeffs.json>"
gm::NInnerForm parse_form(const std::string& spec, std::size_t standard_dim,
                          double bias) {
  std::string kind = spec, arg;
  if (auto pos = spec.find(':'); pos != std::string::npos) {
    kind = spec.substr(0, pos);
    arg = spec.substr(pos + 1);
  }
  if (kind == "gram") {
    if (arg.empty() || arg == "standard") {
      if (standard_dim == 0) throw gm::ParseError("cannot infer ambient dimension");
      if (bias != 0.0)
        return gm::NInnerForm::biased(gm::Matrix::identity(standard_dim), bias);
      return gm::NInnerForm::gram_standard(standard_dim);
    }
    if (bias != 0.0) return gm::NInnerForm::biased(parse_matrix_csv(arg), bias);
    return gm::NInnerForm::gram(parse_matrix_csv(arg));
  }
  if (kind == "diagonal") {
    if (arg.empty()) throw gm::ParseError("diagonal form needs a coefficient file");
    return gm::NInnerForm::diagonal(parse_diagonal_json(arg));
  }
  throw gm::ParseError("unknown form spec '" + spec + "'");
}

void emit(const json& report, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw gm::ParseError("cannot write " + out_path);
    out << report.dump(2) << "\n";
  }
}

json matrix_json(const gm::Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

double default_tol() {
  if (const char* env = std::getenv("GRASSMETRIC_TOL")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      throw gm::ParseError("bad GRASSMETRIC_TOL value");
    }
  }
  return 1e-9;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"n-inner products, subspace decomposition and Grassmann metrics"};
  app.require_subcommand(1);

  std::string form_spec = "gram:standard";
  std::string left, right, basis_path, vector_path, matrix_path, out_path;
  std::vector<std::string> inputs;
  std::uint64_t seed = 0;
  long trials = 200;
  std::size_t m = 0, n = 0;
  double tol = -1.0;
  double bias = 0.0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--form", form_spec, "gram:standard | gram:FILE | diagonal:FILE");
    cmd->add_option("--out", out_path, "write the JSON report to a file");
    cmd->add_option("--tol", tol, "tolerance (default GRASSMETRIC_TOL or 1e-9)");
  };

  CLI::App* inner = app.add_subcommand("inner", "n-inner product of two tuples");
  inner->add_option("--left", left)->required();
  inner->add_option("--right", right)->required();
  add_common(inner);

  CLI::App* norm_cmd = app.add_subcommand("norm", "n-norm of a tuple");
  norm_cmd->add_option("--input", left)->required();
  add_common(norm_cmd);

  CLI::App* dec = app.add_subcommand("decompose", "orthogonal decomposition against a subspace");
  dec->add_option("--basis", basis_path)->required();
  dec->add_option("--vector", vector_path)->required();
  add_common(dec);

  CLI::App* angle = app.add_subcommand("angle", "angle between two subspaces");
  angle->add_option("--left", left)->required();
  angle->add_option("--right", right)->required();
  add_common(angle);

  CLI::App* distmat = app.add_subcommand("distmat", "pairwise Grassmann distance matrix");
  distmat->add_option("--inputs", inputs, "basis CSV files")->required()->expected(-1);
  add_common(distmat);

  CLI::App* comp = app.add_subcommand("complement", "orthogonal complement basis");
  comp->add_option("--basis", basis_path)->required();
  add_common(comp);

  CLI::App* dual = app.add_subcommand("dual-check", "primal vs dual subspace angle");
  dual->add_option("--left", left)->required();
  dual->add_option("--right", right)->required();
  add_common(dual);

  CLI::App* axioms_cmd = app.add_subcommand("check-axioms", "randomized axiom conformance");
  axioms_cmd->add_option("--m", m)->required();
  axioms_cmd->add_option("--n", n)->required();
  axioms_cmd->add_option("--seed", seed);
  axioms_cmd->add_option("--trials", trials);
  axioms_cmd->add_option("--bias", bias)->group("");  // test hook, hidden
  add_common(axioms_cmd);

  CLI::App* minor = app.add_subcommand("minor-check", "complementary-minor and Laplace identities");
  minor->add_option("--matrix", matrix_path)->required();
  minor->add_option("--n", n)->required();
  add_common(minor);

  CLI11_PARSE(app, argc, argv);

  try {
    if (tol < 0.0) tol = default_tol();

    if (inner->parsed()) {
      const gm::VectorTuple a = tuple_from_csv(left), b = tuple_from_csv(right);
      const gm::NInnerForm form = parse_form(form_spec, a.dim(), 0.0);
      emit({{"value", gm::n_inner(form, a, b)}}, out_path);
    } else if (norm_cmd->parsed()) {
      const gm::VectorTuple a = tuple_from_csv(left);
      const gm::NInnerForm form = parse_form(form_spec, a.dim(), 0.0);
      emit({{"value", gm::n_norm(form, a)}}, out_path);
    } else if (dec->parsed()) {
      const gm::Matrix b = parse_matrix_csv(basis_path);
      const gm::Matrix xm = parse_matrix_csv(vector_path);
      if (xm.rows() != 1) throw gm::ParseError("--vector file must hold one row");
      const gm::NInnerForm form = parse_form(form_spec, b.cols(), 0.0);
      const gm::Subspace s(form, b);
      const gm::Decomposition d = gm::decompose(xm.row(0), s);
      emit({{"lambdas", d.lambdas},
            {"residual", d.residual},
            {"projection", d.projection()},
            {"residual_orthogonal", gm::is_orthogonal_to_subspace(d.residual, s, tol)}},
           out_path);
    } else if (angle->parsed()) {
      const gm::Matrix l = parse_matrix_csv(left), r = parse_matrix_csv(right);
      const gm::NInnerForm form = parse_form(form_spec, l.cols(), 0.0);
      const gm::AngleResult res =
          gm::subspace_angle(gm::SubspacePair({form, l}, {form, r}));
      emit({{"cosine", res.cosine},
            {"angle_oriented", res.angle_oriented},
            {"angle_unoriented", res.angle_unoriented}},
           out_path);
    } else if (distmat->parsed()) {
      std::vector<gm::Subspace> subs;
      std::optional<gm::NInnerForm> form;
      for (const std::string& p : inputs) {
        const gm::Matrix b = parse_matrix_csv(p);
        if (!form) form = parse_form(form_spec, b.cols(), 0.0);
        subs.emplace_back(*form, b);
      }
      emit({{"matrix", matrix_json(gm::distance_matrix(subs))}}, out_path);
    } else if (comp->parsed()) {
      const gm::Matrix b = parse_matrix_csv(basis_path);
      const gm::NInnerForm form = parse_form(form_spec, b.cols(), 0.0);
      emit({{"basis", matrix_json(gm::orthogonal_complement({form, b}).basis())}},
           out_path);
    } else if (dual->parsed()) {
      const gm::Matrix l = parse_matrix_csv(left), r = parse_matrix_csv(right);
      const gm::NInnerForm form = parse_form(form_spec, l.cols(), 0.0);
      const gm::DualAngleReport res =
          gm::dual_angle_check(gm::SubspacePair({form, l}, {form, r}));
      emit({{"primal", res.primal}, {"dual", res.dual}, {"gap", res.gap}}, out_path);
    } else if (axioms_cmd->parsed()) {
      const gm::NInnerForm form = parse_form(form_spec, m, bias);
      gm::axioms::SampleConfig cfg;
      cfg.seed = seed;
      cfg.trials = trials;
      cfg.m = m;
      cfg.n = n;
      cfg.tol = std::max(tol, 1e-12);
      const auto reports = gm::axioms::check_all(form, cfg);
      json jr = json::array();
      for (const auto& r : reports) jr.push_back(r.to_json());
      const bool ok = gm::axioms::all_pass(reports);
      emit({{"reports", jr}, {"all_pass", ok}}, out_path);
      if (!ok) return kExitMathFailure;
    } else if (minor->parsed()) {
      const gm::Matrix a = parse_matrix_csv(matrix_path);
      double max_residual = 0.0;
      for (const gm::IndexTuple& i : gm::IndexTuple::all(a.rows(), n))
        max_residual = std::max(max_residual, gm::complementary_minor(a, i).residual);
      const double laplace = gm::laplace_identity_check(a, n);
      const bool ok = max_residual <= tol * 10 && laplace <= tol * 10;
      emit({{"max_minor_residual", max_residual},
            {"laplace_residual", laplace},
            {"pass", ok}},
           out_path);
      if (!ok) return kExitMathFailure;
    }
  } catch (const gm::NegativeSquare& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const gm::InequalityViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const gm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return 0;
}
