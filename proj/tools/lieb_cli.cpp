// Command-line surface over the lieb library: exact Lie algebra structure,
// Grassmann invariants, gradations, and Yang-Baxter certification with
// machine-readable output.

#include "lieb/catalog.hpp"
#include "lieb/error.hpp"
#include "lieb/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <functional>
#include <unistd.h>

using namespace lieb;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_math = 1;  // mathematical failure (failed expectation, failed fixture)
constexpr int exit_input = 2; // usage or input errors

struct Options {
  std::string algebra;   // catalog:NAME[:param] or a file path
  std::string gradation; // file path; empty -> catalog gradation by index
  int gradation_index = 0;
  std::string format = "json";
};

bool color_enabled() {
  const char* env = std::getenv("LIEB_COLOR");
  std::string mode = env ? env : "auto";
  if (mode == "never") return false;
  return isatty(fileno(stdout));
}

std::string paint(const std::string& s, bool good) {
  if (!color_enabled()) return s;
  return (good ? "\033[32m" : "\033[31m") + s + "\033[0m";
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

struct LoadedAlgebra {
  CatalogAlgebra cat;
  bool from_catalog = false;
  std::string catalog_name;
  std::vector<Rational> params;
};

LoadedAlgebra load_algebra_ref(const std::string& ref) {
  LoadedAlgebra out;
  if (ref.rfind("catalog:", 0) == 0) {
    std::string rest = ref.substr(8);
    size_t colon = rest.find(':');
    out.catalog_name = rest.substr(0, colon == std::string::npos ? rest.size() : colon);
    if (colon != std::string::npos)
      out.params.push_back(Rational::from_string(rest.substr(colon + 1)));
    out.cat = catalog_algebra(out.catalog_name, out.params);
    out.from_catalog = true;
    return out;
  }
  out.cat.algebra = LieAlgebra::create(algebra_doc_from_json(read_json_file(ref)));
  return out;
}

Gradation pick_gradation(const LoadedAlgebra& la, const Options& opt) {
  if (!opt.gradation.empty())
    return load_gradation(*la.cat.algebra, gradation_doc_from_json(read_json_file(opt.gradation)));
  if (!la.from_catalog || la.cat.gradations.empty())
    fail(errc::bad_parameter, "no gradation given; pass --gradation FILE");
  int idx = opt.gradation_index;
  if (idx < 0 || idx >= static_cast<int>(la.cat.gradations.size()))
    fail(errc::bad_parameter, "gradation index out of range");
  return la.cat.gradations[idx];
}

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string subspace_text(const LieAlgebra& L, int grade, const Subspace& s) {
  std::ostringstream out;
  out << "dim " << s.dim() << "\n";
  for (int r = 0; r < s.dim(); ++r) {
    MultiVector v = MultiVector::from_grade_vector(L.ptr(), grade, s.basis().row(r));
    out << "  " << v.str() << "\n";
  }
  return out.str();
}

json report_series(const std::vector<Subspace>& chain) {
  json arr = json::array();
  for (const auto& s : chain) arr.push_back(subspace_to_json(s));
  return arr;
}

int cmd_regress(const LoadedAlgebra& la, const Options& opt) {
  if (!la.from_catalog) fail(errc::bad_parameter, "regress needs a catalog algebra");
  auto checks = run_fixture_checks(la.catalog_name, la.params);
  bool all = true;
  json results = json::array();
  for (const auto& c : checks) {
    all = all && c.pass;
    json r;
    r["check"] = c.label;
    r["pass"] = c.pass;
    if (!c.detail.empty()) r["detail"] = c.detail;
    results.push_back(r);
    if (opt.format == "text")
      std::cout << (c.pass ? paint("PASS", true) : paint("FAIL", false)) << " " << c.label << "\n";
  }
  if (opt.format == "json") {
    json j;
    j["algebra"] = la.catalog_name;
    j["pass"] = all;
    j["results"] = results;
    std::cout << j.dump(2) << "\n";
  }
  return all ? exit_ok : exit_math;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computer algebra for Lie bialgebra structure and Yang-Baxter equations"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text"}));

  auto add_algebra_opt = [&](CLI::App* cmd) {
    cmd->add_option("--algebra,-a", opt.algebra, "catalog:NAME[:param] or a JSON file")->required();
  };

  std::string expr, ideal_expr;
  int grade = 1, arity = 2, target_grade = 2;
  bool sym = false, antisym = false;
  std::string expect, form_file;

  auto* check = app.add_subcommand("check", "load an algebra and verify the Jacobi identity");
  add_algebra_opt(check);

  auto* killing = app.add_subcommand("killing", "Killing form and its grade extensions");
  add_algebra_opt(killing);
  killing->add_option("--grade", grade, "extension grade (default 1)");

  auto* invariants = app.add_subcommand("invariants", "invariant multivectors of a grade");
  add_algebra_opt(invariants);
  invariants->add_option("--grade", grade)->required();

  auto* forms = app.add_subcommand("forms", "solve for invariant multilinear forms");
  add_algebra_opt(forms);
  forms->add_option("--grade", grade)->required();
  forms->add_option("--arity", arity)->required();
  forms->add_flag("--sym", sym, "restrict to symmetric forms");
  forms->add_flag("--antisym", antisym, "restrict to antisymmetric forms");

  auto* extend = app.add_subcommand("extend-form", "extend a bilinear form on g to a wedge grade");
  add_algebra_opt(extend);
  extend->add_option("--form", form_file, "JSON file with {\"matrix\": [[..]]}")->required();
  extend->add_option("--grade", target_grade)->required();

  auto* gradation = app.add_subcommand("gradation", "gradation tools");
  add_algebra_opt(gradation);
  gradation->add_option("--gradation", opt.gradation, "gradation JSON file");
  gradation->add_option("--index", opt.gradation_index, "catalog gradation index (default 0)");
  auto* gverify = gradation->add_subcommand("verify", "validate closure");
  auto* gdecomp = gradation->add_subcommand("decompose", "induced decomposition of a grade");
  gdecomp->add_option("--grade", grade)->required();
  auto* greport = gradation->add_subcommand("report", "root flag, limit degrees, compatibility");
  gradation->require_subcommand(1);

  auto* ybe = app.add_subcommand("ybe", "Yang-Baxter machinery");
  add_algebra_opt(ybe);
  auto* residual = ybe->add_subcommand("residual", "Schouten square of an r-matrix");
  residual->add_option("-r,--r", expr, "bivector expression")->required();
  auto* certify = ybe->add_subcommand("certify", "certify an r-matrix");
  certify->add_option("-r,--r", expr, "bivector expression")->required();
  certify->add_option("--expect", expect, "pass|fail")->check(CLI::IsMember({"pass", "fail"}));
  auto* cocomm = ybe->add_subcommand("cocommutator", "matrix of v -> [v, r]");
  cocomm->add_option("-r,--r", expr, "bivector expression")->required();
  auto* grid = ybe->add_subcommand("grid", "evaluate residuals over an integer grid");
  std::string grid_vars;
  int grid_range = 2;
  grid->add_option("--vars", grid_vars,
                   "comma-separated bivector expressions (default: all basis bivectors)");
  grid->add_option("--range", grid_range, "coordinates run over [-range, range] (default 2)");
  ybe->require_subcommand(1);

  auto* orbit = app.add_subcommand("orbit-dim", "inner orbit dimension through a multivector");
  add_algebra_opt(orbit);
  orbit->add_option("-w,--w", expr, "multivector expression")->required();

  auto* reduced = app.add_subcommand("reduced", "reduced space of a grade");
  add_algebra_opt(reduced);
  reduced->add_option("--grade", grade)->required();

  auto* derivations = app.add_subcommand("derivations", "derivation algebra and inner part");
  add_algebra_opt(derivations);

  auto* series = app.add_subcommand("series", "center, series, structural flags");
  add_algebra_opt(series);

  auto* bridge = app.add_subcommand("bridge", "traceless ideal <-> invariant wedge");
  add_algebra_opt(bridge);
  bridge->add_option("--ideal", ideal_expr, "semicolon-separated grade-1 expressions");
  bridge->add_option("--invariant", expr, "homogeneous multivector expression");

  auto* catalog = app.add_subcommand("catalog", "built-in algebra corpus");
  auto* clist = catalog->add_subcommand("list", "list entries");
  auto* cget = catalog->add_subcommand("get", "dump an entry");
  std::string cname, cparam;
  cget->add_option("name", cname)->required();
  cget->add_option("--param", cparam, "rational parameter");
  auto* cfix = catalog->add_subcommand("fixtures", "run and dump fixture checks");
  cfix->add_option("name", cname)->required();
  cfix->add_option("--param", cparam, "rational parameter");
  catalog->require_subcommand(1);

  auto* regress = app.add_subcommand("regress", "replay every fixture of a catalog entry");
  std::string rname;
  regress->add_option("name", rname)->required();
  regress->add_option("--param", cparam, "rational parameter");

  // parent options (--algebra, --format) may follow a nested subcommand
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    a->fallthrough();
    for (CLI::App* sub : a->get_subcommands({})) enable_fallthrough(sub);
  };
  enable_fallthrough(&app);

  CLI11_PARSE(app, argc, argv);

  try {
    if (catalog->parsed()) {
      if (clist->parsed()) {
        json j = json::array();
        std::string text;
        for (const auto& n : catalog_names()) {
          json e;
          e["name"] = n;
          e["parameterized"] = catalog_requires_parameter(n);
          j.push_back(e);
          text += n + "\n";
        }
        emit(opt, j, text);
        return exit_ok;
      }
      std::vector<Rational> params;
      if (!cparam.empty()) params.push_back(Rational::from_string(cparam));
      if (cget->parsed()) {
        CatalogAlgebra cat = catalog_algebra(cname, params);
        json j = algebra_doc_to_json(*cat.algebra);
        json grads = json::array();
        for (size_t i = 0; i < cat.gradations.size(); ++i) {
          json g = gradation_to_json(cat.gradations[i]);
          g["label"] = cat.gradation_labels[i];
          grads.push_back(g);
        }
        j["gradations"] = grads;
        emit(opt, j, j.dump(2) + "\n");
        return exit_ok;
      }
      LoadedAlgebra la;
      la.from_catalog = true;
      la.catalog_name = cname;
      la.params = params;
      la.cat = catalog_algebra(cname, params);
      return cmd_regress(la, opt);
    }
    if (regress->parsed()) {
      LoadedAlgebra la;
      la.from_catalog = true;
      la.catalog_name = rname;
      if (!cparam.empty()) la.params.push_back(Rational::from_string(cparam));
      la.cat = catalog_algebra(rname, la.params);
      return cmd_regress(la, opt);
    }

    LoadedAlgebra la = load_algebra_ref(opt.algebra);
    const LieAlgebra& L = *la.cat.algebra;
    AlgebraPtr alg = la.cat.algebra;

    if (check->parsed()) {
      json j;
      j["algebra"] = L.name();
      j["dim"] = L.dim();
      j["jacobi"] = "ok";
      emit(opt, j, L.name() + ": ok (dim " + std::to_string(L.dim()) + ")\n");
      return exit_ok;
    }
    if (killing->parsed()) {
      MultiLinearForm kappa = killing_form(L);
      MultiLinearForm out = grade == 1 ? kappa : extend_form(L, kappa, grade);
      json j = form_to_json(out, lambda_basis_labels(L, grade));
      emit(opt, j, j.dump(2) + "\n");
      return exit_ok;
    }
    if (invariants->parsed()) {
      Subspace inv = invariant_subspace(L, grade);
      json j;
      j["grade"] = grade;
      j["labels"] = lambda_basis_labels(L, grade);
      j["space"] = subspace_to_json(inv);
      emit(opt, j, subspace_text(L, grade, inv));
      return exit_ok;
    }
    if (forms->parsed()) {
      if (sym && antisym) fail(errc::bad_parameter, "--sym and --antisym are exclusive");
      Symmetry s = sym ? Symmetry::symmetric : antisym ? Symmetry::antisymmetric : Symmetry::none;
      Subspace sol = invariant_forms(L, grade, arity, s);
      json j;
      j["grade"] = grade;
      j["arity"] = arity;
      j["dim"] = sol.dim();
      json basis = json::array();
      int N = static_cast<int>(binom(L.dim(), grade));
      for (int r = 0; r < sol.dim(); ++r) {
        MultiLinearForm f(arity, grade, N, Symmetry::none, sol.basis().row(r));
        basis.push_back(form_to_json(f, lambda_basis_labels(L, grade)));
      }
      j["basis"] = basis;
      emit(opt, j, "solution space dimension " + std::to_string(sol.dim()) + "\n");
      return exit_ok;
    }
    if (extend->parsed()) {
      json fj = read_json_file(form_file);
      const json& rows = fj.contains("matrix") ? fj.at("matrix") : fj;
      int n = static_cast<int>(rows.size());
      Mat m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j2 = 0; j2 < n; ++j2) m.at(i, j2) = rational_from_json(rows.at(i).at(j2));
      MultiLinearForm b = MultiLinearForm::from_matrix(1, m, Symmetry::none);
      MultiLinearForm out = extend_form(L, b, target_grade);
      json j = form_to_json(out, lambda_basis_labels(L, target_grade));
      emit(opt, j, j.dump(2) + "\n");
      return exit_ok;
    }
    if (gradation->parsed()) {
      Gradation G = pick_gradation(la, opt);
      if (gverify->parsed()) {
        json j;
        j["closure"] = "ok";
        emit(opt, j, "closure: ok\n");
        return exit_ok;
      }
      if (gdecomp->parsed()) {
        Decomposition dec = induced_decomposition(L, G, grade);
        json fibers = json::array();
        for (const auto& [deg, fiber] : dec.fibers) {
          json f;
          f["degree"] = degree_to_json(deg);
          f["dim"] = fiber.size();
          json members = json::array();
          for (int idx : fiber) {
            std::string label;
            for (int i : tuple_unrank(L.dim(), grade, idx)) label += L.basis_names()[i];
            members.push_back(label);
          }
          f["basis"] = members;
          fibers.push_back(f);
        }
        json j;
        j["grade"] = grade;
        j["fibers"] = fibers;
        emit(opt, j, j.dump(2) + "\n");
        return exit_ok;
      }
      GradationReport rep = gradation_report(L, G);
      json j;
      j["root"] = rep.is_root;
      if (!rep.is_root) j["root_failure"] = rep.root_failure;
      j["schouten_compatible"] = rep.schouten_compatible;
      json lim = json::array();
      for (const auto& d : rep.limit_degrees) lim.push_back(degree_to_json(d));
      j["limit_degrees_lambda2"] = lim;
      emit(opt, j, j.dump(2) + "\n");
      (void)greport;
      return exit_ok;
    }
    if (ybe->parsed()) {
      if (grid->parsed()) {
        std::vector<MultiVector> vars;
        if (grid_vars.empty()) {
          for (const Tuple& t : all_tuples(L.dim(), 2))
            vars.push_back(MultiVector::basis_tuple(alg, t));
          if (vars.size() > 4)
            fail(errc::bound_exceeded,
                 "grid over " + std::to_string(vars.size()) + " bivectors; pass --vars");
        } else {
          std::stringstream ss(grid_vars);
          std::string part;
          while (std::getline(ss, part, ',')) vars.push_back(parse_multivector(alg, part));
        }
        json points = json::array();
        std::vector<long long> coords(vars.size(), -grid_range);
        bool done = false;
        while (!done) {
          MultiVector r(alg);
          for (size_t i = 0; i < vars.size(); ++i) r = r + Rational(coords[i]) * vars[i];
          RMatrixVerdict v = certify_r(L, r);
          json p;
          p["point"] = coords;
          p["residual"] = terms_to_json(v.residual);
          p["cybe"] = v.is_cybe;
          p["mcybe"] = v.is_mcybe;
          points.push_back(p);
          size_t pos = 0;
          while (pos < coords.size() && ++coords[pos] > grid_range) coords[pos++] = -grid_range;
          done = pos == coords.size();
        }
        json j;
        j["range"] = grid_range;
        j["points"] = points;
        emit(opt, j, j.dump(2) + "\n");
        return exit_ok;
      }
      MultiVector r = parse_multivector(alg, expr);
      if (residual->parsed()) {
        MultiVector res = mcybe_residual(L, r);
        json j;
        j["residual"] = terms_to_json(res);
        emit(opt, j, res.str() + "\n");
        return exit_ok;
      }
      if (certify->parsed()) {
        RMatrixVerdict v = certify_r(L, r);
        json j;
        j["residual"] = terms_to_json(v.residual);
        j["cybe"] = v.is_cybe;
        j["mcybe"] = v.is_mcybe;
        if (v.witness) {
          json w = json::array();
          for (const auto& x : *v.witness) w.push_back(x.str());
          j["invariant_coordinates"] = w;
        }
        std::string verdict = v.is_cybe ? "cybe" : v.is_mcybe ? "mcybe" : "neither";
        emit(opt, j, verdict + "\n");
        if (expect == "pass" && !v.is_mcybe) return exit_math;
        if (expect == "fail" && v.is_mcybe) return exit_math;
        return exit_ok;
      }
      Mat delta = cocommutator(L, r);
      json j;
      j["matrix"] = matrix_to_json(delta);
      j["rows"] = lambda_basis_labels(L, 2);
      j["cols"] = L.basis_names();
      emit(opt, j, j.dump(2) + "\n");
      return exit_ok;
    }
    if (orbit->parsed()) {
      int d = orbit_dimension(L, parse_multivector(alg, expr));
      json j;
      j["orbit_dim"] = d;
      emit(opt, j, std::to_string(d) + "\n");
      return exit_ok;
    }
    if (reduced->parsed()) {
      ReducedSpace red(alg, grade);
      json j;
      j["grade"] = grade;
      j["invariants"] = subspace_to_json(red.invariants());
      json comp = json::array();
      auto labels = lambda_basis_labels(L, grade);
      for (int c : red.complement()) comp.push_back(labels[c]);
      j["complement"] = comp;
      emit(opt, j, j.dump(2) + "\n");
      return exit_ok;
    }
    if (derivations->parsed()) {
      DerivationAlgebra d = derivation_algebra(L);
      json j;
      j["der_dim"] = d.der.dim();
      j["inner_dim"] = d.inner.dim();
      j["der_basis"] = matrix_to_json(d.der.basis());
      j["inner_basis"] = matrix_to_json(d.inner.basis());
      emit(opt, j,
           "der " + std::to_string(d.der.dim()) + ", inner " + std::to_string(d.inner.dim()) + "\n");
      return exit_ok;
    }
    if (series->parsed()) {
      StructureReport rep = structure_report(L);
      json j;
      j["center"] = subspace_to_json(rep.center);
      j["lower_central"] = report_series(rep.lower_central);
      j["derived"] = report_series(rep.derived);
      j["nilpotent"] = rep.nilpotent;
      j["solvable"] = rep.solvable;
      j["unimodular"] = rep.unimodular;
      std::ostringstream text;
      text << "center dim " << rep.center.dim() << ", nilpotent " << rep.nilpotent << ", solvable "
           << rep.solvable << ", unimodular " << rep.unimodular << "\n";
      emit(opt, j, text.str());
      return exit_ok;
    }
    if (bridge->parsed()) {
      if (ideal_expr.empty() == expr.empty())
        fail(errc::bad_parameter, "pass exactly one of --ideal or --invariant");
      json j;
      if (!ideal_expr.empty()) {
        std::vector<Vec> rows;
        std::stringstream ss(ideal_expr);
        std::string part;
        while (std::getline(ss, part, ';'))
          rows.push_back(parse_multivector(alg, part).grade_vector(1));
        Mat m(static_cast<int>(rows.size()), L.dim());
        for (size_t r = 0; r < rows.size(); ++r) m.set_row(static_cast<int>(r), rows[r]);
        BridgeToInvariant b = ideal_to_invariant(L, Subspace::span(L.dim(), m));
        j["invariant"] = terms_to_json(b.invariant);
        emit(opt, j, b.invariant.str() + "\n");
      } else {
        BridgeToIdeal b = invariant_to_ideal(parse_multivector(alg, expr));
        j["ideal"] = subspace_to_json(b.ideal);
        json traces = json::array();
        for (const auto& t : b.restricted_traces) traces.push_back(t.str());
        j["restricted_traces"] = traces;
        emit(opt, j, subspace_text(L, 1, b.ideal));
      }
      return exit_ok;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_input;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
  return exit_input;
}
