// Command-line front end: loads chart definitions, runs the exact checks,
// and prints canonical text or JSON renderings of the results.

#include <algorithm>
#include <filesystem>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "algd/deffile.hpp"
#include "algd/duality.hpp"
#include "algd/error.hpp"
#include "algd/lifts.hpp"
#include "algd/render.hpp"

namespace {

using algd::Algebroid;
using algd::CheckReport;
using algd::Definition;
using algd::PoissonStructure;
using algd::Value;

std::string display_name(const Definition& def, const std::string& path) {
  if (!def.name.empty()) return def.name;
  return std::filesystem::path(path).stem().string();
}

std::string dotted(const std::string& name) { return name + "dot"; }

// Evaluation context shared by the expression commands. A Poisson chart
// works over its tangent algebroid with the bivector bound to Lambda.
struct Context {
  Definition def;
  std::string name;
  Algebroid algebroid;
  algd::SymbolTable syms;

  bool poisson() const { return def.kind == Definition::Kind::PoissonKind; }
};

Context make_context(const std::string& path) {
  Definition def = algd::load_definition(path);
  std::string name = display_name(def, path);
  Algebroid algebroid = def.kind == Definition::Kind::AlgebroidKind
                            ? *def.algebroid
                            : algd::tangent_algebroid(def.poisson->coords());
  Context ctx{std::move(def), std::move(name), std::move(algebroid), {}};
  if (ctx.poisson())
    ctx.syms.bindings.emplace("Lambda",
                              Value::of(ctx.def.poisson->as_bivector()));
  ctx.syms.scalars = ctx.algebroid.coords();
  ctx.syms.basis = ctx.algebroid.sections();
  ctx.syms.rank = ctx.algebroid.rank();
  return ctx;
}

Value eval_in(const Context& ctx, const std::string& text) {
  return algd::eval_expression(text, ctx.syms);
}

CheckReport check_definition(const Definition& def, const std::string& name) {
  CheckReport rep;
  if (def.kind == Definition::Kind::AlgebroidKind) {
    rep = algd::check_axioms(*def.algebroid);
  } else {
    rep = algd::is_poisson(*def.poisson);
    if (!def.fibers.empty()) {
      CheckReport euler = algd::euler_homogeneity_check(*def.poisson, def.fibers);
      rep.identities.insert(rep.identities.end(), euler.identities.begin(),
                            euler.identities.end());
      rep.residuals.insert(rep.residuals.end(), euler.residuals.begin(),
                           euler.residuals.end());
      rep.valid = rep.valid && euler.valid;
      rep.millis += euler.millis;
    }
  }
  rep.subject = name;
  return rep;
}

nlohmann::ordered_json algebroid_json(const Algebroid& A,
                                      const std::string& name) {
  nlohmann::ordered_json j;
  j["kind"] = "algebroid";
  j["name"] = name;
  j["base"] = A.coords();
  j["rank"] = A.rank();
  j["sections"] = A.sections();
  nlohmann::ordered_json anchor = nlohmann::ordered_json::array();
  for (int r = 1; r <= A.rank(); ++r)
    for (int a = 1; a <= A.dim(); ++a) {
      const algd::Poly& rho = A.anchor_entry(r, a);
      if (rho.is_zero()) continue;
      nlohmann::ordered_json item;
      item["section"] = A.sections()[r - 1];
      item["coord"] = A.coords()[a - 1];
      item["value"] = rho.to_string();
      anchor.push_back(item);
    }
  j["anchor"] = anchor;
  nlohmann::ordered_json structure = nlohmann::ordered_json::array();
  for (int i = 1; i < A.rank(); ++i)
    for (int jx = i + 1; jx <= A.rank(); ++jx) {
      algd::Multivector::Components comps;
      for (int m = 1; m <= A.rank(); ++m) {
        algd::Poly cm = A.c(i, jx, m);
        if (!cm.is_zero()) comps.emplace(algd::IndexTuple{m}, cm);
      }
      if (comps.empty()) continue;
      nlohmann::ordered_json item;
      item["pair"] = {A.sections()[i - 1], A.sections()[jx - 1]};
      item["value"] = algd::render_multivector(
          algd::Multivector::make(A.rank(), std::move(comps)), A.sections());
      structure.push_back(item);
    }
  j["structure"] = structure;
  return j;
}

nlohmann::ordered_json poisson_json(const PoissonStructure& L,
                                    const std::string& name,
                                    const std::vector<std::string>& fibers) {
  nlohmann::ordered_json j;
  j["kind"] = "poisson";
  j["name"] = name;
  j["base"] = L.coords();
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (int i = 1; i < L.dim(); ++i)
    for (int jx = i + 1; jx <= L.dim(); ++jx) {
      algd::Poly e = L.entry(i, jx);
      if (e.is_zero()) continue;
      nlohmann::ordered_json item;
      item["pair"] = {L.coords()[i - 1], L.coords()[jx - 1]};
      item["value"] = e.to_string();
      entries.push_back(item);
    }
  j["bivector"] = entries;
  j["fibers"] = fibers;
  return j;
}

void emit_algebroid(const Algebroid& A, const std::string& name, bool json) {
  if (json) {
    std::cout << algebroid_json(A, name).dump(2) << "\n";
  } else {
    std::cout << algd::render_definition(A, name);
  }
}

void emit_poisson(const PoissonStructure& L, const std::string& name,
                  const std::vector<std::string>& fibers, bool json) {
  if (json) {
    std::cout << poisson_json(L, name, fibers).dump(2) << "\n";
  } else {
    std::cout << algd::render_definition(L, name, fibers);
  }
}

void emit_value(const Value& v, const Context& ctx, bool json) {
  if (json) {
    std::cout << algd::value_json(v, ctx.algebroid.sections()).dump(2) << "\n";
  } else {
    std::cout << algd::render_value(v, ctx.algebroid.sections()) << "\n";
  }
}

int run_check(const std::vector<std::string>& files, bool json) {
  std::vector<std::future<CheckReport>> pending;
  pending.reserve(files.size());
  for (const auto& path : files) {
    pending.push_back(std::async(std::launch::async, [path] {
      Definition def = algd::load_definition(path);
      return check_definition(def, display_name(def, path));
    }));
  }
  std::vector<CheckReport> reports;
  reports.reserve(files.size());
  for (std::size_t i = 0; i < pending.size(); ++i) {
    try {
      reports.push_back(pending[i].get());
    } catch (const algd::Error& e) {
      // Drain the rest so no future outlives the error path.
      for (std::size_t jx = i + 1; jx < pending.size(); ++jx) {
        try {
          pending[jx].get();
        } catch (...) {
        }
      }
      throw algd::Error(files[i] + ": " + e.what());
    }
  }
  bool all_valid = true;
  if (json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& rep : reports) {
      arr.push_back(algd::report_json(rep));
      all_valid = all_valid && rep.valid;
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i > 0) std::cout << "\n";
      std::cout << algd::render_report(reports[i]);
      all_valid = all_valid && reports[i].valid;
    }
  }
  return all_valid ? 0 : 1;
}

int run_bracket(const std::string& file, const std::string& x,
                const std::string& y, bool json) {
  Context ctx = make_context(file);
  if (ctx.poisson()) {
    algd::Poly f = algd::expect_scalar(eval_in(ctx, x));
    algd::Poly g = algd::expect_scalar(eval_in(ctx, y));
    emit_value(Value::of(algd::poisson_bracket(*ctx.def.poisson, f, g)), ctx,
               json);
    return 0;
  }
  algd::Section X = algd::expect_section(eval_in(ctx, x), ctx.syms.rank);
  algd::Section Y = algd::expect_section(eval_in(ctx, y), ctx.syms.rank);
  emit_value(Value::of(algd::bracket_sections(ctx.algebroid, X, Y).mv()), ctx,
             json);
  return 0;
}

int run_d(const std::string& file, const std::string& eta, bool json) {
  Context ctx = make_context(file);
  algd::Form in = algd::expect_form(eval_in(ctx, eta), ctx.syms.rank);
  emit_value(Value::of(algd::d_rho(ctx.algebroid, in)), ctx, json);
  return 0;
}

int run_lie(const std::string& file, const std::string& v,
            const std::string& obj, bool json) {
  Context ctx = make_context(file);
  algd::Section V = algd::expect_section(eval_in(ctx, v), ctx.syms.rank);
  Value target = eval_in(ctx, obj);
  Value out;
  switch (target.kind) {
    case Value::Kind::Scalar:
      out = Value::of(algd::lie_scalar(ctx.algebroid, V, target.scalar));
      break;
    case Value::Kind::Multi:
      out = Value::of(algd::lie_multivector(ctx.algebroid, V, target.mv));
      break;
    case Value::Kind::FormVal:
      out = Value::of(algd::lie_form(ctx.algebroid, V, target.form));
      break;
  }
  emit_value(out, ctx, json);
  return 0;
}

int run_schouten(const std::string& file, const std::string& p,
                 const std::string& q, bool json) {
  Context ctx = make_context(file);
  algd::Multivector P = algd::expect_multivector(eval_in(ctx, p), ctx.syms.rank);
  algd::Multivector Q = algd::expect_multivector(eval_in(ctx, q), ctx.syms.rank);
  emit_value(Value::of(algd::schouten(ctx.algebroid, P, Q)), ctx, json);
  return 0;
}

int run_cotangent(const std::string& file, bool json) {
  Context ctx = make_context(file);
  if (!ctx.poisson())
    throw algd::Error("cotangent needs a poisson definition");
  emit_algebroid(algd::cotangent_algebroid(*ctx.def.poisson),
                 ctx.name + "_cotangent", json);
  return 0;
}

int run_dual(const std::string& file, bool json) {
  Context ctx = make_context(file);
  if (ctx.poisson()) throw algd::Error("dual needs an algebroid definition");
  const Algebroid& A = *ctx.def.algebroid;
  emit_poisson(algd::dual_poisson(A), ctx.name + "_dual", A.sections(), json);
  return 0;
}

int run_undual(const std::string& file, bool json) {
  Context ctx = make_context(file);
  if (!ctx.poisson()) throw algd::Error("undual needs a poisson definition");
  if (ctx.def.fibers.empty())
    throw algd::Error("undual needs a fibers line naming the fiber coordinates");
  algd::DualChart chart;
  chart.fiber = ctx.def.fibers;
  for (const auto& c : ctx.def.poisson->coords()) {
    if (std::find(chart.fiber.begin(), chart.fiber.end(), c) == chart.fiber.end())
      chart.base.push_back(c);
  }
  emit_algebroid(algd::algebroid_from_dual_poisson(*ctx.def.poisson, chart),
                 ctx.name + "_undual", json);
  return 0;
}

int run_lift_poisson(const std::string& file, bool json) {
  Context ctx = make_context(file);
  if (!ctx.poisson())
    throw algd::Error("lift-poisson needs a poisson definition");
  PoissonStructure lifted = algd::tangent_lift_poisson(*ctx.def.poisson);
  // The lift stays fiberwise linear over the dotted fibration: dotted fibers
  // lead so a following undual reproduces the lifted algebroid directly.
  std::vector<std::string> fibers;
  if (ctx.def.fibers.empty()) {
    for (const auto& c : ctx.def.poisson->coords()) fibers.push_back(dotted(c));
  } else {
    for (const auto& f : ctx.def.fibers) fibers.push_back(dotted(f));
    fibers.insert(fibers.end(), ctx.def.fibers.begin(), ctx.def.fibers.end());
  }
  emit_poisson(lifted, ctx.name + "_lift", fibers, json);
  return 0;
}

int run_lift_algebroid(const std::string& file, bool json) {
  Context ctx = make_context(file);
  if (ctx.poisson())
    throw algd::Error("lift-algebroid needs an algebroid definition");
  emit_algebroid(algd::tangent_lift_algebroid(*ctx.def.algebroid),
                 ctx.name + "_lift", json);
  return 0;
}

int run_eval(const std::string& expr, const std::vector<std::string>& at,
             bool json) {
  std::map<std::string, algd::Rational> point;
  algd::SymbolTable empty;
  for (const auto& group : at) {
    std::size_t start = 0;
    while (start <= group.size()) {
      std::size_t comma = group.find(',', start);
      std::string piece = group.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!piece.empty()) {
        std::size_t eq = piece.find('=');
        if (eq == std::string::npos)
          throw algd::Error("assignment must look like name=value: " + piece);
        std::string key = piece.substr(0, eq);
        algd::Poly value =
            algd::expect_scalar(algd::eval_expression(piece.substr(eq + 1), empty));
        if (!value.is_constant())
          throw algd::Error("assignment value must be a rational constant");
        point[key] = value.constant_value();
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  algd::SymbolTable syms;
  for (const auto& [key, value] : point) syms.scalars.push_back(key);
  algd::Poly p = algd::expect_scalar(algd::eval_expression(expr, syms));
  algd::Rational result = p.eval(point);
  if (json) {
    nlohmann::ordered_json j;
    j["kind"] = "rational";
    j["value"] = result.to_string();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << result.to_string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculus for Lie algebroids and Poisson charts"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit JSON instead of text");

  std::vector<std::string> check_files;
  auto* cmd_check = app.add_subcommand("check", "verify structural identities");
  cmd_check->add_option("files", check_files, "definition files")
      ->required()
      ->expected(-1);

  std::string file, arg1, arg2;
  auto* cmd_bracket =
      app.add_subcommand("bracket", "bracket of two sections or functions");
  cmd_bracket->add_option("file", file, "definition file")->required();
  cmd_bracket->add_option("x", arg1, "first operand")->required();
  cmd_bracket->add_option("y", arg2, "second operand")->required();

  auto* cmd_d = app.add_subcommand("d", "apply the differential to a form");
  cmd_d->add_option("file", file, "definition file")->required();
  cmd_d->add_option("eta", arg1, "form expression")->required();

  auto* cmd_lie = app.add_subcommand(
      "lie", "Lie derivative along a section of a function, form, or multivector");
  cmd_lie->add_option("file", file, "definition file")->required();
  cmd_lie->add_option("v", arg1, "section expression")->required();
  cmd_lie->add_option("obj", arg2, "target expression")->required();

  auto* cmd_schouten =
      app.add_subcommand("schouten", "Schouten bracket of two multivectors");
  cmd_schouten->add_option("file", file, "definition file")->required();
  cmd_schouten->add_option("p", arg1, "first multivector")->required();
  cmd_schouten->add_option("q", arg2, "second multivector")->required();

  auto* cmd_cotangent = app.add_subcommand(
      "cotangent", "cotangent algebroid of a Poisson chart");
  cmd_cotangent->add_option("file", file, "definition file")->required();

  auto* cmd_dual =
      app.add_subcommand("dual", "linear Poisson structure on the dual bundle");
  cmd_dual->add_option("file", file, "definition file")->required();

  auto* cmd_undual = app.add_subcommand(
      "undual", "algebroid of a fiberwise linear Poisson chart");
  cmd_undual->add_option("file", file, "definition file")->required();

  auto* cmd_lift_p =
      app.add_subcommand("lift-poisson", "tangent lift of a Poisson chart");
  cmd_lift_p->add_option("file", file, "definition file")->required();

  auto* cmd_lift_a =
      app.add_subcommand("lift-algebroid", "tangent lift of an algebroid");
  cmd_lift_a->add_option("file", file, "definition file")->required();

  std::vector<std::string> at;
  auto* cmd_eval = app.add_subcommand("eval", "evaluate a scalar expression");
  cmd_eval->add_option("expr", arg1, "scalar expression")->required();
  cmd_eval->add_option("--at", at, "assignments name=value, comma separated");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cmd_check)) return run_check(check_files, json);
    if (app.got_subcommand(cmd_bracket)) return run_bracket(file, arg1, arg2, json);
    if (app.got_subcommand(cmd_d)) return run_d(file, arg1, json);
    if (app.got_subcommand(cmd_lie)) return run_lie(file, arg1, arg2, json);
    if (app.got_subcommand(cmd_schouten))
      return run_schouten(file, arg1, arg2, json);
    if (app.got_subcommand(cmd_cotangent)) return run_cotangent(file, json);
    if (app.got_subcommand(cmd_dual)) return run_dual(file, json);
    if (app.got_subcommand(cmd_undual)) return run_undual(file, json);
    if (app.got_subcommand(cmd_lift_p)) return run_lift_poisson(file, json);
    if (app.got_subcommand(cmd_lift_a)) return run_lift_algebroid(file, json);
    if (app.got_subcommand(cmd_eval)) return run_eval(arg1, at, json);
  } catch (const algd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
