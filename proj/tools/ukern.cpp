#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ukern/decode.hpp"
#include "ukern/enumerate.hpp"
#include "ukern/error.hpp"
#include "ukern/limits.hpp"
#include "ukern/rank.hpp"
#include "ukern/resize.hpp"
#include "ukern/sexpr.hpp"
#include "ukern/suites.hpp"
#include "ukern/tower.hpp"

using json = nlohmann::json;
using namespace ukern;

namespace {

// Exit codes: 0 ok, 1 verification failures, 2 input errors, 3 semantic errors.
constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;
constexpr int kExitSemantic = 3;

struct InputError {
  std::string message;
};

TowerConfig config_from_flag(const std::string& budgets) {
  if (budgets.empty()) return TowerConfig::defaults();
  std::vector<RankOrdinal> parsed;
  std::stringstream ss(budgets);
  std::string item;
  while (std::getline(ss, item, ',')) parsed.push_back(parse_ordinal(item));
  return TowerConfig::from_budgets(std::move(parsed));
}

// Anything thrown while reading the command's inputs is an input error.
template <typename F>
auto input_phase(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw InputError{e.what()};
  }
}

json document(json input, json result, std::optional<RankOrdinal> rank,
              std::optional<std::size_t> level) {
  json doc;
  doc["input"] = std::move(input);
  doc["result"] = std::move(result);
  doc["rank"] = rank ? json(to_string(*rank)) : json(nullptr);
  doc["level"] = level ? json(*level) : json(nullptr);
  return doc;
}

void emit(const json& doc, bool pretty) {
  std::cout << (pretty ? doc.dump(2) : doc.dump()) << "\n";
}

json extension_json(const Extension& ext) {
  json values = json::array();
  for (const Value& v : ext.elements) values.push_back(print(v));
  return json{{"values", values}, {"cardinality", ext.elements.size()}};
}

json graph_json(const MapTable& m) {
  json out = json::array();
  for (const auto& [k, v] : m.graph()) out.push_back(json::array({print(k), print(v)}));
  return out;
}

json report_json(const SuiteReport& r) {
  json failures = json::array();
  for (const SuiteFailure& f : r.failures)
    failures.push_back(json{{"size", f.size}, {"item", f.item}, {"detail", f.detail}});
  return json{{"suite", r.suite},
              {"max_size", r.bounds.max_size},
              {"max_fin", r.bounds.max_fin},
              {"cap", r.bounds.cap},
              {"seed", r.bounds.seed},
              {"checked", r.checked},
              {"skipped", r.skipped},
              {"failures_total", r.failures_total},
              {"failures", failures}};
}

struct Diagram {
  std::vector<std::pair<std::string, Code>> objects;
  std::vector<std::pair<std::string, MapTable>> arrows;
  std::string kind;
  std::vector<std::string> args;

  const Code& object(const std::string& name) const {
    for (const auto& [n, c] : objects)
      if (n == name) return c;
    fail(errc::parse, "unknown object '" + name + "'");
  }
  const MapTable& arrow(const std::string& name) const {
    for (const auto& [n, m] : arrows)
      if (n == name) return m;
    fail(errc::parse, "unknown arrow '" + name + "'");
  }
};

Diagram read_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse, "cannot open diagram file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  Diagram d;
  for (const SExpr& form : read_sexprs(buffer.str())) {
    if (form.is_atom || form.items.empty() || !form.items[0].is_atom)
      fail(errc::parse, "diagram forms are (objects ...), (arrows ...), (compute ...)");
    const std::string& head = form.items[0].atom;
    if (head == "objects") {
      for (std::size_t i = 1; i < form.items.size(); ++i) {
        const SExpr& o = form.items[i];
        if (o.is_atom || o.items.size() != 2 || !o.items[0].is_atom)
          fail(errc::parse, "object entry must be (name code)");
        d.objects.emplace_back(o.items[0].atom, code_from_sexpr(o.items[1]));
      }
    } else if (head == "arrows") {
      for (std::size_t i = 1; i < form.items.size(); ++i) {
        const SExpr& a = form.items[i];
        if (a.is_atom || a.items.size() < 3 || !a.items[0].is_atom || !a.items[1].is_atom ||
            !a.items[2].is_atom)
          fail(errc::parse, "arrow entry must be (name src dst (key image)...)");
        std::vector<std::pair<Value, Value>> graph;
        for (std::size_t j = 3; j < a.items.size(); ++j) {
          const SExpr& e = a.items[j];
          if (e.is_atom || e.items.size() != 2)
            fail(errc::parse, "arrow graph entry must be (key image)");
          graph.emplace_back(value_from_sexpr(e.items[0]), value_from_sexpr(e.items[1]));
        }
        d.arrows.emplace_back(a.items[0].atom,
                              MapTable::make(d.object(a.items[1].atom), d.object(a.items[2].atom),
                                             std::move(graph)));
      }
    } else if (head == "compute") {
      if (form.items.size() < 2 || !form.items[1].is_atom)
        fail(errc::parse, "compute form must name a construction");
      d.kind = form.items[1].atom;
      for (std::size_t i = 2; i < form.items.size(); ++i) {
        if (!form.items[i].is_atom) fail(errc::parse, "compute arguments must be names");
        d.args.push_back(form.items[i].atom);
      }
    } else {
      fail(errc::parse, "unknown diagram form '" + head + "'");
    }
  }
  if (d.kind.empty()) fail(errc::parse, "diagram file has no (compute ...) form");
  return d;
}

Code run_diagram(const Diagram& d, bool colimit_verb) {
  auto need = [&](std::size_t n) {
    if (d.args.size() != n) fail(errc::parse, "wrong number of arguments for " + d.kind);
  };
  if (!colimit_verb) {
    if (d.kind == "product") {
      need(2);
      return product(d.object(d.args[0]), d.object(d.args[1]));
    }
    if (d.kind == "equaliser") {
      need(2);
      return equaliser(d.arrow(d.args[0]), d.arrow(d.args[1]));
    }
    if (d.kind == "terminal") {
      need(0);
      return Code::star();
    }
    fail(errc::parse, "'" + d.kind + "' is not a limit construction");
  }
  if (d.kind == "coproduct") {
    need(2);
    return coproduct(d.object(d.args[0]), d.object(d.args[1]));
  }
  if (d.kind == "coequaliser") {
    need(2);
    return coequaliser(d.arrow(d.args[0]), d.arrow(d.args[1]));
  }
  if (d.kind == "pushout") {
    need(2);
    return pushout(d.arrow(d.args[0]), d.arrow(d.args[1]));
  }
  if (d.kind == "initial") {
    need(0);
    return Code::zero();
  }
  fail(errc::parse, "'" + d.kind + "' is not a colimit construction");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"universe-tower kernel: codes, ranks, decoding, finite (co)limits, resizing"};
  app.require_subcommand(1);

  std::string budgets;
  bool pretty = false;
  app.add_option("--budgets", budgets, "comma-separated budget ordinals, e.g. w2*1,w2*2");
  app.add_flag("--pretty", pretty, "indent JSON output");

  std::string expr, expr2, file;
  std::size_t to_level = 0, from_level = 0, res_level = 0;
  bool has_from = false;
  std::string suite;
  SuiteBounds sb;

  CLI::App* rank_cmd = app.add_subcommand("rank", "structural rank of a code");
  rank_cmd->add_option("expr", expr, "code s-expression")->required();

  CLI::App* level_cmd = app.add_subcommand("level", "least tower level containing a code");
  level_cmd->add_option("expr", expr, "code s-expression")->required();

  CLI::App* eval_cmd = app.add_subcommand("eval", "decode a code to its extension");
  eval_cmd->add_option("expr", expr, "code s-expression")->required();

  CLI::App* eq_cmd = app.add_subcommand("eq", "structural code equality");
  eq_cmd->add_option("lhs", expr, "code s-expression")->required();
  eq_cmd->add_option("rhs", expr2, "code s-expression")->required();

  CLI::App* lift_cmd = app.add_subcommand("lift", "lift a code to a higher level");
  lift_cmd->add_option("expr", expr, "code s-expression")->required();
  lift_cmd->add_option("--to", to_level, "target level")->required();
  lift_cmd->add_option("--from", from_level, "source level (defaults to the least level)");

  CLI::App* resize_cmd = app.add_subcommand("resize", "resize an h-proposition to level 0");
  resize_cmd->add_option("expr", expr, "code s-expression")->required();
  resize_cmd->add_option("--level", res_level, "source level")->default_val(1);

  CLI::App* limit_cmd = app.add_subcommand("limit", "construct a finite limit from a diagram file");
  limit_cmd->add_option("file", file, "diagram file")->required();

  CLI::App* colimit_cmd =
      app.add_subcommand("colimit", "construct a finite colimit from a diagram file");
  colimit_cmd->add_option("file", file, "diagram file")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "run an exhaustive verification suite");
  verify_cmd->add_option("--suite", suite, "suite name")->required();
  verify_cmd->add_option("--max-size", sb.max_size, "population size bound");
  verify_cmd->add_option("--max-fin", sb.max_fin, "finite base / carrier bound");
  verify_cmd->add_option("--cap", sb.cap, "population cap");
  verify_cmd->add_option("--seed", sb.seed, "sampling seed (echoed)");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInput;
  }
  if (lift_cmd->count("--from") > 0) has_from = true;

  try {
    TowerConfig cfg = input_phase([&] { return config_from_flag(budgets); });
    for (const std::string& w : cfg.closure_warnings()) std::cerr << "warning: " << w << "\n";

    if (rank_cmd->parsed()) {
      Code c = input_phase([&] { return parse_code(expr); });
      Complexity x = complexity(c);
      emit(document(print(c), json{{"ordinal", to_string(x.rank)}, {"size", x.size}}, x.rank,
                    least_level(c, cfg)),
           pretty);
      return 0;
    }
    if (level_cmd->parsed()) {
      Code c = input_phase([&] { return parse_code(expr); });
      auto lvl = least_level(c, cfg);
      emit(document(print(c), json{{"least_level", lvl ? json(*lvl) : json(nullptr)}}, rk(c), lvl),
           pretty);
      return 0;
    }
    if (eval_cmd->parsed()) {
      Code c = input_phase([&] { return parse_code(expr); });
      Extension ext = decode(c);
      if (ext.nat_set) fail(errc::non_finitary, "the extension of Nat cannot be enumerated");
      emit(document(print(c), extension_json(ext), rk(c), least_level(c, cfg)), pretty);
      return 0;
    }
    if (eq_cmd->parsed()) {
      Code a = input_phase([&] { return parse_code(expr); });
      Code b = input_phase([&] { return parse_code(expr2); });
      emit(document(json::array({print(a), print(b)}), code_eq(a, b), std::nullopt, std::nullopt),
           pretty);
      return 0;
    }
    if (lift_cmd->parsed()) {
      Code c = input_phase([&] { return parse_code(expr); });
      std::size_t from = from_level;
      if (!has_from) {
        auto lvl = least_level(c, cfg);
        if (!lvl) fail(errc::level, "code fits no level of the tower");
        from = *lvl;
      }
      LeveledCode lifted = lift(make_leveled(c, from, cfg), to_level, cfg);
      emit(document(print(c),
                    json{{"code", print(lifted.code)}, {"from", from}, {"to", lifted.level}},
                    rk(c), least_level(c, cfg)),
           pretty);
      return 0;
    }
    if (resize_cmd->parsed()) {
      Code c = input_phase([&] { return parse_code(expr); });
      PropCode p = make_prop(c, res_level, cfg);
      PropCode small = prop_res(p);
      ResizeWitness w = resize_witness(p);
      json eps = nullptr;
      if (w.forward && w.inverse)
        eps = json{{"forward", graph_json(*w.forward)}, {"inverse", graph_json(*w.inverse)}};
      emit(document(print(c), json{{"resized", print(small.code)}, {"epsilon", eps}}, rk(c),
                    least_level(c, cfg)),
           pretty);
      return 0;
    }
    if (limit_cmd->parsed() || colimit_cmd->parsed()) {
      Diagram d = input_phase([&] { return read_diagram(file); });
      Code out = run_diagram(d, colimit_cmd->parsed());
      Extension ext = decode(out);
      json result = extension_json(ext);
      result["code"] = print(out);
      emit(document(file, result, rk(out), least_level(out, cfg)), pretty);
      return 0;
    }
    if (verify_cmd->parsed()) {
      SuiteReport report = run_suite(suite, sb, cfg);
      emit(document(json{{"suite", suite}}, report_json(report), std::nullopt, std::nullopt),
           pretty);
      return report.ok() ? 0 : kExitVerify;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitInput;
  } catch (const Error& e) {
    if (e.kind() == errc::parse || e.kind() == errc::unknown_suite) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitInput;
    }
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  }
  return 0;
}
