#include "lpa/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "lpa/expr.hpp"
#include "lpa/graph_io.hpp"
#include "lpa/ideal.hpp"
#include "lpa/laurent.hpp"
#include "lpa/properties.hpp"
#include "lpa/transforms.hpp"

namespace lpa::cli {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    out.push_back(comma == std::string::npos
                      ? text.substr(start)
                      : text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

const char* yesno(bool b) { return b ? "true" : "false"; }

struct Context {
  std::ostream& out;
  int rc = 0;

  GraphPtr graph(const std::string& path) {
    return load_valid_graph(read_input(path));
  }
};

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leavitt path algebra toolkit", "lpa"};
  app.require_subcommand(1);

  Context ctx{out};

  // Most subcommands share a positional graph file ('-' reads stdin).
  auto add_graph_arg = [](CLI::App* cmd, std::string& path) {
    cmd->add_option("graph", path, "graph file ('-' for stdin)")->required();
  };

  {
    auto* cmd = app.add_subcommand("validate", "check graph invariants");
    auto path = std::make_shared<std::string>();
    add_graph_arg(cmd, *path);
    cmd->callback([&ctx, path] {
      GraphPtr g = load_graph(read_input(*path));
      if (g->is_valid()) {
        ctx.out << "ok\n";
      } else {
        for (const std::string& v : g->violations()) ctx.out << v << "\n";
        ctx.rc = 1;
      }
    });
  }

  {
    auto* cmd = app.add_subcommand("props", "graph property report");
    auto path = std::make_shared<std::string>();
    add_graph_arg(cmd, *path);
    cmd->callback([&ctx, path] {
      GraphPtr g = ctx.graph(*path);
      SimplicityVerdict v = is_simple(g);
      ctx.out << "condition_L=" << yesno(v.condition_L) << "\n"
              << "condition_K=" << yesno(v.condition_K) << "\n"
              << "cofinal=" << yesno(v.cofinal) << "\n"
              << "simple=" << yesno(v.simple) << "\n";
    });
  }

  {
    auto* cmd = app.add_subcommand("simple", "simplicity verdict with breakdown");
    auto path = std::make_shared<std::string>();
    add_graph_arg(cmd, *path);
    cmd->callback([&ctx, path] {
      GraphPtr g = ctx.graph(*path);
      SimplicityVerdict v = is_simple(g);
      ctx.out << "simple=" << yesno(v.simple) << "\n"
              << "condition_L=" << yesno(v.condition_L) << "\n"
              << "condition_K=" << yesno(v.condition_K) << "\n"
              << "cofinal=" << yesno(v.cofinal) << "\n"
              << "singular_reachability=" << yesno(v.singular_reach) << "\n"
              << "trivial_saturated_hereditary=" << yesno(v.trivial_lattice)
              << "\n"
              << "criterion_L_trivial=" << yesno(v.criterion_L_trivial) << "\n"
              << "criterion_K_trivial=" << yesno(v.criterion_K_trivial) << "\n"
              << "criterion_L_cofinal_reach="
              << yesno(v.criterion_L_cofinal_reach) << "\n"
              << "criterion_K_cofinal_reach="
              << yesno(v.criterion_K_cofinal_reach) << "\n";
    });
  }

  {
    auto* cmd = app.add_subcommand("saturate", "saturation of a hereditary set");
    auto path = std::make_shared<std::string>();
    auto hs = std::make_shared<std::string>();
    add_graph_arg(cmd, *path);
    cmd->add_option("--H", *hs, "comma-separated vertex list")->required();
    cmd->callback([&ctx, path, hs] {
      GraphPtr g = ctx.graph(*path);
      VertexSet h = vertex_set(*g, split_commas(*hs));
      ctx.out << vertex_set_names(*g, saturate(*g, h)) << "\n";
    });
  }

  {
    auto* cmd = app.add_subcommand("closure", "hereditary closure of a set");
    auto path = std::make_shared<std::string>();
    auto xs = std::make_shared<std::string>();
    add_graph_arg(cmd, *path);
    cmd->add_option("--X", *xs, "comma-separated vertex list")->required();
    cmd->callback([&ctx, path, xs] {
      GraphPtr g = ctx.graph(*path);
      VertexSet x = vertex_set(*g, split_commas(*xs));
      ctx.out << vertex_set_names(*g, hereditary_closure(*g, x)) << "\n";
    });
  }

  {
    auto* cmd = app.add_subcommand("breaking", "breaking vertices B_H");
    auto path = std::make_shared<std::string>();
    auto hs = std::make_shared<std::string>();
    add_graph_arg(cmd, *path);
    cmd->add_option("--H", *hs, "comma-separated vertex list")->required();
    cmd->callback([&ctx, path, hs] {
      GraphPtr g = ctx.graph(*path);
      VertexSet h = vertex_set(*g, split_commas(*hs));
      ctx.out << vertex_set_names(*g, breaking_vertices(*g, h)) << "\n";
    });
  }

  {
    auto* cmd = app.add_subcommand("pairs", "enumerate admissible pairs");
    auto path = std::make_shared<std::string>();
    add_graph_arg(cmd, *path);
    cmd->callback([&ctx, path] {
      GraphPtr g = ctx.graph(*path);
      for (const AdmissiblePair& p : admissible_pairs(*g)) {
        ctx.out << format_pair(*g, p) << "\n";
      }
    });
  }

  {
    auto* cmd = app.add_subcommand("lattice", "admissible-pair lattice");
    auto path = std::make_shared<std::string>();
    auto dot = std::make_shared<bool>(false);
    auto diagnose = std::make_shared<bool>(false);
    add_graph_arg(cmd, *path);
    cmd->add_flag("--dot", *dot, "emit the Hasse diagram in DOT (default)");
    cmd->add_flag("--diagnose-formulas", *diagnose,
                  "compare order-theoretic meet/join with the formula variants");
    cmd->callback([&ctx, path, diagnose] {
      GraphPtr g = ctx.graph(*path);
      if (*diagnose) {
        auto reports = lattice_formula_diagnostics(*g);
        if (reports.empty()) {
          ctx.out << "formulas agree with the order on all pairs\n";
          return;
        }
        for (const LatticeFormulaReport& r : reports) {
          ctx.out << "disagree a=" << format_pair(*g, r.a)
                  << " b=" << format_pair(*g, r.b);
          if (!r.meet_agrees) {
            ctx.out << " meet_order=" << format_pair(*g, r.order_meet)
                    << " meet_formula=" << format_pair(*g, r.formula_meet);
          }
          if (!r.join_agrees) {
            ctx.out << " join_order=" << format_pair(*g, r.order_join)
                    << " join_formula=" << format_pair(*g, r.formula_join);
          }
          ctx.out << "\n";
        }
        return;
      }
      ctx.out << lattice_to_dot(*g);
    });
  }

  {
    auto* cmd = app.add_subcommand("quotient", "quotient graph E \\ (H,S)");
    auto path = std::make_shared<std::string>();
    auto pair = std::make_shared<std::string>();
    add_graph_arg(cmd, *path);
    cmd->add_option("--pair", *pair, "admissible pair H={..};S={..}")
        ->required();
    cmd->callback([&ctx, path, pair] {
      GraphPtr g = ctx.graph(*path);
      ctx.out << save_graph(*quotient_graph(g, parse_pair(*g, *pair)));
    });
  }

  {
    auto* cmd = app.add_subcommand("restrict", "restriction graph E_(H,S)");
    auto path = std::make_shared<std::string>();
    auto pair = std::make_shared<std::string>();
    add_graph_arg(cmd, *path);
    cmd->add_option("--pair", *pair, "admissible pair H={..};S={..}")
        ->required();
    cmd->callback([&ctx, path, pair] {
      GraphPtr g = ctx.graph(*path);
      ctx.out << save_graph(*restriction_graph(g, parse_pair(*g, *pair)));
    });
  }

  {
    auto* cmd =
        app.add_subcommand("desingularize", "truncated desingularization");
    auto path = std::make_shared<std::string>();
    auto depth = std::make_shared<int>(1);
    add_graph_arg(cmd, *path);
    cmd->add_option("--depth", *depth, "tail length")->required();
    cmd->callback([&ctx, path, depth] {
      GraphPtr g = ctx.graph(*path);
      ctx.out << save_graph(*desingularize(g, *depth));
    });
  }

  {
    auto* cmd = app.add_subcommand("eval", "evaluate an element expression");
    auto path = std::make_shared<std::string>();
    auto field = std::make_shared<std::string>("q");
    auto expr = std::make_shared<std::string>();
    add_graph_arg(cmd, *path);
    cmd->add_option("--field", *field, "q (default) or f<p>");
    cmd->add_option("expr", *expr, "element expression")->required();
    cmd->callback([&ctx, path, field, expr] {
      GraphPtr g = ctx.graph(*path);
      Element x = parse_element(g, FieldId::parse(*field), *expr);
      ctx.out << x.str() << "\n";
    });
  }

  {
    auto* cmd = app.add_subcommand("member", "graded-ideal membership");
    auto path = std::make_shared<std::string>();
    auto field = std::make_shared<std::string>("q");
    auto pair = std::make_shared<std::string>();
    auto expr = std::make_shared<std::string>();
    add_graph_arg(cmd, *path);
    cmd->add_option("--pair", *pair, "admissible pair H={..};S={..}")
        ->required();
    cmd->add_option("--field", *field, "q (default) or f<p>");
    cmd->add_option("expr", *expr, "element expression")->required();
    cmd->callback([&ctx, path, field, pair, expr] {
      GraphPtr g = ctx.graph(*path);
      Element x = parse_element(g, FieldId::parse(*field), *expr);
      ctx.out << yesno(in_graded_ideal(parse_pair(*g, *pair), x)) << "\n";
    });
  }

  {
    auto* cmd =
        app.add_subcommand("ghost-extract", "ghost polynomial from an ideal");
    auto path = std::make_shared<std::string>();
    auto field = std::make_shared<std::string>("q");
    auto expr = std::make_shared<std::string>();
    add_graph_arg(cmd, *path);
    cmd->add_option("--field", *field, "q (default) or f<p>");
    cmd->add_option("expr", *expr, "element expression")->required();
    cmd->callback([&ctx, path, field, expr] {
      GraphPtr g = ctx.graph(*path);
      Element y = parse_element(g, FieldId::parse(*field), *expr);
      GhostExtraction e = extract_ghost_polynomial(y);
      ctx.out << "ghost=" << e.ghost.str() << "\n"
              << "vertex=" << g->vertex_name(e.vertex) << "\n"
              << "beta=" << e.beta.str(*g) << "\n";
    });
  }

  {
    auto* cmd = app.add_subcommand("dot", "DOT rendering of the graph");
    auto path = std::make_shared<std::string>();
    add_graph_arg(cmd, *path);
    cmd->callback([&ctx, path] {
      GraphPtr g = ctx.graph(*path);
      ctx.out << graph_to_dot(*g);
    });
  }

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ExprError& e) {
    err << "error: column " << e.column() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return ctx.rc;
}

}  // namespace lpa::cli
