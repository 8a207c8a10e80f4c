// Command line front end: evaluate builder expressions, validate and convert
// files, decide isomorphism, run desingularization with a trace, and emit the
// sphere-model comparison matrix.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ssk/builders.hpp"
#include "ssk/expr.hpp"
#include "ssk/io.hpp"
#include "ssk/iso.hpp"
#include "ssk/report.hpp"
#include "ssk/subdiv.hpp"

namespace {

struct CommonFlags {
  bool json = false;
  bool unsafe = false;
  int max_rank = 6;
  int max_sd_depth = 3;
  std::string out;
};

ssk::EvalOptions eval_options(const CommonFlags& flags) {
  ssk::EvalOptions options;
  options.max_rank = flags.max_rank;
  options.max_sd_depth = flags.max_sd_depth;
  options.unsafe = flags.unsafe;
  return options;
}

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_out = true) {
  cmd->add_flag("--json", flags.json, "emit machine-readable JSON");
  cmd->add_flag("--unsafe-bounds", flags.unsafe, "disable rank and depth bounds");
  cmd->add_option("--max-rank", flags.max_rank, "rank bound for builder expressions");
  cmd->add_option("--max-sd-depth", flags.max_sd_depth, "nesting bound for sd()");
  if (with_out) cmd->add_option("-o,--out", flags.out, "write the main output to a file");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const CommonFlags& flags, const std::string& text) {
  if (flags.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(flags.out, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + flags.out + "'");
  out << text;
}

std::string dump(const ssk::Json& j) { return j.dump(2) + "\n"; }

// A source argument is a file when it names one, otherwise an expression.
ssk::SsetPtr load_object(const std::string& arg, const ssk::EvalOptions& options) {
  if (std::filesystem::exists(arg)) return ssk::parse_sset(read_file(arg));
  return ssk::eval_expression(arg, options);
}

int run(int argc, char** argv) {
  CLI::App app{"exact computation with finite simplicial sets"};
  app.require_subcommand(1);

  CommonFlags flags;

  std::string check_file;
  CLI::App* check = app.add_subcommand("check", "validate a .sset file");
  check->add_option("file", check_file, "sset v1 file")->required();
  add_common(check, flags, false);

  std::string eval_expr;
  CLI::App* eval = app.add_subcommand("eval", "evaluate an expression to a .sset file");
  eval->add_option("expr", eval_expr, "builder expression")->required();
  add_common(eval, flags);

  std::vector<std::string> iso_args;
  CLI::App* iso = app.add_subcommand("iso", "decide isomorphism of two objects");
  iso->add_option("objects", iso_args, "two .sset files or expressions")
      ->expected(2)
      ->required();
  add_common(iso, flags);

  std::string desing_expr;
  bool desing_trace = false;
  CLI::App* desing = app.add_subcommand("desing", "desingularize an object");
  desing->add_option("expr", desing_expr, ".sset file or expression")->required();
  desing->add_flag("--trace", desing_trace, "emit a JSON iteration trace instead of the object");
  add_common(desing, flags);

  std::string report_expr;
  CLI::App* report = app.add_subcommand("report", "counts summary of an object");
  report->add_option("expr", report_expr, ".sset file or expression")->required();
  add_common(report, flags);

  CLI::App* table = app.add_subcommand("table1", "desingularized subdivided spheres vs expectations");
  add_common(table, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Collapse CLI11's per-error exit codes onto the documented contract:
    // 0 for --help, 2 for every usage error.
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (check->parsed()) {
    ssk::SsetPtr X = ssk::parse_sset(read_file(check_file));
    ssk::ValidationReport result = ssk::validate(*X);
    ssk::Json j;
    j["dimension"] = X->dimension();
    j["nondegenerate_counts"] = X->counts();
    if (result.ok()) j["nonsingular"] = ssk::is_nonsingular(*X);
    j["valid"] = result.ok();
    j["violations"] = result.violations;
    if (flags.json) {
      std::cout << dump(j);
    } else {
      std::cout << (result.ok() ? "valid" : "invalid") << "\n";
      for (const std::string& v : result.violations) std::cout << "  " << v << "\n";
      if (result.ok())
        std::cout << "nonsingular: " << (j["nonsingular"].get<bool>() ? "true" : "false") << "\n";
    }
    return result.ok() ? 0 : 1;
  }

  if (eval->parsed()) {
    ssk::SsetPtr X = load_object(eval_expr, eval_options(flags));
    write_output(flags, ssk::emit_sset(*X));
    return 0;
  }

  if (iso->parsed()) {
    ssk::SsetPtr A = load_object(iso_args[0], eval_options(flags));
    ssk::SsetPtr B = load_object(iso_args[1], eval_options(flags));
    std::optional<ssk::SimplicialMap> witness = ssk::are_isomorphic(A, B);
    if (flags.json) {
      ssk::Json j;
      j["iso"] = witness.has_value();
      j["witness"] = witness ? ssk::map_report(*witness) : ssk::Json(nullptr);
      std::cout << dump(j);
    } else {
      std::cout << (witness ? "isomorphic" : "not isomorphic") << "\n";
    }
    if (witness && !flags.out.empty())
      write_output(flags, ssk::emit_smap(*witness, iso_args[0], iso_args[1]));
    return witness ? 0 : 1;
  }

  if (desing->parsed()) {
    ssk::SsetPtr X = load_object(desing_expr, eval_options(flags));
    ssk::DesingTrace trace = ssk::desingularize(X);
    if (desing_trace)
      write_output(flags, dump(ssk::trace_report(trace)));
    else
      write_output(flags, ssk::emit_sset(*trace.result()));
    return 0;
  }

  if (report->parsed()) {
    ssk::SsetPtr X = load_object(report_expr, eval_options(flags));
    write_output(flags, dump(ssk::counts_report(*X)));
    return 0;
  }

  // table1
  ssk::Table1 t = ssk::table1();
  write_output(flags, dump(ssk::table1_report(t)));
  return t.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  bool json_errors = false;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--json") json_errors = true;
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    if (json_errors) {
      ssk::Json j;
      j["error"] = e.what();
      std::cerr << j.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
  }
}
