#include "pasting/error.hpp"
#include "pasting/glue.hpp"
#include "pasting/io.hpp"
#include "pasting/orders.hpp"
#include "pasting/scheme.hpp"
#include "pasting/terms.hpp"
#include "pasting/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace pasting;

namespace {

enum Exit { Ok = 0, Usage = 1, Invalid = 2, VerifyFailed = 3, Exhausted = 4 };

std::string quoted(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out + "\"";
}

int validate(const std::string &path) {
  auto result = validateScheme(loadScheme(path));
  if (result.ok()) {
    const auto &s = *result.scheme;
    std::cout << "valid: " << s.vertices().size() << " vertices, "
              << s.edges().size() << " edges, " << s.faces().size()
              << " faces\n";
    return Ok;
  }
  for (const auto &e : result.errors) {
    std::cout << toString(e.kind) << ": " << e.message;
    if (!e.witnesses.empty()) {
      std::cout << " [";
      for (std::size_t i = 0; i < e.witnesses.size(); ++i)
        std::cout << (i ? ", " : "") << e.witnesses[i];
      std::cout << "]";
    }
    std::cout << "\n";
  }
  return Invalid;
}

int orders(const std::string &path) {
  for (const auto &o : enumerateOrders(requireValid(loadScheme(path))))
    std::cout << toString(o) << "\n";
  return Ok;
}

int compose(const std::string &path, const std::string &order) {
  Labelling lab = loadLabelling(path);
  for (const auto &cell : evalOrder(lab, parseOrder(order)).cells)
    std::cout << toString(cell) << "\n";
  return Ok;
}

int gamma(const std::string &path, const std::string &from,
          const std::string &to) {
  Labelling lab = loadLabelling(path);
  CompOrder a = parseOrder(from), b = parseOrder(to);
  auto w = gammaWord(lab, a, connectOrders(lab.scheme(), a, b));
  std::cout << toString(w.moves) << "\n";
  return Ok;
}

int glue(const std::string &path, const std::string &faces) {
  Labelling lab = loadLabelling(path);
  CompOrder pair = parseOrder(faces);
  if (pair.size() != 2)
    throw CLI::ValidationError("--faces", "expects exactly two faces");
  std::cout << writeScheme(buildGlued(lab.scheme(), pair[0], pair[1]).glued.raw());
  return Ok;
}

int verify(const std::string &path, const std::string &check,
           const CheckOptions &options, const std::string &reportPath) {
  Labelling lab = loadLabelling(path);
  auto reports = runChecks(lab, check, options);
  std::cout << summaryTable(reports);
  if (!reportPath.empty()) {
    std::ofstream out(reportPath, std::ios::binary);
    if (!out)
      throw Error(ErrorKind::ParseError, "cannot write '" + reportPath + "'");
    for (const auto &r : reports)
      out << toJsonLines(r);
  }
  std::size_t failed = 0, unknown = 0;
  for (const auto &r : reports) {
    failed += r.count(Outcome::Failed);
    unknown += r.count(Outcome::Unknown);
  }
  if (failed)
    return VerifyFailed;
  return unknown ? Exhausted : Ok;
}

int emitDot(const std::string &path) {
  PastingScheme s = requireValid(loadScheme(path));
  std::cout << "digraph scheme {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (const auto &v : s.vertices())
    std::cout << "  " << quoted(v) << ";\n";
  for (const auto &e : s.edges())
    std::cout << "  " << quoted(e.src) << " -> " << quoted(e.tgt)
              << " [label=" << quoted(e.id) << "];\n";
  for (const auto &f : s.faces()) {
    auto b = facePaths(s, f.id);
    std::string node = quoted("face:" + f.id);
    std::cout << "  " << node << " [shape=note, label=" << quoted(f.id)
              << "];\n";
    std::cout << "  " << node << " -> " << quoted(b.source)
              << " [style=dashed, arrowhead=none];\n";
    std::cout << "  " << node << " -> " << quoted(b.target)
              << " [style=dashed, arrowhead=none];\n";
  }
  std::cout << "}\n";
  return Ok;
}

int exitFor(const Error &e) {
  switch (e.kind()) {
  case ErrorKind::ParseError:
  case ErrorKind::InvalidScheme:
  case ErrorKind::InvalidLabelling:
    return Invalid;
  default:
    return Usage;
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Pasting diagrams in Gray-categories"};
  app.require_subcommand(1);

  std::string file, order, from, to, faces, check = "all", report;
  CheckOptions options;
  std::function<int()> action;

  auto *cmd = app.add_subcommand("validate", "Check a scheme file");
  cmd->add_option("scheme", file, "Scheme file")->required();
  cmd->callback([&] { action = [&] { return validate(file); }; });

  cmd = app.add_subcommand("orders", "List every composition order");
  cmd->add_option("scheme", file, "Scheme file")->required();
  cmd->callback([&] { action = [&] { return orders(file); }; });

  cmd = app.add_subcommand("compose", "Print the vertical word of an order");
  cmd->add_option("labelling", file, "Labelling file")->required();
  cmd->add_option("--order", order, "Comma-separated faces")->required();
  cmd->callback([&] { action = [&] { return compose(file, order); }; });

  cmd = app.add_subcommand("gamma", "Print the interchanger between orders");
  cmd->add_option("labelling", file, "Labelling file")->required();
  cmd->add_option("--from", from, "Source order")->required();
  cmd->add_option("--to", to, "Target order")->required();
  cmd->callback([&] { action = [&] { return gamma(file, from, to); }; });

  cmd = app.add_subcommand("glue", "Merge two faces and print the scheme");
  cmd->add_option("labelling", file, "Labelling or scheme file")->required();
  cmd->add_option("--faces", faces, "Upper and lower face, as F,G")
      ->required();
  cmd->callback([&] { action = [&] { return glue(file, faces); }; });

  cmd = app.add_subcommand("verify", "Run the coherence checks");
  cmd->add_option("labelling", file, "Labelling file")->required();
  cmd->add_option("--check", check, "Check to run")
      ->check(CLI::IsMember(checkNames()))
      ->capture_default_str();
  cmd->add_option("--budget", options.budget, "Search budget")
      ->capture_default_str();
  cmd->add_option("--seed", options.seed, "Sampling seed")
      ->capture_default_str();
  cmd->add_option("--report", report, "Write JSON lines to this file");
  cmd->callback([&] {
    action = [&] { return verify(file, check, options, report); };
  });

  cmd = app.add_subcommand("emit-dot", "Print a DOT rendering of a scheme");
  cmd->add_option("scheme", file, "Scheme file")->required();
  cmd->callback([&] { action = [&] { return emitDot(file); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? Ok : Usage;
  }

  try {
    return action();
  } catch (const CLI::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exitFor(e);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  }
}
