// Command-line front end: enumerate catalogs, print decks and properties,
// audit catalogs for deck collisions and run the theorem checks.
//
// Exit codes: 0 ok, 1 I/O failure, 2 bad input, 3 theorem check failed.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "topodeck/audit.hpp"
#include "topodeck/io.hpp"
#include "topodeck/parallel.hpp"

namespace {

using namespace topodeck;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInput = 2;
constexpr int kExitVerify = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text) || !out.flush()) throw IoError("cannot write " + path);
}

FiniteSpace load_space(const std::string& path) {
  const std::string text = read_file(path);
  io::json doc;
  try {
    doc = io::json::parse(text);
  } catch (const io::json::parse_error&) {
    throw TopologyError(ErrorKind::Malformed, path + " is not valid JSON");
  }
  return io::space_from_json(doc);
}

Catalog load_catalog(const std::string& path) {
  std::istringstream in(read_file(path));
  return io::read_catalog(in);
}

std::string describe(const TopologyError& e) {
  std::string out = std::string(to_string(e.kind())) + ": " + e.what();
  if (e.kind() == ErrorKind::NotUnionClosed || e.kind() == ErrorKind::NotIntersectionClosed) {
    io::json witness = io::json::array({to_points(e.witness()[0]), to_points(e.witness()[1])});
    out += " (witness " + witness.dump() + ")";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deck and reconstruction analysis of finite topological spaces"};
  app.require_subcommand(1);

  int n = 0;
  std::string out_path, space_path, catalog_path, report_path, mode_text = "set";
  int workers = default_workers();
  bool quiet = false, stretch = false;

  app.add_option("--workers", workers, "Worker threads (default: TOPODECK_WORKERS or hardware threads)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--quiet", quiet, "Suppress progress messages");

  auto* enumerate = app.add_subcommand("enumerate", "Write the catalog of all spaces on n points up to homeomorphism");
  enumerate->add_option("--n", n, "Point count (1..7)")->required();
  enumerate->add_option("--out", out_path, "Catalog file (JSON lines); omitted prints the count only");
  enumerate->add_flag("--stretch", stretch, "Also allow n = 8");
  enumerate->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  enumerate->add_flag("--quiet", quiet, "Suppress progress messages");

  auto* deck_cmd = app.add_subcommand("deck", "Print the deck and multideck of a space");
  deck_cmd->add_option("space", space_path, "Space JSON file")->required();

  auto* props_cmd = app.add_subcommand("props", "Print the property vector of a space");
  props_cmd->add_option("space", space_path, "Space JSON file")->required();

  auto* audit_cmd = app.add_subcommand("audit", "Group a catalog by deck and audit every property");
  audit_cmd->add_option("--catalog", catalog_path, "Catalog file")->required();
  audit_cmd->add_option("--mode", mode_text, "set or multi")->check(CLI::IsMember({"set", "multi"}));
  audit_cmd->add_option("--report", report_path, "Report file; default standard output");
  audit_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  audit_cmd->add_flag("--quiet", quiet, "Suppress progress messages");

  auto* verify_cmd = app.add_subcommand("verify", "Run the theorem checks over a catalog");
  verify_cmd->add_option("--catalog", catalog_path, "Catalog file")->required();
  verify_cmd->add_option("--report", report_path, "Report file; default standard output");
  verify_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--quiet", quiet, "Suppress progress messages");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  auto emit = [&](const io::json& doc) {
    const std::string text = doc.dump(2) + "\n";
    if (report_path.empty())
      std::cout << text;
    else
      write_file(report_path, text);
  };

  try {
    if (*enumerate) {
      const Catalog catalog = enumerate_upto_homeo(n, workers, stretch);
      if (!out_path.empty()) {
        std::ostringstream text;
        io::write_catalog(text, catalog);
        write_file(out_path, text.str());
      }
      if (!quiet) std::cout << "n=" << n << " classes=" << catalog.entries.size() << "\n";
      return kExitOk;
    }
    if (*deck_cmd) {
      const FiniteSpace space = load_space(space_path);
      std::cout << io::deck_to_json(deck(space), multideck(space)).dump(2) << "\n";
      return kExitOk;
    }
    if (*props_cmd) {
      const FiniteSpace space = load_space(space_path);
      std::cout << io::properties_to_json(compute_properties(space)).dump(2) << "\n";
      return kExitOk;
    }
    if (*audit_cmd) {
      const Catalog catalog = load_catalog(catalog_path);
      const AuditReport report = audit(catalog, parse_deck_mode(mode_text), workers);
      emit(io::report_to_json(report));
      if (!quiet)
        std::cerr << "n=" << report.n << " classes=" << report.classes.size()
                  << " collisions=" << report.collisions.size() << (report.degenerate ? " (degenerate n=2)" : "")
                  << "\n";
      return kExitOk;
    }
    if (*verify_cmd) {
      const Catalog catalog = load_catalog(catalog_path);
      const TheoremSuite suite = theorem_suite(catalog, workers);
      emit(io::suite_to_json(suite));
      if (!quiet)
        for (const auto& c : suite.checks) std::cerr << "check " << c.id << ": " << to_string(c.status) << "\n";
      return suite.passed() ? kExitOk : kExitVerify;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const TopologyError& e) {
    std::cerr << "error: " << describe(e) << "\n";
    return kExitInput;
  }
  return kExitOk;
}
