#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "iwgraph/errors.hpp"
#include "iwgraph/version.hpp"

namespace {

enum ExitCode { kOk = 0, kConfig = 1, kPrecondition = 2, kResource = 3, kInternal = 4 };

struct Args {
  std::string config;
  std::string out;
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  iwgraph::cli::CommandOptions opt;
};

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw iwgraph::ConfigError("cannot write " + path.string());
  out << text;
}

int execute(const std::string& command, const Args& args) {
  using namespace iwgraph::cli;
  Report report;
  Provenance prov;
  std::optional<std::string> out_dir;
  if (!args.config.empty()) {
    const JobConfig cfg = parse_config(args.config);
    report = run_command(command, cfg, args.opt);
    prov = Provenance{cfg.name, cfg.sha256};
    out_dir = cfg.out_dir;
  } else if (args.seed) {
    report = run_random_suite(command, *args.seed, args.opt);
    prov = random_suite_provenance(command, *args.seed, args.opt);
  } else {
    throw iwgraph::ConfigError("no --config given (or --seed for a randomized check)");
  }
  if (!args.out.empty()) out_dir = args.out;

  const std::string json = render_json(report, prov);
  const std::string tsv = render_tsv(report, prov);
  if (out_dir) {
    std::filesystem::create_directories(*out_dir);
    write_file(std::filesystem::path(*out_dir) / (command + ".json"), json);
    write_file(std::filesystem::path(*out_dir) / (command + ".tsv"), tsv);
  }
  std::cout << (args.format == "tsv" ? tsv : json);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Voltage covers, Jacobians, Ihara L-functions and Iwasawa invariants of graph towers"};
  app.set_version_flag("--version", std::string(iwgraph::kVersion));
  app.require_subcommand(1, 1);

  Args args;
  for (const auto& name : iwgraph::cli::subcommand_names()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", args.config, "JSON job description")->check(CLI::ExistingFile);
    sub->add_option("--level", args.opt.level, "tower level n");
    sub->add_option("--max-level", args.opt.max_level, "largest level for tower and iwasawa-fit");
    sub->add_option("--out", args.out, "directory receiving <command>.json and <command>.tsv");
    sub->add_option("--seed", args.seed, "seed of the randomized suite run when no config is given");
    sub->add_option("--count", args.opt.count, "number of random instances");
    sub->add_option("--probe-level", args.opt.probe_level, "level of the content lower bound (mhg-check)");
    sub->add_option("--format", args.format, "stdout format")->check(CLI::IsMember({"json", "tsv"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return execute(command, args);
  } catch (const iwgraph::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const iwgraph::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const iwgraph::ResourceError& e) {
    std::cerr << "resource bound exceeded: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
}
