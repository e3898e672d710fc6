// fusionkit command-line driver.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fusionkit/error.hpp"
#include "fusionkit/json_io.hpp"
#include "fusionkit/verify.hpp"

using namespace fusionkit;

namespace {

// Prints the reports, optionally writes them to `out`, and maps to an exit code.
int emit(const std::vector<verify::CheckReport>& reports, const std::string& out) {
  verify::Json arr = verify::Json::array();
  for (const auto& r : reports) arr.push_back(r.to_json());
  if (out.empty()) {
    std::cout << arr.dump(2) << '\n';
  } else {
    std::ofstream f(out);
    if (!(f << arr.dump(2) << '\n')) {
      std::cerr << "fusionkit: cannot write " << out << '\n';
      return 2;
    }
    for (const auto& r : reports)
      std::cout << verify::to_string(r.status) << "  " << r.check_id << '\n';
  }
  return verify::exit_code(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computational checks for 2-fusion systems and their Sylow data"};
  app.require_subcommand(1);

  std::string lemma, kind = "L34_f", out, base, group_file, only;
  std::uint64_t seed = 0;

  auto* check = app.add_subcommand("check", "Run one family of checks (3.1, 3.2 or 3.3)");
  check->add_option("--lemma", lemma, "3.1, 3.2 or 3.3")->required()->check(
      CLI::IsMember({"3.1", "3.2", "3.3"}));
  check->add_option("--kind", kind, "Sylow kind for 3.3: L34, L34_f, L34_u, L34_fu");
  check->add_option("--seed", seed, "Seed for randomized searches");
  check->add_option("--out", out, "Write the JSON report here");

  auto* wreath = app.add_subcommand("wreath", "Wreath-product model check");
  wreath->add_option("--base", base, "a6 or l32")->required()->check(CLI::IsMember({"a6", "l32"}));
  wreath->add_option("--out", out, "Write the JSON report here");

  auto* fusion = app.add_subcommand("fusion", "Fusion-system invariant suite on a group file");
  fusion->add_option("--group", group_file, "JSON group file")->required();
  fusion->add_option("--out", out, "Write the JSON report here");

  auto* all = app.add_subcommand("run-all", "Run every check");
  all->add_option("--out", out, "Write the JSON report array here")->required();
  all->add_option("--only", only, "Run only this check id (or id prefix before ':')");
  all->add_option("--seed", seed, "Seed for randomized searches");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) {
      if (lemma == "3.1") return emit({verify::check_lemma31(seed)}, out);
      if (lemma == "3.2") return emit({verify::check_lemma32_scenarios(seed)}, out);
      return emit({verify::check_lemma33(pc::parse_sylow_kind(kind))}, out);
    }
    if (*wreath) return emit({verify::check_wreath_model(base)}, out);
    if (*fusion) return emit({verify::check_fusion_axioms(io::load_group_file(group_file))}, out);
    return verify::run_all(seed, out, only.empty() ? std::nullopt : std::optional<std::string>(only));
  } catch (const Error& e) {
    std::cerr << "fusionkit: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "fusionkit: " << e.what() << '\n';
    return 2;
  }
}
