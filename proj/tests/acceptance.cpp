// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fusionkit/cohomology.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/modrep.hpp"
#include "fusionkit/pcgroup.hpp"
#include "fusionkit/verify.hpp"

using namespace fusionkit;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 20261017;

struct Criterion {
  int number;
  std::string name;
  double limit_s;
  std::function<bool(std::string&)> body;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool all_true(const verify::Json& assertions) {
  for (const auto& [k, v] : assertions.items())
    if (!v.get<bool>()) return false;
  return true;
}

bool criterion1(std::string& note) {
  const std::pair<pc::SylowKind, std::size_t> expected[] = {
      {pc::SylowKind::L34, 64}, {pc::SylowKind::L34_f, 128},
      {pc::SylowKind::L34_u, 128}, {pc::SylowKind::L34_fu, 256}};
  bool ok = true;
  for (const auto& [kind, order] : expected) {
    const auto t0 = Clock::now();
    const auto g = pc::builtin_sylow(kind);
    const auto z = pc::characteristic_subgroup(g, pc::CharacteristicKind::Center);
    const double dt = seconds_since(t0);
    ok = ok && g.order() == order && dt < 1.0;
    if (kind == pc::SylowKind::L34) ok = ok && z == g.subgroup({"t1", "t2"}) && z.order() == 4;
    if (kind == pc::SylowKind::L34_f) ok = ok && z == g.subgroup({"t1"}) && z.order() == 2;
    note += std::string(pc::to_string(kind)) + "=" + std::to_string(g.order()) + " ";
  }
  return ok;
}

bool criterion2(std::string& note) {
  const auto g = pc::builtin_sylow(pc::SylowKind::L34_f);
  std::vector<pc::SubgroupHandle> expected{g.subgroup({"t1", "t2", "a1", "a2"}),
                                           g.subgroup({"t1", "t2", "b1", "b2"})};
  std::sort(expected.begin(), expected.end());
  const auto as = pc::max_elementary_abelians(g);
  const auto j = pc::thompson_subgroup(g);
  note = "|A|=" + std::to_string(as.size()) + " |J|=" + std::to_string(j.order());
  return as == expected && j == g.subgroup({"t1", "t2", "a1", "a2", "b1", "b2"}) &&
         j.order() == 64;
}

bool lemma31_part(const mod::MatGroupF2& g, std::size_t commutant, std::string& note) {
  const auto orbits = mod::orbits_on_vectors(g);
  const bool transitive = orbits.size() == 1 && orbits[0].size() == 15;
  const auto comm = mod::centralizer_in_gl(g).order();
  auto gamma = std::make_shared<const mod::MatGroupF2>(g);
  const auto h1 = coh::first_cohomology(coh::Module::natural(gamma));
  note += g.name() + ": commutant " + std::to_string(comm) + ", dim Z1 " +
          std::to_string(h1.dim_z1) + ", H1 " + std::to_string(h1.dim_h1) + "; ";
  return transitive && comm == commutant && h1.dim_h1 == 0 && h1.dim_z1 == 4;
}

bool criterion3(std::string& note) {
  const auto a7 = mod::find_a7_in_gl42(kSeed);
  const auto gl24 = mod::build_gl24_in_gl42();
  bool ok = lemma31_part(a7, 1, note);
  ok = lemma31_part(gl24, 3, note) && ok;
  const auto gl = mod::general_linear_group(4).order();
  note += "index " + std::to_string(gl / a7.order());
  return ok && gl == 8 * a7.order();
}

bool criterion4(std::string& note) {
  bool ok = true;
  for (const auto& g : {mod::find_a7_in_gl42(kSeed), mod::build_gl24_in_gl42()}) {
    const auto w = coh::find_sl24_witness(g);
    const bool h = coh::higman_instance_check(w);
    note += g.name() + "=" + (h ? "true " : "false ");
    ok = ok && h;
  }
  return ok;
}

bool criterion5(std::string& note) {
  bool ok = true;
  for (const auto& g : {mod::find_a7_in_gl42(kSeed), mod::build_gl24_in_gl42()}) {
    const auto sc = coh::make_lemma32_scenario(g);
    const auto v = coh::lemma32_conclusion_check(sc.extension, sc.x, sc.v_basis, sc.g_gens);
    const bool good = v.found && v.y_order == 256 && v.y_type == coh::YType::Elementary &&
                      v.y_g_invariant && v.xbar_elementary && v.comm_map_well_defined &&
                      v.comm_map_bijective && v.comm_map_equivariant;
    note += g.name() + ": |Y|=" + std::to_string(v.y_order) + " " +
            std::string(coh::to_string(v.y_type)) + "; ";
    ok = ok && good;
  }
  return ok;
}

bool criterion6(std::string& note) {
  bool ok = true;
  std::size_t discrepancies = 0;
  for (const char* name : {"s4", "d8", "a6", "l32"}) {
    const auto r = verify::check_fusion_axioms(verify::builtin_group(name));
    discrepancies += r.details.value("oracle_discrepancies", std::size_t{1});
    discrepancies += r.details.value("local_identity_failures", std::size_t{1});
    const bool good = r.status == verify::Status::Pass && all_true(r.details.at("assertions"));
    note += std::string(name) + (good ? " ok " : " bad ");
    ok = ok && good;
  }
  note += "discrepancies " + std::to_string(discrepancies);
  return ok && discrepancies == 0;
}

bool criterion7(std::string& note) {
  bool ok = true;
  for (const char* base : {"a6", "l32"}) {
    const auto r = verify::check_wreath_model(base);
    const auto& a = r.details.at("assertions");
    const bool good = r.status == verify::Status::Pass &&
                      a.at("C_G(x)_is_x_times_diag").get<bool>() &&
                      a.at("rank_doubling").get<bool>();
    note += std::string(base) + ": m(F)=" + r.details.at("m(F)").dump() +
            " m(O2)=" + r.details.at("m(O2(N_G(E)))").dump() + "; ";
    ok = ok && good;
  }
  return ok;
}

bool criterion8(std::string& note) {
  const std::vector<verify::CheckReport> corrupted{
      verify::check_lemma31_corrupted(kSeed), verify::check_lemma32_corrupted(),
      verify::check_lemma33_corrupted(), verify::check_wreath_corrupted("a6"),
      verify::check_wreath_corrupted("l32"), verify::check_fusion_corrupted()};
  bool ok = true;
  for (const auto& r : corrupted) ok = ok && r.status == verify::Status::Fail;
  const auto first = verify::run_checks(kSeed);
  const auto second = verify::run_checks(kSeed);
  bool same = first.size() == second.size();
  for (std::size_t i = 0; same && i < first.size(); ++i)
    same = first[i].to_json_untimed() == second[i].to_json_untimed();
  note = std::to_string(corrupted.size()) + " corrupted variants, reports " +
         (same ? "identical" : "differ");
  return ok && same;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Sylow orders and centers", 4.0, criterion1},
      {2, "A(T1) and J(T1)", 5.0, criterion2},
      {3, "module facts for A7 and GL2(4)", 60.0, criterion3},
      {4, "Higman check for both SL2(4) instances", 300.0, criterion4},
      {5, "invariant elementary abelian complements", 300.0, criterion5},
      {6, "fusion oracle equivalence and local identities", 300.0, criterion6},
      {7, "wreath model centralizer and rank doubling", 300.0, criterion7},
      {8, "negative controls and determinism", 300.0, criterion8},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::string note;
    bool ok = false;
    const auto t0 = Clock::now();
    try {
      ok = c.body(note);
    } catch (const std::exception& e) {
      note = std::string("error: ") + e.what();
    }
    const double dt = seconds_since(t0);
    if (dt > c.limit_s) {
      ok = false;
      note += " (over time limit)";
    }
    std::printf("%s criterion %d: %s [%.2f s / %.0f s] %s\n", ok ? "PASS" : "FAIL", c.number,
                c.name.c_str(), dt, c.limit_s, note.c_str());
    std::fflush(stdout);
    failed += !ok;
  }
  return failed == 0 ? 0 : 1;
}
