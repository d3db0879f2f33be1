// Exhaustive suites over the bundled finite crossed modules.

#include <algorithm>
#include <numeric>

#include "lie2/finite_group.hpp"
#include "suite_kit.hpp"

namespace lie2::cli {

namespace {

std::vector<std::filesystem::path> fixture_files(const Ctx& c) {
  std::vector<std::filesystem::path> out;
  const auto dir = c.data_dir() / "crossed_modules";
  if (!std::filesystem::is_directory(dir)) throw ConfigError("no crossed_modules directory under " + c.data_dir().string());
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

Json fixture_json(const std::filesystem::path& file) {
  Json j;
  j["fixture"] = file.filename().string();
  return j;
}

/// Calls body(file, index) on every fixture selected for this run; a fixture that cannot be
/// loaded counts as a failed trial of `chk` with the loader's message.
template <class Body>
void each_fixture(Ctx& c, CheckResult& chk, Body body) {
  const auto files = fixture_files(c);
  for (std::size_t i = 0; i < files.size(); ++i) {
    ++chk.trials;
    if (!c.runs(i)) continue;
    try {
      body(load_crossed_module(files[i]), files[i], i);
    } catch (const std::exception& e) {
      Json in = fixture_json(files[i]);
      in["error"] = e.what();
      offer(chk, 1.0, i, [&] { return in; });
    }
  }
}

bool injective(const std::vector<int>& f) {
  std::vector<int> s = f;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

}  // namespace

void crossed_axioms(Ctx& c, SuiteResult& out) {
  CheckResult chk = make_check("axioms", 0.0, 0);
  std::int64_t evaluated = 0;
  each_fixture(c, chk, [&](const FiniteCrossedModule& cm, const std::filesystem::path& file, std::size_t i) {
    const auto w = crossed_module_witness(cm);
    evaluated += crossed_module_check_count(cm);
    Json in = fixture_json(file);
    in["name"] = cm.name;
    in["order_G"] = cm.G->order();
    in["order_H"] = cm.H->order();
    if (w) in["witness"] = *w;
    offer(chk, exact_residual(!w), i, [&] { return in; });
  });
  chk.details["equalities_checked"] = evaluated;
  finish(chk);
  out.checks.push_back(std::move(chk));
}

void two_group_axioms(Ctx& c, SuiteResult& out) {
  CheckResult chk = make_check("category", 0.0, 0);
  std::int64_t checks = 0, pairs = 0, quads = 0;
  each_fixture(c, chk, [&](const FiniteCrossedModule& cm, const std::filesystem::path& file, std::size_t i) {
    const FiniteTwoGroup tg(cm);
    const TwoGroupReport r = verify_two_group(tg);
    checks += r.checks;
    pairs += r.composable_pairs;
    quads += r.interchange_quadruples;
    Json in = fixture_json(file);
    in["name"] = cm.name;
    in["objects"] = tg.num_objects();
    in["morphisms"] = tg.num_morphisms();
    in["composable_pairs"] = r.composable_pairs;
    in["interchange_quadruples"] = r.interchange_quadruples;
    if (!r.ok) in["witness"] = r.witness;
    offer(chk, exact_residual(r.ok), i, [&] { return in; });
  });
  chk.details["checks"] = checks;
  chk.details["composable_pairs"] = pairs;
  chk.details["interchange_quadruples"] = quads;
  finish(chk);
  out.checks.push_back(std::move(chk));
}

void strict_exactness(Ctx& c, SuiteResult& out) {
  CheckResult seq = make_check("boundary-sequence", 0.0, 0);
  each_fixture(c, seq, [&](const FiniteCrossedModule& cm, const std::filesystem::path& file, std::size_t i) {
    // only crossed modules with injective d have the quotient sequence
    if (!injective(cm.partial)) return;
    const BoundarySequence bs = boundary_sequence(cm);
    const StrictExactnessReport r = strict_kernel_exactness(bs.iota, bs.pi);
    const StrictKernel ker = strict_kernel(bs.pi);
    std::vector<int> im_d = cm.partial;
    std::sort(im_d.begin(), im_d.end());
    Json in = fixture_json(file);
    in["name"] = cm.name;
    in["iota_injective"] = r.iota_injective_objects && r.iota_injective_morphisms;
    in["image_objects"] = r.middle_objects.image;
    in["kernel_objects"] = r.middle_objects.kernel;
    in["image_morphisms"] = r.middle_morphisms.image;
    in["kernel_morphisms"] = r.middle_morphisms.kernel;
    in["pi_surjective"] = r.pi_surjective_objects && r.pi_surjective_morphisms;
    in["kernel_objects_equal_image_of_d"] = ker.objects == im_d;
    offer(seq, exact_residual(r.pass() && ker.objects == im_d), i, [&] { return in; });
  });
  finish(seq);
  out.checks.push_back(std::move(seq));

  const auto point_group = std::make_shared<const FiniteGroup>(FiniteGroup::trivial());
  const FiniteTwoGroup point(codiscrete_module(point_group));

  CheckResult id = make_check("identity-kernel", 0.0, 0);
  each_fixture(c, id, [&](const FiniteCrossedModule& cm, const std::filesystem::path& file, std::size_t i) {
    const FiniteTwoGroup tg(cm);
    const StrictKernel ker = strict_kernel(identity_hom(tg));
    const int e = cm.G->identity();
    const bool ok = ker.objects == std::vector<int>{e} && ker.morphisms == std::vector<int>{tg.unit(e)};
    Json in = fixture_json(file);
    in["kernel_objects"] = ker.objects.size();
    in["kernel_morphisms"] = ker.morphisms.size();
    offer(id, exact_residual(ok), i, [&] { return in; });
  });
  finish(id);
  out.checks.push_back(std::move(id));

  CheckResult term = make_check("terminal-kernel", 0.0, 0);
  each_fixture(c, term, [&](const FiniteCrossedModule& cm, const std::filesystem::path& file, std::size_t i) {
    const FiniteTwoGroup tg(cm);
    const StrictKernel ker = strict_kernel(terminal_hom(tg, point));
    std::vector<int> all_obj(static_cast<std::size_t>(tg.num_objects()));
    std::vector<int> all_mor(static_cast<std::size_t>(tg.num_morphisms()));
    std::iota(all_obj.begin(), all_obj.end(), 0);
    std::iota(all_mor.begin(), all_mor.end(), 0);
    const bool ok = ker.objects == all_obj && ker.morphisms == all_mor;
    Json in = fixture_json(file);
    in["kernel_objects"] = ker.objects.size();
    in["kernel_morphisms"] = ker.morphisms.size();
    offer(term, exact_residual(ok), i, [&] { return in; });
  });
  finish(term);
  out.checks.push_back(std::move(term));
}

}  // namespace lie2::cli
