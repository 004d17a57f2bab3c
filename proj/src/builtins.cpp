#include "mirrorstab/errors.hpp"
#include "mirrorstab/mirror_chart.hpp"

#include <algorithm>

namespace mirrorstab {

namespace {

Rat rq(long n, long d = 1) { return Rat{n} / d; }

Rat param_or(const std::map<std::string, Rat>& p, const std::string& key,
             const Rat& fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

void check_known_params(const std::map<std::string, Rat>& overrides,
                        std::initializer_list<const char*> known) {
  for (const auto& [key, value] : overrides) {
    if (std::find_if(known.begin(), known.end(), [&](const char* k) {
          return key == k;
        }) == known.end())
      throw ConfigError("unknown Kähler parameter '" + key + "' for this surface");
  }
}

std::shared_ptr<const std::function<MirrorChart(const std::map<std::string, Rat>&)>>
rebuild_hook(const std::string& name) {
  return std::make_shared<const std::function<MirrorChart(const std::map<std::string, Rat>&)>>(
      [name](const std::map<std::string, Rat>& p) { return make_builtin(name, p); });
}

MirrorChart make_p2(const std::map<std::string, Rat>& overrides) {
  check_known_params(overrides, {});
  ToricSurface fan({{1, 0}, {0, 1}, {-1, -1}}, {"D1", "D2", "D3"});
  MirrorChart chart = toric_chart(fan, {rq(1, 3), rq(1, 3), rq(1, 3)});
  chart.surface = "p2";
  chart.basis = NamedBasis{{"H"}, {{rq(1)}}};
  for (auto& th : chart.thetas) th.cls = {rq(1)};
  chart.omega_cls = {rq(1)};
  chart.completeness_note =
      "Fano chart: every critical point lies in the torus; residue sums are complete.";
  chart.rebuild = rebuild_hook("p2");
  return chart;
}

MirrorChart make_blp_p2(const std::map<std::string, Rat>& overrides) {
  check_known_params(overrides, {"q"});
  Rat q = param_or(overrides, "q", rq(1, 2));
  ToricSurface fan({{-1, -1}, {1, 0}, {1, 1}, {0, 1}}, {"H", "L1", "E", "L2"});
  MirrorChart chart =
      toric_chart(fan, {rq(1, 3), rq(1, 3), rq(2, 3) - q, rq(1, 3)});
  chart.surface = "blp_p2";
  chart.params = {{"q", q}};
  chart.basis = NamedBasis{{"H", "E"}, {{rq(1), rq(0)}, {rq(0), rq(-1)}}};
  chart.thetas[0].cls = {rq(1), rq(0)};
  chart.thetas[1].cls = {rq(1), rq(-1)};
  chart.thetas[2].cls = {rq(0), rq(1)};
  chart.thetas[3].cls = {rq(1), rq(-1)};
  chart.omega_cls = {rq(1), -q};
  chart.scan_param = "q";
  chart.completeness_note =
      "Fano chart: every critical point lies in the torus; residue sums are complete.";
  chart.rebuild = rebuild_hook("blp_p2");
  return chart;
}

MirrorChart make_blpq_p2(const std::map<std::string, Rat>& overrides) {
  check_known_params(overrides, {"a", "b"});
  Rat a = param_or(overrides, "a", rq(1, 3));
  Rat b = param_or(overrides, "b", rq(1, 3));
  ToricSurface fan({{-1, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 0}},
                   {"D1", "D2", "D3", "D4", "D5"});
  MirrorChart chart = toric_chart(
      fan, {rq(1, 3), rq(1, 3), rq(2, 3) - a, rq(1, 3), rq(2, 3) - b});
  chart.surface = "blpq_p2";
  chart.params = {{"a", a}, {"b", b}};
  chart.basis = NamedBasis{
      {"H", "E", "F"},
      {{rq(1), rq(0), rq(0)}, {rq(0), rq(-1), rq(0)}, {rq(0), rq(0), rq(-1)}}};
  chart.thetas[0].cls = {rq(1), rq(0), rq(-1)};
  chart.thetas[1].cls = {rq(1), rq(-1), rq(0)};
  chart.thetas[2].cls = {rq(0), rq(1), rq(0)};
  chart.thetas[3].cls = {rq(1), rq(-1), rq(-1)};
  chart.thetas[4].cls = {rq(0), rq(0), rq(1)};
  chart.omega_cls = {rq(1), -a, -b};
  chart.completeness_note =
      "Fano chart: every critical point lies in the torus; residue sums are complete.";
  chart.rebuild = rebuild_hook("blpq_p2");
  return chart;
}

MirrorChart make_p1xp1_blowup(const std::map<std::string, Rat>& overrides) {
  check_known_params(overrides, {"r"});
  Rat r = param_or(overrides, "r", rq(1, 2));
  ToricSurface fan({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {0, -1}},
                   {"L1", "E", "L2", "H2", "H1"});
  MirrorChart chart = toric_chart(fan, {rq(0), -r, rq(0), rq(1), rq(1)});
  chart.surface = "p1xp1_blowup";
  chart.params = {{"r", r}};
  chart.basis = NamedBasis{
      {"F1", "F2", "E"},
      {{rq(0), rq(1), rq(0)}, {rq(1), rq(0), rq(0)}, {rq(0), rq(0), rq(-1)}}};
  chart.thetas[0].cls = {rq(1), rq(0), rq(-1)};
  chart.thetas[1].cls = {rq(0), rq(0), rq(1)};
  chart.thetas[2].cls = {rq(0), rq(1), rq(-1)};
  chart.thetas[3].cls = {rq(1), rq(0), rq(0)};
  chart.thetas[4].cls = {rq(0), rq(1), rq(0)};
  chart.omega_cls = {rq(1), rq(1), -r};
  chart.scan_param = "r";
  chart.completeness_note =
      "Fano chart: every critical point lies in the torus; residue sums are complete.";
  chart.rebuild = rebuild_hook("p1xp1_blowup");
  return chart;
}

MirrorChart make_iterated_blowup(const std::map<std::string, Rat>& overrides) {
  check_known_params(overrides, {"r"});
  Rat r = param_or(overrides, "r", rq(4, 5));
  ToricSurface fan({{1, 0}, {1, 1}, {1, 2}, {0, 1}, {-1, -1}},
                   {"D5", "D4", "D3", "D2", "D1"});
  MirrorChart chart =
      toric_chart(fan, {rq(0), rq(-1, 2), -r, rq(0), rq(1)});
  chart.surface = "iterated_blowup";
  chart.params = {{"r", r}};
  chart.basis = NamedBasis{{"H", "E1", "E2"},
                           {{rq(1), rq(0), rq(0)},
                            {rq(0), rq(-2), rq(1)},
                            {rq(0), rq(1), rq(-1)}}};
  chart.thetas[0].cls = {rq(1), rq(-1), rq(-1)};  // D5
  chart.thetas[1].cls = {rq(0), rq(1), rq(0)};    // D4 = E1 (the -2 curve class)
  chart.thetas[2].cls = {rq(0), rq(0), rq(1)};    // D3 = E2
  chart.thetas[3].cls = {rq(1), rq(-1), rq(-2)};  // D2
  chart.thetas[4].cls = {rq(1), rq(0), rq(0)};    // D1 = H
  chart.omega_cls = {rq(1), rq(-1, 2), -r};
  chart.scan_param = "r";
  chart.completeness_note =
      "Weak Fano chart (the -2 curve has anticanonical degree 0): residue/"
      "intersection identities hold asymptotically in k, not exactly.";
  chart.rebuild = rebuild_hook("iterated_blowup");
  return chart;
}

} // namespace

MirrorChart deg4_mirror(const Rat& delta) {
  if (delta < 0 || delta >= rq(1, 2))
    throw NotKahler("deg4 chart parameter delta must lie in [0, 1/2)");
  MirrorChart chart;
  chart.surface = "dp4";
  chart.params = {{"delta", delta}};
  chart.basis.names = {"H", "E1", "E2", "E3", "E4", "E5"};
  chart.basis.form.assign(6, std::vector<Rat>(6, rq(0)));
  chart.basis.form[0][0] = 1;
  for (int i = 1; i < 6; ++i) chart.basis.form[i][i] = -1;

  auto theta = [](std::string name, std::vector<ChartTerm> terms,
                  std::vector<Rat> cls) {
    ThetaFunction t;
    t.name = std::move(name);
    t.terms = std::move(terms);
    t.cls = std::move(cls);
    return t;
  };
  Rat h = rq(1, 2);
  chart.thetas.push_back(theta(
      "D1",
      {{-1, -2, h - delta, 1}, {0, -1, -h, 1}, {-1, -1, rq(0), 1}},
      {rq(0), rq(1), rq(0), rq(0), rq(0), rq(0)}));
  chart.thetas.push_back(theta(
      "D2",
      {{0, 1, -(1 - delta), 1}, {-1, -1, h - delta, 1}, {-1, 0, rq(0), 1}},
      {rq(1), rq(-1), rq(-1), rq(0), rq(0), rq(0)}));
  chart.thetas.push_back(theta(
      "D3",
      {{1, 2, -(rq(3, 2) - delta), 1}, {0, 1, -h, 1}, {1, 1, rq(-1), 1}},
      {rq(1), rq(0), rq(0), rq(-1), rq(-1), rq(0)}));
  chart.thetas.push_back(theta(
      "D4",
      {{1, 1, -(rq(3, 2) - delta), 1}, {0, -1, -delta, 1}, {1, 0, rq(-1), 1}},
      {rq(1), rq(-1), rq(0), rq(0), rq(0), rq(-1)}));

  chart.omega_theta_weights = {rq(1), h, h, rq(0)};
  // Class of the stored combination theta_1 + theta_2/2 + theta_3/2.
  chart.omega_cls = {rq(1), h, -h, -h, -h, rq(0)};
  chart.expected_critical_count = 8;
  chart.completeness_note =
      "Boundary polarisation limit: the polarisation combination has square "
      "zero; all 8 critical points lie in the torus chart.";
  chart.rebuild = rebuild_hook("dp4");
  return chart;
}

MirrorChart deg5_mirror(const std::array<Rat, 4>& a) {
  const Rat& a1 = a[0];
  const Rat& a2 = a[1];
  const Rat& a3 = a[2];
  const Rat& a4 = a[3];
  Rat total = a1 + a2 + a3 + a4;
  if (a1 < 0 || a2 < 0 || a3 < 0 || a4 < 0 || a2 >= 1 || a3 >= 1 || a4 >= 1 ||
      total >= 2 || a1 + a2 > 1)
    throw NotKahler("deg5 chart parameters out of range");

  MirrorChart chart;
  chart.surface = "dp5";
  chart.params = {{"a1", a1}, {"a2", a2}, {"a3", a3}, {"a4", a4}};
  chart.basis.names = {"H", "E1", "E2", "E3", "E4"};
  chart.basis.form.assign(5, std::vector<Rat>(5, rq(0)));
  chart.basis.form[0][0] = 1;
  for (int i = 1; i < 5; ++i) chart.basis.form[i][i] = -1;

  auto theta = [](std::string name, std::vector<ChartTerm> terms,
                  std::vector<Rat> cls) {
    ThetaFunction t;
    t.name = std::move(name);
    t.terms = std::move(terms);
    t.cls = std::move(cls);
    return t;
  };
  chart.thetas.push_back(theta("D1", {{1, 0, rq(0), 1}},
                               {rq(1), rq(-1), rq(-1), rq(0), rq(0)}));
  chart.thetas.push_back(theta("D2", {{0, 1, rq(0), 1}},
                               {rq(0), rq(0), rq(1), rq(0), rq(0)}));
  chart.thetas.push_back(theta("D3",
                               {{-1, 0, -(1 - a4), 1}, {-1, 1, -a2, 1}},
                               {rq(1), rq(0), rq(-1), rq(-1), rq(0)}));
  chart.thetas.push_back(theta("D4",
                               {{-1, 0, -(1 - a3), 1},
                                {0, -1, -(2 - total), 1},
                                {-1, -1, -(2 - a2 - a3 - a4), 1}},
                               {rq(0), rq(0), rq(0), rq(1), rq(0)}));
  chart.thetas.push_back(theta("D5",
                               {{0, -1, -(1 - a2), 1}, {1, -1, -(1 - a1 - a2), 1}},
                               {rq(1), rq(0), rq(0), rq(-1), rq(-1)}));

  chart.omega_theta_weights = {rq(1, 2), rq(1), rq(1, 2), rq(1, 2), rq(0)};
  chart.omega_cls = {rq(1), rq(-1, 2), rq(0), rq(0), rq(0)};
  chart.expected_critical_count = -1;
  chart.completeness_note =
      "Two of the seven critical values lie outside this torus chart at the "
      "default parameter corner; in-chart residue sums carry that caveat.";
  chart.rebuild = rebuild_hook("dp5");
  return chart;
}

std::vector<std::string> builtin_names() {
  return {"p2",          "blp_p2",        "blpq_p2", "p1xp1_blowup",
          "iterated_blowup", "dp4",       "dp5"};
}

bool is_builtin(const std::string& name) {
  auto names = builtin_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

MirrorChart make_builtin(const std::string& name,
                         const std::map<std::string, Rat>& overrides) {
  if (name == "p2") return make_p2(overrides);
  if (name == "blp_p2") return make_blp_p2(overrides);
  if (name == "blpq_p2") return make_blpq_p2(overrides);
  if (name == "p1xp1_blowup") return make_p1xp1_blowup(overrides);
  if (name == "iterated_blowup") return make_iterated_blowup(overrides);
  if (name == "dp4") {
    check_known_params(overrides, {"delta"});
    return deg4_mirror(param_or(overrides, "delta", Rat{0}));
  }
  if (name == "dp5") {
    check_known_params(overrides, {"a1", "a2", "a3", "a4"});
    return deg5_mirror({param_or(overrides, "a1", rq(1, 2)),
                        param_or(overrides, "a2", Rat{0}),
                        param_or(overrides, "a3", Rat{0}),
                        param_or(overrides, "a4", Rat{0})});
  }
  throw ConfigError("unknown surface: " + name);
}

} // namespace mirrorstab
