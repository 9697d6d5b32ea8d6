#include <rangeloc/rangeloc.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace rangeloc;
using json = nlohmann::ordered_json;

namespace {

enum ExitCode { kOk = 0, kUsage = 2, kBadConfig = 3, kNumerical = 4 };

// Failure with a fixed exit status, reported as JSON on stderr.
struct Failure {
  int status;
  std::string code;
  std::string message;
};

[[noreturn]] void usage(const std::string& msg) { throw Failure{kUsage, "Usage", msg}; }

int status_of(ErrorCode c)
{
  switch (c) {
  case ErrorCode::DuplicateReceiver:
  case ErrorCode::DimensionMismatch:
  case ErrorCode::DegenerateConfig:
  case ErrorCode::NotCollinear:
    return kBadConfig;
  case ErrorCode::InvalidArgument:
  case ErrorCode::InvalidParam:
  case ErrorCode::UnknownLabel:
    return kUsage;
  default:
    return kNumerical;
  }
}

std::vector<double> parse_list(const std::string& text, const char* what)
{
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      usage(std::string("cannot parse ") + what + " value '" + item + "'");
    }
    if (used != item.size() || !std::isfinite(v)) usage(std::string("cannot parse ") + what + " value '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) usage(std::string("empty ") + what + " list");
  return out;
}

std::vector<std::vector<double>> receivers_from_json(const json& j)
{
  if (!j.is_object() || !j.contains("receivers") || !j["receivers"].is_array())
    throw Failure{kBadConfig, "InvalidConfig", "config needs a \"receivers\" array"};
  std::vector<std::vector<double>> raw;
  for (const auto& r : j["receivers"]) {
    if (!r.is_array()) throw Failure{kBadConfig, "InvalidConfig", "each receiver must be an array of numbers"};
    std::vector<double> p;
    for (const auto& v : r) {
      if (!v.is_number()) throw Failure{kBadConfig, "InvalidConfig", "receiver coordinates must be numbers"};
      p.push_back(v.get<double>());
    }
    raw.push_back(p);
  }
  if (j.contains("dimension")) {
    const auto& d = j["dimension"];
    if (!d.is_number_integer()) throw Failure{kBadConfig, "InvalidConfig", "\"dimension\" must be 2 or 3"};
    for (const auto& p : raw)
      if (static_cast<long>(p.size()) != d.get<long>())
        throw Failure{kBadConfig, "DimensionMismatch", "receiver length does not match \"dimension\""};
  }
  return raw;
}

struct ConfigSource {
  std::string file;
  std::string inline_receivers;
};

void add_config_options(CLI::App* sub, ConfigSource& src)
{
  sub->add_option("--config", src.file, "JSON config file {\"receivers\": [[x,y],...]}");
  sub->add_option("--receivers", src.inline_receivers, "inline receivers, e.g. \"0,0;1,0;0,1\"");
}

SensorConfig load_config(const ConfigSource& src)
{
  if (src.file.empty() == src.inline_receivers.empty()) usage("give exactly one of --config or --receivers");
  std::vector<std::vector<double>> raw;
  if (!src.file.empty()) {
    std::ifstream in(src.file);
    if (!in) throw Failure{kBadConfig, "InvalidConfig", "cannot open config file " + src.file};
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw Failure{kBadConfig, "InvalidConfig", std::string("config is not valid JSON: ") + e.what()};
    }
    raw = receivers_from_json(j);
  } else {
    std::stringstream ss(src.inline_receivers);
    std::string item;
    while (std::getline(ss, item, ';')) raw.push_back(parse_list(item, "receiver"));
  }
  try {
    return validate_config(raw);
  } catch (const Error& e) {
    // Anything wrong with the receivers themselves is a config problem.
    throw Failure{kBadConfig, to_string(e.code()), e.what()};
  }
}

json point(Vec2 p) { return json::array({p.x, p.y}); }
json point(Vec3 p) { return json::array({p.x, p.y, p.z}); }

json number(double v)
{
  if (std::isfinite(v)) return v;
  return nullptr;
}

json points(const SolutionSet& s)
{
  json a = json::array();
  for (const Vec2& p : s.points) a.push_back(point(p));
  return a;
}

json plane_json(const Plane& p) { return {{"n", {p.n[0], p.n[1], p.n[2]}}, {"offset", p.offset}}; }

json circle_json(const CircleFiber& c)
{
  return {{"center", point(c.center)}, {"radius", c.radius}, {"axis", point(c.axis)}};
}

json solution3d_json(const SolutionSet3D& s)
{
  json out = {{"kind", to_string(s.kind)}};
  json a = json::array();
  for (const Vec3& p : s.points) a.push_back(point(p));
  out["solutions"] = a;
  if (s.circle) out["circle"] = circle_json(*s.circle);
  return out;
}

RangePair as_pair(const std::vector<double>& v) { return {v[0], v[1]}; }
RangeTriple as_triple(const std::vector<double>& v) { return {v[0], v[1], v[2]}; }

void require_count(const std::vector<double>& v, std::size_t n, const char* what)
{
  if (v.size() != n)
    usage(std::string(what) + " needs " + std::to_string(n) + " values, got " + std::to_string(v.size()));
}

// ---- localize-toa

json localize_toa(const SensorConfig& c, const std::vector<double>& T)
{
  require_count(T, static_cast<std::size_t>(c.size()), "--toa");
  try {
    if (c.dimension() == 2) {
      SolutionSet s;
      if (c.size() == 2) s = invert2(c, as_pair(T));
      else if (c.collinear()) s = invert3_collinear(c, as_triple(T));
      else s = invert3(c, as_triple(T));
      return {{"solutions", points(s)}};
    }
    if (c.size() == 2) return solution3d_json(invert3d_r2(c, as_pair(T)));
    if (c.collinear()) return solution3d_json(invert3d_r3_collinear(c, as_triple(T)));
    return solution3d_json(invert3d_r3(c, as_triple(T)));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Infeasible) throw;
    if (c.dimension() == 2) return {{"solutions", json::array()}};
    return solution3d_json({});
  }
}

// ---- localize-tdoa

json localize_tdoa(const SensorConfig& c, const std::vector<double>& tau)
{
  require_count(tau, 2, "--tdoa");
  c.require_planar(3);
  const PseudorangePair p{tau[0], tau[1]};
  const TauRegion r = classify_tau(c, p);
  json out = {{"label", to_string(r.label)}};
  if (c.collinear()) {
    const auto s = invert_tdoa_collinear(c, p);
    out["solutions"] = s ? points(*s) : json(nullptr);
  } else {
    out["solutions"] = points(invert_tdoa(c, p));
  }
  return out;
}

// ---- classify

json residual_array(const std::vector<double>& r)
{
  json a = json::array();
  for (double v : r) a.push_back(number(v));
  return a;
}

json classify_toa(const SensorConfig& c, const std::vector<double>& T)
{
  require_count(T, static_cast<std::size_t>(c.size()), "--toa");
  json out;
  if (c.size() == 2) {
    const Q2Class q = classify2(c.distance(0, 1), as_pair(T));
    const bool ok = q.verdict != Q2Verdict::Outside;
    int fiber = q.fiber();
    // Two receivers in space: interior ranges give a circle.
    if (c.dimension() == 3 && q.verdict == Q2Verdict::Interior) fiber = kInfiniteFiber;
    out = {{"verdict", ok ? "Feasible" : "Infeasible"},
           {"kind", to_string(c.kind())},
           {"region", to_string(q.verdict)},
           {"fiber", fiber},
           {"residuals", {q.residuals[0], q.residuals[1], q.residuals[2]}}};
    return out;
  }
  if (c.dimension() == 2) {
    const FeasibilityReport r = classify3(c, as_triple(T));
    out = {{"verdict", r.feasible ? "Feasible" : "Infeasible"},
           {"kind", to_string(r.kind)},
           {"fiber", r.fiber},
           {"in_octant", r.in_octant},
           {"quartic", r.raw_residual},
           {"reason", to_string(r.reason)},
           {"q3", residual_array(r.q3)}};
    return out;
  }
  if (c.collinear()) {
    const SolutionSet3D s = invert3d_r3_collinear(c, as_triple(T));
    const int fiber = s.kind == Fiber3DKind::Circle ? kInfiniteFiber : static_cast<int>(s.points.size());
    out = {{"verdict", s.kind == Fiber3DKind::Empty ? "Infeasible" : "Feasible"},
           {"kind", to_string(c.kind())},
           {"fiber", fiber},
           {"fiber_kind", to_string(s.kind)}};
    return out;
  }
  const Feasibility3DReport r = classify3d_r3(c, as_triple(T));
  out = {{"verdict", r.verdict == Solid3DVerdict::Outside ? "Infeasible" : "Feasible"},
         {"kind", to_string(c.kind())},
         {"region", to_string(r.verdict)},
         {"fiber", r.fiber},
         {"in_octant", r.in_octant},
         {"quartic", r.quartic},
         {"quartic_normalized", r.normalized}};
  return out;
}

json classify_tdoa(const SensorConfig& c, const std::vector<double>& tau)
{
  require_count(tau, 2, "--tdoa");
  c.require_planar(3);
  const TauRegion r = classify_tau(c, {tau[0], tau[1]});
  return {{"verdict", r.fiber == 0 ? "Infeasible" : "Feasible"},
          {"label", to_string(r.label)},
          {"fiber", r.fiber},
          {"id", r.id},
          {"p2", residual_array(r.p2_residuals)},
          {"a", r.a},
          {"b", r.b},
          {"c", r.c}};
}

json classify_samples(const SensorConfig& c, const std::string& file)
{
  std::ifstream in(file);
  if (!in) usage("cannot open samples file " + file);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    usage(std::string("samples file is not valid JSON: ") + e.what());
  }
  if (!j.contains("samples") || !j["samples"].is_array()) usage("samples file needs a \"samples\" array");
  json results = json::array();
  for (const auto& row : j["samples"]) results.push_back(classify_toa(c, row.get<std::vector<double>>()));
  return {{"results", results}};
}

// ---- surface-sample

// Gaussian curvature of the image surface from its fundamental forms; used
// when the receivers are collinear and the closed form does not apply.
double graph_curvature(const std::array<Vec2, 3>& m, Vec2 x)
{
  double Xu[3], Xv[3], Xuu[3], Xuv[3], Xvv[3];
  for (int i = 0; i < 3; ++i) {
    const Vec2 r = x - m[i];
    const double d = norm(r);
    if (d == 0.0) return std::numeric_limits<double>::quiet_NaN();
    const Vec2 u = r / d;
    Xu[i] = u.x;
    Xv[i] = u.y;
    Xuu[i] = (1 - u.x * u.x) / d;
    Xuv[i] = -u.x * u.y / d;
    Xvv[i] = (1 - u.y * u.y) / d;
  }
  double N[3] = {Xu[1] * Xv[2] - Xu[2] * Xv[1], Xu[2] * Xv[0] - Xu[0] * Xv[2], Xu[0] * Xv[1] - Xu[1] * Xv[0]};
  const double nn = std::sqrt(N[0] * N[0] + N[1] * N[1] + N[2] * N[2]);
  if (nn <= tol::kLinear) return std::numeric_limits<double>::quiet_NaN();
  for (double& v : N) v /= nn;
  auto d3 = [](const double* a, const double* b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; };
  const double E = d3(Xu, Xu), F = d3(Xu, Xv), G = d3(Xv, Xv);
  const double L = d3(Xuu, N), M = d3(Xuv, N), Nn = d3(Xvv, N);
  return (L * Nn - M * M) / (E * G - F * F);
}

using Row = std::array<double, 6>;

Row surface_row(const SensorConfig& c, const std::array<Vec2, 3>& m, Vec2 x)
{
  const RangeTriple T = forward3(c, x);
  double K = std::numeric_limits<double>::quiet_NaN();
  if (c.collinear()) {
    K = graph_curvature(m, x);
  } else {
    try {
      K = gaussian_curvature(c, x);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::AtReceiver) throw;
    }
  }
  return {x.x, x.y, T.T1, T.T2, T.T3, K};
}

std::vector<Row> surface_sample(const SensorConfig& c, double lo, double hi, int n, int threads)
{
  c.require_planar(3);
  const std::array<Vec2, 3> m = {c.planar(0), c.planar(1), c.planar(2)};
  std::vector<Row> rows(static_cast<std::size_t>(n) * n);
  auto coord = [&](int i) { return i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1); };
  // Rows are written to fixed slots, so the output does not depend on scheduling.
  auto work = [&](int first, int step) {
    for (int j = first; j < n; j += step)
      for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(j) * n + i] = surface_row(c, m, {coord(i), coord(j)});
  };
  if (threads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          work(t, threads);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  return rows;
}

void print_csv(const std::vector<Row>& rows)
{
  std::string out = "x,y,T1,T2,T3,K\n";
  char buf[32];
  for (const Row& r : rows) {
    for (int k = 0; k < 6; ++k) {
      std::snprintf(buf, sizeof buf, "%.17g", r[k]);
      out += buf;
      out += k == 5 ? '\n' : ',';
    }
  }
  std::fwrite(out.data(), 1, out.size(), stdout);
}

// ---- features

const char* node_kind(NodeKind k)
{
  switch (k) {
  case NodeKind::ReceiverImage: return "ReceiverImage";
  case NodeKind::IdealImage: return "IdealImage";
  case NodeKind::Other: return "Other";
  }
  return "Unknown";
}

HullLabel fill_label(Locus l)
{
  const int i = l.index - 1;
  int base = 0;
  switch (l.kind) {
  case LocusKind::Arc: base = static_cast<int>(HullLabel::F123) + i; break;
  case LocusKind::Segment: base = static_cast<int>(HullLabel::G123) + i; break;
  case LocusKind::HalfLinePlus: base = static_cast<int>(HullLabel::L1Plus) + 2 * i; break;
  case LocusKind::HalfLineMinus: base = static_cast<int>(HullLabel::L1Minus) + 2 * i; break;
  }
  return static_cast<HullLabel>(base);
}

json homog(const Homog& h) { return {h[0], h[1], h[2], h[3]}; }

json features(const SensorConfig& c)
{
  c.require_planar(3);
  const std::array<Vec2, 3> m = {c.planar(0), c.planar(1), c.planar(2)};
  if (c.collinear()) {
    const auto s = sigma_square_coefficients(m);
    const auto& k = c.canonical();
    return {{"kind", to_string(c.kind())},
            {"rho", c.rho()},
            {"canonical", {k[0], k[1], k[2]}},
            {"sigma_square_coefficients", json(std::vector<double>(s.begin(), s.end()))},
            {"q3_facet_count", 4}};
  }
  const KummerCoeffs kk = homogeneous_form(c);
  const SurfaceFeatures f = nodes_and_tropes(c);
  json nodes = json::array();
  for (const Node& n : f.nodes) {
    json o = {{"coords", homog(n.coords)}, {"kind", node_kind(n.kind)}};
    if (n.kind == NodeKind::ReceiverImage) {
      const RangeTriple T = kk.unscale(n.coords);
      o["receiver"] = n.receiver;
      o["T"] = {T.T1, T.T2, T.T3};
    }
    nodes.push_back(o);
  }
  json tropes = json::array();
  for (const Trope& t : f.tropes)
    tropes.push_back({{"coords", homog(t.coords)},
                      {"plane", plane_json(t.plane)},
                      {"preimage", t.preimage ? json(to_string(*t.preimage)) : json(nullptr)},
                      {"meets_image", t.meets_image}});
  json arcs = json::array();
  for (const Locus& l : all_loci()) {
    const ConicArc a = conic_arc(c, l);
    json bounds = json::array();
    for (const Plane& b : a.bounds) bounds.push_back(plane_json(b));
    arcs.push_back({{"label", to_string(l)}, {"plane", plane_json(a.plane)}, {"bounds", bounds}});
  }
  json facets = json::array();
  for (int i = 0; i < 12; ++i) facets.push_back({{"index", i}, {"locus", to_string(facet_locus(i))}});
  json hull = json::array();
  for (const char* v : {"V0", "V1", "V2", "V3"}) hull.push_back({{"label", v}, {"type", "patch"}});
  for (int i = 0; i < 12; ++i) {
    const Locus l = facet_locus(i);
    hull.push_back({{"label", to_string(fill_label(l))}, {"type", "fill"}, {"facet", i}, {"locus", to_string(l)}});
  }
  for (int p = 0; p < 3; ++p) {
    const RangeTriple T = forward3(c, m[p]);
    hull.push_back({{"label", "UnboundedEdge"}, {"type", "edge"}, {"receiver", p}, {"base", {T.T1, T.T2, T.T3}},
                    {"direction", {1, 1, 1}}});
  }
  return {{"kind", to_string(c.kind())},
          {"homogeneous", {{"a", kk.a}, {"b", kk.b}, {"c", kk.c}}},
          {"nodes", nodes},
          {"tropes", tropes},
          {"conic_arcs", arcs},
          {"q3_facets", facets},
          {"hull_components", hull}};
}

// ---- params

json params_from_config(const SensorConfig& c)
{
  c.require_planar(3);
  const AngleCosines abc = abc_from_config(c);
  return {{"a", abc.a}, {"b", abc.b}, {"c", abc.c}, {"scale", c.distance(0, 1)},
          {"cayley_residual", cayley_residual(abc.a, abc.b, abc.c)}};
}

json params_to_config(const std::vector<double>& v)
{
  if (v.size() != 2 && v.size() != 3) usage("--param needs a,c or a,c,scale");
  const ParamPoint p{v[0], v[1], v.size() == 3 ? v[2] : 1.0};
  const SensorConfig c = config_from_param(p);
  json r = json::array();
  for (int i = 0; i < 3; ++i) r.push_back(point(c.planar(i)));
  return {{"receivers", r}, {"b", b_from_ac(p.a, p.c)}};
}

// ---- simulate

json simulate(const SensorConfig& c, const std::vector<double>& src, const NoiseSpec& spec, int n)
{
  if (static_cast<int>(src.size()) != c.dimension()) usage("--source must match the config dimension");
  const auto samples = c.dimension() == 2 ? gen_noisy_toa(c, Vec2{src[0], src[1]}, spec, n)
                                          : gen_noisy_toa(c, Vec3{src[0], src[1], src[2]}, spec, n);
  return {{"noise", {{"model", "gaussian"}, {"sigma", spec.sigma}, {"bias", spec.bias}, {"seed", spec.seed}}},
          {"samples", samples}};
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Range-based source localization"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "rangeloc 0.1.0");

  ConfigSource src;
  std::string toa, tdoa, samples, range = "-2:3", format = "csv", source, param;
  int resolution = 50, threads = 1, count = 1;
  NoiseSpec noise;

  auto* loc_toa = app.add_subcommand("localize-toa", "invert range measurements");
  add_config_options(loc_toa, src);
  loc_toa->add_option("--toa", toa, "ranges T1,T2[,T3]")->required();

  auto* loc_tdoa = app.add_subcommand("localize-tdoa", "invert pseudoranges");
  add_config_options(loc_tdoa, src);
  loc_tdoa->add_option("--tdoa", tdoa, "pseudoranges tau1,tau2")->required();

  auto* cls = app.add_subcommand("classify", "feasibility report for ranges or pseudoranges");
  add_config_options(cls, src);
  auto* o_toa = cls->add_option("--toa", toa, "ranges");
  auto* o_tdoa = cls->add_option("--tdoa", tdoa, "pseudoranges");
  auto* o_samples = cls->add_option("--samples", samples, "output of simulate");
  o_toa->excludes(o_tdoa)->excludes(o_samples);
  o_tdoa->excludes(o_samples);

  auto* surf = app.add_subcommand("surface-sample", "sample the range image over a grid");
  add_config_options(surf, src);
  surf->add_option("--range", range, "grid extent lo:hi on both axes");
  surf->add_option("--resolution", resolution, "grid points per axis")->check(CLI::Range(2, 100000));
  surf->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 256));
  surf->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* feat = app.add_subcommand("features", "nodes, tropes, conic arcs, Q3 facets and hull components");
  add_config_options(feat, src);

  auto* par = app.add_subcommand("params", "angle cosines of a triangle, or a triangle from (a, c)");
  add_config_options(par, src);
  par->add_option("--param", param, "a,c[,scale]");

  auto* sim = app.add_subcommand("simulate", "noisy range samples");
  add_config_options(sim, src);
  sim->add_option("--source", source, "source position")->required();
  sim->add_option("--sigma", noise.sigma, "noise standard deviation")->check(CLI::NonNegativeNumber);
  sim->add_option("--bias", noise.bias, "shared bias");
  sim->add_option("--seed", noise.seed, "generator seed");
  sim->add_option("--n", count, "number of samples")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << json{{"error", {{"code", "Usage"}, {"message", e.what()}}}}.dump() << '\n';
    return kUsage;
  }

  try {
    if (loc_toa->parsed()) {
      emit(localize_toa(load_config(src), parse_list(toa, "--toa")));
    } else if (loc_tdoa->parsed()) {
      emit(localize_tdoa(load_config(src), parse_list(tdoa, "--tdoa")));
    } else if (cls->parsed()) {
      const SensorConfig c = load_config(src);
      if (!toa.empty()) emit(classify_toa(c, parse_list(toa, "--toa")));
      else if (!tdoa.empty()) emit(classify_tdoa(c, parse_list(tdoa, "--tdoa")));
      else if (!samples.empty()) emit(classify_samples(c, samples));
      else usage("classify needs --toa, --tdoa or --samples");
    } else if (surf->parsed()) {
      const auto colon = range.find(':');
      if (colon == std::string::npos) usage("--range must be lo:hi");
      const double lo = parse_list(range.substr(0, colon), "--range")[0];
      const double hi = parse_list(range.substr(colon + 1), "--range")[0];
      if (!(lo < hi)) usage("--range needs lo < hi");
      const auto rows = surface_sample(load_config(src), lo, hi, resolution, threads);
      if (format == "csv") {
        print_csv(rows);
      } else {
        json r = json::array();
        for (const Row& row : rows) {
          json a = json::array();
          for (double v : row) a.push_back(number(v));
          r.push_back(a);
        }
        emit({{"columns", {"x", "y", "T1", "T2", "T3", "K"}}, {"rows", r}});
      }
    } else if (feat->parsed()) {
      emit(features(load_config(src)));
    } else if (par->parsed()) {
      if (!param.empty()) {
        if (!src.file.empty() || !src.inline_receivers.empty()) usage("--param excludes a config");
        emit(params_to_config(parse_list(param, "--param")));
      } else {
        emit(params_from_config(load_config(src)));
      }
    } else if (sim->parsed()) {
      emit(simulate(load_config(src), parse_list(source, "--source"), noise, count));
    }
  } catch (const Failure& f) {
    std::cerr << json{{"error", {{"code", f.code}, {"message", f.message}}}}.dump() << '\n';
    return f.status;
  } catch (const Error& e) {
    std::cerr << json{{"error", {{"code", to_string(e.code())}, {"message", e.what()}}}}.dump() << '\n';
    return status_of(e.code());
  }
  return kOk;
}
