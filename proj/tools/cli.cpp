#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ncreal/json_io.hpp"

namespace ncreal::cli {

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct Globals {
  std::uint64_t seed = 0;
  Index size = 1;
  Index cap = 4;
  int tries = 20;
  int order = 3;
  std::string point_file;
  bool pretty = false;
};

struct Ctx {
  Globals g;
  std::ostream& out;

  void emit(const Json& j) const { out << (g.pretty ? j.dump(2) : j.dump()) << "\n"; }

  SamplingOptions sampling() const {
    SamplingOptions o;
    o.seed = g.seed;
    o.m_start = g.size;
    o.m_cap = std::max(g.cap, g.size);
    o.tries = g.tries;
    return o;
  }
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << j.dump(2) << "\n";
}

bool looks_like_file(const std::string& arg) {
  return arg.ends_with(".json") || std::filesystem::is_regular_file(arg);
}

std::optional<MatTuple> given_point(const Ctx& ctx) {
  if (ctx.g.point_file.empty()) return std::nullopt;
  return point_from_json(read_json_file(ctx.g.point_file));
}

Index letters_for(const Expr& e, const std::optional<MatTuple>& p) {
  return letter_count(e, p ? static_cast<int>(p->letters()) : 0);
}

// Expansion point: --point if given (checked against the domain), else sampled.
MatTuple expansion_point(const Ctx& ctx, const Expr& e, bool symmetric = false) {
  if (auto p = given_point(ctx)) {
    if (symmetric && !p->is_symmetric()) throw NotSymmetric("--point must be a symmetric tuple");
    eval_expr(e, *p);
    return *p;
  }
  SamplingOptions o = ctx.sampling();
  o.symmetric = symmetric;
  return find_domain_point({e}, letter_count(e), o);
}

Json report_json(const Reduction& red) {
  Json j;
  j["left"] = to_string(red.report.left_class);
  j["right"] = to_string(red.report.right_class);
  j["dim"] = red.realization.n;
  j["totally_reduced"] = red.totally_reduced;
  j["sylvester_degree"] = sylvester_degree_of(red.realization);
  return j;
}

// --- subcommands ---------------------------------------------------------------

int cmd_kappa(const Ctx& ctx, const std::string& text) {
  Json j;
  j["kappa"] = kappa(parse(text));
  ctx.emit(j);
  return kOk;
}

int cmd_realize(const Ctx& ctx, const std::string& text, bool minimal, bool symmetric,
                const std::string& out_file) {
  const Expr e = parse(text);
  Realization r;
  if (minimal && !given_point(ctx) && !symmetric) {
    r = minimal_realization(e, letter_count(e), ctx.sampling()).realization;
  } else {
    r = from_expr(e, expansion_point(ctx, e, symmetric));
    if (minimal) r = reduce(r).realization;
  }
  const Json j = to_json(r);
  if (out_file.empty()) {
    ctx.emit(j);
  } else {
    write_json_file(out_file, j);
    Json s;
    s["written"] = out_file;
    s["n"] = r.n;
    ctx.emit(s);
  }
  return kOk;
}

int cmd_minimize(const Ctx& ctx, const std::string& file, const std::string& out_file) {
  const Realization r = realization_from_json(read_json_file(file));
  const Reduction red = reduce(r);
  if (!out_file.empty()) write_json_file(out_file, to_json(red.realization));
  ctx.emit(report_json(red));
  return kOk;
}

int cmd_degree(const Ctx& ctx, const std::string& text) {
  const Expr e = parse(text);
  Json j;
  if (auto p = given_point(ctx)) {
    eval_expr(e, *p);
    const Realization R = from_expr(e, *p);
    const Reduction red = reduce(R);
    j["sylvester_degree"] = sylvester_degree_of(R);
    j["totally_reduced"] = red.totally_reduced;
  } else {
    const MinimalRealization mr = minimal_realization(e, letter_count(e), ctx.sampling());
    j["sylvester_degree"] = mr.certificate.degree;
    j["totally_reduced"] = mr.certificate.totally_reduced_achieved;
  }
  ctx.emit(j);
  return kOk;
}

int cmd_eval(const Ctx& ctx, const std::string& target) {
  const std::optional<MatTuple> q = given_point(ctx);
  if (!q) throw UsageError("eval needs --point FILE");
  Json j;
  if (looks_like_file(target)) {
    j["value"] = to_json(eval(realization_from_json(read_json_file(target)), *q));
  } else {
    j["value"] = to_json(eval_expr(parse(target), *q));
  }
  ctx.emit(j);
  return kOk;
}

int cmd_iszero(const Ctx& ctx, const std::string& text) {
  const Expr e = parse(text);
  const IdentityReport rep = is_rational_identity(e, letter_count(e), ctx.sampling());
  Json j;
  j["identity"] = rep.identity;
  j["kappa"] = rep.kappa;
  j["m"] = rep.m;
  j["bound_N"] = rep.bound;
  ctx.emit(j);
  return rep.identity ? kOk : kNo;
}

int cmd_equal(const Ctx& ctx, const std::string& a, const std::string& b) {
  const Expr e1 = parse(a), e2 = parse(b);
  const int g = std::max(letter_count(e1), letter_count(e2));
  const bool eq = are_equal(e1, e2, g, ctx.sampling());
  Json j;
  j["equal"] = eq;
  ctx.emit(j);
  return eq ? kOk : kNo;
}

int cmd_deps(const Ctx& ctx, const std::vector<std::string>& texts) {
  std::vector<Expr> rs;
  int g = 0;
  for (const std::string& t : texts) {
    rs.push_back(parse(t));
    g = std::max(g, letter_count(rs.back()));
  }
  const DependenceReport rep = linear_dependence(rs, g, ctx.sampling());
  Index degree_max = 0;
  for (const Expr& r : rs) degree_max = std::max(degree_max, sylvester_degree_of(from_expr(r, rep.point)));
  const Index ell = static_cast<Index>(rs.size());
  Json j;
  switch (rep.status) {
    case Dependence::Dependent: j["status"] = "dependent"; break;
    case Dependence::Independent: j["status"] = "independent"; break;
    case Dependence::Undetermined: j["status"] = "undetermined"; break;
  }
  j["dependent"] = rep.status == Dependence::Dependent;
  if (rep.status == Dependence::Dependent) {
    Json lam = Json::array();
    for (const Rational& x : rep.lambda) lam.push_back(x.str());
    j["lambda"] = lam;
  }
  j["m"] = rep.m;
  j["points"] = rep.points_used;
  j["bound_N_kappa"] = dependence_test_size(rep.m, ell, rep.kappa_max).str();
  j["bound_N_degree"] = dependence_test_size(rep.m, ell, degree_max).str();
  ctx.emit(j);
  return rep.status == Dependence::Dependent ? kOk : kNo;
}

struct BoundsArgs {
  std::string expr;
  Index m = 0;
  Index kappa = -1;
  Index ell = -1;
  Index d = -1;
  Index N = -1;
};

int cmd_bounds(const Ctx& ctx, const BoundsArgs& a) {
  const Index m = a.m > 0 ? a.m : ctx.g.size;
  Json j;
  j["m"] = m;
  Index k = a.kappa;
  if (!a.expr.empty()) k = kappa(parse(a.expr));
  if (k >= 0) {
    j["kappa"] = k;
    j["identity_N"] = identity_test_size(m, k);
  }
  if (a.ell >= 1 && a.d >= 0) j["dependence_N"] = dependence_test_size(m, a.ell, a.d).str();
  if (a.N >= 1) j["degree_greater_than"] = degree_lower_bound(m, a.N).str();
  if (j.size() == 1) throw UsageError("bounds needs an expression, --kappa, --ell/--d or --N");
  ctx.emit(j);
  return kOk;
}

int cmd_domaincheck(const Ctx& ctx, const std::string& target, const std::string& q_file) {
  const std::string at = q_file.empty() ? ctx.g.point_file : q_file;
  if (at.empty()) throw UsageError("domaincheck needs --point FILE (the tuple to test)");
  const MatTuple q = point_from_json(read_json_file(at));
  Realization r;
  if (looks_like_file(target)) {
    r = realization_from_json(read_json_file(target));
  } else {
    const Expr e = parse(target);
    const MinimalRealization mr = minimal_realization(e, letters_for(e, q), ctx.sampling());
    if (!mr.certificate.totally_reduced_achieved) {
      throw NotTotallyReduced("no totally reduced realization found at the sampled points");
    }
    r = mr.realization;
  }
  const bool member = domain_member(r, q);
  Json j;
  j["member"] = member;
  ctx.emit(j);
  return member ? kOk : kNo;
}

int cmd_series(const Ctx& ctx, const std::string& text) {
  const Expr e = parse(text);
  const MatTuple p = expansion_point(ctx, e);
  Json j = to_json(expand(e, p, ctx.g.order));
  j["point"] = point_to_json(p)["point"];
  ctx.emit(j);
  return kOk;
}

int cmd_symrealize(const Ctx& ctx, const std::string& target, bool float_j) {
  Realization r;
  if (looks_like_file(target)) {
    r = realization_from_json(read_json_file(target));
  } else {
    const Expr e = parse(target);
    r = from_expr(e, expansion_point(ctx, e, true));
  }
  const Reduction red = reduce(r);
  if (!red.totally_reduced) throw NotTotallyReduced("reduction at the base point is not totally reduced");
  const SymRealization sr = symmetric_realization(red.realization);
  Json j = to_json(sr);
  const bool positive = positivity_flag(sr);
  j["positive_component"] = positive;
  if (positive) j["advisory"] = "positive on the connected component of the domain containing the base point";
  if (auto jf = exact_jform(sr)) {
    Json jj;
    jj["J"] = to_json(jf->J);
    jj["c"] = to_json(jf->c);
    Json hs = Json::array();
    for (const BimodOp& op : jf->H) hs.push_back(to_json(op));
    jj["H"] = std::move(hs);
    j["jform"] = std::move(jj);
  } else if (float_j) {
    const FloatJForm f = float_jform(sr);
    auto dbl = [](const Eigen::MatrixXd& a) {
      Json rows = Json::array();
      for (Index i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (Index k = 0; k < a.cols(); ++k) row.push_back(a(i, k));
        rows.push_back(std::move(row));
      }
      return rows;
    };
    Json jj;
    jj["inexact"] = true;
    jj["J"] = dbl(f.J);
    jj["c"] = dbl(f.c);
    Json hs = Json::array();
    for (const auto& terms : f.H) {
      Json ts = Json::array();
      for (const auto& [C, B] : terms) ts.push_back(Json{{"C", dbl(C)}, {"B", dbl(B)}});
      hs.push_back(Json{{"terms", std::move(ts)}});
    }
    jj["H"] = std::move(hs);
    j["float_jform"] = std::move(jj);
  }
  ctx.emit(j);
  return kOk;
}

Json error_json(const std::string& kind, const std::string& detail) {
  Json j;
  j["error"] = kind;
  j["detail"] = detail;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  Globals g;
  CLI::App app{"Exact noncommutative rational function realizations", "ncreal"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_flag();
  app.add_option("--seed", g.seed, "Seed for point sampling");
  app.add_option("--size", g.size, "Smallest matrix size to sample")->check(CLI::PositiveNumber);
  app.add_option("--max-size", g.cap, "Largest matrix size to sample")->check(CLI::PositiveNumber);
  app.add_option("--tries", g.tries, "Random tuples per size")->check(CLI::PositiveNumber);
  app.add_option("--order", g.order, "Series truncation order")->check(CLI::NonNegativeNumber);
  app.add_option("--point", g.point_file, "Point file {\"format\":\"ncreal-1\",\"point\":[...]}");
  app.add_flag("--pretty", g.pretty, "Indented JSON output");

  std::string expr, expr2, file, out_file, q_file;
  std::vector<std::string> exprs;
  bool minimal = false, symmetric = false, float_j = false;
  BoundsArgs bargs;

  auto* kappa_cmd = app.add_subcommand("kappa", "Symbol count of an expression");
  kappa_cmd->add_option("expr", expr)->required();
  auto* realize = app.add_subcommand("realize", "Standard-construction realization");
  realize->add_option("expr", expr)->required();
  realize->add_flag("--minimal", minimal, "Reduce to a minimal realization");
  realize->add_flag("--symmetric", symmetric, "Expand about a symmetric point");
  realize->add_option("-o,--output", out_file, "Write the realization to a file");
  auto* minimize = app.add_subcommand("minimize", "Reduce a realization file");
  minimize->add_option("file", file)->required();
  minimize->add_option("-o,--output", out_file, "Write the reduced realization to a file");
  auto* degree = app.add_subcommand("degree", "Sylvester degree of an expression");
  degree->add_option("expr", expr)->required();
  auto* evalc = app.add_subcommand("eval", "Evaluate an expression or realization at --point");
  evalc->add_option("target", expr)->required();
  auto* iszero = app.add_subcommand("iszero", "Rational identity test");
  iszero->add_option("expr", expr)->required();
  auto* equal = app.add_subcommand("equal", "Equality of two expressions");
  equal->add_option("expr1", expr)->required();
  equal->add_option("expr2", expr2)->required();
  auto* deps = app.add_subcommand("deps", "Linear dependence over Q");
  deps->add_option("exprs", exprs)->required();
  auto* bounds = app.add_subcommand("bounds", "Size bounds for identity and dependence tests");
  bounds->add_option("expr", bargs.expr);
  bounds->add_option("--m", bargs.m)->check(CLI::PositiveNumber);
  bounds->add_option("--kappa", bargs.kappa)->check(CLI::NonNegativeNumber);
  bounds->add_option("--ell", bargs.ell)->check(CLI::PositiveNumber);
  bounds->add_option("--d", bargs.d)->check(CLI::NonNegativeNumber);
  bounds->add_option("--N", bargs.N)->check(CLI::PositiveNumber);
  auto* domaincheck = app.add_subcommand("domaincheck", "Extended-domain membership of --point");
  domaincheck->add_option("target", expr)->required();
  domaincheck->add_option("--at", q_file, "Tuple to test (defaults to --point)");
  auto* series = app.add_subcommand("series", "Truncated series expansion about a point");
  series->add_option("expr", expr)->required();
  auto* symrealize = app.add_subcommand("symrealize", "Symmetric realization with signature");
  symrealize->add_option("target", expr)->required();
  symrealize->add_flag("--float-jform", float_j, "Also emit an inexact floating-point J-form");

  Ctx ctx{g, out};
  if (std::find(args.begin(), args.end(), "--help") != args.end() || args.empty()) {
    Json j;
    j["usage"] = app.help();
    out << j.dump() << "\n";
    return args.empty() ? kError : kOk;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    Json j = error_json("UsageError", e.what());
    j["usage"] = app.help();
    out << j.dump() << "\n";
    return kError;
  }
  ctx.g = g;
  try {
    if (*kappa_cmd) return cmd_kappa(ctx, expr);
    if (*realize) return cmd_realize(ctx, expr, minimal, symmetric, out_file);
    if (*minimize) return cmd_minimize(ctx, file, out_file);
    if (*degree) return cmd_degree(ctx, expr);
    if (*evalc) return cmd_eval(ctx, expr);
    if (*iszero) return cmd_iszero(ctx, expr);
    if (*equal) return cmd_equal(ctx, expr, expr2);
    if (*deps) return cmd_deps(ctx, exprs);
    if (*bounds) return cmd_bounds(ctx, bargs);
    if (*domaincheck) return cmd_domaincheck(ctx, expr, q_file);
    if (*series) return cmd_series(ctx, expr);
    if (*symrealize) return cmd_symrealize(ctx, expr, float_j);
    throw UsageError("unknown subcommand");
  } catch (const Error& e) {
    Json j = error_json(e.kind(), e.what());
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) j["offset"] = pe->offset();
    out << j.dump() << "\n";
  } catch (const std::exception& e) {
    out << error_json("InternalError", e.what()).dump() << "\n";
  }
  return kError;
}

}  // namespace ncreal::cli
