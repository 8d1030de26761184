#include "gsc/cli/app.hpp"

#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "gsc/cli/cache.hpp"
#include "gsc/cli/expression.hpp"
#include "gsc/cli/format.hpp"
#include "gsc/errors.hpp"
#include "gsc/lseries.hpp"
#include "gsc/relations.hpp"
#include "gsc/stieltjes.hpp"
#include "gsc/verify.hpp"

namespace gsc::cli {

namespace {

struct GlobalOptions {
  std::string format = "json";
  std::string cache_path;
  bool no_timestamps = false;

  OutputFormat output() const { return format == "csv" ? OutputFormat::csv : OutputFormat::json; }
  std::unique_ptr<ValueCache> cache() const {
    return cache_path.empty() ? nullptr : std::make_unique<ValueCache>(cache_path);
  }
  void stamp(Json& j) const {
    if (!no_timestamps) j["created_at"] = utc_timestamp();
  }
};

struct StieltjesOptions {
  unsigned k = 0;
  std::size_t modulus = 0;
  std::size_t residue = 0;
  bool all = false;
  unsigned digits = 0;
  std::string method = "em";
  std::uint64_t x_cut = 1'000'000;
};

struct LSeriesOptions {
  std::size_t modulus = 0;
  std::string values;
  std::string at;
  std::size_t deriv = 0;
  unsigned digits = 0;
  std::string closed_form;
};

struct VerifyOptions {
  std::size_t modulus = 0;
  std::string identity;
  std::size_t trials = 10;
  unsigned digits = 0;
  std::uint64_t seed = 0;
};

struct RelationsOptions {
  bool probe = false;
  std::size_t modulus = 0;
  std::string vector;
  std::string coeff_bound;
  unsigned digits = 0;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

PrecisionContext context_for(unsigned digits) {
  PrecisionContext ctx = PrecisionContext::with_digits(digits);
  ctx.validate();
  return ctx;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

Json stieltjes_record(const StieltjesKey& key, const StieltjesValue& v, unsigned decimals) {
  Json j;
  j["kind"] = "stieltjes";
  j["k"] = key.k;
  j["a"] = key.a;
  j["q"] = key.q;
  j["digits"] = v.digits;
  j["value"] = decimal(v.value, decimals);
  j["method"] = std::string(to_string(v.method));
  if (v.method == StieltjesMethod::direct) {
    j["x_cut"] = v.x_cut;
    j["error_estimate"] = magnitude(v.error_estimate);
  }
  return j;
}

Json run_stieltjes(const StieltjesOptions& o, const GlobalOptions& g) {
  if (o.all == (o.residue != 0)) throw UsageError("stieltjes needs exactly one of --residue or --all");
  const PrecisionContext ctx = context_for(o.digits);
  auto cache = g.cache();
  std::vector<std::size_t> residues;
  if (o.all) {
    for (std::size_t a = 1; a <= o.modulus; ++a) residues.push_back(a);
  } else {
    residues.push_back(o.residue);
  }

  Json records = Json::array();
  for (std::size_t a : residues) {
    StieltjesKey key{o.k, a, o.modulus};
    key.validate();
    if (o.method == "direct" || o.method == "both") {
      StieltjesValue v = stieltjes_direct(key, o.x_cut, ctx);
      Json j = stieltjes_record(key, v, std::max(1u, v.digits));
      g.stamp(j);
      records.push_back(std::move(j));
    }
    if (o.method == "em" || o.method == "both") {
      CacheRecord probe;
      probe.kind = "stieltjes";
      probe.k = key.k;
      probe.a = key.a;
      probe.q = key.q;
      probe.method = std::string(to_string(StieltjesMethod::euler_maclaurin));
      StieltjesValue v;
      std::optional<CacheRecord> hit;
      if (cache) hit = cache->lookup(probe, ctx.digits);
      if (hit) {
        WorkingPrecision wp(ctx.working_digits());
        v.value = parse_real(hit->value);
        v.digits = ctx.digits;
        v.method = StieltjesMethod::euler_maclaurin;
      } else {
        v = stieltjes_em(key, ctx);
        if (cache) {
          probe.digits = ctx.digits;
          probe.value = to_fixed(v.value, ctx.digits);
          probe.created_at = utc_timestamp();
          cache->store(probe);
        }
      }
      Json j = stieltjes_record(key, v, ctx.digits);
      g.stamp(j);
      records.push_back(std::move(j));
    }
  }
  return records;
}

PeriodicFunction parse_values(const std::string& text, std::size_t q, const PrecisionContext& ctx) {
  auto items = split(text, ',');
  if (items.size() != q) {
    throw UsageError("--values has " + std::to_string(items.size()) + " entries, expected " + std::to_string(q));
  }
  std::vector<Rational> exact;
  bool rational = true;
  for (const auto& item : items) {
    try {
      exact.push_back(parse_rational(item));
    } catch (const std::exception&) {
      rational = false;
      break;
    }
  }
  if (rational) return PeriodicFunction::from_rationals(std::move(exact), ctx);
  WorkingPrecision wp(ctx.working_digits());
  std::vector<Complex> values;
  for (const auto& item : items) {
    try {
      values.push_back(parse_complex(item));
    } catch (const std::exception& e) {
      throw UsageError("bad entry in --values: " + item);
    }
  }
  return PeriodicFunction(std::move(values));
}

Complex parse_point(const std::string& text, const PrecisionContext& ctx) {
  auto parts = split(text, ',');
  if (parts.empty() || parts.size() > 2) throw UsageError("--at expects RE or RE,IM");
  WorkingPrecision wp(ctx.working_digits());
  try {
    Real re = to_real(parse_rational(parts[0]));
    Real im = parts.size() == 2 ? to_real(parse_rational(parts[1])) : Real(0);
    return Complex(re, im);
  } catch (const std::exception&) {
    throw UsageError("bad --at value: " + text);
  }
}

Json run_lseries(const LSeriesOptions& o, const GlobalOptions& g) {
  const PrecisionContext ctx = context_for(o.digits);
  if (o.modulus < 1) throw UsageError("--modulus must be at least 1");
  PeriodicFunction f = parse_values(o.values, o.modulus, ctx);
  Json j;
  j["modulus"] = o.modulus;
  j["values"] = f.describe();
  j["digits"] = ctx.digits;

  if (!o.closed_form.empty()) {
    Complex s;
    std::size_t k = 0;
    Complex closed;
    if (o.closed_form == "l1") {
      s = Complex(1);
      closed = l1_odd_closed(f, ctx);
    } else if (o.closed_form == "lp0") {
      s = Complex(0);
      k = 1;
      closed = l_prime_0(f, ctx);
    } else {
      s = Complex(1);
      k = 1;
      closed = l_prime_1_odd(f, ctx);
    }
    LSeriesEvaluation series = l_eval(f, s, k, ctx);
    j["closed_form"] = o.closed_form;
    j["s"] = complex_value(s, 0);
    j["deriv"] = k;
    j["value"] = complex_value(closed, ctx.digits);
    j["series_value"] = complex_value(series.value, ctx.digits);
    WorkingPrecision wp(ctx.working_digits());
    j["residual"] = magnitude(abs(closed - series.value));
  } else {
    if (o.at.empty()) throw UsageError("lseries needs --at unless --closed-form is given");
    Complex s = parse_point(o.at, ctx);
    LSeriesEvaluation r = l_eval(f, s, o.deriv, ctx, true);
    j["s"] = complex_value(s, ctx.digits);
    j["deriv"] = o.deriv;
    j["value"] = complex_value(r.value, ctx.digits);
    j["pole"] = r.pole_flag;
    if (r.pole_flag) j["residue"] = complex_value(r.residue, ctx.digits);
  }
  g.stamp(j);
  return j;
}

struct VerifyOutcome {
  Json doc;
  bool pass = true;
};

VerifyOutcome run_verify(const VerifyOptions& o, const GlobalOptions& g) {
  const PrecisionContext ctx = context_for(o.digits);
  std::vector<IdentityId> ids;
  if (o.identity == "all") {
    ids = all_identities();
  } else if (auto id = parse_identity(o.identity)) {
    ids.push_back(*id);
  } else {
    throw UsageError("unknown identity " + o.identity);
  }
  VerifyOutcome out;
  Json reports = Json::array();
  for (IdentityId id : ids) {
    IdentityReport r = verify_identity(id, o.modulus, o.trials, o.seed, ctx);
    Json j;
    j["identity_id"] = r.identity_id;
    j["q"] = r.q;
    j["instances"] = r.instances;
    j["max_residual"] = magnitude(r.max_residual);
    j["worst_case"] = r.worst_case;
    j["digits"] = r.digits;
    j["seed"] = std::to_string(r.seed);
    j["verdict"] = r.pass ? "PASS" : "FAIL";
    out.pass = out.pass && r.pass;
    reports.push_back(std::move(j));
  }
  out.doc["modulus"] = o.modulus;
  out.doc["digits"] = ctx.digits;
  out.doc["seed"] = std::to_string(o.seed);
  out.doc["threshold"] = magnitude(pass_threshold(ctx));
  out.doc["verdict"] = out.pass ? "PASS" : "FAIL";
  out.doc["reports"] = std::move(reports);
  g.stamp(out.doc);
  return out;
}

Integer parse_bound(const std::string& text) {
  Rational r;
  try {
    r = parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError("bad --coeff-bound: " + text);
  }
  if (mp::denominator(r) != 1 || r < 1) throw UsageError("--coeff-bound must be a positive integer");
  return mp::numerator(r);
}

Json relation_json(const IntegerRelation& r) {
  Json j;
  j["status"] = std::string(to_string(r.status));
  Json coeffs = Json::array();
  for (const auto& c : r.coefficients) coeffs.push_back(c.str());
  j["coefficients"] = coeffs;
  j["norm_bound"] = r.norm_bound.str();
  j["digits"] = r.digits;
  if (r.status == RelationStatus::found) {
    j["residual"] = magnitude(r.residual);
    j["verified_digits"] = r.verified_digits;
  }
  j["norm_lower_bound"] = magnitude(r.norm_lower_bound);
  j["iterations"] = r.iterations;
  j["scope"] = std::string(relation_scope_note());
  return j;
}

Json run_relations(const RelationsOptions& o, const GlobalOptions& g) {
  if (o.probe == !o.vector.empty()) throw UsageError("relations needs exactly one of --probe-conjecture or --vector");
  const PrecisionContext ctx = context_for(o.digits);
  const Integer bound = parse_bound(o.coeff_bound);
  Json j;
  if (o.probe) {
    ConjectureProbe p = probe_conjecture(o.modulus, bound, ctx);
    j["mode"] = "probe_conjecture";
    j["modulus"] = o.modulus;
    Json entries = Json::array();
    for (std::size_t a : p.residues) entries.push_back("log_gamma(" + std::to_string(a) + "/" + std::to_string(o.modulus) + ")");
    j["entries"] = entries;
    j.update(relation_json(p.relation));
    j["flagged"] = p.flagged;
  } else {
    auto cache = g.cache();
    auto entries = parse_vector(o.vector, cache.get());
    Json labels = Json::array();
    for (const auto& e : entries) labels.push_back(e.text);
    IntegerRelation r = find_relation(as_source(std::move(entries)), bound, ctx);
    j["mode"] = "vector";
    j["entries"] = labels;
    j.update(relation_json(r));
  }
  g.stamp(j);
  return j;
}

int emit_error(std::ostream& out, const std::string& message, int code) {
  Json j;
  j["error"] = message;
  j["exit_code"] = code;
  out << j.dump(2) << "\n";
  return code;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out) {
  CLI::App app{"Generalized Stieltjes constants and L-series of periodic functions"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--cache", g.cache_path, "JSON-lines value cache");
  app.add_flag("--no-timestamps", g.no_timestamps, "Omit created_at fields");

  StieltjesOptions so;
  auto* st = app.add_subcommand("stieltjes", "Generalized Stieltjes constants gamma_k(a, q)");
  st->fallthrough();
  st->add_option("--k", so.k, "Order k")->required()->check(CLI::Range(0u, 8u));
  st->add_option("--modulus", so.modulus, "Modulus q")->required()->check(CLI::PositiveNumber);
  auto* res_opt = st->add_option("--residue", so.residue, "Residue a, 1 <= a <= q")->check(CLI::PositiveNumber);
  st->add_flag("--all", so.all, "All residues 1..q")->excludes(res_opt);
  st->add_option("--digits", so.digits, "Correct decimal digits")->required();
  st->add_option("--method", so.method, "direct | em | both")->check(CLI::IsMember({"direct", "em", "both"}));
  st->add_option("--x-cut", so.x_cut, "Cut for the direct method");

  LSeriesOptions lo;
  auto* ls = app.add_subcommand("lseries", "L(s, f) and its derivatives");
  ls->fallthrough();
  ls->add_option("--modulus", lo.modulus, "Period q")->required();
  ls->add_option("--values", lo.values, "f(1),...,f(q)")->required();
  ls->add_option("--at", lo.at, "RE[,IM]");
  ls->add_option("--deriv", lo.deriv, "Derivative order")->check(CLI::Range(0, 8));
  ls->add_option("--digits", lo.digits, "Correct decimal digits")->required();
  ls->add_option("--closed-form", lo.closed_form, "l1 | lp0 | lp1")->check(CLI::IsMember({"l1", "lp0", "lp1"}));

  VerifyOptions vo;
  auto* vf = app.add_subcommand("verify", "Identity verification harness");
  vf->fallthrough();
  vf->add_option("--modulus", vo.modulus, "Modulus q")->required();
  vf->add_option("--identity", vo.identity, "Identity id or all")->required();
  vf->add_option("--trials", vo.trials, "Random instances per identity");
  vf->add_option("--digits", vo.digits, "Correct decimal digits")->required();
  vf->add_option("--seed", vo.seed, "Generator seed");

  RelationsOptions ro;
  auto* rl = app.add_subcommand("relations", "Integer relation search");
  rl->fallthrough();
  rl->add_flag("--probe-conjecture", ro.probe, "log Gamma(a/q) over residues prime to q");
  rl->add_option("--modulus", ro.modulus, "Modulus for --probe-conjecture");
  rl->add_option("--vector", ro.vector, "expr1;expr2;...");
  rl->add_option("--coeff-bound", ro.coeff_bound, "Coefficient bound")->required();
  rl->add_option("--digits", ro.digits, "Correct decimal digits")->required();

  std::vector<const char*> args;
  for (const auto& a : argv) args.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(args.size()), args.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return emit_error(out, e.what(), kExitUsage);
  }

  try {
    Json doc;
    int code = kExitOk;
    if (st->parsed()) {
      doc = run_stieltjes(so, g);
    } else if (ls->parsed()) {
      doc = run_lseries(lo, g);
    } else if (vf->parsed()) {
      VerifyOutcome v = run_verify(vo, g);
      doc = std::move(v.doc);
      code = v.pass ? kExitOk : kExitVerifyFail;
    } else {
      doc = run_relations(ro, g);
    }
    out << render(doc, g.output());
    return code;
  } catch (const PrecisionError& e) {
    return emit_error(out, e.what(), kExitPrecision);
  } catch (const std::exception& e) {
    return emit_error(out, e.what(), kExitUsage);
  }
}

}  // namespace gsc::cli
