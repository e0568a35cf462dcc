#include "moore/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "moore/bounds.hpp"
#include "moore/errors.hpp"
#include "moore/exponent_set.hpp"
#include "moore/gf_tower.hpp"
#include "moore/linpoly.hpp"
#include "moore/moore_core.hpp"
#include "moore/poly_sparse.hpp"
#include "moore/rank_metric.hpp"
#include "moore/report_json.hpp"
#include "moore/variety_count.hpp"

namespace moore::cli {

namespace {

using report::ordered_json;

struct Config {
  std::uint64_t q = 0;
  std::uint32_t p = 0, e = 0;
  std::uint32_t n = 0;
  std::string exps;
  std::uint32_t k = 0;
  std::string method = "kernel";
  unsigned jobs = 0;
  std::uint64_t budget = 0;  // 0: per-command default
  std::uint64_t seed = 0x5eed;
  bool randomize = false;
  std::string output = "text";
  bool json = false;
  bool verify = false;
  std::string cache_dir;
  std::string base_modulus, ext_modulus;

  bool idealisers = false;
  bool borges = false;
  bool partials = false;
  std::uint32_t m = 0;
  bool final_verdict = false;
  bool sweep = false;
  bool realizable = false;
  std::uint32_t max_exp = 12;
  std::uint32_t i1 = 0, ik2 = 0, ik1 = 0;
};

std::uint64_t budget_or(const Config& c, std::uint64_t fallback) { return c.budget ? c.budget : fallback; }

// ---------------------------------------------------------------------------
// Output

void flatten(const ordered_json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, v] : j.items()) flatten(v, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  if (j.is_array() && !j.empty() && j.front().is_object()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

const ordered_json* lookup(const ordered_json& j, const std::string& path) {
  const ordered_json* cur = &j;
  std::stringstream ss(path);
  std::string part;
  while (std::getline(ss, part, '.')) {
    if (!cur->is_object() || !cur->contains(part)) return nullptr;
    cur = &(*cur)[part];
  }
  return cur;
}

std::string csv_cell(const ordered_json* v) {
  if (v == nullptr || v->is_null()) return "";
  std::string s = v->is_string() ? v->get<std::string>() : v->dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

struct Csv {
  std::vector<std::pair<std::string, std::string>> columns;  // header, path
  std::string rows;  // path of an array of row objects; empty = one row
};

void emit(std::ostream& out, const Config& cfg, const ordered_json& rep, const Csv& csv) {
  const std::string fmt = cfg.json ? "json" : cfg.output;
  if (fmt == "json") {
    out << rep.dump(2) << "\n";
    return;
  }
  if (fmt == "csv") {
    for (std::size_t i = 0; i < csv.columns.size(); ++i) out << (i ? "," : "") << csv.columns[i].first;
    out << "\n";
    auto row = [&](const ordered_json& obj) {
      for (std::size_t i = 0; i < csv.columns.size(); ++i) {
        out << (i ? "," : "") << csv_cell(lookup(obj, csv.columns[i].second));
      }
      out << "\n";
    };
    if (csv.rows.empty()) {
      row(rep);
    } else if (const ordered_json* arr = lookup(rep, csv.rows); arr && arr->is_array()) {
      for (const auto& r : *arr) row(r);
    }
    return;
  }
  flatten(rep, "", out);
}

ordered_json header(const char* command) {
  ordered_json j;
  j["schema_version"] = report::kSchemaVersion;
  j["command"] = command;
  return j;
}

// ---------------------------------------------------------------------------
// Inputs

UPoly parse_coeffs(const std::string& text) {
  UPoly out;
  for (std::int64_t v : parse_exponent_list(text)) out.push_back(static_cast<std::uint32_t>(v));
  return out;
}

FieldCtx make_field(const Config& c) {
  if (c.n == 0) throw InvalidInput("--n is required");
  FieldCtx::Overrides ov;
  if (!c.base_modulus.empty()) ov.base_modulus = parse_coeffs(c.base_modulus);
  if (!c.ext_modulus.empty()) ov.ext_modulus = parse_coeffs(c.ext_modulus);
  if (c.q != 0) return FieldCtx::create_q(c.q, c.n, ov);
  if (c.p == 0) throw InvalidInput("give --q, or --p and --e");
  return FieldCtx::create(c.p, c.e == 0 ? 1 : c.e, c.n, ov);
}

Normalized make_set(const Config& c, std::uint32_t n) {
  if (c.exps.empty()) throw InvalidInput("-I is required");
  return normalize(parse_exponent_list(c.exps), n);
}

// Raw integer set, min shifted to 0, for commands without a modulus n.
ExponentSet integer_set(const Config& c) {
  if (c.exps.empty()) throw InvalidInput("-I is required");
  std::vector<std::int64_t> raw = parse_exponent_list(c.exps);
  std::sort(raw.begin(), raw.end());
  if (raw.front() < 0) throw InvalidInput("exponents must be non-negative");
  if (std::adjacent_find(raw.begin(), raw.end()) != raw.end()) throw InvalidInput("duplicate exponents");
  ExponentSet I;
  for (std::int64_t v : raw) I.exps.push_back(static_cast<std::uint32_t>(v - raw.front()));
  return I;
}

ordered_json input_block(const FieldCtx& ctx, const Normalized& nz) {
  ordered_json j;
  j["q"] = ctx.q();
  j["n"] = ctx.n();
  j["I"] = report::exponents(nz.set);
  j["canonical"] = report::exponents(nz.canonical);
  j["k"] = nz.set.k();
  return j;
}

ParallelOptions parallel(const Config& c) { return ParallelOptions{c.jobs, 0}; }

void require_witness(const FieldCtx& ctx, const ExponentSet& I, const std::optional<Witness>& w,
                     const char* what) {
  if (!w) return;
  if (!verify_witness(ctx, I, w->tuple).ok()) {
    throw std::runtime_error(std::string("witness from the ") + what + " engine failed re-verification");
  }
}

// ---------------------------------------------------------------------------
// Cache: Moore verdicts only (no witnesses), keyed by code version + config.

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::filesystem::path cache_path(const std::string& dir, const std::string& key) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(key)));
  return std::filesystem::path(dir) / (std::string("check-") + buf + ".json");
}

std::optional<ordered_json> cache_load(const std::string& dir, const std::string& key) {
  if (dir.empty()) return std::nullopt;
  std::ifstream in(cache_path(dir, key));
  if (!in) return std::nullopt;
  try {
    const ordered_json j = ordered_json::parse(in);
    if (j.value("key", "") != key || j.value("code_version", "") != kCodeVersion) return std::nullopt;
    return j.at("result");
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void cache_store(const std::string& dir, const std::string& key, const ordered_json& result, std::ostream& err) {
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto path = cache_path(dir, key);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream o(tmp);
    if (!o) {
      err << "warning: cannot write cache file " << tmp << "\n";
      return;
    }
    o << ordered_json{{"code_version", kCodeVersion}, {"key", key}, {"result", result}}.dump() << "\n";
  }
  std::filesystem::rename(tmp, path, ec);
}

// ---------------------------------------------------------------------------
// Commands

int cmd_field(const Config& c, std::ostream& out) {
  const FieldCtx ctx = make_field(c);
  ordered_json rep = header("field");
  ordered_json f = report::field(ctx);
  f["base_modulus_source"] = c.base_modulus.empty() ? "least_irreducible" : "override";
  f["ext_modulus_source"] = c.ext_modulus.empty() ? "least_irreducible" : "override";
  ordered_json frob = ordered_json::array();
  const auto& fm = ctx.frob_matrix();
  for (std::uint32_t r = 0; r < ctx.n(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::uint32_t col = 0; col < ctx.n(); ++col) row.push_back(fm[r * ctx.n() + col]);
    frob.push_back(row);
  }
  f["frob_matrix"] = frob;
  rep["field"] = f;
  emit(out, c, rep,
       Csv{{{"p", "field.p"},
            {"e", "field.e"},
            {"q", "field.q"},
            {"n", "field.n"},
            {"base_modulus", "field.base_modulus"},
            {"ext_modulus", "field.ext_modulus"}},
           ""});
  return kOk;
}

int cmd_check(const Config& c, std::ostream& out, std::ostream& err) {
  const FieldCtx ctx = make_field(c);
  const Normalized nz = make_set(c, ctx.n());
  CheckOptions opt;
  opt.method = parse_method(c.method);
  opt.parallel = parallel(c);
  opt.budget = budget_or(c, opt.budget);

  std::ostringstream key;
  key << kCodeVersion << "|check|p=" << ctx.p() << "|e=" << ctx.e() << "|n=" << ctx.n()
      << "|base=" << report::ordered_json(ctx.base().modulus()).dump()
      << "|ext=" << report::ordered_json(ctx.ext_modulus()).dump() << "|I=" << to_string(nz.set)
      << "|method=" << method_name(opt.method) << "|budget=" << opt.budget;

  ordered_json result;
  if (auto cached = cache_load(c.cache_dir, key.str())) {
    err << "cache hit\n";
    result = *cached;
  } else {
    const MooreVerdict v = moore_check(ctx, nz.set, opt);
    if (c.verify) {
      if (v.kernel) require_witness(ctx, nz.set, v.kernel->witness, "kernel");
      if (v.det) require_witness(ctx, nz.set, v.det->witness, "det");
    }
    result = report::verdict(ctx, v);
    if (v.is_moore) cache_store(c.cache_dir, key.str(), result, err);
    if (c.verify && v.witness) {
      const WitnessCheck wc = verify_witness(ctx, nz.set, v.witness->tuple);
      result["witness_check"] = ordered_json{
          {"fq_rank", wc.fq_rank}, {"det", report::elem(ctx, wc.det)}, {"ok", wc.ok()}};
    }
  }

  ordered_json rep = header("check");
  rep["input"] = input_block(ctx, nz);
  rep["result"] = result;
  const auto th = theorem_applies(nz.set, ctx.q());
  rep["classification"] = ordered_json{{"known_family", family_name(known_family(nz.set, ctx.q()))},
                                       {"theorem", th ? report::theorem(*th) : ordered_json(nullptr)}};
  emit(out, c, rep,
       Csv{{{"q", "input.q"},
            {"n", "input.n"},
            {"I", "input.I"},
            {"method", "result.method"},
            {"is_moore", "result.is_moore"},
            {"work", "result.work"},
            {"engines_agree", "result.engines_agree"},
            {"witness", "result.witness"},
            {"known_family", "classification.known_family"}},
           ""});
  return kOk;
}

int cmd_search(const Config& c, std::ostream& out) {
  const FieldCtx ctx = make_field(c);
  if (c.k == 0) throw InvalidInput("--k is required");
  CheckOptions opt;
  opt.method = parse_method(c.method);
  opt.parallel = parallel(c);
  opt.budget = budget_or(c, opt.budget);
  const SearchReport s = search_moore_sets(ctx, c.k, opt);
  if (c.verify) {
    for (const auto& cl : s.classes) require_witness(ctx, cl.representative, cl.verdict.witness, "search");
  }
  ordered_json rep = header("search");
  rep["input"] = ordered_json{{"q", ctx.q()}, {"n", ctx.n()}, {"k", c.k}, {"method", method_name(opt.method)}};
  rep["result"] = report::search(ctx, s);
  emit(out, c, rep,
       Csv{{{"I", "I"}, {"is_moore", "is_moore"}, {"work", "work"}, {"witness", "witness"}}, "result.classes"});
  return kOk;
}

int cmd_mrd(const Config& c, std::ostream& out) {
  const FieldCtx ctx = make_field(c);
  const Normalized nz = make_set(c, ctx.n());
  DistanceOptions opt;
  opt.parallel = parallel(c);
  opt.budget = budget_or(c, opt.budget);
  const DistanceReport d = min_rank_distance(ctx, nz.set, opt);
  if (c.verify && codeword_rank(ctx, d.min_codeword, nz.set) != d.min_rank_distance) {
    throw std::runtime_error("minimum-rank codeword failed re-verification");
  }
  ordered_json rep = header("mrd");
  rep["input"] = input_block(ctx, nz);
  ordered_json r = report::distance(ctx, d);
  if (c.idealisers) r["idealisers"] = report::idealisers(idealiser_dims(ctx, nz.set));
  rep["result"] = r;
  emit(out, c, rep,
       Csv{{{"q", "input.q"},
            {"n", "input.n"},
            {"I", "input.I"},
            {"min_rank_distance", "result.min_rank_distance"},
            {"singleton", "result.singleton"},
            {"is_mrd", "result.is_mrd"},
            {"codewords", "result.codewords"},
            {"left_idealiser", "result.idealisers.left"},
            {"right_idealiser", "result.idealisers.right"}},
           ""});
  return kOk;
}

int cmd_count(const Config& c, std::ostream& out) {
  const FieldCtx ctx = make_field(c);
  const Normalized nz = make_set(c, ctx.n());
  PointCountOptions opt;
  opt.parallel = parallel(c);
  opt.budget = budget_or(c, opt.budget);
  const PointCountReport r = count_points(ctx, nz.set, opt);
  ordered_json rep = header("count");
  rep["input"] = input_block(ctx, nz);
  rep["result"] = report::point_count(r);
  emit(out, c, rep,
       Csv{{{"q", "input.q"},
            {"n", "input.n"},
            {"I", "input.I"},
            {"n_points", "result.n_points"},
            {"n_F_zero", "result.n_F_zero"},
            {"n_dep", "result.n_dep"},
            {"n_witness", "result.n_witness"},
            {"formula_dep", "result.formula_dep"},
            {"match", "result.match"}},
           ""});
  return kOk;
}

int cmd_symbolic(const Config& c, std::ostream& out) {
  if (c.q == 0) throw InvalidInput("--q is required");
  SymbolicOptions sopt;
  if (c.budget) sopt.max_terms = c.budget;
  const ExponentSet I = integer_set(c);
  ordered_json rep = header("symbolic");

  if (c.borges) {
    if (I.k() != 3) throw InvalidInput("--borges needs -I 0,i,j");
    BorgesOptions bopt;
    bopt.symbolic = sopt;
    const std::uint32_t m = c.m ? c.m : 2 * (I.exps[2] - I.exps[1]);
    const BorgesReport b = verify_borges(c.q, I.exps[1], I.exps[2], m, bopt);
    rep["input"] = ordered_json{{"q", c.q}, {"I", report::exponents(I)}, {"m", m}};
    rep["result"] = report::borges(b);
    rep["result"]["H"] = to_string(b.H);
    emit(out, c, rep,
         Csv{{{"q", "result.q"},
              {"i", "result.i"},
              {"j", "result.j"},
              {"m", "result.m"},
              {"intersection_count", "result.intersection_count"},
              {"formula", "result.formula"},
              {"count_matches", "result.count_matches"},
              {"locus_points", "result.locus_points"},
              {"locus_singular", "result.locus_singular"}},
             ""});
    return kOk;
  }

  const std::uint32_t k = c.k ? c.k : static_cast<std::uint32_t>(I.k());
  if (k != I.k()) throw InvalidInput("--k must equal |I|");
  auto field = std::make_shared<const BaseField>(BaseField::of_order(c.q));
  const SparsePoly F = sym_moore_poly(field, k, I.exps, sopt);
  std::vector<std::uint32_t> g_exps(k);
  for (std::uint32_t j = 0; j < k; ++j) g_exps[j] = j;
  const SparsePoly G = sym_moore_poly(field, k, g_exps, sopt);
  rep["input"] = ordered_json{{"q", c.q}, {"k", k}, {"I", report::exponents(I)}};
  ordered_json r;
  r["F"] = to_string(F);
  r["F_degree"] = F.degree();
  r["F_terms"] = F.size();
  r["G"] = to_string(G);
  r["G_degree"] = G.degree();
  const SparsePoly H = divexact(F, G, sopt);
  r["quotient"] = to_string(H);
  r["quotient_degree"] = H.degree();
  r["quotient_terms"] = H.size();
  r["quotient_homogeneous"] = H.is_homogeneous();
  if (c.partials) {
    ordered_json parts = ordered_json::array();
    for (std::uint32_t v = 0; v < k; ++v) parts.push_back(to_string(partial_derivative(H, v)));
    r["quotient_partials"] = parts;
  }
  rep["result"] = r;
  emit(out, c, rep,
       Csv{{{"q", "input.q"},
            {"k", "input.k"},
            {"I", "input.I"},
            {"F_degree", "result.F_degree"},
            {"quotient_degree", "result.quotient_degree"},
            {"quotient_terms", "result.quotient_terms"},
            {"quotient", "result.quotient"}},
           ""});
  return kOk;
}

int cmd_bounds(const Config& c, std::ostream& out) {
  if (c.q == 0) throw InvalidInput("--q is required");
  if (!prime_power(c.q)) throw InvalidInput("q is not a prime power");
  ExponentSet I;
  std::optional<FieldCtx> ctx;
  if (c.n != 0) {
    I = make_set(c, c.n).set;
  } else {
    I = integer_set(c);
  }
  ordered_json rep = header("bounds");
  ordered_json r = report::bounds(bounds_report(I, c.q));
  if (c.n != 0) {
    const auto th = theorem_applies(I, c.q);
    r["theorem"] = th ? report::theorem(*th) : ordered_json(nullptr);
    if (I.k() == 3) r["hw"] = report::hw_bound(hw_lower_bound(c.q, c.n, I.exps[1], I.exps[2]));
  }
  if (I.k() == 3) {
    r["intersection_formula"] = report::big(intersection_count_formula(c.q, I.exps[1], I.exps[2]).value);
  }
  rep["result"] = r;
  if (c.final_verdict) {
    if (c.n == 0) throw InvalidInput("--final needs --n");
    ctx.emplace(make_field(c));
    FinalOptions fo;
    fo.check.method = parse_method(c.method);
    fo.check.parallel = parallel(c);
    fo.check.budget = budget_or(c, fo.check.budget);
    const FinalReport f = final_verdict(*ctx, I, fo);
    if (c.verify && f.engine) require_witness(*ctx, I, f.engine->witness, "final");
    rep["final"] = report::final_report(*ctx, f);
  }
  emit(out, c, rep,
       Csv{{{"q", "result.q"},
            {"n", "result.n"},
            {"I", "result.I"},
            {"is_ap", "result.ap.is_ap"},
            {"case", "result.case"},
            {"curve_threshold", "result.curve_threshold"},
            {"curve_gcd_trigger", "result.curve_gcd_trigger"},
            {"general_threshold", "result.general_threshold"},
            {"zahid_t1", "result.zahid.t1.exact"},
            {"known_family", "result.known_family"},
            {"verdict", "final.verdict"}},
           ""});
  return kOk;
}

ordered_json cells_json(const std::vector<BezoutCell>& cells) {
  ordered_json a = ordered_json::array();
  for (const auto& x : cells) {
    a.push_back(ordered_json{{"q", x.q}, {"k", x.k}, {"i1", x.i1}, {"ik2", x.ik2}, {"ik1", x.ik1}});
  }
  return a;
}

int cmd_bezout(const Config& c, std::ostream& out) {
  ordered_json rep = header("bezout-gap");
  if (c.sweep) {
    std::vector<std::uint64_t> qs{2, 3, 4, 5, 7, 8, 9};
    if (c.q) qs = {c.q};
    std::vector<std::uint32_t> ks{4, 5, 6};
    if (c.k) ks = {c.k};
    const BezoutSweep s = bezout_sweep(qs, ks, c.max_exp, c.realizable);
    rep["input"] = ordered_json{{"qs", qs}, {"ks", ks}, {"max_exp", c.max_exp}, {"realizable_only", c.realizable}};
    rep["result"] = ordered_json{{"cells", s.cells},
                                 {"hypothesis_cells", s.hypothesis_cells},
                                 {"gap_failures", s.gap_failures.size()},
                                 {"tau_failures", s.tau_failures.size()},
                                 {"gap_failure_cells", cells_json(s.gap_failures)},
                                 {"tau_failure_cells", cells_json(s.tau_failures)}};
    emit(out, c, rep,
         Csv{{{"q", "q"}, {"k", "k"}, {"i1", "i1"}, {"ik2", "ik2"}, {"ik1", "ik1"}}, "result.gap_failure_cells"});
    return kOk;
  }
  if (c.q == 0 || c.k == 0) throw InvalidInput("--q, --k, --i1, --ik2 and --ik1 are required");
  const BezoutGap g = bezout_gap(c.q, c.k, c.i1, c.ik2, c.ik1);
  rep["input"] = ordered_json{{"q", c.q}, {"k", c.k}, {"i1", c.i1}, {"ik2", c.ik2}, {"ik1", c.ik1}};
  rep["result"] = report::bezout(g);
  rep["result"]["case2_q_condition"] = case2_q_condition(c.q, c.i1);
  emit(out, c, rep,
       Csv{{{"q", "input.q"},
            {"k", "input.k"},
            {"i1", "input.i1"},
            {"ik2", "input.ik2"},
            {"ik1", "input.ik1"},
            {"tau", "result.tau.exact"},
            {"b_tau", "result.b_tau.exact"},
            {"two_ninths_d2", "result.two_ninths_d2.exact"},
            {"gap", "result.gap.exact"},
            {"gap_positive", "result.gap_positive"}},
           ""});
  return kOk;
}

int cmd_case2(const Config& c, std::ostream& out) {
  const FieldCtx ctx = make_field(c);
  const Normalized nz = make_set(c, ctx.n());
  ZSearchOptions zo;
  zo.budget = budget_or(c, zo.budget);
  zo.seed = c.seed;
  zo.randomize = c.randomize;
  const auto cert = case2_z_search(ctx, nz.set, zo);
  ordered_json rep = header("case2");
  rep["input"] = input_block(ctx, nz);
  ordered_json r;
  r["found"] = cert.has_value();
  r["certificate"] = cert ? report::z_certificate(ctx, *cert) : ordered_json(nullptr);
  if (cert && c.verify) {
    const bool ok = verify_z_certificate(ctx, nz.set, cert->z);
    if (!ok) throw std::runtime_error("z certificate failed re-verification");
    r["verified"] = ok;
  }
  rep["result"] = r;
  emit(out, c, rep,
       Csv{{{"q", "input.q"},
            {"n", "input.n"},
            {"I", "input.I"},
            {"found", "result.found"},
            {"trials", "result.certificate.trials"},
            {"z", "result.certificate.z"}},
           ""});
  return kOk;
}

// ---------------------------------------------------------------------------
// Flag wiring

void add_output(CLI::App* sub, Config& c) {
  sub->add_option("--output", c.output, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  sub->add_flag("--json", c.json, "same as --output json");
}

void add_field(CLI::App* sub, Config& c) {
  sub->add_option("--q", c.q, "base field order (prime power <= 256)");
  sub->add_option("--p", c.p, "characteristic (alternative to --q)");
  sub->add_option("--e", c.e, "base degree with --p");
  sub->add_option("--n", c.n, "extension degree");
  sub->add_option("--base-modulus", c.base_modulus, "override: F_p coefficients, constant first");
  sub->add_option("--ext-modulus", c.ext_modulus, "override: F_q codes, constant first");
}

void add_engine(CLI::App* sub, Config& c) {
  sub->add_option("--method", c.method, "kernel, det or both")
      ->check(CLI::IsMember({"kernel", "det", "both"}))
      ->capture_default_str();
  sub->add_option("--jobs", c.jobs, "worker threads (0 = all cores)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Moore exponent sets over finite fields", "moore"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kCodeVersion);

  auto* field = app.add_subcommand("field", "print the field tower");
  add_field(field, c);
  add_output(field, c);

  auto* check = app.add_subcommand("check", "decide whether I is a Moore exponent set");
  add_field(check, c);
  check->add_option("-I,--exps", c.exps, "exponents, e.g. 0,1,3");
  add_engine(check, c);
  check->add_option("--budget", c.budget, "max subspaces per engine");
  check->add_flag("--verify", c.verify, "re-check witnesses through the generic arithmetic path");
  check->add_option("--cache-dir", c.cache_dir, "verdict cache directory")->envname("MOORE_CACHE_DIR");
  add_output(check, c);

  auto* search = app.add_subcommand("search", "decide every shift class of size k");
  add_field(search, c);
  search->add_option("--k", c.k, "set size");
  add_engine(search, c);
  search->add_option("--budget", c.budget, "max subspaces per engine and class");
  search->add_flag("--verify", c.verify, "re-check witnesses");
  add_output(search, c);

  auto* mrd = app.add_subcommand("mrd", "minimum rank distance and idealisers of the code");
  add_field(mrd, c);
  mrd->add_option("-I,--exps", c.exps, "exponents");
  mrd->add_option("--jobs", c.jobs, "worker threads");
  mrd->add_option("--budget", c.budget, "max projective codewords");
  mrd->add_flag("--idealisers", c.idealisers, "also solve for idealiser dimensions");
  mrd->add_flag("--verify", c.verify, "re-check the minimum codeword");
  add_output(mrd, c);

  auto* count = app.add_subcommand("count", "rational point counts over F_{q^n}");
  add_field(count, c);
  count->add_option("-I,--exps", c.exps, "exponents");
  count->add_option("--jobs", c.jobs, "worker threads");
  count->add_option("--budget", c.budget, "max projective points");
  add_output(count, c);

  auto* symbolic = app.add_subcommand("symbolic", "F_I, G_k and F_I / G_k as polynomials over F_q");
  symbolic->add_option("--q", c.q, "field order");
  symbolic->add_option("-I,--exps", c.exps, "exponents");
  symbolic->add_option("--k", c.k, "number of variables (defaults to |I|)");
  symbolic->add_option("--budget", c.budget, "max terms");
  symbolic->add_flag("--partials", c.partials, "print partial derivatives of the quotient");
  symbolic->add_flag("--borges", c.borges, "intersection and singular-point check for I = {0,i,j}");
  symbolic->add_option("--m", c.m, "search field degree for --borges");
  add_output(symbolic, c);

  auto* bounds = app.add_subcommand("bounds", "thresholds, case analysis and known families");
  bounds->add_option("--q", c.q, "field order");
  bounds->add_option("--n", c.n, "extension degree (optional)");
  bounds->add_option("-I,--exps", c.exps, "exponents");
  bounds->add_flag("--final", c.final_verdict, "combine with the decision engine (needs --n)");
  add_engine(bounds, c);
  bounds->add_option("--budget", c.budget, "engine budget for --final");
  bounds->add_flag("--verify", c.verify, "re-check witnesses");
  add_output(bounds, c);

  auto* bezout = app.add_subcommand("bezout-gap", "tau, B_tau and the 2/9 d^2 gap");
  bezout->add_option("--q", c.q, "field order");
  bezout->add_option("--k", c.k, "set size");
  bezout->add_option("--i1", c.i1, "i_1");
  bezout->add_option("--ik2", c.ik2, "i_{k-2}");
  bezout->add_option("--ik1", c.ik1, "i_{k-1}");
  bezout->add_flag("--sweep", c.sweep, "sweep prime powers q <= 9 and k in {4,5,6}, exponents up to --max-exp");
  bezout->add_option("--max-exp", c.max_exp, "sweep bound")->capture_default_str();
  bezout->add_flag("--realizable", c.realizable, "sweep only tuples coming from non-progression sets");
  add_output(bezout, c);

  auto* case2 = app.add_subcommand("case2", "search z with N(z) != 0 and M not dividing L");
  add_field(case2, c);
  case2->add_option("-I,--exps", c.exps, "exponents");
  case2->add_option("--budget", c.budget, "max trials");
  case2->add_option("--seed", c.seed, "RNG seed");
  case2->add_flag("--randomize", c.randomize, "seed from the system entropy source");
  case2->add_flag("--verify", c.verify, "re-check the certificate");
  add_output(case2, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (field->parsed()) return cmd_field(c, out);
    if (check->parsed()) return cmd_check(c, out, err);
    if (search->parsed()) return cmd_search(c, out);
    if (mrd->parsed()) return cmd_mrd(c, out);
    if (count->parsed()) return cmd_count(c, out);
    if (symbolic->parsed()) return cmd_symbolic(c, out);
    if (bounds->parsed()) return cmd_bounds(c, out);
    if (bezout->parsed()) return cmd_bezout(c, out);
    if (case2->parsed()) return cmd_case2(c, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InexactDivision& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kInvalidInput;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"moore"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace moore::cli
