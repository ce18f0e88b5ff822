// rmc: command-line front end for the rankmetric library.
//
// Exit codes: 0 success, 1 usage or input error, 2 verification failure,
// 3 search budget exhausted without a conclusive answer.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "output.hpp"
#include "rankmetric/bounds.hpp"
#include "rankmetric/codes.hpp"
#include "rankmetric/errors.hpp"
#include "rankmetric/kernels.hpp"
#include "rankmetric/oracle.hpp"
#include "rankmetric/parallel.hpp"
#include "rankmetric/rankgeom.hpp"
#include "rankmetric/wenum.hpp"
#include "verify.hpp"

using namespace rankmetric;
using rmc::big;
using rmc::Format;
using rmc::Json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kVerifyFailed = 2, kInconclusive = 3 };

struct Globals {
  std::string format = "auto";
  std::uint64_t seed = 1;
  std::uint64_t budget = oracle::SearchBudget{}.max_nodes;
  int workers = 0;
  std::string out;
};

struct FieldOpts {
  int q = 2;
  int m = 2;
  std::string modulus;  // "c0 c1 .. cm"
};

std::vector<long> parse_ints(const std::string& s) {
  std::vector<long> v;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t pos = 0;
      v.push_back(std::stol(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InvalidArgument("expected integers, got '" + tok + "'");
    }
  }
  return v;
}

FieldPtr make_field(const FieldOpts& o) {
  if (o.modulus.empty()) return Field::make(o.q, o.m);
  Poly p;
  for (long c : parse_ints(o.modulus)) p.push_back(static_cast<int>(c));
  return Field::make(o.q, o.m, p);
}

std::vector<std::uint32_t> parse_vector(const Field& f, const std::string& s) {
  std::vector<std::uint32_t> v;
  for (long x : parse_ints(s)) {
    if (x < 0 || x >= static_cast<long>(f.order()))
      throw InvalidArgument("element " + std::to_string(x) + " outside GF(" + std::to_string(f.order()) + ")");
    v.push_back(static_cast<std::uint32_t>(x));
  }
  if (v.empty()) throw InvalidArgument("empty vector");
  return v;
}

Json field_json(const Field& f) {
  Json j;
  j["q"] = f.q();
  j["m"] = f.m();
  j["modulus"] = f.modulus();
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_codebook_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos) continue;
    return line.compare(p, 10, "# codebook") == 0;
  }
  return false;
}

LinearCode load_code(const std::string& path) {
  std::string text = read_file(path);
  if (is_codebook_text(text)) throw InvalidArgument("'" + path + "' is a codebook; a linear code is required here");
  std::istringstream in(text);
  return read_code(in);
}

Json words_json(const Codebook& c) {
  Json a = Json::array();
  for (const auto& v : c.vectors()) a.push_back(v.coords());
  return a;
}

Json enumerator_json(const wenum::RankEnumerator& e) { return big(e.A); }

class Runner {
 public:
  Runner(const Globals& g, std::ostream& out) : g_(g), out_(out) {}

  Format format(Format fallback) const { return g_.format == "auto" ? fallback : rmc::parse_format(g_.format); }

  Json base_config(const std::string& cmd, Format f) const {
    Json c;
    c["command"] = cmd;
    c["format"] = rmc::format_name(f);
    c["seed"] = g_.seed;
    c["budget"] = g_.budget;
    c["workers"] = g_.workers > 0 ? g_.workers : default_workers();
    return c;
  }

  oracle::SearchBudget budget() const {
    oracle::SearchBudget b;
    b.max_nodes = g_.budget;
    b.seed = g_.seed;
    return b;
  }
  int workers() const { return g_.workers; }
  std::uint64_t seed() const { return g_.seed; }
  std::ostream& out() { return out_; }

  void record(const std::string& cmd, Json config, const Json& result, Format f) {
    rmc::emit_record(out_, f, cmd, config, result);
  }

 private:
  const Globals& g_;
  std::ostream& out_;
};

// ---------------------------------------------------------------- commands

int cmd_field(Runner& r, const FieldOpts& fo) {
  auto f = make_field(fo);
  Format fmt = r.format(Format::Text);
  Json cfg = r.base_config("field", fmt);
  cfg["q"] = fo.q;
  cfg["m"] = fo.m;
  cfg["modulus"] = f->modulus();
  Json res;
  res["descriptor"] = f->descriptor();
  res["order"] = f->order();
  res["modulus"] = f->modulus();
  res["generator"] = f->generator();
  res["log_tables"] = f->has_tables();
  auto pb = Basis::polynomial(f);
  res["polynomial_basis"] = pb.elements();
  res["dual_basis"] = dual_basis(pb).elements();
  r.record("field", cfg, res, fmt);
  return kOk;
}

int cmd_rank(Runner& r, const FieldOpts& fo, const std::string& vec, const std::string& basis) {
  auto f = make_field(fo);
  auto v = parse_vector(*f, vec);
  Format fmt = r.format(Format::Text);
  Json cfg = r.base_config("rank", fmt);
  cfg["q"] = fo.q;
  cfg["m"] = fo.m;
  cfg["modulus"] = f->modulus();
  cfg["vec"] = v;
  RankVector rv(f, v);
  Json res;
  res["rank"] = rank(rv);
  if (!basis.empty()) {
    std::vector<std::uint32_t> els;
    for (long x : parse_ints(basis)) els.push_back(static_cast<std::uint32_t>(x));
    Basis b(f, els);
    cfg["basis"] = els;
    auto mat = rv.expand(b);
    res["expansion"] = mat.to_string();
    res["rank_in_basis"] = gfq::rank(mat);
  } else {
    res["expansion"] = rv.expand().to_string();
  }
  r.record("rank", cfg, res, fmt);
  return kOk;
}

// Vector of rank e: the first e coordinates are 1, a, .., a^{e-1}.
RankVector rank_e_vector(const FieldPtr& f, int n, int e) {
  std::vector<std::uint32_t> c(n, 0);
  std::uint32_t p = 1;
  for (int j = 0; j < e; ++j, p *= f->q()) c[j] = p;
  return {f, c};
}

int cmd_ball(Runner& r, const FieldOpts& fo, int n, int radius, int r2, int dist) {
  Format fmt = r.format(Format::Text);
  Json cfg = r.base_config("ball", fmt);
  cfg["q"] = fo.q;
  cfg["m"] = fo.m;
  cfg["n"] = n;
  cfg["r"] = radius;
  if (r2 >= 0) {
    cfg["r2"] = r2;
    cfg["dist"] = dist;
  }
  if (radius < 0 || radius > std::min(fo.m, n)) throw InvalidArgument("r must lie in [0, min(m, n)]");
  auto bc = ball_counts(fo.q, fo.m, n, radius);
  auto vb = ball_volume_bounds(fo.q, fo.m, n, radius);
  Json res;
  res["N"] = big(bc.N);
  res["V"] = big(bc.V);
  res["volume_lower"] = big(vb.lower);
  res["volume_upper_exponent"] = vb.upper_exponent;
  res["volume_bounds_hold"] = vb.holds;
  if (r2 >= 0) {
    Json x;
    try {
      x["closed_form"] = big(intersection_volume_closed(fo.q, fo.m, n, radius, r2, dist));
    } catch (const NoClosedForm&) {
      x["closed_form"] = nullptr;
    }
    auto f = make_field(fo);
    if (dist < 0 || dist > std::min(fo.m, n)) throw InvalidArgument("dist must lie in [0, min(m, n)]");
    try {
      x["brute_force"] = big(intersection_volume_brute(
          {{RankVector::zero(f, n), radius}, {rank_e_vector(f, n, dist), r2}}, kDefaultGuard, r.workers()));
    } catch (const GuardExceeded& e) {
      x["brute_force"] = nullptr;
      x["note"] = e.what();
    }
    res["intersection"] = x;
  }
  r.record("ball", cfg, res, fmt);
  return kOk;
}

int cmd_els(Runner& r, int q, int m, int n, int v, bool list) {
  Format fmt = r.format(Format::Text);
  Json cfg = r.base_config("els", fmt);
  cfg["q"] = q;
  cfg["m"] = m;
  cfg["n"] = n;
  cfg["v"] = v;
  cfg["list"] = list;
  auto all = enumerate_els(q, m, n, v);
  Json res;
  res["count"] = all.size();
  res["gaussian"] = big(counting::gaussian(n, v, q));
  if (list) {
    Json a = Json::array();
    for (const auto& e : all) a.push_back(e.to_string());
    res["subspaces"] = a;
  }
  r.record("els", cfg, res, fmt);
  return kOk;
}

int cmd_code(Runner& r, const std::string& path, bool with_radius) {
  Format fmt = r.format(Format::Text);
  Json cfg = r.base_config("code", fmt);
  cfg["code"] = path;
  cfg["covering_radius"] = with_radius;
  std::string text = read_file(path);
  std::istringstream in(text);
  Json res;
  if (is_codebook_text(text)) {
    auto cb = read_codebook(in);
    res["kind"] = "codebook";
    res["field"] = field_json(*cb.field);
    res["n"] = cb.n;
    res["size"] = cb.size();
    res["rank_distribution"] = big(rank_distribution(cb));
    res["min_rank_distance"] = min_rank_distance(cb);
    if (with_radius) {
      try {
        res["covering_radius"] = covering_radius(cb);
      } catch (const GuardExceeded& e) {
        res["covering_radius"] = nullptr;
        res["note"] = e.what();
      }
    }
  } else {
    auto c = read_code(in);
    res["kind"] = "linear";
    res["field"] = field_json(*c.field());
    res["n"] = c.n();
    res["k"] = c.k();
    auto A = rank_distribution(c, kDefaultGuard, r.workers());
    res["rank_distribution"] = big(A);
    int d = min_rank_distance(c, kDefaultGuard, r.workers());
    res["min_rank_distance"] = d;
    res["min_hamming_distance"] = min_hamming_distance(c);
    if (c.k() > 0) {
      res["singleton_bound"] = big(singleton_max_cardinality(c.q(), c.m(), c.n(), d));
      res["mrd"] = mrd_els_check(c);
    }
    auto D = dual(c);
    res["dual_k"] = D.k();
    res["dual_rank_distribution"] = big(rank_distribution(D, kDefaultGuard, r.workers()));
    if (with_radius) {
      try {
        res["covering_radius"] = covering_radius(c);
      } catch (const GuardExceeded& e) {
        res["covering_radius"] = nullptr;
        res["note"] = e.what();
      }
    }
  }
  r.record("code", cfg, res, fmt);
  return kOk;
}

int cmd_gabidulin(Runner& r, const FieldOpts& fo, int n, int k, int a, const std::string& gvec,
                  const std::string& outfile) {
  auto f = make_field(fo);
  std::vector<std::uint32_t> g;
  if (gvec.empty()) {
    if (n > fo.m) throw InvalidArgument("default g needs n <= m; pass --g");
    g = rank_e_vector(f, n, n).coords();
  } else {
    g = parse_vector(*f, gvec);
    if (static_cast<int>(g.size()) != n) throw InvalidArgument("--g must have n entries");
  }
  Format fmt = r.format(Format::Text);
  Json cfg = r.base_config("gabidulin", fmt);
  cfg["q"] = fo.q;
  cfg["m"] = fo.m;
  cfg["modulus"] = f->modulus();
  cfg["n"] = n;
  cfg["k"] = k;
  cfg["a"] = a;
  cfg["g"] = g;
  if (!outfile.empty()) cfg["out"] = outfile;
  auto c = gabidulin(RankVector(f, g), k, a);
  Json res;
  Json rows = Json::array();
  for (const auto& row : c.generator()) rows.push_back(row);
  res["generator"] = rows;
  res["designed_distance"] = n - k + 1;
  try {
    res["min_rank_distance"] = min_rank_distance(c, kDefaultGuard, r.workers());
  } catch (const GuardExceeded&) {
    res["min_rank_distance"] = nullptr;
  }
  res["mrd_els_check"] = mrd_els_check(c);
  if (!outfile.empty()) {
    std::ofstream o(outfile);
    if (!o) throw InvalidArgument("cannot write '" + outfile + "'");
    write_code(o, c);
  }
  r.record("gabidulin", cfg, res, fmt);
  return kOk;
}

Json cell_json(const BoundReport& b) {
  Json j;
  j["m"] = b.m;
  j["n"] = b.n;
  j["rho"] = b.rho;
  auto opt = [](const std::optional<BigInt>& x) { return x ? big(*x) : Json(nullptr); };
  j["a"] = opt(b.a);
  j["b"] = opt(b.b);
  j["c"] = opt(b.c);
  j["A"] = opt(b.A);
  j["B"] = opt(b.B);
  j["C"] = opt(b.C);
  j["D"] = opt(b.D);
  j["E"] = opt(b.E);
  j["best_lower"] = big(b.best_lower);
  j["lower_tag"] = std::string(1, b.lower_tag);
  j["best_upper"] = big(b.best_upper);
  j["upper_tag"] = std::string(1, b.upper_tag);
  return j;
}

const std::vector<std::string> kBoundColumns = {"m", "n", "rho", "a", "b", "c", "A", "B", "C", "D", "E",
                                                "best_lower", "lower_tag", "best_upper", "upper_tag"};

int emit_bounds(Runner& r, const std::string& cmd, int q, const std::string& mr, const std::string& nr,
                const std::string& rr) {
  Format fmt = r.format(Format::Csv);
  Json cfg = r.base_config(cmd, fmt);
  cfg["q"] = q;
  cfg["m_range"] = mr;
  cfg["n_range"] = nr;
  cfg["rho_range"] = rr;
  auto table = covering_table(q, parse_range(mr), parse_range(nr), parse_range(rr), r.workers());
  std::vector<Json> rows;
  for (const auto& b : table) rows.push_back(cell_json(b));
  rmc::emit_table(r.out(), fmt, cmd, cfg, kBoundColumns, rows);
  return kOk;
}

int cmd_table2(Runner& r, int q, const std::string& mr, const std::string& nr, const std::string& rr) {
  Format fmt = r.format(Format::Csv);
  Json cfg = r.base_config("table2", fmt);
  cfg["q"] = q;
  cfg["m_range"] = mr;
  cfg["n_range"] = nr;
  cfg["rho_range"] = rr;
  auto m = parse_range(mr), n = parse_range(nr), rho = parse_range(rr);
  std::vector<Json> rows;
  for (int mi = m.lo; mi <= m.hi; ++mi)
    for (int ni = n.lo; ni <= std::min(n.hi, mi); ++ni)
      for (int ri = rho.lo; ri <= std::min(rho.hi, ni); ++ri) {
        auto d = linear_dim_bounds(q, mi, ni, ri);
        Json j;
        j["m"] = mi;
        j["n"] = ni;
        j["rho"] = ri;
        j["k_lower"] = d.k_lower;
        j["k_upper"] = d.k_upper;
        j["exact"] = d.exact;
        rows.push_back(j);
      }
  rmc::emit_table(r.out(), fmt, "table2", cfg, {"m", "n", "rho", "k_lower", "k_upper", "exact"}, rows);
  return kOk;
}

struct Distributions {
  wenum::RankEnumerator A;
  std::optional<wenum::RankEnumerator> brute_dual;
  int k = 0;
};

Distributions load_distribution(Runner& r, Json& cfg, const std::string& path, const std::string& dist, int q,
                                int m) {
  Distributions d;
  if (!path.empty()) {
    cfg["code"] = path;
    auto c = load_code(path);
    d.A = {c.q(), c.m(), c.n(), rank_distribution(c, kDefaultGuard, r.workers())};
    d.brute_dual = wenum::RankEnumerator{c.q(), c.m(), c.n(), rank_distribution(dual(c), kDefaultGuard, r.workers())};
    d.k = c.k();
    return d;
  }
  if (dist.empty()) throw InvalidArgument("one of --code or --dist is required");
  cfg["dist"] = dist;
  cfg["q"] = q;
  cfg["m"] = m;
  std::vector<BigInt> A;
  for (long x : parse_ints(dist)) A.emplace_back(x);
  d.A = {q, m, static_cast<int>(A.size()) - 1, A};
  auto k = d.A.dimension();
  if (!k) throw InvalidArgument("distribution total is not a power of q^m");
  d.k = *k;
  return d;
}

Json moments_json(const wenum::RankEnumerator& A, const wenum::RankEnumerator& B, int k, int nu_lo, int nu_hi,
                  bool& all_hold) {
  Json arr = Json::array();
  for (int nu = nu_lo; nu <= nu_hi; ++nu) {
    auto mo = wenum::moments(A, B, k, nu);
    Json j;
    j["nu"] = nu;
    j["lhs37"] = rmc::rat(mo.lhs37);
    j["rhs37"] = rmc::rat(mo.rhs37);
    j["lhs38"] = rmc::rat(mo.lhs38);
    j["rhs38"] = rmc::rat(mo.rhs38);
    j["corollary37"] = mo.corollary37 ? rmc::rat(*mo.corollary37) : Json(nullptr);
    j["corollary38"] = mo.corollary38 ? rmc::rat(*mo.corollary38) : Json(nullptr);
    bool ok = mo.lhs37 == mo.rhs37 && mo.lhs38 == mo.rhs38 && (!mo.corollary37 || *mo.corollary37 == mo.rhs37) &&
              (!mo.corollary38 || *mo.corollary38 == mo.rhs38);
    j["holds"] = ok;
    all_hold = all_hold && ok;
    arr.push_back(j);
  }
  return arr;
}

int cmd_macwilliams(Runner& r, const std::string& path, const std::string& dist, int q, int m) {
  Format fmt = r.format(Format::Json);
  Json cfg = r.base_config("macwilliams", fmt);
  auto d = load_distribution(r, cfg, path, dist, q, m);
  Json res;
  res["A"] = enumerator_json(d.A);
  wenum::RankEnumerator B;
  try {
    B = wenum::macwilliams(d.A);
  } catch (const NonIntegral& e) {
    res["error"] = std::string("not the distribution of a linear code: ") + e.what();
    r.record("macwilliams", cfg, res, fmt);
    return kVerifyFailed;
  }
  auto Bq = wenum::macwilliams_qproduct(d.A);
  res["B"] = enumerator_json(B);
  res["dual_dimension"] = d.A.n - d.k;
  bool ok = true;
  res["qproduct_agrees"] = Bq == B;
  ok = ok && Bq == B;
  bool inv = wenum::macwilliams(B) == d.A;
  res["double_transform_identity"] = inv;
  ok = ok && inv;
  if (d.brute_dual) {
    res["brute_force_dual"] = enumerator_json(*d.brute_dual);
    res["brute_force_agrees"] = *d.brute_dual == B;
    ok = ok && *d.brute_dual == B;
  }
  bool hold = true;
  auto mom = moments_json(d.A, B, d.k, 0, d.A.n, hold);
  res["moments_hold"] = hold;
  ok = ok && hold;
  res["verified"] = ok;
  r.record("macwilliams", cfg, res, fmt);
  return ok ? kOk : kVerifyFailed;
}

int cmd_moments(Runner& r, const std::string& path, const std::string& dist, int q, int m, int nu) {
  Format fmt = r.format(Format::Json);
  Json cfg = r.base_config("moments", fmt);
  auto d = load_distribution(r, cfg, path, dist, q, m);
  if (nu > d.A.n) throw InvalidArgument("nu must be at most n");
  cfg["nu"] = nu < 0 ? Json("all") : Json(nu);
  auto B = wenum::macwilliams(d.A);
  bool hold = true;
  Json res;
  res["A"] = enumerator_json(d.A);
  res["B"] = enumerator_json(B);
  res["moments"] = moments_json(d.A, B, d.k, nu < 0 ? 0 : nu, nu < 0 ? d.A.n : nu, hold);
  res["all_hold"] = hold;
  r.record("moments", cfg, res, fmt);
  return hold ? kOk : kVerifyFailed;
}

int cmd_search(Runner& r, const std::string& kind, int q, int m, int n, int rho, int d, int lo, int hi) {
  Format fmt = r.format(Format::Text);
  Json cfg = r.base_config("search", fmt);
  cfg["kind"] = kind;
  cfg["q"] = q;
  cfg["m"] = m;
  cfg["n"] = n;
  Json res;
  if (kind == "packing") {
    cfg["d"] = d;
    try {
      auto v = oracle::max_code_search(q, m, n, d, r.budget());
      res["status"] = "found";
      res["max_code_size"] = v;
      res["singleton_bound"] = big(singleton_max_cardinality(q, m, n, d));
    } catch (const GuardExceeded& e) {
      res["status"] = "inconclusive";
      res["note"] = e.what();
      r.record("search", cfg, res, fmt);
      return kInconclusive;
    }
    r.record("search", cfg, res, fmt);
    return kOk;
  }
  cfg["rho"] = rho;
  auto bounds = covering_bounds(q, m, n, rho);
  if (kind == "greedy") {
    auto g = oracle::greedy_covering(q, m, n, rho, r.budget());
    res["status"] = "found";
    res["size"] = g.size();
    res["verified"] = oracle::verify_covering(g, rho);
    res["witness"] = words_json(g);
    r.record("search", cfg, res, fmt);
    return res["verified"].get<bool>() ? kOk : kVerifyFailed;
  }
  if (kind != "covering") throw InvalidArgument("--kind must be covering, greedy or packing");
  if (lo <= 0) lo = static_cast<int>(std::min<BigInt>(bounds.best_lower, BigInt(1) << 30));
  if (hi <= 0) hi = static_cast<int>(std::min<BigInt>(bounds.best_upper, BigInt(1) << 30));
  cfg["lo"] = lo;
  cfg["hi"] = hi;
  auto mc = oracle::minimum_covering(q, m, n, rho, lo, hi, r.budget(), r.workers());
  res["bounds"] = {{"best_lower", big(bounds.best_lower)}, {"best_upper", big(bounds.best_upper)}};
  res["status"] = oracle::status_name(mc.status);
  if (mc.status == oracle::Status::Found) {
    res["value"] = mc.value;
    res["verified"] = mc.witness && oracle::verify_covering(*mc.witness, rho);
    if (mc.witness) res["witness"] = words_json(*mc.witness);
    bool consistent = BigInt(mc.value) >= bounds.best_lower && BigInt(mc.value) <= bounds.best_upper;
    res["consistent_with_bounds"] = consistent;
    r.record("search", cfg, res, fmt);
    return res["verified"].get<bool>() ? kOk : kVerifyFailed;
  }
  if (mc.status == oracle::Status::Inconclusive) res["smallest_unsettled"] = mc.value;
  r.record("search", cfg, res, fmt);
  return mc.status == oracle::Status::Inconclusive ? kInconclusive : kOk;
}

int cmd_verify(Runner& r, const std::string& suite) {
  Format fmt = r.format(Format::Text);
  Json cfg = r.base_config("verify", fmt);
  cfg["suite"] = suite;
  cfg["isa"] = kernels::isa_name(kernels::active_isa());
  auto results = rmc::run_suite(suite, r.seed(), r.workers());
  std::vector<Json> rows;
  bool ok = true;
  for (const auto& c : results) {
    Json j;
    j["suite"] = c.suite;
    j["check"] = c.name;
    j["status"] = c.pass ? "PASS" : "FAIL";
    j["cases"] = c.cases;
    j["detail"] = c.detail;
    rows.push_back(j);
    ok = ok && c.pass;
  }
  rmc::emit_table(r.out(), fmt, "verify", cfg, {"suite", "check", "status", "cases", "detail"}, rows);
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rmc: rank-metric code tools"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format: csv, json, text (default depends on the command)")
      ->check(CLI::IsMember({"auto", "csv", "json", "text"}));
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_option("--budget", g.budget, "Node budget for exhaustive searches");
  app.add_option("--workers", g.workers, "Worker threads (default: RANKMETRIC_WORKERS or all cores)");

  auto field_opts = [](CLI::App* s, FieldOpts& fo) {
    s->add_option("--q", fo.q, "Base field size (2, 3 or 5)");
    s->add_option("--m", fo.m, "Extension degree");
    s->add_option("--modulus", fo.modulus, "Modulus coefficients c0 .. cm (default: smallest irreducible)");
  };

  FieldOpts fo;
  std::string vec, basis, code_path, gvec, outfile, dist, suite = "all", kind = "covering";
  std::string mr, nr, rr;
  int n = 2, radius = 1, r2 = -1, e = 0, v = 1, k = 1, a = 1, nu = -1, rho = 1, d = 1, lo = 0, hi = 0;
  bool list = false, with_radius = false;

  auto* s_field = app.add_subcommand("field", "Field parameters, modulus and bases");
  field_opts(s_field, fo);

  auto* s_rank = app.add_subcommand("rank", "Rank of a vector over GF(q)");
  field_opts(s_rank, fo);
  s_rank->add_option("--vec", vec, "Coordinates as element integers")->required();
  s_rank->add_option("--basis", basis, "Expansion basis elements (default: polynomial basis)");

  auto* s_ball = app.add_subcommand("ball", "Ball sizes, volume bounds and pairwise intersections");
  field_opts(s_ball, fo);
  s_ball->add_option("--n", n, "Length");
  s_ball->add_option("--r", radius, "Radius");
  s_ball->add_option("--r2", r2, "Radius of a second ball");
  s_ball->add_option("--dist", e, "Distance between the two centers");

  auto* s_els = app.add_subcommand("els", "Elementary linear subspaces");
  field_opts(s_els, fo);
  s_els->add_option("--n", n, "Length");
  s_els->add_option("--v", v, "Dimension");
  s_els->add_flag("--list", list, "List every subspace");

  auto* s_code = app.add_subcommand("code", "Properties of a code file");
  s_code->add_option("--code", code_path, "Code file")->required();
  s_code->add_flag("--covering-radius", with_radius, "Also compute the covering radius");

  auto* s_gab = app.add_subcommand("gabidulin", "Generalized Gabidulin code");
  field_opts(s_gab, fo);
  s_gab->add_option("--n", n, "Length");
  s_gab->add_option("--k", k, "Dimension");
  s_gab->add_option("--a", a, "Frobenius exponent, coprime to m");
  s_gab->add_option("--g", gvec, "Evaluation vector (default: 1, a, .., a^{n-1})");
  s_gab->add_option("--out", outfile, "Write the code to this file");

  int bq = 2;
  auto* s_bounds = app.add_subcommand("bounds", "Covering bounds over parameter ranges");
  s_bounds->add_option("--q", bq, "Base field size");
  s_bounds->add_option("--m-range", mr, "m range, a..b")->required();
  s_bounds->add_option("--n-range", nr, "n range, a..b")->required();
  s_bounds->add_option("--rho-range", rr, "rho range, a..b")->required();

  std::string t1m = "2..7";
  auto* s_t1 = app.add_subcommand("table1", "Table of covering bounds, 2 <= n <= m, 1 <= rho <= 6");
  s_t1->add_option("--q", bq, "Base field size");
  s_t1->add_option("--m,--m-range", t1m, "m range (default 2..7)");

  std::string t2m = "4..8";
  auto* s_t2 = app.add_subcommand("table2", "Bounds on the dimension of linear covering codes");
  s_t2->add_option("--q", bq, "Base field size");
  s_t2->add_option("--m,--m-range", t2m, "m range (default 4..8)");

  auto* s_mw = app.add_subcommand("macwilliams", "Dual rank distribution");
  s_mw->add_option("--code", code_path, "Linear code file");
  s_mw->add_option("--dist", dist, "Rank distribution A_0 .. A_n");
  s_mw->add_option("--q", fo.q, "Base field size (with --dist)");
  s_mw->add_option("--m", fo.m, "Extension degree (with --dist)");

  auto* s_mom = app.add_subcommand("moments", "Moment identities of a code and its dual");
  s_mom->add_option("--code", code_path, "Linear code file");
  s_mom->add_option("--dist", dist, "Rank distribution A_0 .. A_n");
  s_mom->add_option("--q", fo.q, "Base field size (with --dist)");
  s_mom->add_option("--m", fo.m, "Extension degree (with --dist)");
  s_mom->add_option("--nu", nu, "Single moment order (default: all)");

  auto* s_search = app.add_subcommand("search", "Exhaustive or greedy code search");
  s_search->add_option("--kind", kind, "covering, greedy or packing")
      ->check(CLI::IsMember({"covering", "greedy", "packing"}));
  s_search->add_option("--q", fo.q, "Base field size");
  s_search->add_option("--m", fo.m, "Extension degree");
  s_search->add_option("--n", n, "Length");
  s_search->add_option("--rho", rho, "Covering radius");
  s_search->add_option("--d", d, "Minimum distance (packing)");
  s_search->add_option("--lo", lo, "Smallest size tried (default: best lower bound)");
  s_search->add_option("--hi", hi, "Largest size tried (default: best upper bound)");

  auto* s_verify = app.add_subcommand("verify", "Run invariant suites");
  s_verify->add_option("--suite", suite, "all, ffield, rankgeom, codes, bounds, wenum or oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return kUsage;
  }

  if (g.workers < 0) {
    std::cerr << "error: --workers must be >= 0\n";
    return kUsage;
  }
  Runner r(g, std::cout);
  try {
    if (*s_field) return cmd_field(r, fo);
    if (*s_rank) return cmd_rank(r, fo, vec, basis);
    if (*s_ball) return cmd_ball(r, fo, n, radius, r2, e);
    if (*s_els) return cmd_els(r, fo.q, fo.m, n, v, list);
    if (*s_code) return cmd_code(r, code_path, with_radius);
    if (*s_gab) return cmd_gabidulin(r, fo, n, k, a, gvec, outfile);
    if (*s_bounds) return emit_bounds(r, "bounds", bq, mr, nr, rr);
    if (*s_t1) {
      auto m = parse_range(t1m);
      return emit_bounds(r, "table1", bq, t1m, "2.." + std::to_string(m.hi), "1..6");
    }
    if (*s_t2) {
      auto m = parse_range(t2m);
      return cmd_table2(r, bq, t2m, "4.." + std::to_string(m.hi), "2..6");
    }
    if (*s_mw) return cmd_macwilliams(r, code_path, dist, fo.q, fo.m);
    if (*s_mom) return cmd_moments(r, code_path, dist, fo.q, fo.m, nu);
    if (*s_search) return cmd_search(r, kind, fo.q, fo.m, n, rho, d, lo, hi);
    if (*s_verify) return cmd_verify(r, suite);
  } catch (const InvalidArgument& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const GuardExceeded& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const Error& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
