#include "rankmetric/codes.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "rankmetric/errors.hpp"
#include "rankmetric/parallel.hpp"

namespace rankmetric {

namespace {

// RREF over GF(q^m); zero rows dropped. Returns pivot columns.
std::vector<int> field_rref(const Field& f, std::vector<Row>& a) {
  std::vector<int> piv;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::uint32_t iv = f.inv(a[r][c]);
    for (auto& x : a[r]) x = f.mul(x, iv);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      std::uint32_t t = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(t, a[r][j]));
    }
    piv.push_back(c);
    ++r;
  }
  a.resize(r);
  return piv;
}

// Index of every multiple s * row, s in GF(q^m).
std::vector<std::uint64_t> multiples(const Space& sp, const Row& row) {
  const Field& f = *sp.field();
  std::vector<std::uint64_t> t(f.order());
  Row tmp(row.size());
  for (std::uint32_t s = 0; s < f.order(); ++s) {
    for (size_t j = 0; j < row.size(); ++j) tmp[j] = f.mul(s, row[j]);
    t[s] = sp.index(tmp);
  }
  return t;
}

// Nonzero vectors of GF(q)^n whose first nonzero entry is 1.
std::vector<std::vector<int>> projective_points(int q, int n) {
  std::vector<std::vector<int>> pts;
  for (int lead = 0; lead < n; ++lead) {
    int rest = n - lead - 1;
    std::uint64_t cnt = 1;
    for (int i = 0; i < rest; ++i) cnt *= q;
    for (std::uint64_t t = 0; t < cnt; ++t) {
      std::vector<int> w(n, 0);
      w[lead] = 1;
      std::uint64_t x = t;
      for (int j = lead + 1; j < n; ++j) {
        w[j] = static_cast<int>(x % q);
        x /= q;
      }
      pts.push_back(std::move(w));
    }
  }
  return pts;
}

// Multi-source BFS with the given step set; returns per-vertex distance.
std::vector<std::uint8_t> bfs(const Space& sp, const std::vector<std::uint64_t>& sources,
                              const std::vector<std::uint64_t>& steps) {
  std::vector<std::uint8_t> dist(sp.size(), 0xFF);
  std::vector<std::uint64_t> frontier, next;
  for (auto s : sources)
    if (dist[s] == 0xFF) {
      dist[s] = 0;
      frontier.push_back(s);
    }
  std::uint8_t d = 0;
  const bool binary = sp.field()->q() == 2;
  while (!frontier.empty()) {
    next.clear();
    ++d;
    for (auto x : frontier)
      for (auto g : steps) {
        std::uint64_t y = binary ? (x ^ g) : sp.add(x, g);
        if (dist[y] == 0xFF) {
          dist[y] = d;
          next.push_back(y);
        }
      }
    frontier.swap(next);
  }
  return dist;
}

void check_guard(const BigInt& size, std::uint64_t guard, const char* what) {
  if (size > BigInt(guard))
    throw GuardExceeded(std::string(what) + " of size " + to_string(size) + " exceeds the enumeration guard " +
                        std::to_string(guard));
}

}  // namespace

int field_rank(const Field& f, std::vector<Row> rows) { return static_cast<int>(field_rref(f, rows).size()); }

LinearCode::LinearCode(FieldPtr f, int n, std::vector<Row> generator) : f_(std::move(f)), n_(n), g_(std::move(generator)) {
  if (n < 0) throw InvalidArgument("negative code length");
  for (const auto& r : g_) {
    if (static_cast<int>(r.size()) != n) throw InvalidArgument("generator row length differs from n");
    for (auto x : r)
      if (x >= f_->order()) throw InvalidArgument("generator entry outside the field");
  }
  if (field_rank(*f_, g_) != static_cast<int>(g_.size())) throw InvalidArgument("generator rows are dependent");
}

LinearCode LinearCode::whole(FieldPtr f, int n) {
  std::vector<Row> g(n, Row(n, 0));
  for (int i = 0; i < n; ++i) g[i][i] = 1;
  return {std::move(f), n, std::move(g)};
}

RankVector LinearCode::encode(std::span<const std::uint32_t> msg) const {
  if (static_cast<int>(msg.size()) != k()) throw InvalidArgument("message length differs from k");
  Row c(n_, 0);
  for (int i = 0; i < k(); ++i) {
    if (!msg[i]) continue;
    for (int j = 0; j < n_; ++j) c[j] = f_->add(c[j], f_->mul(msg[i], g_[i][j]));
  }
  return {f_, std::move(c)};
}

RankVector LinearCode::codeword(std::uint64_t t) const {
  Row msg(k());
  for (int i = 0; i < k(); ++i) {
    msg[i] = static_cast<std::uint32_t>(t % f_->order());
    t /= f_->order();
  }
  return encode(msg);
}

std::uint64_t LinearCode::size(std::uint64_t guard) const {
  BigInt s = ipow(f_->order(), static_cast<unsigned>(k()));
  check_guard(s, guard, "code");
  return static_cast<std::uint64_t>(s);
}

void LinearCode::for_each_codeword(const std::function<void(const RankVector&)>& fn, std::uint64_t guard) const {
  std::uint64_t s = size(guard);
  for (std::uint64_t t = 0; t < s; ++t) fn(codeword(t));
}

std::vector<RankVector> Codebook::vectors() const {
  Space sp(field, n, ~0ull);
  std::vector<RankVector> out;
  for (auto w : words) out.push_back(sp.vector(w));
  return out;
}

Codebook Codebook::from_vectors(FieldPtr f, int n, const std::vector<RankVector>& vs) {
  Space sp(f, n, ~0ull);
  Codebook c{f, n, {}};
  for (const auto& v : vs) {
    if (!v.field()->same_as(*f) || v.n() != n) throw InvalidArgument("vector does not belong to the codebook ambient");
    c.words.push_back(sp.index(v));
  }
  std::sort(c.words.begin(), c.words.end());
  c.words.erase(std::unique(c.words.begin(), c.words.end()), c.words.end());
  return c;
}

LinearCode make_code(FieldPtr f, std::vector<Row> generator) {
  int n = generator.empty() ? 0 : static_cast<int>(generator[0].size());
  return {std::move(f), n, std::move(generator)};
}

namespace {

// Calls fn(begin, end, idx) with the space indices of codewords for messages
// in [begin, end), in parallel chunks.
template <class F>
void scan_codewords(const LinearCode& c, const Space& sp, std::uint64_t total, int workers, F&& fn) {
  std::vector<std::vector<std::uint64_t>> tabs;
  for (const auto& r : c.generator()) tabs.push_back(multiples(sp, r));
  const std::uint64_t Q = c.field()->order();
  parallel_ranges(total, workers, [&](std::uint64_t begin, std::uint64_t end, int worker) {
    constexpr std::size_t kChunk = 1024;
    std::vector<std::uint64_t> idx(kChunk);
    for (std::uint64_t s = begin; s < end; s += kChunk) {
      std::size_t cnt = static_cast<std::size_t>(std::min<std::uint64_t>(kChunk, end - s));
      for (std::size_t i = 0; i < cnt; ++i) {
        std::uint64_t t = s + i, w = 0;
        for (const auto& tab : tabs) {
          w = sp.add(w, tab[t % Q]);
          t /= Q;
        }
        idx[i] = w;
      }
      fn(idx.data(), cnt, worker);
    }
  });
}

}  // namespace

Codebook codebook(const LinearCode& c, std::uint64_t guard, int workers) {
  std::uint64_t total = c.size(guard);
  Space sp(c.field(), c.n(), ~0ull);
  Codebook cb{c.field(), c.n(), std::vector<std::uint64_t>(total)};
  // Each message index maps to one slot, so workers write disjoint ranges.
  std::vector<std::vector<std::uint64_t>> tabs;
  for (const auto& r : c.generator()) tabs.push_back(multiples(sp, r));
  const std::uint64_t Q = c.field()->order();
  parallel_ranges(total, workers, [&](std::uint64_t begin, std::uint64_t end, int) {
    for (std::uint64_t t0 = begin; t0 < end; ++t0) {
      std::uint64_t t = t0, w = 0;
      for (const auto& tab : tabs) {
        w = sp.add(w, tab[t % Q]);
        t /= Q;
      }
      cb.words[t0] = w;
    }
  });
  std::sort(cb.words.begin(), cb.words.end());
  return cb;
}

std::vector<Row> parity_check(const LinearCode& c) {
  const Field& f = *c.field();
  const int n = c.n();
  std::vector<Row> g = c.generator();
  auto piv = field_rref(f, g);
  std::vector<bool> is_piv(n, false);
  for (int p : piv) is_piv[p] = true;
  std::vector<Row> h;
  for (int fc = 0; fc < n; ++fc) {
    if (is_piv[fc]) continue;
    Row r(n, 0);
    r[fc] = 1;
    for (size_t i = 0; i < piv.size(); ++i) r[piv[i]] = f.neg(g[i][fc]);
    h.push_back(std::move(r));
  }
  return h;
}

LinearCode dual(const LinearCode& c) { return {c.field(), c.n(), parity_check(c)}; }

bool same_code(const LinearCode& a, const LinearCode& b) {
  if (!a.field()->same_as(*b.field()) || a.n() != b.n() || a.k() != b.k()) return false;
  std::vector<Row> ga = a.generator(), gb = b.generator();
  field_rref(*a.field(), ga);
  field_rref(*b.field(), gb);
  return ga == gb;
}

RankDistribution rank_distribution(const LinearCode& c, std::uint64_t guard, int workers) {
  std::uint64_t total = c.size(guard);
  Space sp(c.field(), c.n(), ~0ull);
  if (workers <= 0) workers = default_workers();
  std::vector<std::vector<std::uint64_t>> counts(workers, std::vector<std::uint64_t>(c.n() + 1, 0));
  scan_codewords(c, sp, total, workers, [&](const std::uint64_t* idx, std::size_t cnt, int w) {
    std::uint8_t rk[1024];
    sp.rank_batch(idx, cnt, 0, rk);
    for (std::size_t i = 0; i < cnt; ++i) ++counts[w][rk[i]];
  });
  RankDistribution a(c.n() + 1, 0);
  for (const auto& cw : counts)
    for (int i = 0; i <= c.n(); ++i) a[i] += cw[i];
  return a;
}

RankDistribution rank_distribution(const Codebook& c) {
  Space sp(c.field, c.n, ~0ull);
  RankDistribution a(c.n + 1, 0);
  for (auto w : c.words) a[sp.rank(w)] += 1;
  return a;
}

int min_rank_distance(const LinearCode& c, std::uint64_t guard, int workers) {
  if (c.k() == 0) return c.n() + 1;
  auto a = rank_distribution(c, guard, workers);
  for (int i = 1; i <= c.n(); ++i)
    if (a[i] != 0) return i;
  return c.n() + 1;
}

int min_rank_distance(const Codebook& c) {
  Space sp(c.field, c.n, ~0ull);
  int best = c.n + 1;
  for (size_t i = 0; i < c.words.size(); ++i)
    for (size_t j = i + 1; j < c.words.size(); ++j) best = std::min(best, sp.rank(sp.sub(c.words[i], c.words[j])));
  return best;
}

int min_hamming_distance(const LinearCode& c, std::uint64_t guard) {
  int best = c.n() + 1;
  std::uint64_t s = c.size(guard);
  for (std::uint64_t t = 1; t < s; ++t) {
    auto v = c.codeword(t);
    int w = 0;
    for (auto x : v.coords()) w += x != 0;
    best = std::min(best, w);
  }
  return best;
}

namespace {

std::vector<std::uint64_t> rank_one_steps(const Space& sp) {
  const Field& f = *sp.field();
  std::vector<std::uint64_t> steps;
  Row tmp(sp.n());
  for (const auto& w : projective_points(f.q(), sp.n()))
    for (std::uint32_t a = 1; a < f.order(); ++a) {
      for (int j = 0; j < sp.n(); ++j) tmp[j] = f.scale(a, w[j]);
      steps.push_back(sp.index(tmp));
    }
  return steps;
}

}  // namespace

std::vector<std::uint8_t> distance_map(const Codebook& c, std::uint64_t guard) {
  Space sp(c.field, c.n, guard);
  if (c.words.empty()) throw InvalidArgument("empty codebook");
  return bfs(sp, c.words, rank_one_steps(sp));
}

int covering_radius(const Codebook& c, std::uint64_t guard) {
  auto d = distance_map(c, guard);
  return *std::max_element(d.begin(), d.end());
}

int covering_radius(const LinearCode& c, std::uint64_t guard) {
  const Field& f = *c.field();
  check_guard(ipow(f.order(), static_cast<unsigned>(c.n())), guard, "ambient space");
  auto h = parity_check(c);
  const int r = static_cast<int>(h.size());
  if (r == 0) return 0;
  // Syndrome of a * w (w over GF(q)) is a * sum_j w_j h_col_j.
  Space syn(c.field(), r, ~0ull);
  std::vector<std::uint64_t> steps;
  Row s(r);
  for (const auto& w : projective_points(f.q(), c.n())) {
    std::fill(s.begin(), s.end(), 0);
    for (int j = 0; j < c.n(); ++j) {
      if (!w[j]) continue;
      for (int i = 0; i < r; ++i) s[i] = f.add(s[i], f.scale(h[i][j], w[j]));
    }
    Row as(r);
    for (std::uint32_t a = 1; a < f.order(); ++a) {
      for (int i = 0; i < r; ++i) as[i] = f.mul(a, s[i]);
      steps.push_back(syn.index(as));
    }
  }
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
  if (!steps.empty() && steps.front() == 0) steps.erase(steps.begin());
  auto d = bfs(syn, {0}, steps);
  return *std::max_element(d.begin(), d.end());
}

LinearCode gabidulin(const RankVector& g, int k, int a) {
  const Field& f = *g.field();
  const int n = g.n(), m = f.m();
  if (n > m) throw InvalidArgument("Gabidulin codes need n <= m");
  if (a < 1 || std::gcd(a, m) != 1) throw InvalidArgument("a must be coprime to m");
  if (k < 1 || k > n) throw InvalidArgument("k must satisfy 1 <= k <= n");
  if (rank(g) != n) throw InvalidArgument("g must have rank n");
  std::vector<Row> rows(k, Row(n));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = f.frobenius(g.coords()[j], (a * i) % m);
  return {g.field(), n, std::move(rows)};
}

LinearCode cartesian_power(const LinearCode& c, int l) {
  if (l < 1) throw InvalidArgument("l must be >= 1");
  std::vector<Row> rows;
  for (int b = 0; b < l; ++b)
    for (const auto& r : c.generator()) {
      Row x(static_cast<size_t>(c.n()) * l, 0);
      std::copy(r.begin(), r.end(), x.begin() + static_cast<long>(b) * c.n());
      rows.push_back(std::move(x));
    }
  return {c.field(), c.n() * l, std::move(rows)};
}

Codebook transpose_code(const Codebook& c, std::uint64_t guard) {
  const Field& f = *c.field;
  const int m = f.m(), n = c.n;
  Space sp(c.field, n, guard);
  FieldPtr ft = Field::make(f.q(), n);
  Space spt(ft, m, ~0ull);
  Codebook out{ft, m, {}};
  std::vector<int> digs(n);
  for (auto w : c.words) {
    auto v = sp.coords(w);
    Row t(m);
    // New coordinate i collects digit i of every old coordinate.
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) digs[j] = f.digit(v[j], i);
      t[i] = ft->from_digits(std::span<const int>(digs));
    }
    out.words.push_back(spt.index(t));
  }
  std::sort(out.words.begin(), out.words.end());
  return out;
}

Codebook embed_code(const LinearCode& c, int target_m) {
  const Field& f = *c.field();
  if (target_m < f.m()) throw InvalidArgument("target degree smaller than the source degree");
  FieldPtr ft = Field::make(f.q(), target_m);
  Codebook src = codebook(c);
  Space s1(c.field(), c.n(), ~0ull), s2(ft, c.n(), ~0ull);
  Codebook out{ft, c.n(), {}};
  // Digits are polynomial-basis coordinates, so beta_i -> alpha_i keeps values.
  for (auto w : src.words) out.words.push_back(s2.index(s1.coords(w)));
  std::sort(out.words.begin(), out.words.end());
  return out;
}

bool mrd_els_check(const LinearCode& c) {
  const Field& f = *c.field();
  const int n = c.n(), k = c.k();
  if (n > f.m()) throw InvalidArgument("mrd_els_check needs n <= m");
  for (const auto& V : enumerate_els(f.q(), f.m(), n, n - k)) {
    std::vector<Row> rows = c.generator();
    for (int i = 0; i < V.dim(); ++i) {
      Row r(n);
      for (int j = 0; j < n; ++j) r[j] = V.basis().at(i, j);
      rows.push_back(std::move(r));
    }
    if (field_rank(f, rows) != n) return false;
  }
  return true;
}

LinearCode array_view(const LinearCode& c, const Basis& basis) {
  const Field& f = *c.field();
  if (!basis.field()->same_as(f)) throw FieldMismatch();
  const int m = f.m(), n = c.n();
  FieldPtr base = Field::make(f.q(), 1);
  std::vector<Row> rows;
  std::uint32_t xt = 1;
  for (int t = 0; t < m; ++t, xt *= f.q())
    for (const auto& g : c.generator()) {
      Row s(n);
      for (int j = 0; j < n; ++j) s[j] = f.mul(xt, g[j]);
      gfq::Matrix e = expand(f, s, basis);
      Row flat(static_cast<size_t>(m) * n);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) flat[static_cast<size_t>(i) * n + j] = e.at(i, j);
      rows.push_back(std::move(flat));
    }
  return {base, m * n, std::move(rows)};
}

namespace {

std::vector<std::string> content_lines(std::istream& in, bool* codebook_marker) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos) continue;
    if (line[p] == '#') {
      if (codebook_marker && line.find("codebook") != std::string::npos) *codebook_marker = true;
      continue;
    }
    lines.push_back(line);
  }
  return lines;
}

struct Header {
  FieldPtr f;
  int n = 0;
  int k = 0;
};

Header parse_header(const std::string& line) {
  std::istringstream is(line);
  int q, m, n, k;
  if (!(is >> q >> m >> n >> k)) throw InvalidArgument("code header must be 'q m n k c_0 .. c_m'");
  Poly mod;
  int x;
  while (is >> x) mod.push_back(x);
  Header h;
  h.f = mod.empty() ? Field::make(q, m) : Field::make(q, m, mod);
  h.n = n;
  h.k = k;
  return h;
}

std::vector<Row> parse_rows(const std::vector<std::string>& lines, const Header& h) {
  if (static_cast<int>(lines.size()) != h.k + 1) throw InvalidArgument("expected " + std::to_string(h.k) + " rows");
  std::vector<Row> rows;
  for (int i = 0; i < h.k; ++i) {
    std::istringstream is(lines[i + 1]);
    Row r;
    long long v;
    while (is >> v) {
      if (v < 0 || v >= static_cast<long long>(h.f->order())) throw InvalidArgument("element out of range");
      r.push_back(static_cast<std::uint32_t>(v));
    }
    if (static_cast<int>(r.size()) != h.n) throw InvalidArgument("row " + std::to_string(i) + " has wrong length");
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_header(std::ostream& out, const Field& f, int n, std::size_t k) {
  out << f.q() << ' ' << f.m() << ' ' << n << ' ' << k;
  for (int c : f.modulus()) out << ' ' << c;
  out << '\n';
}

}  // namespace

LinearCode read_code(std::istream& in) {
  auto lines = content_lines(in, nullptr);
  if (lines.empty()) throw InvalidArgument("empty code file");
  Header h = parse_header(lines[0]);
  return {h.f, h.n, parse_rows(lines, h)};
}

void write_code(std::ostream& out, const LinearCode& c) {
  write_header(out, *c.field(), c.n(), c.k());
  for (const auto& r : c.generator()) {
    for (size_t j = 0; j < r.size(); ++j) out << (j ? " " : "") << r[j];
    out << '\n';
  }
}

Codebook read_codebook(std::istream& in) {
  auto lines = content_lines(in, nullptr);
  if (lines.empty()) throw InvalidArgument("empty codebook file");
  Header h = parse_header(lines[0]);
  std::vector<RankVector> vs;
  for (auto& r : parse_rows(lines, h)) vs.emplace_back(h.f, std::move(r));
  return Codebook::from_vectors(h.f, h.n, vs);
}

void write_codebook(std::ostream& out, const Codebook& c) {
  out << "# codebook\n";
  write_header(out, *c.field, c.n, c.words.size());
  for (const auto& v : c.vectors()) out << v.to_string() << '\n';
}

}  // namespace rankmetric
