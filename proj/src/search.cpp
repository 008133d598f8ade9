#include "ips/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <thread>
#include <tuple>
#include <utility>

namespace ips {

namespace {

using i128 = __int128;

// floor(sqrt(n)) for 0 <= n < 2^126.
std::int64_t isqrt_i128(i128 n, bool& exact) {
  auto r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  exact = r * r == n;
  return static_cast<std::int64_t>(r);
}

// Smallest-prime-factor sieve, used to split the four Heron factors of a
// candidate triangle. Every factor is at most 3d.
class SmallFactors {
 public:
  explicit SmallFactors(std::int64_t limit) : spf_(static_cast<std::size_t>(limit) + 1, 0) {
    for (std::int64_t i = 2; i <= limit; ++i) {
      if (spf_[i]) continue;
      for (std::int64_t j = i; j <= limit; j += i) {
        if (!spf_[j]) spf_[j] = static_cast<std::uint32_t>(i);
      }
    }
  }

  std::int64_t limit() const { return static_cast<std::int64_t>(spf_.size()) - 1; }

  // prod(factors) = q * b^2 with q squarefree.
  void squarefree_product(const std::int64_t (&factors)[4], std::int64_t& q, std::int64_t& b) const {
    std::pair<std::uint32_t, int> exps[64];
    int used = 0;
    for (std::int64_t f : factors) {
      while (f > 1) {
        const std::uint32_t p = spf_[f];
        int e = 0;
        while (f % p == 0) {
          f /= p;
          ++e;
        }
        int slot = 0;
        while (slot < used && exps[slot].first != p) ++slot;
        if (slot == used) exps[used++] = {p, 0};
        exps[slot].second += e;
      }
    }
    q = 1;
    b = 1;
    for (int i = 0; i < used; ++i) {
      const auto [p, e] = exps[i];
      if (e % 2) q *= p;
      for (int t = 0; t < e / 2; ++t) b *= p;
    }
  }

 private:
  std::vector<std::uint32_t> spf_;
};

void validate_ceiling(std::int64_t d) {
  if (d < 1 || d > kMaxSearchCeiling) {
    throw IpsError(ErrorKind::OutOfRange,
                   "diameter ceiling must be in [1, " + std::to_string(kMaxSearchCeiling) + "], got " + std::to_string(d));
  }
}

// Which curve indices a filter lets weeding drop. Returns nullopt when no
// rule applies.
std::optional<CharClass> weeding_class(const CharFilter& f) {
  switch (f.kind) {
    case CharFilter::Kind::Mod4OneOrTwo: return CharClass::NotThreeMod4;
    case CharFilter::Kind::Fixed: {
      const std::int64_t r8 = f.q % 8;
      if (r8 % 4 != 3) return CharClass::NotThreeMod4;
      if (r8 == 3) return CharClass::NotSevenMod8;
      return std::nullopt;
    }
    default: return std::nullopt;
  }
}

// Walks all (k, l) with |k - l| < m, k + l > m, k, l in [min_radius, d];
// emits (k, l, q, b) for every point that survives weeding.
template <class Emit>
void scan_curves(std::int64_t m, std::int64_t d, Pruning pruning, std::optional<CharClass> rule,
                 std::int64_t min_radius, const SmallFactors& sf, SearchStats& stats, Emit&& emit) {
  const std::int64_t lo = std::max<std::int64_t>(1, min_radius);
  for (std::int64_t n = -(m - 1); n <= m - 1; ++n) {
    if (pruning == Pruning::WeedingOn && rule && !weeding_allows(m, n, *rule)) {
      ++stats.curve_indices_pruned;
      continue;
    }
    ++stats.curve_indices_examined;
    for (std::int64_t k = std::max(lo, lo + n); k <= d; ++k) {
      const std::int64_t l = k - n;
      if (l < lo || l > d || k + l <= m) continue;
      ++stats.candidate_points;
      const std::int64_t factors[4] = {m + k + l, m + k - l, k + l - m, l + m - k};
      std::int64_t q = 0, b = 0;
      sf.squarefree_product(factors, q, b);
      emit(k, l, q, b);
    }
  }
}

void add_line_points(std::int64_t m, std::int64_t d, std::int64_t min_radius, std::vector<PoolPoint>& out) {
  for (std::int64_t l = std::max<std::int64_t>(1, min_radius); l + m <= d; ++l) {
    const std::int64_t k = l + m;
    out.push_back({k, l, k * k - l * l, 0});
    out.push_back({l, k, l * l - k * k, 0});
  }
  std::sort(out.begin(), out.end());
}

void push_mirrored(std::vector<PoolPoint>& pts, std::int64_t k, std::int64_t l, std::int64_t b) {
  const std::int64_t a = k * k - l * l;
  pts.push_back({k, l, a, b});
  pts.push_back({k, l, a, -b});
}

// ---------------------------------------------------------------------------
// Exact integer geometry in the 2m grid. Coordinates are (a, b sqrt(q)).

struct GPt {
  std::int64_t a, b;
};

i128 cross(const GPt& p, const GPt& r, const GPt& s) {
  return static_cast<i128>(r.a - p.a) * (s.b - p.b) - static_cast<i128>(s.a - p.a) * (r.b - p.b);
}

// det |x^2 + y^2, x, y, 1| with y = b sqrt(q); the sqrt(q) factors out of
// the y column, leaving an integer determinant.
bool concyclic(const GPt& p, const GPt& r, const GPt& s, const GPt& t, std::int64_t q) {
  auto lift = [q](const GPt& v) { return static_cast<i128>(v.a) * v.a + static_cast<i128>(q) * v.b * v.b; };
  const i128 lp = lift(p);
  const i128 r0 = lift(r) - lp, r1 = r.a - p.a, r2 = r.b - p.b;
  const i128 s0 = lift(s) - lp, s1 = s.a - p.a, s2 = s.b - p.b;
  const i128 t0 = lift(t) - lp, t1 = t.a - p.a, t2 = t.b - p.b;
  const i128 det = r0 * (s1 * t2 - s2 * t1) - r1 * (s0 * t2 - s2 * t0) + r2 * (s0 * t1 - s1 * t0);
  return det == 0;
}

using CanonicalKey = std::vector<std::pair<std::int64_t, std::int64_t>>;

struct RawWitness {
  std::int64_t m;
  std::int64_t q;
  CanonicalKey key;
};

// Smallest sorted coordinate list over every placement of a shortest edge
// at (-m/2, 0), (m/2, 0) and both reflections in the x axis. Two congruent
// sets get the same key.
CanonicalKey canonical_key(const std::vector<GPt>& pts, std::int64_t q, std::int64_t m) {
  const std::size_t n = pts.size();
  const std::int64_t den = 2 * m;
  std::vector<std::vector<std::int64_t>> dist(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const i128 da = pts[i].a - pts[j].a;
      const i128 db = pts[i].b - pts[j].b;
      bool exact = false;
      const std::int64_t r = isqrt_i128(da * da + static_cast<i128>(q) * db * db, exact);
      dist[i][j] = dist[j][i] = r / den;
    }
  }
  std::int64_t shortest = dist[0][1];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) shortest = std::min(shortest, dist[i][j]);
  }
  CanonicalKey best;
  CanonicalKey cur(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || dist[i][j] != shortest) continue;
      for (int refl : {1, -1}) {
        for (std::size_t p = 0; p < n; ++p) {
          const std::int64_t k = dist[p][i];
          const std::int64_t l = dist[p][j];
          std::int64_t b = 0;
          if (p != i && p != j) {
            const i128 h16 = static_cast<i128>(m + k + l) * (m + k - l) * (k + l - m) * (l + m - k);
            bool exact = false;
            b = isqrt_i128(h16 / q, exact);
            const i128 c = cross(pts[i], pts[j], pts[p]);
            if (c < 0) b = -b;
            if (c == 0) b = 0;
          }
          cur[p] = {k * k - l * l, refl * b};
        }
        std::sort(cur.begin(), cur.end());
        if (best.empty() || cur < best) best = cur;
      }
    }
  }
  return best;
}

struct WitnessOrder {
  bool operator()(const RawWitness& x, const RawWitness& y) const {
    return std::tie(x.m, x.q, x.key) < std::tie(y.m, y.q, y.key);
  }
};

using WitnessSet = std::map<RawWitness, bool, WitnessOrder>;

// Clique extension over one characteristic class of one base edge.
class CliqueSearch {
 public:
  CliqueSearch(const CandidatePool& pool, std::int64_t d, const SearchProblem& prob, SearchStats& stats,
               WitnessSet& out)
      : m_(pool.base_edge), q_(pool.radicand), d_(d), prob_(prob), stats_(stats), out_(out) {
    verts_ = pool.points;
    if (prob.position == Position::Any) {
      verts_.insert(verts_.end(), pool.line_points.begin(), pool.line_points.end());
    }
    need_ = prob.cardinality - 2;
    e1_ = {-m_ * m_, 0};
    e2_ = {m_ * m_, 0};
    const std::size_t n = verts_.size();
    adj_.assign(n, std::vector<char>(n, 0));
    hits_d_.assign(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        ++stats_.compatibility_tests;
        const auto c = compatible(verts_[i], verts_[j], q_, m_, d_);
        if (!c.ok || c.distance < m_) continue;  // the base edge is a shortest edge
        const GPt u = pt(i), v = pt(j);
        if (prob.position != Position::Any) {
          if (cross(e1_, u, v) == 0 || cross(e2_, u, v) == 0) continue;
        }
        if (prob.position == Position::General && concyclic(e1_, e2_, u, v, q_)) continue;
        adj_[i][j] = adj_[j][i] = 1;
        hits_d_[i][j] = hits_d_[j][i] = c.distance == d_;
      }
    }
  }

  void run() {
    if (need_ < 1) return;
    std::vector<std::size_t> cands(verts_.size());
    for (std::size_t i = 0; i < cands.size(); ++i) cands[i] = i;
    std::vector<std::size_t> chosen;
    extend(chosen, cands, m_ == d_, false);
  }

 private:
  GPt pt(std::size_t i) const { return {verts_[i].a, verts_[i].b}; }

  bool on_line(std::size_t i) const { return verts_[i].b == 0; }

  bool touches_d(std::size_t i) const { return verts_[i].k == d_ || verts_[i].l == d_; }

  bool position_ok(const std::vector<std::size_t>& chosen, std::size_t v) const {
    if (prob_.position == Position::Any) return true;
    const GPt pv = pt(v);
    for (std::size_t x = 0; x < chosen.size(); ++x) {
      const GPt px = pt(chosen[x]);
      for (std::size_t y = x + 1; y < chosen.size(); ++y) {
        const GPt py = pt(chosen[y]);
        if (cross(px, py, pv) == 0) return false;
        if (prob_.position == Position::General) {
          if (concyclic(e1_, px, py, pv, q_) || concyclic(e2_, px, py, pv, q_)) return false;
          for (std::size_t z = y + 1; z < chosen.size(); ++z) {
            if (concyclic(px, py, pt(chosen[z]), pv, q_)) return false;
          }
        }
      }
    }
    return true;
  }

  void extend(std::vector<std::size_t>& chosen, const std::vector<std::size_t>& cands, bool has_d, bool has_offline) {
    if (static_cast<int>(chosen.size()) == need_) {
      ++stats_.cliques_completed;
      if (has_d && has_offline) record(chosen);
      return;
    }
    std::vector<std::size_t> next;
    for (std::size_t idx = 0; idx < cands.size(); ++idx) {
      const std::size_t v = cands[idx];
      if (static_cast<int>(chosen.size() + (cands.size() - idx)) < need_) return;
      if (!position_ok(chosen, v)) continue;
      next.clear();
      for (std::size_t t = idx + 1; t < cands.size(); ++t) {
        if (adj_[v][cands[t]]) next.push_back(cands[t]);
      }
      if (static_cast<int>(chosen.size() + 1 + next.size()) < need_) continue;
      bool d_here = has_d || touches_d(v);
      for (std::size_t c : chosen) d_here = d_here || hits_d_[v][c];
      chosen.push_back(v);
      extend(chosen, next, d_here, has_offline || !on_line(v));
      chosen.pop_back();
    }
  }

  void record(const std::vector<std::size_t>& chosen) {
    std::vector<GPt> pts{e1_, e2_};
    for (std::size_t c : chosen) pts.push_back(pt(c));
    out_.emplace(RawWitness{m_, q_, canonical_key(pts, q_, m_)}, true);
  }

  std::int64_t m_, q_, d_;
  const SearchProblem& prob_;
  SearchStats& stats_;
  WitnessSet& out_;
  std::vector<PoolPoint> verts_;
  int need_ = 0;
  GPt e1_{}, e2_{};
  std::vector<std::vector<char>> adj_;
  std::vector<std::vector<char>> hits_d_;
};

std::vector<CandidatePool> pools_for(std::int64_t m, const CharFilter& filter, std::int64_t d, Pruning pruning,
                                     const PoolOptions& opts, const SmallFactors& sf, SearchStats& stats) {
  std::map<std::int64_t, CandidatePool> by_q;
  scan_curves(m, d, pruning, weeding_class(filter), opts.min_radius, sf, stats,
              [&](std::int64_t k, std::int64_t l, std::int64_t q, std::int64_t b) {
                if (!filter.admits(q)) return;
                auto& pool = by_q[q];
                push_mirrored(pool.points, k, l, b);
              });
  std::vector<PoolPoint> line;
  if (opts.include_line_points) add_line_points(m, d, opts.min_radius, line);
  std::vector<CandidatePool> out;
  out.reserve(by_q.size());
  for (auto& [q, pool] : by_q) {
    pool.base_edge = m;
    pool.radicand = q;
    std::sort(pool.points.begin(), pool.points.end());
    pool.line_points = line;
    stats.pool_points += pool.points.size();
    out.push_back(std::move(pool));
  }
  return out;
}

std::int64_t factor_limit(std::int64_t d) { return 3 * d + 3; }

struct UnitResult {
  WitnessSet witnesses;
  SearchStats stats;
};

UnitResult run_unit(std::int64_t m, std::int64_t d, const SearchProblem& prob, const SmallFactors& sf) {
  UnitResult res;
  ++res.stats.work_units;
  PoolOptions opts;
  opts.min_radius = m;
  opts.include_line_points = prob.position == Position::Any;
  const auto pools = pools_for(m, prob.char_filter, d, prob.pruning, opts, sf, res.stats);
  for (const auto& pool : pools) {
    CliqueSearch cs(pool, d, prob, res.stats, res.witnesses);
    cs.run();
  }
  return res;
}

void validate(const SearchProblem& p) {
  if (p.cardinality < 3) throw IpsError(ErrorKind::InvalidArgument, "cardinality must be >= 3");
  validate_ceiling(p.diameter_ceiling);
  if (p.char_filter.kind == CharFilter::Kind::Fixed &&
      (p.char_filter.q < 1 || !is_squarefree(BigInt(static_cast<long>(p.char_filter.q))))) {
    throw IpsError(ErrorKind::InvalidArgument, "fixed characteristic must be a positive squarefree integer");
  }
}

}  // namespace

// ---------------------------------------------------------------------------

const char* to_string(Position p) noexcept {
  switch (p) {
    case Position::Any: return "any";
    case Position::SemiGeneral: return "semi-general";
    case Position::General: return "general";
  }
  return "?";
}

bool CharFilter::admits(std::int64_t qv) const noexcept {
  switch (kind) {
    case Kind::All: return true;
    case Kind::Mod4OneOrTwo: return qv % 4 != 3;
    case Kind::Mod4Three: return qv % 4 == 3;
    case Kind::Fixed: return qv == q;
  }
  return false;
}

bool CharFilter::excludes_4k3() const noexcept {
  return kind == Kind::Mod4OneOrTwo || (kind == Kind::Fixed && q % 4 != 3);
}

std::string CharFilter::str() const {
  switch (kind) {
    case Kind::All: return "all";
    case Kind::Mod4OneOrTwo: return "4k1,4k2";
    case Kind::Mod4Three: return "4k3";
    case Kind::Fixed: return "q=" + std::to_string(q);
  }
  return "?";
}

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  curve_indices_examined += o.curve_indices_examined;
  curve_indices_pruned += o.curve_indices_pruned;
  candidate_points += o.candidate_points;
  pool_points += o.pool_points;
  compatibility_tests += o.compatibility_tests;
  cliques_completed += o.cliques_completed;
  work_units += o.work_units;
  return *this;
}

std::vector<CandidatePool> build_pools(std::int64_t m, const CharFilter& filter, std::int64_t d, Pruning pruning,
                                       const PoolOptions& opts, SearchStats* stats) {
  validate_ceiling(d);
  if (m < 1 || m > d) throw IpsError(ErrorKind::InvalidArgument, "base edge must satisfy 1 <= m <= d");
  SmallFactors sf(factor_limit(d));
  SearchStats local;
  auto pools = pools_for(m, filter, d, pruning, opts, sf, local);
  if (stats) *stats += local;
  return pools;
}

CandidatePool build_pool(std::int64_t m, std::int64_t q, std::int64_t d, Pruning pruning, const PoolOptions& opts,
                         SearchStats* stats) {
  auto pools = build_pools(m, CharFilter::fixed(q), d, pruning, opts, stats);
  if (!pools.empty()) return std::move(pools.front());
  CandidatePool empty;
  empty.base_edge = m;
  empty.radicand = q;
  if (opts.include_line_points) add_line_points(m, d, opts.min_radius, empty.line_points);
  return empty;
}

Compatibility compatible(const PoolPoint& p1, const PoolPoint& p2, std::int64_t q, std::int64_t m, std::int64_t d) {
  Compatibility c;
  if (p1.a == p2.a && p1.b == p2.b) {
    c.coincident = true;
    return c;
  }
  const i128 da = p1.a - p2.a;
  const i128 db = p1.b - p2.b;
  bool exact = false;
  const std::int64_t r = isqrt_i128(da * da + static_cast<i128>(q) * db * db, exact);
  if (!exact || r % (2 * m) != 0) return c;
  c.distance = r / (2 * m);
  c.ok = c.distance >= 1 && c.distance <= d;
  return c;
}

SearchOutcome solve(const SearchProblem& problem) {
  validate(problem);
  SearchOutcome outcome;
  const SmallFactors sf(factor_limit(problem.diameter_ceiling));
  const unsigned workers = std::max(1u, problem.workers);

  for (std::int64_t d = 1; d <= problem.diameter_ceiling; ++d) {
    std::vector<UnitResult> results(static_cast<std::size_t>(d));
    std::atomic<std::int64_t> next{1};
    auto work = [&] {
      for (std::int64_t m = next++; m <= d; m = next++) results[m - 1] = run_unit(m, d, problem, sf);
    };
    if (workers == 1 || d == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < std::min<std::int64_t>(workers, d); ++w) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }

    // Merge in base-edge order so the outcome does not depend on scheduling.
    WitnessSet level;
    for (auto& r : results) {
      outcome.stats += r.stats;
      level.merge(r.witnesses);
    }
    for (const auto& [w, unused] : level) {
      std::vector<GridPoint> pts;
      pts.reserve(w.key.size());
      for (const auto& [a, b] : w.key) pts.push_back({BigInt(static_cast<long>(a)), BigInt(static_cast<long>(b))});
      outcome.witnesses.push_back(
          {GridPointSet(BigInt(static_cast<long>(w.q)), BigInt(static_cast<long>(2 * w.m)), std::move(pts)), d, w.m,
           w.q});
    }
    if (!level.empty() && !outcome.min_diameter) outcome.min_diameter = d;
    if (outcome.min_diameter && problem.mode == SearchMode::Minimum) break;
  }
  return outcome;
}

namespace {

bool same_witnesses(const SearchOutcome& x, const SearchOutcome& y) {
  if (x.min_diameter != y.min_diameter || x.witnesses.size() != y.witnesses.size()) return false;
  for (std::size_t i = 0; i < x.witnesses.size(); ++i) {
    if (!(x.witnesses[i].set == y.witnesses[i].set) || x.witnesses[i].diameter != y.witnesses[i].diameter) return false;
  }
  return true;
}

}  // namespace

PruningReport pruning_report(const SearchProblem& problem) {
  const auto& f = problem.char_filter;
  const bool applicable = f.kind == CharFilter::Kind::Mod4OneOrTwo || f.kind == CharFilter::Kind::Fixed;
  if (!applicable || (f.kind == CharFilter::Kind::Fixed && f.q % 4 == 3)) {
    throw IpsError(ErrorKind::NotApplicable,
                   "pruning comparison needs a characteristic filter that excludes 4k+3 (got " + f.str() + ")");
  }
  SearchProblem on = problem;
  on.pruning = Pruning::WeedingOn;
  SearchProblem off = problem;
  off.pruning = Pruning::WeedingOff;
  PruningReport rep{solve(on), solve(off), false};
  rep.identical = same_witnesses(rep.with_weeding, rep.without_weeding);
  return rep;
}

}  // namespace ips
