#pragma once
// Exhaustive verification sweeps: positivity of dealt-pair differences over
// all pairs up to a weight bound (straight, skew and m-tuple forms), and the
// multiplicity-freeness classification against brute force. Sweeps run on a
// block work queue; after each block the last completed index can be
// checkpointed to a JSON file and picked up again later.

#include <atomic>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "schurpos/algebra.hpp"
#include "schurpos/generate.hpp"
#include "schurpos/tilde.hpp"

namespace schurpos {

struct SweepOptions {
  int bound = 0;
  int workers = 1;
  bool minimal_only = true;          // skew sweep: restrict to minimal pairs
  int m = 2;                         // tuple size for the m-way sweep
  std::string checkpoint_path;       // empty: no checkpointing
  bool resume = false;
  long long block_size = 256;        // items per checkpoint block
  std::function<void(long long, long long)> progress;  // (done, total)
};

struct SweepReport {
  std::string command;
  int bound = 0;
  long long items = 0;          // nontrivial comparisons performed
  long long fixed_points = 0;   // dealt pairs skipped (difference is zero)
  long long start_index = 0;    // first work-unit index actually run
  long long total_units = 0;    // work units in the full sweep
  std::vector<std::string> counterexamples;  // sorted by work unit

  bool ok() const { return counterexamples.empty(); }
};

namespace detail {

struct Checkpoint {
  std::string command;
  int bound = 0;
  long long last_completed_index = -1;
};

inline void write_checkpoint(const std::string& path, const Checkpoint& c) {
  nlohmann::json j{{"command", c.command},
                   {"bound", c.bound},
                   {"last_completed_index", c.last_completed_index}};
  std::ofstream out(path);
  out << j.dump() << "\n";
}

inline bool read_checkpoint(const std::string& path, Checkpoint& c) {
  std::ifstream in(path);
  if (!in) return false;
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded()) return false;
  c.command = j.value("command", "");
  c.bound = j.value("bound", -1);
  c.last_completed_index = j.value("last_completed_index", -1LL);
  return true;
}

// Runs fn(i) for i in [start, count) with a block work queue. Blocks finish
// in order, so a checkpoint after a block is always a safe resume point.
template <typename Fn>
void block_sweep(long long count, long long start, const SweepOptions& opt,
                 const std::string& command, Fn&& fn) {
  int workers = std::max(1, opt.workers);
  long long block = std::max<long long>(1, opt.block_size);
  for (long long block_start = start; block_start < count;
       block_start += block) {
    long long block_end = std::min(count, block_start + block);
    std::atomic<long long> next{block_start};
    auto run = [&]() {
      for (;;) {
        long long i = next.fetch_add(1);
        if (i >= block_end) return;
        fn(i);
      }
    };
    if (workers == 1) {
      run();
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(run);
      for (auto& t : pool) t.join();
    }
    if (!opt.checkpoint_path.empty())
      write_checkpoint(opt.checkpoint_path,
                       {command, opt.bound, block_end - 1});
    if (opt.progress) opt.progress(block_end, count);
  }
}

inline long long resume_start(const SweepOptions& opt,
                              const std::string& command) {
  if (!opt.resume || opt.checkpoint_path.empty()) return 0;
  Checkpoint c;
  if (!read_checkpoint(opt.checkpoint_path, c)) return 0;
  if (c.command != command || c.bound != opt.bound)
    fail(errc::bad_input, "checkpoint file is for a different sweep");
  return c.last_completed_index + 1;
}

// Thread-safe, index-ordered counterexample collection.
class Findings {
 public:
  void add(long long index, std::string text) {
    std::lock_guard lock(mutex_);
    items_.emplace_back(index, std::move(text));
  }
  std::vector<std::string> sorted() {
    std::lock_guard lock(mutex_);
    std::sort(items_.begin(), items_.end());
    std::vector<std::string> out;
    out.reserve(items_.size());
    for (auto& [i, s] : items_) out.push_back(std::move(s));
    return out;
  }

 private:
  std::mutex mutex_;
  std::vector<std::pair<long long, std::string>> items_;
};

}  // namespace detail

// -- dealt-pair positivity over all straight pairs ---------------------------

// Work is grouped by the combined part multiset gamma: every unordered pair
// with |mu| + |nu| = n arises as exactly one dealing of one gamma, and the
// dealt product is shared across the whole group.
inline SweepReport verify_fflp(const SweepOptions& opt) {
  SweepReport report;
  report.command = "fflp";
  report.bound = opt.bound;
  std::vector<Partition> gammas = partitions_up_to(opt.bound);
  report.total_units = static_cast<long long>(gammas.size());
  report.start_index = detail::resume_start(opt, report.command);

  std::atomic<long long> items{0}, fixed{0};
  detail::Findings findings;
  detail::block_sweep(
      report.total_units, report.start_index, opt, report.command,
      [&](long long i) {
        const Partition& gamma = gammas[static_cast<std::size_t>(i)];
        auto [lambda, rho] = tilde_pair(gamma, Partition{});
        SchurVector dealt = schur_product_uncached(lambda, rho);
        for (const Dealing& d : dealings(gamma)) {
          const auto& [mu, nu] = d.pair;
          if ((mu == lambda && nu == rho) || (mu == rho && nu == lambda)) {
            fixed.fetch_add(1);
            continue;
          }
          items.fetch_add(1);
          SchurVector raw = schur_product_uncached(mu, nu);
          if (!dominated_by(raw, dealt)) {
            SchurVector diff = dealt - raw;
            std::ostringstream os;
            os << "pair (" << mu << " | " << nu << "), dealt (" << lambda
               << " | " << rho << "): difference = " << diff;
            findings.add(i, os.str());
          }
        }
      });
  report.items = items.load();
  report.fixed_points = fixed.load();
  report.counterexamples = findings.sorted();
  return report;
}

// -- dealt-pair positivity over skew pairs -----------------------------------

// Description domain: minimal pairs of each size (canonical translation
// representatives, finitely many), or with minimal_only off every
// description whose outer weight is at most the bound.
inline std::vector<SkewShape> skew_sweep_domain(int bound, bool minimal_only) {
  std::vector<SkewShape> shapes;
  if (minimal_only) {
    for (int s = 1; s <= bound; ++s) {
      auto layer = minimal_skew_shapes(s);
      shapes.insert(shapes.end(), layer.begin(), layer.end());
    }
  } else {
    for (const SkewShape& s : skew_shapes_outer_up_to(bound))
      if (s.size() >= 1) shapes.push_back(s);
  }
  return shapes;
}

inline SweepReport verify_skew(const SweepOptions& opt) {
  SweepReport report;
  report.command = opt.minimal_only ? "skew-minimal" : "skew-all";
  report.bound = opt.bound;
  std::vector<SkewShape> shapes = skew_sweep_domain(opt.bound, opt.minimal_only);
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < shapes.size(); ++i)
    for (std::size_t j = i; j < shapes.size(); ++j)
      if (shapes[i].size() + shapes[j].size() <= opt.bound)
        pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  report.total_units = static_cast<long long>(pairs.size());
  report.start_index = detail::resume_start(opt, report.command);

  std::atomic<long long> items{0}, fixed{0};
  detail::Findings findings;
  detail::block_sweep(
      report.total_units, report.start_index, opt, report.command,
      [&](long long idx) {
        const auto& [i, j] = pairs[static_cast<std::size_t>(idx)];
        SkewPair p{shapes[static_cast<std::size_t>(i)],
                   shapes[static_cast<std::size_t>(j)]};
        SkewPair q = skew_tilde(p);
        if ((q.first == p.first && q.second == p.second) ||
            (q.first == p.second && q.second == p.first)) {
          fixed.fetch_add(1);
          return;
        }
        items.fetch_add(1);
        SchurVector raw = multiply_skew(p.first, p.second);
        SchurVector dealt = multiply_skew(q.first, q.second);
        if (!dominated_by(raw, dealt)) {
          SchurVector diff = dealt - raw;
          std::ostringstream os;
          os << "pair (" << p.first << " | " << p.second << "), dealt ("
             << q.first << " | " << q.second << "): difference = " << diff;
          findings.add(idx, os.str());
        }
      });
  report.items = items.load();
  report.fixed_points = fixed.load();
  report.counterexamples = findings.sorted();
  return report;
}

// -- m-way dealing sweep -----------------------------------------------------

inline SweepReport verify_mtilde(const SweepOptions& opt) {
  if (opt.m < 2) fail(errc::bad_arity, "m-way sweep needs m >= 2");
  SweepReport report;
  report.command = "mtilde-" + std::to_string(opt.m);
  report.bound = opt.bound;
  // multisets of m partitions with total weight <= bound, graded lex
  std::vector<Partition> pool = partitions_up_to(opt.bound);
  std::vector<std::vector<Partition>> tuples;
  std::vector<Partition> acc;
  auto rec = [&](auto&& self, std::size_t from, int left) -> void {
    if (acc.size() == static_cast<std::size_t>(opt.m)) {
      tuples.push_back(acc);
      return;
    }
    for (std::size_t t = from; t < pool.size(); ++t) {
      if (pool[t].sum() > left) continue;
      acc.push_back(pool[t]);
      self(self, t, left - pool[t].sum());
      acc.pop_back();
    }
  };
  rec(rec, 0, opt.bound);
  report.total_units = static_cast<long long>(tuples.size());
  report.start_index = detail::resume_start(opt, report.command);

  std::atomic<long long> items{0}, fixed{0};
  detail::Findings findings;
  auto render_tuple = [](const std::vector<Partition>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) s += " | ";
      s += t[i].empty() ? "()" : to_string(t[i]);
    }
    return s + ")";
  };
  detail::block_sweep(
      report.total_units, report.start_index, opt, report.command,
      [&](long long idx) {
        const auto& tuple = tuples[static_cast<std::size_t>(idx)];
        std::vector<Partition> dealt = tilde_m(tuple, opt.m);
        std::vector<Partition> a = tuple, b = dealt;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a == b) {
          fixed.fetch_add(1);
          return;
        }
        items.fetch_add(1);
        auto prod = [](const std::vector<Partition>& ps) {
          SchurVector v = SchurVector::one();
          for (const Partition& p : ps) v = multiply(v, SchurVector::basis(p));
          return v;
        };
        SchurVector raw = prod(tuple), nice = prod(dealt);
        if (!dominated_by(raw, nice)) {
          SchurVector diff = nice - raw;
          std::ostringstream os;
          os << "tuple " << render_tuple(tuple) << ", dealt "
             << render_tuple(dealt) << ": difference = " << diff;
          findings.add(idx, os.str());
        }
      });
  report.items = items.load();
  report.fixed_points = fixed.load();
  report.counterexamples = findings.sorted();
  return report;
}

// -- multiplicity-freeness classification ------------------------------------

// The four-case part-size classification of multiplicity-free products.
// Products with an empty factor are a single Schur function, hence trivially
// multiplicity-free.
inline bool stembridge_multiplicity_free(const Partition& mu,
                                         const Partition& nu) {
  if (mu.empty() || nu.empty()) return true;
  ShapeClass a = classify_shape(mu), b = classify_shape(nu);
  if (a.is_line_rectangle(1) || b.is_line_rectangle(1)) return true;
  if ((a.is_line_rectangle(2) && b.fat_hook) ||
      (b.is_line_rectangle(2) && a.fat_hook))
    return true;
  if ((a.rectangle && b.near_rectangle) || (b.rectangle && a.near_rectangle))
    return true;
  return a.rectangle && b.rectangle;
}

inline SweepReport verify_stembridge(const SweepOptions& opt) {
  SweepReport report;
  report.command = "stembridge";
  report.bound = opt.bound;
  std::vector<std::pair<Partition, Partition>> pairs;
  for (int n = 0; n <= opt.bound; ++n)
    for (int a = 0; 2 * a <= n; ++a)
      for (const Partition& mu : partitions_of(a))
        for (const Partition& nu : partitions_of(n - a)) {
          if (2 * a == n && nu > mu) continue;
          pairs.emplace_back(mu, nu);
        }
  report.total_units = static_cast<long long>(pairs.size());
  report.start_index = detail::resume_start(opt, report.command);

  std::atomic<long long> items{0};
  detail::Findings findings;
  detail::block_sweep(
      report.total_units, report.start_index, opt, report.command,
      [&](long long idx) {
        const auto& [mu, nu] = pairs[static_cast<std::size_t>(idx)];
        items.fetch_add(1);
        SchurVector prod = schur_product_uncached(mu, nu);
        coeff_t max_coeff = 0;
        for (const auto& [theta, c] : prod.terms())
          max_coeff = std::max(max_coeff, c);
        bool brute = max_coeff <= 1;
        bool classified = stembridge_multiplicity_free(mu, nu);
        if (brute != classified) {
          std::ostringstream os;
          os << "pair (" << mu << " | " << nu << "): classification says "
             << (classified ? "free" : "not free") << ", max coefficient is "
             << max_coeff;
          findings.add(idx, os.str());
        }
      });
  report.items = items.load();
  report.counterexamples = findings.sorted();
  return report;
}

inline nlohmann::json report_to_json(const SweepReport& r) {
  return nlohmann::json{{"command", r.command},
                        {"bound", r.bound},
                        {"items", r.items},
                        {"fixed_points", r.fixed_points},
                        {"start_index", r.start_index},
                        {"total_units", r.total_units},
                        {"ok", r.ok()},
                        {"counterexamples", r.counterexamples}};
}

}  // namespace schurpos
