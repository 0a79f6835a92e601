#include "twindom/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "json.hpp"
#include "twindom/domination.hpp"

namespace twindom {

namespace {

// body(begin, end) over [0, count) split into at most `jobs` chunks.
template <typename F>
void run_partitioned(std::size_t count, int jobs, F&& body) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count < 2) {
    body(std::size_t{0}, count, 0);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end, w] { body(begin, end, static_cast<int>(w)); });
  }
  for (auto& th : pool) th.join();
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

Tournament extend_with_vertex(const Tournament& t, std::uint32_t beats_pattern) {
  const int n = t.order();
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(static_cast<std::size_t>(n + 1) * n / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) arcs.emplace_back(t.beats(i, j) ? std::pair{i, j} : std::pair{j, i});
  for (int i = 0; i < n; ++i) arcs.emplace_back((beats_pattern >> i) & 1u ? std::pair{n, i} : std::pair{i, n});
  return Tournament::from_arcs(n + 1, arcs);
}

std::vector<CanonicalKey> canonical_classes(int n, int jobs) {
  if (n < 1 || n > kCanonicalEnumerationLimit)
    fail(errc::order_too_large, "canonical enumeration supports orders 1.." + std::to_string(kCanonicalEnumerationLimit));

  std::vector<std::uint64_t> keys = {0};  // the one-vertex tournament
  for (int k = 1; k < n; ++k) {
    std::vector<std::vector<std::uint64_t>> local(static_cast<std::size_t>(std::max(1, jobs)));
    run_partitioned(keys.size(), jobs, [&](std::size_t begin, std::size_t end, int worker) {
      auto& out = local[static_cast<std::size_t>(worker)];
      for (std::size_t r = begin; r < end; ++r) {
        const Tournament rep = CanonicalKey{k, keys[r]}.representative();
        for (std::uint32_t pattern = 0; pattern < (1u << k); ++pattern)
          out.push_back(canonical_key(extend_with_vertex(rep, pattern)).bits);
      }
    });
    std::vector<std::uint64_t> merged;
    for (auto& part : local) merged.insert(merged.end(), part.begin(), part.end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    keys = std::move(merged);
  }

  std::vector<CanonicalKey> out;
  out.reserve(keys.size());
  for (std::uint64_t b : keys) out.push_back({n, b});
  return out;
}

std::vector<Tournament> generate_tournaments(int n, GenMode mode, int jobs) {
  if (mode == GenMode::canonical) {
    std::vector<Tournament> out;
    for (const CanonicalKey& key : canonical_classes(n, jobs)) out.push_back(key.representative());
    return out;
  }
  if (n < 1 || n > kLabeledEnumerationLimit)
    fail(errc::order_too_large, "labeled enumeration supports orders 1.." + std::to_string(kLabeledEnumerationLimit));
  const int m = n * (n - 1) / 2;
  std::vector<Tournament> out;
  out.reserve(std::size_t{1} << m);
  std::vector<std::pair<int, int>> arcs(static_cast<std::size_t>(m));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::size_t p = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++p) arcs[p] = (mask >> p) & 1u ? std::pair{i, j} : std::pair{j, i};
    out.push_back(Tournament::from_arcs(n, arcs));
  }
  return out;
}

namespace {

u128 factorial(int n) {
  u128 f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<unsigned>(i);
  return f;
}

// Accumulates one partition of n into odd parts: the permutations of that
// cycle type each fix 2^q orientation assignments.
void burnside_walk(int remaining, int max_part, std::vector<int>& parts, u128 n_factorial, u128& total) {
  if (remaining == 0) {
    u128 cycle_product = 1;
    int q = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      cycle_product *= static_cast<unsigned>(parts[i]);
      q += (parts[i] - 1) / 2;
      for (std::size_t j = i + 1; j < parts.size(); ++j) q += std::gcd(parts[i], parts[j]);
    }
    u128 multiplicity_factorials = 1;
    int run = 1;
    for (std::size_t i = 1; i <= parts.size(); ++i) {
      if (i < parts.size() && parts[i] == parts[i - 1]) {
        ++run;
        multiplicity_factorials *= static_cast<unsigned>(run);
      } else {
        run = 1;
      }
    }
    const u128 perm_count = n_factorial / (cycle_product * multiplicity_factorials);
    total += perm_count * (u128{1} << q);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    if (part % 2 == 0) continue;
    parts.push_back(part);
    burnside_walk(remaining - part, part, parts, n_factorial, total);
    parts.pop_back();
  }
}

}  // namespace

u128 count_burnside(int n) {
  if (n < 1 || n > kBurnsideLimit)
    fail(errc::order_out_of_range, "orbit counting supports orders 1.." + std::to_string(kBurnsideLimit));
  u128 total = 0;
  std::vector<int> parts;
  burnside_walk(n, n, parts, factorial(n), total);
  return total / factorial(n);
}

std::string u128_to_string(u128 value) {
  if (value == 0) return "0";
  std::string s;
  while (value != 0) {
    s += static_cast<char>('0' + static_cast<unsigned>(value % 10));
    value /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::string DomStarReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["class_count"] = class_count;
  j["dom_star"] = dom_star;
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (const auto& [gamma, count] : gamma_histogram) hist[std::to_string(gamma)] = count;
  j["gamma_histogram"] = std::move(hist);
  j["extremal"] = extremal;
  j["generator_version"] = generator_version;
  return j.dump(2) + "\n";
}

DomStarReport dom_star(int n, int jobs, int extremal_cap) {
  if (n < 1 || n > kCanonicalEnumerationLimit)
    fail(errc::order_too_large, "dom_star supports orders 1.." + std::to_string(kCanonicalEnumerationLimit));

  const std::vector<CanonicalKey> keys = canonical_classes(n, jobs);
  std::vector<int> gamma(keys.size(), 0);
  run_partitioned(keys.size(), jobs, [&](std::size_t begin, std::size_t end, int) {
    for (std::size_t i = begin; i < end; ++i) gamma[i] = gamma_star(keys[i].representative()).size;
  });

  DomStarReport report;
  report.n = n;
  report.class_count = keys.size();
  for (int g : gamma) ++report.gamma_histogram[g];
  report.dom_star = report.gamma_histogram.rbegin()->first;
  for (std::size_t i = 0; i < keys.size() && report.extremal.size() < static_cast<std::size_t>(extremal_cap); ++i)
    if (gamma[i] == report.dom_star) report.extremal.push_back(keys[i].representative().encode());

  std::uint64_t histogram_total = 0;
  for (const auto& [g, c] : report.gamma_histogram) histogram_total += c;
  if (histogram_total != report.class_count)
    fail(errc::internal_verification_failure, "histogram total disagrees with the class count");
  return report;
}

std::optional<Tournament> search_gamma_at_least(int n, int target, std::uint64_t budget, std::uint64_t seed) {
  if (n < 2 || target < 2) fail(errc::invalid_argument, "need n >= 2 and target >= 2");

  std::uint64_t state = seed;
  const std::uint64_t restart_interval = 64u * static_cast<std::uint64_t>(n);

  std::optional<Tournament> current;
  int current_gamma = 0;
  std::uint64_t since_restart = 0;
  for (std::uint64_t spent = 0; spent < budget;) {
    if (!current || since_restart >= restart_interval) {
      current = Tournament::random(n, splitmix64(state));
      current_gamma = gamma_star(*current).size;
      ++spent;
      since_restart = 0;
    } else {
      const int u = static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(n));
      const int v = (u + 1 + static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(n - 1))) % n;
      std::vector<std::pair<int, int>> arcs;
      arcs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          bool forward = current->beats(i, j);
          if ((i == std::min(u, v)) && (j == std::max(u, v))) forward = !forward;
          arcs.emplace_back(forward ? std::pair{i, j} : std::pair{j, i});
        }
      Tournament candidate = Tournament::from_arcs(n, arcs);
      const int candidate_gamma = gamma_star(candidate).size;
      ++spent;
      ++since_restart;
      if (candidate_gamma >= current_gamma) {
        current = std::move(candidate);
        current_gamma = candidate_gamma;
      }
    }
    if (current_gamma >= target) {
      // Paranoia re-run of the exact solver on the instance handed out.
      if (gamma_star(*current).size < target)
        fail(errc::internal_verification_failure, "re-verification disagrees with the search value");
      return current;
    }
  }
  return std::nullopt;
}

}  // namespace twindom
