// Copyright 2026 The gf4lcd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gf4lcd/classify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "gf4lcd/bounds.hpp"
#include "gf4lcd/errors.hpp"

namespace gf4lcd {

namespace {

constexpr std::uint64_t kDefaultBudget = 1'000'000'000ULL;
constexpr std::uint64_t kFlushEvery = 1U << 12;

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

void validate(const ClassificationQuery& q) {
  if (q.k != 2 && q.k != 3) throw InvalidInput("classify: k must be 2 or 3");
  if (q.n < q.k) throw InvalidInput("classify: n must be at least k");
  if (q.d < 1) throw InvalidInput("classify: d must be positive");
  if (q.d > alpha4(q.n, q.k)) {
    throw InvalidInput("classify: d = " + std::to_string(q.d) + " exceeds the Griesmer bound " +
                       std::to_string(alpha4(q.n, q.k)) + " for n = " + std::to_string(q.n));
  }
  if (q.jobs < 1) throw InvalidInput("classify: jobs must be positive");
}

// Static data shared by all workers of one full-support search.
struct SearchPlan {
  int points = 0;
  int n = 0;
  int t = 0;  // largest admissible hyperplane sum, n - d
  int lower = 0;
  int upper = 0;
  int deficit_total = 0;  // sum over hyperplanes of (t - sum), fixed by n
  Equivalence equivalence = Equivalence::kMonomial;
  std::vector<int> order;
  std::vector<int> position;  // point -> depth at which it is assigned
  std::vector<std::vector<int>> lines;
  std::vector<std::vector<int>> through;
  // cappers[j]: points p assigned before j with m_j <= m_p for every
  // canonical m, read off the pointwise stabilizer chain.
  std::vector<std::vector<int>> cappers;
};

std::vector<std::vector<int>> stabilizer_cappers(int k, Equivalence eq) {
  const auto& group = pgl_point_action(k, eq);
  const int degree = group.degree();
  std::vector<std::vector<int>> cappers(static_cast<std::size_t>(degree));
  std::vector<std::size_t> members(group.size());
  std::iota(members.begin(), members.end(), std::size_t{0});
  for (int p = 0; p < degree && members.size() > 1; ++p) {
    std::vector<bool> orbit(static_cast<std::size_t>(degree), false);
    for (auto g : members) orbit[group.perm(g)[static_cast<std::size_t>(p)]] = true;
    for (int j = p + 1; j < degree; ++j) {
      if (orbit[static_cast<std::size_t>(j)]) cappers[static_cast<std::size_t>(j)].push_back(p);
    }
    std::erase_if(members, [&](std::size_t g) { return group.perm(g)[static_cast<std::size_t>(p)] != p; });
  }
  return cappers;
}

SearchPlan make_plan(int n, int k, int d, Equivalence eq) {
  SearchPlan plan;
  const auto& basis = point_basis(k);
  plan.points = basis.size();
  plan.n = n;
  plan.t = n - d;
  std::tie(plan.lower, plan.upper) = multiplicity_box(n, k, d);
  plan.equivalence = eq;
  for (int x = 0; x < plan.points; ++x) plan.lines.push_back(basis.hyperplane(x));
  for (int i = 0; i < plan.points; ++i) plan.through.push_back(basis.hyperplanes_through(i));
  const int per_point = static_cast<int>(plan.through[0].size());
  plan.deficit_total = plan.points * plan.t - per_point * n;
  plan.cappers = stabilizer_cappers(k, eq);

  // Points constrained by the stabilizer chain come first, in index order;
  // the rest greedily complete as many hyperplanes as early as possible.
  int prefix = 0;
  for (int j = 0; j < plan.points; ++j) {
    for (int p : plan.cappers[static_cast<std::size_t>(j)]) prefix = std::max(prefix, p + 1);
  }
  std::vector<bool> placed(static_cast<std::size_t>(plan.points), false);
  std::vector<int> left(static_cast<std::size_t>(plan.points));
  for (int x = 0; x < plan.points; ++x) left[static_cast<std::size_t>(x)] = static_cast<int>(plan.lines[x].size());
  auto place = [&](int i) {
    plan.order.push_back(i);
    placed[static_cast<std::size_t>(i)] = true;
    for (int line : plan.through[static_cast<std::size_t>(i)]) --left[static_cast<std::size_t>(line)];
  };
  for (int i = 0; i < prefix; ++i) place(i);
  while (static_cast<int>(plan.order.size()) < plan.points) {
    int best = -1;
    std::pair<int, int> best_score{-1, -1};
    for (int i = 0; i < plan.points; ++i) {
      if (placed[static_cast<std::size_t>(i)]) continue;
      std::pair<int, int> score{0, 0};
      for (int line : plan.through[static_cast<std::size_t>(i)]) {
        const int l = left[static_cast<std::size_t>(line)];
        if (l == 1) ++score.first;
        score.second -= l;
      }
      if (score > best_score) {
        best_score = score;
        best = i;
      }
    }
    place(best);
  }
  plan.position.assign(static_cast<std::size_t>(plan.points), 0);
  for (int i = 0; i < plan.points; ++i) plan.position[static_cast<std::size_t>(plan.order[i])] = i;
  return plan;
}

class Searcher {
 public:
  Searcher(const SearchPlan& plan, int k, std::atomic<std::uint64_t>& nodes, std::uint64_t budget,
           std::uint64_t estimate)
      : plan_(plan),
        k_(k),
        nodes_(nodes),
        budget_(budget),
        estimate_(estimate),
        m_(static_cast<std::size_t>(plan.points), 0),
        ub_(static_cast<std::size_t>(plan.points), plan.upper),
        line_sum_(static_cast<std::size_t>(plan.points), 0),
        line_left_(static_cast<std::size_t>(plan.points), 0) {
    for (int x = 0; x < plan.points; ++x) {
      line_left_[static_cast<std::size_t>(x)] = static_cast<int>(plan.lines[static_cast<std::size_t>(x)].size());
    }
  }

  // Runs the search with the first point restricted to `first_values`.
  void run(const std::vector<int>& first_values) {
    for (int x : first_values) {
      if (assign(0, x)) descend(1);
      unassign(0, x);
    }
    flush();
  }

  std::vector<MultiplicityVector>& found() { return found_; }

 private:
  void flush() {
    const auto total = nodes_.fetch_add(local_nodes_) + local_nodes_;
    local_nodes_ = 0;
    if (total > budget_) {
      throw BudgetExceeded("classification search exceeded the budget of " + std::to_string(budget_) + " nodes",
                           estimate_, total);
    }
  }

  // Largest value `point` may take given the points assigned up to `depth`.
  int cap(int point, int depth) const {
    int c = plan_.upper;
    for (int p : plan_.cappers[static_cast<std::size_t>(point)]) {
      if (plan_.position[static_cast<std::size_t>(p)] <= depth) c = std::min(c, m_[static_cast<std::size_t>(p)]);
    }
    return c;
  }

  // Places value x on the point at `depth`; returns false if the partial
  // vector cannot be completed. Always pair with unassign().
  bool assign(int depth, int x) {
    if (++local_nodes_ >= kFlushEvery) flush();
    const int v = plan_.order[static_cast<std::size_t>(depth)];
    m_[static_cast<std::size_t>(v)] = x;
    assigned_ += x;
    bool ok = true;
    for (int line : plan_.through[static_cast<std::size_t>(v)]) {
      auto& s = line_sum_[static_cast<std::size_t>(line)];
      s += x;
      if (--line_left_[static_cast<std::size_t>(line)] == 0) completed_deficit_ += plan_.t - s;
      if (s > plan_.t) ok = false;
    }
    return ok && feasible(depth);
  }

  void unassign(int depth, int x) {
    const int v = plan_.order[static_cast<std::size_t>(depth)];
    for (int line : plan_.through[static_cast<std::size_t>(v)]) {
      auto& s = line_sum_[static_cast<std::size_t>(line)];
      if (line_left_[static_cast<std::size_t>(line)]++ == 0) completed_deficit_ -= plan_.t - s;
      s -= x;
    }
    assigned_ -= x;
    m_[static_cast<std::size_t>(v)] = 0;
  }

  bool feasible(int depth) {
    if (completed_deficit_ > plan_.deficit_total) return false;
    const int remaining = plan_.n - assigned_;
    if (remaining < 0) return false;
    const int open = plan_.points - depth - 1;
    if (plan_.lower * open > remaining) return false;
    int capacity = 0;
    for (int i = depth + 1; i < plan_.points; ++i) {
      const int v = plan_.order[static_cast<std::size_t>(i)];
      ub_[static_cast<std::size_t>(v)] = std::min(cap(v, depth), remaining);
      capacity += ub_[static_cast<std::size_t>(v)];
    }
    if (capacity < remaining) return false;
    // Each open hyperplane ends with deficit at least t - sum - (room left on it).
    int deficit = completed_deficit_;
    for (int line = 0; line < plan_.points; ++line) {
      if (line_left_[static_cast<std::size_t>(line)] == 0) continue;
      int room = 0;
      for (int p : plan_.lines[static_cast<std::size_t>(line)]) {
        if (plan_.position[static_cast<std::size_t>(p)] > depth) room += ub_[static_cast<std::size_t>(p)];
      }
      deficit += std::max(0, plan_.t - line_sum_[static_cast<std::size_t>(line)] - room);
      if (deficit > plan_.deficit_total) return false;
    }
    return true;
  }

  void descend(int depth) {
    if (depth == plan_.points) {
      leaf();
      return;
    }
    const int v = plan_.order[static_cast<std::size_t>(depth)];
    const int remaining = plan_.n - assigned_;
    const int hi = std::min(cap(v, depth - 1), remaining);
    const int lo = depth + 1 == plan_.points ? remaining : plan_.lower;
    for (int x = hi; x >= lo; --x) {
      if (assign(depth, x)) descend(depth + 1);
      unassign(depth, x);
    }
  }

  void leaf() {
    // Minimum weight exactly d: some hyperplane carries exactly t.
    if (*std::max_element(line_sum_.begin(), line_sum_.end()) != plan_.t) return;
    MultiplicityVector mv{k_, m_};
    if (is_canonical(mv, plan_.equivalence)) found_.push_back(std::move(mv));
  }

  const SearchPlan& plan_;
  int k_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t budget_;
  std::uint64_t estimate_;
  std::uint64_t local_nodes_ = 0;
  std::vector<int> m_;
  std::vector<int> ub_;
  std::vector<int> line_sum_;
  std::vector<int> line_left_;
  int assigned_ = 0;
  int completed_deficit_ = 0;
  std::vector<MultiplicityVector> found_;
};

CodeClass make_class(MultiplicityVector m, int zero_columns, std::int64_t n) {
  CodeClass c;
  c.enumerator = weight_enumerator_from_multiplicities(m);
  c.enumerator.coefficients.resize(static_cast<std::size_t>(n) + 1, 0);
  c.lcd = is_hermitian_lcd(expand(m));
  c.representative = std::move(m);
  c.zero_columns = zero_columns;
  return c;
}

void sort_classes(std::vector<CodeClass>& classes) {
  std::sort(classes.begin(), classes.end(), [](const CodeClass& a, const CodeClass& b) {
    if (a.zero_columns != b.zero_columns) return a.zero_columns < b.zero_columns;
    return a.representative.m > b.representative.m;
  });
}

ClassificationResult classify_orbit(const ClassificationQuery& query) {
  const auto start = std::chrono::steady_clock::now();
  ClassificationResult result;
  result.query = query;
  for (std::int64_t z = 0; query.n - z >= query.k; ++z) {
    if (z > 0 && query.require_full_support) break;
    const std::int64_t length = query.n - z;
    if (query.d > alpha4(length, query.k)) break;
    ClassificationQuery part = query;
    part.n = length;
    std::uint64_t nodes = 0;
    if (query.budget) part.budget = *query.budget - std::min(*query.budget, result.nodes);
    else part.budget = default_budget() - std::min(default_budget(), result.nodes);
    for (auto& m : enumerate_candidates_orbit(part, &nodes)) {
      result.classes.push_back(make_class(std::move(m), static_cast<int>(z), query.n));
    }
    result.nodes += nodes;
  }
  sort_classes(result.classes);
  result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

ClassificationResult classify_shorten(const ClassificationQuery& query) {
  if (query.k != 3) throw InvalidInput("classify: the shortening method needs k = 3");
  if (query.d < 2) throw InvalidInput("classify: the shortening method needs d >= 2");
  const auto start = std::chrono::steady_clock::now();
  std::set<std::pair<int, std::vector<int>>> seen;
  std::vector<CodeClass> classes;
  std::uint64_t emitted = 0;
  inverse_shortening_generate(
      query.n, query.d,
      [&](const ShorteningCandidate& candidate) {
        ++emitted;
        LinearCode code(candidate.generator);
        int zero_columns = 0;
        while (true) {
          bool any = false;
          for (std::size_t j = 0; j < code.length(); ++j) {
            if (code.generator().is_zero_column(j)) {
              any = true;
              break;
            }
          }
          if (!any) break;
          code = delete_zero_column(code);
          ++zero_columns;
        }
        if (query.require_full_support && zero_columns > 0) return;
        auto canonical = canonical_form(multiplicities(code), query.equivalence);
        if (seen.emplace(zero_columns, canonical.m).second) {
          classes.push_back(make_class(std::move(canonical), zero_columns, query.n));
        }
      },
      query.budget);
  ClassificationResult result;
  result.query = query;
  result.classes = std::move(classes);
  result.nodes = emitted;
  sort_classes(result.classes);
  result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

std::string to_string(ClassificationMethod method) {
  return method == ClassificationMethod::kOrbit ? "orbit" : "shorten";
}

ClassificationMethod parse_method(const std::string& text) {
  if (text == "orbit") return ClassificationMethod::kOrbit;
  if (text == "shorten") return ClassificationMethod::kShorten;
  throw InvalidInput("unknown classification method '" + text + "'");
}

LinearCode CodeClass::code() const { return pad_zero_columns(expand(representative), static_cast<std::size_t>(zero_columns)); }

std::pair<int, int> multiplicity_box(std::int64_t n, int k, std::int64_t d) {
  const std::int64_t t = n - d;
  std::int64_t lower = 0;
  std::int64_t upper = t;
  if (k == 3) {
    // 4d - 3n <= m_i <= n - 5d/4.
    lower = std::max<std::int64_t>(0, 4 * d - 3 * n);
    const std::int64_t u = 4 * n - 5 * d;
    upper = std::min(upper, u >= 0 ? u / 4 : -((-u + 3) / 4));
  }
  return {static_cast<int>(lower), static_cast<int>(upper)};
}

std::uint64_t estimate_raw_candidates(std::int64_t n, int k, std::int64_t d) {
  const auto [lower, upper] = multiplicity_box(n, k, d);
  if (upper < lower) return 0;
  // Count vectors in [lower, upper]^P with sum n by dynamic programming.
  const int points = point_count(k);
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int i = 0; i < points; ++i) {
    std::vector<std::uint64_t> next(ways.size(), 0);
    for (std::size_t s = 0; s < ways.size(); ++s) {
      if (ways[s] == 0) continue;
      for (int x = lower; x <= upper && s + static_cast<std::size_t>(x) < ways.size(); ++x) {
        auto& slot = next[s + static_cast<std::size_t>(x)];
        slot = saturating_add(slot, ways[s]);
      }
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(n)];
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("GF4LCD_BUDGET")) {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return kDefaultBudget;
}

std::vector<MultiplicityVector> enumerate_candidates_orbit(const ClassificationQuery& query, std::uint64_t* nodes) {
  validate(query);
  const SearchPlan plan =
      make_plan(static_cast<int>(query.n), query.k, static_cast<int>(query.d), query.equivalence);
  const std::uint64_t budget = query.budget.value_or(default_budget());
  const std::uint64_t estimate = estimate_raw_candidates(query.n, query.k, query.d);
  std::atomic<std::uint64_t> counter{0};

  std::vector<int> first_values;
  for (int x = std::min(plan.upper, plan.n); x >= plan.lower; --x) first_values.push_back(x);
  const int jobs = std::max(1, std::min<int>(query.jobs, static_cast<int>(first_values.size())));
  std::vector<std::vector<int>> shares(static_cast<std::size_t>(jobs));
  for (std::size_t i = 0; i < first_values.size(); ++i) shares[i % static_cast<std::size_t>(jobs)].push_back(first_values[i]);

  std::vector<MultiplicityVector> found;
  if (plan.upper >= plan.lower) {
    std::mutex guard;
    std::exception_ptr failure;
    auto work = [&](const std::vector<int>& share) {
      try {
        Searcher searcher(plan, query.k, counter, budget, estimate);
        searcher.run(share);
        std::lock_guard lock(guard);
        for (auto& m : searcher.found()) found.push_back(std::move(m));
      } catch (...) {
        std::lock_guard lock(guard);
        if (!failure) failure = std::current_exception();
      }
    };
    if (jobs == 1) {
      work(shares[0]);
    } else {
      std::vector<std::thread> threads;
      for (const auto& share : shares) threads.emplace_back(work, std::cref(share));
      for (auto& th : threads) th.join();
    }
    if (failure) std::rethrow_exception(failure);
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.m > b.m; });
  if (nodes != nullptr) *nodes = counter.load();
  return found;
}

ClassificationResult classify_dim2(const ClassificationQuery& query) {
  if (query.k != 2) throw InvalidInput("classify_dim2: k must be 2");
  validate(query);
  return classify_orbit(query);
}

ClassificationResult classify(const ClassificationQuery& query) {
  validate(query);
  if (query.method == ClassificationMethod::kShorten) return classify_shorten(query);
  if (query.k == 2) return classify_dim2(query);
  return classify_orbit(query);
}

std::size_t count_lcd(const ClassificationResult& result) {
  return static_cast<std::size_t>(
      std::count_if(result.classes.begin(), result.classes.end(), [](const CodeClass& c) { return c.lcd; }));
}

namespace {

// Block b of the normal form: top/bottom entries of its columns.
constexpr std::array<F4, 6> kBlockTop = {kZero, kZero, kOne, kOne, kOne, kOne};
constexpr std::array<F4, 6> kBlockBottom = {kZero, kOne, kZero, kOne, kOmega, kOmega2};

// Picks an image of a dimension-2 class with the heaviest point at (0,1)
// and a used point at (1,0), so both identity columns exist and the first
// row is a minimum-weight codeword.
std::optional<std::array<int, 6>> normal_form_blocks(const CodeClass& c) {
  const auto& group = pgl_point_action(2, Equivalence::kMonomial);
  const auto& m = c.representative.m;
  const int top = *std::max_element(m.begin(), m.end());
  for (std::size_t g = 0; g < group.size(); ++g) {
    const auto src = group.perm(g);
    std::array<int, 5> image{};
    for (std::size_t j = 0; j < 5; ++j) image[j] = m[src[j]];
    if (image[1] != top || image[0] < 1) continue;
    return std::array<int, 6>{c.zero_columns, image[1] - 1, image[0] - 1, image[2], image[3], image[4]};
  }
  return std::nullopt;
}

// Enumerates the third rows of (I_3 | M) over one normal-form code.
//
// Write w(P) for the weight of the codeword with message (u1, u2, 1),
// P = (u1, u2). Block b >= 1 has a nonzero column (p, q); its third-row
// counts c_b[v] contribute f_b(v) = a_b - c_b[v] to every P on the affine
// line {u1 p + u2 q = v + x}, so w(P) = base(P) + c_0[1] + sum_b f_b(v_b(P)).
// Summing w over a line L of direction b gives 4 f_b(L) plus the fixed
// totals sum_v f_b'(v) = 3 a_b' of the other directions. With
// w(P) = d + e(P), e >= 0 and sum e = sigma fixed, every f_b is therefore
// read off the excess distribution e, which is what the search enumerates.
class ShorteningSearch {
 public:
  ShorteningSearch(std::int64_t n, std::int64_t d, std::int64_t shorter_min, const std::array<int, 6>& blocks,
                   const std::function<void(const ShorteningCandidate&)>& visit, std::uint64_t& nodes,
                   std::uint64_t budget)
      : n_(n), d_(d), shorter_min_(shorter_min), blocks_(blocks), visit_(visit), nodes_(nodes), budget_(budget) {
    for (int u1 = 0; u1 < 4; ++u1) {
      for (int u2 = 0; u2 < 4; ++u2) {
        const int msg = u1 * 4 + u2;
        base_[static_cast<std::size_t>(msg)] = (u1 != 0) + (u2 != 0) + 1;
        for (std::size_t b = 0; b < 6; ++b) {
          const F4 v = F4::from_bits(static_cast<std::uint8_t>(u1)) * kBlockTop[b] +
                       F4::from_bits(static_cast<std::uint8_t>(u2)) * kBlockBottom[b];
          value_[b][static_cast<std::size_t>(msg)] = v.bits();
        }
      }
    }
    for (std::size_t b = 1; b < 6; ++b) {
      for (std::size_t msg = 0; msg < 16; ++msg) {
        auto& line = lines_[b][value_[b][msg]];
        line.members[line.size++] = static_cast<int>(msg);
      }
      for (auto& line : lines_[b]) {
        for (int msg : line.members) line.base += base_[static_cast<std::size_t>(msg)];
        completing_[static_cast<std::size_t>(line.members[3])].push_back(&line);
        line.block = static_cast<int>(b);
      }
    }
    for (std::size_t b = 1; b < 6; ++b) others_total_ += 3 * blocks_[b];
  }

  void run() {
    std::int64_t columns = 0;
    for (std::size_t b = 1; b < 6; ++b) columns += blocks_[b];
    for (int ones = 0; ones <= blocks_[0]; ++ones) {
      ones_ = ones;
      const std::int64_t total = 40 + 12 * columns + 16 * ones;
      const std::int64_t sigma = total - 16 * d_;
      if (sigma < 0) continue;
      assign(0, sigma);
    }
  }

 private:
  struct Line {
    std::array<int, 4> members{};
    int size = 0;
    int base = 0;
    int block = 0;
    int value = 0;  // f_b on this line once determined
  };

  void count_node() {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("inverse shortening exceeded the budget of " + std::to_string(budget_) + " nodes",
                           nodes_, nodes_);
    }
  }

  // Fixes f_b on every line whose last member is `msg`; false if one is
  // not an integer in [0, a_b].
  bool settle(int msg) {
    for (Line* line : completing_[static_cast<std::size_t>(msg)]) {
      std::int64_t sum = 0;
      for (int p : line->members) sum += d_ + excess_[static_cast<std::size_t>(p)];
      const auto a = blocks_[static_cast<std::size_t>(line->block)];
      const std::int64_t numerator = sum - line->base - 4 * ones_ - (others_total_ - 3 * a);
      if (numerator < 0 || numerator % 4 != 0 || numerator / 4 > a) return false;
      line->value = static_cast<int>(numerator / 4);
    }
    return true;
  }

  void assign(int msg, std::int64_t left) {
    const auto index = static_cast<std::size_t>(msg);
    const std::int64_t first = msg == 15 ? left : 0;
    for (std::int64_t e = first; e <= left; ++e) {
      count_node();
      excess_[index] = e;
      if (!settle(msg)) continue;
      if (msg == 15) emit();
      else assign(msg + 1, left - e);
    }
  }

  void emit() {
    const bool hits_d = std::find(excess_.begin(), excess_.end(), 0) != excess_.end();
    if (!hits_d && shorter_min_ != d_) return;
    std::array<std::array<int, 4>, 6> counts{};
    counts[0] = {blocks_[0] - ones_, ones_, 0, 0};
    for (std::size_t b = 1; b < 6; ++b) {
      int used = 0;
      for (std::size_t v = 0; v < 4; ++v) {
        counts[b][v] = blocks_[b] - lines_[b][v].value;
        used += counts[b][v];
      }
      if (used != blocks_[b]) return;
    }
    // Recompute the weights from the counts as a consistency check.
    for (std::size_t msg = 0; msg < 16; ++msg) {
      std::int64_t w = base_[msg] + ones_;
      for (std::size_t b = 1; b < 6; ++b) w += blocks_[b] - counts[b][value_[b][msg]];
      if (w != d_ + excess_[msg]) return;
    }
    ShorteningCandidate out;
    out.blocks = blocks_;
    out.generator = F4Matrix(3, static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < 3; ++i) out.generator(i, i) = kOne;
    std::size_t col = 3;
    for (std::size_t b = 0; b < 6; ++b) {
      for (std::uint8_t v = 0; v < 4; ++v) {
        for (int r = 0; r < counts[b][v]; ++r, ++col) {
          out.generator(0, col) = kBlockTop[b];
          out.generator(1, col) = kBlockBottom[b];
          out.generator(2, col) = F4::from_bits(v);
        }
      }
    }
    visit_(out);
  }

  std::int64_t n_;
  std::int64_t d_;
  std::int64_t shorter_min_;
  std::array<int, 6> blocks_;
  const std::function<void(const ShorteningCandidate&)>& visit_;
  std::uint64_t& nodes_;
  std::uint64_t budget_;
  std::array<int, 16> base_{};
  std::array<std::array<std::uint8_t, 16>, 6> value_{};
  std::array<std::array<Line, 4>, 6> lines_{};
  std::array<std::vector<Line*>, 16> completing_{};
  std::array<std::int64_t, 16> excess_{};
  std::int64_t others_total_ = 0;
  int ones_ = 0;
};

}  // namespace

void inverse_shortening_generate(std::int64_t n, std::int64_t d,
                                 const std::function<void(const ShorteningCandidate&)>& visit,
                                 std::optional<std::uint64_t> budget) {
  if (d < 2) throw InvalidInput("inverse_shortening_generate: requires d >= 2");
  if (n < 4) throw InvalidInput("inverse_shortening_generate: requires n >= 4");
  const std::uint64_t limit = budget.value_or(default_budget());
  std::uint64_t nodes = 0;
  for (std::int64_t shorter = d; shorter <= alpha4(n - 1, 2); ++shorter) {
    ClassificationQuery q;
    q.n = n - 1;
    q.k = 2;
    q.d = shorter;
    for (const auto& c : classify_dim2(q).classes) {
      const auto blocks = normal_form_blocks(c);
      if (!blocks) throw InvalidInput("inverse_shortening_generate: no normal form for a dimension-2 class");
      ShorteningSearch(n, d, shorter, *blocks, visit, nodes, limit).run();
    }
  }
}

}  // namespace gf4lcd
