#include <algorithm>
#include <functional>
#include <omp.h>

#include "connsets/bicyclic.hpp"
#include "connsets/errors.hpp"
#include "connsets/graph_io.hpp"

namespace connsets {

std::vector<FamilySpec> bicyclic_core_specs(int max_order) {
  std::vector<FamilySpec> out;
  for (int p = 3; p <= max_order; ++p)
    for (int q = p; p + q - 1 <= max_order; ++q) {
      out.push_back(family::TypeII{p, q});
      for (int r = 2; p + q + r - 2 <= max_order; ++r) out.push_back(family::Dumbbell{p, q, r});
    }
  for (int a = 2; a <= max_order; ++a)
    for (int b = std::max(a, 3); a + 2 * b - 4 <= max_order; ++b)
      for (int c = b; a + b + c - 4 <= max_order; ++c) out.push_back(family::Theta{a, b, c});
  return out;
}

namespace {

struct Job {
  Graph core;
  std::vector<int> sizes;  // attached tree order per core vertex (1 = nothing)
};

void compositions(int extra, int parts, std::vector<int>& cur, const std::function<void()>& emit) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(extra + 1);
    emit();
    cur.pop_back();
    return;
  }
  for (int e = 0; e <= extra; ++e) {
    cur.push_back(e + 1);
    compositions(extra - e, parts, cur, emit);
    cur.pop_back();
  }
}

// All graphs of one job: every combination of rooted-tree shapes.
std::vector<Certificate> run_job(const Job& job, int n, const std::vector<std::vector<std::vector<int>>>& shapes) {
  const int m = job.core.order();
  std::vector<Certificate> out;
  std::vector<std::size_t> pick(m, 0);
  const std::vector<Edge> core_edges = job.core.edges();
  while (true) {
    std::vector<Edge> edges = core_edges;
    Vertex next = m;
    for (Vertex i = 0; i < m; ++i) {
      const auto& levels = shapes[job.sizes[i]][pick[i]];
      std::vector<Vertex> id(levels.size());
      std::vector<Vertex> last_at(levels.size() + 1, -1);
      for (std::size_t j = 0; j < levels.size(); ++j) {
        id[j] = j == 0 ? i : next++;
        if (j > 0) edges.emplace_back(last_at[levels[j] - 1], id[j]);
        last_at[levels[j]] = id[j];
      }
    }
    out.push_back(canonical_certificate(Graph(n, edges)));

    int i = 0;
    for (; i < m; ++i) {
      if (++pick[i] < shapes[job.sizes[i]].size()) break;
      pick[i] = 0;
    }
    if (i == m) break;
  }
  return out;
}

}  // namespace

std::vector<BicyclicClass> enumerate_bicyclic(int n, const EnumerationOptions& opt) {
  if (n < 4) throw ContractError("enumerate_bicyclic: every bicyclic graph has at least four vertices (n=" +
                                 std::to_string(n) + ")");
  if (n > opt.cap)
    throw ResourceError("enumerate_bicyclic: n=" + std::to_string(n) + " exceeds the generation cap of " +
                        std::to_string(opt.cap));

  std::vector<std::vector<std::vector<int>>> shapes(n + 1);
  for (int k = 1; k <= n; ++k) shapes[k] = rooted_level_sequences(k);

  std::vector<Job> jobs;
  for (const auto& spec : bicyclic_core_specs(n)) {
    Graph core = build(spec);
    std::vector<int> cur;
    compositions(n - core.order(), core.order(), cur, [&] { jobs.push_back({core, cur}); });
  }

  std::vector<std::vector<Certificate>> per_job(jobs.size());
  const int threads = opt.workers > 0 ? opt.workers : omp_get_max_threads();
  const long long job_count = static_cast<long long>(jobs.size());
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1) if (threads > 1)
  for (long long j = 0; j < job_count; ++j) {
    auto certs = run_job(jobs[j], n, shapes);
    std::sort(certs.begin(), certs.end());
    certs.erase(std::unique(certs.begin(), certs.end()), certs.end());
    per_job[j] = std::move(certs);
  }

  std::vector<Certificate> all;
  for (auto& v : per_job) all.insert(all.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  std::vector<BicyclicClass> out;
  out.reserve(all.size());
  for (auto& c : all) {
    Graph g = from_graph6(c.bytes);
    out.push_back({std::move(c), std::move(g)});
  }
  return out;
}

}  // namespace connsets
