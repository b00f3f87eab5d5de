#include "cloops/invariants.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "cloops/core.hpp"
#include "cloops/error.hpp"

namespace cloops {

NucleusReport nuclei(const LoopTable& l, Exec exec) {
  const int n = l.size();
  auto left_ok = [&](int a) {
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (l.mul(a, l.mul(y, z)) != l.mul(l.mul(a, y), z)) return false;
    return true;
  };
  auto mid_ok = [&](int a) {
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (l.mul(y, l.mul(a, z)) != l.mul(l.mul(y, a), z)) return false;
    return true;
  };
  auto right_ok = [&](int a) {
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (l.mul(y, l.mul(z, a)) != l.mul(l.mul(y, z), a)) return false;
    return true;
  };
  NucleusReport r;
  r.left = kernels::filter_indices(n, left_ok, exec);
  r.middle = kernels::filter_indices(n, mid_ok, exec);
  r.right = kernels::filter_indices(n, right_ok, exec);
  std::vector<int> lm;
  std::set_intersection(r.left.begin(), r.left.end(), r.middle.begin(), r.middle.end(),
                        std::back_inserter(lm));
  std::set_intersection(lm.begin(), lm.end(), r.right.begin(), r.right.end(),
                        std::back_inserter(r.nucleus));
  return r;
}

std::vector<int> center(const LoopTable& l, Exec exec) {
  const int n = l.size();
  std::vector<int> out;
  for (int a : nuclei(l, exec).nucleus) {
    bool comm = true;
    for (int x = 0; x < n && comm; ++x) comm = l.mul(a, x) == l.mul(x, a);
    if (comm) out.push_back(a);
  }
  return out;
}

int associator(const LoopTable& l, int x, int y, int z) {
  const int p = l.inv(l.mul(l.mul(x, y), z));
  return l.mul(p, l.mul(x, l.mul(y, z)));
}

std::set<int> associator_order_spectrum(const LoopTable& l, Exec exec) {
  const int n = l.size();
  std::vector<int> invs(n);
  for (int x = 0; x < n; ++x) invs[x] = l.inv(x);  // throws on non-IP input
  std::vector<char> hit(n + 1, 0);
#ifdef _OPENMP
  const bool par = exec == Exec::Parallel || (exec == Exec::Auto && n >= kernels::kParallelThreshold);
  if (par) {
#pragma omp parallel
    {
      std::vector<char> local(n + 1, 0);
#pragma omp for schedule(dynamic) nowait
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            const int a = l.mul(invs[l.mul(l.mul(x, y), z)], l.mul(x, l.mul(y, z)));
            local[l.element_order(a)] = 1;
          }
#pragma omp critical(cloops_spectrum)
      for (int i = 0; i <= n; ++i) hit[i] |= local[i];
    }
  } else
#else
  (void)exec;
#endif
  {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          const int a = l.mul(invs[l.mul(l.mul(x, y), z)], l.mul(x, l.mul(y, z)));
          hit[l.element_order(a)] = 1;
        }
  }
  std::set<int> out;
  for (int i = 1; i <= n; ++i)
    if (hit[i]) out.insert(i);
  return out;
}

std::vector<std::vector<int>> normal_subloops(const LoopTable& l, int max_size) {
  const int n = l.size();
  if (n > max_size)
    fail(Err::TooLarge, "normal subloop enumeration bound " + std::to_string(max_size) +
                            " exceeded by order " + std::to_string(n));
  std::map<std::vector<int>, bool> subs;
  subs[{0}] = true;
  for (int x = 0; x < n; ++x) subs[normal_closure(l, {x})] = true;
  // Close under join; every normal subloop is a join of singleton closures.
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::vector<int>> cur;
    cur.reserve(subs.size());
    for (const auto& kv : subs) cur.push_back(kv.first);
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        std::vector<int> u = cur[i];
        u.insert(u.end(), cur[j].begin(), cur[j].end());
        std::vector<int> join = normal_closure(l, u);
        if (subs.emplace(std::move(join), true).second) grew = true;
      }
  }
  std::vector<std::vector<int>> out;
  out.reserve(subs.size());
  for (const auto& kv : subs) out.push_back(kv.first);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool is_simple(const LoopTable& l, int max_size) {
  return normal_subloops(l, max_size).size() == 2;
}

}  // namespace cloops
