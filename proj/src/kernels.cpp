#include "centrax/kernels.hpp"

#include <algorithm>
#include <exception>
#include <set>

#include <omp.h>

#include "centrax/congruence.hpp"
#include "centrax/error.hpp"

namespace centrax::kernels {

  bool complementary(Congruence const& theta, Congruence const& delta) {
    std::size_t const n = theta.base_size();
    if (delta.base_size() != n) {
      throw ValidationError("congruences on different base sets");
    }
    if (theta.block_count() * delta.block_count() != n) {
      return false;
    }
    // rep pairs are distinct iff the block map is injective.
    std::vector<char> seen(n * n, 0);
    for (Element x = 0; x < n; ++x) {
      char& slot = seen[theta.rep(x) * n + delta.rep(x)];
      if (slot) {
        return false;
      }
      slot = 1;
    }
    return true;
  }

  int thread_count() {
    return omp_get_max_threads();
  }

  namespace {
    // Runs body(i) for i in [0, count) on the OpenMP team, rethrowing the
    // first exception raised by any iteration.
    template <typename Body>
    void parallel_for(std::size_t count, Body&& body) {
      std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
      for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
        try {
          body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(centrax_kernel_error)
          if (!error) {
            error = std::current_exception();
          }
        }
      }
      if (error) {
        std::rethrow_exception(error);
      }
    }

    std::vector<Congruence> seed(std::size_t n, std::span<Congruence const> generators) {
      std::vector<Congruence> start{Congruence::identity(n)};
      start.insert(start.end(), generators.begin(), generators.end());
      return start;
    }
  }  // namespace

  namespace serial {
    std::vector<Congruence> join_closure(std::size_t n, std::span<Congruence const> generators) {
      std::set<Congruence>    found;
      std::vector<Congruence> frontier;
      for (auto const& c : seed(n, generators)) {
        if (found.insert(c).second) {
          frontier.push_back(c);
        }
      }
      while (!frontier.empty()) {
        std::vector<Congruence> next;
        for (auto const& c : frontier) {
          for (auto const& g : generators) {
            Congruence j = join(c, g);
            if (found.insert(j).second) {
              next.push_back(std::move(j));
            }
          }
        }
        frontier = std::move(next);
      }
      return {found.begin(), found.end()};
    }

    std::vector<IndexPair> factor_pair_indices(std::span<Congruence const> con) {
      std::vector<IndexPair> result;
      for (std::size_t i = 0; i < con.size(); ++i) {
        for (std::size_t j = 0; j < con.size(); ++j) {
          if (complementary(con[i], con[j])) {
            result.emplace_back(i, j);
          }
        }
      }
      return result;
    }

    std::optional<std::size_t> first_failure(std::size_t count, IndexPredicate const& holds) {
      for (std::size_t i = 0; i < count; ++i) {
        if (!holds(i)) {
          return i;
        }
      }
      return std::nullopt;
    }
  }  // namespace serial

  namespace parallel {
    std::vector<Congruence> join_closure(std::size_t n, std::span<Congruence const> generators) {
      std::set<Congruence>    found;
      std::vector<Congruence> frontier;
      for (auto const& c : seed(n, generators)) {
        if (found.insert(c).second) {
          frontier.push_back(c);
        }
      }
      std::size_t const g = generators.size();
      while (!frontier.empty()) {
        // Joins are computed in parallel into fixed slots, then merged in
        // slot order so the result matches the serial kernel.
        std::vector<Congruence> joins(frontier.size() * g);
        parallel_for(frontier.size(), [&](std::size_t i) {
          for (std::size_t k = 0; k < g; ++k) {
            joins[i * g + k] = join(frontier[i], generators[k]);
          }
        });
        std::vector<Congruence> next;
        for (auto& j : joins) {
          if (found.insert(j).second) {
            next.push_back(std::move(j));
          }
        }
        frontier = std::move(next);
      }
      return {found.begin(), found.end()};
    }

    std::vector<IndexPair> factor_pair_indices(std::span<Congruence const> con) {
      std::vector<std::vector<IndexPair>> rows(con.size());
      parallel_for(con.size(), [&](std::size_t i) {
        for (std::size_t j = 0; j < con.size(); ++j) {
          if (complementary(con[i], con[j])) {
            rows[i].emplace_back(i, j);
          }
        }
      });
      std::vector<IndexPair> result;
      for (auto const& row : rows) {
        result.insert(result.end(), row.begin(), row.end());
      }
      return result;
    }

    std::optional<std::size_t> first_failure(std::size_t count, IndexPredicate const& holds) {
      // Blocks are scanned in order, so the first failing block gives the
      // least failing index and later blocks are never evaluated.
      constexpr std::size_t block = 1024;
      std::vector<char>     failed(block);
      for (std::size_t start = 0; start < count; start += block) {
        std::size_t const len = std::min(block, count - start);
        parallel_for(len, [&](std::size_t i) { failed[i] = !holds(start + i); });
        for (std::size_t i = 0; i < len; ++i) {
          if (failed[i]) {
            return start + i;
          }
        }
      }
      return std::nullopt;
    }
  }  // namespace parallel

}  // namespace centrax::kernels
