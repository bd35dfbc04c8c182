#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "fintop/io.hpp"
#include "fintop/laws.hpp"

namespace fintop {

/// A reproducible law failure on one space.
struct Witness {
  std::string law_id;
  std::string space_id;
  /// The space as a topology document, so the failure can be replayed without the catalog.
  std::string space_encoding;
  std::vector<SubsetMask> sets;
  std::vector<std::size_t> points;
  std::string explanation;
  /// sets and points rendered with the space's labels.
  std::vector<std::string> set_text;
  std::vector<std::string> point_text;
};

/// Runs one law on one space. Exceptions raised by the check count as failures.
inline std::optional<Witness> check_law(const Law& law, const LawContext& context) {
  CheckResult result;
  try {
    result = law.check(context);
  } catch (const std::exception& e) {
    result = Failure{{}, {}, std::string("check raised: ") + e.what()};
  }
  if (!result) return std::nullopt;
  Witness w{law.id, context.id(), write_topology(context.space(), context.id()),
            std::move(result->sets), std::move(result->points),
            std::move(result->explanation), {}, {}};
  for (auto s : w.sets) w.set_text.push_back(render_set(context.space(), s));
  for (auto p : w.points) w.point_text.push_back(context.space().name(p));
  return w;
}

inline std::optional<Witness> check_law(const Law& law, const CatalogEntry& entry) {
  const LawContext context(entry);
  return check_law(law, context);
}

struct LawOutcome {
  std::string law_id;
  LawStatus status = LawStatus::ExpectedHolds;
  std::size_t examined = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// The first failures in canonical space order, capped by SuiteOptions::max_witnesses.
  std::vector<Witness> witnesses;
  /// Disputed law that passed on its documented counterexample space.
  bool stale_dispute = false;
  /// Disputed law whose documented counterexample space was examined and failed.
  bool dispute_confirmed = false;

  bool unexpected() const {
    return status == LawStatus::ExpectedHolds ? failed > 0 : stale_dispute;
  }
};

struct LawReport {
  std::size_t spaces_examined = 0;
  std::vector<LawOutcome> laws;
  double wall_seconds = 0.0;

  bool ok() const {
    return std::none_of(laws.begin(), laws.end(), [](const LawOutcome& o) { return o.unexpected(); });
  }
  /// 0 when every expected law holds and no dispute went stale, 1 otherwise.
  int exit_code() const { return ok() ? 0 : 1; }
};

struct SuiteOptions {
  /// Worker threads; 0 picks the hardware concurrency.
  std::size_t workers = 1;
  std::size_t max_witnesses = 3;
};

/// Runs every (law, space) pair. Spaces are split across a worker pool; results are
/// merged in input order, so the report does not depend on the worker count.
inline LawReport run_suite(const std::vector<CatalogEntry>& spaces, const std::vector<Law>& laws,
                           const SuiteOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();

  struct Cell {
    bool applies = false;
    std::optional<Witness> witness;
  };
  std::vector<std::vector<Cell>> cells(spaces.size(), std::vector<Cell>(laws.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(spaces.size());

  auto work = [&] {
    for (std::size_t i = next++; i < spaces.size(); i = next++) {
      try {
        const LawContext context(spaces[i]);
        for (std::size_t j = 0; j < laws.size(); ++j) {
          if (!laws[j].applies_to(spaces[i])) continue;
          cells[i][j].applies = true;
          cells[i][j].witness = check_law(laws[j], context);
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  std::size_t workers = options.workers == 0 ? std::thread::hardware_concurrency() : options.workers;
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(spaces.size(), 1));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  LawReport report;
  report.spaces_examined = spaces.size();
  for (std::size_t j = 0; j < laws.size(); ++j) {
    LawOutcome out;
    out.law_id = laws[j].id;
    out.status = laws[j].status;
    bool counterexample_seen = false;
    bool counterexample_failed = false;
    for (std::size_t i = 0; i < spaces.size(); ++i) {
      auto& cell = cells[i][j];
      if (!cell.applies) continue;
      ++out.examined;
      const bool is_counterexample = spaces[i].id == laws[j].counterexample_space;
      counterexample_seen = counterexample_seen || is_counterexample;
      if (!cell.witness) {
        ++out.passed;
        continue;
      }
      ++out.failed;
      counterexample_failed = counterexample_failed || is_counterexample;
      if (out.witnesses.size() < options.max_witnesses) out.witnesses.push_back(std::move(*cell.witness));
    }
    if (out.status == LawStatus::Disputed) {
      out.stale_dispute = counterexample_seen && !counterexample_failed;
      out.dispute_confirmed = counterexample_seen && counterexample_failed;
    }
    report.laws.push_back(std::move(out));
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// Looks a law up by id in a registry.
inline const Law* find_law(const std::vector<Law>& laws, std::string_view id) {
  auto it = std::find_if(laws.begin(), laws.end(), [&](const Law& l) { return l.id == id; });
  return it == laws.end() ? nullptr : &*it;
}

}  // namespace fintop
