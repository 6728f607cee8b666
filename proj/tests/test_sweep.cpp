#include <gtest/gtest.h>

#include "cfo/sweep.hpp"

namespace {

using cfo::BenchmarkId;

TEST(SweepConfig, PaperGrids) {
  const auto f1 = cfo::SweepConfig::paper_grid(BenchmarkId::F1);
  EXPECT_EQ(f1.run_count(), 33);
  EXPECT_EQ(f1.base.nt, 1000);
  const auto f19 = cfo::SweepConfig::paper_grid(BenchmarkId::F19);
  EXPECT_EQ(f19.run_count(), 77);
  EXPECT_EQ(f19.ppa_grid(), (std::vector<int>{2, 4, 6, 8, 10, 12, 14}));
  EXPECT_EQ(cfo::SweepConfig::paper_grid(BenchmarkId::F7).base.nt, 100);
  EXPECT_DOUBLE_EQ(f1.gamma_at(5), 0.5);
  EXPECT_DOUBLE_EQ(f1.gamma_at(10), 1.0);
}

TEST(SweepConfig, MalformedGridsRejected) {
  auto c = cfo::SweepConfig::paper_grid(BenchmarkId::F16);
  c.ppa_min = 8;
  c.ppa_max = 4;
  EXPECT_THROW(c.validate(), cfo::ConfigError);
  c = cfo::SweepConfig::paper_grid(BenchmarkId::F16);
  c.gamma_count = 0;
  EXPECT_THROW(c.validate(), cfo::ConfigError);
  c = cfo::SweepConfig::paper_grid(BenchmarkId::F16);
  c.gamma_stop = 1.2;
  EXPECT_THROW(c.validate(), cfo::ConfigError);
  c = cfo::SweepConfig::paper_grid(BenchmarkId::F16);
  c.ppa_min = 3;
  EXPECT_THROW(c.validate(), cfo::ConfigError);
}

TEST(Sweep, SphereTotalsAndBest) {
  const auto s = cfo::run_sweep<double>(cfo::SweepConfig::paper_grid(BenchmarkId::F1));
  ASSERT_EQ(s.records.size(), 33u);
  std::int64_t total = 0;
  for (std::size_t k = 0; k < s.records.size(); ++k) {
    EXPECT_EQ(s.records[k].run_number, int(k) + 1);
    total += s.records[k].neval;
  }
  EXPECT_EQ(s.total_neval, total);
  // 405780 in the published listing; terminal steps of some runs drift.
  EXPECT_EQ(s.total_neval, 357120);
  EXPECT_EQ(s.best_run_number, 6);
  EXPECT_EQ(s.best_record.best_fitness, 0.0);
  EXPECT_EQ(s.best_record.np, 60);
  EXPECT_EQ(s.rerun_record, s.best_record);
}

TEST(Sweep, HartmanThreeBest) {
  const auto s = cfo::run_sweep<double>(cfo::SweepConfig::paper_grid(BenchmarkId::F19));
  ASSERT_EQ(s.records.size(), 77u);
  EXPECT_EQ(s.best_run_number, 69);
  EXPECT_NEAR(s.best_record.best_fitness, 3.86268376, 5e-9);
  EXPECT_DOUBLE_EQ(s.best_record.gamma, 0.2);
  EXPECT_EQ(s.best_record.np, 42);
  EXPECT_EQ(s.best_record.neval, 2100);
  const auto row = cfo::table1_row(s);
  EXPECT_EQ(row.neval_best_run, 2100);
  EXPECT_EQ(row.best_probes_per_axis, 14);
  EXPECT_EQ(row.neval_total, s.total_neval);
}

TEST(Sweep, DegenerateSweep) {
  auto c = cfo::SweepConfig::paper_grid(BenchmarkId::F18);
  c.ppa_min = c.ppa_max = 4;
  c.gamma_count = 1;
  c.gamma_start = c.gamma_stop = 0.3;
  const auto s = cfo::run_sweep<double>(c);
  ASSERT_EQ(s.records.size(), 1u);
  EXPECT_EQ(s.total_neval, s.records[0].neval);
  EXPECT_EQ(s.best_run_number, 1);
  EXPECT_EQ(s.rerun_record, s.records[0]);
}

TEST(Sweep, ThreadCountDoesNotChangeResult) {
  auto c = cfo::SweepConfig::paper_grid(BenchmarkId::F17);
  const auto one = cfo::run_sweep<double>(c);
  c.threads = 4;
  EXPECT_EQ(cfo::run_sweep<double>(c), one);
}

TEST(Sweep, ProgressSeesEveryRun) {
  auto c = cfo::SweepConfig::paper_grid(BenchmarkId::F16);
  c.ppa_max = 4;
  int seen = 0;
  cfo::run_sweep<double>(c, [&](const cfo::RunRecord&) { ++seen; });
  EXPECT_EQ(seen, 22);
}

TEST(Sweep, ErrorsFlagPartialResult) {
  auto c = cfo::SweepConfig::paper_grid(BenchmarkId::F16);
  c.ppa_max = 2;
  c.gamma_count = 3;
  int calls = 0;
  cfo::SweepResult partial;
  const auto explode = [&](const cfo::RunRecord&) {
    if (++calls == 2) throw std::runtime_error("disk full");
  };
  EXPECT_THROW(cfo::run_sweep<double>(c, explode, &partial), std::runtime_error);
  EXPECT_FALSE(partial.valid);
  EXPECT_EQ(partial.records.size(), 2u);
  EXPECT_EQ(partial.total_neval, partial.records[0].neval + partial.records[1].neval);
}

TEST(Sweep, Table1RowNeedsRecords) {
  EXPECT_THROW(cfo::table1_row(cfo::SweepResult{}), cfo::ContractViolation);
}

}  // namespace
