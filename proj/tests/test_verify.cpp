#include "doctest.h"
#include "gradid/parser.hpp"
#include "gradid/verify.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace gradid;

namespace {

VerificationConfig config(Preset p, unsigned q, unsigned m, unsigned n, unsigned d) {
  VerificationConfig c;
  c.preset = p;
  c.field = Field::of_order(q);
  c.yvars = m;
  c.zvars = n;
  c.max_deg = d;
  return c;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("smallest ut2 window pinches") {
  const auto r = verify_basis(config(Preset::Ut2Canonical, 2, 1, 1, 3));
  CHECK(r.inclusion_ok);
  CHECK(r.inclusion.size() == 3);
  CHECK(r.spanning.dim_w == 14);
  CHECK(r.spanning.dim_ideal == 9);
  CHECK(r.spanning.family_size == 5);
  CHECK(r.independence.rank == 5);
  CHECK(r.pinch);
  CHECK(r.degrees_consistent);
  CHECK(r.rank_bound_ok);
  CHECK(r.by_degree.size() == 3);
  CHECK(r.by_degree[0].family == 2);
  CHECK(r.by_degree[0].dim_ideal == 0);
}

TEST_CASE("degree one windows") {
  for (auto p : {Preset::Ut2Canonical, Preset::Ut3A, Preset::Ut3B}) {
    const auto r = verify_basis(config(p, 3, 2, 2, 1));
    CHECK(r.spanning.dim_ideal == 0);
    CHECK(r.spanning.family_size == 4);
    CHECK(r.pinch);
  }
}

TEST_CASE("all presets pinch over GF(2) and GF(3)") {
  for (auto p : {Preset::Ut2Canonical, Preset::Ut3A, Preset::Ut3B}) {
    for (unsigned q : {2u, 3u}) {
      CAPTURE(preset_name(p));
      CAPTURE(q);
      auto c = config(p, q, 1, 2, 3);
      c.check_inclusion = false;
      const auto r = verify_basis(c);
      CHECK(r.pinch);
      CHECK(r.spanning.dim_ideal == oracle::identity_kernel_dim(c.field, Grading::preset(p), 1, 2, 3));
    }
  }
}

TEST_CASE("evaluation rank of degenerate families") {
  const auto F = Field::of_order(3);
  const std::vector<Polynomial> polys{parse_polynomial("y1", F), parse_polynomial("2*y1", F)};
  const auto c = evaluation_rank(polys, Preset::Ut2Canonical, F, 1, 0, 1, 0);
  CHECK(c.rank == 1);
  CHECK_FALSE(c.independent);
  const std::vector<Polynomial> ids{parse_polynomial("z1z2", F), parse_polynomial("z1", F)};
  CHECK(evaluation_rank(ids, Preset::Ut2Canonical, F, 0, 2, 2, 0).rank == 1);
}

TEST_CASE("spanning detects a short family") {
  const auto F = Field::of_order(2);
  auto fam = enumerate_spanning_family(Preset::Ut2Canonical, F, 1, 1, 3);
  const auto comp = closure(IdealPresentation::of_preset(Preset::Ut2Canonical, F), Window(1, 1, 3));
  CHECK(verify_spanning(fam, comp).spans);
  fam.members.pop_back();
  const auto s = verify_spanning(fam, comp);
  CHECK_FALSE(s.spans);
  CHECK(s.stacked_rank == 13);
}

TEST_CASE("reports are deterministic") {
  auto c = config(Preset::Ut3B, 2, 1, 2, 3);
  const auto a = verify_basis(c), b = verify_basis(c);
  CHECK(report_to_text(a) == report_to_text(b));
  CHECK(report_to_json(a) == report_to_json(b));
  const auto j = nlohmann::json::parse(report_to_json(a));
  CHECK(j["schema"] == kReportSchema);
  CHECK(j.dump().find("seconds") == std::string::npos);
  c.record_timings = true;
  CHECK(report_to_json(verify_basis(c)).find("seconds") != std::string::npos);
}

}
