#include <gtest/gtest.h>

#include "ais/analogy/grid.hpp"
#include "ais/backend/http_backend.hpp"
#include "ais/backend/mock_backend.hpp"
#include "ais/backend/mock_server.hpp"
#include "ais/common/error.hpp"
#include "ais/orchestrator/scenes.hpp"

using namespace ais::backend;
using namespace std::chrono_literals;

namespace {

RetryPolicy fast() {
  RetryPolicy p;
  p.base_delay = 5ms;
  p.timeout = 10s;
  return p;
}

TrainJob small_train() {
  const auto img = ais::orchestrator::synthetic_scene("disk", 128).image;
  return {{{img, "p0"}, {img, "p1"}}, AdapterKind::avat, {}};
}

InpaintJob small_inpaint(const std::string& id) {
  const auto s = [](const char* n) { return ais::orchestrator::synthetic_scene(n, 64).image; };
  InpaintJob job;
  job.grid = ais::analogy::compose_grid(s("square"), s("disk"), s("ring"), std::nullopt, 64);
  job.mask = ais::analogy::inference_mask(job.grid);
  job.prompt = "p";
  job.adapter_id = id;
  job.seed = 11;
  job.samples = 2;
  job.job_id = "t/stage2";
  return job;
}

}  // namespace

class HttpRoundTrip : public ::testing::Test {
 protected:
  void SetUp() override { server.start(); }
  void TearDown() override { server.stop(); }

  MockBackend mock{{{}, MockTransform::parse("invert"), {}, {}}};
  BackendServer server{mock};
};

TEST_F(HttpRoundTrip, HealthTrainInpaintMatchInProcess) {
  HttpBackend http(server.url(), fast());
  const Health h = require_compatible(http);
  EXPECT_TRUE(h.ok);
  EXPECT_EQ(h.version, "1");

  const AdapterRef remote = http.submit_train(small_train());
  const AdapterRef local = mock.submit_train(small_train());
  EXPECT_EQ(remote.id, local.id);
  EXPECT_EQ(http.get_adapter(remote.id).status, AdapterStatus::ready);

  const auto via_http = inpaint_checked(http, small_inpaint(remote.id));
  const auto direct = mock.submit_inpaint(small_inpaint(remote.id));
  EXPECT_EQ(via_http.images, direct.images);
  EXPECT_EQ(via_http.seed, 11u);
  EXPECT_EQ(via_http.job_id, "t/stage2");
}

TEST_F(HttpRoundTrip, AdapterIdsArePercentEncoded) {
  mock.register_adapter("odd id/with slash", AdapterKind::svat, {});
  HttpBackend http(server.url(), fast());
  EXPECT_EQ(http.get_adapter("odd id/with slash").kind, AdapterKind::svat);
}

TEST_F(HttpRoundTrip, TransientFailuresAreRetried) {
  HttpBackend http(server.url(), fast());
  server.fail_next(2);
  EXPECT_NO_THROW(http.health());
  server.fail_next(5);
  EXPECT_THROW(http.health(), ais::TransportError);
}

TEST_F(HttpRoundTrip, ClientErrorsArePermanentAndNotRetried) {
  HttpBackend http(server.url(), fast());
  const int before = server.requests_served();
  try {
    http.get_adapter("missing");
    FAIL();
  } catch (const ais::PermanentError& e) {
    EXPECT_NE(std::string(e.what()).find("unknown adapter"), std::string::npos) << e.what();
  }
  EXPECT_EQ(server.requests_served() - before, 1);
  EXPECT_THROW(http.submit_train(TrainJob{}), ais::PermanentError);
}

TEST(Http, UnreachableServerIsTransport) {
  BackendServer probe(*new MockBackend());  // leaked on purpose: outlives the server
  const int port = probe.start();
  probe.stop();
  HttpBackend http("http://127.0.0.1:" + std::to_string(port), fast());
  EXPECT_THROW(http.health(), ais::TransportError);
  EXPECT_THROW(require_compatible(http), ais::TransportError);
}

TEST(Http, RejectsBadUrls) {
  EXPECT_THROW(HttpBackend("ftp://x"), ais::InvalidInput);
  EXPECT_THROW(HttpBackend(""), ais::InvalidInput);
}
