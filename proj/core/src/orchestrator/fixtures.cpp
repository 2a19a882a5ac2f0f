#include "ais/orchestrator/fixtures.hpp"

#include <nlohmann/json.hpp>

#include "ais/analogy/grid.hpp"
#include "ais/analogy/prompt.hpp"
#include "ais/backend/codec.hpp"
#include "ais/backend/mock_backend.hpp"
#include "ais/common/files.hpp"
#include "ais/orchestrator/scenes.hpp"

namespace ais::orchestrator {

namespace fs = std::filesystem;
using nlohmann::json;

std::vector<fs::path> write_protocol_fixtures(const fs::path& dir) {
  namespace wire = backend::wire;
  constexpr int kPanel = analogy::kMinPanelSize;
  fs::create_directories(dir);
  std::vector<fs::path> files;
  auto put = [&](const std::string& name, const json& doc) {
    write_atomic(dir / name, doc.dump(2) + "\n");
    files.push_back(dir / name);
  };

  backend::MockBackend mock({backend::MockTransform::parse("identity"),
                             backend::MockTransform::parse("invert"),
                             backend::MockTransform::parse("identity"),
                             std::nullopt});
  const auto scenes = synthetic_scenes(kPanel);
  const std::string prompt = analogy::render_prompt("fixturestyle");

  put("health_response.json", json::parse(wire::encode_health(mock.health())));

  backend::TrainJob train;
  train.kind = backend::AdapterKind::svat;
  train.samples.push_back(
      {analogy::compose_grid(scenes[0].image, scenes[1].image, scenes[2].image, scenes[3].image, kPanel)
           .canvas,
       prompt});
  json train_req = json::parse(wire::encode_train_request(train));
  train_req.erase("rank");
  train_req.erase("steps");
  put("train_request.json", train_req);
  const backend::AdapterRef adapter = mock.submit_train(wire::decode_train_request(train_req.dump()));
  put("train_response.json", json::parse(wire::encode_adapter(adapter)));
  put("adapter_response.json", json::parse(wire::encode_adapter(mock.get_adapter(adapter.id))));

  backend::InpaintJob job;
  job.grid = analogy::compose_grid(scenes[4].image, scenes[5].image, scenes[7].image, std::nullopt,
                                   kPanel);
  job.mask = analogy::inference_mask(job.grid);
  job.prompt = prompt;
  job.adapter_id = adapter.id;
  job.seed = 7;
  job.samples = 1;
  job.job_id = "fixture-inpaint";
  put("inpaint_request.json", json::parse(wire::encode_inpaint_request(job)));
  put("inpaint_response.json",
      json::parse(wire::encode_inpaint_response(backend::inpaint_checked(mock, job), adapter.id)));
  put("error_response.json", json::parse(wire::encode_error("unknown adapter 'missing'")));
  return files;
}

}  // namespace ais::orchestrator
